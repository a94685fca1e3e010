#ifndef TOTBOND_ERRORS_HPP
#define TOTBOND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace totbond {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument to a constructor, generator or formula (out of hypothesis).
class BadParam : public Error {
public:
    explicit BadParam(const std::string& msg) : Error("BadParam: " + msg) {}
};

// Malformed edge-list input.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("ParseError: line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Edge endpoint outside [0, n).
class InvalidVertexIndex : public Error {
public:
    InvalidVertexIndex(int line, int vertex)
        : Error("InvalidVertexIndex: line " + std::to_string(line) + ": vertex " +
                std::to_string(vertex) + " out of range"),
          line_(line), vertex_(vertex) {}
    int line() const { return line_; }
    int vertex() const { return vertex_; }

private:
    int line_;
    int vertex_;
};

// Referenced edge is not present in the graph.
class MissingEdge : public Error {
public:
    MissingEdge(int u, int v)
        : Error("MissingEdge: (" + std::to_string(u) + ", " + std::to_string(v) + ")") {}
};

// Operation requires a graph with minimum degree >= 1.
class IsolatedVertex : public Error {
public:
    explicit IsolatedVertex(int v)
        : Error("IsolatedVertex: vertex " + std::to_string(v) + " has degree 0"), vertex_(v) {}
    int vertex() const { return vertex_; }

private:
    int vertex_;
};

// Argument to is_minimal_td_set was not a total dominating set.
class NotATDSet : public Error {
public:
    NotATDSet() : Error("NotATDSet: set does not totally dominate the graph") {}
};

// Exhaustive search would exceed the configured budget; refuse, never approximate.
class ExceedsSearchBudget : public Error {
public:
    explicit ExceedsSearchBudget(const std::string& msg) : Error("ExceedsSearchBudget: " + msg) {}
};

} // namespace totbond

#endif
