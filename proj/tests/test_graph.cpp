#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "totbond/bitset.hpp"
#include "totbond/errors.hpp"
#include "totbond/graph.hpp"

using namespace totbond;

TEST_CASE("bitset basics") {
    Bitset b(130);
    CHECK(b.none());
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.test(64));
    CHECK_FALSE(b.test(63));
    CHECK(b.first_set() == 0);
    b.reset(0);
    CHECK(b.first_set() == 64);
    CHECK(b.to_vector() == std::vector<int>{64, 129});

    Bitset c(130);
    c.set(64);
    CHECK(b.contains_all(c));
    CHECK_FALSE(c.contains_all(b));
    CHECK(b.intersects(c));
    c.set(10);
    b.subtract(c);
    CHECK(b.to_vector() == std::vector<int>{129});

    auto f = Bitset::full(130);
    CHECK(f.count() == 130);
    int sum = 0;
    f.for_each_set([&](int v) { sum += v; });
    CHECK(sum == 130 * 129 / 2);
}

TEST_CASE("edge normalization and duplicates") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK_THROWS_AS(make_edge(2, 2), BadParam);
    auto es = EdgeSet::from_pairs({{2, 0}, {0, 1}});
    CHECK(es.size() == 2);
    CHECK(es.contains(0, 2));
    CHECK(es.pairs() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK_THROWS_AS(EdgeSet::from_pairs({{0, 1}, {1, 0}}), BadParam);
}

TEST_CASE("graph accessors") {
    auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.total_degree() == 6);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_FALSE(g.has_isolated_vertex());
    CHECK(g.neighbors(1).to_vector() == std::vector<int>{0, 2});
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), BadParam);

    CHECK(Graph::from_edges(3, {{0, 1}}).has_isolated_vertex());
}

TEST_CASE("edge removal and pendant detection") {
    auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_pendant_edge(g, {0, 1}));
    CHECK_FALSE(is_pendant_edge(g, {1, 2}));
    auto h = remove_edges(g, EdgeSet::from_pairs({{1, 2}}));
    CHECK(h.edge_count() == 2);
    CHECK_FALSE(h.has_edge(1, 2));
    CHECK_THROWS_AS(remove_edges(g, EdgeSet::from_pairs({{0, 3}})), MissingEdge);
}

TEST_CASE("component split keeps local structure") {
    // two paths: 0-1-2 and 3-4
    auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(comps[0].graph.edge_count() == 2);
    CHECK(comps[1].vertices == std::vector<int>{3, 4});
    CHECK(comps[1].graph.has_edge(0, 1));

    // reindexing is order-preserving, not just size-preserving
    auto g2 = Graph::from_edges(6, {{0, 5}, {5, 2}, {1, 3}});
    auto c2 = components(g2);
    REQUIRE(c2.size() == 3);
    CHECK(c2[0].vertices == std::vector<int>{0, 2, 5});
    CHECK(c2[0].graph.has_edge(0, 2));
    CHECK(c2[0].graph.has_edge(1, 2));
    CHECK_FALSE(c2[0].graph.has_edge(0, 1));
    CHECK(c2[2].vertices == std::vector<int>{4});
}

TEST_CASE("edge list parsing") {
    auto g = parse_edge_list("# comment\n4\n0 1\n1 2\n2 3\n");
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);

    // blank lines and inline comments
    auto g2 = parse_edge_list("3\n\n0 1  # first\n1 2\n");
    CHECK(g2.edge_count() == 2);

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), InvalidVertexIndex);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), ParseError);

    try {
        parse_edge_list("4\n0 1\n\n# gap\n0 9\n");
        FAIL("expected InvalidVertexIndex");
    } catch (const InvalidVertexIndex& e) {
        CHECK(std::string(e.what()).find("line 5") != std::string::npos);
        CHECK(std::string(e.what()).find("9") != std::string::npos);
    }
}

TEST_CASE("serialization round trip") {
    auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto text = serialize_edge_list(g);
    auto h = parse_edge_list(text);
    CHECK(h.n() == g.n());
    CHECK(h.edges() == g.edges());
}
