#include "totbond/formulas.hpp"

#include <algorithm>

#include "totbond/errors.hpp"

namespace totbond {

namespace {

int path_or_cycle_gamma(int n) {
    if (n % 4 == 0) return n / 2;
    if (n % 4 == 2) return n / 2 + 1;
    return (n + 1) / 2;
}

// Hypothesis under which the k >= 2 path/cycle branch formulas are exact.
bool path_cycle_k_applicable(int n, int k) {
    return n >= 2 * k + 2 || (n == 2 * k && k % 2 == 0);
}

int path_branch_value(int n, int k) {
    switch (n % 4) {
    case 0: return 2 * ((k - 1) / 2) + 1;
    case 2: return 2 * ((k - 1) / 2) + 2;
    default: return k;
    }
}

} // namespace

int gamma_t_path(int n) {
    if (n < 2) throw BadParam("gamma_t of a path needs n >= 2");
    return path_or_cycle_gamma(n);
}

int gamma_t_cycle(int n) {
    if (n < 3) throw BadParam("gamma_t of a cycle needs n >= 3");
    return path_or_cycle_gamma(n);
}

int gamma_t_wheel(int n) {
    if (n < 3) throw BadParam("gamma_t of a wheel needs rim n >= 3");
    return 2;
}

int gamma_t_complete(int n) {
    if (n < 2) throw BadParam("gamma_t of a complete graph needs n >= 2");
    return 2;
}

int gamma_t_complete_bipartite(int a, int b) {
    if (a < 2 || b < a) throw BadParam("gamma_t of K_{a,b} needs 2 <= a <= b");
    return 2;
}

int path_union_gamma(const std::vector<int>& parts) {
    if (parts.empty()) throw BadParam("path union needs at least one part");
    int total = 0;
    for (int p : parts) total += gamma_t_path(p);
    return total;
}

int bondage_k_path(int n, int k) {
    if (k < 1) throw BadParam("k must be at least 1");
    if (k == 1) {
        if (n < 4) throw BadParam("B_t^1 of a path needs n >= 4");
    } else if (!path_cycle_k_applicable(n, k)) {
        throw BadParam("path formula for k = " + std::to_string(k) +
                       " needs n >= " + std::to_string(2 * k + 2) +
                       " (or n = 2k with k even)");
    }
    return path_branch_value(n, k);
}

int bondage_k_cycle(int n, int k) {
    if (k < 1) throw BadParam("k must be at least 1");
    if (k == 1) {
        if (n < 4) throw BadParam("B_t^1 of a cycle needs n >= 4");
    } else if (!path_cycle_k_applicable(n, k)) {
        throw BadParam("cycle formula for k = " + std::to_string(k) +
                       " needs n >= " + std::to_string(2 * k + 2) +
                       " (or n = 2k with k even)");
    }
    return path_branch_value(n, k) + 1;
}

int bondage_1_wheel(int n) {
    if (n < 5) throw BadParam("B_t^1 of a wheel needs rim n >= 5");
    return 2;
}

int bondage_wheel(int n, int j) {
    if (j < 1) throw BadParam("j must be at least 1");
    if (n < 3 * (j + 1))
        throw BadParam("wheel formula for j = " + std::to_string(j) + " needs rim n >= " +
                       std::to_string(3 * (j + 1)));
    return j + 1;
}

std::pair<int, int> wheel_max_increase(int n) {
    if (n < 3) throw BadParam("wheel needs rim n >= 3");
    if (n % 2 == 1) return {n - 1, 2 * n - (n + 1) / 2};
    return {n - 2, 2 * n - (n + 4) / 2};
}

long long bondage_k_complete(int n, int k) {
    if (k < 1) throw BadParam("k must be at least 1");
    if (n < 5 && !(n == 4 && k == 2))
        throw BadParam("complete graph formula needs n >= 5 (or n = 4 with k = 2)");
    long long nn = n, kk = k;
    if (k % 2 == 0) {
        if (k > n - 2)
            throw BadParam("even k must satisfy k <= n-2");
        return nn * kk - (kk * kk + 2 * kk) / 2;
    }
    // k = n-3 is excluded: the stranded n-k+1 vertices would need gamma_t = 3
    // on fewer than 5 vertices. There the answer is the even branch at k+1.
    if (k > n - 4)
        throw BadParam("odd k must satisfy k <= n-4");
    return nn * kk + nn - (kk * kk + 4 * kk + 5) / 2;
}

FormulaResult complete_upper_bound_any(int n, int k) {
    if (n < 5) throw BadParam("universal upper bound needs n >= 5");
    int kmax = n % 2 == 0 ? n - 2 : n - 3;
    if (k < 1 || k > kmax)
        throw BadParam("universal upper bound needs 1 <= k <= " + std::to_string(kmax) +
                       " for n = " + std::to_string(n));
    // Odd k = n-3 (even n only): B_t^k <= B_t^{k+1}, and k+1 = n-2 is in the
    // even branch. Tight for K_n, where gamma_t jumps past k+2 anyway.
    if (k % 2 == 1 && k == n - 3) return {bondage_k_complete(n, k + 1), Kind::UpperBound,
                                          "cor3.12", true};
    return {bondage_k_complete(n, k), Kind::UpperBound, "cor3.12", true};
}

long long sanchis_f(int n, int x) {
    if (x < 2 || x > n) throw BadParam("edge-count function needs 2 <= x <= n");
    long long a = n - x + 1;
    return a * (a - 1) / 2 + x / 2;
}

int bondage_1_bipartite(int a, int b) {
    if (a < 2 || b < a) throw BadParam("B_t^1 of K_{a,b} needs 2 <= a <= b");
    return a;
}

int bondage_2_bipartite(int a, int b) {
    if (a < 2 || b < a || b > 2 * a)
        throw BadParam("B_t^2 of K_{a,b} needs 2 <= a <= b <= 2a");
    return b;
}

FormulaResult bipartite_bound_A(int a, int b, int k) {
    if (k < 1) throw BadParam("k must be at least 1");
    if (!(k < a && a <= b)) throw BadParam("bound needs k < a <= b");
    return {(long long)k * a, Kind::UpperBound, "thm3.14", true};
}

FormulaResult bipartite_bound_B(int a, int b, int k) {
    if (k < 1) throw BadParam("k must be at least 1");
    long long h = (k + 1) / 2;
    if (!(h + 1 <= a && a <= b)) throw BadParam("bound needs ceil(k/2)+1 <= a <= b");
    return {h * (a + b - h - 1), Kind::UpperBound, "thm3.15", true};
}

FormulaResult best_known_bipartite_bound(int a, int b, int k) {
    if (a < 2 || b < a) throw BadParam("needs 2 <= a <= b");
    if (k == 1) return {bondage_1_bipartite(a, b), Kind::Exact, "thm3.13", true};
    if (k == 2 && b <= 2 * a) return {bondage_2_bipartite(a, b), Kind::Exact, "thm3.16", true};

    bool okA = k < a;
    bool okB = (k + 1) / 2 + 1 <= a;
    if (!okA && !okB)
        throw BadParam("no applicable bound for K_{" + std::to_string(a) + "," +
                       std::to_string(b) + "} with k = " + std::to_string(k));
    if (okA && okB) {
        FormulaResult A = bipartite_bound_A(a, b, k);
        FormulaResult B = bipartite_bound_B(a, b, k);
        return B.value < A.value ? B : A;
    }
    return okA ? bipartite_bound_A(a, b, k) : bipartite_bound_B(a, b, k);
}

} // namespace totbond
