#ifndef TOTBOND_FORMULAS_HPP
#define TOTBOND_FORMULAS_HPP

#include <string>
#include <utility>
#include <vector>

namespace totbond {

// Closed-form values for the supported graph classes. Every evaluator
// hard-fails (BadParam) outside its hypothesis so a sweep can never confuse
// "formula wrong" with "formula misapplied".

enum class Kind { Exact, UpperBound };

struct FormulaResult {
    long long value = 0;
    Kind kind = Kind::Exact;
    std::string source; // result tag, e.g. "thm3.13"
    bool hypothesis_ok = true;
};

// n/2 when n % 4 == 0, n/2 + 1 when n % 4 == 2, (n+1)/2 otherwise.
int gamma_t_path(int n);  // n >= 2
int gamma_t_cycle(int n); // n >= 3

int gamma_t_wheel(int n);                        // n >= 3 -> 2
int gamma_t_complete(int n);                     // n >= 2 -> 2
int gamma_t_complete_bipartite(int a, int b);    // 2 <= a <= b -> 2

// Sum of gamma_t_path over the parts (disjoint union of paths).
int path_union_gamma(const std::vector<int>& parts); // each part >= 2

// B_t^k for paths. k = 1 requires n >= 4. For k >= 2 the closed form holds
// iff n >= 2k+2, or n = 2k with k even; smaller n admit no valid deletion
// set (shattering P_n cannot reach the increase), so those are rejected.
int bondage_k_path(int n, int k);
// Same hypotheses; always one more than the path value.
int bondage_k_cycle(int n, int k);

// B_t^1(W_n) = 2 for n >= 5.
int bondage_1_wheel(int n);
// B_t^j(W_n) = j+1 for j >= 1 and n >= 3(j+1).
int bondage_wheel(int n, int j);
// Largest achievable increase for W_n and the deletions it costs:
// odd n -> (n-1, 2n-(n+1)/2), even n -> (n-2, 2n-(n+4)/2). n >= 3.
std::pair<int, int> wheel_max_increase(int n);

// B_t^k(K_n): nk - (k^2+2k)/2 for even k <= n-2, nk + n - (k^2+4k+5)/2 for
// odd k <= n-4. Requires n >= 5 (n >= 4 suffices for k = 2). The odd branch
// needs k <= n-4, not n-3: its construction strands k+2 vertices of which
// n-k+1 must form a component with gamma_t = 3, impossible below 5 vertices.
// At odd k = n-3 the true value is the even formula at k+1 (perfect matching),
// e.g. B_t^3(K_6) = 12, not 11.
long long bondage_k_complete(int n, int k);
// B_t^k(G) <= B_t^k(K_n) for every G on n >= 5 vertices where the left side
// exists; k capped at n-2 (even n) / n-3 (odd n). For odd k = n-3 (even n)
// the bound is the even formula at k+1, which is B_t^{k+1}(K_n) >= B_t^k(K_n)
// and is tight for K_n itself.
FormulaResult complete_upper_bound_any(int n, int k);

// Edge-count ceiling C(n-x+1, 2) + floor(x/2) for 2 <= x <= n; nonincreasing
// in x. sanchis_max_edges in bondage.hpp adds the gamma >= 5 guard.
long long sanchis_f(int n, int x);

int bondage_1_bipartite(int a, int b); // 2 <= a <= b -> a
int bondage_2_bipartite(int a, int b); // 2 <= a <= b <= 2a -> b
// B_t^k(K_{a,b}) <= ka for k < a <= b.
FormulaResult bipartite_bound_A(int a, int b, int k);
// B_t^k(K_{a,b}) <= ceil(k/2) * (a + b - ceil(k/2) - 1) for ceil(k/2)+1 <= a <= b.
FormulaResult bipartite_bound_B(int a, int b, int k);
// Exact value when known (k = 1; k = 2 with b <= 2a), otherwise the smaller
// applicable upper bound, reporting which one won.
FormulaResult best_known_bipartite_bound(int a, int b, int k);

} // namespace totbond

#endif
