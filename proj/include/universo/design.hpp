#pragma once

#include <optional>
#include <string>
#include <vector>

namespace universo {

/// Family of k-subsets (blocks) of the ground set [s], pairwise sharing at
/// most one point; equivalently edge-disjoint K_k's packed into K_s.
struct CliquePacking {
    int s = 0;
    int k = 0;
    std::vector<std::vector<int>> blocks; // each sorted ascending

    static CliquePacking of(int s, int k, std::vector<std::vector<int>> blocks);
    /// Same blocks on a larger ground set.
    CliquePacking regrounded(int new_s) const;
};

/// Counting bound floor(n/k * floor((n-1)/(k-1))) on the number of blocks.
long long packing_counting_bound(int n, int k);

/// All invariants: block shape, range, pairwise intersection <= 1,
/// block count within the counting bound.
bool validate_packing(const CliquePacking& p);

/// Group construction on s*k points u_{i,j} = i*s + j: the s^2 cross-group
/// blocks pick j = p + i*q (mod s) in group i, then k translated copies of
/// the optional inner packing land inside the groups.
/// Requires s prime and 2 <= k <= s.
CliquePacking construct_design_prime(int s, int k,
                                     const std::optional<CliquePacking>& inner = std::nullopt);

struct ExactPacking {
    long long count = 0;
    CliquePacking witness;
};

/// Exact maximum packing via branch and bound (cover-or-forbid branching on
/// the least available pair, edge/degree upper bounds, first block forced
/// through the pair (0,1)). Feasible range: k=2 any n <= 2000, k=3 n <= 10,
/// k=4 n <= 9; beyond that a parameter_error reports the search size.
ExactPacking brute_force_A(int n, int k);

/// Greedy first-fit: repeatedly add the lexicographically least block that
/// is still edge-disjoint from the packing.
CliquePacking greedy_packing(int n, int k);

/// Interval of known values of A(n, 2k-2, k) for the embedded table keys.
std::optional<std::pair<long long, long long>> lookup_A(int n, int k);

/// Largest prime strictly inside (lo, hi), by trial division.
std::optional<long long> next_prime_in(long long lo, long long hi);
bool is_prime(long long v);

struct LowerBoundA {
    long long bound = 0;
    std::optional<CliquePacking> witness; // best constructive packing found
    std::string source;                   // exact-k2 | prime-lemma | lookup | brute-force | greedy
};

/// Best available lower bound on A(n, 2k-2, k). k=2 is exact (all pairs).
/// When 15k^2 <= 14(n+1) and n >= 30k, uses the largest prime s in
/// (14i, 15i), i = floor(n/(15k)), giving s^2 blocks on s*k <= n points;
/// otherwise the best of the lookup table, brute force (when feasible) and
/// the greedy packing. The witness may certify less than `bound` when the
/// bound comes from the lookup table.
LowerBoundA lower_bound_A(int n, int k);

} // namespace universo
