#pragma once

#include <string>
#include <vector>

namespace universo {

/// x^x / (x-1)^(x-1), evaluated in log space. Monotone increasing for x > 1.
/// Throws domain_error for x <= 1.
double entropic_f(double x);

struct GrowthBound {
    double g = 0;
    double c = 0;
    std::string family_name;
};

/// Solves f(c) = g by bisection on (1, g] to |f(c) - g| <= 1e-9.
/// Requires g > e/2.
GrowthBound solve_growth_bound(double g, std::string family_name = {});

struct CliqueUnionBound {
    long long exact = 0;    // sum over i of floor(n/i)
    double analytic = 0;    // (n+1) ln(k+1) - k, always <= exact
};

CliqueUnionBound clique_union_lower_bound(int n, int k);

struct ConflictBound {
    double c = 0;
    int k = 0;
    int s = 0;            // ceil(c*k) - 1
    long long t_min = 0;  // 1 + lower bound on A(s, 2k-2, k)
    std::string source;   // where the A value came from
};

/// Minimum size of a conflicting family against a c*n lower bound for
/// k-chromatic members: 1 + A(ceil(ck)-1, 2k-2, k), using the embedded table
/// when it has the key, otherwise the constructive lower bound.
ConflictBound conflicting_family_size(double c, int k);

struct TableRow {
    std::string family;
    double g = 0;
    double expected_c = 0;
    double computed_c = 0;
    bool c_ok = false;
    // conflict columns; k == 0 for rows that only appear in the growth table
    int k = 0;
    int s = 0;
    long long expected_t = 0;
    long long computed_t = 0;
    bool t_ok = false;
};

struct TableReport {
    std::vector<TableRow> rows;
    bool all_ok = true;
};

/// Recomputes both embedded tables: every c from its g (tolerance 1e-3) and
/// every conflicting-family size from (c, k) (exact).
TableReport reproduce_tables();

} // namespace universo
