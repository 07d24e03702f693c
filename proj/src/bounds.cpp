#include "universo/bounds.hpp"
#include "universo/design.hpp"
#include "universo/errors.hpp"

#include <cassert>
#include <cmath>

namespace universo {

double entropic_f(double x) {
    if (!(x > 1.0))
        throw domain_error("entropic_f: defined for x > 1");
    return std::exp(x * std::log(x) - (x - 1.0) * std::log(x - 1.0));
}

GrowthBound solve_growth_bound(double g, std::string family_name) {
    const double e = std::exp(1.0);
    if (!(g > e / 2.0))
        throw domain_error("solve_growth_bound: requires g > e/2");

    double lo = 1.0 + 1e-12, hi = g;
    // f(1+) -> 1 < g and f(g) > g, so the root is bracketed
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (entropic_f(mid) < g)
            lo = mid;
        else
            hi = mid;
        if (std::abs(entropic_f(0.5 * (lo + hi)) - g) <= 1e-9 && hi - lo <= 1e-12)
            break;
    }
    double c = 0.5 * (lo + hi);
    assert(std::abs(entropic_f(c) - g) <= 1e-9);
    assert(c >= g / e + 0.5 - 1e-9);
    assert(entropic_f(c) <= e * c - e / 2.0 + 1e-9);
    return GrowthBound{g, c, std::move(family_name)};
}

CliqueUnionBound clique_union_lower_bound(int n, int k) {
    if (k < 1 || k > n)
        throw parameter_error("clique_union_lower_bound: need 1 <= k <= n");
    CliqueUnionBound out;
    for (int i = 1; i <= k; ++i)
        out.exact += n / i;
    out.analytic = (n + 1) * std::log(static_cast<double>(k) + 1.0) - k;
    assert(static_cast<double>(out.exact) >= out.analytic - 1e-9);
    return out;
}

ConflictBound conflicting_family_size(double c, int k) {
    if (!(c > 1.0) || k < 2)
        throw parameter_error("conflicting_family_size: need c > 1, k >= 2");
    ConflictBound out;
    out.c = c;
    out.k = k;
    out.s = static_cast<int>(std::ceil(c * k)) - 1;
    if (auto lk = lookup_A(out.s, k)) {
        out.t_min = 1 + lk->first;
        out.source = "lookup";
    } else {
        LowerBoundA lb = lower_bound_A(out.s, k);
        out.t_min = 1 + lb.bound;
        out.source = lb.source;
    }
    return out;
}

TableReport reproduce_tables() {
    struct Row {
        const char* family;
        double g;
        double c;
        int k;          // 0: growth-table-only row
        long long t;
    };
    // growth constants are literature inputs; c and t columns are recomputed
    static const Row rows[] = {
        {"caterpillar forests", 2.0, 1.293, 0, 0},
        {"forests", 2.9557, 1.626, 2, 4},
        {"outer-planar", 7.5036, 3.275, 3, 13},
        {"series-parallel", 9.0733, 3.850, 3, 17},
        {"K5--minor-free", 15.65, 6.264, 4, 51},
        {"planar", 27.2268, 10.520, 4, 137},
        {"bounded genus", 27.2268, 10.520, 0, 0},
        {"K3,3-minor-free", 27.2293, 10.521, 5, 124},
    };

    TableReport rep;
    for (const Row& r : rows) {
        TableRow out;
        out.family = r.family;
        out.g = r.g;
        out.expected_c = r.c;
        GrowthBound gb = solve_growth_bound(r.g, r.family);
        out.computed_c = gb.c;
        out.c_ok = std::abs(gb.c - r.c) <= 1e-3;
        if (r.k != 0) {
            ConflictBound cb = conflicting_family_size(gb.c, r.k);
            out.k = r.k;
            out.s = cb.s;
            out.expected_t = r.t;
            out.computed_t = cb.t_min;
            out.t_ok = cb.t_min == r.t;
        } else {
            out.t_ok = true;
        }
        rep.all_ok = rep.all_ok && out.c_ok && out.t_ok;
        rep.rows.push_back(std::move(out));
    }
    return rep;
}

} // namespace universo
