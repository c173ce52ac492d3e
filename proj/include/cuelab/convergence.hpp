#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cuelab/exact_functionals.hpp"
#include "cuelab/limit_constants.hpp"
#include "cuelab/rational.hpp"

namespace cuelab {

struct ConvergenceRow {
    long N;
    Rat exact;
    double rescaled;
};

/// Exact finite-N value of the functional described by the spec, at matrix size N.
inline Rat finite_n_value(const LimitFunctionalSpec& spec, long N) {
    switch (spec.kind) {
        case LimitKind::KS: return Rat(ks_moment(N, spec.k));
        case LimitKind::SC: {
            Rat mN = spec.rho * N;
            if (denominator(mN) != 1) throw std::invalid_argument("finite_n_value: rho*N must be an integer on the SC grid");
            return Rat(secular_moment(N, static_cast<long>(numerator(mN)), spec.k));
        }
        case LimitKind::KR3G: {
            Rat mN = spec.c * N;
            long m = static_cast<long>(numerator(mN) / denominator(mN)); // floor for positive values
            return Rat(kr3g_moment(N, m, spec.k));
        }
        case LimitKind::MOM: return Rat(mom_moment(N, spec.k, spec.beta));
        default: throw std::invalid_argument("finite_n_value: no exact finite-N route for this kind");
    }
}

/// Rescaled values v_N = exact(N) / N^order with the shared exponent table.
inline std::vector<ConvergenceRow> convergence_table(const LimitFunctionalSpec& spec, const std::vector<long>& Ns) {
    long order = order_exponent(spec);
    std::vector<ConvergenceRow> rows;
    for (long N : Ns) {
        Rat v = finite_n_value(spec, N);
        Rat resc = v / pow_rat(Rat(N), order);
        rows.push_back({N, v, to_double(resc)});
    }
    return rows;
}

struct RichardsonResult {
    double value;
    double spread;
    std::vector<double> extrapolants;
};

/// First-order Richardson: 2 v_{2N} - v_N over every (N, 2N) couple present.
inline RichardsonResult richardson(const std::vector<std::pair<long, double>>& pairs) {
    std::vector<double> ex;
    for (const auto& [N, v] : pairs)
        for (const auto& [N2, v2] : pairs)
            if (N2 == 2 * N) ex.push_back(2.0 * v2 - v);
    if (ex.empty()) throw std::invalid_argument("richardson: need at least one (N, 2N) couple");
    double lo = ex[0], hi = ex[0];
    for (double e : ex) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return {ex.back(), hi - lo, ex};
}

} // namespace cuelab
