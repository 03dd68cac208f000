#ifndef NETWIDTH_METRICS_HPP
#define NETWIDTH_METRICS_HPP

#include <span>
#include <vector>

namespace netwidth {

/// Three per-epoch MSE curves of common length (train/validation/test).
struct CurveTriple {
    std::vector<double> g1;
    std::vector<double> g2;
    std::vector<double> g3;
};

/// (1/100) * sum_i (|g1-g2| + |g1-g3| + |g2-g3|), each unordered pair counted
/// once. Zero iff the three curves are pointwise equal; invariant under every
/// permutation of the curves (bit-exact: the three gaps are sorted before
/// summation so regrouping cannot change the result).
double dissimilarity(const CurveTriple& curves);

/// Unnormalized squared-error sum over paired sequences.
double mse_sum(std::span<const double> h, std::span<const double> t);

/// mse_sum / r — the conventional per-sample mean used in reports.
double mse_mean(std::span<const double> h, std::span<const double> t);

/// mse_sum / (2r) — the trainer's objective.
double halved_objective(std::span<const double> h, std::span<const double> t);

} // namespace netwidth

#endif
