#ifndef NETWIDTH_BOUNDS_HPP
#define NETWIDTH_BOUNDS_HPP

#include <optional>
#include <utility>
#include <vector>

namespace netwidth {

/// Shape of a single-hidden-layer network: n input attributes, m hidden nodes.
struct NetworkShape {
    int n = 1;
    int m = 1;
};

/// Parameter and unit counts of a shape.
struct CapacityCounts {
    long long w_total = 0; // weights + thresholds: n*m + 2m + 1
    long long c_units = 0; // computational units: m + 1
};

/// The computed width bracket for a given (n, r).
///
/// lower_real/upper_real are the real-valued bounds; lo/hi the usable integer
/// range (lo = max(1, ceil(lower_real)), hi = floor(upper_real)). The bracket
/// is empty when hi < lo; k1 (and hence upper_real and hi) can be negative for
/// large n, in which case the real value is kept and `empty` is set.
struct WidthBounds {
    int n = 0;
    long long r = 0;
    double beta = 0.0;       // positive root of the sample-complexity quadratic
    double gamma = 0.0;      // chosen gamma (> beta, > 1)
    double lower_real = 0.0; // l_m
    double k1 = 0.0;         // 16r/(n(n-8)) - 1
    double k2 = 0.0;         // 2^(n/2-2) - 1
    double upper_real = 0.0; // min(k1, k2)
    int lo = 0;
    int hi = 0;
    bool empty = false;
};

long long total_weights(NetworkShape shape);
long long computational_units(NetworkShape shape);
CapacityCounts capacity_counts(NetworkShape shape);

/// Q(m) = (n+2)m^2 + (n+3)m + 1, evaluated at real m.
double q_poly(int n, double m);

/// VC dimension lower bound (n*C_p/8)*log2(C_p/4). May be <= 0 for C_p < 5.
double vc_lower_bound(NetworkShape shape);

/// VC dimension upper bound (W_T*C_p)^2 + 11*W_T*C_p*log2(18*W_T*C_p^2).
double vc_upper_bound(NetworkShape shape);

/// (lower, upper) pair; lower <= upper for all valid shapes.
std::pair<double, double> vc_bracket(NetworkShape shape);

/// Positive root of 199*Q^2 + 11*(n/2-2)*Q - r = 0. Requires n > 4, r > 0.
double beta_root(int n, long long r);

/// Real lower width bound l_m: root of (n+2)m^2 + (n+3)m + 1 - gamma = 0 with
/// gamma = max(beta, 1 + 1e-9). Requires n > 4, r > 0.
double lower_width_bound(int n, long long r);

/// Sample-driven upper bound 16r/(n(n-8)) - 1. Requires n > 8, r > 0.
double k1_bound(int n, long long r);

/// Dimension-driven upper bound 2^(n/2-2) - 1. Requires n > 8.
double k2_bound(int n);

/// min(k1, k2). Requires n > 8, r > 0.
double upper_width_bound(int n, long long r);

/// Full bracket for (n, r). Requires n > 8, r > 0; an empty bracket is a
/// flagged result, not an error.
WidthBounds width_range(int n, long long r);

/// Largest N > 8 such that n*2^(n/2-2)*(n/2-4) <= 8r for every n in (8, N];
/// equivalently the last attribute size at which k2 <= k1. nullopt when no
/// n > 8 satisfies the inequality.
std::optional<int> crossover_attribute_size(long long r);

/// Sample size r* = 2^(n/2-6)*n*(n-8) at which k1 and k2 coincide. n > 8.
double lub_sample_size(int n);

struct BoundsRow {
    int n = 0;
    double k1 = 0.0;
    double k2 = 0.0;
    double upper = 0.0;
    int lo = 0;
    int hi = 0;
    bool empty = false;
};

/// One row per n in [n_from, n_to]. Requires 8 < n_from <= n_to, r > 0.
std::vector<BoundsRow> bounds_table(long long r, int n_from, int n_to);

} // namespace netwidth

#endif
