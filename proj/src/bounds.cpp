#include "netwidth/bounds.hpp"

#include <cmath>
#include <string>

#include "netwidth/errors.hpp"

namespace netwidth {

namespace {

void require_shape(NetworkShape shape) {
    if (shape.n < 1 || shape.m < 1) {
        throw DomainError("network shape requires n >= 1 and m >= 1 (got n=" +
                          std::to_string(shape.n) + ", m=" + std::to_string(shape.m) + ")");
    }
}

void require_samples(long long r) {
    if (r <= 0) throw DomainError("sample count must be positive (got r=" + std::to_string(r) + ")");
}

void require_n_above(int n, int floor_excl) {
    if (n <= floor_excl) {
        throw DomainError("attribute count must exceed " + std::to_string(floor_excl) +
                          " (got n=" + std::to_string(n) + ")");
    }
}

// gamma must exceed both beta and 1; this is the infimum of the admissible
// set, which yields the least conservative lower bound.
constexpr double kGammaMargin = 1e-9;

} // namespace

long long total_weights(NetworkShape shape) {
    require_shape(shape);
    const long long n = shape.n, m = shape.m;
    return n * m + 2 * m + 1;
}

long long computational_units(NetworkShape shape) {
    require_shape(shape);
    return static_cast<long long>(shape.m) + 1;
}

CapacityCounts capacity_counts(NetworkShape shape) {
    return {total_weights(shape), computational_units(shape)};
}

double q_poly(int n, double m) {
    if (n < 1) throw DomainError("q_poly requires n >= 1");
    return (n + 2) * m * m + (n + 3) * m + 1.0;
}

double vc_lower_bound(NetworkShape shape) {
    const double n = shape.n;
    const double cp = static_cast<double>(computational_units(shape));
    return n * cp / 8.0 * std::log2(cp / 4.0);
}

double vc_upper_bound(NetworkShape shape) {
    const double wt = static_cast<double>(total_weights(shape));
    const double cp = static_cast<double>(computational_units(shape));
    const double wc = wt * cp;
    return wc * wc + 11.0 * wc * std::log2(18.0 * wt * cp * cp);
}

std::pair<double, double> vc_bracket(NetworkShape shape) {
    return {vc_lower_bound(shape), vc_upper_bound(shape)};
}

double beta_root(int n, long long r) {
    require_n_above(n, 4);
    require_samples(r);
    const double b = 11.0 * (n / 2.0 - 2.0);
    const double disc = b * b + 4.0 * 199.0 * static_cast<double>(r);
    return (-b + std::sqrt(disc)) / (2.0 * 199.0);
}

double lower_width_bound(int n, long long r) {
    const double beta = beta_root(n, r);
    const double gamma = std::max(beta, 1.0 + kGammaMargin);
    const double disc = static_cast<double>(n + 3) * (n + 3) + 4.0 * (n + 2) * (gamma - 1.0);
    return (-(n + 3) + std::sqrt(disc)) / (2.0 * (n + 2));
}

double k1_bound(int n, long long r) {
    require_n_above(n, 8);
    require_samples(r);
    return 16.0 * static_cast<double>(r) / (static_cast<double>(n) * (n - 8)) - 1.0;
}

double k2_bound(int n) {
    require_n_above(n, 8);
    return std::exp2(n / 2.0 - 2.0) - 1.0;
}

double upper_width_bound(int n, long long r) {
    return std::min(k1_bound(n, r), k2_bound(n));
}

WidthBounds width_range(int n, long long r) {
    WidthBounds wb;
    wb.n = n;
    wb.r = r;
    wb.k1 = k1_bound(n, r);
    wb.k2 = k2_bound(n);
    wb.upper_real = std::min(wb.k1, wb.k2);
    wb.beta = beta_root(n, r);
    wb.gamma = std::max(wb.beta, 1.0 + kGammaMargin);
    wb.lower_real = lower_width_bound(n, r);
    wb.lo = std::max(1, static_cast<int>(std::ceil(wb.lower_real)));
    wb.hi = static_cast<int>(std::floor(wb.upper_real));
    wb.empty = wb.hi < wb.lo;
    return wb;
}

std::optional<int> crossover_attribute_size(long long r) {
    require_samples(r);
    // The left side n*2^(n/2-2)*(n/2-4) is strictly increasing for n > 8, so
    // scan until the inequality first fails.
    std::optional<int> last;
    for (int n = 9;; ++n) {
        const double lhs = n * std::exp2(n / 2.0 - 2.0) * (n / 2.0 - 4.0);
        if (lhs <= 8.0 * static_cast<double>(r)) {
            last = n;
        } else {
            return last;
        }
    }
}

double lub_sample_size(int n) {
    require_n_above(n, 8);
    return std::exp2(n / 2.0 - 6.0) * n * (n - 8);
}

std::vector<BoundsRow> bounds_table(long long r, int n_from, int n_to) {
    require_n_above(n_from, 8);
    if (n_from > n_to) throw DomainError("bounds_table requires n_from <= n_to");
    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    for (int n = n_from; n <= n_to; ++n) {
        const WidthBounds wb = width_range(n, r);
        rows.push_back({n, wb.k1, wb.k2, wb.upper_real, wb.lo, wb.hi, wb.empty});
    }
    return rows;
}

} // namespace netwidth
