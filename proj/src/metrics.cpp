#include "netwidth/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "netwidth/errors.hpp"

namespace netwidth {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DomainError("sequence lengths differ: " + std::to_string(a) + " vs " +
                          std::to_string(b));
    }
}

} // namespace

double dissimilarity(const CurveTriple& curves) {
    require_same_length(curves.g1.size(), curves.g2.size());
    require_same_length(curves.g1.size(), curves.g3.size());
    if (curves.g1.empty()) throw DomainError("curves must have at least one point");
    for (const auto* g : {&curves.g1, &curves.g2, &curves.g3}) {
        for (double v : *g) {
            if (!std::isfinite(v)) throw DomainError("curves must be finite");
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < curves.g1.size(); ++i) {
        double gaps[3] = {std::fabs(curves.g1[i] - curves.g2[i]),
                          std::fabs(curves.g1[i] - curves.g3[i]),
                          std::fabs(curves.g2[i] - curves.g3[i])};
        std::sort(gaps, gaps + 3);
        total += (gaps[0] + gaps[1]) + gaps[2];
    }
    return total / 100.0;
}

double mse_sum(std::span<const double> h, std::span<const double> t) {
    require_same_length(h.size(), t.size());
    if (h.empty()) throw DomainError("mse over an empty sequence");
    double total = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double d = h[i] - t[i];
        total += d * d;
    }
    return total;
}

double mse_mean(std::span<const double> h, std::span<const double> t) {
    return mse_sum(h, t) / static_cast<double>(h.size());
}

double halved_objective(std::span<const double> h, std::span<const double> t) {
    return mse_sum(h, t) / (2.0 * static_cast<double>(h.size()));
}

} // namespace netwidth
