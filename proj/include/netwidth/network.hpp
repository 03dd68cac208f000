#ifndef NETWIDTH_NETWORK_HPP
#define NETWIDTH_NETWORK_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace netwidth {

/// Two-layer feedforward network: m log-sigmoid hidden nodes, one linear
/// output node. Immutable value for evaluation purposes; the trainer owns its
/// copy exclusively during a run.
struct SigmoidNetwork {
    std::vector<std::vector<double>> w0; // hidden weights, m rows x n cols
    std::vector<double> t0;              // hidden thresholds, length m
    std::vector<double> w1;              // output weights, length m
    double t1 = 0.0;                     // output threshold

    int inputs() const { return w0.empty() ? 0 : static_cast<int>(w0.front().size()); }
    int hidden() const { return static_cast<int>(w0.size()); }

    bool operator==(const SigmoidNetwork&) const = default;
};

/// Identification band half-width; valid range (0, 0.5) so the band around 1
/// and the band around 0 stay disjoint.
class EpsilonBand {
public:
    explicit EpsilonBand(double epsilon);
    double value() const { return epsilon_; }

private:
    double epsilon_;
};

/// Log-sigmoid, numerically stable for large |s|. Clamped to the open
/// interval (0, 1): saturation rounds to the nearest representable value
/// inside the interval instead of exactly 0 or 1.
double sigmoid(double s);

/// Network output w1^T . sigmoid(w0 x + t0) + t1. Linear output node, so the
/// result is not confined to [0, 1].
double forward(const SigmoidNetwork& net, std::span<const double> x);

/// Serializes to the m x (n+3) layout: each row is the hidden node's input
/// weights, its threshold, its output weight, and (first row only) the output
/// threshold; the last column is zero below the first row.
std::vector<std::vector<double>> to_weight_matrix(const SigmoidNetwork& net);

/// Inverse of to_weight_matrix. Throws DomainError on a malformed matrix
/// (wrong shape, or a nonzero entry below row 1 in the last column).
SigmoidNetwork from_weight_matrix(const std::vector<std::vector<double>>& mat);

/// True iff every point labeled in S maps into (1-eps, 1] and every point
/// outside S maps into [0, eps).
bool epsilon_identified(const SigmoidNetwork& net,
                        const std::vector<std::vector<double>>& points,
                        const std::vector<bool>& in_s, EpsilonBand band);

/// Infimum epsilon over the labeling: max of (1 - f) on S-points and f on
/// complement points. nullopt when some output leaves [0, 1] or the infimum
/// reaches 0.5 (not identifiable).
std::optional<double> least_epsilon(const SigmoidNetwork& net,
                                    const std::vector<std::vector<double>>& points,
                                    const std::vector<bool>& in_s);

/// Hard decision for accuracy reporting; ties at the threshold go to class 1.
int classify(const SigmoidNetwork& net, std::span<const double> x, double threshold = 0.5);

/// Weight-matrix text format: a header line carrying (n, m), then one line per
/// serialized matrix row. Round-trips exactly.
void save_weights(const SigmoidNetwork& net, const std::filesystem::path& path);
SigmoidNetwork load_weights(const std::filesystem::path& path);

} // namespace netwidth

#endif
