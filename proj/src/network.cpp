#include "netwidth/network.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "netwidth/errors.hpp"

namespace netwidth {

namespace {

void require_consistent(const SigmoidNetwork& net) {
    const std::size_t m = net.w0.size();
    if (m == 0 || net.w0.front().empty()) {
        throw DomainError("network must have at least one hidden node and one input");
    }
    const std::size_t n = net.w0.front().size();
    for (const auto& row : net.w0) {
        if (row.size() != n) throw DomainError("ragged hidden weight matrix");
    }
    if (net.t0.size() != m || net.w1.size() != m) {
        throw DomainError("threshold/output weight lengths do not match hidden width");
    }
}

void require_input(const SigmoidNetwork& net, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(net.inputs())) {
        throw DomainError("input has " + std::to_string(x.size()) + " values, network expects " +
                          std::to_string(net.inputs()));
    }
}

} // namespace

EpsilonBand::EpsilonBand(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
        throw DomainError("epsilon must lie in (0, 0.5), got " + std::to_string(epsilon));
    }
}

double sigmoid(double s) {
    double v;
    if (s >= 0.0) {
        v = 1.0 / (1.0 + std::exp(-s));
    } else {
        const double e = std::exp(s);
        v = e / (1.0 + e);
    }
    // keep strictly inside (0, 1); beyond |s| ~ 745 the exponential underflows
    constexpr double lo = std::numeric_limits<double>::denorm_min();
    constexpr double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2;
    return std::min(std::max(v, lo), hi);
}

double forward(const SigmoidNetwork& net, std::span<const double> x) {
    require_input(net, x);
    double out = net.t1;
    for (std::size_t k = 0; k < net.w0.size(); ++k) {
        double s = net.t0[k];
        const auto& row = net.w0[k];
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
        out += net.w1[k] * sigmoid(s);
    }
    return out;
}

std::vector<std::vector<double>> to_weight_matrix(const SigmoidNetwork& net) {
    require_consistent(net);
    const std::size_t m = net.w0.size();
    const std::size_t n = net.w0.front().size();
    std::vector<std::vector<double>> mat(m, std::vector<double>(n + 3, 0.0));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < n; ++j) mat[k][j] = net.w0[k][j];
        mat[k][n] = net.t0[k];
        mat[k][n + 1] = net.w1[k];
        mat[k][n + 2] = (k == 0) ? net.t1 : 0.0;
    }
    return mat;
}

SigmoidNetwork from_weight_matrix(const std::vector<std::vector<double>>& mat) {
    if (mat.empty() || mat.front().size() < 4) {
        throw DomainError("weight matrix must have at least one row and n+3 >= 4 columns");
    }
    const std::size_t cols = mat.front().size();
    const std::size_t n = cols - 3;
    SigmoidNetwork net;
    net.w0.reserve(mat.size());
    for (std::size_t k = 0; k < mat.size(); ++k) {
        const auto& row = mat[k];
        if (row.size() != cols) throw DomainError("ragged weight matrix");
        if (k > 0 && row[cols - 1] != 0.0) {
            throw DomainError("weight matrix rows below the first must end in 0");
        }
        net.w0.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
        net.t0.push_back(row[n]);
        net.w1.push_back(row[n + 1]);
    }
    net.t1 = mat.front()[cols - 1];
    return net;
}

bool epsilon_identified(const SigmoidNetwork& net,
                        const std::vector<std::vector<double>>& points,
                        const std::vector<bool>& in_s, EpsilonBand band) {
    if (points.size() != in_s.size()) {
        throw DomainError("points and labels differ in length");
    }
    const double eps = band.value();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double f = forward(net, points[i]);
        if (in_s[i]) {
            if (!(f > 1.0 - eps && f <= 1.0)) return false;
        } else {
            if (!(f >= 0.0 && f < eps)) return false;
        }
    }
    return true;
}

std::optional<double> least_epsilon(const SigmoidNetwork& net,
                                    const std::vector<std::vector<double>>& points,
                                    const std::vector<bool>& in_s) {
    if (points.size() != in_s.size()) {
        throw DomainError("points and labels differ in length");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double f = forward(net, points[i]);
        if (f < 0.0 || f > 1.0) return std::nullopt;
        worst = std::max(worst, in_s[i] ? 1.0 - f : f);
    }
    if (worst >= 0.5) return std::nullopt;
    return worst;
}

int classify(const SigmoidNetwork& net, std::span<const double> x, double threshold) {
    return forward(net, x) >= threshold ? 1 : 0;
}

void save_weights(const SigmoidNetwork& net, const std::filesystem::path& path) {
    require_consistent(net);
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "# netwidth weights v1 n=" << net.inputs() << " m=" << net.hidden() << "\n";
    char buf[32];
    for (const auto& row : to_weight_matrix(net)) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", row[j]);
            out << (j ? " " : "") << buf;
        }
        out << "\n";
    }
    if (!out) throw IoError("failed writing " + path.string());
}

SigmoidNetwork load_weights(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string header;
    std::getline(in, header);
    int n = 0, m = 0;
    if (std::sscanf(header.c_str(), "# netwidth weights v1 n=%d m=%d", &n, &m) != 2 || n < 1 ||
        m < 1) {
        throw IoError("bad weight file header in " + path.string() + ": " + header);
    }
    std::vector<std::vector<double>> mat;
    mat.reserve(static_cast<std::size_t>(m));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row_in(line);
        std::vector<double> row;
        double v;
        while (row_in >> v) row.push_back(v);
        if (row.size() != static_cast<std::size_t>(n) + 3) {
            throw IoError("weight row has " + std::to_string(row.size()) + " values, expected " +
                          std::to_string(n + 3));
        }
        mat.push_back(std::move(row));
    }
    if (mat.size() != static_cast<std::size_t>(m)) {
        throw IoError("weight file has " + std::to_string(mat.size()) + " rows, header says " +
                      std::to_string(m));
    }
    return from_weight_matrix(mat);
}

} // namespace netwidth
