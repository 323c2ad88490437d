#include "adelic/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace adelic {

double richardson3(unsigned long n1, double v1, unsigned long n2, double v2, unsigned long n3,
                   double v3) {
    // solve v_i = L + (alpha ln n_i + beta)/n_i by Cramer's rule
    const double g1 = std::log(double(n1)) / n1, h1 = 1.0 / n1;
    const double g2 = std::log(double(n2)) / n2, h2 = 1.0 / n2;
    const double g3 = std::log(double(n3)) / n3, h3 = 1.0 / n3;
    const double det = (g2 * h3 - g3 * h2) - (g1 * h3 - g3 * h1) + (g1 * h2 - g2 * h1);
    if (det == 0.0) throw std::invalid_argument("richardson3: degenerate ladder");
    const double num = v1 * (g2 * h3 - g3 * h2) - v2 * (g1 * h3 - g3 * h1) + v3 * (g1 * h2 - g2 * h1);
    return num / det;
}

double richardson2(unsigned long n1, double v1, unsigned long n2, double v2) {
    const double g1 = std::log(double(n1)) / n1;
    const double g2 = std::log(double(n2)) / n2;
    if (g1 == g2) throw std::invalid_argument("richardson2: degenerate ladder");
    return (v2 * g1 - v1 * g2) / (g1 - g2);
}

VolumeReport::VolumeReport(std::vector<std::pair<unsigned long, double>> sequence,
                           std::string method)
    : method_(std::move(method)) {
    points_.reserve(sequence.size());
    for (const auto& [n, v] : sequence) points_.push_back({n, v, std::nullopt});
    for (std::size_t k = 1; k < points_.size(); ++k) {
        if (k >= 2)
            points_[k].extrapolant =
                richardson3(points_[k - 2].n, points_[k - 2].value, points_[k - 1].n,
                            points_[k - 1].value, points_[k].n, points_[k].value);
        else
            points_[k].extrapolant =
                richardson2(points_[k - 1].n, points_[k - 1].value, points_[k].n, points_[k].value);
    }
}

double VolumeReport::limit() const {
    for (auto it = points_.rbegin(); it != points_.rend(); ++it)
        if (it->extrapolant) return *it->extrapolant;
    return last_value();
}

double VolumeReport::last_value() const {
    if (points_.empty()) throw std::domain_error("VolumeReport: empty sequence");
    return points_.back().value;
}

void VolumeReport::write_csv(std::ostream& os) const {
    os << "n,value,extrapolant\n";
    for (const auto& p : points_) {
        os << p.n << ',' << format_double(p.value) << ',';
        if (p.extrapolant) os << format_double(*p.extrapolant);
        os << '\n';
    }
}

std::vector<unsigned long> doubling_ladder(unsigned long n_max, unsigned long floor_n,
                                           unsigned max_points) {
    if (n_max < floor_n) throw std::invalid_argument("doubling_ladder: n_max below floor");
    std::vector<unsigned long> ns;
    for (unsigned long n = n_max; n >= floor_n && ns.size() < max_points; n /= 2) {
        ns.push_back(n);
        if (n / 2 == 0) break;
    }
    return {ns.rbegin(), ns.rend()};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace adelic
