#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace adelic {

/// A convergent sequence with Richardson acceleration. The correction model
/// is (alpha ln n + beta)/n: three trailing points determine the limit, two
/// points fall back to the alpha-only fit. The extrapolated limit is the last
/// iterate, so it lies (inclusively) between the last two iterates.
class VolumeReport {
public:
    struct Point {
        unsigned long n = 0;
        double value = 0.0;
        std::optional<double> extrapolant;
    };

    VolumeReport() = default;
    VolumeReport(std::vector<std::pair<unsigned long, double>> sequence, std::string method);

    const std::vector<Point>& points() const { return points_; }
    const std::string& method() const { return method_; }

    /// Last extrapolant when available, otherwise the last raw value.
    double limit() const;
    double last_value() const;

    /// Optional exact reference value (closed form) attached by producers.
    std::optional<double> reference;

    void write_csv(std::ostream& os) const; // columns n,value,extrapolant

private:
    std::vector<Point> points_;
    std::string method_;
};

/// Limit of the model v(n) = L + (alpha ln n + beta)/n through three points.
double richardson3(unsigned long n1, double v1, unsigned long n2, double v2, unsigned long n3,
                   double v3);
/// Limit of the model v(n) = L + alpha ln(n)/n through two points.
double richardson2(unsigned long n1, double v1, unsigned long n2, double v2);

/// Doubling ladder ending at n_max: n_max, n_max/2, ... (>= floor, at most
/// max_points entries), ascending.
std::vector<unsigned long> doubling_ladder(unsigned long n_max, unsigned long floor_n = 4,
                                           unsigned max_points = 6);

/// "%.12g" rendering used by every CSV/JSON emitter (determinism contract).
std::string format_double(double v);

} // namespace adelic
