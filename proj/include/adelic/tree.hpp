#pragma once

#include "adelic/rational.hpp"
#include "adelic/report.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace adelic {

/// Closed points of a regular projective curve over a trivially valued
/// field; the Berkovich space is the infinite tree with root eta_0 and one
/// [0, +inf] branch per point.
struct TreePoint {
    std::string id;
    unsigned residue_degree = 1; // [kappa(x):k]
    friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

class TreeCurve {
public:
    TreeCurve() = default;
    explicit TreeCurve(std::vector<TreePoint> points);
    const std::vector<TreePoint>& points() const { return points_; }
    const TreePoint* find(const std::string& id) const;
    friend bool operator==(const TreeCurve&, const TreeCurve&) = default;

private:
    std::vector<TreePoint> points_;
};

/// Continuous piecewise-linear function on a branch: breakpoints
/// 0 = t_0 < t_1 < ... < t_k with one rational slope per interval and slope 0
/// beyond t_k (bounded). The value at 0 is carried explicitly.
class PLFunction {
public:
    PLFunction() = default;
    PLFunction(Rational value_at_zero, std::vector<Rational> breaks, std::vector<Rational> slopes);

    static PLFunction constant(Rational value);

    const Rational& value_at_zero() const { return value_at_zero_; }
    const std::vector<Rational>& breaks() const { return breaks_; }
    const std::vector<Rational>& slopes() const { return slopes_; }

    Rational value(const Rational& t) const;
    Rational final_value() const;
    bool is_zero() const;

    PLFunction& operator+=(const PLFunction& other);
    PLFunction& operator*=(const Rational& c);
    friend PLFunction operator+(PLFunction a, const PLFunction& b) { return a += b; }
    friend PLFunction operator*(PLFunction a, const Rational& c) { return a *= c; }

    /// integral_0^inf f'(t) g'(t) dt on the common breakpoint refinement.
    friend Rational derivative_pairing(const PLFunction& f, const PLFunction& g);

    friend bool operator==(const PLFunction&, const PLFunction&) = default;

private:
    Rational value_at_zero_ = 0;
    std::vector<Rational> breaks_ = {0};
    std::vector<Rational> slopes_;
};

/// A divisor sum ord_x(D) [x] with a Green function g = g_D + phi, where
/// g_D(xi) = ord_x(D) t(xi) on the branch of x and phi is a bounded PL
/// correction with common root value phi(eta_0).
class MetrizedDivisor {
public:
    MetrizedDivisor() = default;
    MetrizedDivisor(TreeCurve curve, std::map<std::string, long> orders, Rational root_value,
                    std::map<std::string, PLFunction> branch_phi);

    const TreeCurve& curve() const { return curve_; }
    const std::map<std::string, long>& orders() const { return orders_; }
    long order(const std::string& id) const;
    const Rational& root_value() const { return root_value_; }
    /// phi on the branch of x; constant root_value off the listed branches.
    PLFunction phi(const std::string& id) const;
    const std::map<std::string, PLFunction>& listed_phi() const { return phi_; }

    long degree() const; // sum ord_x [kappa(x):k]
    /// g(eta_0) = root value (the canonical part vanishes at the root).
    const Rational& green_at_root() const { return root_value_; }

private:
    TreeCurve curve_;
    std::map<std::string, long> orders_;
    Rational root_value_ = 0;
    std::map<std::string, PLFunction> phi_;
};

/// Green function g = g_D: phi = 0, root value 0.
MetrizedDivisor canonical_divisor(const TreeCurve& curve, std::map<std::string, long> orders);

/// Integer linear combination a D0 + b D1 (orders, root values and phi all
/// combine linearly).
MetrizedDivisor linear_combination(long a, const MetrizedDivisor& d0, long b,
                                   const MetrizedDivisor& d1);

/// g1(eta_0) deg(D0) + g0(eta_0) deg(D1)
///   - sum_x [kappa(x):k] integral_0^inf phi'_0 phi'_1 dt, exact.
Rational intersection(const MetrizedDivisor& d0, const MetrizedDivisor& d1);

/// Determinant-norm limit on the P^1 model (marked points "0" and "inf"):
/// for each n the sections of nD are the monomials z^-a, their sup-norm logs
/// are evaluated exactly from the PL data, and -sum ln||s_a||/(n^2/2) is
/// reported against the intersection number.
VolumeReport toric_det_limit(const MetrizedDivisor& d, unsigned long n_max);

/// One exact determinant-log evaluation of the same limit sequence.
Rational toric_det_log(const MetrizedDivisor& d, unsigned long n);

nlohmann::json to_json(const MetrizedDivisor& d);
MetrizedDivisor divisor_from_json(const nlohmann::json& j);

} // namespace adelic
