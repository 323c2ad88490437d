#pragma once

#include "adelic/curve.hpp"
#include "adelic/log_scalar.hpp"

#include <span>
#include <string>
#include <vector>

namespace adelic {

enum class NormFlavor { ultrametric, hermitian };

/// Exponent vector a = (a_1,...,a_r); degree = sum a_i.
struct Monomial {
    std::vector<unsigned> exponents;

    unsigned degree() const;
    /// "2,0,1", the key format of tabulated weight files.
    std::string label() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial parse_monomial(const std::string& label);

/// All degree-`degree` monomials in `rank` variables, first exponent
/// descending. Count is C(rank+degree-1, degree).
std::vector<Monomial> monomials_of_degree(unsigned rank, unsigned degree);

/// A norm on a labeled basis given by per-vector log-weights c_i = ln||e_i||.
/// Only simultaneously-orthogonal (diagonal) norms are represented; general
/// norms enter solely through the closed forms proved for them (symmetric
/// powers, determinants, duals).
class DiagonalNorm {
public:
    DiagonalNorm() = default;
    DiagonalNorm(NormFlavor flavor, std::vector<std::string> labels, std::vector<LogScalar> weights);

    static DiagonalNorm unit(NormFlavor flavor, unsigned dim, const std::string& stem = "e");

    NormFlavor flavor() const { return flavor_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<LogScalar>& weights() const { return weights_; }
    const LogScalar& weight(std::size_t i) const { return weights_.at(i); }
    bool is_unit() const;

    friend bool operator==(const DiagonalNorm&, const DiagonalNorm&) = default;

private:
    NormFlavor flavor_ = NormFlavor::ultrametric;
    std::vector<std::string> labels_;
    std::vector<LogScalar> weights_;
};

/// Same flavor and labels, weights negated.
DiagonalNorm dual_norm(const DiagonalNorm& n);

/// Product basis labeled "(i,j)", weight c_i + d_j. epsilon-tensor for the
/// ultrametric flavor, orthogonal tensor for the hermitian one; they coincide
/// on diagonal norms.
DiagonalNorm tensor_norm(const DiagonalNorm& a, const DiagonalNorm& b);

/// Concatenated labels and weights.
DiagonalNorm direct_sum_norm(const DiagonalNorm& a, const DiagonalNorm& b);

/// Norm on the degree-delta monomials. Ultrametric: weight(a) = sum a_i c_i.
/// Hermitian: sum a_i c_i + (1/2) ln(a_1!...a_r!/delta!), exact.
DiagonalNorm symmetric_power_norm(const DiagonalNorm& n, unsigned delta);

/// sum_i c_i (determinant norm of an orthogonal basis, both flavors).
LogScalar determinant_log(const DiagonalNorm& n);

/// max_i |c_i - c'_i|; equals the sup-distance d_omega on this norm class.
LogScalar norm_distance(const DiagonalNorm& a, const DiagonalNorm& b);

/// ln||sum lambda_i e_i|| for ultrametric norms: max_i(ln|lambda_i|_place + c_i), exact.
LogScalar vector_log_norm_ultrametric(const DiagonalNorm& n, const Place& place,
                                      std::span<const Rational> coords);

/// ln||sum lambda_i e_i|| for hermitian norms: (1/2) ln(sum lambda_i^2 e^{2 c_i}).
double vector_log_norm_hermitian(const DiagonalNorm& n, std::span<const Rational> coords);

/// Flavor dispatch of the two above, as a float.
double vector_log_norm(const DiagonalNorm& n, const Place& place, std::span<const Rational> coords);

/// ln||sym(e^a)|| in the delta-fold tensor power of a unit norm, where sym is
/// the symmetrization operator S^delta(V) -> V^(x delta). Hermitian:
/// (1/2)(ln a! + ln delta!). Ultrametric: ln|a_1!...a_r!| at the place.
LogScalar sym_image_log_norm(const Monomial& a, const DiagonalNorm& unit_norm, const Place& place);

} // namespace adelic
