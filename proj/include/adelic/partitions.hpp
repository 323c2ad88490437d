#pragma once

#include "adelic/bundle.hpp"
#include "adelic/rational.hpp"

#include <string>
#include <vector>

namespace adelic {

/// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned weight() const;
    std::size_t length() const { return parts_.size(); }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Column lengths of the Young diagram; a weight-preserving involution.
    Partition transpose() const;

    std::string str() const;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

/// All partitions of weight delta (delta = 0 gives the empty partition).
std::vector<Partition> partitions_of(unsigned delta);

/// Dimension of the Schur module L^lambda of an r-dimensional space, in the
/// convention L^(delta) = Lambda^delta and L^(1,...,1) = S^delta; computed by
/// the hook content product on the transpose diagram. Vanishes exactly when
/// the first part exceeds r.
Integer schur_dimension(const Partition& lambda, unsigned r);

/// Independent route: Jacobi-Trudi determinant det(h_{mu_i - i + j}) at the
/// principal specialization, applied to the transpose diagram.
Integer schur_dimension_jacobi_trudi(const Partition& lambda, unsigned r);

/// Dimension side of the Cauchy decomposition of S^delta(V (x) W):
/// C(r1 r2 + delta - 1, delta) = sum_lambda dim L^lambda(V) dim L^lambda(W).
struct CauchyRow {
    Partition lambda;
    Integer dim_v;
    Integer dim_w;
};
struct CauchyCheck {
    bool ok = false;
    Integer lhs; // dim S^delta(V (x) W)
    Integer rhs; // sum of products
    std::vector<CauchyRow> rows;
};
CauchyCheck cauchy_dimension_check(unsigned r1, unsigned r2, unsigned delta);

/// sum_{a=0}^delta a C(r+delta-a-2, r-2) = (delta/r) C(delta+r-1, r-1),
/// the binomial identity behind slope(S^delta) = delta slope.
bool slope_identity_check(unsigned r, unsigned delta);

/// dim of the weight-t subquotient of S^delta for a filtration with jump
/// multiplicities m_i: sum over compositions b of delta with
/// sum b_i mu_i = t of prod C(m_i + b_i - 1, b_i).
Integer subquotient_dimension(const RFiltration& filtration, unsigned delta, const LogScalar& t);

/// Slope identities of symmetric powers on a concrete bundle: the arch-free
/// equality slope(S^delta) = delta slope (exact) and the general bound
/// mu_max(S^delta) <= delta mu_max + nu(Omega_inf) ln(delta!).
struct SymmetricSlopeReport {
    bool slope_equality_applicable = false; // arch-free curve
    bool slope_equality = false;
    bool max_slope_bound = false;
    double max_slope = 0.0;
    double max_slope_limit = 0.0;
};
SymmetricSlopeReport symmetric_slope_check(const SplitAdelicBundle& b, unsigned delta);

} // namespace adelic
