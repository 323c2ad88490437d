#pragma once

#include "adelic/curve.hpp"
#include "adelic/norm.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

namespace adelic {

/// Harder-Narasimhan R-filtration of a split bundle: strictly decreasing jump
/// values with multiplicities. dim F^t is the induced right-continuous step
/// function.
class RFiltration {
public:
    struct Jump {
        LogScalar value;
        std::size_t multiplicity;
        friend bool operator==(const Jump&, const Jump&) = default;
    };

    RFiltration() = default;
    /// Builds the filtration from per-line jump values (sorted and merged on
    /// exact equality here).
    static RFiltration from_values(std::vector<LogScalar> values);

    const std::vector<Jump>& jumps() const { return jumps_; }
    std::size_t dim() const;
    std::size_t dim_at(double t) const; // dim F^t

    /// integral_0^inf dim F^t dt = sum_i max(value_i, 0), exact.
    LogScalar positive_mass() const;
    /// integral_R t d(dim F^t) = -sum_i value_i, exact.
    LogScalar first_moment() const;

    const LogScalar& max_value() const;
    const LogScalar& min_value() const;

    /// Jumps of S^delta: the multiset of sum_i b_i * mu_i over compositions.
    RFiltration symmetric_power(unsigned delta) const;

    friend bool operator==(const RFiltration&, const RFiltration&) = default;

private:
    std::vector<Jump> jumps_;
};

/// A vector space over Q with one diagonal norm per place of an adelic curve,
/// all sharing one orthogonal basis ("split"): hermitian at archimedean
/// places, ultrametric elsewhere.
class SplitAdelicBundle {
public:
    SplitAdelicBundle() = default;
    SplitAdelicBundle(AdelicCurve curve, std::vector<std::string> labels,
                      std::map<std::string, DiagonalNorm> norms_by_place);

    const AdelicCurve& curve() const { return curve_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const DiagonalNorm& norm_at(const std::string& place_id) const;
    const std::map<std::string, DiagonalNorm>& norms() const { return norms_; }

    /// d_i = -sum_omega mass(omega) c_{i,omega}, exact.
    std::vector<LogScalar> line_degrees() const;

    LogScalar arakelov_degree() const;
    LogScalar slope() const; // degree / dim
    RFiltration hn_filtration() const;
    LogScalar max_slope() const;
    LogScalar min_slope() const;
    /// sum_i max(d_i, 0); equals the area under dim F^t for t >= 0.
    LogScalar positive_degree() const;
    /// max_i d_i for split bundles.
    LogScalar lambda_max() const;
    /// deg(s) = -sum_omega mass * ln||s||_omega for a nonzero vector.
    double vector_degree(std::span<const Rational> coords) const;

private:
    AdelicCurve curve_;
    std::vector<std::string> labels_;
    std::map<std::string, DiagonalNorm> norms_;
};

SplitAdelicBundle unit_bundle(const AdelicCurve& curve, unsigned dim);
SplitAdelicBundle dual_bundle(const SplitAdelicBundle& b);
SplitAdelicBundle tensor_bundle(const SplitAdelicBundle& a, const SplitAdelicBundle& b);
SplitAdelicBundle symmetric_power_bundle(const SplitAdelicBundle& b, unsigned delta);

/// The HN-casting norm over the trivially valued field: ultrametric with
/// ||e_i|| = exp(-d_i), so ||s|| = exp(-sup{t : s in F^t}).
DiagonalNorm cast_to_trivial(const SplitAdelicBundle& b);

/// Wraps a trivially-valued diagonal norm as a bundle over S_0.
SplitAdelicBundle bundle_over_s0(const DiagonalNorm& trivial_norm);

/// Enumerates subspaces spanned by one or two integer vectors with
/// coordinates in [-coord_bound, coord_bound] (plus the full space) and
/// returns the maximal slope found. Dimension at most 3. Subspace degrees
/// are generator-independent only when the curve satisfies the product
/// formula for the enumerated coordinates; the sorted-degree comparison is
/// meaningful over such curves.
double hn_bruteforce_oracle(const SplitAdelicBundle& b, long coord_bound);

/// Reproducible fuzzing source: weights q ln p with q in {-3..3}/{1,2},
/// primes <= 7, dims <= 5.
struct BundleRng {
    std::mt19937_64 engine;
    explicit BundleRng(std::uint64_t seed) : engine(seed) {}
    long next_long(long lo, long hi); // uniform-ish, implementation-stable
};

SplitAdelicBundle random_bundle(BundleRng& rng, const AdelicCurve& curve, unsigned max_dim = 5);

} // namespace adelic
