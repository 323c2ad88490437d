#pragma once

#include "adelic/bundle.hpp"
#include "adelic/norm.hpp"
#include "adelic/report.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <vector>

namespace adelic {

/// Monomial-weighted graded linear series on the P^d model: the degree-n
/// piece has basis the monomials a in N^{d+1} with |a| = n and the norm
/// ||e_a||_n = exp(-w(n,a)). Two constructors: linear weights w = <tau, a>
/// (exactly submultiplicative, homogeneous) and tabulated per-degree weights.
class GradedSeriesModel {
public:
    static GradedSeriesModel linear(std::vector<Rational> tau);
    /// Per-degree tables keyed by degree; each table must cover every
    /// monomial of its degree. Validates weight superadditivity with f = 0
    /// across all in-table degree pairs and rejects violating tables.
    static GradedSeriesModel tabulated(unsigned dim_d,
                                       std::map<unsigned, std::vector<LogScalar>> weights);
    /// {"d":1,"weights":{"n":{"a0,a1":"num/den",...}}}
    static GradedSeriesModel tabulated_from_json(const nlohmann::json& j);
    /// Tabulated model without the f = 0 validation (weights satisfying only
    /// an f-submultiplicative bound, e.g. HN casts with archimedean places).
    static GradedSeriesModel tabulated_unchecked(unsigned dim_d,
                                                 std::map<unsigned, std::vector<LogScalar>> weights);

    unsigned dim() const { return dim_d_; }     // Kodaira-Iitaka dimension
    unsigned rank() const { return dim_d_ + 1; } // ambient variables
    bool is_linear() const { return tau_.has_value(); }
    const std::vector<Rational>& tau() const;

    bool has_degree(unsigned n) const;
    unsigned max_degree() const; // largest usable degree (UINT_MAX when linear)
    LogScalar weight(unsigned n, const Monomial& a) const;
    std::vector<LogScalar> piece_weights(unsigned n) const; // aligned with monomials_of_degree

private:
    unsigned dim_d_ = 0;
    std::optional<std::vector<Rational>> tau_;
    std::map<unsigned, std::vector<LogScalar>> table_;
};

/// Fekete lower approximation sup_{N <= N_max} w(nN, N a)/N of the spectral
/// weight -ln||e_a||_sp. Exact for linear models at N = 1 already.
LogScalar spectral_weight(const GradedSeriesModel& series, unsigned n, const Monomial& a,
                          unsigned n_power_max);

/// Filtration of the degree-n piece by its weights.
RFiltration piece_filtration(const GradedSeriesModel& series, unsigned n);

/// Sequence max_a w(n,a)/n with Richardson limit (constant for linear models).
VolumeReport asymptotic_max_slope(const GradedSeriesModel& series, unsigned n_max);

// --- exact simplex-slice machinery for linear models (d <= 2) ---

/// Relative volume of {u in Delta_d : l(u) >= t} where l has the given vertex
/// values; 1 on the full simplex.
Rational simplex_slice_fraction(std::vector<Rational> vertex_values, const Rational& t);
/// integral_0^inf F(t) dt of the slice fraction, exact.
Rational simplex_slice_positive_integral(std::vector<Rational> vertex_values);
/// E[l] under the uniform simplex measure via the breakpoint structure of F
/// (independent of the termwise summation route).
Rational simplex_slice_mean(std::vector<Rational> vertex_values);

/// Counting estimates #{a : w_sp(n,a) >= n t} d!/n^d along a ladder, with the
/// exact polytope-slice value attached for linear models.
VolumeReport volume_at(const GradedSeriesModel& series, const Rational& t, unsigned n_max);

/// Two-route volume computation. Route A: normalized degree sums along a
/// ladder with Richardson limit. Route B: the concave-transform integral,
/// exact from breakpoints for linear models, trapezoid (step 1/64) otherwise.
struct VolumePair {
    VolumeReport route_a;
    double route_b = 0.0;
    std::optional<Rational> route_b_exact;
};

/// deg_+ based volume: route B = (d+1) integral_0^inf vol(V^t) dt.
VolumePair arithmetic_volume(const GradedSeriesModel& series, unsigned n_max);
/// deg based chi-volume: route B = (d+1) E[l], the first-moment integral of
/// the concave transform.
VolumePair chi_volume(const GradedSeriesModel& series, unsigned n_max);

/// Graded series of a split bundle: degree-n piece S^n(b) with HN-cast
/// weights; checks f-submultiplicativity with f(n) = (3/2) nu(Omega_inf)
/// ln dim S^n and reports the adelic chi-volume.
struct BundleGradedSeries {
    GradedSeriesModel series;
    std::vector<SplitAdelicBundle> pieces; // index n-1 holds S^n(b)
    VolumeReport chi;
    bool submultiplicative = false;
};
BundleGradedSeries graded_from_bundle(const SplitAdelicBundle& b, unsigned n_max);

} // namespace adelic
