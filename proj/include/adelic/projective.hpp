#pragma once

#include "adelic/curve.hpp"
#include "adelic/log_scalar.hpp"
#include "adelic/rational.hpp"
#include "adelic/report.hpp"

#include <optional>
#include <span>
#include <vector>

namespace adelic {

/// The corner simplex P_{d+1,x} = {t >= 0 : t_0 + ... + t_d <= x} and its
/// diagonal facet Delta_{d,x}.
struct SimplexSpec {
    unsigned d = 0;
    Rational x = 1;
};

/// Lebesgue volume of P_{d+1,x}: x^{d+1}/(d+1)!.
Rational simplex_volume(unsigned d, const Rational& x);

/// Facet volume of Delta_{d,x} is coefficient * sqrt(radicand):
/// (x^d/d!) * sqrt(d+1).
struct FacetVolume {
    Rational coefficient;
    unsigned radicand = 1;
};
FacetVolume simplex_facet_volume(unsigned d, const Rational& x);

/// integral over Delta_{d,1} of t_0 ln t_0 + ... + t_d ln t_d under the
/// uniform probability measure: -(1/(d+1)) sum_{m<=d} sum_{l<=m} 1/l.
Rational entropy_integral(unsigned d);

/// Monte-Carlo estimate of the same integral by exponential-spacings simplex
/// sampling; reproducible for a fixed seed.
struct McEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    unsigned long samples = 0;
};
McEstimate entropy_integral_mc(unsigned d, unsigned long samples, std::uint64_t seed);

/// The double harmonic sum H_d = sum_{m=1}^d sum_{l=1}^m 1/l.
Rational harmonic_double_sum(unsigned d);

/// H_d / (2(d+1)), the Fubini-Study Hilbert-Samuel constant of P^d.
Rational hs_constant(unsigned d);

enum class DetMode { automatic, exact, floating };

/// Archimedean determinant log of the degree-n Fubini-Study symmetric power:
/// (1/2) sum_{|a|=n} ln(a_0!...a_d!/n!), via the closed form
/// (1/2)[(d+1) sum_k C(n-k+d-1,d-1) ln k! - r_n ln n!].
/// Exact LogScalar mode (Legendre) for n <= 60 unless forced; compensated
/// log-gamma floats beyond.
struct FsDetLog {
    double value = 0.0;
    bool exact_mode = false;
    std::optional<LogScalar> exact;
};
FsDetLog fs_det_log(unsigned d, unsigned n, DetMode mode = DetMode::automatic);

/// Non-archimedean determinant log: identically zero (monomials are an
/// orthonormal basis at the Gauss point).
LogScalar fs_det_log_nonarch(unsigned d, unsigned n);

struct HsSequencePoint {
    unsigned long n = 0;
    Integer r_n;          // C(n+d, d)
    double v_n = 0.0;     // -det_log/(n r_n), >= 0
    bool exact_mode = false;
};
std::vector<HsSequencePoint> hs_sequence(unsigned d, std::span<const unsigned long> n_list,
                                         DetMode mode = DetMode::automatic,
                                         const Rational& arch_mass = 1);

VolumeReport hs_report(unsigned d, std::span<const unsigned long> n_list,
                       DetMode mode = DetMode::automatic, const Rational& arch_mass = 1);

/// chi-volume sequence of the Fubini-Study metrized O(1) on P^d over the
/// given curve: deg(S^n unit bundle)/(n^{d+1}/(d+1)!); the reference value is
/// the closed form arch_mass * H_d/2.
VolumeReport chi_volume_fubini_study(unsigned d, const AdelicCurve& curve,
                                     std::span<const unsigned long> n_list,
                                     DetMode mode = DetMode::automatic);

} // namespace adelic
