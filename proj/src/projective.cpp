#include "adelic/projective.hpp"

#include "adelic/parallel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace adelic {

Rational simplex_volume(unsigned d, const Rational& x) {
    if (x <= 0) throw std::invalid_argument("simplex_volume: x > 0 required");
    Rational v = 1;
    for (unsigned k = 0; k <= d; ++k) v *= x / (k + 1);
    return v;
}

FacetVolume simplex_facet_volume(unsigned d, const Rational& x) {
    if (x <= 0) throw std::invalid_argument("simplex_facet_volume: x > 0 required");
    Rational c = 1;
    for (unsigned k = 1; k <= d; ++k) c *= x / k;
    return {c, d + 1};
}

Rational harmonic_double_sum(unsigned d) {
    Rational total = 0;
    Rational harmonic = 0;
    for (unsigned m = 1; m <= d; ++m) {
        harmonic += Rational(1, m);
        total += harmonic;
    }
    return total;
}

Rational entropy_integral(unsigned d) {
    if (d == 0) return 0; // single point t_0 = 1, value 1 ln 1
    return -harmonic_double_sum(d) / (d + 1);
}

McEstimate entropy_integral_mc(unsigned d, unsigned long samples, std::uint64_t seed) {
    if (samples < 10'000) throw std::invalid_argument("entropy_integral_mc: samples >= 10^4");
    std::mt19937_64 engine(seed);
    // exponential spacings: (E_0,...,E_d)/sum is uniform on the simplex
    auto exponential = [&engine] {
        // inverse CDF on (0,1]; 64-bit mantissa scaling keeps the draw stable
        const double u = (static_cast<double>(engine() >> 11) + 1.0) * 0x1p-53;
        return -std::log(u);
    };
    double sum = 0.0, sumsq = 0.0;
    std::vector<double> e(d + 1);
    for (unsigned long s = 0; s < samples; ++s) {
        double total = 0.0;
        for (auto& x : e) {
            x = exponential();
            total += x;
        }
        double value = 0.0;
        for (double x : e) {
            const double t = x / total;
            if (t > 0) value += t * std::log(t);
        }
        sum += value;
        sumsq += value * value;
    }
    const double mean = sum / samples;
    const double variance = std::max(0.0, sumsq / samples - mean * mean);
    return {mean, std::sqrt(variance / samples), samples};
}

Rational hs_constant(unsigned d) {
    if (d == 0) throw std::invalid_argument("hs_constant: d >= 1 required");
    return harmonic_double_sum(d) / (2 * (d + 1));
}

LogScalar fs_det_log_nonarch(unsigned, unsigned) { return LogScalar(); }

FsDetLog fs_det_log(unsigned d, unsigned n, DetMode mode) {
    if (n < 1) throw std::invalid_argument("fs_det_log: n >= 1 required");
    const bool exact = mode == DetMode::exact || (mode == DetMode::automatic && n <= 60);
    if (exact && n > 5000) // the prime table and term count stay desk-sized
        throw std::invalid_argument("fs_det_log: exact mode capped, use floating");
    FsDetLog out;
    out.exact_mode = exact;
    if (exact) {
        // (1/2)[(d+1) sum_k C(n-k+d-1, d-1) ln k! - r_n ln n!]
        LogScalar acc;
        for (unsigned k = 2; k <= n; ++k) {
            const Integer c = binomial(n - k + d - 1, d - 1);
            if (c != 0) acc += LogScalar::ln_factorial(k) * Rational(c);
        }
        acc *= Rational(d + 1);
        acc -= LogScalar::ln_factorial(n) * Rational(binomial(n + d, d));
        acc *= Rational(1, 2);
        out.value = acc.to_double();
        out.exact = std::move(acc);
    } else {
        // compensated summation over the same closed form
        double acc = 0.0, comp = 0.0;
        auto add = [&](double x) {
            const double y = x - comp;
            const double t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        };
        for (unsigned k = 2; k <= n; ++k)
            add(to_double(Rational(binomial(n - k + d - 1, d - 1))) * std::lgamma(k + 1.0));
        acc *= d + 1;
        const double rn = to_double(Rational(binomial(n + d, d)));
        out.value = 0.5 * (acc - rn * std::lgamma(n + 1.0));
    }
    return out;
}

std::vector<HsSequencePoint> hs_sequence(unsigned d, std::span<const unsigned long> n_list,
                                         DetMode mode, const Rational& arch_mass) {
    std::vector<HsSequencePoint> out(n_list.size());
    const double mass = to_double(arch_mass);
    parallel_for(n_list.size(), [&](std::size_t i) {
        const unsigned long n = n_list[i];
        const auto det = fs_det_log(d, static_cast<unsigned>(n), mode);
        HsSequencePoint pt;
        pt.n = n;
        pt.r_n = binomial(n + d, d);
        pt.v_n = -mass * det.value / (static_cast<double>(n) * to_double(Rational(pt.r_n)));
        pt.exact_mode = det.exact_mode;
        out[i] = std::move(pt);
    });
    return out;
}

VolumeReport hs_report(unsigned d, std::span<const unsigned long> n_list, DetMode mode,
                       const Rational& arch_mass) {
    std::vector<std::pair<unsigned long, double>> seq;
    for (const auto& pt : hs_sequence(d, n_list, mode, arch_mass))
        seq.emplace_back(pt.n, pt.v_n);
    VolumeReport report(std::move(seq), "hs-sequence");
    report.reference = to_double(hs_constant(d) * arch_mass);
    return report;
}

VolumeReport chi_volume_fubini_study(unsigned d, const AdelicCurve& curve,
                                     std::span<const unsigned long> n_list, DetMode mode) {
    const Rational mass = curve.arch_mass();
    if (mass < 0) throw std::invalid_argument("chi_volume_fubini_study: arch mass >= 0");
    std::vector<std::pair<unsigned long, double>> seq(n_list.size());
    const double w = to_double(mass);
    parallel_for(n_list.size(), [&](std::size_t i) {
        const unsigned long n = n_list[i];
        // deg = -arch_mass * det_log (non-arch places contribute 0 exactly)
        const double deg = -w * fs_det_log(d, static_cast<unsigned>(n), mode).value;
        double norm = 1.0;
        for (unsigned k = 0; k <= d; ++k) norm *= static_cast<double>(n) / (k + 1);
        seq[i] = {n, deg / norm};
    });
    VolumeReport report(std::move(seq), "chi-fubini-study");
    report.reference = to_double(mass * harmonic_double_sum(d) / 2);
    return report;
}

} // namespace adelic
