#include "adelic/graded.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace adelic {

namespace {

Integer monomial_count(unsigned rank, unsigned degree) {
    return binomial(rank + degree - 1, degree);
}

double normalizer(unsigned d, unsigned long n) {
    // n^{d+1}/(d+1)!
    double v = 1.0;
    for (unsigned k = 0; k <= d; ++k) v *= static_cast<double>(n) / (k + 1);
    return v;
}

void check_superadditive(unsigned rank, const std::map<unsigned, std::vector<LogScalar>>& table) {
    for (const auto& [n, wn] : table)
        for (const auto& [m, wm] : table) {
            if (n > m) continue;
            auto it = table.find(n + m);
            if (it == table.end()) continue;
            const auto an = monomials_of_degree(rank, n);
            const auto am = monomials_of_degree(rank, m);
            std::unordered_map<std::string, std::size_t> index;
            const auto anm = monomials_of_degree(rank, n + m);
            for (std::size_t k = 0; k < anm.size(); ++k) index.emplace(anm[k].label(), k);
            for (std::size_t i = 0; i < an.size(); ++i)
                for (std::size_t j = 0; j < am.size(); ++j) {
                    Monomial sum = an[i];
                    for (std::size_t c = 0; c < sum.exponents.size(); ++c)
                        sum.exponents[c] += am[j].exponents[c];
                    const LogScalar& lhs = it->second[index.at(sum.label())];
                    if (compare(lhs, wn[i] + wm[j]) < 0)
                        throw std::invalid_argument(
                            "tabulated weights are not submultiplicative at degrees " +
                            std::to_string(n) + "+" + std::to_string(m) + " (monomials " +
                            an[i].label() + " * " + am[j].label() + ")");
                }
        }
}

} // namespace

GradedSeriesModel GradedSeriesModel::linear(std::vector<Rational> tau) {
    if (tau.empty() || tau.size() > 3)
        throw std::invalid_argument("linear model: need 1 <= d+1 <= 3 slope entries");
    GradedSeriesModel m;
    m.dim_d_ = static_cast<unsigned>(tau.size()) - 1;
    m.tau_ = std::move(tau);
    return m;
}

GradedSeriesModel GradedSeriesModel::tabulated_unchecked(
    unsigned dim_d, std::map<unsigned, std::vector<LogScalar>> weights) {
    if (dim_d > 2) throw std::invalid_argument("tabulated model: d <= 2 required");
    GradedSeriesModel m;
    m.dim_d_ = dim_d;
    for (const auto& [n, w] : weights) {
        if (n == 0) throw std::invalid_argument("tabulated model: degrees start at 1");
        if (Integer(w.size()) != monomial_count(dim_d + 1, n))
            throw std::invalid_argument("tabulated model: incomplete weight table at degree " +
                                        std::to_string(n));
    }
    m.table_ = std::move(weights);
    return m;
}

GradedSeriesModel GradedSeriesModel::tabulated(unsigned dim_d,
                                               std::map<unsigned, std::vector<LogScalar>> weights) {
    GradedSeriesModel m = tabulated_unchecked(dim_d, std::move(weights));
    check_superadditive(m.rank(), m.table_);
    return m;
}

GradedSeriesModel GradedSeriesModel::tabulated_from_json(const nlohmann::json& j) {
    const unsigned d = j.at("d").get<unsigned>();
    std::map<unsigned, std::vector<LogScalar>> table;
    for (const auto& [key, entry] : j.at("weights").items()) {
        const unsigned n = static_cast<unsigned>(std::stoul(key));
        const auto monos = monomials_of_degree(d + 1, n);
        std::vector<LogScalar> w;
        w.reserve(monos.size());
        for (const auto& a : monos) {
            const auto it = entry.find(a.label());
            if (it == entry.end())
                throw std::invalid_argument("weight table misses monomial " + a.label() +
                                            " in degree " + key);
            w.push_back(LogScalar(parse_rational(it->get<std::string>())));
        }
        table.emplace(n, std::move(w));
    }
    return tabulated(d, std::move(table));
}

const std::vector<Rational>& GradedSeriesModel::tau() const {
    if (!tau_) throw std::logic_error("tau() on a tabulated model");
    return *tau_;
}

bool GradedSeriesModel::has_degree(unsigned n) const {
    if (n == 0) return false;
    return tau_ ? true : table_.count(n) > 0;
}

unsigned GradedSeriesModel::max_degree() const {
    if (tau_) return UINT_MAX;
    return table_.empty() ? 0 : table_.rbegin()->first;
}

LogScalar GradedSeriesModel::weight(unsigned n, const Monomial& a) const {
    if (a.exponents.size() != rank())
        throw std::invalid_argument("weight: monomial rank mismatch");
    if (a.degree() != n) throw std::invalid_argument("weight: degree mismatch");
    if (tau_) {
        Rational v = 0;
        for (std::size_t i = 0; i < tau_->size(); ++i)
            if (a.exponents[i]) v += (*tau_)[i] * a.exponents[i];
        return LogScalar(v);
    }
    const auto it = table_.find(n);
    if (it == table_.end())
        throw std::invalid_argument("weight: degree " + std::to_string(n) + " not tabulated");
    const auto monos = monomials_of_degree(rank(), n);
    for (std::size_t k = 0; k < monos.size(); ++k)
        if (monos[k] == a) return it->second[k];
    throw std::logic_error("weight: monomial not found");
}

std::vector<LogScalar> GradedSeriesModel::piece_weights(unsigned n) const {
    if (!has_degree(n)) throw std::invalid_argument("piece_weights: degree unavailable");
    if (!tau_) return table_.at(n);
    std::vector<LogScalar> out;
    const auto monos = monomials_of_degree(rank(), n);
    out.reserve(monos.size());
    for (const auto& a : monos) out.push_back(weight(n, a));
    return out;
}

LogScalar spectral_weight(const GradedSeriesModel& series, unsigned n, const Monomial& a,
                          unsigned n_power_max) {
    if (n_power_max < 1) throw std::invalid_argument("spectral_weight: N_max >= 1 required");
    if (a.degree() != n) throw std::invalid_argument("spectral_weight: degree mismatch");
    bool found = false;
    LogScalar best;
    for (unsigned N = 1; N <= n_power_max; ++N) {
        if (!series.has_degree(n * N)) continue;
        Monomial powered = a;
        for (auto& e : powered.exponents) e *= N;
        LogScalar v = series.weight(n * N, powered) * Rational(1, N);
        if (!found || compare(v, best) > 0) best = std::move(v);
        found = true;
    }
    if (!found) throw std::invalid_argument("spectral_weight: no usable power degree");
    return best;
}

RFiltration piece_filtration(const GradedSeriesModel& series, unsigned n) {
    return RFiltration::from_values(series.piece_weights(n));
}

namespace {

std::vector<unsigned long> series_ladder(const GradedSeriesModel& series, unsigned n_max) {
    if (!series.is_linear()) n_max = std::min(n_max, series.max_degree());
    if (n_max < 4) throw std::invalid_argument("no usable degrees up to n_max");
    auto ladder = doubling_ladder(n_max, std::max(4u, series.rank() - 1));
    std::erase_if(ladder, [&](unsigned long n) { return !series.has_degree(static_cast<unsigned>(n)); });
    if (ladder.empty()) throw std::invalid_argument("no usable degrees up to n_max");
    return ladder;
}

} // namespace

VolumeReport asymptotic_max_slope(const GradedSeriesModel& series, unsigned n_max) {
    std::vector<std::pair<unsigned long, double>> seq;
    for (unsigned long n : series_ladder(series, n_max)) {
        const auto w = series.piece_weights(static_cast<unsigned>(n));
        double best = -HUGE_VAL;
        for (const auto& x : w) best = std::max(best, x.to_double());
        seq.emplace_back(n, best / static_cast<double>(n));
    }
    VolumeReport report(std::move(seq), "max-slope");
    if (series.is_linear()) {
        Rational best = series.tau().front();
        for (const auto& t : series.tau()) best = std::max(best, t);
        report.reference = to_double(best);
    }
    return report;
}

// ---------- exact slice fractions on the simplex, d <= 2 ----------

Rational simplex_slice_fraction(std::vector<Rational> v, const Rational& t) {
    if (v.empty() || v.size() > 3)
        throw std::invalid_argument("simplex_slice_fraction: 1 <= d+1 <= 3 vertex values");
    std::sort(v.begin(), v.end());
    if (t <= v.front()) return 1;
    if (t >= v.back()) return 0;
    if (v.size() == 2) return (v[1] - t) / (v[1] - v[0]);
    // d = 2, v0 <= t < v2 with v0 < v2
    if (t >= v[1]) // upper piece needs v1 < v2
        return (v[2] - t) * (v[2] - t) / ((v[2] - v[0]) * (v[2] - v[1]));
    return 1 - (t - v[0]) * (t - v[0]) / ((v[1] - v[0]) * (v[2] - v[0]));
}

namespace {

// F as polynomial pieces: 1 on (-inf, b0], listed pieces on [b_i, b_{i+1}],
// 0 on [b_last, inf). Coefficients are (c0, c1, c2) of c0 + c1 t + c2 t^2.
struct SlicePieces {
    std::vector<Rational> breaks;
    std::vector<std::array<Rational, 3>> polys;
};

SlicePieces slice_pieces(std::vector<Rational> v) {
    if (v.empty() || v.size() > 3) throw std::invalid_argument("slice_pieces: 1 <= d+1 <= 3");
    std::sort(v.begin(), v.end());
    SlicePieces out;
    if (v.size() == 1 || v.front() == v.back()) {
        out.breaks = {v.front()};
        return out;
    }
    if (v.size() == 2) {
        out.breaks = {v[0], v[1]};
        const Rational den = v[1] - v[0];
        out.polys.push_back({v[1] / den, Rational(-1) / den, Rational(0)});
        return out;
    }
    // d = 2
    const Rational &v0 = v[0], &v1 = v[1], &v2 = v[2];
    if (v0 < v1) {
        out.breaks.push_back(v0);
        const Rational den = (v1 - v0) * (v2 - v0);
        // 1 - (t - v0)^2/den
        out.polys.push_back({1 - v0 * v0 / den, 2 * v0 / den, Rational(-1) / den});
    }
    if (v1 < v2) {
        out.breaks.push_back(v1);
        const Rational den = (v2 - v0) * (v2 - v1);
        // (v2 - t)^2/den
        out.polys.push_back({v2 * v2 / den, -2 * v2 / den, Rational(1) / den});
    }
    out.breaks.push_back(v2);
    return out;
}

Rational poly_integral(const std::array<Rational, 3>& c, const Rational& lo, const Rational& hi) {
    auto anti = [&](const Rational& t) {
        return c[0] * t + c[1] * t * t / 2 + c[2] * t * t * t / 3;
    };
    return anti(hi) - anti(lo);
}

// integral over [lo, hi] of F (when complement == false) or 1 - F.
Rational integrate_slice(const SlicePieces& p, const Rational& lo, const Rational& hi,
                         bool complement) {
    if (lo >= hi) return 0;
    Rational total = 0;
    // region before the first break: F = 1
    if (lo < p.breaks.front() && !complement) total += std::min(hi, p.breaks.front()) - lo;
    // region after the last break: F = 0
    if (hi > p.breaks.back() && complement) total += hi - std::max(lo, p.breaks.back());
    for (std::size_t i = 0; i + 1 < p.breaks.size(); ++i) {
        const Rational a = std::max(lo, p.breaks[i]);
        const Rational b = std::min(hi, p.breaks[i + 1]);
        if (a >= b) continue;
        Rational seg = poly_integral(p.polys[i], a, b);
        if (complement) seg = (b - a) - seg;
        total += seg;
    }
    return total;
}

Rational huge_bound(const SlicePieces& p) {
    Rational m = 0;
    for (const auto& b : p.breaks) m = std::max(m, Rational(abs(b)));
    return m + 1;
}

} // namespace

Rational simplex_slice_positive_integral(std::vector<Rational> vertex_values) {
    const auto p = slice_pieces(std::move(vertex_values));
    const Rational top = std::max(Rational(0), p.breaks.back());
    return integrate_slice(p, 0, top, false);
}

Rational simplex_slice_mean(std::vector<Rational> vertex_values) {
    const auto p = slice_pieces(std::move(vertex_values));
    const Rational bound = huge_bound(p);
    // E[l] = int_0^inf F - int_{-inf}^0 (1 - F)
    return integrate_slice(p, 0, bound, false) - integrate_slice(p, -bound, 0, true);
}

VolumeReport volume_at(const GradedSeriesModel& series, const Rational& t, unsigned n_max) {
    std::vector<std::pair<unsigned long, double>> seq;
    const unsigned d = series.dim();
    for (unsigned long n : series_ladder(series, n_max)) {
        const auto monos = monomials_of_degree(series.rank(), static_cast<unsigned>(n));
        const LogScalar threshold(t * Rational(n));
        const unsigned n_power = series.is_linear()
                                     ? 1u
                                     : std::max(1u, series.max_degree() / static_cast<unsigned>(n));
        std::size_t count = 0;
        for (const auto& a : monos) {
            const LogScalar w = series.is_linear()
                                    ? series.weight(static_cast<unsigned>(n), a)
                                    : spectral_weight(series, static_cast<unsigned>(n), a, n_power);
            if (compare(w, threshold) >= 0) ++count;
        }
        double value = static_cast<double>(count);
        for (unsigned k = 1; k <= d; ++k) value *= static_cast<double>(k) / static_cast<double>(n);
        seq.emplace_back(n, value);
    }
    VolumeReport report(std::move(seq), "slice-count");
    if (series.is_linear())
        report.reference = to_double(simplex_slice_fraction(series.tau(), t));
    return report;
}

namespace {

VolumePair volume_routes(const GradedSeriesModel& series, unsigned n_max, bool positive_part_route) {
    const unsigned d = series.dim();
    std::vector<std::pair<unsigned long, double>> seq;
    for (unsigned long n : series_ladder(series, n_max)) {
        LogScalar total;
        for (const auto& w : series.piece_weights(static_cast<unsigned>(n)))
            total += positive_part_route ? positive_part(w) : w;
        seq.emplace_back(n, total.to_double() / normalizer(d, n));
    }
    VolumePair pair;
    pair.route_a = VolumeReport(std::move(seq), positive_part_route ? "deg+" : "deg");

    if (series.is_linear()) {
        const Rational exact =
            Rational(d + 1) * (positive_part_route ? simplex_slice_positive_integral(series.tau())
                                                   : simplex_slice_mean(series.tau()));
        pair.route_b_exact = exact;
        pair.route_b = to_double(exact);
    } else {
        // step function from the largest tabulated piece, trapezoid step 1/64
        const unsigned n = series.max_degree();
        const auto monos = monomials_of_degree(series.rank(), n);
        std::vector<double> w;
        w.reserve(monos.size());
        for (const auto& a : monos)
            w.push_back(spectral_weight(series, n, a, 1).to_double() / n);
        const double lo = *std::min_element(w.begin(), w.end()) - 1.0;
        const double hi = *std::max_element(w.begin(), w.end()) + 1.0;
        double scale = 1.0; // count -> count * d!/n^d, the vol(V^t) estimator
        for (unsigned k = 1; k <= d; ++k) scale *= static_cast<double>(k) / n;
        auto vol_t = [&](double t) {
            std::size_t c = 0;
            for (double x : w)
                if (x >= t) ++c;
            return scale * static_cast<double>(c);
        };
        const double step = 1.0 / 64.0;
        const double full = scale * static_cast<double>(monos.size());
        double pos = 0.0, neg = 0.0;
        for (double t = 0.0; t < hi; t += step) pos += step * 0.5 * (vol_t(t) + vol_t(t + step));
        for (double t = lo; t < 0.0; t += step)
            neg += step * 0.5 * (2.0 * full - vol_t(t) - vol_t(t + step));
        pair.route_b = (d + 1) * (positive_part_route ? pos : pos - neg);
    }
    return pair;
}

} // namespace

VolumePair arithmetic_volume(const GradedSeriesModel& series, unsigned n_max) {
    if (n_max < 4) throw std::invalid_argument("arithmetic_volume: n_max >= 4");
    return volume_routes(series, n_max, true);
}

VolumePair chi_volume(const GradedSeriesModel& series, unsigned n_max) {
    if (n_max < 4) throw std::invalid_argument("chi_volume: n_max >= 4");
    return volume_routes(series, n_max, false);
}

BundleGradedSeries graded_from_bundle(const SplitAdelicBundle& b, unsigned n_max) {
    if (b.dim() == 0) throw std::invalid_argument("graded_from_bundle: zero bundle");
    if (b.dim() > 3) throw std::invalid_argument("graded_from_bundle: dim <= 3 (d <= 2)");
    const unsigned d = static_cast<unsigned>(b.dim()) - 1;

    BundleGradedSeries out;
    std::map<unsigned, std::vector<LogScalar>> table;
    for (unsigned n = 1; n <= n_max; ++n) {
        out.pieces.push_back(symmetric_power_bundle(b, n));
        table.emplace(n, out.pieces.back().line_degrees());
    }
    out.series = GradedSeriesModel::tabulated_unchecked(d, std::move(table));

    // f-submultiplicativity of the HN-cast weights
    const double nu = to_double(b.curve().arch_mass());
    auto f = [&](unsigned n) {
        return 1.5 * nu * std::log(to_double(Rational(monomial_count(d + 1, n))));
    };
    out.submultiplicative = true;
    for (unsigned n = 1; n <= n_max && out.submultiplicative; ++n)
        for (unsigned m = n; n + m <= n_max && out.submultiplicative; ++m) {
            const auto an = monomials_of_degree(d + 1, n);
            const auto am = monomials_of_degree(d + 1, m);
            for (std::size_t i = 0; i < an.size() && out.submultiplicative; ++i)
                for (std::size_t j = 0; j < am.size(); ++j) {
                    Monomial sum = an[i];
                    for (std::size_t c = 0; c < sum.exponents.size(); ++c)
                        sum.exponents[c] += am[j].exponents[c];
                    const double lhs = out.series.weight(n + m, sum).to_double();
                    const double rhs = out.series.weight(n, an[i]).to_double() +
                                       out.series.weight(m, am[j]).to_double() - f(n) - f(m);
                    if (lhs < rhs - 1e-9) {
                        out.submultiplicative = false;
                        break;
                    }
                }
        }

    out.chi = chi_volume(out.series, n_max).route_a;
    return out;
}

} // namespace adelic
