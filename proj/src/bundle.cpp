#include "adelic/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace adelic {

RFiltration RFiltration::from_values(std::vector<LogScalar> values) {
    std::stable_sort(values.begin(), values.end(),
                     [](const LogScalar& a, const LogScalar& b) { return compare(a, b) > 0; });
    RFiltration f;
    for (auto& v : values) {
        if (!f.jumps_.empty() && f.jumps_.back().value == v)
            ++f.jumps_.back().multiplicity;
        else
            f.jumps_.push_back({std::move(v), 1});
    }
    return f;
}

std::size_t RFiltration::dim() const {
    std::size_t d = 0;
    for (const auto& j : jumps_) d += j.multiplicity;
    return d;
}

std::size_t RFiltration::dim_at(double t) const {
    std::size_t d = 0;
    for (const auto& j : jumps_)
        if (j.value.to_double() >= t) d += j.multiplicity;
    return d;
}

LogScalar RFiltration::positive_mass() const {
    LogScalar total;
    for (const auto& j : jumps_) {
        if (sign(j.value) <= 0) break; // jumps are decreasing
        total += j.value * Rational(j.multiplicity);
    }
    return total;
}

LogScalar RFiltration::first_moment() const {
    LogScalar total;
    for (const auto& j : jumps_) total -= j.value * Rational(j.multiplicity);
    return total;
}

const LogScalar& RFiltration::max_value() const {
    if (jumps_.empty()) throw std::domain_error("RFiltration: empty filtration");
    return jumps_.front().value;
}

const LogScalar& RFiltration::min_value() const {
    if (jumps_.empty()) throw std::domain_error("RFiltration: empty filtration");
    return jumps_.back().value;
}

RFiltration RFiltration::symmetric_power(unsigned delta) const {
    // multiset of sum_i b_i mu_i over compositions b of delta weighted by the
    // product of multiplicity-counts C(m_i + b_i - 1, b_i)
    std::vector<LogScalar> values;
    const unsigned r = static_cast<unsigned>(jumps_.size());
    std::vector<Monomial> comps = monomials_of_degree(r, delta);
    for (const auto& b : comps) {
        LogScalar v;
        Integer count = 1;
        for (unsigned i = 0; i < r; ++i) {
            if (b.exponents[i]) v += jumps_[i].value * Rational(b.exponents[i]);
            count *= binomial(jumps_[i].multiplicity + b.exponents[i] - 1, b.exponents[i]);
        }
        const auto reps = count.convert_to<std::size_t>();
        for (std::size_t k = 0; k < reps; ++k) values.push_back(v);
    }
    return from_values(std::move(values));
}

SplitAdelicBundle::SplitAdelicBundle(AdelicCurve curve, std::vector<std::string> labels,
                                     std::map<std::string, DiagonalNorm> norms_by_place)
    : curve_(std::move(curve)), labels_(std::move(labels)), norms_(std::move(norms_by_place)) {
    for (const auto& pl : curve_.places()) {
        auto it = norms_.find(pl.id);
        if (it == norms_.end())
            throw std::invalid_argument("SplitAdelicBundle: missing norm at place '" + pl.id + "'");
        const DiagonalNorm& n = it->second;
        if (n.labels() != labels_)
            throw std::invalid_argument("SplitAdelicBundle: norm basis mismatch at '" + pl.id + "'");
        const bool want_hermitian = pl.kind == PlaceKind::arch;
        if ((n.flavor() == NormFlavor::hermitian) != want_hermitian)
            throw std::invalid_argument("SplitAdelicBundle: flavor does not match place '" + pl.id + "'");
    }
    if (norms_.size() != curve_.places().size())
        throw std::invalid_argument("SplitAdelicBundle: norms at unknown places");
}

const DiagonalNorm& SplitAdelicBundle::norm_at(const std::string& place_id) const {
    auto it = norms_.find(place_id);
    if (it == norms_.end()) throw std::invalid_argument("no norm at place '" + place_id + "'");
    return it->second;
}

std::vector<LogScalar> SplitAdelicBundle::line_degrees() const {
    std::vector<LogScalar> degrees(dim());
    for (const auto& pl : curve_.places()) {
        if (pl.mass == 0) continue;
        const DiagonalNorm& n = norm_at(pl.id);
        for (std::size_t i = 0; i < dim(); ++i) degrees[i] -= n.weight(i) * pl.mass;
    }
    return degrees;
}

LogScalar SplitAdelicBundle::arakelov_degree() const {
    LogScalar total;
    for (const auto& d : line_degrees()) total += d;
    return total;
}

LogScalar SplitAdelicBundle::slope() const {
    if (dim() == 0) throw std::domain_error("slope of the zero bundle");
    return arakelov_degree() * Rational(1, static_cast<unsigned long>(dim()));
}

RFiltration SplitAdelicBundle::hn_filtration() const {
    if (dim() == 0) throw std::domain_error("hn_filtration of the zero bundle");
    return RFiltration::from_values(line_degrees());
}

LogScalar SplitAdelicBundle::max_slope() const { return hn_filtration().max_value(); }

LogScalar SplitAdelicBundle::min_slope() const { return hn_filtration().min_value(); }

LogScalar SplitAdelicBundle::positive_degree() const {
    LogScalar total;
    for (const auto& d : line_degrees()) total += positive_part(d);
    return total;
}

LogScalar SplitAdelicBundle::lambda_max() const {
    const auto ds = line_degrees();
    if (ds.empty()) throw std::domain_error("lambda_max of the zero bundle");
    LogScalar best = ds.front();
    for (std::size_t i = 1; i < ds.size(); ++i)
        if (compare(ds[i], best) > 0) best = ds[i];
    return best;
}

double SplitAdelicBundle::vector_degree(std::span<const Rational> coords) const {
    double total = 0.0;
    for (const auto& pl : curve_.places()) {
        if (pl.mass == 0) continue;
        total -= to_double(pl.mass) * vector_log_norm(norm_at(pl.id), pl, coords);
    }
    return total;
}

SplitAdelicBundle unit_bundle(const AdelicCurve& curve, unsigned dim) {
    std::vector<std::string> labels;
    for (unsigned i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    std::map<std::string, DiagonalNorm> norms;
    for (const auto& pl : curve.places()) {
        const NormFlavor fl =
            pl.kind == PlaceKind::arch ? NormFlavor::hermitian : NormFlavor::ultrametric;
        norms.emplace(pl.id, DiagonalNorm(fl, labels, std::vector<LogScalar>(dim)));
    }
    return SplitAdelicBundle(curve, std::move(labels), std::move(norms));
}

SplitAdelicBundle dual_bundle(const SplitAdelicBundle& b) {
    std::map<std::string, DiagonalNorm> norms;
    for (const auto& [id, n] : b.norms()) norms.emplace(id, dual_norm(n));
    return SplitAdelicBundle(b.curve(), b.labels(), std::move(norms));
}

SplitAdelicBundle tensor_bundle(const SplitAdelicBundle& a, const SplitAdelicBundle& b) {
    if (!(a.curve() == b.curve())) throw std::invalid_argument("tensor_bundle: curve mismatch");
    std::map<std::string, DiagonalNorm> norms;
    std::vector<std::string> labels;
    for (const auto& [id, n] : a.norms()) {
        DiagonalNorm t = tensor_norm(n, b.norm_at(id));
        if (labels.empty()) labels = t.labels();
        norms.emplace(id, std::move(t));
    }
    return SplitAdelicBundle(a.curve(), std::move(labels), std::move(norms));
}

SplitAdelicBundle symmetric_power_bundle(const SplitAdelicBundle& b, unsigned delta) {
    std::map<std::string, DiagonalNorm> norms;
    std::vector<std::string> labels;
    for (const auto& [id, n] : b.norms()) {
        DiagonalNorm s = symmetric_power_norm(n, delta);
        if (labels.empty()) labels = s.labels();
        norms.emplace(id, std::move(s));
    }
    return SplitAdelicBundle(b.curve(), std::move(labels), std::move(norms));
}

DiagonalNorm cast_to_trivial(const SplitAdelicBundle& b) {
    if (b.dim() == 0) throw std::domain_error("cast_to_trivial of the zero bundle");
    std::vector<LogScalar> weights;
    for (const auto& d : b.line_degrees()) weights.push_back(-d);
    return DiagonalNorm(NormFlavor::ultrametric, b.labels(), std::move(weights));
}

SplitAdelicBundle bundle_over_s0(const DiagonalNorm& trivial_norm) {
    if (trivial_norm.flavor() != NormFlavor::ultrametric)
        throw std::invalid_argument("bundle_over_s0: ultrametric norm required");
    AdelicCurve s0 = trivial_curve_s0();
    std::map<std::string, DiagonalNorm> norms;
    norms.emplace(s0.places().front().id, trivial_norm);
    return SplitAdelicBundle(std::move(s0), trivial_norm.labels(), std::move(norms));
}

namespace {

// ln(det norm) of the plane spanned by two integer vectors, at one place:
// the norm of v w in the exterior square, whose basis e_i ^ e_j is
// orthogonal with weights c_i + c_j.
double wedge_log_norm(const DiagonalNorm& n, const Place& pl, std::span<const long> v,
                      std::span<const long> w) {
    const std::size_t r = n.dim();
    bool ultra = n.flavor() == NormFlavor::ultrametric;
    bool found = false;
    LogScalar best;
    double sq = 0.0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const long minor = v[i] * w[j] - v[j] * w[i];
            if (minor == 0) continue;
            if (ultra) {
                LogScalar t = log_abs(Rational(minor), pl) + n.weight(i) + n.weight(j);
                if (!found || compare(t, best) > 0) best = std::move(t);
            } else {
                const double m = static_cast<double>(minor);
                sq += m * m * std::exp(2.0 * (n.weight(i) + n.weight(j)).to_double());
            }
            found = true;
        }
    if (!found) throw std::domain_error("wedge of dependent vectors");
    return ultra ? best.to_double() : 0.5 * std::log(sq);
}

} // namespace

double hn_bruteforce_oracle(const SplitAdelicBundle& b, long coord_bound) {
    const std::size_t r = b.dim();
    if (r == 0 || r > 3) throw std::invalid_argument("hn_bruteforce_oracle: dim must be 1..3");
    if (coord_bound < 1) throw std::invalid_argument("hn_bruteforce_oracle: bound must be >= 1");

    std::vector<std::vector<long>> vectors;
    std::vector<long> v(r, -coord_bound);
    for (;;) {
        if (std::any_of(v.begin(), v.end(), [](long x) { return x != 0; })) {
            // normalize to one representative per line: first nonzero > 0, gcd 1
            std::vector<long> u = v;
            long g = 0;
            for (long x : u) g = std::gcd(g, std::abs(x));
            for (long& x : u) x /= g;
            auto first = std::find_if(u.begin(), u.end(), [](long x) { return x != 0; });
            if (*first > 0) {
                if (std::find(vectors.begin(), vectors.end(), u) == vectors.end())
                    vectors.push_back(std::move(u));
            }
        }
        std::size_t k = 0;
        while (k < r && v[k] == coord_bound) v[k++] = -coord_bound;
        if (k == r) break;
        ++v[k];
    }

    double best = b.slope().to_double(); // the full space is itself a subspace
    std::vector<Rational> coords(r);
    for (const auto& u : vectors) {
        for (std::size_t i = 0; i < r; ++i) coords[i] = u[i];
        best = std::max(best, b.vector_degree(coords));
    }
    if (r >= 2) {
        for (std::size_t i = 0; i < vectors.size(); ++i)
            for (std::size_t j = i + 1; j < vectors.size(); ++j) {
                // wedge == 0 <=> dependent; representatives are distinct lines
                double deg = 0.0;
                bool dependent = false;
                for (const auto& pl : b.curve().places()) {
                    if (pl.mass == 0) continue;
                    try {
                        deg -= to_double(pl.mass) *
                               wedge_log_norm(b.norm_at(pl.id), pl, vectors[i], vectors[j]);
                    } catch (const std::domain_error&) {
                        dependent = true;
                        break;
                    }
                }
                if (!dependent) best = std::max(best, deg / 2.0);
            }
    }
    return best;
}

long BundleRng::next_long(long lo, long hi) {
    // modulo draw: stable across standard libraries, bias immaterial here
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine() % span);
}

SplitAdelicBundle random_bundle(BundleRng& rng, const AdelicCurve& curve, unsigned max_dim) {
    static const std::uint64_t kPrimes[4] = {2, 3, 5, 7};
    const auto dim = static_cast<unsigned>(rng.next_long(1, max_dim));
    std::vector<std::string> labels;
    for (unsigned i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    std::map<std::string, DiagonalNorm> norms;
    for (const auto& pl : curve.places()) {
        std::vector<LogScalar> weights;
        weights.reserve(dim);
        for (unsigned i = 0; i < dim; ++i) {
            const Rational q(rng.next_long(-3, 3), rng.next_long(1, 2));
            const std::uint64_t p = kPrimes[rng.next_long(0, 3)];
            weights.push_back(LogScalar::ln_prime(p, q));
        }
        const NormFlavor fl =
            pl.kind == PlaceKind::arch ? NormFlavor::hermitian : NormFlavor::ultrametric;
        norms.emplace(pl.id, DiagonalNorm(fl, labels, std::move(weights)));
    }
    return SplitAdelicBundle(curve, std::move(labels), std::move(norms));
}

} // namespace adelic
