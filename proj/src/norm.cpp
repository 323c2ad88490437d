#include "adelic/norm.hpp"

#include "adelic/number_theory.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adelic {

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    return d;
}

std::string Monomial::label() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << ',';
        os << exponents[i];
    }
    return os.str();
}

Monomial parse_monomial(const std::string& label) {
    Monomial m;
    std::istringstream is(label);
    std::string part;
    while (std::getline(is, part, ',')) {
        if (part.empty()) throw std::invalid_argument("bad monomial label '" + label + "'");
        m.exponents.push_back(static_cast<unsigned>(std::stoul(part)));
    }
    if (m.exponents.empty()) throw std::invalid_argument("bad monomial label '" + label + "'");
    return m;
}

namespace {

void enumerate(unsigned rank, unsigned degree, std::vector<unsigned>& current,
               std::vector<Monomial>& out) {
    if (current.size() + 1 == rank) {
        current.push_back(degree);
        out.push_back(Monomial{current});
        current.pop_back();
        return;
    }
    for (unsigned e = degree; e + 1 > 0; --e) {
        current.push_back(e);
        enumerate(rank, degree - e, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(unsigned rank, unsigned degree) {
    std::vector<Monomial> out;
    if (rank == 0) {
        if (degree == 0) out.push_back(Monomial{{}});
        return out;
    }
    std::vector<unsigned> current;
    current.reserve(rank);
    enumerate(rank, degree, current, out);
    return out;
}

DiagonalNorm::DiagonalNorm(NormFlavor flavor, std::vector<std::string> labels,
                           std::vector<LogScalar> weights)
    : flavor_(flavor), labels_(std::move(labels)), weights_(std::move(weights)) {
    if (labels_.size() != weights_.size())
        throw std::invalid_argument("DiagonalNorm: labels/weights size mismatch");
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw std::invalid_argument("DiagonalNorm: duplicate label '" + l + "'");
}

DiagonalNorm DiagonalNorm::unit(NormFlavor flavor, unsigned dim, const std::string& stem) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (unsigned i = 0; i < dim; ++i) labels.push_back(stem + std::to_string(i));
    return DiagonalNorm(flavor, std::move(labels), std::vector<LogScalar>(dim));
}

bool DiagonalNorm::is_unit() const {
    for (const auto& w : weights_)
        if (!w.is_zero()) return false;
    return true;
}

DiagonalNorm dual_norm(const DiagonalNorm& n) {
    std::vector<LogScalar> w;
    w.reserve(n.dim());
    for (const auto& c : n.weights()) w.push_back(-c);
    return DiagonalNorm(n.flavor(), n.labels(), std::move(w));
}

DiagonalNorm tensor_norm(const DiagonalNorm& a, const DiagonalNorm& b) {
    if (a.flavor() != b.flavor()) throw std::invalid_argument("tensor_norm: flavor mismatch");
    std::vector<std::string> labels;
    std::vector<LogScalar> weights;
    labels.reserve(a.dim() * b.dim());
    weights.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            labels.push_back("(" + a.labels()[i] + "," + b.labels()[j] + ")");
            weights.push_back(a.weight(i) + b.weight(j));
        }
    return DiagonalNorm(a.flavor(), std::move(labels), std::move(weights));
}

DiagonalNorm direct_sum_norm(const DiagonalNorm& a, const DiagonalNorm& b) {
    if (a.flavor() != b.flavor()) throw std::invalid_argument("direct_sum_norm: flavor mismatch");
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<LogScalar> weights = a.weights();
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
    return DiagonalNorm(a.flavor(), std::move(labels), std::move(weights));
}

DiagonalNorm symmetric_power_norm(const DiagonalNorm& n, unsigned delta) {
    const auto monos = monomials_of_degree(static_cast<unsigned>(n.dim()), delta);
    std::vector<std::string> labels;
    std::vector<LogScalar> weights;
    labels.reserve(monos.size());
    weights.reserve(monos.size());
    const LogScalar ln_delta_fact = LogScalar::ln_factorial(delta);
    for (const auto& a : monos) {
        LogScalar w;
        for (std::size_t i = 0; i < a.exponents.size(); ++i)
            if (a.exponents[i]) w += n.weight(i) * Rational(a.exponents[i]);
        if (n.flavor() == NormFlavor::hermitian) {
            LogScalar fact;
            for (unsigned e : a.exponents)
                if (e > 1) fact += LogScalar::ln_factorial(e);
            fact -= ln_delta_fact;
            w += fact * Rational(1, 2);
        }
        labels.push_back(a.label());
        weights.push_back(std::move(w));
    }
    return DiagonalNorm(n.flavor(), std::move(labels), std::move(weights));
}

LogScalar determinant_log(const DiagonalNorm& n) {
    LogScalar d;
    for (const auto& c : n.weights()) d += c;
    return d;
}

LogScalar norm_distance(const DiagonalNorm& a, const DiagonalNorm& b) {
    if (a.flavor() != b.flavor() || a.labels() != b.labels())
        throw std::invalid_argument("norm_distance: basis mismatch");
    LogScalar best;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        LogScalar d = abs(a.weight(i) - b.weight(i));
        if (compare(d, best) > 0) best = std::move(d);
    }
    return best;
}

LogScalar vector_log_norm_ultrametric(const DiagonalNorm& n, const Place& place,
                                      std::span<const Rational> coords) {
    if (n.flavor() != NormFlavor::ultrametric)
        throw std::invalid_argument("vector_log_norm_ultrametric: hermitian norm");
    if (coords.size() != n.dim()) throw std::invalid_argument("vector_log_norm: dimension mismatch");
    bool found = false;
    LogScalar best;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        LogScalar v = log_abs(coords[i], place) + n.weight(i);
        if (!found || compare(v, best) > 0) best = std::move(v);
        found = true;
    }
    if (!found) throw std::domain_error("vector_log_norm of the zero vector");
    return best;
}

double vector_log_norm_hermitian(const DiagonalNorm& n, std::span<const Rational> coords) {
    if (n.flavor() != NormFlavor::hermitian)
        throw std::invalid_argument("vector_log_norm_hermitian: ultrametric norm");
    if (coords.size() != n.dim()) throw std::invalid_argument("vector_log_norm: dimension mismatch");
    double sq = 0.0;
    bool found = false;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        found = true;
        const double x = to_double(coords[i]);
        sq += x * x * std::exp(2.0 * n.weight(i).to_double());
    }
    if (!found) throw std::domain_error("vector_log_norm of the zero vector");
    return 0.5 * std::log(sq);
}

double vector_log_norm(const DiagonalNorm& n, const Place& place, std::span<const Rational> coords) {
    if (n.flavor() == NormFlavor::ultrametric)
        return vector_log_norm_ultrametric(n, place, coords).to_double();
    return vector_log_norm_hermitian(n, coords);
}

LogScalar sym_image_log_norm(const Monomial& a, const DiagonalNorm& unit_norm, const Place& place) {
    if (!unit_norm.is_unit()) throw std::invalid_argument("sym_image_log_norm: norm must be unit");
    if (a.exponents.size() != unit_norm.dim())
        throw std::invalid_argument("sym_image_log_norm: rank mismatch");
    const unsigned delta = a.degree();
    // sym(e^a) = a_1!...a_r! * (sum over the delta!/(a_1!..a_r!) distinct
    // arrangements of the split tensors), an orthogonal expansion.
    if (unit_norm.flavor() == NormFlavor::hermitian) {
        // Euclidean norm: a! * sqrt(delta!/a!) = sqrt(a! delta!)
        LogScalar ln_a_fact;
        for (unsigned e : a.exponents)
            if (e > 1) ln_a_fact += LogScalar::ln_factorial(e);
        return (ln_a_fact + LogScalar::ln_factorial(delta)) * Rational(1, 2);
    }
    // ultrametric: max coefficient modulus |a_1!...a_r!|_place
    Integer coeff = 1;
    for (unsigned e : a.exponents) coeff *= factorial(e);
    return log_abs(Rational(coeff), place);
}

} // namespace adelic
