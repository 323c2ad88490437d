#include "adelic/partitions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace adelic {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("Partition: zero part");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

unsigned Partition::weight() const {
    unsigned w = 0;
    for (unsigned p : parts_) w += p;
    return w;
}

Partition Partition::transpose() const {
    std::vector<unsigned> cols;
    if (parts_.empty()) return Partition();
    cols.resize(parts_[0]);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) ++cols[j];
    return Partition(std::move(cols));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void enumerate_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(current));
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        enumerate_partitions(remaining - p, p, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(unsigned delta) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    enumerate_partitions(delta, delta == 0 ? 1 : delta, current, out);
    return out;
}

Integer schur_dimension(const Partition& lambda, unsigned r) {
    if (r < 1) throw std::invalid_argument("schur_dimension: r >= 1");
    if (lambda.length() == 0) return 1;
    if (lambda.part(0) > r) return 0; // L^lambda needs Lambda^{lambda_1}, so lambda_1 <= r
    const Partition mu = lambda.transpose(); // standard Schur functor of the transpose
    const Partition mu_t = lambda;           // transpose of mu
    Rational dim = 1;
    for (std::size_t i = 0; i < mu.length(); ++i)
        for (unsigned j = 0; j < mu.part(i); ++j) {
            // cell (i, j), 0-based: content j - i, hook mu_i - j + mu~_j - i - 1
            const long content = static_cast<long>(j) - static_cast<long>(i);
            const long hook = static_cast<long>(mu.part(i)) - j +
                              static_cast<long>(mu_t.part(j)) - static_cast<long>(i) - 1;
            dim *= Rational(static_cast<long>(r) + content, hook);
        }
    if (denominator(dim) != 1) throw std::logic_error("hook content product is not integral");
    return numerator(dim);
}

Integer schur_dimension_jacobi_trudi(const Partition& lambda, unsigned r) {
    const Partition mu = lambda.transpose();
    const std::size_t l = mu.length();
    if (l == 0) return 1;
    // h_m(1^r) = C(r+m-1, m); determinant of the l x l Jacobi-Trudi matrix
    auto h = [&](long m) -> Rational {
        if (m < 0) return 0;
        return Rational(binomial(r + static_cast<unsigned long>(m) - 1,
                                 static_cast<unsigned long>(m)));
    };
    std::vector<std::vector<Rational>> a(l, std::vector<Rational>(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            a[i][j] = h(static_cast<long>(mu.part(i)) - static_cast<long>(i) +
                        static_cast<long>(j));
    // fraction-free enough at this size: exact rational Gaussian elimination
    Rational det = 1;
    for (std::size_t col = 0; col < l; ++col) {
        std::size_t pivot = col;
        while (pivot < l && a[pivot][col] == 0) ++pivot;
        if (pivot == l) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < l; ++row) {
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < l; ++j) a[row][j] -= f * a[col][j];
        }
    }
    if (denominator(det) != 1) throw std::logic_error("Jacobi-Trudi determinant not integral");
    return numerator(det);
}

CauchyCheck cauchy_dimension_check(unsigned r1, unsigned r2, unsigned delta) {
    if (r1 < 1 || r2 < 1) throw std::invalid_argument("cauchy_dimension_check: r1, r2 >= 1");
    CauchyCheck out;
    out.lhs = binomial(static_cast<unsigned long>(r1) * r2 + delta - 1, delta);
    out.rhs = 0;
    for (const auto& lambda : partitions_of(delta)) {
        CauchyRow row{lambda, schur_dimension(lambda, r1), schur_dimension(lambda, r2)};
        out.rhs += row.dim_v * row.dim_w;
        out.rows.push_back(std::move(row));
    }
    out.ok = out.lhs == out.rhs;
    return out;
}

bool slope_identity_check(unsigned r, unsigned delta) {
    if (r < 2) throw std::invalid_argument("slope_identity_check: r >= 2");
    Integer lhs = 0;
    for (unsigned a = 0; a <= delta; ++a)
        lhs += Integer(a) * binomial(r + delta - a - 2, r - 2);
    const Rational rhs = Rational(delta, r) * Rational(binomial(delta + r - 1, r - 1));
    return Rational(lhs) == rhs;
}

Integer subquotient_dimension(const RFiltration& filtration, unsigned delta, const LogScalar& t) {
    const auto& jumps = filtration.jumps();
    const unsigned r = static_cast<unsigned>(jumps.size());
    Integer total = 0;
    for (const auto& b : monomials_of_degree(r, delta)) {
        LogScalar value;
        for (unsigned i = 0; i < r; ++i)
            if (b.exponents[i]) value += jumps[i].value * Rational(b.exponents[i]);
        if (value == t) {
            Integer prod = 1;
            for (unsigned i = 0; i < r; ++i)
                prod *= binomial(jumps[i].multiplicity + b.exponents[i] - 1, b.exponents[i]);
            total += prod;
        }
    }
    return total;
}

SymmetricSlopeReport symmetric_slope_check(const SplitAdelicBundle& b, unsigned delta) {
    SymmetricSlopeReport out;
    const auto s = symmetric_power_bundle(b, delta);
    out.slope_equality_applicable = b.curve().arch_free();
    if (out.slope_equality_applicable)
        out.slope_equality = s.slope() == b.slope() * Rational(delta);
    out.max_slope = s.max_slope().to_double();
    out.max_slope_limit = delta * b.max_slope().to_double() +
                          to_double(b.curve().arch_mass()) * std::lgamma(delta + 1.0);
    out.max_slope_bound = out.max_slope <= out.max_slope_limit + 1e-9;
    return out;
}

} // namespace adelic
