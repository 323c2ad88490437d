#include "adelic/log_scalar.hpp"

#include "adelic/number_theory.hpp"

#include <cmath>
#include <sstream>

namespace adelic {

LogScalar LogScalar::ln_prime(std::uint64_t p, Rational coefficient) {
    LogScalar x;
    if (coefficient != 0) x.terms_.emplace(p, std::move(coefficient));
    return x;
}

LogScalar LogScalar::ln_rational(const Rational& a) {
    if (a <= 0) throw std::domain_error("ln_rational: argument must be positive");
    LogScalar x;
    for (const auto& [p, e] : factorize(numerator(a))) x.terms_[p] += e;
    for (const auto& [p, e] : factorize(denominator(a))) {
        auto it = x.terms_.find(p);
        Rational c = (it == x.terms_.end() ? Rational(0) : it->second) - e;
        if (c == 0)
            x.terms_.erase(p);
        else
            x.terms_[p] = std::move(c);
    }
    return x;
}

LogScalar LogScalar::ln_factorial(unsigned long n) {
    LogScalar x;
    for (std::uint64_t p : primes_up_to(n))
        x.terms_.emplace(p, Rational(factorial_valuation(p, n)));
    return x;
}

LogScalar& LogScalar::operator+=(const LogScalar& other) {
    constant_ += other.constant_;
    for (const auto& [p, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LogScalar& LogScalar::operator-=(const LogScalar& other) {
    constant_ -= other.constant_;
    for (const auto& [p, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(p, Rational(-c));
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LogScalar& LogScalar::operator*=(const Rational& scale) {
    if (scale == 0) {
        constant_ = 0;
        terms_.clear();
        return *this;
    }
    constant_ *= scale;
    for (auto& [p, c] : terms_) c *= scale;
    return *this;
}

LogScalar LogScalar::operator-() const {
    LogScalar x(*this);
    x *= Rational(-1);
    return x;
}

double LogScalar::to_double() const {
    double v = adelic::to_double(constant_);
    for (const auto& [p, c] : terms_) v += adelic::to_double(c) * std::log(static_cast<double>(p));
    return v;
}

std::string LogScalar::str() const {
    std::ostringstream os;
    bool first = true;
    if (constant_ != 0 || terms_.empty()) {
        os << rational_to_string(constant_);
        first = false;
    }
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << rational_to_string(c) << ")ln" << p;
        first = false;
    }
    return os.str();
}

int sign(const LogScalar& x) {
    if (x.is_zero()) return 0;
    const double v = x.to_double();
    if (v > 0) return 1;
    if (v < 0) return -1;
    // float projection of a structurally nonzero value underflowed; fall back
    // to long-double evaluation before conceding a zero sign
    long double w = x.constant().convert_to<long double>();
    for (const auto& [p, c] : x.prime_terms())
        w += c.convert_to<long double>() * std::log(static_cast<long double>(p));
    return w > 0 ? 1 : (w < 0 ? -1 : 0);
}

int compare(const LogScalar& a, const LogScalar& b) {
    if (a == b) return 0;
    return sign(a - b);
}

LogScalar abs(const LogScalar& x) { return sign(x) < 0 ? -x : x; }

LogScalar positive_part(const LogScalar& x) { return sign(x) > 0 ? x : LogScalar(); }

const LogScalar& max(const LogScalar& a, const LogScalar& b) { return compare(a, b) < 0 ? b : a; }

const LogScalar& min(const LogScalar& a, const LogScalar& b) { return compare(a, b) < 0 ? a : b; }

} // namespace adelic
