#pragma once

#include "adelic/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace adelic {

/// Exact logarithmic quantity  q0 + sum_p q_p * ln(p)  with rational
/// coefficients over finitely many primes. Carries every log-norm and
/// degree in the library; floats only appear at output boundaries.
///
/// Canonical form: no zero coefficients are stored (std::map keeps the
/// primes strictly increasing), so structural equality is exact equality.
class LogScalar {
public:
    LogScalar() = default;
    explicit LogScalar(Rational constant) : constant_(std::move(constant)) {}

    static LogScalar ln_prime(std::uint64_t p, Rational coefficient);
    /// ln(a) of a positive rational, decomposed over its prime factorization.
    static LogScalar ln_rational(const Rational& a);
    /// ln(n!) via Legendre's formula.
    static LogScalar ln_factorial(unsigned long n);

    const Rational& constant() const { return constant_; }
    const std::map<std::uint64_t, Rational>& prime_terms() const { return terms_; }

    bool is_zero() const { return constant_ == 0 && terms_.empty(); }

    LogScalar& operator+=(const LogScalar& other);
    LogScalar& operator-=(const LogScalar& other);
    LogScalar& operator*=(const Rational& scale);
    LogScalar operator-() const;

    friend LogScalar operator+(LogScalar a, const LogScalar& b) { return a += b; }
    friend LogScalar operator-(LogScalar a, const LogScalar& b) { return a -= b; }
    friend LogScalar operator*(LogScalar a, const Rational& s) { return a *= s; }
    friend LogScalar operator*(const Rational& s, LogScalar a) { return a *= s; }

    friend bool operator==(const LogScalar&, const LogScalar&) = default;

    double to_double() const;

    std::string str() const;

private:
    Rational constant_;
    std::map<std::uint64_t, Rational> terms_;
};

/// Sign via float projection; exact zero detected structurally first.
int sign(const LogScalar& x);

/// Ordering comparator: exact ties, float projection otherwise.
int compare(const LogScalar& a, const LogScalar& b);

LogScalar abs(const LogScalar& x);
/// max(x, 0) with the zero branch decided by sign().
LogScalar positive_part(const LogScalar& x);
const LogScalar& max(const LogScalar& a, const LogScalar& b);
const LogScalar& min(const LogScalar& a, const LogScalar& b);

} // namespace adelic
