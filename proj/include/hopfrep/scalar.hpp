#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace hopfrep {

/// Exact rational number (GMP-backed).
using Rational = mpq_class;

/// Laurent polynomial in the formal deformation parameter q with exact
/// rational coefficients.
///
/// Canonical form: no stored coefficient is zero, so equality is structural.
/// The zero scalar is the empty term map; the unit is {0 -> 1}. Values are
/// immutable in spirit: every operation returns a fresh canonical value.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(long value);               // NOLINT: implicit integer constants
    LaurentScalar(const Rational& value);    // NOLINT: implicit rational constants

    /// coeff * q^exponent
    static LaurentScalar q_power(long exponent, const Rational& coeff = Rational(1));

    static const LaurentScalar& zero();
    static const LaurentScalar& one();

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Exponent -> coefficient, ascending, zero coefficients stripped.
    const std::map<long, Rational>& terms() const { return terms_; }

    bool operator==(const LaurentScalar& other) const { return terms_ == other.terms_; }
    bool operator!=(const LaurentScalar& other) const { return !(*this == other); }

    LaurentScalar operator-() const;
    LaurentScalar operator+(const LaurentScalar& other) const;
    LaurentScalar operator-(const LaurentScalar& other) const;
    LaurentScalar operator*(const LaurentScalar& other) const;
    LaurentScalar& operator+=(const LaurentScalar& other);
    LaurentScalar& operator*=(const LaurentScalar& other);

    /// Value at q = q0, exact. Throws ZeroEvaluationPoint when q0 = 0 and a
    /// negative exponent is present.
    Rational eval(const Rational& q0) const;

    /// Rendering with exponents ascending, e.g. "3/2*q^-1 + 1 + q^2".
    std::string str() const;

    /// Total order for use as a map key (term-wise).
    bool less(const LaurentScalar& other) const;

private:
    void strip_zeros();

    std::map<long, Rational> terms_;
};

LaurentScalar operator*(const Rational& c, const LaurentScalar& s);

}  // namespace hopfrep
