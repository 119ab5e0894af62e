#include "hopfrep/scalar.hpp"

#include <sstream>

#include "hopfrep/errors.hpp"

namespace hopfrep {

namespace {

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    bool invert = exponent < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    Rational acc(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1UL) acc *= b;
        b *= b;
        e >>= 1UL;
    }
    acc.canonicalize();
    if (invert) acc = 1 / acc;
    return acc;
}

std::string rational_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

}  // namespace

LaurentScalar::LaurentScalar(long value) {
    if (value != 0) terms_[0] = Rational(value);
}

LaurentScalar::LaurentScalar(const Rational& value) {
    Rational c = value;
    c.canonicalize();
    if (c != 0) terms_[0] = c;
}

LaurentScalar LaurentScalar::q_power(long exponent, const Rational& coeff) {
    LaurentScalar s;
    Rational c = coeff;
    c.canonicalize();
    if (c != 0) s.terms_[exponent] = c;
    return s;
}

const LaurentScalar& LaurentScalar::zero() {
    static const LaurentScalar z;
    return z;
}

const LaurentScalar& LaurentScalar::one() {
    static const LaurentScalar o(1);
    return o;
}

bool LaurentScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void LaurentScalar::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& other) const {
    LaurentScalar out = *this;
    out += other;
    return out;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& other) const {
    return *this + (-other);
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& other) const {
    LaurentScalar out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Rational prod = ca * cb;
            auto [it, inserted] = out.terms_.emplace(ea + eb, prod);
            if (!inserted) it->second += prod;
        }
    }
    out.strip_zeros();
    return out;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& other) {
    *this = *this * other;
    return *this;
}

Rational LaurentScalar::eval(const Rational& q0) const {
    if (q0 == 0 && !terms_.empty() && terms_.begin()->first < 0) {
        throw ZeroEvaluationPoint("cannot evaluate negative q-exponent at q = 0");
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        if (q0 == 0) {
            if (e == 0) acc += c;
            continue;  // positive exponents vanish at 0
        }
        acc += c * rational_pow(q0, e);
    }
    acc.canonicalize();
    return acc;
}

std::string LaurentScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        mag.canonicalize();
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << rational_str(mag);
        } else {
            if (mag != 1) os << rational_str(mag) << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

bool LaurentScalar::less(const LaurentScalar& other) const {
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    for (; a != terms_.end() && b != other.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        int cmp = mpq_cmp(a->second.get_mpq_t(), b->second.get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return a == terms_.end() && b != other.terms_.end();
}

LaurentScalar operator*(const Rational& c, const LaurentScalar& s) {
    return LaurentScalar(c) * s;
}

}  // namespace hopfrep
