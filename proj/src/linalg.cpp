#include "hopfrep/linalg.hpp"

#include <algorithm>

#include "hopfrep/errors.hpp"

namespace hopfrep {

namespace {

/// Dense polynomial in q over Q: coefficient vector, constant term first,
/// no trailing zeros. The zero polynomial is the empty vector.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Split a Laurent scalar into q^shift * polynomial.
std::pair<long, Poly> laurent_to_poly(const LaurentScalar& s) {
    if (s.is_zero()) return {0, {}};
    long shift = s.terms().begin()->first;
    long top = s.terms().rbegin()->first;
    Poly p(static_cast<std::size_t>(top - shift) + 1, Rational(0));
    for (const auto& [e, c] : s.terms()) p[static_cast<std::size_t>(e - shift)] = c;
    return {shift, p};
}

LaurentScalar poly_to_laurent(const Poly& p, long shift) {
    LaurentScalar out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) out += LaurentScalar::q_power(shift + static_cast<long>(i), p[i]);
    }
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    poly_trim(out);
    return out;
}

/// Remainder of a by b (b nonzero).
Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t offset = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[offset + i] -= factor * b[i];
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;  // monic
    }
    return a;
}

/// Exact division a / b, asserting zero remainder.
Poly poly_div_exact(Poly a, const Poly& b) {
    poly_trim(a);
    Poly quotient(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t offset = a.size() - b.size();
        quotient[offset] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[offset + i] -= factor * b[i];
        poly_trim(a);
    }
    if (!a.empty()) throw Error("inexact polynomial division");
    poly_trim(quotient);
    return quotient;
}

}  // namespace

RationalFn::RationalFn(const LaurentScalar& num) : num_(num), den_(LaurentScalar(1)) {}

RationalFn::RationalFn(LaurentScalar num, LaurentScalar den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    normalize();
}

const RationalFn& RationalFn::zero() {
    static const RationalFn z;
    return z;
}

const RationalFn& RationalFn::one() {
    static const RationalFn o{LaurentScalar(1)};
    return o;
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentScalar(1);
        return;
    }
    auto [ns, np] = laurent_to_poly(num_);
    auto [ds, dp] = laurent_to_poly(den_);
    Poly g = poly_gcd(np, dp);
    if (g.size() > 1) {
        np = poly_div_exact(np, g);
        dp = poly_div_exact(dp, g);
    }
    // Monic denominator; monomial units move to the numerator shift.
    Rational lead = dp.back();
    for (auto& c : np) c /= lead;
    for (auto& c : dp) c /= lead;
    num_ = poly_to_laurent(np, ns - ds);
    den_ = poly_to_laurent(dp, 0);
}

RationalFn RationalFn::operator+(const RationalFn& other) const {
    return RationalFn(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFn RationalFn::operator-(const RationalFn& other) const {
    return RationalFn(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RationalFn RationalFn::operator*(const RationalFn& other) const {
    return RationalFn(num_ * other.num_, den_ * other.den_);
}

RationalFn RationalFn::operator/(const RationalFn& other) const {
    if (other.is_zero()) throw Error("division by the zero rational function");
    return RationalFn(num_ * other.den_, den_ * other.num_);
}

RationalFn RationalFn::operator-() const {
    RationalFn out = *this;
    out.num_ = -out.num_;
    return out;
}

bool RationalFn::operator==(const RationalFn& other) const {
    return num_ == other.num_ && den_ == other.den_;
}

std::vector<std::vector<LaurentScalar>> laurent_kernel(
    const std::vector<std::vector<LaurentScalar>>& columns, std::size_t rows) {
    std::size_t ncols = columns.size();
    std::vector<std::vector<RationalFn>> m(rows, std::vector<RationalFn>(ncols));
    for (std::size_t c = 0; c < ncols; ++c) {
        if (columns[c].size() != rows) throw Error("ragged column in kernel computation");
        for (std::size_t r = 0; r < rows; ++r) m[r][c] = RationalFn(columns[c][r]);
    }

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        RationalFn inv = RationalFn::one() / m[rank][col];
        for (std::size_t c = col; c < ncols; ++c) m[rank][c] = m[rank][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            RationalFn factor = m[r][col];
            for (std::size_t c = col; c < ncols; ++c) {
                m[r][c] = m[r][c] - factor * m[rank][c];
            }
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<std::vector<LaurentScalar>> kernel;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < ncols; ++col) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        // Free column: x_col = 1, pivots get the negated reduced entries.
        std::vector<RationalFn> vec(ncols);
        vec[col] = RationalFn::one();
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            vec[pivot_cols[r]] = -m[r][col];
        }
        // Clear denominators; when the leading entry is a monomial, divide
        // it out so it becomes 1.
        LaurentScalar common(1);
        for (const auto& v : vec) {
            if (!v.is_zero()) common = common * v.den();
        }
        std::vector<LaurentScalar> cleared(ncols);
        for (std::size_t i = 0; i < ncols; ++i) {
            if (vec[i].is_zero()) continue;
            RationalFn w = vec[i] * RationalFn(common);
            cleared[i] = w.num();
        }
        for (std::size_t i = 0; i < ncols; ++i) {
            if (cleared[i].is_zero()) continue;
            if (cleared[i].terms().size() == 1) {
                auto [e, c] = *cleared[i].terms().begin();
                LaurentScalar inv = LaurentScalar::q_power(-e, 1 / c);
                for (auto& entry : cleared) entry = entry * inv;
            }
            break;
        }
        kernel.push_back(std::move(cleared));
    }
    return kernel;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) throw Error("matrix product dimension mismatch");
    QMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out.at(i, j) += a * other.at(k, j);
            }
        }
    }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix sum mismatch");
    QMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix difference mismatch");
    QMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
    return out;
}

bool QMatrix::operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

QMatrix QMatrix::kron(const QMatrix& other) const {
    QMatrix out(rows_ * other.rows_, cols_ * other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& a = at(i, j);
            if (a == 0) continue;
            for (std::size_t r = 0; r < other.rows_; ++r) {
                for (std::size_t c = 0; c < other.cols_; ++c) {
                    out.at(i * other.rows_ + r, j * other.cols_ + c) = a * other.at(r, c);
                }
            }
        }
    }
    return out;
}

std::vector<std::vector<Rational>> QMatrix::kernel() const {
    QMatrix m = *this;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        Rational inv = 1 / m.at(rank, col);
        for (std::size_t c = col; c < cols_; ++c) m.at(rank, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            Rational factor = m.at(r, col);
            for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= factor * m.at(rank, c);
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    std::vector<std::vector<Rational>> kernel;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < cols_; ++col) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<Rational> vec(cols_, Rational(0));
        vec[col] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            vec[pivot_cols[r]] = -m.at(r, col);
        }
        kernel.push_back(std::move(vec));
    }
    return kernel;
}

}  // namespace hopfrep
