#pragma once

#include <vector>

#include "hopfrep/scalar.hpp"

namespace hopfrep {

/// Univariate rational function over Q in the deformation parameter,
/// normalized so the denominator is a monic true polynomial with nonzero
/// constant term (monomial units are absorbed into the numerator).
class RationalFn {
public:
    RationalFn() = default;                       // zero
    RationalFn(const LaurentScalar& num);         // NOLINT: polynomial embeds
    RationalFn(LaurentScalar num, LaurentScalar den);

    static const RationalFn& zero();
    static const RationalFn& one();

    bool is_zero() const { return num_.is_zero(); }
    const LaurentScalar& num() const { return num_; }
    const LaurentScalar& den() const { return den_; }

    RationalFn operator+(const RationalFn& other) const;
    RationalFn operator-(const RationalFn& other) const;
    RationalFn operator*(const RationalFn& other) const;
    RationalFn operator/(const RationalFn& other) const;
    RationalFn operator-() const;
    bool operator==(const RationalFn& other) const;

private:
    void normalize();

    LaurentScalar num_;
    LaurentScalar den_ = LaurentScalar(1);
};

/// Kernel of the column-vector family `columns` (each column a stack of
/// LaurentScalar entries of height `rows`): returns a basis of the null
/// space of the induced map Q(q)^ncols -> Q(q)^rows, with entries cleared
/// of denominators. Deterministic: reduced row-echelon with first-nonzero
/// pivoting; each kernel vector is scaled so its first nonzero entry is 1.
std::vector<std::vector<LaurentScalar>> laurent_kernel(
    const std::vector<std::vector<LaurentScalar>>& columns, std::size_t rows);

/// Dense matrix over exact rationals, used by the finite-dimensional oracle.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix operator*(const QMatrix& other) const;
    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    bool operator==(const QMatrix& other) const;

    /// Kronecker (tensor) product.
    QMatrix kron(const QMatrix& other) const;

    /// Basis of the null space, reduced row-echelon based; deterministic.
    std::vector<std::vector<Rational>> kernel() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace hopfrep
