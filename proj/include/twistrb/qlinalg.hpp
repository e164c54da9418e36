#pragma once

// Exact linear algebra over Q. Everything here is a pure function on values;
// nothing keeps hidden state, so concurrent calls need no coordination.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twistrb {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign). Throws ParseError on garbage or q = 0.
Rational parse_rational(std::string_view text, const std::string& where = "rational");

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector& axpy(Vector& y, const Rational& a, const Vector& x); // y += a x
Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(const Rational& a, const Vector& x);

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Vector operator*(const Vector& v) const;
    friend Matrix operator*(const Rational& a, const Matrix& m);
    bool operator==(const Matrix& other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// A linear subspace of Q^ambient_dim, held as an independent spanning set.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vector> basis;

    std::size_t dim() const noexcept { return basis.size(); }
    bool contains(const Vector& v) const;
};

std::size_t rank(const Matrix& m);
Subspace nullspace(const Matrix& m);
Subspace column_space(const Matrix& m);
/// Independent subset spanning the same space as `vectors`.
Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

/// dim z - dim b, after checking b is contained in z.
std::size_t quotient_dim(const Subspace& z, const Subspace& b);

/// A particular solution of m x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
std::optional<Matrix> inverse(const Matrix& m);

} // namespace twistrb
