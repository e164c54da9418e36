#include "twistrb/qlinalg.hpp"

#include "twistrb/errors.hpp"

#include <algorithm>
#include <cctype>

namespace twistrb {

Rational parse_rational(std::string_view text, const std::string& where)
{
    auto bad = [&](const char* why) { return ParseError(where, std::string(why) + " '" + std::string(text) + "'"); };
    if (text.empty())
        throw bad("empty rational");
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+')
        pos = 1;
    std::size_t slash = text.find('/');
    std::string_view num = text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (!digits(num) || !digits(den))
        throw bad("malformed rational");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw bad("zero denominator in");
    if (text[0] == '-')
        n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value)
{
    return value.get_str(10);
}

Vector zero_vector(std::size_t n)
{
    return Vector(n, Rational(0));
}

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector& axpy(Vector& y, const Rational& a, const Vector& x)
{
    if (y.size() != x.size())
        throw ShapeMismatch("axpy: vector lengths differ");
    if (sgn(a) == 0)
        return y;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0)
            y[i] += a * x[i];
    return y;
}

Vector operator+(const Vector& x, const Vector& y)
{
    Vector r = x;
    return axpy(r, 1, y);
}

Vector operator-(const Vector& x, const Vector& y)
{
    Vector r = x;
    return axpy(r, -1, y);
}

Vector operator*(const Rational& a, const Vector& x)
{
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = a * x[i];
    return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0))
{
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw ShapeMismatch("from_rows: row length differs from column count");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        m.set_column(c, columns[c]);
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v)
{
    if (v.size() != rows_)
        throw ShapeMismatch("set_column: vector length differs from row count");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    return twistrb::is_zero(entries_);
}

Matrix Matrix::operator+(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeMismatch("matrix sum: shapes differ");
    Matrix s = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        s.entries_[i] += other.entries_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeMismatch("matrix difference: shapes differ");
    Matrix s = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        s.entries_[i] -= other.entries_[i];
    return s;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows_)
        throw ShapeMismatch("matrix product: inner dimensions differ");
    Matrix p(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                if (sgn(other(k, c)) != 0)
                    p(r, c) += a * other(k, c);
        }
    return p;
}

Vector Matrix::operator*(const Vector& v) const
{
    if (v.size() != cols_)
        throw ShapeMismatch("matrix-vector product: length differs from column count");
    Vector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix operator*(const Rational& a, const Matrix& m)
{
    Matrix s = m;
    for (auto& x : s.entries_)
        x *= a;
    return s;
}

namespace {

// In-place Gauss-Jordan elimination. Returns the pivot column of each pivot
// row; rows past the pivot count are zero afterwards. With `full` unset only
// the entries below each pivot are cleared (enough for the rank).
std::vector<std::size_t> row_reduce(Matrix& m, bool full)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t c = col; c < m.cols(); ++c)
                swap(m(p, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = full ? 0 : row + 1; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0)
                continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0)
                    m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(const Matrix& m)
{
    Matrix work = m;
    return row_reduce(work, false).size();
}

Subspace nullspace(const Matrix& m)
{
    Matrix work = m;
    auto pivots = row_reduce(work, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    Subspace kernel{m.cols(), {}};
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v = unit_vector(m.cols(), free);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -work(r, free);
        kernel.basis.push_back(std::move(v));
    }
    return kernel;
}

Subspace column_space(const Matrix& m)
{
    Matrix work = m;
    auto pivots = row_reduce(work, false);
    Subspace image{m.rows(), {}};
    for (auto c : pivots)
        image.basis.push_back(m.column(c));
    return image;
}

Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
    return column_space(Matrix::from_columns(vectors, ambient_dim));
}

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient_dim)
        throw ShapeMismatch("Subspace::contains: vector length differs from ambient dimension");
    if (twistrb::is_zero(v))
        return true;
    auto stacked = basis;
    stacked.push_back(v);
    return rank(Matrix::from_rows(stacked, ambient_dim)) == basis.size();
}

std::size_t quotient_dim(const Subspace& z, const Subspace& b)
{
    if (z.ambient_dim != b.ambient_dim)
        throw ShapeMismatch("quotient_dim: ambient dimensions differ");
    if (!b.basis.empty()) {
        auto stacked = z.basis;
        stacked.insert(stacked.end(), b.basis.begin(), b.basis.end());
        if (rank(Matrix::from_rows(stacked, z.ambient_dim)) != z.dim())
            throw ContainmentViolation("quotient_dim: subspace is not contained in the ambient cocycles");
    }
    return z.dim() - b.dim();
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs)
{
    if (rhs.size() != m.rows())
        throw ShapeMismatch("solve: right-hand side length differs from row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    auto pivots = row_reduce(aug, true);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    Vector x = zero_vector(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw ShapeMismatch("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto pivots = row_reduce(aug, true);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

} // namespace twistrb
