#include "twistrb/cochain.hpp"

#include "twistrb/errors.hpp"

#include <string>

namespace twistrb {

std::size_t int_pow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

Cochain::Cochain(std::size_t arity, std::size_t source_dim, std::size_t target_dim)
    : arity_(arity), source_dim_(source_dim), target_dim_(target_dim), tuples_(int_pow(source_dim, arity)),
      data_(tuples_ * target_dim, Rational(0))
{
}

Cochain Cochain::from_flat(std::size_t arity, std::size_t source_dim, std::size_t target_dim, Vector coefficients)
{
    Cochain c(arity, source_dim, target_dim);
    if (coefficients.size() != c.data_.size())
        throw ShapeMismatch("Cochain::from_flat: expected " + std::to_string(c.data_.size()) + " coefficients, got "
                            + std::to_string(coefficients.size()));
    c.data_ = std::move(coefficients);
    return c;
}

Vector Cochain::value(std::size_t tuple) const
{
    auto r = row(tuple);
    return Vector(r.begin(), r.end());
}

void Cochain::set_value(std::size_t tuple, const Vector& v)
{
    if (v.size() != target_dim_)
        throw ShapeMismatch("Cochain::set_value: value has wrong length");
    std::copy(v.begin(), v.end(), data_.begin() + tuple * target_dim_);
}

void Cochain::add_value(std::size_t tuple, const Rational& scale, std::span<const Rational> v)
{
    Rational* out = data_.data() + tuple * target_dim_;
    for (std::size_t k = 0; k < target_dim_; ++k)
        if (sgn(v[k]) != 0)
            out[k] += scale * v[k];
}

std::size_t Cochain::tuple_index(std::span<const std::size_t> indices) const
{
    if (indices.size() != arity_)
        throw ShapeMismatch("Cochain::tuple_index: wrong number of indices");
    std::size_t t = 0;
    for (auto p : indices) {
        if (p >= source_dim_)
            throw IndexOutOfRange("Cochain::tuple_index: basis index out of range");
        t = t * source_dim_ + p;
    }
    return t;
}

std::vector<std::size_t> Cochain::tuple_of(std::size_t tuple) const
{
    std::vector<std::size_t> idx(arity_);
    for (std::size_t j = arity_; j-- > 0;) {
        idx[j] = tuple % source_dim_;
        tuple /= source_dim_;
    }
    return idx;
}

Vector Cochain::operator()(const std::vector<Vector>& args) const
{
    if (args.size() != arity_)
        throw ShapeMismatch("Cochain evaluation: wrong number of arguments");
    // Contract the leading tensor slot with each argument in turn.
    Vector cur = data_;
    std::size_t block = data_.size();
    for (const auto& v : args) {
        if (v.size() != source_dim_)
            throw ShapeMismatch("Cochain evaluation: argument has wrong length");
        block /= source_dim_;
        Vector next(block, Rational(0));
        for (std::size_t p = 0; p < source_dim_; ++p) {
            if (sgn(v[p]) == 0)
                continue;
            for (std::size_t r = 0; r < block; ++r)
                if (sgn(cur[p * block + r]) != 0)
                    next[r] += v[p] * cur[p * block + r];
        }
        cur = std::move(next);
    }
    return cur;
}

bool Cochain::same_shape(const Cochain& other) const noexcept
{
    return arity_ == other.arity_ && source_dim_ == other.source_dim_ && target_dim_ == other.target_dim_;
}

Cochain Cochain::operator+(const Cochain& other) const
{
    Cochain r = *this;
    return r += other;
}

Cochain Cochain::operator-(const Cochain& other) const
{
    Cochain r = *this;
    return r -= other;
}

Cochain& Cochain::operator+=(const Cochain& other)
{
    if (!same_shape(other))
        throw ShapeMismatch("Cochain sum: shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other)
{
    if (!same_shape(other))
        throw ShapeMismatch("Cochain difference: shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

Cochain operator*(const Rational& a, const Cochain& f)
{
    Cochain r = f;
    for (auto& x : r.data_)
        x *= a;
    return r;
}

Cochain compose_at(const Cochain& f, std::size_t i, const Cochain& g)
{
    if (i < 1 || i > f.arity())
        throw IndexOutOfRange("compose_at: slot " + std::to_string(i) + " outside 1.." + std::to_string(f.arity()));
    if (g.target_dim() != f.source_dim() || g.source_dim() != f.source_dim())
        throw ShapeMismatch("compose_at: inner map does not land in the outer source");
    const std::size_t d = f.source_dim();
    const std::size_t m = f.arity();
    const std::size_t n = g.arity();
    Cochain out(m + n - 1, d, f.target_dim());
    const std::size_t pre_count = int_pow(d, i - 1);
    const std::size_t mid_count = int_pow(d, n);
    const std::size_t post_count = int_pow(d, m - i);
    for (std::size_t pre = 0; pre < pre_count; ++pre)
        for (std::size_t mid = 0; mid < mid_count; ++mid) {
            auto inner = g.row(mid);
            for (std::size_t k = 0; k < d; ++k) {
                if (sgn(inner[k]) == 0)
                    continue;
                for (std::size_t post = 0; post < post_count; ++post) {
                    std::size_t target = (pre * mid_count + mid) * post_count + post;
                    std::size_t source = (pre * d + k) * post_count + post;
                    out.add_value(target, inner[k], f.row(source));
                }
            }
        }
    return out;
}

Cochain apply_binary(const Cochain& f, const Cochain& g, const Cochain& h)
{
    if (f.arity() != 2 || g.target_dim() != f.source_dim() || h.target_dim() != f.source_dim()
        || g.source_dim() != h.source_dim())
        throw ShapeMismatch("apply_binary: incompatible shapes");
    const std::size_t d = f.source_dim();
    Cochain out(g.arity() + h.arity(), g.source_dim(), f.target_dim());
    for (std::size_t x = 0; x < g.tuples(); ++x) {
        auto gx = g.row(x);
        for (std::size_t y = 0; y < h.tuples(); ++y) {
            auto hy = h.row(y);
            std::size_t target = x * h.tuples() + y;
            for (std::size_t a = 0; a < d; ++a) {
                if (sgn(gx[a]) == 0)
                    continue;
                for (std::size_t b = 0; b < d; ++b) {
                    if (sgn(hy[b]) == 0)
                        continue;
                    out.add_value(target, gx[a] * hy[b], f.row(a * d + b));
                }
            }
        }
    }
    return out;
}

Cochain post_compose(const Cochain& linear, const Cochain& g)
{
    if (linear.arity() != 1 || linear.source_dim() != g.target_dim())
        throw ShapeMismatch("post_compose: incompatible shapes");
    Cochain out(g.arity(), g.source_dim(), linear.target_dim());
    for (std::size_t x = 0; x < g.tuples(); ++x) {
        auto gx = g.row(x);
        for (std::size_t k = 0; k < g.target_dim(); ++k)
            if (sgn(gx[k]) != 0)
                out.add_value(x, gx[k], linear.row(k));
    }
    return out;
}

Vector eval_slot(const Cochain& f, std::vector<std::size_t> indices, std::size_t slot, const Vector& v)
{
    if (v.size() != f.source_dim())
        throw ShapeMismatch("eval_slot: vector has wrong length");
    Vector out = zero_vector(f.target_dim());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0)
            continue;
        indices[slot] = k;
        auto r = f.row(f.tuple_index(indices));
        for (std::size_t q = 0; q < out.size(); ++q)
            if (sgn(r[q]) != 0)
                out[q] += v[k] * r[q];
    }
    return out;
}

Cochain identity_map(std::size_t dim)
{
    Cochain id(1, dim, dim);
    for (std::size_t p = 0; p < dim; ++p)
        id.at(p, p) = 1;
    return id;
}

Cochain linear_map(const Matrix& m)
{
    Cochain c(1, m.cols(), m.rows());
    for (std::size_t p = 0; p < m.cols(); ++p)
        for (std::size_t k = 0; k < m.rows(); ++k)
            c.at(p, k) = m(k, p);
    return c;
}

Matrix to_matrix(const Cochain& linear)
{
    if (linear.arity() != 1)
        throw ShapeMismatch("to_matrix: not a linear map");
    Matrix m(linear.target_dim(), linear.source_dim());
    for (std::size_t p = 0; p < linear.source_dim(); ++p)
        for (std::size_t k = 0; k < linear.target_dim(); ++k)
            m(k, p) = linear.at(p, k);
    return m;
}

Vector apply_map(const Cochain& linear, const Vector& v)
{
    return linear({v});
}

} // namespace twistrb
