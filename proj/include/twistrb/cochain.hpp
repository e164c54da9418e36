#pragma once

#include "twistrb/qlinalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace twistrb {

/// A multilinear map V^{⊗n} -> W stored densely on basis tuples.
///
/// The coefficient of w_k in f(v_{p_1}, ..., v_{p_n}) lives at flat index
/// ((p_1 * s + p_2) * s + ... + p_n) * t + k with s = dim V, t = dim W.
/// Arity 0 is a single value in W. Linear maps are arity 1; a linear map
/// T: M -> A is stored as t[p][k] with T(m_p) = sum_k t[p][k] e_k.
///
/// The same class houses Hochschild cochains Hom(A^n, M), cochains
/// Hom(M^n, A) of a twisted Rota-Baxter operator, and multilinear maps on
/// A ⊕ M for the Gerstenhaber bracket.
class Cochain {
  public:
    Cochain() = default;
    Cochain(std::size_t arity, std::size_t source_dim, std::size_t target_dim);
    static Cochain from_flat(std::size_t arity, std::size_t source_dim, std::size_t target_dim, Vector coefficients);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t source_dim() const noexcept { return source_dim_; }
    std::size_t target_dim() const noexcept { return target_dim_; }
    /// Number of basis input tuples, source_dim^arity.
    std::size_t tuples() const noexcept { return tuples_; }

    const Vector& coefficients() const noexcept { return data_; }
    Rational& at(std::size_t tuple, std::size_t k) { return data_[tuple * target_dim_ + k]; }
    const Rational& at(std::size_t tuple, std::size_t k) const { return data_[tuple * target_dim_ + k]; }
    std::span<const Rational> row(std::size_t tuple) const { return {data_.data() + tuple * target_dim_, target_dim_}; }
    Vector value(std::size_t tuple) const;
    void set_value(std::size_t tuple, const Vector& v);
    void add_value(std::size_t tuple, const Rational& scale, std::span<const Rational> v);

    std::size_t tuple_index(std::span<const std::size_t> indices) const;
    std::vector<std::size_t> tuple_of(std::size_t tuple) const;

    /// Multilinear evaluation on arbitrary vectors.
    Vector operator()(const std::vector<Vector>& args) const;

    bool is_zero() const { return twistrb::is_zero(data_); }
    bool same_shape(const Cochain& other) const noexcept;

    Cochain operator+(const Cochain& other) const;
    Cochain operator-(const Cochain& other) const;
    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    friend Cochain operator*(const Rational& a, const Cochain& f);
    bool operator==(const Cochain& other) const = default;

    /// Builds a cochain by calling fn(indices) -> Vector on every basis tuple.
    template <class Fn>
    static Cochain tabulate(std::size_t arity, std::size_t source_dim, std::size_t target_dim, Fn&& fn)
    {
        Cochain c(arity, source_dim, target_dim);
        for (std::size_t t = 0; t < c.tuples(); ++t)
            c.set_value(t, fn(c.tuple_of(t)));
        return c;
    }

  private:
    std::size_t arity_ = 0;
    std::size_t source_dim_ = 0;
    std::size_t target_dim_ = 0;
    std::size_t tuples_ = 1;
    Vector data_;
};

std::size_t int_pow(std::size_t base, std::size_t exp);

/// f ∘_i g: g's output fed into slot i (1-based) of f. Requires
/// g.target_dim == f.source_dim == g.source_dim. Arity of g may be 0.
Cochain compose_at(const Cochain& f, std::size_t i, const Cochain& g);

/// f(g(x_1..x_q), h(x_{q+1}..x_{q+r})) for a bilinear f.
Cochain apply_binary(const Cochain& f, const Cochain& g, const Cochain& h);

/// Post-composition L ∘ g with a linear map L.
Cochain post_compose(const Cochain& linear, const Cochain& g);

/// f on a basis tuple whose entry at `slot` (0-based) is replaced by the
/// vector v. The index stored at `slot` is ignored.
Vector eval_slot(const Cochain& f, std::vector<std::size_t> indices, std::size_t slot, const Vector& v);

Cochain identity_map(std::size_t dim);
Cochain linear_map(const Matrix& m); // m has rows = target, cols = source
Matrix to_matrix(const Cochain& linear);
Vector apply_map(const Cochain& linear, const Vector& v);

} // namespace twistrb
