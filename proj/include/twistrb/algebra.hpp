#pragma once

#include "twistrb/cochain.hpp"
#include "twistrb/report.hpp"

#include <cstddef>
#include <vector>

namespace twistrb {

/// Finite-dimensional algebra given by structure constants:
/// e_i e_j = sum_k c_{ij}^k e_k, stored as a bilinear Cochain.
class Algebra {
  public:
    Algebra() = default;
    explicit Algebra(std::size_t dim);
    explicit Algebra(Cochain product);

    std::size_t dim() const noexcept { return product_.source_dim(); }
    const Cochain& product() const noexcept { return product_; }

    Rational& c(std::size_t i, std::size_t j, std::size_t k) { return product_.at(i * dim() + j, k); }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return product_.at(i * dim() + j, k); }

    Vector mul(const Vector& a, const Vector& b) const { return product_({a, b}); }
    Vector basis_product(std::size_t i, std::size_t j) const { return product_.value(i * dim() + j); }

    bool operator==(const Algebra&) const = default;

  private:
    Cochain product_{2, 0, 0};
};

/// Left and right actions of an algebra of dimension algebra_dim on a space
/// of dimension dim: e_i . m_p = sum_q left(i,p,q) m_q and
/// m_p . e_i = sum_q right(p,i,q) m_q.
class Bimodule {
  public:
    Bimodule() = default;
    Bimodule(std::size_t algebra_dim, std::size_t dim);

    std::size_t algebra_dim() const noexcept { return algebra_dim_; }
    std::size_t dim() const noexcept { return dim_; }

    Rational& left(std::size_t i, std::size_t p, std::size_t q) { return left_[(i * dim_ + p) * dim_ + q]; }
    const Rational& left(std::size_t i, std::size_t p, std::size_t q) const { return left_[(i * dim_ + p) * dim_ + q]; }
    Rational& right(std::size_t p, std::size_t i, std::size_t q) { return right_[(p * algebra_dim_ + i) * dim_ + q]; }
    const Rational& right(std::size_t p, std::size_t i, std::size_t q) const
    {
        return right_[(p * algebra_dim_ + i) * dim_ + q];
    }

    Vector act_left(const Vector& a, const Vector& m) const;
    Vector act_right(const Vector& m, const Vector& a) const;

    bool operator==(const Bimodule&) const = default;

  private:
    std::size_t algebra_dim_ = 0;
    std::size_t dim_ = 0;
    Vector left_;
    Vector right_;
};

Bimodule adjoint_bimodule(const Algebra& algebra);

/// Associativity on every basis triple; one failure per bad (i,j,k).
Report check_algebra(const Algebra& algebra);
/// The three bimodule axioms on every basis triple.
Report check_bimodule(const Algebra& algebra, const Bimodule& module);
/// phi(ab) = phi(a) phi(b) on basis pairs, phi : A -> B linear.
Report check_algebra_morphism(const Algebra& source, const Algebra& target, const Cochain& phi);

/// The Hochschild differential of f in Hom(A^{⊗n}, M):
///   (δf)(a_1..a_{n+1}) = a_1·f(a_2..) + Σ (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(a_1..a_n)·a_{n+1}.
/// Arity 0 cochains are elements u of M with (δu)(a) = a·u - u·a.
Cochain hochschild_delta(const Algebra& algebra, const Bimodule& module, const Cochain& f);

/// δ_Hoch H = 0, reported per failing basis triple.
Report check_cocycle(const Algebra& algebra, const Bimodule& module, const Cochain& twist);

/// A ⋉_H M on A ⊕ M (A coordinates first) with
/// (a,u)(b,v) = (ab, a·v + u·b + H(a,b)). Throws InvalidCocycle when H is
/// not a 2-cocycle.
Algebra twisted_semidirect(const Algebra& algebra, const Bimodule& module, const Cochain& twist);

/// True iff span(vectors) is closed under the product.
bool is_subalgebra(const Algebra& algebra, const std::vector<Vector>& vectors);

} // namespace twistrb
