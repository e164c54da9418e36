#pragma once

// Twisted Rota-Baxter operators T : M -> A with
//   T(u)T(v) = T(u·T(v) + T(u)·v + H(Tu, Tv)).

#include "twistrb/algebra.hpp"

#include <optional>
#include <vector>

namespace twistrb {

struct TrbContext {
    Algebra algebra;  // A
    Bimodule module;  // M
    Cochain twist;    // H : A ⊗ A -> M
    Cochain op;       // T : M -> A

    std::size_t dim_a() const noexcept { return algebra.dim(); }
    std::size_t dim_m() const noexcept { return module.dim(); }

    Vector T(const Vector& u) const { return apply_map(op, u); }
    Vector H(const Vector& a, const Vector& b) const { return twist({a, b}); }

    /// Throws ShapeMismatch unless A, M, H and T fit together.
    void check_shapes() const;
};

/// Residual T(u)T(v) - T(u·Tv + Tu·v + H(Tu,Tv)) on every basis pair.
Report is_twisted_rb(const TrbContext& ctx);

/// u * v = u·T(v) + T(u)·v + H(Tu, Tv) on M.
Algebra star_product(const TrbContext& ctx);

/// A as an (M, *)-bimodule:
///   l_T(u,a) = T(u)a - T(u·a + H(Tu,a)),  r_T(a,u) = aT(u) - T(a·u + H(a,Tu)).
/// Throws AxiomFailure when the bimodule axioms fail (invalid context).
Bimodule t_bimodule(const TrbContext& ctx);
Bimodule t_bimodule_unchecked(const TrbContext& ctx);

/// The coboundary of the cohomology of T on f in Hom(M^{⊗n}, A),
/// d_T(f) = (-1)^n δ_Hoch(f) with δ_Hoch the Hochschild differential of
/// (M, *) with coefficients in (A, l_T, r_T), written out term by term.
Cochain dT(const TrbContext& ctx, const Cochain& f);

/// Matrix of d_T : Hom(M^{⊗n}, A) -> Hom(M^{⊗n+1}, A) in the flat coefficient basis.
Matrix dT_matrix(const TrbContext& ctx, std::size_t n);

/// dim ℋ^n_T for n = 0..n_max.
std::vector<std::size_t> cohomology_dims(const TrbContext& ctx, std::size_t n_max);
/// ker d_T on arity-n cochains, in flat coefficients.
Subspace cocycles(const TrbContext& ctx, std::size_t n);

/// T_B = T(id + B∘T)^{-1}. nullopt when id + B∘T is singular; throws
/// NotACocycle when δ_Hoch B ≠ 0.
std::optional<TrbContext> gauge_transform(const TrbContext& ctx, const Cochain& b);
/// id + B∘T : M -> M.
Cochain gauge_map(const TrbContext& ctx, const Cochain& b);

/// (A, M, H + δh, T(id - h∘T)^{-1}), or nullopt when id - h∘T is singular.
std::optional<TrbContext> cocycle_shift(const TrbContext& ctx, const Cochain& h);

/// d_T(a)(u) - per-element form of the arity-0 differential, a ∈ A.
Cochain dT_of_element(const TrbContext& ctx, const Vector& a);

/// All defining identities of a Nijenhuis element of T, on basis b, c ∈ A, u ∈ M.
Report is_nijenhuis_element(const TrbContext& ctx, const Vector& a);

/// Members of Nij(T) among the candidates, in input order.
std::vector<Vector> nijenhuis_filter(const TrbContext& ctx, const std::vector<Vector>& candidates);
/// Every a with coordinates drawn from `values` that lies in Nij(T).
std::vector<Vector> nijenhuis_grid(const TrbContext& ctx, const std::vector<Rational>& values);

/// Rigidity certificate: every element of `subset` is Nijenhuis and the
/// span of d_T(subset) equals the 1-cocycles.
bool certifies_rigidity(const TrbContext& ctx, const std::vector<Vector>& subset);

/// (phi, psi) from ctx to target: phi an algebra morphism, plus
/// action compatibility, psi∘H = H'∘(phi⊗phi) and phi∘T = T'∘psi.
Report is_trb_morphism(const TrbContext& ctx, const TrbContext& target, const Cochain& phi, const Cochain& psi);

/// (A, A adjoint, -μ, R). The context is valid iff R is a Reynolds operator.
TrbContext reynolds_context(const Algebra& algebra, const Cochain& r);

/// For a linear N : A -> A, the context (A_N, M, H, id) with
/// a ·_N b = aN(b) + N(a)b - N(ab), M = A acted on by a·m = N(a)m and
/// m·a = mN(a), H(a,b) = -N(ab). T = id satisfies the twisted identity for
/// any N; the rest of the context is valid when N is Nijenhuis.
TrbContext nijenhuis_context(const Algebra& algebra, const Cochain& n);

/// The multiplication μ of A as a bilinear cochain A ⊗ A -> A.
Cochain multiplication_cochain(const Algebra& algebra);

} // namespace twistrb
