#pragma once

// The L∞-algebra on ⊕_n Hom(M^{⊗n}, A): derived binary bracket, the
// H-twisted ternary bracket, Maurer-Cartan residual and the structure
// twisted by a Maurer-Cartan element. An element of Hom(M^{⊗n}, A) sits in
// degree n, so Maurer-Cartan elements are linear maps M -> A.

#include "twistrb/trb.hpp"

#include <functional>
#include <vector>

namespace twistrb {

/// P̃((a_1,u_1),..,(a_n,u_n)) = (P(u_1..u_n), 0) on A ⊕ M (A coordinates first).
Cochain lift(const Cochain& p, std::size_t dim_a, std::size_t dim_m);
/// μ + l + r on A ⊕ M: ((a,u),(b,v)) -> (ab, a·v + u·b).
Cochain lift_multiplication(const Algebra& algebra, const Bimodule& module);

/// [f,g]_G = f ∘̄ g - (-1)^{(m-1)(n-1)} g ∘̄ f with
/// f ∘̄ g = Σ_i (-1)^{(i-1)(n-1)} f ∘_i g. Arity-0 arguments are allowed as
/// long as the result has arity ≥ 0.
Cochain gerstenhaber(const Cochain& f, const Cochain& g);

/// ⟦P,Q⟧ = (-1)^p [[μ+l+r, P̃]_G, Q̃]_G restricted to M-inputs and the A-output.
/// Throws RestrictionFailure if the unrestricted result leaks outside.
Cochain derived_bracket(const Algebra& algebra, const Bimodule& module, const Cochain& p, const Cochain& q);

/// The degree -1 ternary bracket ⟦P,Q,R⟧ built from the 2-cocycle H, as the
/// six insertion sums P(.., H(Q, R), ..) etc. with their printed signs.
Cochain ternary_bracket(const Cochain& twist, const Cochain& p, const Cochain& q, const Cochain& r);

/// (H, 0) on A ⊕ M: ((a,u),(b,v)) -> (0, H(a,b)).
Cochain lift_twist(const Cochain& twist, std::size_t dim_a, std::size_t dim_m);

/// (-1)^{q+1} [[[Ĥ, P̃]_G, Q̃]_G, R̃]_G restricted to Hom(M^n, A). Agrees with
/// ternary_bracket whenever all three arguments have degree 1, and in
/// ⟦T,T,f⟧ for linear T; it differs in other mixed degrees.
Cochain ternary_bracket_derived(const Algebra& algebra, const Bimodule& module, const Cochain& twist, const Cochain& p,
                                const Cochain& q, const Cochain& r);

/// Which ternary bracket an L∞ structure uses.
enum class TernaryForm { Printed, Derived };

/// ½⟦T,T⟧ - (1/6)⟦T,T,T⟧.
Cochain mc_residual(const Algebra& algebra, const Bimodule& module, const Cochain& twist, const Cochain& op);

/// d_T computed through the brackets: ⟦T,f⟧ - ½⟦T,T,f⟧.
Cochain dT_via_brackets(const TrbContext& ctx, const Cochain& f);

/// l_1, l_2, l_3 as closures; an empty std::function is the zero map.
struct LInftyStructure {
    std::function<Cochain(const Cochain&)> l1;
    std::function<Cochain(const Cochain&, const Cochain&)> l2;
    std::function<Cochain(const Cochain&, const Cochain&, const Cochain&)> l3;
    std::size_t dim_m = 0;
    std::size_t dim_a = 0;
};

/// l_1 = 0, l_2 = ⟦,⟧, l_3 = ⟦,,⟧.
LInftyStructure untwisted_structure(const Algebra& algebra, const Bimodule& module, const Cochain& twist,
                                    TernaryForm form = TernaryForm::Printed);
/// l_1 = d_T, l_2 = ⟦P,Q⟧ - ⟦T,P,Q⟧, l_3 = ⟦P,Q,R⟧.
LInftyStructure twisted_structure(const TrbContext& ctx, TernaryForm form = TernaryForm::Printed);

/// l_1(x) + ½ l_2(x,x) - (1/6) l_3(x,x,x) for a degree-1 x.
Cochain mc_residual(const LInftyStructure& structure, const Cochain& x);

/// Koszul sign times permutation sign for rearranging elements of the given
/// degrees into the order `perm` (perm[k] = original position).
int koszul_sign(const std::vector<std::size_t>& degrees, const std::vector<std::size_t>& perm);

/// Left-hand side of the n-th higher Jacobi identity, n = args.size() in 1..5:
///   Σ_{i+j=n+1} Σ_σ (-1)^σ ε(σ) (-1)^{i(j-1)} l_j(l_i(x_σ(1..i)), x_σ(i+1..n))
/// over (i, n-i)-unshuffles σ.
Cochain linfty_jacobi_residual(const LInftyStructure& structure, const std::vector<Cochain>& args);

} // namespace twistrb
