#pragma once

// Deformations truncated at order N, i.e. over K[t]/(t^{N+1}), of twisted
// Rota-Baxter operators and of NS-algebras.

#include "twistrb/ns_operad.hpp"

#include <optional>

namespace twistrb {

/// T_t = T_0 + t T_1 + .. + t^N T_N with T_0 = ctx.op.
struct RbDeformation {
    TrbContext ctx;
    std::vector<Cochain> maps;

    std::size_t order() const noexcept { return maps.empty() ? 0 : maps.size() - 1; }
    /// Throws ShapeMismatch unless every T_i maps M into A and T_0 = T.
    void check_shapes() const;
};

/// The undeformed family T_t = T truncated at order N.
RbDeformation trivial_rb_deformation(const TrbContext& ctx, std::size_t order);

/// Per order n = 0..N, the bilinear map M ⊗ M -> A
///   Σ_{i+j=n} T_i(u)T_j(v) - Σ_{i+j=n} T_i(u·T_j v + T_j u·v) - Σ_{i+j+k=n} T_i H(T_j u, T_k v).
std::vector<Cochain> rb_deformation_residuals(const RbDeformation& d);
bool is_rb_deformation(const RbDeformation& d);

struct RbInfinitesimal {
    Cochain t1;
    bool cocycle = false;
};
RbInfinitesimal rb_infinitesimal(const RbDeformation& d);

/// a together with φ_i, ψ_i for 2 ≤ i ≤ N (missing entries are zero):
///   φ_t = id + t[a, -] + Σ t^i φ_i,
///   ψ_t = id + t(a·- - -·a + H(a, T-) - H(T-, a)) + Σ t^i ψ_i.
struct RbEquivalenceWitness {
    Vector a;
    std::vector<Cochain> phi;
    std::vector<Cochain> psi;
};

/// Coefficients φ_0..φ_N of φ_t.
std::vector<Cochain> witness_phi(const TrbContext& ctx, const RbEquivalenceWitness& w, std::size_t order);
/// Coefficients ψ_0..ψ_N of ψ_t.
std::vector<Cochain> witness_psi(const TrbContext& ctx, const RbEquivalenceWitness& w, std::size_t order);

/// (φ_t, ψ_t) is a morphism from T_t to T'_t modulo t^{N+1}: algebra
/// morphism, action compatibility, ψ_t H = H(φ_t, φ_t) and φ_t T_t = T'_t ψ_t,
/// each matched coefficient by coefficient. When all of these hold the
/// report also carries any failure of T_1 - T'_1 = d_T(a).
Report rb_check_equivalence(const RbDeformation& d, const RbDeformation& target, const RbEquivalenceWitness& w);

/// T'_t = φ_t T_t ψ_t^{-1} mod t^{N+1} for φ_t = id + t[a,-] and
/// ψ_t = id + tX. When T_1 = d_T(a) the order-1 term of T'_t vanishes.
/// Throws AxiomFailure unless a is a Nijenhuis element of T.
RbDeformation rigidify(const RbDeformation& d, const Vector& a);

/// T_t = φ_t^{-1} T ψ_t mod t^{N+1}, an order-N deformation of T with
/// infinitesimal d_T(a) that is equivalent to the undeformed one.
/// Throws AxiomFailure unless a is a Nijenhuis element of T.
RbDeformation transported_rb_deformation(const TrbContext& ctx, const Vector& a, std::size_t order);

/// Some a with d_T(a) = f, or nullopt when f is not a coboundary.
std::optional<Vector> coboundary_preimage(const TrbContext& ctx, const Cochain& f);

/// Coefficients of the product of two truncated series of linear maps,
/// (Σ t^i F_i)(Σ t^j G_j) = Σ t^k Σ_{i+j=k} F_i ∘ G_j, k ≤ order.
std::vector<Cochain> series_compose(const std::vector<Cochain>& f, const std::vector<Cochain>& g, std::size_t order);
/// Inverse of id + Σ_{i≥1} t^i F_i modulo t^{order+1}.
std::vector<Cochain> series_inverse(const std::vector<Cochain>& f, std::size_t order);

/// π_t = π_0 + t π_1 + .. + t^N π_N with π_0 = π of the base NS-algebra.
struct NsDeformation {
    NsAlgebra base;
    std::vector<TaggedCochain> maps;

    std::size_t order() const noexcept { return maps.empty() ? 0 : maps.size() - 1; }
    void check_shapes() const;
};

NsDeformation trivial_ns_deformation(const NsAlgebra& base, std::size_t order);

/// Per order n: Σ_{i+j=n} (π_i ∘_1 π_j - π_i ∘_2 π_j).
std::vector<TaggedCochain> ns_deformation_residuals(const NsDeformation& d);
bool is_ns_deformation(const NsDeformation& d);

struct NsObstruction {
    TaggedCochain ob;
    bool cocycle = false;
};
/// Ob = -Σ_{i+j=N+1, i,j≥1} (π_i ∘_1 π_j - π_i ∘_2 π_j) and whether δ_π Ob = 0.
NsObstruction ns_obstruction(const NsDeformation& d);

/// π_{N+1} with π∘_1 π_{N+1} - π∘_2 π_{N+1} + π_{N+1}∘_1 π - π_{N+1}∘_2 π = Ob,
/// i.e. δ_π(π_{N+1}) = -Ob; nullopt when [Ob] ≠ 0 in H^3_NS.
std::optional<TaggedCochain> ns_extend(const NsDeformation& d);

} // namespace twistrb
