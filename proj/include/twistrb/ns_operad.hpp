#pragma once

// The operad O_A(n) = Hom(K[C_n] ⊗ A^{⊗n}, A), NS-algebras as its
// multiplications, the cohomology they induce, and Θ : O_A -> End_A.

#include "twistrb/trb.hpp"

#include <array>
#include <functional>

namespace twistrb {

/// An element of O_A(n): one n-linear map A^{⊗n} -> A per tag [r].
/// Tags are 1-based in the interface; C_1 = {[1]} and C_n = {[1]..[n+1]}.
class TaggedCochain {
  public:
    TaggedCochain() = default;
    TaggedCochain(std::size_t arity, std::size_t dim);
    explicit TaggedCochain(std::vector<Cochain> components);

    static std::size_t tag_count(std::size_t arity) noexcept { return arity == 1 ? 1 : arity + 1; }
    /// id([1]; a) = a.
    static TaggedCochain identity(std::size_t dim);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t tags() const noexcept { return components_.size(); }

    /// Component f_[r]; r is 1-based.
    const Cochain& operator[](std::size_t r) const { return components_.at(r - 1); }
    Cochain& operator[](std::size_t r) { return components_.at(r - 1); }
    const std::vector<Cochain>& components() const noexcept { return components_; }

    /// All components concatenated in tag order.
    Vector flatten() const;
    static TaggedCochain from_flat(std::size_t arity, std::size_t dim, const Vector& flat);
    std::size_t flat_size() const noexcept;

    bool is_zero() const;
    TaggedCochain operator+(const TaggedCochain& other) const;
    TaggedCochain operator-(const TaggedCochain& other) const;
    TaggedCochain& operator+=(const TaggedCochain& other);
    TaggedCochain& operator-=(const TaggedCochain& other);
    friend TaggedCochain operator*(const Rational& a, const TaggedCochain& f);
    bool operator==(const TaggedCochain&) const = default;

  private:
    std::size_t arity_ = 1;
    std::size_t dim_ = 0;
    std::vector<Cochain> components_;
};

/// The partial composition f ∘_i g of O_A, i 1-based. Missing tags count
/// as 0 and g([1]+..+[n+1]) sums the tags g has.
TaggedCochain partial_compose(const TaggedCochain& f, const TaggedCochain& g, std::size_t i);

using ComposeFn = std::function<TaggedCochain(const TaggedCochain&, const TaggedCochain&, std::size_t)>;

/// Sequential and parallel associativity for one triple, plus unit laws
/// for each argument, under the given composition.
Report check_operad_axioms(const TaggedCochain& f, const TaggedCochain& g, const TaggedCochain& h,
                           const ComposeFn& compose = partial_compose);

/// Three bilinear operations ≺, ≻, ⋎ on a space of dimension dim.
struct NsAlgebra {
    Cochain prec;
    Cochain succ;
    Cochain vee;

    NsAlgebra() = default;
    explicit NsAlgebra(std::size_t dim);
    NsAlgebra(Cochain prec, Cochain succ, Cochain vee);
    std::size_t dim() const noexcept { return prec.source_dim(); }
    /// a * b = a ≺ b + a ≻ b + a ⋎ b.
    Algebra star() const;
    bool operator==(const NsAlgebra&) const = default;
};

/// The four NS defects, each as a trilinear map A^{⊗3} -> A:
///   (a≺b)≺c - a≺(b*c),  (a≻b)≺c - a≻(b≺c),  (a*b)≻c - a≻(b≻c),
///   (a⋎b)≺c + (a*b)⋎c - a≻(b⋎c) - a⋎(b*c).
std::array<Cochain, 4> ns_defects(const NsAlgebra& ns);
Report check_ns(const NsAlgebra& ns);

/// π([1]) = ≺, π([2]) = ≻, π([3]) = ⋎.
TaggedCochain ns_to_multiplication(const NsAlgebra& ns);
NsAlgebra multiplication_to_ns(const TaggedCochain& pi);
/// π ∘_1 π - π ∘_2 π.
TaggedCochain multiplication_residual(const TaggedCochain& pi);
bool is_multiplication(const TaggedCochain& pi);

/// δ_π(f) = (-1)^{n-1}[Σ_{i=1,2} (-1)^{(i-1)(n-1)} π∘_i f - (-1)^{n-1} Σ_i (-1)^{i-1} f∘_i π].
/// Throws NotAMultiplication unless π ∘_1 π = π ∘_2 π.
TaggedCochain delta_pi(const TaggedCochain& pi, const TaggedCochain& f);
/// Matrix of δ_π on arity n in flattened coordinates.
Matrix delta_pi_matrix(const TaggedCochain& pi, std::size_t n);
/// dim H^n_NS(A, A) for n = 1..n_max.
std::vector<std::size_t> ns_cohomology_dims(const NsAlgebra& ns, std::size_t n_max);

/// Θ_n(f) = f_[1] + .. + f_[n+1].
Cochain theta(const TaggedCochain& f);
/// f_[n+1] = 0 (always true in arity 1).
bool is_dendriform_element(const TaggedCochain& f);

/// u ≺ v = u·T(v), u ≻ v = T(u)·v, u ⋎ v = H(Tu, Tv) on M.
NsAlgebra trb_to_ns(const TrbContext& ctx);

} // namespace twistrb
