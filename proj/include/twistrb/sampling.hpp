#pragma once

// Seeded random data for property checks and audits.

#include "twistrb/ns_operad.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace twistrb {

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// p/q with |p| ≤ max_num and 1 ≤ q ≤ max_den.
    Rational rational(int max_num = 3, int max_den = 2);
    /// Nonzero p/q.
    Rational nonzero_rational(int max_num = 3, int max_den = 2);
    std::size_t index(std::size_t bound);
    Vector vector(std::size_t n);
    Matrix matrix(std::size_t rows, std::size_t cols);
    /// Unit lower-triangular times upper-triangular with nonzero diagonal.
    Matrix invertible_matrix(std::size_t n);
    Cochain cochain(std::size_t arity, std::size_t source_dim, std::size_t target_dim);
    TaggedCochain tagged(std::size_t arity, std::size_t dim);

    std::mt19937_64& engine() noexcept { return rng_; }

  private:
    std::mt19937_64 rng_;
};

/// The same algebra in the basis f_j = Σ_k p(k,j) e_k.
Algebra change_basis(const Algebra& algebra, const Matrix& p);

/// T = h^{-1} is twisted Rota-Baxter for H = -δ_Hoch h, whenever h : A -> M
/// is invertible; nullopt otherwise.
std::optional<TrbContext> inverse_context(const Algebra& algebra, const Bimodule& module, const Cochain& h);

/// A randomized valid context: a gauge transform or cocycle shift of `base`
/// by random data, or an inverse_context when dim A = dim M.
TrbContext random_valid_context(const TrbContext& base, Sampler& sampler);

/// The NS structure π scaled by λ (always an NS structure again).
NsAlgebra scale_ns(const NsAlgebra& ns, const Rational& lambda);

} // namespace twistrb
