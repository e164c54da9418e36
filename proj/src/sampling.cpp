#include "twistrb/sampling.hpp"

#include "twistrb/errors.hpp"

namespace twistrb {

Rational Sampler::rational(int max_num, int max_den)
{
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
}

Rational Sampler::nonzero_rational(int max_num, int max_den)
{
    Rational r;
    do
        r = rational(max_num, max_den);
    while (sgn(r) == 0);
    return r;
}

std::size_t Sampler::index(std::size_t bound)
{
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
}

Vector Sampler::vector(std::size_t n)
{
    Vector v(n);
    for (auto& x : v)
        x = rational();
    return v;
}

Matrix Sampler::matrix(std::size_t rows, std::size_t cols)
{
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rational();
    return m;
}

Matrix Sampler::invertible_matrix(std::size_t n)
{
    Matrix lower = Matrix::identity(n);
    Matrix upper(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j)
                lower(i, j) = rational();
            else if (i == j)
                upper(i, j) = nonzero_rational();
            else
                upper(i, j) = rational();
        }
    return lower * upper;
}

Cochain Sampler::cochain(std::size_t arity, std::size_t source_dim, std::size_t target_dim)
{
    Cochain c(arity, source_dim, target_dim);
    return Cochain::from_flat(arity, source_dim, target_dim, vector(c.coefficients().size()));
}

TaggedCochain Sampler::tagged(std::size_t arity, std::size_t dim)
{
    std::vector<Cochain> parts;
    for (std::size_t r = 0; r < TaggedCochain::tag_count(arity); ++r)
        parts.push_back(cochain(arity, dim, dim));
    return TaggedCochain(std::move(parts));
}

Algebra change_basis(const Algebra& algebra, const Matrix& p)
{
    const std::size_t d = algebra.dim();
    auto inv = inverse(p);
    if (p.rows() != d || !inv)
        throw ShapeMismatch("change_basis: matrix must be invertible of size dim A");
    Algebra out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector prod = algebra.mul(p.column(i), p.column(j));
            Vector coords = *inv * prod;
            for (std::size_t k = 0; k < d; ++k)
                out.c(i, j, k) = coords[k];
        }
    return out;
}

std::optional<TrbContext> inverse_context(const Algebra& algebra, const Bimodule& module, const Cochain& h)
{
    auto inv = inverse(to_matrix(h));
    if (!inv)
        return std::nullopt;
    TrbContext ctx{algebra, module, Rational(-1) * hochschild_delta(algebra, module, h), linear_map(*inv)};
    return ctx;
}

TrbContext random_valid_context(const TrbContext& base, Sampler& sampler)
{
    const std::size_t da = base.dim_a();
    const std::size_t dm = base.dim_m();
    for (int attempt = 0; attempt < 50; ++attempt) {
        switch (sampler.index(3)) {
        case 0:
            if (da == dm) {
                if (auto ctx = inverse_context(base.algebra, base.module, linear_map(sampler.invertible_matrix(da))))
                    return *ctx;
            }
            break;
        case 1:
            if (auto ctx = cocycle_shift(base, sampler.cochain(1, da, dm)))
                return *ctx;
            break;
        default: {
            // δ_Hoch of an arity-0 cochain is always a 1-cocycle.
            Cochain b = hochschild_delta(base.algebra, base.module, sampler.cochain(0, da, dm));
            if (auto ctx = gauge_transform(base, b))
                return *ctx;
            break;
        }
        }
    }
    return base;
}

NsAlgebra scale_ns(const NsAlgebra& ns, const Rational& lambda)
{
    return NsAlgebra(lambda * ns.prec, lambda * ns.succ, lambda * ns.vee);
}

} // namespace twistrb
