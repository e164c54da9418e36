#include "twistrb/algebra.hpp"

#include "twistrb/errors.hpp"

namespace twistrb {

Algebra::Algebra(std::size_t dim) : product_(2, dim, dim) {}

Algebra::Algebra(Cochain product) : product_(std::move(product))
{
    if (product_.arity() != 2 || product_.source_dim() != product_.target_dim())
        throw ShapeMismatch("Algebra: product must be a bilinear map on one space");
}

Bimodule::Bimodule(std::size_t algebra_dim, std::size_t dim)
    : algebra_dim_(algebra_dim), dim_(dim), left_(algebra_dim * dim * dim, Rational(0)),
      right_(algebra_dim * dim * dim, Rational(0))
{
}

Vector Bimodule::act_left(const Vector& a, const Vector& m) const
{
    if (a.size() != algebra_dim_ || m.size() != dim_)
        throw ShapeMismatch("Bimodule::act_left: wrong vector lengths");
    Vector out = zero_vector(dim_);
    for (std::size_t i = 0; i < algebra_dim_; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t p = 0; p < dim_; ++p) {
            if (sgn(m[p]) == 0)
                continue;
            Rational s = a[i] * m[p];
            for (std::size_t q = 0; q < dim_; ++q)
                if (sgn(left(i, p, q)) != 0)
                    out[q] += s * left(i, p, q);
        }
    }
    return out;
}

Vector Bimodule::act_right(const Vector& m, const Vector& a) const
{
    if (a.size() != algebra_dim_ || m.size() != dim_)
        throw ShapeMismatch("Bimodule::act_right: wrong vector lengths");
    Vector out = zero_vector(dim_);
    for (std::size_t p = 0; p < dim_; ++p) {
        if (sgn(m[p]) == 0)
            continue;
        for (std::size_t i = 0; i < algebra_dim_; ++i) {
            if (sgn(a[i]) == 0)
                continue;
            Rational s = m[p] * a[i];
            for (std::size_t q = 0; q < dim_; ++q)
                if (sgn(right(p, i, q)) != 0)
                    out[q] += s * right(p, i, q);
        }
    }
    return out;
}

Bimodule adjoint_bimodule(const Algebra& algebra)
{
    const std::size_t d = algebra.dim();
    Bimodule m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                m.left(i, j, k) = algebra.c(i, j, k);
                m.right(i, j, k) = algebra.c(i, j, k);
            }
    return m;
}

Report check_algebra(const Algebra& algebra)
{
    Report report;
    const std::size_t d = algebra.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                auto e = [d](std::size_t x) { return unit_vector(d, x); };
                Vector lhs = algebra.mul(algebra.basis_product(i, j), e(k));
                Vector rhs = algebra.mul(e(i), algebra.basis_product(j, k));
                report.check("(ab)c = a(bc)", {i, j, k}, lhs - rhs);
            }
    return report;
}

Report check_bimodule(const Algebra& algebra, const Bimodule& module)
{
    if (module.algebra_dim() != algebra.dim())
        throw ShapeMismatch("check_bimodule: module is over an algebra of another dimension");
    Report report;
    const std::size_t d = algebra.dim();
    const std::size_t n = module.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t p = 0; p < n; ++p) {
                Vector a = unit_vector(d, i), b = unit_vector(d, j), u = unit_vector(n, p);
                Vector ab = algebra.basis_product(i, j);
                report.check("(ab)·u = a·(b·u)", {i, j, p},
                             module.act_left(ab, u) - module.act_left(a, module.act_left(b, u)));
                report.check("(a·u)·b = a·(u·b)", {i, p, j},
                             module.act_right(module.act_left(a, u), b) - module.act_left(a, module.act_right(u, b)));
                report.check("(u·a)·b = u·(ab)", {p, i, j},
                             module.act_right(module.act_right(u, a), b) - module.act_right(u, ab));
            }
    return report;
}

Report check_algebra_morphism(const Algebra& source, const Algebra& target, const Cochain& phi)
{
    if (phi.arity() != 1 || phi.source_dim() != source.dim() || phi.target_dim() != target.dim())
        throw ShapeMismatch("check_algebra_morphism: map has wrong shape");
    Report report;
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j)
            report.check("phi(ab) = phi(a)phi(b)", {i, j},
                         apply_map(phi, source.basis_product(i, j)) - target.mul(phi.value(i), phi.value(j)));
    return report;
}

Cochain hochschild_delta(const Algebra& algebra, const Bimodule& module, const Cochain& f)
{
    if (f.source_dim() != algebra.dim() || f.target_dim() != module.dim() || module.algebra_dim() != algebra.dim())
        throw ShapeMismatch("hochschild_delta: cochain does not map A^n into M");
    const std::size_t d = algebra.dim();
    const std::size_t n = f.arity();
    return Cochain::tabulate(n + 1, d, module.dim(), [&](const std::vector<std::size_t>& a) {
        std::vector<std::size_t> tail(a.begin() + 1, a.end());
        std::vector<std::size_t> head(a.begin(), a.end() - 1);
        Vector out = module.act_left(unit_vector(d, a[0]), f.value(f.tuple_index(tail)));
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<std::size_t> merged;
            merged.reserve(n);
            for (std::size_t j = 0; j < n + 1; ++j)
                if (j != i)
                    merged.push_back(a[j]);
            // merged[i-1] holds a_i; replace it by a_i a_{i+1}
            Vector term = eval_slot(f, merged, i - 1, algebra.basis_product(a[i - 1], a[i]));
            axpy(out, (i % 2 == 0) ? 1 : -1, term);
        }
        Vector last = module.act_right(f.value(f.tuple_index(head)), unit_vector(d, a[n]));
        axpy(out, ((n + 1) % 2 == 0) ? 1 : -1, last);
        return out;
    });
}

Report check_cocycle(const Algebra& algebra, const Bimodule& module, const Cochain& twist)
{
    if (twist.arity() != 2)
        throw ShapeMismatch("check_cocycle: H must be bilinear");
    Cochain defect = hochschild_delta(algebra, module, twist);
    Report report;
    for (std::size_t t = 0; t < defect.tuples(); ++t)
        report.check("a·H(b,c) - H(ab,c) + H(a,bc) - H(a,b)·c = 0", defect.tuple_of(t), defect.value(t));
    return report;
}

Algebra twisted_semidirect(const Algebra& algebra, const Bimodule& module, const Cochain& twist)
{
    if (twist.arity() != 2 || twist.source_dim() != algebra.dim() || twist.target_dim() != module.dim())
        throw ShapeMismatch("twisted_semidirect: H must map A ⊗ A into M");
    if (!check_cocycle(algebra, module, twist))
        throw InvalidCocycle("twisted_semidirect: H is not a Hochschild 2-cocycle");
    const std::size_t da = algebra.dim();
    const std::size_t dm = module.dim();
    Algebra out(da + dm);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            for (std::size_t k = 0; k < da; ++k)
                out.c(i, j, k) = algebra.c(i, j, k);
            for (std::size_t q = 0; q < dm; ++q)
                out.c(i, j, da + q) = twist.at(i * da + j, q);
        }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t p = 0; p < dm; ++p)
            for (std::size_t q = 0; q < dm; ++q) {
                out.c(i, da + p, da + q) = module.left(i, p, q);
                out.c(da + p, i, da + q) = module.right(p, i, q);
            }
    return out;
}

bool is_subalgebra(const Algebra& algebra, const std::vector<Vector>& vectors)
{
    Subspace s = span(algebra.dim(), vectors);
    for (const auto& x : s.basis)
        for (const auto& y : s.basis)
            if (!s.contains(algebra.mul(x, y)))
                return false;
    return true;
}

} // namespace twistrb
