#include "twistrb/trb.hpp"

#include "twistrb/errors.hpp"

namespace twistrb {

namespace {

Rational sign(std::size_t n)
{
    return (n % 2 == 0) ? 1 : -1;
}

Vector e(std::size_t dim, std::size_t i)
{
    return unit_vector(dim, i);
}

} // namespace

void TrbContext::check_shapes() const
{
    const std::size_t da = algebra.dim();
    const std::size_t dm = module.dim();
    if (module.algebra_dim() != da)
        throw ShapeMismatch("context: bimodule is over an algebra of another dimension");
    if (twist.arity() != 2 || twist.source_dim() != da || twist.target_dim() != dm)
        throw ShapeMismatch("context: H must map A ⊗ A into M");
    if (op.arity() != 1 || op.source_dim() != dm || op.target_dim() != da)
        throw ShapeMismatch("context: T must map M into A");
}

Report is_twisted_rb(const TrbContext& ctx)
{
    ctx.check_shapes();
    Report report;
    const std::size_t dm = ctx.dim_m();
    for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t q = 0; q < dm; ++q) {
            Vector u = e(dm, p), v = e(dm, q);
            Vector tu = ctx.op.value(p), tv = ctx.op.value(q);
            Vector inner = ctx.module.act_right(u, tv) + ctx.module.act_left(tu, v) + ctx.H(tu, tv);
            report.check("T(u)T(v) = T(u·T(v) + T(u)·v + H(Tu,Tv))", {p, q},
                         ctx.algebra.mul(tu, tv) - ctx.T(inner));
        }
    return report;
}

Algebra star_product(const TrbContext& ctx)
{
    ctx.check_shapes();
    const std::size_t dm = ctx.dim_m();
    return Algebra(Cochain::tabulate(2, dm, dm, [&](const std::vector<std::size_t>& idx) {
        Vector u = e(dm, idx[0]), v = e(dm, idx[1]);
        Vector tu = ctx.op.value(idx[0]), tv = ctx.op.value(idx[1]);
        return ctx.module.act_right(u, tv) + ctx.module.act_left(tu, v) + ctx.H(tu, tv);
    }));
}

Bimodule t_bimodule_unchecked(const TrbContext& ctx)
{
    ctx.check_shapes();
    const std::size_t da = ctx.dim_a();
    const std::size_t dm = ctx.dim_m();
    Bimodule out(dm, da);
    for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t i = 0; i < da; ++i) {
            Vector u = e(dm, p), a = e(da, i);
            Vector tu = ctx.op.value(p);
            Vector l = ctx.algebra.mul(tu, a) - ctx.T(ctx.module.act_right(u, a) + ctx.H(tu, a));
            Vector r = ctx.algebra.mul(a, tu) - ctx.T(ctx.module.act_left(a, u) + ctx.H(a, tu));
            for (std::size_t k = 0; k < da; ++k) {
                out.left(p, i, k) = l[k];
                out.right(i, p, k) = r[k];
            }
        }
    return out;
}

Bimodule t_bimodule(const TrbContext& ctx)
{
    Bimodule out = t_bimodule_unchecked(ctx);
    Report axioms = check_bimodule(star_product(ctx), out);
    if (!axioms)
        throw AxiomFailure("t_bimodule: (M,*)-bimodule axiom fails: " + axioms.describe(1));
    return out;
}

Cochain dT(const TrbContext& ctx, const Cochain& f)
{
    ctx.check_shapes();
    const std::size_t da = ctx.dim_a();
    const std::size_t dm = ctx.dim_m();
    if (f.source_dim() != dm || f.target_dim() != da)
        throw ShapeMismatch("dT: cochain must map M^n into A");
    const std::size_t n = f.arity();
    const Algebra star = star_product(ctx);

    // T(w·? ) pieces that only involve an A-value x next to a basis u.
    auto left_piece = [&](std::size_t p, const Vector& x) {
        // T(u)x - T(u·x) - TH(Tu, x)
        Vector tu = ctx.op.value(p);
        Vector u = e(dm, p);
        return ctx.algebra.mul(tu, x) - ctx.T(ctx.module.act_right(u, x) + ctx.H(tu, x));
    };
    auto right_piece = [&](const Vector& x, std::size_t p) {
        // x T(u) - T(x·u) - TH(x, Tu)
        Vector tu = ctx.op.value(p);
        Vector u = e(dm, p);
        return ctx.algebra.mul(x, tu) - ctx.T(ctx.module.act_left(x, u) + ctx.H(x, tu));
    };

    Cochain out = Cochain::tabulate(n + 1, dm, da, [&](const std::vector<std::size_t>& u) {
        std::vector<std::size_t> tail(u.begin() + 1, u.end());
        std::vector<std::size_t> head(u.begin(), u.end() - 1);
        Vector acc = left_piece(u[0], f.value(f.tuple_index(tail)));
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<std::size_t> merged;
            merged.reserve(n);
            for (std::size_t j = 0; j < n + 1; ++j)
                if (j != i)
                    merged.push_back(u[j]);
            axpy(acc, sign(i), eval_slot(f, merged, i - 1, star.basis_product(u[i - 1], u[i])));
        }
        axpy(acc, sign(n + 1), right_piece(f.value(f.tuple_index(head)), u[n]));
        return acc;
    });
    return sign(n) * out;
}

Matrix dT_matrix(const TrbContext& ctx, std::size_t n)
{
    const std::size_t da = ctx.dim_a();
    const std::size_t dm = ctx.dim_m();
    Cochain shape(n, dm, da);
    const std::size_t cols = shape.coefficients().size();
    Matrix m(int_pow(dm, n + 1) * da, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        Cochain basis = Cochain::from_flat(n, dm, da, unit_vector(cols, c));
        m.set_column(c, dT(ctx, basis).coefficients());
    }
    return m;
}

Subspace cocycles(const TrbContext& ctx, std::size_t n)
{
    return nullspace(dT_matrix(ctx, n));
}

std::vector<std::size_t> cohomology_dims(const TrbContext& ctx, std::size_t n_max)
{
    std::vector<std::size_t> dims;
    Matrix previous;
    for (std::size_t n = 0; n <= n_max; ++n) {
        Matrix d = dT_matrix(ctx, n);
        Subspace z = nullspace(d);
        Subspace b = n == 0 ? Subspace{z.ambient_dim, {}} : column_space(previous);
        dims.push_back(quotient_dim(z, b));
        previous = std::move(d);
    }
    return dims;
}

Cochain gauge_map(const TrbContext& ctx, const Cochain& b)
{
    return identity_map(ctx.dim_m()) + post_compose(b, ctx.op);
}

std::optional<TrbContext> gauge_transform(const TrbContext& ctx, const Cochain& b)
{
    ctx.check_shapes();
    if (b.arity() != 1 || b.source_dim() != ctx.dim_a() || b.target_dim() != ctx.dim_m())
        throw ShapeMismatch("gauge_transform: B must map A into M");
    if (!hochschild_delta(ctx.algebra, ctx.module, b).is_zero())
        throw NotACocycle("gauge_transform: B is not a Hochschild 1-cocycle");
    auto inv = inverse(to_matrix(gauge_map(ctx, b)));
    if (!inv)
        return std::nullopt;
    TrbContext out = ctx;
    out.op = linear_map(to_matrix(ctx.op) * *inv);
    return out;
}

std::optional<TrbContext> cocycle_shift(const TrbContext& ctx, const Cochain& h)
{
    ctx.check_shapes();
    if (h.arity() != 1 || h.source_dim() != ctx.dim_a() || h.target_dim() != ctx.dim_m())
        throw ShapeMismatch("cocycle_shift: h must map A into M");
    Cochain shifted = identity_map(ctx.dim_m()) - post_compose(h, ctx.op);
    auto inv = inverse(to_matrix(shifted));
    if (!inv)
        return std::nullopt;
    TrbContext out = ctx;
    out.twist = ctx.twist + hochschild_delta(ctx.algebra, ctx.module, h);
    out.op = linear_map(to_matrix(ctx.op) * *inv);
    return out;
}

Cochain dT_of_element(const TrbContext& ctx, const Vector& a)
{
    return dT(ctx, Cochain::from_flat(0, ctx.dim_m(), ctx.dim_a(), a));
}

Report is_nijenhuis_element(const TrbContext& ctx, const Vector& a)
{
    ctx.check_shapes();
    const std::size_t da = ctx.dim_a();
    const std::size_t dm = ctx.dim_m();
    if (a.size() != da)
        throw ShapeMismatch("is_nijenhuis_element: element has wrong length");
    const Algebra& alg = ctx.algebra;
    const Bimodule& mod = ctx.module;
    auto commutator = [&](const Vector& x) { return alg.mul(a, x) - alg.mul(x, a); };
    // X(w) = a·w - w·a + H(a, Tw) - H(Tw, a)
    auto twisted_ad = [&](const Vector& w) {
        Vector tw = ctx.T(w);
        return mod.act_left(a, w) - mod.act_right(w, a) + ctx.H(a, tw) - ctx.H(tw, a);
    };

    Report report;
    Cochain da_cochain = dT_of_element(ctx, a);
    for (std::size_t p = 0; p < dm; ++p) {
        Vector x = da_cochain.value(p); // l_T(u,a) - r_T(a,u)
        report.check("a(l_T(u,a) - r_T(a,u)) - (l_T(u,a) - r_T(a,u))a = 0", {p}, commutator(x));
    }
    for (std::size_t i = 0; i < da; ++i) {
        Vector b = e(da, i);
        Vector ab = commutator(b);
        for (std::size_t j = 0; j < da; ++j) {
            Vector c = e(da, j);
            Vector ac = commutator(c);
            report.check("(ab - ba)(ac - ca) = 0", {i, j}, alg.mul(ab, ac));
            Vector hbc = ctx.H(b, c);
            report.check("a·H(b,c) - H(b,c)·a + H(a,TH(b,c)) - H(TH(b,c),a) = H(ab - ba, c) + H(b, ac - ca)", {i, j},
                         twisted_ad(hbc) - ctx.H(ab, c) - ctx.H(b, ac));
            report.check("H(ab - ba, ac - ca) = 0", {i, j}, ctx.H(ab, ac));
        }
        for (std::size_t p = 0; p < dm; ++p) {
            Vector u = e(dm, p);
            Vector xu = twisted_ad(u);
            report.check("X(b·u) = (ab - ba)·u + b·X(u)", {i, p},
                         twisted_ad(mod.act_left(b, u)) - mod.act_left(ab, u) - mod.act_left(b, xu));
            report.check("(ab - ba)·X(u) = 0", {i, p}, mod.act_left(ab, xu));
            report.check("X(u·b) = u·(ab - ba) + X(u)·b", {i, p},
                         twisted_ad(mod.act_right(u, b)) - mod.act_right(u, ab) - mod.act_right(xu, b));
            report.check("X(u)·(ab - ba) = 0", {i, p}, mod.act_right(xu, ab));
        }
    }
    return report;
}

std::vector<Vector> nijenhuis_filter(const TrbContext& ctx, const std::vector<Vector>& candidates)
{
    std::vector<Vector> out;
    for (const auto& a : candidates)
        if (is_nijenhuis_element(ctx, a))
            out.push_back(a);
    return out;
}

std::vector<Vector> nijenhuis_grid(const TrbContext& ctx, const std::vector<Rational>& values)
{
    const std::size_t da = ctx.dim_a();
    std::vector<Vector> candidates;
    if (values.empty())
        return candidates;
    std::vector<std::size_t> digit(da, 0);
    while (true) {
        Vector a(da);
        for (std::size_t i = 0; i < da; ++i)
            a[i] = values[digit[i]];
        candidates.push_back(std::move(a));
        std::size_t pos = da;
        while (pos > 0 && ++digit[pos - 1] == values.size())
            digit[--pos] = 0;
        if (pos == 0)
            break;
    }
    return nijenhuis_filter(ctx, candidates);
}

bool certifies_rigidity(const TrbContext& ctx, const std::vector<Vector>& subset)
{
    std::vector<Vector> images;
    for (const auto& a : subset) {
        if (!is_nijenhuis_element(ctx, a))
            return false;
        images.push_back(dT_of_element(ctx, a).coefficients());
    }
    Subspace z = cocycles(ctx, 1);
    Subspace b = span(z.ambient_dim, images);
    return quotient_dim(z, b) == 0;
}

Report is_trb_morphism(const TrbContext& ctx, const TrbContext& target, const Cochain& phi, const Cochain& psi)
{
    ctx.check_shapes();
    target.check_shapes();
    const std::size_t da = ctx.dim_a();
    const std::size_t dm = ctx.dim_m();
    if (phi.arity() != 1 || phi.source_dim() != da || phi.target_dim() != target.dim_a())
        throw ShapeMismatch("is_trb_morphism: phi must map A into A'");
    if (psi.arity() != 1 || psi.source_dim() != dm || psi.target_dim() != target.dim_m())
        throw ShapeMismatch("is_trb_morphism: psi must map M into M'");
    Report report = check_algebra_morphism(ctx.algebra, target.algebra, phi);
    for (std::size_t i = 0; i < da; ++i) {
        Vector a = e(da, i);
        Vector pa = phi.value(i);
        for (std::size_t p = 0; p < dm; ++p) {
            Vector u = e(dm, p);
            Vector pu = psi.value(p);
            report.check("psi(a·u) = phi(a)·psi(u)", {i, p},
                         apply_map(psi, ctx.module.act_left(a, u)) - target.module.act_left(pa, pu));
            report.check("psi(u·a) = psi(u)·phi(a)", {p, i},
                         apply_map(psi, ctx.module.act_right(u, a)) - target.module.act_right(pu, pa));
        }
        for (std::size_t j = 0; j < da; ++j)
            report.check("psi∘H = H'∘(phi⊗phi)", {i, j},
                         apply_map(psi, ctx.H(a, e(da, j))) - target.H(pa, phi.value(j)));
    }
    for (std::size_t p = 0; p < dm; ++p)
        report.check("phi∘T = T'∘psi", {p}, apply_map(phi, ctx.op.value(p)) - target.T(psi.value(p)));
    return report;
}

Cochain multiplication_cochain(const Algebra& algebra)
{
    return algebra.product();
}

TrbContext reynolds_context(const Algebra& algebra, const Cochain& r)
{
    if (r.arity() != 1 || r.source_dim() != algebra.dim() || r.target_dim() != algebra.dim())
        throw ShapeMismatch("reynolds_context: R must be a linear map A -> A");
    return TrbContext{algebra, adjoint_bimodule(algebra), Rational(-1) * algebra.product(), r};
}

TrbContext nijenhuis_context(const Algebra& algebra, const Cochain& n)
{
    const std::size_t d = algebra.dim();
    if (n.arity() != 1 || n.source_dim() != d || n.target_dim() != d)
        throw ShapeMismatch("nijenhuis_context: N must be a linear map A -> A");
    const auto N = [&](const Vector& a) { return apply_map(n, a); };
    const Cochain deformed = Cochain::tabulate(2, d, d, [&](const std::vector<std::size_t>& ij) {
        const Vector a = unit_vector(d, ij[0]), b = unit_vector(d, ij[1]);
        return algebra.mul(a, N(b)) + algebra.mul(N(a), b) - N(algebra.mul(a, b));
    });
    Bimodule module(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Vector na = N(unit_vector(d, i));
        for (std::size_t p = 0; p < d; ++p) {
            const Vector m = unit_vector(d, p);
            const Vector left = algebra.mul(na, m), right = algebra.mul(m, na);
            for (std::size_t q = 0; q < d; ++q) {
                module.left(i, p, q) = left[q];
                module.right(p, i, q) = right[q];
            }
        }
    }
    Cochain twist = Cochain::tabulate(2, d, d, [&](const std::vector<std::size_t>& ij) {
        return Rational(-1) * N(algebra.basis_product(ij[0], ij[1]));
    });
    return TrbContext{Algebra(deformed), module, std::move(twist), identity_map(d)};
}

} // namespace twistrb
