#include "twistrb/deform.hpp"

#include "twistrb/errors.hpp"

#include <string>

namespace twistrb {

namespace {

std::string order_label(const std::string& identity, std::size_t k)
{
    return identity + " [t^" + std::to_string(k) + "]";
}

Cochain zero_linear(std::size_t source, std::size_t target)
{
    return Cochain(1, source, target);
}

// X(u) = a·u - u·a + H(a, Tu) - H(Tu, a) as a linear map M -> M.
Cochain twisted_adjoint(const TrbContext& ctx, const Vector& a)
{
    const std::size_t dm = ctx.dim_m();
    return Cochain::tabulate(1, dm, dm, [&](const std::vector<std::size_t>& p) {
        Vector u = unit_vector(dm, p[0]);
        Vector tu = ctx.T(u);
        return ctx.module.act_left(a, u) - ctx.module.act_right(u, a) + ctx.H(a, tu) - ctx.H(tu, a);
    });
}

// b -> ab - ba as a linear map A -> A.
Cochain inner_derivation(const TrbContext& ctx, const Vector& a)
{
    const std::size_t da = ctx.dim_a();
    return Cochain::tabulate(1, da, da, [&](const std::vector<std::size_t>& i) {
        Vector b = unit_vector(da, i[0]);
        return ctx.algebra.mul(a, b) - ctx.algebra.mul(b, a);
    });
}

void require_nijenhuis(const TrbContext& ctx, const Vector& a, const char* where)
{
    Report r = is_nijenhuis_element(ctx, a);
    if (!r)
        throw AxiomFailure(std::string(where) + ": not a Nijenhuis element\n" + r.describe(3));
}

} // namespace

void RbDeformation::check_shapes() const
{
    ctx.check_shapes();
    if (maps.empty())
        throw ShapeMismatch("RbDeformation: no maps");
    for (const auto& m : maps)
        if (m.arity() != 1 || m.source_dim() != ctx.dim_m() || m.target_dim() != ctx.dim_a())
            throw ShapeMismatch("RbDeformation: every T_i must be a linear map M -> A");
    if (maps.front() != ctx.op)
        throw ShapeMismatch("RbDeformation: T_0 must equal T");
}

RbDeformation trivial_rb_deformation(const TrbContext& ctx, std::size_t order)
{
    RbDeformation d{ctx, {ctx.op}};
    for (std::size_t i = 1; i <= order; ++i)
        d.maps.push_back(zero_linear(ctx.dim_m(), ctx.dim_a()));
    return d;
}

std::vector<Cochain> rb_deformation_residuals(const RbDeformation& d)
{
    d.check_shapes();
    const TrbContext& ctx = d.ctx;
    const std::size_t dm = ctx.dim_m();
    const std::size_t n_max = d.order();
    // Images T_i(m_p) for all i, p.
    auto image = [&](std::size_t i, std::size_t p) { return d.maps[i].value(p); };
    std::vector<Cochain> out;
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(Cochain::tabulate(2, dm, ctx.dim_a(), [&](const std::vector<std::size_t>& t) {
            const Vector u = unit_vector(dm, t[0]);
            const Vector v = unit_vector(dm, t[1]);
            Vector r = zero_vector(ctx.dim_a());
            for (std::size_t i = 0; i <= n; ++i) {
                const std::size_t j = n - i;
                r = r + ctx.algebra.mul(image(i, t[0]), image(j, t[1]));
                r = r - apply_map(d.maps[i],
                                  ctx.module.act_right(u, image(j, t[1])) + ctx.module.act_left(image(j, t[0]), v));
                for (std::size_t k = 0; j >= k; ++k) {
                    const std::size_t jj = j - k;
                    r = r - apply_map(d.maps[i], ctx.H(image(jj, t[0]), image(k, t[1])));
                }
            }
            return r;
        }));
    }
    return out;
}

bool is_rb_deformation(const RbDeformation& d)
{
    for (const auto& r : rb_deformation_residuals(d))
        if (!r.is_zero())
            return false;
    return true;
}

RbInfinitesimal rb_infinitesimal(const RbDeformation& d)
{
    d.check_shapes();
    if (d.order() < 1)
        throw std::invalid_argument("rb_infinitesimal: deformation has order 0");
    RbInfinitesimal out;
    out.t1 = d.maps[1];
    out.cocycle = dT(d.ctx, out.t1).is_zero();
    return out;
}

std::vector<Cochain> series_compose(const std::vector<Cochain>& f, const std::vector<Cochain>& g, std::size_t order)
{
    if (f.empty() || g.empty())
        throw ShapeMismatch("series_compose: empty series");
    std::vector<Cochain> out;
    for (std::size_t k = 0; k <= order; ++k) {
        Cochain acc(1, g.front().source_dim(), f.front().target_dim());
        for (std::size_t i = 0; i <= k && i < f.size(); ++i)
            if (k - i < g.size())
                acc += post_compose(f[i], g[k - i]);
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Cochain> series_inverse(const std::vector<Cochain>& f, std::size_t order)
{
    if (f.empty() || f.front() != identity_map(f.front().source_dim()))
        throw ShapeMismatch("series_inverse: constant term must be the identity");
    const std::size_t dim = f.front().source_dim();
    // g_0 = id, g_k = -Σ_{i=1..k} f_i g_{k-i}
    std::vector<Cochain> g{identity_map(dim)};
    for (std::size_t k = 1; k <= order; ++k) {
        Cochain acc(1, dim, dim);
        for (std::size_t i = 1; i <= k && i < f.size(); ++i)
            acc -= post_compose(f[i], g[k - i]);
        g.push_back(std::move(acc));
    }
    return g;
}

std::vector<Cochain> witness_phi(const TrbContext& ctx, const RbEquivalenceWitness& w, std::size_t order)
{
    const std::size_t da = ctx.dim_a();
    std::vector<Cochain> out{identity_map(da)};
    if (order >= 1)
        out.push_back(inner_derivation(ctx, w.a));
    for (std::size_t i = 2; i <= order; ++i)
        out.push_back(i - 2 < w.phi.size() ? w.phi[i - 2] : zero_linear(da, da));
    return out;
}

std::vector<Cochain> witness_psi(const TrbContext& ctx, const RbEquivalenceWitness& w, std::size_t order)
{
    const std::size_t dm = ctx.dim_m();
    std::vector<Cochain> out{identity_map(dm)};
    if (order >= 1)
        out.push_back(twisted_adjoint(ctx, w.a));
    for (std::size_t i = 2; i <= order; ++i)
        out.push_back(i - 2 < w.psi.size() ? w.psi[i - 2] : zero_linear(dm, dm));
    return out;
}

Report rb_check_equivalence(const RbDeformation& d, const RbDeformation& target, const RbEquivalenceWitness& w)
{
    d.check_shapes();
    target.check_shapes();
    if (d.order() != target.order() || d.ctx.algebra != target.ctx.algebra || d.ctx.module != target.ctx.module
        || d.ctx.twist != target.ctx.twist)
        throw ShapeMismatch("rb_check_equivalence: deformations of different operators or orders");
    const TrbContext& ctx = d.ctx;
    const std::size_t n = d.order();
    const std::size_t da = ctx.dim_a();
    const std::size_t dm = ctx.dim_m();
    if (w.a.size() != da)
        throw ShapeMismatch("rb_check_equivalence: witness element has wrong length");
    const auto phi = witness_phi(ctx, w, n);
    const auto psi = witness_psi(ctx, w, n);
    for (const auto& x : w.phi)
        if (x.arity() != 1 || x.source_dim() != da || x.target_dim() != da)
            throw ShapeMismatch("rb_check_equivalence: φ_i must be linear maps A -> A");
    for (const auto& x : w.psi)
        if (x.arity() != 1 || x.source_dim() != dm || x.target_dim() != dm)
            throw ShapeMismatch("rb_check_equivalence: ψ_i must be linear maps M -> M");

    Report report;
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t b = 0; b < da; ++b) {
            for (std::size_t c = 0; c < da; ++c) {
                Vector r = apply_map(phi[k], ctx.algebra.basis_product(b, c));
                Vector h = apply_map(psi[k], ctx.twist.value(b * da + c));
                for (std::size_t i = 0; i <= k; ++i) {
                    r = r - ctx.algebra.mul(phi[i].value(b), phi[k - i].value(c));
                    h = h - ctx.H(phi[i].value(b), phi[k - i].value(c));
                }
                report.check(order_label("φ_t(bc) = φ_t(b)φ_t(c)", k), {b, c}, std::move(r));
                report.check(order_label("ψ_t∘H = H∘(φ_t⊗φ_t)", k), {b, c}, std::move(h));
            }
            for (std::size_t p = 0; p < dm; ++p) {
                const Vector bv = unit_vector(da, b);
                const Vector u = unit_vector(dm, p);
                Vector l = apply_map(psi[k], ctx.module.act_left(bv, u));
                Vector r = apply_map(psi[k], ctx.module.act_right(u, bv));
                for (std::size_t i = 0; i <= k; ++i) {
                    l = l - ctx.module.act_left(phi[i].value(b), psi[k - i].value(p));
                    r = r - ctx.module.act_right(psi[k - i].value(p), phi[i].value(b));
                }
                report.check(order_label("ψ_t(b·u) = φ_t(b)·ψ_t(u)", k), {b, p}, std::move(l));
                report.check(order_label("ψ_t(u·b) = ψ_t(u)·φ_t(b)", k), {b, p}, std::move(r));
            }
        }
        for (std::size_t p = 0; p < dm; ++p) {
            Vector r = zero_vector(da);
            for (std::size_t i = 0; i <= k; ++i) {
                r = r + apply_map(phi[i], d.maps[k - i].value(p));
                r = r - apply_map(target.maps[i], psi[k - i].value(p));
            }
            report.check(order_label("φ_t∘T_t = T'_t∘ψ_t", k), {p}, std::move(r));
        }
    }
    if (report.ok() && n >= 1) {
        Cochain diff = d.maps[1] - target.maps[1] - dT_of_element(ctx, w.a);
        for (std::size_t p = 0; p < dm; ++p)
            report.check("T_1 - T'_1 = d_T(a)", {p}, diff.value(p));
    }
    return report;
}

RbDeformation rigidify(const RbDeformation& d, const Vector& a)
{
    d.check_shapes();
    require_nijenhuis(d.ctx, a, "rigidify");
    const std::size_t n = d.order();
    const RbEquivalenceWitness w{a, {}, {}};
    auto phi = witness_phi(d.ctx, w, n);
    auto psi_inv = series_inverse(witness_psi(d.ctx, w, n), n);
    RbDeformation out{d.ctx, series_compose(series_compose(phi, d.maps, n), psi_inv, n)};
    return out;
}

RbDeformation transported_rb_deformation(const TrbContext& ctx, const Vector& a, std::size_t order)
{
    ctx.check_shapes();
    require_nijenhuis(ctx, a, "transported_rb_deformation");
    const RbEquivalenceWitness w{a, {}, {}};
    auto phi_inv = series_inverse(witness_phi(ctx, w, order), order);
    auto psi = witness_psi(ctx, w, order);
    return RbDeformation{ctx, series_compose(series_compose(phi_inv, {ctx.op}, order), psi, order)};
}

std::optional<Vector> coboundary_preimage(const TrbContext& ctx, const Cochain& f)
{
    if (f.arity() != 1 || f.source_dim() != ctx.dim_m() || f.target_dim() != ctx.dim_a())
        throw ShapeMismatch("coboundary_preimage: f must be a linear map M -> A");
    return solve(dT_matrix(ctx, 0), f.coefficients());
}

void NsDeformation::check_shapes() const
{
    if (maps.empty())
        throw ShapeMismatch("NsDeformation: no maps");
    for (const auto& m : maps)
        if (m.arity() != 2 || m.dim() != base.dim())
            throw ShapeMismatch("NsDeformation: every π_i must be an arity-2 tagged cochain on A");
    if (maps.front() != ns_to_multiplication(base))
        throw ShapeMismatch("NsDeformation: π_0 must equal π");
}

NsDeformation trivial_ns_deformation(const NsAlgebra& base, std::size_t order)
{
    NsDeformation d{base, {ns_to_multiplication(base)}};
    for (std::size_t i = 1; i <= order; ++i)
        d.maps.emplace_back(2, base.dim());
    return d;
}

namespace {

TaggedCochain order_sum(const std::vector<TaggedCochain>& maps, std::size_t n, std::size_t lo)
{
    TaggedCochain acc(3, maps.front().dim());
    for (std::size_t i = lo; i + lo <= n; ++i) {
        const std::size_t j = n - i;
        if (i >= maps.size() || j >= maps.size())
            continue;
        acc += partial_compose(maps[i], maps[j], 1) - partial_compose(maps[i], maps[j], 2);
    }
    return acc;
}

} // namespace

std::vector<TaggedCochain> ns_deformation_residuals(const NsDeformation& d)
{
    d.check_shapes();
    std::vector<TaggedCochain> out;
    for (std::size_t n = 0; n <= d.order(); ++n)
        out.push_back(order_sum(d.maps, n, 0));
    return out;
}

bool is_ns_deformation(const NsDeformation& d)
{
    for (const auto& r : ns_deformation_residuals(d))
        if (!r.is_zero())
            return false;
    return true;
}

NsObstruction ns_obstruction(const NsDeformation& d)
{
    d.check_shapes();
    NsObstruction out;
    out.ob = Rational(-1) * order_sum(d.maps, d.order() + 1, 1);
    out.cocycle = delta_pi(d.maps.front(), out.ob).is_zero();
    return out;
}

std::optional<TaggedCochain> ns_extend(const NsDeformation& d)
{
    const NsObstruction ob = ns_obstruction(d);
    const Vector rhs = (Rational(-1) * ob.ob).flatten();
    auto x = solve(delta_pi_matrix(d.maps.front(), 2), rhs);
    if (!x)
        return std::nullopt;
    return TaggedCochain::from_flat(2, d.base.dim(), *x);
}

} // namespace twistrb
