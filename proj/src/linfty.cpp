#include "twistrb/linfty.hpp"

#include "twistrb/errors.hpp"

#include <string>

namespace twistrb {

namespace {

// (-1)^k for a possibly negative k.
Rational parity_sign(long long k)
{
    return (k % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == k) {
            out.push_back(pick);
            return;
        }
        for (std::size_t x = start; x < n; ++x) {
            pick.push_back(x);
            rec(x + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

// Hom(M^n, A) part of a map on A ⊕ M; anything else is a RestrictionFailure.
Cochain restrict_to_m(const Cochain& full, std::size_t da, std::size_t dm, const char* who)
{
    Cochain out(full.arity(), dm, da);
    for (std::size_t t = 0; t < full.tuples(); ++t) {
        auto row = full.row(t);
        auto idx = full.tuple_of(t);
        bool all_m = true;
        for (auto& i : idx) {
            if (i < da)
                all_m = false;
            else
                i -= da;
        }
        for (std::size_t k = 0; k < da + dm; ++k) {
            if (sgn(row[k]) == 0)
                continue;
            if (!all_m || k >= da)
                throw RestrictionFailure(std::string(who) + ": result leaves Hom(M^n, A) at tuple "
                                         + std::to_string(t));
            out.at(out.tuple_index(idx), k) = row[k];
        }
    }
    return out;
}

} // namespace

Cochain lift(const Cochain& p, std::size_t dim_a, std::size_t dim_m)
{
    if (p.source_dim() != dim_m || p.target_dim() != dim_a)
        throw ShapeMismatch("lift: cochain must map M^n into A");
    const std::size_t d = dim_a + dim_m;
    Cochain out(p.arity(), d, d);
    for (std::size_t t = 0; t < p.tuples(); ++t) {
        auto idx = p.tuple_of(t);
        for (auto& i : idx)
            i += dim_a;
        std::size_t target = out.tuple_index(idx);
        for (std::size_t k = 0; k < dim_a; ++k)
            out.at(target, k) = p.at(t, k);
    }
    return out;
}

Cochain lift_multiplication(const Algebra& algebra, const Bimodule& module)
{
    const std::size_t da = algebra.dim();
    const std::size_t dm = module.dim();
    const std::size_t d = da + dm;
    Cochain out(2, d, d);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k)
                out.at(i * d + j, k) = algebra.c(i, j, k);
        for (std::size_t p = 0; p < dm; ++p)
            for (std::size_t q = 0; q < dm; ++q) {
                out.at(i * d + da + p, da + q) = module.left(i, p, q);
                out.at((da + p) * d + i, da + q) = module.right(p, i, q);
            }
    }
    return out;
}

namespace {

Cochain circle_bar(const Cochain& f, const Cochain& g)
{
    const long long n = static_cast<long long>(g.arity());
    Cochain out(f.arity() + g.arity() - 1, f.source_dim(), f.target_dim());
    for (std::size_t i = 1; i <= f.arity(); ++i)
        out += parity_sign(static_cast<long long>(i - 1) * (n - 1)) * compose_at(f, i, g);
    return out;
}

} // namespace

Cochain gerstenhaber(const Cochain& f, const Cochain& g)
{
    if (f.arity() + g.arity() == 0)
        throw ShapeMismatch("gerstenhaber: bracket of two arity-0 cochains has no arity");
    if (f.source_dim() != f.target_dim() || g.source_dim() != g.target_dim() || f.source_dim() != g.source_dim())
        throw ShapeMismatch("gerstenhaber: cochains must be endomorphisms of one space");
    const long long m = static_cast<long long>(f.arity());
    const long long n = static_cast<long long>(g.arity());
    return circle_bar(f, g) - parity_sign((m - 1) * (n - 1)) * circle_bar(g, f);
}

Cochain derived_bracket(const Algebra& algebra, const Bimodule& module, const Cochain& p, const Cochain& q)
{
    const std::size_t da = algebra.dim();
    const std::size_t dm = module.dim();
    Cochain mu = lift_multiplication(algebra, module);
    Cochain full = gerstenhaber(gerstenhaber(mu, lift(p, da, dm)), lift(q, da, dm));
    return parity_sign(static_cast<long long>(p.arity())) * restrict_to_m(full, da, dm, "derived_bracket");
}

Cochain ternary_bracket(const Cochain& twist, const Cochain& p, const Cochain& q, const Cochain& r)
{
    const long long pd = static_cast<long long>(p.arity());
    const long long qd = static_cast<long long>(q.arity());
    const long long rd = static_cast<long long>(r.arity());
    if (pd + qd + rd == 0)
        throw ShapeMismatch("ternary_bracket: three arity-0 arguments have no output arity");
    if (!p.same_shape(Cochain(p.arity(), q.source_dim(), q.target_dim()))
        || !r.same_shape(Cochain(r.arity(), q.source_dim(), q.target_dim())))
        throw ShapeMismatch("ternary_bracket: arguments must all lie in Hom(M^n, A)");
    const std::size_t dm = p.source_dim();
    const std::size_t da = p.target_dim();
    if (twist.arity() != 2 || twist.source_dim() != da || twist.target_dim() != dm)
        throw ShapeMismatch("ternary_bracket: H must map A ⊗ A into M");

    // Σ_{1≤i≤outer} (-1)^{(i-1)k} outer(.., H(x(..), y(..)), ..)
    auto insertion_sum = [&](const Cochain& outer, const Cochain& x, const Cochain& y, long long k) {
        Cochain acc(p.arity() + q.arity() + r.arity() - 1, dm, da);
        if (outer.arity() == 0)
            return acc;
        Cochain inner = apply_binary(twist, x, y);
        for (std::size_t i = 1; i <= outer.arity(); ++i)
            acc += parity_sign(static_cast<long long>(i - 1) * k) * compose_at(outer, i, inner);
        return acc;
    };

    Cochain out = insertion_sum(p, q, r, qd);
    out -= parity_sign(qd * rd) * insertion_sum(p, r, q, rd);
    out -= parity_sign(pd * qd) * insertion_sum(q, p, r, pd);
    out += parity_sign(pd * (qd + rd)) * insertion_sum(q, r, p, rd);
    out -= parity_sign(pd * qd + qd * rd + rd * pd) * insertion_sum(r, q, p, qd);
    out += parity_sign((pd + qd) * rd) * insertion_sum(r, p, q, pd);
    return parity_sign(pd * qd * rd) * out;
}

Cochain lift_twist(const Cochain& twist, std::size_t dim_a, std::size_t dim_m)
{
    if (twist.arity() != 2 || twist.source_dim() != dim_a || twist.target_dim() != dim_m)
        throw ShapeMismatch("lift_twist: H must map A ⊗ A into M");
    const std::size_t d = dim_a + dim_m;
    Cochain out(2, d, d);
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t j = 0; j < dim_a; ++j)
            for (std::size_t q = 0; q < dim_m; ++q)
                out.at(i * d + j, dim_a + q) = twist.at(i * dim_a + j, q);
    return out;
}

Cochain ternary_bracket_derived(const Algebra& algebra, const Bimodule& module, const Cochain& twist, const Cochain& p,
                                const Cochain& q, const Cochain& r)
{
    if (p.arity() + q.arity() + r.arity() == 0)
        throw ShapeMismatch("ternary_bracket_derived: three arity-0 arguments have no output arity");
    const std::size_t da = algebra.dim();
    const std::size_t dm = module.dim();
    Cochain full = gerstenhaber(
        gerstenhaber(gerstenhaber(lift_twist(twist, da, dm), lift(p, da, dm)), lift(q, da, dm)), lift(r, da, dm));
    return parity_sign(static_cast<long long>(q.arity()) + 1) * restrict_to_m(full, da, dm, "ternary_bracket_derived");
}

Cochain mc_residual(const Algebra& algebra, const Bimodule& module, const Cochain& twist, const Cochain& op)
{
    if (op.arity() != 1)
        throw ShapeMismatch("mc_residual: T must be a linear map");
    return Rational(1, 2) * derived_bracket(algebra, module, op, op)
           - Rational(1, 6) * ternary_bracket(twist, op, op, op);
}

Cochain dT_via_brackets(const TrbContext& ctx, const Cochain& f)
{
    return derived_bracket(ctx.algebra, ctx.module, ctx.op, f)
           - Rational(1, 2) * ternary_bracket(ctx.twist, ctx.op, ctx.op, f);
}

namespace {

std::function<Cochain(const Cochain&, const Cochain&, const Cochain&)>
ternary(const Algebra& algebra, const Bimodule& module, const Cochain& twist, TernaryForm form)
{
    if (form == TernaryForm::Derived)
        return [algebra, module, twist](const Cochain& x, const Cochain& y, const Cochain& z) {
            return ternary_bracket_derived(algebra, module, twist, x, y, z);
        };
    return [twist](const Cochain& x, const Cochain& y, const Cochain& z) { return ternary_bracket(twist, x, y, z); };
}

} // namespace

LInftyStructure untwisted_structure(const Algebra& algebra, const Bimodule& module, const Cochain& twist,
                                    TernaryForm form)
{
    LInftyStructure s;
    s.dim_a = algebra.dim();
    s.dim_m = module.dim();
    s.l2 = [algebra, module](const Cochain& x, const Cochain& y) { return derived_bracket(algebra, module, x, y); };
    s.l3 = ternary(algebra, module, twist, form);
    return s;
}

LInftyStructure twisted_structure(const TrbContext& ctx, TernaryForm form)
{
    ctx.check_shapes();
    LInftyStructure s;
    s.dim_a = ctx.dim_a();
    s.dim_m = ctx.dim_m();
    auto l3 = ternary(ctx.algebra, ctx.module, ctx.twist, form);
    s.l1 = [ctx](const Cochain& x) { return dT(ctx, x); };
    s.l2 = [ctx, l3](const Cochain& x, const Cochain& y) {
        return derived_bracket(ctx.algebra, ctx.module, x, y) - l3(ctx.op, x, y);
    };
    s.l3 = l3;
    return s;
}

Cochain mc_residual(const LInftyStructure& structure, const Cochain& x)
{
    Cochain out(2, structure.dim_m, structure.dim_a);
    if (structure.l1)
        out += structure.l1(x);
    if (structure.l2)
        out += Rational(1, 2) * structure.l2(x, x);
    if (structure.l3)
        out -= Rational(1, 6) * structure.l3(x, x, x);
    return out;
}

int koszul_sign(const std::vector<std::size_t>& degrees, const std::vector<std::size_t>& perm)
{
    int s = 1;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) {
                s = -s;
                if ((degrees[perm[a]] * degrees[perm[b]]) % 2 == 1)
                    s = -s;
            }
    return s;
}

Cochain linfty_jacobi_residual(const LInftyStructure& structure, const std::vector<Cochain>& args)
{
    const std::size_t n = args.size();
    if (n < 1 || n > 5)
        throw std::invalid_argument("linfty_jacobi_residual: arity must be in 1..5");
    std::vector<std::size_t> degrees;
    long long total = 0;
    for (const auto& x : args) {
        degrees.push_back(x.arity());
        total += static_cast<long long>(x.arity());
    }
    const long long out_degree = total + 3 - static_cast<long long>(n);
    Cochain out(out_degree < 0 ? 0 : static_cast<std::size_t>(out_degree), structure.dim_m, structure.dim_a);
    if (out_degree < 0)
        return out;

    auto apply_l = [&](std::size_t k, const std::vector<Cochain>& xs) -> std::optional<Cochain> {
        long long deg = 2 - static_cast<long long>(k);
        for (const auto& x : xs)
            deg += static_cast<long long>(x.arity());
        if (deg < 0)
            return std::nullopt;
        switch (k) {
        case 1:
            if (structure.l1)
                return structure.l1(xs[0]);
            break;
        case 2:
            if (structure.l2)
                return structure.l2(xs[0], xs[1]);
            break;
        case 3:
            if (structure.l3)
                return structure.l3(xs[0], xs[1], xs[2]);
            break;
        default:
            break;
        }
        return std::nullopt;
    };

    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t j = n + 1 - i;
        if (i > 3 || j > 3)
            continue;
        const Rational outer = parity_sign(static_cast<long long>(i * (j - 1)));
        for (const auto& first : combinations(n, i)) {
            std::vector<std::size_t> perm = first;
            std::vector<bool> used(n, false);
            for (auto x : first)
                used[x] = true;
            for (std::size_t x = 0; x < n; ++x)
                if (!used[x])
                    perm.push_back(x);
            std::vector<Cochain> inner_args;
            for (std::size_t a = 0; a < i; ++a)
                inner_args.push_back(args[perm[a]]);
            auto inner = apply_l(i, inner_args);
            if (!inner)
                continue;
            std::vector<Cochain> outer_args{*inner};
            for (std::size_t a = i; a < n; ++a)
                outer_args.push_back(args[perm[a]]);
            auto term = apply_l(j, outer_args);
            if (!term)
                continue;
            out += Rational(koszul_sign(degrees, perm)) * outer * *term;
        }
    }
    return out;
}

} // namespace twistrb
