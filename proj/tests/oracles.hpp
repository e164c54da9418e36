#pragma once

// Naive evaluators written straight from the displayed formulas. They read
// coefficients through the documented flat layout only and share no code
// with the library beyond the data types.

#include "twistrb/ns_operad.hpp"
#include "twistrb/trb.hpp"

#include <functional>
#include <vector>

namespace oracle {

using twistrb::Cochain;
using twistrb::Rational;
using twistrb::TrbContext;
using twistrb::Vector;

inline std::vector<std::size_t> decode(std::size_t tuple, std::size_t arity, std::size_t base)
{
    std::vector<std::size_t> idx(arity);
    for (std::size_t k = arity; k-- > 0;) {
        idx[k] = tuple % base;
        tuple /= base;
    }
    return idx;
}

inline Vector basis(std::size_t dim, std::size_t i)
{
    Vector v(dim);
    v[i] = 1;
    return v;
}

/// f(args) by expanding every argument in the basis.
inline Vector eval(const Cochain& f, const std::vector<Vector>& args)
{
    const std::size_t n = f.arity(), s = f.source_dim(), t = f.target_dim();
    Vector out(t);
    const Vector& c = f.coefficients();
    for (std::size_t tuple = 0; tuple < c.size() / (t ? t : 1) && t; ++tuple) {
        const auto idx = decode(tuple, n, s);
        Rational w = 1;
        for (std::size_t k = 0; k < n && w != 0; ++k)
            w *= args[k][idx[k]];
        if (w == 0)
            continue;
        for (std::size_t q = 0; q < t; ++q)
            out[q] += w * c[tuple * t + q];
    }
    return out;
}

/// Builds an arity-n map by evaluating fn on basis tuples.
inline Cochain tabulate(std::size_t n, std::size_t s, std::size_t t,
                        const std::function<Vector(const std::vector<Vector>&)>& fn)
{
    Cochain out(n, s, t);
    std::size_t tuples = 1;
    for (std::size_t k = 0; k < n; ++k)
        tuples *= s;
    for (std::size_t tuple = 0; tuple < tuples; ++tuple) {
        std::vector<Vector> args;
        for (auto i : decode(tuple, n, s))
            args.push_back(basis(s, i));
        const Vector v = fn(args);
        for (std::size_t q = 0; q < t; ++q)
            out.at(tuple, q) = v[q];
    }
    return out;
}

inline Vector add(Vector a, const Vector& b, const Rational& s = 1)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += s * b[i];
    return a;
}

inline Vector scale(const Rational& s, Vector a)
{
    for (auto& x : a)
        x *= s;
    return a;
}

inline Rational sign(long long e)
{
    return (e % 2 == 0) ? Rational(1) : Rational(-1);
}

struct Ops {
    const TrbContext& c;
    Vector mul(const Vector& a, const Vector& b) const
    {
        const std::size_t d = c.dim_a();
        Vector out(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (a[i] != 0 && b[j] != 0)
                    for (std::size_t k = 0; k < d; ++k)
                        out[k] += a[i] * b[j] * c.algebra.c(i, j, k);
        return out;
    }
    Vector left(const Vector& a, const Vector& m) const // a·m
    {
        const std::size_t da = c.dim_a(), dm = c.dim_m();
        Vector out(dm);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t p = 0; p < dm; ++p)
                if (a[i] != 0 && m[p] != 0)
                    for (std::size_t q = 0; q < dm; ++q)
                        out[q] += a[i] * m[p] * c.module.left(i, p, q);
        return out;
    }
    Vector right(const Vector& m, const Vector& a) const // m·a
    {
        const std::size_t da = c.dim_a(), dm = c.dim_m();
        Vector out(dm);
        for (std::size_t p = 0; p < dm; ++p)
            for (std::size_t i = 0; i < da; ++i)
                if (a[i] != 0 && m[p] != 0)
                    for (std::size_t q = 0; q < dm; ++q)
                        out[q] += a[i] * m[p] * c.module.right(p, i, q);
        return out;
    }
    Vector T(const Vector& u) const { return eval(c.op, {u}); }
    Vector H(const Vector& a, const Vector& b) const { return eval(c.twist, {a, b}); }
    // u * v = u·Tv + Tu·v + H(Tu, Tv)
    Vector star(const Vector& u, const Vector& v) const
    {
        return add(add(right(u, T(v)), left(T(u), v)), H(T(u), T(v)));
    }
};

/// The Hochschild differential of (M, *) with coefficients in A, written
/// term by term from its display.
inline Cochain hoch_new_diff(const TrbContext& ctx, const Cochain& f)
{
    const Ops o{ctx};
    const std::size_t n = f.arity();
    return tabulate(n + 1, ctx.dim_m(), ctx.dim_a(), [&](const std::vector<Vector>& u) {
        const std::vector<Vector> tail(u.begin() + 1, u.end());
        const std::vector<Vector> head(u.begin(), u.end() - 1);
        const Vector ft = eval(f, tail), fh = eval(f, head);
        Vector r = o.mul(o.T(u[0]), ft);
        r = add(r, o.T(o.right(u[0], ft)), -1);
        r = add(r, o.T(o.H(o.T(u[0]), ft)), -1);
        for (std::size_t i = 1; i <= n; ++i) {
            const Vector& a = u[i - 1];
            const Vector& b = u[i];
            const Vector merged = o.star(a, b);
            std::vector<Vector> args = u;
            args[i - 1] = merged;
            args.erase(args.begin() + static_cast<long>(i));
            r = add(r, eval(f, args), sign(static_cast<long long>(i)));
        }
        const Rational s = sign(static_cast<long long>(n + 1));
        r = add(r, o.mul(fh, o.T(u[n])), s);
        r = add(r, o.T(o.left(fh, u[n])), -s);
        r = add(r, o.T(o.H(fh, o.T(u[n]))), -s);
        return r;
    });
}

/// The left side of the 1-cocycle condition for f : M -> A.
inline Cochain dt_1_co(const TrbContext& ctx, const Cochain& f)
{
    const Ops o{ctx};
    return tabulate(2, ctx.dim_m(), ctx.dim_a(), [&](const std::vector<Vector>& uv) {
        const Vector &u = uv[0], &v = uv[1];
        const Vector Tu = o.T(u), Tv = o.T(v), fu = eval(f, {u}), fv = eval(f, {v});
        Vector r = o.T(add(o.left(fu, v), o.right(u, fv)));
        r = add(r, eval(f, {add(o.left(Tu, v), o.right(u, Tv))}));
        r = add(r, o.mul(Tu, fv), -1);
        r = add(r, o.mul(fu, Tv), -1);
        r = add(r, o.T(add(o.H(Tu, fv), o.H(fu, Tv))));
        r = add(r, eval(f, {o.H(Tu, Tv)}));
        return r;
    });
}

/// ⟦T,T⟧(u,v) = 2(T(T(u)·v + u·T(v)) - T(u)T(v)).
inline Cochain tt(const TrbContext& ctx)
{
    const Ops o{ctx};
    return tabulate(2, ctx.dim_m(), ctx.dim_a(), [&](const std::vector<Vector>& uv) {
        const Vector Tu = o.T(uv[0]), Tv = o.T(uv[1]);
        return scale(2, add(o.T(add(o.left(Tu, uv[1]), o.right(uv[0], Tv))), o.mul(Tu, Tv), -1));
    });
}

/// ⟦T,T,T⟧(u,v) = -6 T(H(Tu, Tv)).
inline Cochain ttt(const TrbContext& ctx)
{
    const Ops o{ctx};
    return tabulate(2, ctx.dim_m(), ctx.dim_a(), [&](const std::vector<Vector>& uv) {
        return scale(-6, o.T(o.H(o.T(uv[0]), o.T(uv[1]))));
    });
}

/// The display for ⟦T,f⟧, f of arity n. With with_h the inner sum carries
/// u_i·T(u_{i+1}) + T(u_i)·u_{i+1} + H(Tu_i, Tu_{i+1}) as printed; without
/// it the H term is dropped.
inline Cochain bracket_t_f(const TrbContext& ctx, const Cochain& f, bool with_h)
{
    const Ops o{ctx};
    const std::size_t n = f.arity();
    return tabulate(n + 1, ctx.dim_m(), ctx.dim_a(), [&](const std::vector<Vector>& u) {
        const std::vector<Vector> tail(u.begin() + 1, u.end());
        const std::vector<Vector> head(u.begin(), u.end() - 1);
        const Vector ft = eval(f, tail), fh = eval(f, head);
        Vector r = add(o.mul(o.T(u[0]), ft), o.T(o.right(u[0], ft)), -1);
        for (std::size_t i = 1; i <= n; ++i) {
            Vector merged = add(o.right(u[i - 1], o.T(u[i])), o.left(o.T(u[i - 1]), u[i]));
            if (with_h)
                merged = add(merged, o.H(o.T(u[i - 1]), o.T(u[i])));
            std::vector<Vector> args = u;
            args[i - 1] = merged;
            args.erase(args.begin() + static_cast<long>(i));
            r = add(r, eval(f, args), sign(static_cast<long long>(i)));
        }
        const Rational s = sign(static_cast<long long>(n + 1));
        r = add(r, o.mul(fh, o.T(u[n])), s);
        r = add(r, o.T(o.left(fh, u[n])), -s);
        return scale(sign(static_cast<long long>(n)), r);
    });
}

/// The display for ⟦T,T,f⟧, f of arity n.
inline Cochain bracket_t_t_f(const TrbContext& ctx, const Cochain& f)
{
    const Ops o{ctx};
    const std::size_t n = f.arity();
    return tabulate(n + 1, ctx.dim_m(), ctx.dim_a(), [&](const std::vector<Vector>& u) {
        const std::vector<Vector> tail(u.begin() + 1, u.end());
        const std::vector<Vector> head(u.begin(), u.end() - 1);
        Vector r = scale(-1, o.T(o.H(o.T(u[0]), eval(f, tail))));
        r = add(r, o.T(o.H(eval(f, head), o.T(u[n]))), -sign(static_cast<long long>(n + 1)));
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<Vector> args = u;
            args[i - 1] = o.H(o.T(u[i - 1]), o.T(u[i]));
            args.erase(args.begin() + static_cast<long>(i));
            r = add(r, eval(f, args), sign(static_cast<long long>(i)));
        }
        return scale(-2 * sign(static_cast<long long>(n)), r);
    });
}

/// LHS - RHS of the order-1 deformation equation in T_1.
inline Cochain first_lin(const TrbContext& ctx, const Cochain& t1)
{
    const Ops o{ctx};
    return tabulate(2, ctx.dim_m(), ctx.dim_a(), [&](const std::vector<Vector>& uv) {
        const Vector &u = uv[0], &v = uv[1];
        const Vector Tu = o.T(u), Tv = o.T(v), T1u = eval(t1, {u}), T1v = eval(t1, {v});
        Vector lhs = add(o.mul(Tu, T1v), o.mul(T1u, Tv));
        Vector rhs = eval(t1, {add(add(o.right(u, Tv), o.left(Tu, v)), o.H(Tu, Tv))});
        rhs = add(rhs, o.T(add(add(o.right(u, T1v), o.left(T1u, v)), add(o.H(Tu, T1v), o.H(T1u, Tv)))));
        return add(lhs, rhs, -1);
    });
}

/// f([r]; ...) for a tagged cochain, with r 1-based and tags outside the
/// range of f contributing zero.
inline Vector tag_eval(const twistrb::TaggedCochain& f, std::size_t r, const std::vector<Vector>& args)
{
    if (r < 1 || r > f.tags())
        return Vector(f.dim());
    return eval(f[r], args);
}

inline Vector tag_sum_eval(const twistrb::TaggedCochain& f, const std::vector<Vector>& args)
{
    Vector out(f.dim());
    for (std::size_t r = 1; r <= f.tags(); ++r)
        out = add(out, eval(f[r], args));
    return out;
}

/// f ∘_i g from the case split of its definition.
inline twistrb::TaggedCochain new_op_pc(const twistrb::TaggedCochain& f, const twistrb::TaggedCochain& g, std::size_t i)
{
    const std::size_t m = f.arity(), n = g.arity(), d = f.dim(), arity = m + n - 1;
    twistrb::TaggedCochain out(arity, d);
    for (std::size_t r = 1; r <= out.tags(); ++r) {
        out[r] = tabulate(arity, d, d, [&](const std::vector<Vector>& a) {
            const std::vector<Vector> inner(a.begin() + static_cast<long>(i - 1),
                                            a.begin() + static_cast<long>(i - 1 + n));
            auto outer = [&](const Vector& x) {
                std::vector<Vector> args(a.begin(), a.begin() + static_cast<long>(i - 1));
                args.push_back(x);
                args.insert(args.end(), a.begin() + static_cast<long>(i - 1 + n), a.end());
                return args;
            };
            if (r <= i - 1)
                return tag_eval(f, r, outer(tag_sum_eval(g, inner)));
            if (r <= i + n - 1)
                return tag_eval(f, i, outer(tag_eval(g, r - i + 1, inner)));
            if (r <= m + n - 1)
                return tag_eval(f, r - n + 1, outer(tag_sum_eval(g, inner)));
            return add(tag_eval(f, i, outer(tag_eval(g, n + 1, inner))),
                       tag_eval(f, m + 1, outer(tag_sum_eval(g, inner))));
        });
    }
    return out;
}

} // namespace oracle
