#include "twistrb/ns_operad.hpp"

#include "twistrb/errors.hpp"

#include <string>

namespace twistrb {

TaggedCochain::TaggedCochain(std::size_t arity, std::size_t dim) : arity_(arity), dim_(dim)
{
    if (arity == 0)
        throw ShapeMismatch("TaggedCochain: arity must be at least 1");
    components_.assign(tag_count(arity), Cochain(arity, dim, dim));
}

TaggedCochain::TaggedCochain(std::vector<Cochain> components) : components_(std::move(components))
{
    if (components_.empty())
        throw ShapeMismatch("TaggedCochain: no components");
    arity_ = components_.front().arity();
    dim_ = components_.front().source_dim();
    if (arity_ == 0 || components_.size() != tag_count(arity_))
        throw ShapeMismatch("TaggedCochain: component count does not match arity");
    for (const auto& c : components_)
        if (c.arity() != arity_ || c.source_dim() != dim_ || c.target_dim() != dim_)
            throw ShapeMismatch("TaggedCochain: components must be n-linear maps A^n -> A");
}

TaggedCochain TaggedCochain::identity(std::size_t dim)
{
    return TaggedCochain(std::vector<Cochain>{identity_map(dim)});
}

Vector TaggedCochain::flatten() const
{
    Vector out;
    out.reserve(flat_size());
    for (const auto& c : components_)
        out.insert(out.end(), c.coefficients().begin(), c.coefficients().end());
    return out;
}

std::size_t TaggedCochain::flat_size() const noexcept
{
    return components_.size() * int_pow(dim_, arity_ + 1);
}

TaggedCochain TaggedCochain::from_flat(std::size_t arity, std::size_t dim, const Vector& flat)
{
    TaggedCochain out(arity, dim);
    const std::size_t block = int_pow(dim, arity + 1);
    if (flat.size() != block * out.tags())
        throw ShapeMismatch("TaggedCochain::from_flat: wrong coefficient count");
    for (std::size_t r = 0; r < out.tags(); ++r)
        out.components_[r] = Cochain::from_flat(arity, dim, dim,
                                                Vector(flat.begin() + static_cast<std::ptrdiff_t>(r * block),
                                                       flat.begin() + static_cast<std::ptrdiff_t>((r + 1) * block)));
    return out;
}

bool TaggedCochain::is_zero() const
{
    for (const auto& c : components_)
        if (!c.is_zero())
            return false;
    return true;
}

TaggedCochain& TaggedCochain::operator+=(const TaggedCochain& other)
{
    if (arity_ != other.arity_ || dim_ != other.dim_)
        throw ShapeMismatch("TaggedCochain: shapes differ");
    for (std::size_t r = 0; r < components_.size(); ++r)
        components_[r] += other.components_[r];
    return *this;
}

TaggedCochain& TaggedCochain::operator-=(const TaggedCochain& other)
{
    if (arity_ != other.arity_ || dim_ != other.dim_)
        throw ShapeMismatch("TaggedCochain: shapes differ");
    for (std::size_t r = 0; r < components_.size(); ++r)
        components_[r] -= other.components_[r];
    return *this;
}

TaggedCochain TaggedCochain::operator+(const TaggedCochain& other) const
{
    TaggedCochain out = *this;
    out += other;
    return out;
}

TaggedCochain TaggedCochain::operator-(const TaggedCochain& other) const
{
    TaggedCochain out = *this;
    out -= other;
    return out;
}

TaggedCochain operator*(const Rational& a, const TaggedCochain& f)
{
    TaggedCochain out = f;
    for (auto& c : out.components_)
        c = a * c;
    return out;
}

namespace {

Cochain tag_or_zero(const TaggedCochain& f, std::size_t r)
{
    if (r >= 1 && r <= f.tags())
        return f[r];
    return Cochain(f.arity(), f.dim(), f.dim());
}

} // namespace

TaggedCochain partial_compose(const TaggedCochain& f, const TaggedCochain& g, std::size_t i)
{
    const std::size_t m = f.arity();
    const std::size_t n = g.arity();
    if (i < 1 || i > m)
        throw IndexOutOfRange("partial_compose: slot " + std::to_string(i) + " outside 1.." + std::to_string(m));
    if (f.dim() != g.dim())
        throw ShapeMismatch("partial_compose: cochains live on different spaces");
    const Cochain gsum = theta(g);
    TaggedCochain out(m + n - 1, f.dim());
    for (std::size_t r = 1; r <= out.tags(); ++r) {
        if (r <= i - 1)
            out[r] = compose_at(f[r], i, gsum);
        else if (r <= i + n - 1)
            out[r] = compose_at(f[i], i, g[r - i + 1]);
        else if (r <= m + n - 1)
            out[r] = compose_at(f[r - n + 1], i, gsum);
        else
            out[r] = compose_at(f[i], i, tag_or_zero(g, n + 1)) + compose_at(tag_or_zero(f, m + 1), i, gsum);
    }
    return out;
}

Report check_operad_axioms(const TaggedCochain& f, const TaggedCochain& g, const TaggedCochain& h,
                           const ComposeFn& compose)
{
    Report report;
    const std::size_t m = f.arity();
    const std::size_t n = g.arity();
    auto record = [&](const std::string& identity, std::vector<std::size_t> where, const TaggedCochain& lhs,
                      const TaggedCochain& rhs) {
        TaggedCochain diff = lhs - rhs;
        if (!diff.is_zero())
            report.add(identity, std::move(where), diff.flatten());
    };
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            record("(f∘_i g)∘_{i+j-1} h = f∘_i (g∘_j h)", {i - 1, j - 1},
                   compose(compose(f, g, i), h, i + j - 1), compose(f, compose(g, h, j), i));
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
            record("(f∘_i g)∘_{j+n-1} h = (f∘_j h)∘_i g", {i - 1, j - 1},
                   compose(compose(f, g, i), h, j + n - 1), compose(compose(f, h, j), g, i));
    const TaggedCochain id = TaggedCochain::identity(f.dim());
    for (const TaggedCochain* x : {&f, &g, &h}) {
        record("id ∘_1 f = f", {x->arity() - 1}, compose(id, *x, 1), *x);
        for (std::size_t i = 1; i <= x->arity(); ++i)
            record("f ∘_i id = f", {x->arity() - 1, i - 1}, compose(*x, id, i), *x);
    }
    return report;
}

NsAlgebra::NsAlgebra(std::size_t dim) : prec(2, dim, dim), succ(2, dim, dim), vee(2, dim, dim) {}

NsAlgebra::NsAlgebra(Cochain p, Cochain s, Cochain v) : prec(std::move(p)), succ(std::move(s)), vee(std::move(v))
{
    for (const Cochain* c : {&prec, &succ, &vee})
        if (c->arity() != 2 || c->source_dim() != prec.source_dim() || c->target_dim() != prec.source_dim())
            throw ShapeMismatch("NsAlgebra: operations must be bilinear maps on one space");
}

Algebra NsAlgebra::star() const
{
    return Algebra(prec + succ + vee);
}

std::array<Cochain, 4> ns_defects(const NsAlgebra& ns)
{
    const std::size_t d = ns.dim();
    const Cochain star = ns.prec + ns.succ + ns.vee;
    auto op = [](const Cochain& c, const Vector& a, const Vector& b) { return c({a, b}); };
    auto table = [&](auto&& fn) {
        return Cochain::tabulate(3, d, d, [&](const std::vector<std::size_t>& t) {
            return fn(unit_vector(d, t[0]), unit_vector(d, t[1]), unit_vector(d, t[2]));
        });
    };
    return {
        table([&](const Vector& a, const Vector& b, const Vector& c) {
            return op(ns.prec, op(ns.prec, a, b), c) - op(ns.prec, a, op(star, b, c));
        }),
        table([&](const Vector& a, const Vector& b, const Vector& c) {
            return op(ns.prec, op(ns.succ, a, b), c) - op(ns.succ, a, op(ns.prec, b, c));
        }),
        table([&](const Vector& a, const Vector& b, const Vector& c) {
            return op(ns.succ, op(star, a, b), c) - op(ns.succ, a, op(ns.succ, b, c));
        }),
        table([&](const Vector& a, const Vector& b, const Vector& c) {
            return op(ns.prec, op(ns.vee, a, b), c) + op(ns.vee, op(star, a, b), c) - op(ns.succ, a, op(ns.vee, b, c))
                   - op(ns.vee, a, op(star, b, c));
        }),
    };
}

Report check_ns(const NsAlgebra& ns)
{
    static const char* names[4] = {
        "(a≺b)≺c = a≺(b*c)",
        "(a≻b)≺c = a≻(b≺c)",
        "(a*b)≻c = a≻(b≻c)",
        "(a⋎b)≺c + (a*b)⋎c = a≻(b⋎c) + a⋎(b*c)",
    };
    auto defects = ns_defects(ns);
    Report report;
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t t = 0; t < defects[k].tuples(); ++t)
            report.check(names[k], defects[k].tuple_of(t), defects[k].value(t));
    return report;
}

TaggedCochain ns_to_multiplication(const NsAlgebra& ns)
{
    return TaggedCochain(std::vector<Cochain>{ns.prec, ns.succ, ns.vee});
}

NsAlgebra multiplication_to_ns(const TaggedCochain& pi)
{
    if (pi.arity() != 2)
        throw ShapeMismatch("multiplication_to_ns: π must have arity 2");
    return NsAlgebra(pi[1], pi[2], pi[3]);
}

TaggedCochain multiplication_residual(const TaggedCochain& pi)
{
    if (pi.arity() != 2)
        throw ShapeMismatch("multiplication_residual: π must have arity 2");
    return partial_compose(pi, pi, 1) - partial_compose(pi, pi, 2);
}

bool is_multiplication(const TaggedCochain& pi)
{
    return multiplication_residual(pi).is_zero();
}

namespace {

Rational sign_of(std::size_t k)
{
    return (k % 2 == 0) ? 1 : -1;
}

TaggedCochain delta_pi_unchecked(const TaggedCochain& pi, const TaggedCochain& f)
{
    const std::size_t n = f.arity();
    TaggedCochain left(n + 1, f.dim());
    for (std::size_t i = 1; i <= 2; ++i)
        left += sign_of((i - 1) * (n - 1)) * partial_compose(pi, f, i);
    TaggedCochain right(n + 1, f.dim());
    for (std::size_t i = 1; i <= n; ++i)
        right += sign_of(i - 1) * partial_compose(f, pi, i);
    return sign_of(n - 1) * (left - sign_of(n - 1) * right);
}

} // namespace

TaggedCochain delta_pi(const TaggedCochain& pi, const TaggedCochain& f)
{
    if (pi.dim() != f.dim())
        throw ShapeMismatch("delta_pi: π and f live on different spaces");
    if (pi.arity() != 2 || !is_multiplication(pi))
        throw NotAMultiplication("delta_pi: π ∘_1 π ≠ π ∘_2 π");
    return delta_pi_unchecked(pi, f);
}

Matrix delta_pi_matrix(const TaggedCochain& pi, std::size_t n)
{
    if (pi.arity() != 2 || !is_multiplication(pi))
        throw NotAMultiplication("delta_pi_matrix: π ∘_1 π ≠ π ∘_2 π");
    const std::size_t d = pi.dim();
    const std::size_t cols = TaggedCochain(n, d).flat_size();
    const std::size_t rows = TaggedCochain(n + 1, d).flat_size();
    Matrix out(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        Vector e = unit_vector(cols, c);
        out.set_column(c, delta_pi_unchecked(pi, TaggedCochain::from_flat(n, d, e)).flatten());
    }
    return out;
}

std::vector<std::size_t> ns_cohomology_dims(const NsAlgebra& ns, std::size_t n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("ns_cohomology_dims: n_max must be at least 1");
    const TaggedCochain pi = ns_to_multiplication(ns);
    std::vector<std::size_t> dims;
    Subspace previous_image{TaggedCochain(1, ns.dim()).flat_size(), {}};
    for (std::size_t n = 1; n <= n_max; ++n) {
        Matrix dn = delta_pi_matrix(pi, n);
        Subspace z = nullspace(dn);
        dims.push_back(quotient_dim(z, previous_image));
        previous_image = column_space(dn);
    }
    return dims;
}

Cochain theta(const TaggedCochain& f)
{
    Cochain out(f.arity(), f.dim(), f.dim());
    for (const auto& c : f.components())
        out += c;
    return out;
}

bool is_dendriform_element(const TaggedCochain& f)
{
    return f.arity() == 1 || f[f.arity() + 1].is_zero();
}

NsAlgebra trb_to_ns(const TrbContext& ctx)
{
    ctx.check_shapes();
    const std::size_t dm = ctx.dim_m();
    NsAlgebra ns(dm);
    for (std::size_t p = 0; p < dm; ++p) {
        const Vector u = unit_vector(dm, p);
        const Vector tu = ctx.T(u);
        for (std::size_t q = 0; q < dm; ++q) {
            const Vector v = unit_vector(dm, q);
            const Vector tv = ctx.T(v);
            ns.prec.set_value(p * dm + q, ctx.module.act_right(u, tv));
            ns.succ.set_value(p * dm + q, ctx.module.act_left(tu, v));
            ns.vee.set_value(p * dm + q, ctx.H(tu, tv));
        }
    }
    return ns;
}

} // namespace twistrb
