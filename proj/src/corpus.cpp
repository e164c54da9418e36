#include "twistrb/corpus.hpp"

#include "twistrb/sampling.hpp"

namespace twistrb {

namespace {

Instance context_instance(const TrbContext& ctx, std::string name)
{
    Instance inst;
    inst.name = std::move(name);
    inst.algebra = ctx.algebra;
    inst.module = ctx.module;
    inst.twist = ctx.twist;
    inst.op = ctx.op;
    return inst;
}

Cochain scalar_map(const Rational& lambda)
{
    Cochain c(1, 1, 1);
    c.at(0, 0) = lambda;
    return c;
}

Instance reynolds_instance(const Rational& lambda, std::string name)
{
    Instance inst;
    inst.name = std::move(name);
    Algebra k(1);
    k.c(0, 0, 0) = 1;
    inst.algebra = k;
    inst.op = scalar_map(lambda);
    inst.op_kind = OperatorKind::R;
    return inst;
}

// Cocycles of d_T in arity 1 that are not coboundaries come first.
Cochain first_order_cocycle(const TrbContext& ctx)
{
    const Subspace z = cocycles(ctx, 1);
    const Subspace b = column_space(dT_matrix(ctx, 0));
    for (const auto& v : z.basis)
        if (!b.contains(v))
            return Cochain::from_flat(1, ctx.dim_m(), ctx.dim_a(), v);
    return Cochain::from_flat(1, ctx.dim_m(), ctx.dim_a(), z.basis.at(0));
}

// A δ_π-cocycle π_1 with nonzero obstruction that still extends, tried over
// basis cocycles and their pairwise sums. Falls back to the first cocycle
// whose obstruction extends.
TaggedCochain first_order_ns_cocycle(const NsAlgebra& ns)
{
    const TaggedCochain pi = ns_to_multiplication(ns);
    const Subspace z = nullspace(delta_pi_matrix(pi, 2));
    std::optional<TaggedCochain> fallback;
    std::vector<Vector> trials = z.basis;
    for (std::size_t i = 0; i < z.dim(); ++i)
        for (std::size_t j = i + 1; j < z.dim(); ++j)
            trials.push_back(z.basis[i] + z.basis[j]);
    for (const auto& v : trials) {
        const TaggedCochain p1 = TaggedCochain::from_flat(2, ns.dim(), v);
        const NsDeformation d{ns, {pi, p1}};
        if (!ns_extend(d))
            continue;
        if (!ns_obstruction(d).ob.is_zero())
            return p1;
        if (!fallback)
            fallback = p1;
    }
    return fallback.value();
}

} // namespace

Algebra left_unit_algebra()
{
    Algebra a(2);
    a.c(0, 0, 0) = 1;
    a.c(0, 1, 1) = 1;
    return a;
}

Algebra dual_numbers()
{
    Algebra a(2);
    a.c(0, 0, 0) = 1;
    a.c(0, 1, 1) = 1;
    a.c(1, 0, 1) = 1;
    return a;
}

TrbContext multiplication_map_example()
{
    const Algebra a = left_unit_algebra();
    const std::size_t d = a.dim(), dm = d * d;
    const auto pair = [d](std::size_t b, std::size_t c) { return b * d + c; };
    Bimodule m(d, dm);
    Cochain twist(2, d, dm), mu(1, dm, d);
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
            twist.at(pair(b, c), pair(b, c)) = -1;
            mu.set_value(pair(b, c), a.basis_product(b, c));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d; ++k) {
                    m.left(i, pair(b, c), pair(k, c)) += a.c(i, b, k);
                    m.right(pair(b, c), i, pair(b, k)) += a.c(c, i, k);
                }
        }
    return TrbContext{a, m, twist, mu};
}

TrbContext inverse_example()
{
    const Algebra a = left_unit_algebra();
    Matrix h(2, 2);
    h(0, 0) = 1;
    h(0, 1) = 1;
    h(1, 1) = 2;
    return inverse_context(a, adjoint_bimodule(a), linear_map(h)).value();
}

std::vector<CorpusEntry> corpus()
{
    std::vector<CorpusEntry> out;

    {
        TrbContext ctx = inverse_example();
        ctx.op = Cochain(1, ctx.dim_m(), ctx.dim_a());
        out.push_back({"zero_operator.json", "check-trb", "T = 0 with a nonzero twisting cocycle",
                       context_instance(ctx, "zero operator")});
    }
    {
        Instance inst;
        inst.name = "Nijenhuis example";
        inst.algebra = dual_numbers();
        Cochain n(1, 2, 2);
        n.at(0, 1) = 1; // N(1) = ε, N(ε) = 0
        inst.op = n;
        inst.op_kind = OperatorKind::N;
        out.push_back({"nijenhuis_example.json", "check-trb",
                       "id : A -> A_N on K[e]/(e^2) with N(x) = xe and H(a,b) = -N(ab)", inst});
    }
    out.push_back({"multiplication_map.json", "check-trb",
                   "mu : A (x) A -> A with H(a,b) = -a (x) b, dim A = 2",
                   context_instance(multiplication_map_example(), "multiplication map")});
    out.push_back({"inverse_example.json", "check-trb", "T = h^{-1} with H = -delta h",
                   context_instance(inverse_example(), "inverse of a 1-cochain")});
    out.push_back({"reynolds_0.json", "reynolds", "Reynolds operator R = 0 on K", reynolds_instance(0, "Reynolds 0")});
    out.push_back({"reynolds_1.json", "reynolds", "Reynolds operator R = id on K", reynolds_instance(1, "Reynolds 1")});
    {
        // Weight-0 Rota-Baxter R(1) = ε on K[ε]/(ε²): a ≺ b = aR(b), a ≻ b = R(a)b.
        const Algebra a = dual_numbers();
        Cochain r(1, 2, 2);
        r.at(0, 1) = 1;
        const NsAlgebra ns = trb_to_ns(TrbContext{a, adjoint_bimodule(a), Cochain(2, 2, 2), r});
        Instance inst;
        inst.name = "dendriform";
        inst.ns = ns;
        out.push_back({"dendriform.json", "check-ns", "dendriform structure of R(1) = e on K[e]/(e^2)", inst});
    }
    {
        Instance inst;
        inst.name = "zero NS, dim 1";
        inst.ns = NsAlgebra(1);
        out.push_back({"zero_ns_dim1.json", "check-ns", "all three operations zero on K", inst});
    }
    {
        const TrbContext ctx = multiplication_map_example();
        Instance inst = context_instance(ctx, "order-1 RB deformation");
        inst.rb_deformation = RbDeformationData{{first_order_cocycle(ctx)}, std::nullopt};
        out.push_back({"rb_deformation_order1.json", "deform-rb", "T + t T_1 with T_1 a 1-cocycle", inst});
    }
    {
        Instance base;
        base.algebra = left_unit_algebra();
        Cochain n(1, 2, 2);
        n.at(1, 0) = 1; // N(e_1) = 0, N(e_2) = e_1 + e_2
        n.at(1, 1) = 1;
        base.op = n;
        base.op_kind = OperatorKind::N;
        const TrbContext ctx = instance_context(base);
        std::optional<Vector> chosen;
        for (const auto& a : nijenhuis_grid(ctx, {-1, 0, 1, 2}))
            if (!dT_of_element(ctx, a).is_zero()) {
                chosen = a;
                break;
            }
        const RbDeformation d = transported_rb_deformation(ctx, chosen.value(), 2);
        Instance inst = base;
        inst.name = "order-2 transported RB deformation";
        inst.rb_deformation = RbDeformationData{{d.maps.begin() + 1, d.maps.end()}, chosen};
        out.push_back({"rb_deformation_order2.json", "deform-rb",
                       "phi_t^{-1} T psi_t for a Nijenhuis element a, truncated at t^2", inst});
    }
    {
        const NsAlgebra ns = trb_to_ns(inverse_example());
        Instance inst;
        inst.name = "order-1 NS deformation";
        inst.ns = ns;
        inst.ns_deformation = NsDeformationData{{first_order_ns_cocycle(ns)}};
        out.push_back({"ns_deformation_order1.json", "deform-ns", "pi + t pi_1 with pi_1 a delta_pi cocycle", inst});
    }
    return out;
}

} // namespace twistrb
