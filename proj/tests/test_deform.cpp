#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "twistrb/deform.hpp"
#include "twistrb/errors.hpp"

using namespace twistrb;

namespace {

// -Σ_{i+j=N+1, i,j≥1} (π_i ∘_1 π_j - π_i ∘_2 π_j), composed naively.
TaggedCochain naive_obstruction(const NsDeformation& d)
{
    const std::size_t n = d.order();
    TaggedCochain ob(3, d.base.dim());
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t j = n + 1 - i;
        if (j < 1 || j > n)
            continue;
        ob -= oracle::new_op_pc(d.maps[i], d.maps[j], 1) - oracle::new_op_pc(d.maps[i], d.maps[j], 2);
    }
    return ob;
}

// Contexts with their Nijenhuis elements a for which d_T(a) ≠ 0.
std::vector<std::pair<TrbContext, Vector>> nontrivial_nijenhuis()
{
    std::vector<std::pair<TrbContext, Vector>> out;
    for (const auto& [name, ctx] : fixture::valid_contexts(80, 1)) {
        if (ctx.dim_a() > 2)
            continue;
        for (const auto& a : nijenhuis_grid(ctx, {-1, 0, 1}))
            if (!dT_of_element(ctx, a).is_zero())
                out.emplace_back(ctx, a);
    }
    return out;
}

} // namespace

TEST_CASE("order-1 residual matches the linearized deformation equation")
{
    Sampler s(81);
    for (const auto& [name, ctx] : fixture::valid_contexts(82, 1)) {
        CAPTURE(name);
        for (int k = 0; k < 4; ++k) {
            const Cochain t1 = s.cochain(1, ctx.dim_m(), ctx.dim_a());
            const auto res = rb_deformation_residuals(RbDeformation{ctx, {ctx.op, t1}});
            REQUIRE(res.size() == 2);
            CHECK(res[0].is_zero());
            CHECK(res[1] == oracle::first_lin(ctx, t1));
            // The linearized equation is δ_Hoch T_1 = -d_T T_1.
            CHECK(res[1] == Rational(-1) * dT(ctx, t1));
        }
    }
}

TEST_CASE("an order-1 deformation is valid iff its infinitesimal is a 1-cocycle")
{
    Sampler s(83);
    std::size_t valid = 0, invalid = 0;
    for (const auto& [name, ctx] : fixture::corpus_contexts()) {
        CAPTURE(name);
        std::vector<Cochain> trials;
        for (int k = 0; k < 5; ++k)
            trials.push_back(s.cochain(1, ctx.dim_m(), ctx.dim_a()));
        const Subspace z = cocycles(ctx, 1);
        for (std::size_t k = 0; k < z.dim(); ++k)
            trials.push_back(Cochain::from_flat(1, ctx.dim_m(), ctx.dim_a(), s.rational() * z.basis[k]));
        for (const auto& t1 : trials) {
            const RbDeformation d{ctx, {ctx.op, t1}};
            const RbInfinitesimal inf = rb_infinitesimal(d);
            CHECK(inf.t1 == t1);
            CHECK(is_rb_deformation(d) == inf.cocycle);
            CHECK(inf.cocycle == dT(ctx, t1).is_zero());
            (inf.cocycle ? valid : invalid) += 1;
        }
    }
    CHECK(valid > 0);
    CHECK(invalid > 0);
}

TEST_CASE("series inverse and composition")
{
    Sampler s(84);
    for (std::size_t order = 1; order <= 3; ++order) {
        std::vector<Cochain> f{identity_map(2)};
        for (std::size_t i = 1; i <= order; ++i)
            f.push_back(s.cochain(1, 2, 2));
        const auto inv = series_inverse(f, order);
        const auto prod = series_compose(f, inv, order);
        const auto prod2 = series_compose(inv, f, order);
        CHECK(prod[0] == identity_map(2));
        CHECK(prod2[0] == identity_map(2));
        for (std::size_t i = 1; i <= order; ++i) {
            CHECK(prod[i].is_zero());
            CHECK(prod2[i].is_zero());
        }
    }
}

TEST_CASE("transported deformations are valid with infinitesimal d_T(a)")
{
    const auto cases = nontrivial_nijenhuis();
    REQUIRE_FALSE(cases.empty());
    for (const auto& [ctx, a] : cases)
        for (std::size_t order = 1; order <= 3; ++order) {
            const RbDeformation d = transported_rb_deformation(ctx, a, order);
            CHECK(is_rb_deformation(d));
            CHECK(d.maps[1] == dT_of_element(ctx, a));
            const RbDeformation trivial = trivial_rb_deformation(ctx, order);
            CHECK(rb_check_equivalence(d, trivial, {a, {}, {}}));
        }
}

TEST_CASE("rigidification kills the order-1 term")
{
    const auto cases = nontrivial_nijenhuis();
    for (const auto& [ctx, a] : cases)
        for (std::size_t order = 1; order <= 3; ++order) {
            const RbDeformation d = transported_rb_deformation(ctx, a, order);
            const RbDeformation r = rigidify(d, a);
            CHECK(is_rb_deformation(r));
            CHECK(r.maps[0] == ctx.op);
            CHECK(r.maps[1].is_zero());
            CHECK(rb_check_equivalence(d, r, {a, {}, {}}));
        }
    const auto entries = corpus();
    const Instance& inst = entries.at(9).instance;
    const RbDeformation d = instance_rb_deformation(inst);
    REQUIRE(inst.rb_deformation->nijenhuis);
    CHECK(is_rb_deformation(d));
    CHECK(rigidify(d, *inst.rb_deformation->nijenhuis).maps[1].is_zero());
}

TEST_CASE("equivalence check rejects mismatched infinitesimals")
{
    const auto cases = nontrivial_nijenhuis();
    REQUIRE_FALSE(cases.empty());
    const auto& [ctx, a] = cases.front();
    const RbDeformation t = trivial_rb_deformation(ctx, 1);
    CHECK_FALSE(rb_check_equivalence(t, t, {a, {}, {}}).ok());
    CHECK(rb_check_equivalence(t, t, {zero_vector(ctx.dim_a()), {}, {}}));
    CHECK_THROWS_AS(rigidify(t, Vector(ctx.dim_a(), Rational(7)) + a), AxiomFailure);
}

TEST_CASE("coboundary preimages")
{
    Sampler s(85);
    for (const auto& [name, ctx] : fixture::corpus_contexts()) {
        CAPTURE(name);
        const Cochain f = dT_of_element(ctx, s.vector(ctx.dim_a()));
        auto a = coboundary_preimage(ctx, f);
        REQUIRE(a);
        CHECK(dT_of_element(ctx, *a) == f);
    }
    // The order-1 corpus deformation has a cocycle that is not a coboundary.
    const auto entries = corpus();
    const RbDeformation d = instance_rb_deformation(entries.at(8).instance);
    CHECK(rb_infinitesimal(d).cocycle);
    CHECK_FALSE(coboundary_preimage(d.ctx, d.maps[1]));
}

TEST_CASE("NS deformations: order 1 iff δ_π-cocycle")
{
    Sampler s(86);
    for (const auto& [name, ns] : fixture::corpus_ns()) {
        if (ns.dim() > 2)
            continue;
        CAPTURE(name);
        const TaggedCochain pi = ns_to_multiplication(ns);
        std::vector<TaggedCochain> trials{s.tagged(2, ns.dim())};
        const Subspace z = nullspace(delta_pi_matrix(pi, 2));
        if (z.dim() > 0)
            trials.push_back(TaggedCochain::from_flat(2, ns.dim(), z.basis.back()));
        for (const auto& p1 : trials) {
            const NsDeformation d{ns, {pi, p1}};
            CHECK(is_ns_deformation(d) == delta_pi(pi, p1).is_zero());
            CHECK(ns_deformation_residuals(d)[1] == Rational(-1) * delta_pi(pi, p1));
        }
    }
}

TEST_CASE("obstruction and extension on corpus deformations")
{
    const auto entries = corpus();
    const NsDeformation d = instance_ns_deformation(entries.at(10).instance);
    REQUIRE(is_ns_deformation(d));
    const NsObstruction ob = ns_obstruction(d);
    CHECK(ob.ob == naive_obstruction(d));
    CHECK_FALSE(ob.ob.is_zero());
    CHECK(ob.cocycle);
    CHECK(delta_pi(d.maps[0], ob.ob).is_zero());
    CHECK(solve(delta_pi_matrix(d.maps[0], 2), (Rational(-1) * ob.ob).flatten()));
    auto next = ns_extend(d);
    REQUIRE(next);
    CHECK(delta_pi(d.maps[0], *next) == Rational(-1) * ob.ob);
    NsDeformation longer = d;
    longer.maps.push_back(*next);
    CHECK(is_ns_deformation(longer));
    // Two more steps where possible.
    for (int step = 0; step < 2; ++step) {
        const NsObstruction o = ns_obstruction(longer);
        CHECK(o.cocycle);
        CHECK(o.ob == naive_obstruction(longer));
        auto more = ns_extend(longer);
        if (!more)
            break;
        longer.maps.push_back(*more);
        CHECK(is_ns_deformation(longer));
    }
}

TEST_CASE("a deformation whose obstruction class is nonzero")
{
    // π = 0 on K and π_1 with ≺ = ≻ = the product of K, ⋎ = 0.
    const NsAlgebra zero(1);
    TaggedCochain p1(2, 1);
    p1[1].at(0, 0) = 1;
    p1[2].at(0, 0) = 1;
    const NsDeformation d{zero, {TaggedCochain(2, 1), p1}};
    REQUIRE(is_ns_deformation(d));
    const NsObstruction ob = ns_obstruction(d);
    CHECK(ob.ob == naive_obstruction(d));
    CHECK(ob.cocycle);
    CHECK_FALSE(ob.ob.is_zero());
    CHECK_FALSE(ns_extend(d));
    const Subspace z = nullspace(delta_pi_matrix(d.maps[0], 3));
    const Subspace b = column_space(delta_pi_matrix(d.maps[0], 2));
    CHECK(z.contains(ob.ob.flatten()));
    CHECK_FALSE(b.contains(ob.ob.flatten()));
    CHECK(quotient_dim(z, b) == 4);
}

TEST_CASE("deformation shape errors")
{
    const TrbContext ctx = inverse_example();
    CHECK_THROWS_AS(rb_deformation_residuals(RbDeformation{ctx, {Cochain(1, 2, 2)}}), ShapeMismatch);
    CHECK_THROWS_AS(is_ns_deformation(NsDeformation{NsAlgebra(2), {}}), ShapeMismatch);
}
