#include "commands.hpp"

#include "twistrb/corpus.hpp"
#include "twistrb/errors.hpp"
#include "twistrb/instance.hpp"
#include "twistrb/linfty.hpp"
#include "twistrb/sampling.hpp"

#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace twistrb::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Outcome {
    std::string command;
    std::string file;
    std::string digest;
    Report report;
    ojson details = ojson::object();
    std::optional<std::uint64_t> seed;
    std::optional<Instance> result;
};

ojson failures_json(const Report& report)
{
    ojson list = ojson::array();
    for (const auto& f : report.failures()) {
        ojson residual = ojson::array();
        for (const auto& x : f.residual)
            residual.push_back(format_rational(x));
        list.push_back({{"identity", f.identity}, {"indices", f.indices}, {"residual", residual}});
    }
    return list;
}

std::string human_value(const ojson& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + human_value(v[i]);
        return s + "]";
    }
    return v.dump();
}

int emit(const Outcome& o, const Options& opts, std::ostream& out)
{
    const bool pass = o.report.ok();
    if (opts.json) {
        ojson doc;
        doc["command"] = o.command;
        if (!o.file.empty())
            doc["file"] = o.file;
        if (!o.digest.empty())
            doc["digest"] = o.digest;
        doc["verdict"] = pass ? "pass" : "fail";
        if (o.seed)
            doc["seed"] = *o.seed;
        doc["details"] = o.details;
        doc["failures"] = failures_json(o.report);
        if (o.result)
            doc["result"] = ojson::parse(serialize_instance(*o.result));
        out << doc.dump(2) << "\n";
    } else {
        out << o.command;
        if (!o.file.empty())
            out << " " << o.file;
        out << "\n";
        if (!o.digest.empty())
            out << "digest: " << o.digest << "\n";
        if (o.seed)
            out << "seed: " << *o.seed << "\n";
        for (auto it = o.details.begin(); it != o.details.end(); ++it)
            out << it.key() << ": " << human_value(it.value()) << "\n";
        out << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
        if (!pass)
            out << o.report.failures().size() << " failing identities\n" << o.report.describe(20);
        if (o.result)
            out << serialize_instance(*o.result);
    }
    return pass ? Pass : MathFailure;
}

ojson dims_json(const std::vector<std::size_t>& dims)
{
    return ojson(dims);
}

ojson vector_json(const Vector& v)
{
    ojson list = ojson::array();
    for (const auto& x : v)
        list.push_back(format_rational(x));
    return list;
}

std::string vector_text(const Vector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + format_rational(v[i]);
    return s + ")";
}

const std::string& single_file(const Options& opts, const std::string& command)
{
    if (opts.files.size() != 1)
        throw ParseError(command, "expected exactly one instance file");
    return opts.files.front();
}

Outcome start(const std::string& command, const Options& opts, Instance& inst)
{
    const std::string& path = single_file(opts, command);
    inst = load_instance(path);
    Outcome o;
    o.command = command;
    o.file = std::filesystem::path(path).filename().string();
    o.digest = instance_digest(inst);
    return o;
}

// Algebra, bimodule and cocycle axioms of a context.
Report prerequisites(const TrbContext& ctx)
{
    Report r;
    r.merge(check_algebra(ctx.algebra), "algebra: ");
    r.merge(check_bimodule(ctx.algebra, ctx.module), "bimodule: ");
    if (r.ok())
        r.merge(check_cocycle(ctx.algebra, ctx.module, ctx.twist), "cocycle: ");
    return r;
}

Report valid_context(const TrbContext& ctx)
{
    Report r = prerequisites(ctx);
    if (r.ok())
        r.merge(is_twisted_rb(ctx));
    return r;
}

void describe_context(Outcome& o, const TrbContext& ctx)
{
    o.details["dim_A"] = ctx.dim_a();
    o.details["dim_M"] = ctx.dim_m();
}

std::size_t nmax_or(const Options& opts, std::size_t fallback)
{
    return opts.nmax.value_or(fallback);
}

// --- algebra-core and trb ---------------------------------------------------

Outcome cmd_check_algebra(const Options& opts)
{
    Instance inst;
    Outcome o = start("check-algebra", opts, inst);
    if (!inst.algebra)
        throw ParseError("algebra", "missing");
    o.details["dim_A"] = inst.algebra->dim();
    o.report.merge(check_algebra(*inst.algebra), "algebra: ");
    if (inst.module) {
        o.details["dim_M"] = inst.module->dim();
        o.report.merge(check_bimodule(*inst.algebra, *inst.module), "bimodule: ");
    }
    return o;
}

Outcome cmd_check_cocycle(const Options& opts)
{
    Instance inst;
    Outcome o = start("check-cocycle", opts, inst);
    if (!inst.algebra)
        throw ParseError("algebra", "missing");
    if (!inst.twist)
        throw ParseError("cocycle_H", "missing");
    const Bimodule m = inst.module ? *inst.module : adjoint_bimodule(*inst.algebra);
    o.report.merge(check_algebra(*inst.algebra), "algebra: ");
    o.report.merge(check_bimodule(*inst.algebra, m), "bimodule: ");
    if (o.report.ok())
        o.report.merge(check_cocycle(*inst.algebra, m, *inst.twist), "cocycle: ");
    return o;
}

Outcome cmd_check_trb(const Options& opts)
{
    Instance inst;
    Outcome o = start("check-trb", opts, inst);
    const TrbContext ctx = instance_context(inst);
    describe_context(o, ctx);
    o.report = valid_context(ctx);
    return o;
}

Outcome cmd_cohomology_trb(const Options& opts)
{
    Instance inst;
    Outcome o = start("cohomology-trb", opts, inst);
    const TrbContext ctx = instance_context(inst);
    describe_context(o, ctx);
    o.report = valid_context(ctx);
    if (o.report.ok()) {
        const std::size_t n = nmax_or(opts, 2);
        o.details["nmax"] = n;
        o.details["dims"] = dims_json(cohomology_dims(ctx, n));
    }
    return o;
}

Instance context_result(const Instance& source, const TrbContext& ctx)
{
    Instance out;
    out.name = source.name;
    out.algebra = ctx.algebra;
    out.module = ctx.module;
    out.twist = ctx.twist;
    out.op = ctx.op;
    return out;
}

// Side files report errors as "<path>: <field>: <message>".
template <class Fn>
auto from_side_file(const std::string& path, Fn&& fn)
{
    try {
        return fn(read_text(path));
    } catch (const ParseError& e) {
        if (e.where() == path)
            throw;
        throw ParseError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

Cochain side_map(const std::string& path, const std::optional<Cochain>& inline_map, const std::string& key,
                 const TrbContext& ctx)
{
    if (!path.empty())
        return from_side_file(path, [&](const std::string& text) {
            return parse_map_file(text, key, ctx.dim_a(), ctx.dim_m());
        });
    if (inline_map)
        return *inline_map;
    throw ParseError(key, "missing; pass --" + key + " FILE or put \"" + key + "\" in the instance");
}

Outcome cmd_gauge(const Options& opts)
{
    Instance inst;
    Outcome o = start("gauge", opts, inst);
    const TrbContext ctx = instance_context(inst);
    describe_context(o, ctx);
    const Cochain b = side_map(opts.b_file, inst.gauge, "B", ctx);
    o.report = valid_context(ctx);
    if (!o.report.ok())
        return o;
    const Cochain db = hochschild_delta(ctx.algebra, ctx.module, b);
    if (!db.is_zero()) {
        o.report.add("B is a Hochschild 1-cocycle", {}, db.coefficients());
        return o;
    }
    const auto out = gauge_transform(ctx, b);
    o.details["admissible"] = out.has_value();
    if (!out) {
        o.report.add("id + B∘T is invertible", {}, {});
        return o;
    }
    o.report.merge(is_twisted_rb(*out), "T_B: ");
    o.report.merge(check_algebra_morphism(star_product(ctx), star_product(*out), gauge_map(ctx, b)), "id + B∘T: ");
    o.result = context_result(inst, *out);
    return o;
}

Outcome cmd_shift(const Options& opts)
{
    Instance inst;
    Outcome o = start("shift", opts, inst);
    const TrbContext ctx = instance_context(inst);
    describe_context(o, ctx);
    const Cochain h = side_map(opts.h_file, inst.shift, "h", ctx);
    o.report = valid_context(ctx);
    if (!o.report.ok())
        return o;
    const auto out = cocycle_shift(ctx, h);
    o.details["admissible"] = out.has_value();
    if (!out) {
        o.report.add("id - h∘T is invertible", {}, {});
        return o;
    }
    o.report.merge(valid_context(*out), "shifted: ");
    o.result = context_result(inst, *out);
    return o;
}

Outcome cmd_nijenhuis(const Options& opts)
{
    Instance inst;
    Outcome o = start("nijenhuis", opts, inst);
    const TrbContext ctx = instance_context(inst);
    describe_context(o, ctx);
    o.report = valid_context(ctx);
    if (!o.report.ok())
        return o;
    std::vector<Vector> members;
    if (!opts.candidates_file.empty() || inst.candidates) {
        const auto cands = opts.candidates_file.empty()
                               ? *inst.candidates
                               : from_side_file(opts.candidates_file, [&](const std::string& text) {
                                     return parse_candidates_file(text, ctx.dim_a());
                                 });
        o.details["source"] = "candidates";
        o.details["tested"] = cands.size();
        members = nijenhuis_filter(ctx, cands);
    } else {
        o.details["source"] = "grid {-1, 0, 1}";
        members = nijenhuis_grid(ctx, {-1, 0, 1});
    }
    o.details["count"] = members.size();
    ojson list = ojson::array();
    std::size_t trivial = 0;
    for (const auto& a : members) {
        list.push_back(opts.json ? vector_json(a) : ojson(vector_text(a)));
        trivial += dT_of_element(ctx, a).is_zero();
    }
    o.details["members"] = list;
    o.details["with_d_T(a) = 0"] = trivial;
    return o;
}

Outcome cmd_reynolds(const Options& opts)
{
    Instance inst;
    Outcome o = start("reynolds", opts, inst);
    if (!inst.algebra || !inst.op || inst.op_kind == OperatorKind::N)
        throw ParseError("R", "reynolds needs an algebra and an operator \"R\" (or \"T\") on it");
    if (inst.module || inst.twist)
        throw ParseError(inst.module ? "bimodule" : "cocycle_H", "a Reynolds instance takes M = A and H = -mu");
    const TrbContext ctx = reynolds_context(*inst.algebra, *inst.op);
    o.details["dim_A"] = ctx.dim_a();
    o.report.merge(check_algebra(ctx.algebra), "algebra: ");
    if (o.report.ok()) {
        for (const auto& f : is_twisted_rb(ctx).failures())
            o.report.add("R(a)R(b) = R(aR(b) + R(a)b - R(a)R(b))", {f.indices[0] - 1, f.indices[1] - 1}, f.residual);
    }
    return o;
}

// --- linfty ------------------------------------------------------------------

Outcome cmd_mc_check(const Options& opts)
{
    Instance inst;
    Outcome o = start("mc-check", opts, inst);
    const TrbContext ctx = instance_context(inst);
    describe_context(o, ctx);
    o.report = prerequisites(ctx);
    if (!o.report.ok())
        return o;
    const Cochain mc = mc_residual(ctx.algebra, ctx.module, ctx.twist, ctx.op);
    const bool rb = is_twisted_rb(ctx).ok();
    o.details["mc_residual_zero"] = mc.is_zero();
    o.details["twisted_rb"] = rb;
    for (std::size_t t = 0; t < mc.tuples(); ++t)
        o.report.check("½⟦T,T⟧ - (1/6)⟦T,T,T⟧ = 0", mc.tuple_of(t), mc.value(t));
    if (mc.is_zero() != rb)
        o.report.add("Maurer-Cartan iff twisted Rota-Baxter", {}, {});
    return o;
}

Outcome cmd_linfty_audit(const Options& opts)
{
    Instance inst;
    Outcome o = start("linfty-audit", opts, inst);
    const TrbContext ctx = instance_context(inst);
    describe_context(o, ctx);
    o.seed = opts.seed;
    if (opts.form != "printed" && opts.form != "derived")
        throw ParseError("--form", "expected printed or derived");
    if (opts.max_degree < 1)
        throw ParseError("--max-degree", "must be at least 1");
    const TernaryForm form = opts.form == "derived" ? TernaryForm::Derived : TernaryForm::Printed;
    o.report = prerequisites(ctx);
    if (opts.twisted && o.report.ok())
        o.report.merge(is_twisted_rb(ctx));
    if (!o.report.ok())
        return o;
    const LInftyStructure s =
        opts.twisted ? twisted_structure(ctx, form) : untwisted_structure(ctx.algebra, ctx.module, ctx.twist, form);
    const std::size_t nmax = nmax_or(opts, 5);
    if (nmax < 1 || nmax > 5)
        throw ParseError("--nmax", "the audit covers n = 1..5");
    o.details["structure"] = opts.twisted ? "twisted by T" : "untwisted";
    o.details["ternary"] = opts.form;
    o.details["degrees"] = "1.." + std::to_string(opts.max_degree);
    o.details["nmax"] = nmax;
    o.details["samples"] = opts.samples;
    Sampler sampler(opts.seed);
    ojson nonzero = ojson::array();
    for (std::size_t n = 1; n <= nmax; ++n) {
        std::size_t bad = 0;
        for (std::size_t k = 0; k < opts.samples; ++k) {
            std::vector<Cochain> args;
            std::vector<std::size_t> degrees;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t deg = 1 + sampler.index(opts.max_degree);
                degrees.push_back(deg - 1);
                args.push_back(sampler.cochain(deg, ctx.dim_m(), ctx.dim_a()));
            }
            const Cochain r = linfty_jacobi_residual(s, args);
            if (!r.is_zero()) {
                ++bad;
                o.report.add("Jacobi n=" + std::to_string(n) + ", sample " + std::to_string(k + 1) + ", degrees",
                             degrees, r.coefficients());
            }
        }
        nonzero.push_back(bad);
    }
    o.details["nonzero_residuals_by_n"] = nonzero;
    return o;
}

// --- ns-operad ---------------------------------------------------------------

Outcome cmd_check_ns(const Options& opts)
{
    Instance inst;
    Outcome o = start("check-ns", opts, inst);
    const NsAlgebra ns = instance_ns(inst);
    o.details["dim"] = ns.dim();
    o.details["dendriform"] = ns.vee.is_zero();
    o.report = check_ns(ns);
    return o;
}

Outcome cmd_cohomology_ns(const Options& opts)
{
    Instance inst;
    Outcome o = start("cohomology-ns", opts, inst);
    const NsAlgebra ns = instance_ns(inst);
    o.details["dim"] = ns.dim();
    o.report = check_ns(ns);
    if (o.report.ok()) {
        const std::size_t n = nmax_or(opts, 3);
        o.details["nmax"] = n;
        o.details["dims"] = dims_json(ns_cohomology_dims(ns, n));
    }
    return o;
}

Outcome cmd_theta(const Options& opts)
{
    Instance inst;
    Outcome o = start("theta", opts, inst);
    const NsAlgebra ns = instance_ns(inst);
    const std::size_t d = ns.dim();
    o.details["dim"] = d;
    o.seed = opts.seed;
    o.report = check_ns(ns);
    if (!o.report.ok())
        return o;
    const Cochain star = theta(ns_to_multiplication(ns));
    o.details["theta(pi) = *"] = star == ns.star().product();
    if (star != ns.star().product())
        o.report.add("Θ_2(π) = *", {}, (star - ns.star().product()).coefficients());
    Sampler sampler(opts.seed);
    for (std::size_t k = 0; k < opts.samples; ++k) {
        const std::size_t m = 1 + sampler.index(2);
        const std::size_t n = 1 + sampler.index(4 - m);
        const std::size_t i = 1 + sampler.index(m);
        const TaggedCochain f = sampler.tagged(m, d), g = sampler.tagged(n, d);
        const Cochain lhs = theta(partial_compose(f, g, i));
        const Cochain rhs = compose_at(theta(f), i, theta(g));
        if (lhs != rhs)
            o.report.add("Θ(f ∘_i g) = Θ(f) ∘_i Θ(g), (m, n, i)", {m - 1, n - 1, i - 1}, (lhs - rhs).coefficients());
    }
    o.details["samples"] = opts.samples;
    return o;
}

Outcome cmd_trb_to_ns(const Options& opts)
{
    Instance inst;
    Outcome o = start("trb-to-ns", opts, inst);
    const TrbContext ctx = instance_context(inst);
    describe_context(o, ctx);
    o.report = valid_context(ctx);
    if (!o.report.ok())
        return o;
    const NsAlgebra ns = trb_to_ns(ctx);
    o.report.merge(check_ns(ns), "induced NS: ");
    o.details["dendriform"] = ns.vee.is_zero();
    Instance out;
    out.name = inst.name.empty() ? "" : "NS structure of " + inst.name;
    out.ns = ns;
    o.result = out;
    return o;
}

// --- deform ------------------------------------------------------------------

template <class Map>
void fit_order(std::vector<Map>& maps, std::size_t order, const Map& zero)
{
    maps.resize(order + 1, zero);
}

Outcome cmd_deform_rb(const Options& opts)
{
    Instance inst;
    Outcome o = start("deform-rb", opts, inst);
    RbDeformation d = instance_rb_deformation(inst);
    const TrbContext& ctx = d.ctx;
    describe_context(o, ctx);
    o.report = valid_context(ctx);
    if (!o.report.ok())
        return o;
    const std::size_t order = opts.order.value_or(d.order());
    fit_order(d.maps, order, Cochain(1, ctx.dim_m(), ctx.dim_a()));
    o.details["order"] = order;
    const auto residuals = rb_deformation_residuals(d);
    ojson vanishing = ojson::array();
    for (std::size_t n = 0; n < residuals.size(); ++n) {
        vanishing.push_back(residuals[n].is_zero());
        for (std::size_t t = 0; t < residuals[n].tuples(); ++t)
            o.report.check("deformation equation, order " + std::to_string(n), residuals[n].tuple_of(t),
                           residuals[n].value(t));
    }
    o.details["residual_zero_by_order"] = vanishing;
    if (order >= 1) {
        const RbInfinitesimal inf = rb_infinitesimal(d);
        o.details["T_1 is a 1-cocycle"] = inf.cocycle;
        o.details["T_1 is a coboundary"] = coboundary_preimage(ctx, inf.t1).has_value();
        if (inf.cocycle != residuals[1].is_zero())
            o.report.add("order-1 equation iff d_T(T_1) = 0", {}, {});
    }
    if (inst.rb_deformation->nijenhuis && order >= 1) {
        const Vector& a = *inst.rb_deformation->nijenhuis;
        const Report nij = is_nijenhuis_element(ctx, a);
        o.details["nijenhuis_element"] = opts.json ? vector_json(a) : ojson(vector_text(a));
        o.report.merge(nij, "Nijenhuis element: ");
        if (nij.ok() && o.report.ok()) {
            const RbDeformation rigid = rigidify(d, a);
            o.report.merge(rb_check_equivalence(d, rigid, RbEquivalenceWitness{a, {}, {}}), "equivalence: ");
            o.details["rigidified T'_1 = 0"] = rigid.maps[1].is_zero();
            if (dT_of_element(ctx, a) == d.maps[1] && !rigid.maps[1].is_zero())
                o.report.add("coefficient of t in T'_t vanishes", {}, rigid.maps[1].coefficients());
        }
    }
    return o;
}

Outcome cmd_deform_ns(const Options& opts)
{
    Instance inst;
    Outcome o = start("deform-ns", opts, inst);
    NsDeformation d = instance_ns_deformation(inst);
    o.details["dim"] = d.base.dim();
    o.report = check_ns(d.base);
    if (!o.report.ok())
        return o;
    const std::size_t order = opts.order.value_or(d.order());
    fit_order(d.maps, order, TaggedCochain(2, d.base.dim()));
    o.details["order"] = order;
    const auto residuals = ns_deformation_residuals(d);
    ojson vanishing = ojson::array();
    for (std::size_t n = 0; n < residuals.size(); ++n) {
        vanishing.push_back(residuals[n].is_zero());
        if (!residuals[n].is_zero())
            o.report.add("π_t ∘_1 π_t = π_t ∘_2 π_t, order " + std::to_string(n), {}, residuals[n].flatten());
    }
    o.details["residual_zero_by_order"] = vanishing;
    if (order >= 1) {
        const bool cocycle = delta_pi(d.maps[0], d.maps[1]).is_zero();
        o.details["π_1 is a δ_π-cocycle"] = cocycle;
        if (cocycle != residuals[1].is_zero())
            o.report.add("order-1 equation iff δ_π(π_1) = 0", {}, {});
    }
    return o;
}

Outcome ns_deformation_start(const std::string& command, const Options& opts, Instance& inst, NsDeformation& d)
{
    Outcome o = start(command, opts, inst);
    d = instance_ns_deformation(inst);
    if (opts.order)
        fit_order(d.maps, *opts.order, TaggedCochain(2, d.base.dim()));
    o.details["dim"] = d.base.dim();
    o.details["order"] = d.order();
    o.report = check_ns(d.base);
    if (o.report.ok()) {
        const auto residuals = ns_deformation_residuals(d);
        for (std::size_t n = 0; n < residuals.size(); ++n)
            if (!residuals[n].is_zero())
                o.report.add("π_t ∘_1 π_t = π_t ∘_2 π_t, order " + std::to_string(n), {}, residuals[n].flatten());
    }
    return o;
}

Outcome cmd_obstruction(const Options& opts)
{
    Instance inst;
    NsDeformation d;
    Outcome o = ns_deformation_start("obstruction", opts, inst, d);
    if (!o.report.ok())
        return o;
    const NsObstruction ob = ns_obstruction(d);
    o.details["Ob = 0"] = ob.ob.is_zero();
    o.details["δ_π(Ob) = 0"] = ob.cocycle;
    o.details["class"] = ns_extend(d) ? "trivial" : "nontrivial";
    if (!ob.cocycle)
        o.report.add("δ_π(Ob) = 0", {}, delta_pi(d.maps[0], ob.ob).flatten());
    return o;
}

Outcome cmd_extend(const Options& opts)
{
    Instance inst;
    NsDeformation d;
    Outcome o = ns_deformation_start("extend", opts, inst, d);
    if (!o.report.ok())
        return o;
    const auto next = ns_extend(d);
    o.details["extensible"] = next.has_value();
    if (!next) {
        o.report.add("[Ob] = 0 in H^3", {}, ns_obstruction(d).ob.flatten());
        return o;
    }
    NsDeformation extended = d;
    extended.maps.push_back(*next);
    const auto residuals = ns_deformation_residuals(extended);
    if (!residuals.back().is_zero())
        o.report.add("extended deformation, order " + std::to_string(extended.order()), {}, residuals.back().flatten());
    o.details["new_order"] = extended.order();
    Instance out = inst;
    out.ns_deformation = NsDeformationData{{extended.maps.begin() + 1, extended.maps.end()}};
    o.result = out;
    return o;
}

// --- corpus ------------------------------------------------------------------

int cmd_corpus(const Options& opts, std::ostream& out, std::ostream& err)
{
    const auto entries = corpus();
    if (!opts.write_dir.empty()) {
        std::filesystem::create_directories(opts.write_dir);
        for (const auto& e : entries) {
            std::ofstream f(std::filesystem::path(opts.write_dir) / e.file, std::ios::binary);
            f << serialize_instance(e.instance);
            if (!f)
                throw ParseError(e.file, "cannot write");
        }
        out << "wrote " << entries.size() << " files to " << opts.write_dir << "\n";
        return Pass;
    }
    if (!opts.check_dir.empty()) {
        int code = Pass;
        for (const auto& e : entries) {
            const auto path = (std::filesystem::path(opts.check_dir) / e.file).string();
            // Missing or altered files are corrupt input; a file that matches
            // but fails its own command is a mathematical failure.
            std::string status = "ok";
            int file_code = Pass;
            try {
                const std::string text = read_text(path);
                if (text != serialize_instance(e.instance)) {
                    parse_instance(text);
                    status = "differs from the generated instance";
                    file_code = MalformedInput;
                }
            } catch (const ParseError& ex) {
                status = ex.what();
                file_code = MalformedInput;
            }
            if (file_code == Pass) {
                Options sub;
                sub.files = {path};
                std::ostringstream sink;
                if (run(e.command, sub, sink, sink) != Pass) {
                    status = e.command + " failed";
                    file_code = MathFailure;
                }
            }
            code = std::max(code, file_code);
            out << e.file << ": " << status << "\n";
        }
        return code;
    }
    (void)err;
    if (opts.json) {
        ojson list = ojson::array();
        for (const auto& e : entries)
            list.push_back({{"file", e.file},
                            {"command", e.command},
                            {"digest", instance_digest(e.instance)},
                            {"summary", e.summary}});
        out << list.dump(2) << "\n";
    } else {
        for (const auto& e : entries)
            out << e.file << "  [" << e.command << "]  " << instance_digest(e.instance) << "  " << e.summary << "\n";
    }
    return Pass;
}

using Handler = std::function<Outcome(const Options&)>;

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table{
        {"check-algebra", cmd_check_algebra}, {"check-cocycle", cmd_check_cocycle},
        {"check-trb", cmd_check_trb},         {"cohomology-trb", cmd_cohomology_trb},
        {"gauge", cmd_gauge},                 {"shift", cmd_shift},
        {"nijenhuis", cmd_nijenhuis},         {"reynolds", cmd_reynolds},
        {"mc-check", cmd_mc_check},           {"linfty-audit", cmd_linfty_audit},
        {"check-ns", cmd_check_ns},           {"cohomology-ns", cmd_cohomology_ns},
        {"theta", cmd_theta},                 {"trb-to-ns", cmd_trb_to_ns},
        {"deform-rb", cmd_deform_rb},         {"deform-ns", cmd_deform_ns},
        {"obstruction", cmd_obstruction},     {"extend", cmd_extend},
    };
    return table;
}

} // namespace

namespace {

const std::vector<std::pair<std::string, std::string>>& command_table()
{
    static const std::vector<std::pair<std::string, std::string>> table{
        {"check-algebra", "Associativity of A and the bimodule axioms of M"},
        {"check-cocycle", "H is a Hochschild 2-cocycle"},
        {"check-trb", "The twisted Rota-Baxter identity for T"},
        {"cohomology-trb", "dim H^n_T for n = 0..nmax"},
        {"gauge", "Gauge transform T(id + B T)^{-1} by the 1-cocycle in --B"},
        {"shift", "Cocycle shift by the 1-cochain in --h"},
        {"nijenhuis", "Nijenhuis elements of T on a grid or among --candidates"},
        {"reynolds", "Reynolds identity for R on A"},
        {"mc-check", "Maurer-Cartan residual of T against the Rota-Baxter identity"},
        {"linfty-audit", "Higher Jacobi identities on seeded samples"},
        {"check-ns", "The four NS-algebra axioms"},
        {"cohomology-ns", "dim H^n_NS for n = 1..nmax"},
        {"theta", "Theta(pi) equals the associated product *"},
        {"trb-to-ns", "The NS structure induced by T"},
        {"deform-rb", "Residuals and infinitesimal of an RB deformation"},
        {"deform-ns", "Residuals and infinitesimal of an NS deformation"},
        {"obstruction", "Obstruction class of an NS deformation"},
        {"extend", "Extend an NS deformation by one order"},
        {"corpus", "List, write or check the bundled instances"},
    };
    return table;
}

} // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, help] : command_table())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::string command_help(const std::string& command)
{
    for (const auto& [name, help] : command_table())
        if (name == command)
            return help;
    return {};
}

int run(const std::string& command, const Options& options, std::ostream& out, std::ostream& err)
{
    try {
        if (command == "corpus")
            return cmd_corpus(options, out, err);
        const auto it = handlers().find(command);
        if (it == handlers().end()) {
            err << "error: unknown command " << command << "\n";
            return MalformedInput;
        }
        return emit(it->second(options), options, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return MalformedInput;
    } catch (const ShapeMismatch& e) {
        err << "error: " << e.what() << "\n";
        return MalformedInput;
    } catch (const IndexOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return MalformedInput;
    }
}

} // namespace twistrb::cli
