#include "twistrb/instance.hpp"

#include "twistrb/errors.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace twistrb {

using nlohmann::json;

namespace {

std::string path_join(const std::string& base, const std::string& key)
{
    return base.empty() ? key : base + "." + key;
}

std::string path_index(const std::string& base, std::size_t i)
{
    return base + "[" + std::to_string(i) + "]";
}

const json& require(const json& object, const std::string& key, const std::string& where)
{
    auto it = object.find(key);
    if (it == object.end())
        throw ParseError(path_join(where, key), "missing");
    return *it;
}

std::size_t read_dim(const json& value, const std::string& where)
{
    if (!value.is_number_integer() || value.get<long long>() < 1)
        throw ParseError(where, "expected a positive integer");
    return value.get<std::size_t>();
}

Rational read_rational(const json& value, const std::string& where)
{
    if (!value.is_string())
        throw ParseError(where, "expected a rational written as a string \"p/q\"");
    return parse_rational(value.get<std::string>(), where);
}

void check_object(const json& value, const std::string& where, const std::set<std::string>& allowed)
{
    if (!value.is_object())
        throw ParseError(where.empty() ? "(top level)" : where, "expected an object");
    for (auto it = value.begin(); it != value.end(); ++it)
        if (!allowed.contains(it.key()))
            throw ParseError(path_join(where, it.key()), "unknown key");
}

// Sparse entries [i_1, .., i_n, value] with bounds[k] the range of i_k.
// Calls sink(zero_based_indices, value) once per entry.
template <class Sink>
void read_entries(const json& list, const std::string& where, const std::vector<std::size_t>& bounds, Sink&& sink)
{
    if (!list.is_array())
        throw ParseError(where, "expected a list of entries");
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string at = path_index(where, e + 1);
        const json& entry = list[e];
        if (!entry.is_array() || entry.size() != bounds.size() + 1)
            throw ParseError(at, "expected " + std::to_string(bounds.size()) + " indices and a coefficient");
        std::vector<std::size_t> idx(bounds.size());
        for (std::size_t k = 0; k < bounds.size(); ++k) {
            const json& v = entry[k];
            if (!v.is_number_integer() || v.get<long long>() < 1 ||
                v.get<unsigned long long>() > bounds[k])
                throw ParseError(at, "index " + v.dump() + " outside 1.." + std::to_string(bounds[k]));
            idx[k] = v.get<std::size_t>() - 1;
        }
        if (!seen.insert(idx).second)
            throw ParseError(at, "duplicate entry");
        sink(idx, read_rational(entry.back(), at));
    }
}

Cochain read_cochain(const json& list, const std::string& where, std::size_t arity, std::size_t source_dim,
                     std::size_t target_dim)
{
    Cochain c(arity, source_dim, target_dim);
    std::vector<std::size_t> bounds(arity, source_dim);
    bounds.push_back(target_dim);
    read_entries(list, where, bounds, [&](const std::vector<std::size_t>& idx, const Rational& v) {
        c.at(c.tuple_index(std::span(idx.data(), arity)), idx.back()) = v;
    });
    return c;
}

Vector read_vector(const json& list, const std::string& where, std::size_t dim)
{
    if (!list.is_array() || list.size() != dim)
        throw ParseError(where, "expected a list of " + std::to_string(dim) + " rationals");
    Vector v(dim);
    for (std::size_t k = 0; k < dim; ++k)
        v[k] = read_rational(list[k], path_index(where, k + 1));
    return v;
}

json write_entry(const std::vector<std::size_t>& zero_based, const Rational& v)
{
    json entry = json::array();
    for (auto i : zero_based)
        entry.push_back(i + 1);
    entry.push_back(format_rational(v));
    return entry;
}

json write_cochain(const Cochain& c)
{
    json list = json::array();
    for (std::size_t t = 0; t < c.tuples(); ++t) {
        const auto idx = c.tuple_of(t);
        for (std::size_t k = 0; k < c.target_dim(); ++k) {
            if (c.at(t, k) == 0)
                continue;
            auto full = idx;
            full.push_back(k);
            list.push_back(write_entry(full, c.at(t, k)));
        }
    }
    return list;
}

json write_vector(const Vector& v)
{
    json list = json::array();
    for (const auto& x : v)
        list.push_back(format_rational(x));
    return list;
}

Algebra read_algebra(const json& value, const std::string& where)
{
    check_object(value, where, {"dim", "mul"});
    const std::size_t d = read_dim(require(value, "dim", where), path_join(where, "dim"));
    return Algebra(read_cochain(require(value, "mul", where), path_join(where, "mul"), 2, d, d));
}

Bimodule read_bimodule(const json& value, const std::string& where, std::size_t dim_a)
{
    check_object(value, where, {"dim", "left", "right"});
    const std::size_t d = read_dim(require(value, "dim", where), path_join(where, "dim"));
    Bimodule m(dim_a, d);
    if (value.contains("left"))
        read_entries(value["left"], path_join(where, "left"), {dim_a, d, d},
                     [&](const auto& idx, const Rational& v) { m.left(idx[0], idx[1], idx[2]) = v; });
    if (value.contains("right"))
        read_entries(value["right"], path_join(where, "right"), {d, dim_a, d},
                     [&](const auto& idx, const Rational& v) { m.right(idx[0], idx[1], idx[2]) = v; });
    return m;
}

json write_bimodule(const Bimodule& m)
{
    json left = json::array(), right = json::array();
    const std::size_t da = m.algebra_dim(), d = m.dim();
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q)
                if (m.left(i, p, q) != 0)
                    left.push_back(write_entry({i, p, q}, m.left(i, p, q)));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t q = 0; q < d; ++q)
                if (m.right(p, i, q) != 0)
                    right.push_back(write_entry({p, i, q}, m.right(p, i, q)));
    return json{{"dim", d}, {"left", left}, {"right", right}};
}

NsAlgebra read_ns_operations(const json& value, const std::string& where, std::size_t d)
{
    auto op = [&](const char* key) {
        return value.contains(key) ? read_cochain(value[key], path_join(where, key), 2, d, d) : Cochain(2, d, d);
    };
    return NsAlgebra(op("prec"), op("succ"), op("vee"));
}

void write_ns_operations(json& out, const NsAlgebra& ns)
{
    out["prec"] = write_cochain(ns.prec);
    out["succ"] = write_cochain(ns.succ);
    out["vee"] = write_cochain(ns.vee);
}

const char* operator_key(OperatorKind kind)
{
    switch (kind) {
    case OperatorKind::R:
        return "R";
    case OperatorKind::N:
        return "N";
    default:
        return "T";
    }
}

// Compact canonical layout: arrays of scalars stay on one line.
void dump_canonical(const json& value, std::ostringstream& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
    const std::string close(static_cast<std::size_t>(indent), ' ');
    if (value.is_object()) {
        if (value.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        std::size_t n = 0;
        for (auto it = value.begin(); it != value.end(); ++it) {
            out << pad << json(it.key()).dump() << ": ";
            dump_canonical(it.value(), out, indent + 2);
            out << (++n < value.size() ? ",\n" : "\n");
        }
        out << close << "}";
        return;
    }
    if (value.is_array()) {
        bool flat = true;
        for (const auto& v : value)
            flat = flat && v.is_primitive();
        if (flat) {
            out << "[";
            for (std::size_t k = 0; k < value.size(); ++k)
                out << (k ? ", " : "") << value[k].dump();
            out << "]";
            return;
        }
        out << "[\n";
        for (std::size_t k = 0; k < value.size(); ++k) {
            out << pad;
            dump_canonical(value[k], out, indent + 2);
            out << (k + 1 < value.size() ? ",\n" : "\n");
        }
        out << close << "]";
        return;
    }
    out << value.dump();
}

std::string line_of(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace

Instance parse_instance(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(line_of(text, e.byte), "invalid JSON");
    }
    check_object(doc, "", {"field", "name", "algebra", "bimodule", "cocycle_H", "T", "R", "N", "ns", "dim", "prec",
                           "succ", "vee", "deformation", "B", "h", "candidates"});

    Instance inst;
    if (doc.contains("field")) {
        if (!doc["field"].is_string() || doc["field"].get<std::string>() != "Q")
            throw ParseError("field", "only \"Q\" is supported");
    }
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ParseError("name", "expected a string");
        inst.name = doc["name"].get<std::string>();
    }

    if (doc.contains("algebra"))
        inst.algebra = read_algebra(doc["algebra"], "algebra");
    const bool flat_ns = doc.contains("dim") || doc.contains("prec") || doc.contains("succ") || doc.contains("vee");
    if (flat_ns && doc.contains("ns"))
        throw ParseError("ns", "NS operations given both at top level and under \"ns\"");

    for (const char* key : {"bimodule", "cocycle_H", "T", "R", "N", "B", "h", "candidates"})
        if (doc.contains(key) && !inst.algebra)
            throw ParseError(key, "requires an \"algebra\" block");

    if (inst.algebra) {
        const std::size_t da = inst.algebra->dim();
        if (doc.contains("bimodule"))
            inst.module = read_bimodule(doc["bimodule"], "bimodule", da);
        const std::size_t dm = inst.module ? inst.module->dim() : da;
        if (doc.contains("cocycle_H"))
            inst.twist = read_cochain(doc["cocycle_H"], "cocycle_H", 2, da, dm);
        int operators = 0;
        for (auto [key, kind] : {std::pair{"T", OperatorKind::T}, {"R", OperatorKind::R}, {"N", OperatorKind::N}}) {
            if (!doc.contains(key))
                continue;
            if (++operators > 1)
                throw ParseError(key, "at most one of \"T\", \"R\", \"N\" may be given");
            if (kind == OperatorKind::N && (inst.module || inst.twist))
                throw ParseError(key, "\"N\" builds its own bimodule and cocycle");
            inst.op = read_cochain(doc[key], key, 1, kind == OperatorKind::T ? dm : da, da);
            inst.op_kind = kind;
        }
        if (doc.contains("B"))
            inst.gauge = read_cochain(doc["B"], "B", 1, da, dm);
        if (doc.contains("h"))
            inst.shift = read_cochain(doc["h"], "h", 1, da, dm);
        if (doc.contains("candidates")) {
            const json& list = doc["candidates"];
            if (!list.is_array())
                throw ParseError("candidates", "expected a list of vectors");
            std::vector<Vector> cands;
            for (std::size_t k = 0; k < list.size(); ++k)
                cands.push_back(read_vector(list[k], path_index("candidates", k + 1), da));
            inst.candidates = std::move(cands);
        }
    }

    if (inst.op) {
        try {
            instance_context(inst);
        } catch (const ShapeMismatch& e) {
            throw ParseError(operator_key(inst.op_kind), e.what());
        }
    }

    if (flat_ns) {
        const std::size_t d = read_dim(require(doc, "dim", ""), "dim");
        inst.ns = read_ns_operations(doc, "", d);
    } else if (doc.contains("ns")) {
        check_object(doc["ns"], "ns", {"dim", "prec", "succ", "vee"});
        const std::size_t d = read_dim(require(doc["ns"], "dim", "ns"), "ns.dim");
        inst.ns = read_ns_operations(doc["ns"], "ns", d);
    }

    if (doc.contains("deformation")) {
        const json& def = doc["deformation"];
        check_object(def, "deformation", {"kind", "maps", "nijenhuis"});
        const json& kind = require(def, "kind", "deformation");
        const json& maps = require(def, "maps", "deformation");
        if (!maps.is_array())
            throw ParseError("deformation.maps", "expected a list with one entry per order 1..N");
        if (kind == "rb") {
            if (!inst.algebra || !inst.op)
                throw ParseError("deformation", "an RB deformation needs \"algebra\" and an operator");
            const TrbContext ctx = instance_context(inst);
            RbDeformationData data;
            for (std::size_t k = 0; k < maps.size(); ++k)
                data.maps.push_back(
                    read_cochain(maps[k], path_index("deformation.maps", k + 1), 1, ctx.dim_m(), ctx.dim_a()));
            if (def.contains("nijenhuis"))
                data.nijenhuis = read_vector(def["nijenhuis"], "deformation.nijenhuis", ctx.dim_a());
            inst.rb_deformation = std::move(data);
        } else if (kind == "ns") {
            if (!inst.ns && !(inst.algebra && inst.op))
                throw ParseError("deformation", "an NS deformation needs an NS structure or a context");
            if (def.contains("nijenhuis"))
                throw ParseError("deformation.nijenhuis", "only meaningful for RB deformations");
            const std::size_t d = instance_ns(inst).dim();
            NsDeformationData data;
            for (std::size_t k = 0; k < maps.size(); ++k) {
                const std::string at = path_index("deformation.maps", k + 1);
                check_object(maps[k], at, {"prec", "succ", "vee"});
                data.maps.push_back(ns_to_multiplication(read_ns_operations(maps[k], at, d)));
            }
            inst.ns_deformation = std::move(data);
        } else {
            throw ParseError("deformation.kind", "expected \"rb\" or \"ns\"");
        }
    }
    return inst;
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

json parse_side_file(const std::string& text, const std::string& key)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(line_of(text, e.byte), "invalid JSON");
    }
    check_object(doc, "", {key});
    return require(doc, key, "");
}

} // namespace

Cochain parse_map_file(const std::string& text, const std::string& key, std::size_t source_dim,
                       std::size_t target_dim)
{
    return read_cochain(parse_side_file(text, key), key, 1, source_dim, target_dim);
}

std::vector<Vector> parse_candidates_file(const std::string& text, std::size_t dim)
{
    const json list = parse_side_file(text, "candidates");
    if (!list.is_array())
        throw ParseError("candidates", "expected a list of vectors");
    std::vector<Vector> out;
    for (std::size_t k = 0; k < list.size(); ++k)
        out.push_back(read_vector(list[k], path_index("candidates", k + 1), dim));
    return out;
}

Instance load_instance(const std::string& path)
{
    const std::string text = read_text(path);
    try {
        return parse_instance(text);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

std::string serialize_instance(const Instance& inst)
{
    json doc = json::object();
    doc["field"] = inst.field;
    if (!inst.name.empty())
        doc["name"] = inst.name;
    if (inst.algebra)
        doc["algebra"] = json{{"dim", inst.algebra->dim()}, {"mul", write_cochain(inst.algebra->product())}};
    if (inst.module)
        doc["bimodule"] = write_bimodule(*inst.module);
    if (inst.twist)
        doc["cocycle_H"] = write_cochain(*inst.twist);
    if (inst.op)
        doc[operator_key(inst.op_kind)] = write_cochain(*inst.op);
    if (inst.gauge)
        doc["B"] = write_cochain(*inst.gauge);
    if (inst.shift)
        doc["h"] = write_cochain(*inst.shift);
    if (inst.candidates) {
        json list = json::array();
        for (const auto& v : *inst.candidates)
            list.push_back(write_vector(v));
        doc["candidates"] = list;
    }
    if (inst.ns) {
        json block{{"dim", inst.ns->dim()}};
        write_ns_operations(block, *inst.ns);
        if (inst.algebra)
            doc["ns"] = block;
        else
            doc.update(block);
    }
    if (inst.rb_deformation) {
        json maps = json::array();
        for (const auto& m : inst.rb_deformation->maps)
            maps.push_back(write_cochain(m));
        json def{{"kind", "rb"}, {"maps", maps}};
        if (inst.rb_deformation->nijenhuis)
            def["nijenhuis"] = write_vector(*inst.rb_deformation->nijenhuis);
        doc["deformation"] = def;
    } else if (inst.ns_deformation) {
        json maps = json::array();
        for (const auto& m : inst.ns_deformation->maps) {
            json block = json::object();
            write_ns_operations(block, multiplication_to_ns(m));
            maps.push_back(block);
        }
        doc["deformation"] = json{{"kind", "ns"}, {"maps", maps}};
    }
    std::ostringstream out;
    dump_canonical(doc, out, 0);
    out << "\n";
    return out.str();
}

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string instance_digest(const Instance& instance)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(serialize_instance(instance))));
    return buf;
}

TrbContext instance_context(const Instance& inst)
{
    if (!inst.algebra)
        throw ParseError("algebra", "missing");
    if (!inst.op)
        throw ParseError("T", "missing operator (\"T\", \"R\" or \"N\")");
    const Algebra& a = *inst.algebra;
    if (inst.op_kind == OperatorKind::N)
        return nijenhuis_context(a, *inst.op);
    if (inst.op_kind == OperatorKind::R && !inst.module && !inst.twist)
        return reynolds_context(a, *inst.op);
    Bimodule m = inst.module ? *inst.module : adjoint_bimodule(a);
    Cochain h = inst.twist ? *inst.twist : Cochain(2, a.dim(), m.dim());
    TrbContext ctx{a, std::move(m), std::move(h), *inst.op};
    ctx.check_shapes();
    return ctx;
}

NsAlgebra instance_ns(const Instance& inst)
{
    if (inst.ns)
        return *inst.ns;
    if (inst.algebra && inst.op)
        return trb_to_ns(instance_context(inst));
    throw ParseError("ns", "missing NS structure");
}

RbDeformation instance_rb_deformation(const Instance& inst)
{
    if (!inst.rb_deformation)
        throw ParseError("deformation", "missing RB deformation");
    RbDeformation d{instance_context(inst), {}};
    d.maps.push_back(d.ctx.op);
    for (const auto& m : inst.rb_deformation->maps)
        d.maps.push_back(m);
    return d;
}

NsDeformation instance_ns_deformation(const Instance& inst)
{
    if (!inst.ns_deformation)
        throw ParseError("deformation", "missing NS deformation");
    NsDeformation d{instance_ns(inst), {}};
    d.maps.push_back(ns_to_multiplication(d.base));
    for (const auto& m : inst.ns_deformation->maps)
        d.maps.push_back(m);
    return d;
}

} // namespace twistrb
