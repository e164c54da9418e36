#pragma once

// JSON instance files. Indices are 1-based, tensors are sparse lists of
// [index.., coefficient] entries with omitted entries zero, and every
// rational is a string "p/q" or "p".

#include "twistrb/deform.hpp"
#include "twistrb/ns_operad.hpp"
#include "twistrb/trb.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twistrb {

/// Which key carried the operator M -> A.
enum class OperatorKind { T, R, N };

struct RbDeformationData {
    std::vector<Cochain> maps; // T_1 .. T_N
    std::optional<Vector> nijenhuis;

    bool operator==(const RbDeformationData&) const = default;
};

struct NsDeformationData {
    std::vector<TaggedCochain> maps; // π_1 .. π_N

    bool operator==(const NsDeformationData&) const = default;
};

struct Instance {
    std::string field = "Q";
    std::string name;
    std::optional<Algebra> algebra;
    std::optional<Bimodule> module;
    std::optional<Cochain> twist;
    std::optional<Cochain> op;
    OperatorKind op_kind = OperatorKind::T;
    std::optional<NsAlgebra> ns;
    std::optional<RbDeformationData> rb_deformation;
    std::optional<NsDeformationData> ns_deformation;
    std::optional<Cochain> gauge;          // "B": A -> M
    std::optional<Cochain> shift;          // "h": A -> M
    std::optional<std::vector<Vector>> candidates;

    bool operator==(const Instance&) const = default;
};

/// Parses and shape-checks an instance. Throws ParseError naming the field
/// (or the line, for JSON syntax errors).
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text(const std::string& path);

/// A side file {"<key>": [[i, q, "p/q"], ..]} holding one linear map, as
/// used by gauge ("B") and shift ("h").
Cochain parse_map_file(const std::string& text, const std::string& key, std::size_t source_dim,
                       std::size_t target_dim);

/// A side file {"candidates": [["p/q", ..], ..]} of vectors of length dim.
std::vector<Vector> parse_candidates_file(const std::string& text, std::size_t dim);

/// Canonical text: sorted keys, sorted entries, two-space indentation,
/// trailing newline. parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& instance);

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string instance_digest(const Instance& instance);
std::uint64_t fnv1a(const std::string& bytes);

/// The twisted RB context an instance describes. A missing bimodule means
/// the adjoint one, a missing cocycle means H = 0, and the operator key
/// selects the construction: "T" as given, "R" through reynolds_context
/// when no bimodule or cocycle is given, "N" through nijenhuis_context.
/// Throws ParseError when the instance carries no algebra or operator.
TrbContext instance_context(const Instance& instance);

/// The NS structure: the "ns" block if present, otherwise trb_to_ns of the context.
NsAlgebra instance_ns(const Instance& instance);

RbDeformation instance_rb_deformation(const Instance& instance);
NsDeformation instance_ns_deformation(const Instance& instance);

} // namespace twistrb
