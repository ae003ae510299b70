#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfactor/graphfactor.hpp"
#include "gfactor/parityset.hpp"

namespace gfactor {

/*
 * On-disk problem description.  The text format is line oriented with a
 * fixed section order; '#' starts a comment and blank lines are skipped:
 *
 *   gfactor 1
 *   vertices <n>
 *   names <n tokens>            (optional)
 *   edge <u> <v> <w>            (one line per edge, id order)
 *   bset <v> : <sorted elems>   (exactly one line per vertex, ascending v)
 *   objective <cardinality|weighted>   (optional)
 *   initial : <edge ids>        (optional, ids ascending, may be empty)
 *
 * Degree sets are written as explicit element lists and validated gap-free
 * on load.  A declared initial factor is validated too: every vertex degree
 * it induces must lie in that vertex's set.
 */
struct Instance {
    int vertices = 0;
    std::vector<std::string> names;  // empty, or one token per vertex
    std::vector<GraphEdge> edges;
    BProfile bsets;
    std::optional<Objective> objective;
    std::optional<Factor> initial;

    bool operator==(const Instance&) const = default;
};

/* Parse failure; what() is prefixed with the 1-based input line number. */
struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);

/* Throws std::runtime_error when the file cannot be opened. */
Instance load_instance(const std::string& path);

/* Canonical text form; parse_instance_text(emit_instance(i)) == i. */
std::string emit_instance(const Instance& inst);

MultiGraph instance_graph(const Instance& inst);

}  // namespace gfactor
