#pragma once

// Structured (JSON-lines) and plain-text renderings of every report type. Structured output
// writes rationals as "p/q" strings and big integers as decimal strings; vertex ids are 1-based.

#include <cliquepoly/bounds.hh>
#include <cliquepoly/cliques.hh>
#include <cliquepoly/equality.hh>
#include <cliquepoly/graph.hh>
#include <cliquepoly/symmetrizer.hh>
#include <cliquepoly/weighted.hh>

#include <json.hpp>

#include <string>
#include <vector>

namespace cliquepoly::report
{
    using Json = nlohmann::ordered_json;

    auto vertex_ids(const VertexSet & s) -> Json;
    auto rationals(const std::vector<Rational> & values) -> Json;
    auto certified(const CertifiedValue & v) -> Json;

    auto graph_record(const Graph & g) -> Json;
    auto counts_record(const CliqueCounts & counts) -> Json;
    auto chain_records(const ChainReport & chain) -> std::vector<Json>;
    auto trace_records(const SymmetrizationTrace & trace) -> std::vector<Json>;
    auto maximum_record(int omega, const SymmetrizationTrace & trace) -> Json;
    auto equality_record(const EqualityReport & r) -> Json;
    auto bound_record(const BoundReport & r) -> Json;

    /// Rebuilds a trace from the records trace_records produced (other records are ignored).
    /// Throws InputError on a malformed or incomplete trace.
    auto trace_from_records(const std::vector<Json> & records) -> SymmetrizationTrace;

    auto counts_text(const CliqueCounts & counts) -> std::string;
    auto chain_text(const ChainReport & chain) -> std::string;
    auto trace_text(const SymmetrizationTrace & trace) -> std::string;
    auto maximum_text(int omega, const SymmetrizationTrace & trace) -> std::string;
    auto equality_text(const EqualityReport & r) -> std::string;
    auto bound_text(const BoundReport & r) -> std::string;
}
