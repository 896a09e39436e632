#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "boxdim/box.hpp"
#include "boxdim/errors.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/intervals.hpp"
#include "boxdim/poset.hpp"

namespace boxdim {

// Interchange documents: {"kind": ..., "version": "1", "payload": {...}}, JSON with
// sorted keys and integer endpoints.

enum class DocKind { graph, poset, interval_rep, box_rep, realizer, report };

inline constexpr std::string_view kFormatVersion = "1";

std::string_view kind_name(DocKind k);

struct Document {
    DocKind kind = DocKind::report;
    std::string version{kFormatVersion};
    nlohmann::json payload = nlohmann::json::object();

    nlohmann::json to_json() const;
    std::string dump() const;
};

/// Syntax, kind and version checks only. Throws ParseError.
Document parse_document(std::string_view text);

nlohmann::json graph_payload(const Graph& g);
nlohmann::json poset_payload(const Poset& p);
nlohmann::json interval_rep_payload(const IntervalRepresentation& rep);
nlohmann::json box_rep_payload(const BoxRepresentation& b);
nlohmann::json realizer_payload(const Realizer& r);

Document make_document(const Graph& g);
Document make_document(const Poset& p);
Document make_document(const IntervalRepresentation& rep);
Document make_document(const BoxRepresentation& b);
Document make_document(const Realizer& r);

/// Payload decoders. Every type invariant is checked; the first violation is
/// reported as a ParseError whose path starts at "payload".
Graph graph_from(const Document& d);
Poset poset_from(const Document& d);
IntervalRepresentation interval_rep_from(const Document& d);
BoxRepresentation box_rep_from(const Document& d);
Realizer realizer_from(const Document& d);

template <class T>
std::string serialize(const T& obj) {
    return make_document(obj).dump();
}

}  // namespace boxdim
