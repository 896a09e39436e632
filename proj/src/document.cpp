#include "boxdim/document.hpp"

#include <array>
#include <utility>

#include <fmt/format.h>

namespace boxdim {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<DocKind, std::string_view>, 6> kKinds{{
    {DocKind::graph, "graph"},
    {DocKind::poset, "poset"},
    {DocKind::interval_rep, "interval-rep"},
    {DocKind::box_rep, "box-rep"},
    {DocKind::realizer, "realizer"},
    {DocKind::report, "report"},
}};

const json& field(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) throw ParseError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + "." + key, "missing field");
    return *it;
}

std::int64_t integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
    return v.get<std::int64_t>();
}

const json& array(const json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError(path, "expected an array");
    return v;
}

int count(const json& obj, const std::string& path, const char* key) {
    auto n = integer(field(obj, path, key), path + "." + key);
    if (n < 0 || n > 1 << 16) throw ParseError(path + "." + key, "size out of range");
    return static_cast<int>(n);
}

std::pair<int, int> int_pair(const json& v, const std::string& path) {
    const auto& a = array(v, path);
    if (a.size() != 2) throw ParseError(path, "expected a pair");
    auto x = integer(a[0], path + "[0]");
    auto y = integer(a[1], path + "[1]");
    return {static_cast<int>(x), static_cast<int>(y)};
}

void expect_kind(const Document& d, DocKind k) {
    if (d.kind != k) {
        throw ParseError("kind", fmt::format("expected a {} document, got {}", kind_name(k), kind_name(d.kind)));
    }
}

Graph graph_at(const json& obj, const std::string& path) {
    const int n = count(obj, path, "n");
    const auto& edges = array(field(obj, path, "edges"), path + ".edges");
    Graph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto where = fmt::format("{}.edges[{}]", path, i);
        auto [u, v] = int_pair(edges[i], where);
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(where, fmt::format("vertex out of range 1..{}", n));
        if (u == v) throw ParseError(where, "self-loop");
        if (g.adjacent(u, v)) throw ParseError(where, "duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

IntervalRepresentation rep_at(const json& obj, const std::string& path) {
    const int n = count(obj, path, "n");
    const auto& iv = array(field(obj, path, "intervals"), path + ".intervals");
    if (iv.size() != static_cast<std::size_t>(n)) throw ParseError(path + ".intervals", "expected one interval per vertex");
    std::vector<Interval> out;
    for (std::size_t i = 0; i < iv.size(); ++i) {
        const auto where = fmt::format("{}.intervals[{}]", path, i);
        const auto& a = array(iv[i], where);
        if (a.size() != 2) throw ParseError(where, "expected [left, right]");
        Interval x{integer(a[0], where + "[0]"), integer(a[1], where + "[1]")};
        if (x.left > x.right) throw ParseError(where, "left endpoint exceeds right endpoint");
        out.push_back(x);
    }
    return IntervalRepresentation(std::move(out));
}

}  // namespace

std::string_view kind_name(DocKind k) {
    for (auto [kind, name] : kKinds)
        if (kind == k) return name;
    return "unknown";
}

json Document::to_json() const {
    json j = json::object();
    j["kind"] = std::string(kind_name(kind));
    j["version"] = version;
    j["payload"] = payload;
    return j;
}

std::string Document::dump() const {
    return to_json().dump(2) + "\n";
}

Document parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("syntax error: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("", "document must be an object");
    const auto& kind = field(j, "", "kind");
    if (!kind.is_string()) throw ParseError("kind", "expected a string");
    Document d;
    bool known = false;
    for (auto [k, name] : kKinds) {
        if (kind.get<std::string>() == name) {
            d.kind = k;
            known = true;
        }
    }
    if (!known) throw ParseError("kind", fmt::format("unknown document kind '{}'", kind.get<std::string>()));
    const auto& version = field(j, "", "version");
    if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
        throw ParseError("version", fmt::format("unsupported version (expected \"{}\")", kFormatVersion));
    }
    d.payload = field(j, "", "payload");
    if (!d.payload.is_object()) throw ParseError("payload", "expected an object");
    return d;
}

json graph_payload(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

json poset_payload(const Poset& p) {
    json rel = json::array();
    for (auto [u, v] : p.relations()) rel.push_back({u, v});
    return {{"n", p.size()}, {"relations", rel}};
}

json interval_rep_payload(const IntervalRepresentation& rep) {
    json iv = json::array();
    for (const auto& x : rep.intervals) iv.push_back({x.left, x.right});
    return {{"n", rep.order()}, {"intervals", iv}};
}

json box_rep_payload(const BoxRepresentation& b) {
    json reps = json::array();
    for (const auto& r : b.reps) reps.push_back(interval_rep_payload(r));
    return {{"target", graph_payload(b.target)}, {"reps", reps}};
}

json realizer_payload(const Realizer& r) {
    json ext = json::array();
    for (const auto& l : r) ext.push_back(l.order());
    return {{"n", r.empty() ? 0 : r.front().size()}, {"extensions", ext}};
}

Document make_document(const Graph& g) { return {DocKind::graph, std::string(kFormatVersion), graph_payload(g)}; }
Document make_document(const Poset& p) { return {DocKind::poset, std::string(kFormatVersion), poset_payload(p)}; }
Document make_document(const IntervalRepresentation& rep) {
    return {DocKind::interval_rep, std::string(kFormatVersion), interval_rep_payload(rep)};
}
Document make_document(const BoxRepresentation& b) {
    return {DocKind::box_rep, std::string(kFormatVersion), box_rep_payload(b)};
}
Document make_document(const Realizer& r) {
    return {DocKind::realizer, std::string(kFormatVersion), realizer_payload(r)};
}

Graph graph_from(const Document& d) {
    expect_kind(d, DocKind::graph);
    return graph_at(d.payload, "payload");
}

Poset poset_from(const Document& d) {
    expect_kind(d, DocKind::poset);
    const std::string path = "payload";
    const int n = count(d.payload, path, "n");
    const auto& rel = array(field(d.payload, path, "relations"), path + ".relations");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < rel.size(); ++i) pairs.push_back(int_pair(rel[i], fmt::format("{}.relations[{}]", path, i)));
    if (auto bad = Poset::check_relations(n, pairs)) {
        throw ParseError(fmt::format("{}.relations[{}]", path, bad->index), bad->message);
    }
    return Poset::from_relations(n, pairs);
}

IntervalRepresentation interval_rep_from(const Document& d) {
    expect_kind(d, DocKind::interval_rep);
    return rep_at(d.payload, "payload");
}

BoxRepresentation box_rep_from(const Document& d) {
    expect_kind(d, DocKind::box_rep);
    BoxRepresentation b;
    b.target = graph_at(field(d.payload, "payload", "target"), "payload.target");
    const auto& reps = array(field(d.payload, "payload", "reps"), "payload.reps");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto where = fmt::format("payload.reps[{}]", i);
        auto r = rep_at(reps[i], where);
        if (r.order() != b.target.order()) throw ParseError(where, "vertex count differs from the target graph");
        b.reps.push_back(std::move(r));
    }
    return b;
}

Realizer realizer_from(const Document& d) {
    expect_kind(d, DocKind::realizer);
    const int n = count(d.payload, "payload", "n");
    const auto& ext = array(field(d.payload, "payload", "extensions"), "payload.extensions");
    if (ext.empty()) throw ParseError("payload.extensions", "a realizer needs at least one linear extension");
    Realizer r;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        const auto where = fmt::format("payload.extensions[{}]", i);
        const auto& a = array(ext[i], where);
        if (a.size() != static_cast<std::size_t>(n)) throw ParseError(where, fmt::format("expected {} elements", n));
        std::vector<int> order;
        for (std::size_t k = 0; k < a.size(); ++k) order.push_back(static_cast<int>(integer(a[k], fmt::format("{}[{}]", where, k))));
        try {
            r.emplace_back(std::move(order));
        } catch (const InvalidInput& e) {
            throw ParseError(where, e.what());
        }
    }
    return r;
}

}  // namespace boxdim
