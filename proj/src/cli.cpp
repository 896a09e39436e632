#include "boxdim/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "boxdim/box.hpp"
#include "boxdim/constructions.hpp"
#include "boxdim/document.hpp"
#include "boxdim/generators.hpp"
#include "boxdim/order.hpp"

namespace boxdim {

using nlohmann::json;

namespace {

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    OracleLimits limits;
    Exec exec = Exec::parallel;
};

Document load(Context& ctx, const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << ctx.in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("", fmt::format("cannot open '{}'", path));
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return parse_document(text);
}

void emit(Context& ctx, const Document& d) { ctx.out << d.dump(); }

Document report(json payload) { return {DocKind::report, std::string(kFormatVersion), std::move(payload)}; }

json pair_json(std::optional<std::pair<int, int>> p) {
    if (!p) return nullptr;
    return json::array({p->first, p->second});
}

int usage_error(Context& ctx, const std::string& message) {
    emit(ctx, report({{"status", "error"}, {"error", message}}));
    ctx.err << "error: " << message << "\n";
    return kExitUsage;
}

int to_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput(fmt::format("{} must be an integer (got '{}')", what, s));
    }
}

double to_double(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput(fmt::format("{} must be a number (got '{}')", what, s));
    }
}

void need_params(const std::vector<std::string>& params, std::size_t n, const std::string& family) {
    if (params.size() != n) {
        throw InvalidInput(fmt::format("family '{}' takes {} parameter(s), got {}", family, n, params.size()));
    }
}

// ---------------------------------------------------------------- generate

int cmd_generate(Context& ctx, const std::string& family, const std::vector<std::string>& params,
                 std::uint64_t seed, bool as_graph) {
    auto emit_pair = [&](const std::pair<Graph, Poset>& gp) {
        as_graph ? emit(ctx, make_document(gp.first)) : emit(ctx, make_document(gp.second));
    };
    auto emit_poset = [&](const Poset& p) {
        as_graph ? emit(ctx, make_document(underlying_comparability_graph(p))) : emit(ctx, make_document(p));
    };
    if (family == "crown") {
        need_params(params, 1, family);
        emit_poset(crown(to_int(params[0], "n")));
    } else if (family == "multipartite") {
        need_params(params, 2, family);
        emit_pair(complete_multipartite(to_int(params[0], "k"), to_int(params[1], "q")));
    } else if (family == "kn-minus-matching") {
        need_params(params, 1, family);
        emit_pair(kn_minus_matching(to_int(params[0], "n")));
    } else if (family == "hypercube") {
        need_params(params, 1, family);
        emit(ctx, make_document(hypercube(to_int(params[0], "d"))));
    } else if (family == "random-height2") {
        need_params(params, 2, family);
        emit_poset(random_height2(to_int(params[0], "n"), to_double(params[1], "p"), Seed{seed}));
    } else if (family == "random-graph") {
        need_params(params, 2, family);
        emit(ctx, make_document(random_graph(to_int(params[0], "n"), to_double(params[1], "p"), Seed{seed})));
    } else if (family == "random-order") {
        need_params(params, 2, family);
        emit_poset(random_order(to_int(params[0], "n"), to_double(params[1], "p"), Seed{seed}));
    } else {
        return usage_error(ctx, fmt::format("unknown family '{}'", family));
    }
    return kExitOk;
}

// ---------------------------------------------------------------- oracle

std::variant<Graph, Poset> graph_or_poset(const Document& d) {
    if (d.kind == DocKind::graph) return graph_from(d);
    if (d.kind == DocKind::poset) return poset_from(d);
    throw ParseError("kind", "expected a graph or poset document");
}

Graph as_graph(const std::variant<Graph, Poset>& x) {
    if (const auto* g = std::get_if<Graph>(&x)) return *g;
    return underlying_comparability_graph(std::get<Poset>(x));
}

Poset as_poset(const std::variant<Graph, Poset>& x) {
    if (const auto* p = std::get_if<Poset>(&x)) return *p;
    auto p = transitive_orientation(std::get<Graph>(x));
    if (!p) throw InvalidInput("graph is not a comparability graph, so it has no associated poset");
    return *p;
}

int cmd_oracle(Context& ctx, const std::string& which, const std::string& file) {
    const auto subject = graph_or_poset(load(ctx, file));
    json payload{{"oracle", which}, {"status", "ok"}};
    if (which == "boxicity") {
        auto r = brute_boxicity(as_graph(subject), ctx.limits, ctx.exec);
        payload["value"] = r.boxicity;
        payload["witness"] = make_document(r.witness).to_json();
    } else if (which == "dimension") {
        auto r = brute_dimension(as_poset(subject), ctx.limits, ctx.exec);
        payload["value"] = r.dimension;
        payload["witness"] = make_document(r.witness).to_json();
    } else if (which == "chromatic") {
        auto c = brute_coloring(as_graph(subject), ctx.limits);
        payload["value"] = c.max_color();
        payload["witness"] = {{"coloring", c.color}};
    } else {
        return usage_error(ctx, fmt::format("unknown oracle '{}'", which));
    }
    emit(ctx, report(std::move(payload)));
    return kExitOk;
}

// ---------------------------------------------------------------- construct

Bipartition parts_for(const Graph& h, const std::vector<int>& a_side) {
    if (a_side.empty()) {
        auto p = bipartition_of(h);
        if (!p) throw InvalidInput("graph is not bipartite");
        return *p;
    }
    Bipartition p;
    std::vector<bool> in_a(static_cast<std::size_t>(h.order()) + 1, false);
    for (int v : a_side) {
        if (v < 1 || v > h.order()) throw InvalidInput(fmt::format("--a-side vertex {} out of range", v));
        in_a[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= h.order(); ++v) (in_a[static_cast<std::size_t>(v)] ? p.a_side : p.b_side).push_back(v);
    return p;
}

int cmd_construct(Context& ctx, const std::string& name, const std::vector<std::string>& files,
                  const std::vector<int>& a_side) {
    auto need = [&](std::size_t n) {
        if (files.size() != n) throw InvalidInput(fmt::format("construct {} takes {} file(s)", name, n));
    };
    if (name == "realizer-from-box") {
        need(2);
        auto p = poset_from(load(ctx, files[0]));
        auto b = box_rep_from(load(ctx, files[1]));
        emit(ctx, make_document(realizer_from_box(p, b)));
    } else if (name == "box-from-realizer") {
        need(2);
        auto p = poset_from(load(ctx, files[0]));
        auto r = realizer_from(load(ctx, files[1]));
        emit(ctx, make_document(box_from_realizer(p, r, chain_length_coloring(p))));
    } else if (name == "double-cover") {
        need(1);
        emit(ctx, make_document(extended_double_cover(as_graph(graph_or_poset(load(ctx, files[0])))).first));
    } else if (name == "cover-box") {
        need(2);
        auto g = graph_from(load(ctx, files[0]));
        emit(ctx, make_document(cover_box_from_base(g, box_rep_from(load(ctx, files[1])))));
    } else if (name == "base-box") {
        need(2);
        auto g = graph_from(load(ctx, files[0]));
        emit(ctx, make_document(base_box_from_cover(g, box_rep_from(load(ctx, files[1])))));
    } else if (name == "bip-from-cobip" || name == "cobip-from-bip") {
        need(2);
        auto h = graph_from(load(ctx, files[0]));
        auto b = box_rep_from(load(ctx, files[1]));
        auto parts = parts_for(h, a_side);
        emit(ctx, make_document(name == "bip-from-cobip" ? bip_box_from_cobip(h, parts, b)
                                                         : cobip_box_from_bip(h, parts, b)));
    } else {
        return usage_error(ctx, fmt::format("unknown construction '{}'", name));
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(Context& ctx, const std::string& what, const std::vector<std::string>& files) {
    json payload{{"check", what}};
    bool ok = false;
    if (what == "box-rep") {
        if (files.empty() || files.size() > 2) throw InvalidInput("verify box-rep takes <box-rep> [<graph>]");
        auto b = box_rep_from(load(ctx, files[0]));
        std::optional<BoxDefect> defect;
        if (files.size() == 2) {
            auto g = as_graph(graph_or_poset(load(ctx, files[1])));
            if (g != b.target) defect = BoxDefect{"target graph differs from the given graph", std::nullopt, std::nullopt};
        }
        if (!defect) defect = box_representation_defect(b);
        ok = !defect;
        payload["members"] = b.reps.size();
        if (defect) {
            payload["reason"] = defect->reason;
            payload["counterexample"] = pair_json(defect->pair);
            payload["member"] = defect->member ? json(*defect->member + 1) : json(nullptr);
        }
    } else if (what == "realizer") {
        if (files.size() != 2) throw InvalidInput("verify realizer takes <realizer> <poset>");
        auto r = realizer_from(load(ctx, files[0]));
        auto p = poset_from(load(ctx, files[1]));
        if (r.front().size() != p.size()) throw InvalidInput("realizer and poset have different ground sets");
        auto bad = realizer_counterexample(p, r);
        ok = !bad;
        payload["members"] = r.size();
        if (bad) {
            const bool related = p.less(bad->first, bad->second);
            payload["reason"] = related ? "a member violates a relation of the poset"
                                        : "an incomparable pair is never reversed";
            payload["counterexample"] = pair_json(bad);
        }
    } else {
        return usage_error(ctx, fmt::format("unknown verification '{}'", what));
    }
    payload["status"] = ok ? "pass" : "fail";
    emit(ctx, report(std::move(payload)));
    return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- check-theorems

class CheckReport {
public:
    void value(const std::string& key, json v) { values_[key] = std::move(v); }
    void check(const std::string& name, bool ok, const std::string& detail) {
        checks_.push_back({{"name", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
        failed_ = failed_ || !ok;
    }
    void skip(const std::string& name, const std::string& why) {
        checks_.push_back({{"name", name}, {"status", "skipped"}, {"detail", why}});
    }
    bool failed() const { return failed_; }
    json payload() const {
        return {{"status", failed_ ? "fail" : "pass"}, {"values", values_}, {"checks", checks_}};
    }

private:
    json values_ = json::object();
    json checks_ = json::array();
    bool failed_ = false;
};

void poset_checks(Context& ctx, const Poset& p, CheckReport& rep) {
    const Graph gp = underlying_comparability_graph(p);
    const auto dim = brute_dimension(p, ctx.limits, ctx.exec);
    const auto box = brute_boxicity(gp, ctx.limits, ctx.exec);
    const auto coloring = chain_length_coloring(p);
    const int chi = coloring.max_color();
    rep.value("n", p.size());
    rep.value("dim", dim.dimension);
    rep.value("box", box.boxicity);
    rep.value("chi", chi);

    if (p.size() <= ctx.limits.chromatic) {
        const int brute = brute_chromatic(gp, ctx.limits);
        rep.check("chain-coloring-optimal", brute == chi, fmt::format("chain coloring {} colors, brute {}", chi, brute));
    }

    if (dim.dimension == 1) {
        rep.skip("dim-vs-box", "chain: dimension 1 has no box bound");
    } else {
        rep.check("dim-at-most-2box", dim.dimension <= 2 * box.boxicity,
                  fmt::format("dim {} <= 2*box {}", dim.dimension, 2 * box.boxicity));
        const auto r = realizer_from_box(p, box.witness);
        const bool valid = verify_realizer(p, r) && r.size() == 2 * box.witness.size();
        rep.check("realizer-from-box", valid, fmt::format("realizer of size {} from {} interval graphs", r.size(),
                                                              box.witness.size()));
        rep.value("two_box_bound", 2 * box.boxicity);
        rep.value("two_box_tight", dim.dimension == 2 * box.boxicity);
    }

    if (chi < 2) {
        rep.skip("box-vs-dim", "antichain: chromatic number 1");
    } else if (p.is_chain()) {
        rep.skip("box-vs-dim", "chain: complete comparability graph");
    } else {
        rep.check("box-at-most-chi-dim", box.boxicity <= (chi - 1) * dim.dimension,
                  fmt::format("box {} <= (chi-1)*dim {}", box.boxicity, (chi - 1) * dim.dimension));
        const auto b = box_from_realizer(p, dim.witness, coloring);
        const bool valid = verify_box_representation(b) &&
                           b.size() == static_cast<std::size_t>((chi - 1) * dim.dimension);
        rep.check("box-from-realizer", valid, fmt::format("{} interval graphs from a realizer of size {}", b.size(),
                                                              dim.witness.size()));
    }

    if (chi == 2) {
        rep.check("height2-sandwich", box.boxicity <= dim.dimension && dim.dimension <= 2 * box.boxicity,
                  fmt::format("box {} <= dim {} <= 2*box {}", box.boxicity, dim.dimension, 2 * box.boxicity));
    }
}

void graph_checks(Context& ctx, const Graph& g, CheckReport& rep, bool record_box) {
    const auto box = brute_boxicity(g, ctx.limits, ctx.exec);
    if (record_box) rep.value("box", box.boxicity);

    const int n = g.order();
    if (2 * n > ctx.limits.boxicity || n < 1) {
        rep.skip("double-cover", fmt::format("extended double cover has {} vertices (limit {})", 2 * n, ctx.limits.boxicity));
    } else {
        auto [gc, map] = extended_double_cover(g);
        const auto cover_box = brute_boxicity(gc, ctx.limits, ctx.exec);
        rep.value("box_cover", cover_box.boxicity);
        rep.check("double-cover-bounds",
                  box.boxicity <= 2 * cover_box.boxicity && cover_box.boxicity <= box.boxicity + 2,
                  fmt::format("box/2 = {}/2 <= box(Gc) = {} <= box+2 = {}", box.boxicity, cover_box.boxicity,
                              box.boxicity + 2));
        const auto up = cover_box_from_base(g, box.witness);
        rep.check("cover-box",
                  verify_box_representation(up) && up.size() <= static_cast<std::size_t>(box.boxicity + 2),
                  fmt::format("{} members for the cover", up.size()));
        const auto down = base_box_from_cover(g, cover_box.witness);
        rep.check("base-box",
                  verify_box_representation(down) && down.size() <= 2 * cover_box.witness.size(),
                  fmt::format("{} members back on the base graph", down.size()));
        if (2 * n <= ctx.limits.dimension) {
            const auto pc = natural_height2_poset(gc, map.parts());
            const int dc = brute_dimension(pc, ctx.limits, ctx.exec).dimension;
            rep.value("dim_cover_poset", dc);
            rep.check("cover-poset-sandwich", box.boxicity <= 2 * dc && dc <= 2 * box.boxicity + 4,
                      fmt::format("box/2 <= dim(Pc) = {} <= 2*box+4", dc));
        } else {
            rep.skip("cover-poset-sandwich", "cover poset exceeds the dimension limit");
        }
    }

    auto parts = bipartition_of(g);
    if (!parts || !is_partition_of(*parts, n)) {
        rep.skip("cobipartite", "graph is not bipartite with two non-empty sides");
        return;
    }
    const Graph hstar = associated_cobipartite(g, *parts);
    const auto star_box = brute_boxicity(hstar, ctx.limits, ctx.exec);
    rep.value("box_cobipartite", star_box.boxicity);
    if (star_box.boxicity <= 1) {
        rep.check("cobipartite-interval-case", box.boxicity <= 2, fmt::format("H* interval, box(H) = {}", box.boxicity));
    } else {
        rep.check("cobipartite-bounds",
                  star_box.boxicity <= 2 * box.boxicity && box.boxicity <= star_box.boxicity,
                  fmt::format("box(H*)/2 <= box(H) = {} <= box(H*) = {}", box.boxicity, star_box.boxicity));
    }
    const auto down = bip_box_from_cobip(g, *parts, star_box.witness);
    rep.check("bip-from-cobip",
              verify_box_representation(down) &&
                  down.size() == std::max<std::size_t>(2, star_box.witness.size()),
              fmt::format("{} members for H", down.size()));
    const auto up = cobip_box_from_bip(g, *parts, box.witness);
    rep.check("cobip-from-bip",
              verify_box_representation(up) && up.size() == 2 * box.witness.size(),
              fmt::format("{} members for H*", up.size()));
}

int cmd_check_theorems(Context& ctx, const std::string& file) {
    const auto subject = graph_or_poset(load(ctx, file));
    CheckReport rep;
    if (const auto* p = std::get_if<Poset>(&subject)) {
        poset_checks(ctx, *p, rep);
        graph_checks(ctx, underlying_comparability_graph(*p), rep, false);
    } else {
        const auto& g = std::get<Graph>(subject);
        if (auto p = transitive_orientation(g)) {
            poset_checks(ctx, *p, rep);
            graph_checks(ctx, g, rep, false);
        } else {
            rep.skip("poset-checks", "graph is not a comparability graph");
            graph_checks(ctx, g, rep, true);
        }
    }
    emit(ctx, report(rep.payload()));
    return rep.failed() ? kExitVerificationFailed : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out, err, {}, Exec::parallel};

    CLI::App app{"Boxicity and poset dimension: oracles, constructions and verifiers", "boxdim"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<int> limit;
    bool serial = false;
    app.add_option("--limit", limit, "Override the oracle size guards")->check(CLI::PositiveNumber);
    app.add_flag("--serial", serial, "Use the serial reference kernels");

    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    bool emit_graph = false;
    auto* gen = app.add_subcommand("generate", "Generate an instance document");
    gen->add_option("family", family, "crown|multipartite|kn-minus-matching|hypercube|random-height2|random-graph|random-order")
        ->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--seed", seed, "Seed for random families");
    gen->add_flag("--graph", emit_graph, "Emit the comparability graph instead of the poset");

    std::string which;
    std::string file;
    auto* oracle = app.add_subcommand("oracle", "Run an exact oracle");
    oracle->add_option("which", which, "boxicity|dimension|chromatic")->required();
    oracle->add_option("file", file, "Input document or -")->required();

    std::string construction;
    std::vector<std::string> files;
    std::vector<int> a_side;
    auto* construct = app.add_subcommand("construct", "Apply a construction");
    construct->add_option("name", construction, "realizer-from-box|box-from-realizer|double-cover|cover-box|base-box|bip-from-cobip|cobip-from-bip")
        ->required();
    construct->add_option("files", files, "Input documents")->required();
    construct->add_option("--a-side", a_side, "Vertices of the A side (default: BFS bipartition)")->delimiter(',');

    std::string what;
    std::vector<std::string> verify_files;
    auto* verify = app.add_subcommand("verify", "Verify a certificate");
    verify->add_option("what", what, "box-rep|realizer")->required();
    verify->add_option("files", verify_files, "Input documents")->required();

    std::string theorem_file;
    auto* theorems = app.add_subcommand("check-theorems", "Check every applicable inequality on an instance");
    theorems->add_option("file", theorem_file, "Graph or poset document, or -")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << app.help();
        return usage_error(ctx, e.what());
    }

    if (limit) ctx.limits = OracleLimits::uniform(*limit);
    if (serial) ctx.exec = Exec::serial;

    try {
        if (gen->parsed()) return cmd_generate(ctx, family, params, seed, emit_graph);
        if (oracle->parsed()) return cmd_oracle(ctx, which, file);
        if (construct->parsed()) return cmd_construct(ctx, construction, files, a_side);
        if (verify->parsed()) return cmd_verify(ctx, what, verify_files);
        if (theorems->parsed()) return cmd_check_theorems(ctx, theorem_file);
    } catch (const OracleLimit& e) {
        emit(ctx, report({{"status", "oracle-limit"}, {"error", e.what()}}));
        err << "oracle limit: " << e.what() << "\n";
        return kExitOracleLimit;
    } catch (const ParseError& e) {
        return usage_error(ctx, e.what());
    } catch (const InvalidInput& e) {
        return usage_error(ctx, e.what());
    } catch (const InvariantViolation& e) {
        emit(ctx, report({{"status", "fail"}, {"error", e.what()}}));
        err << "invariant violation: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return usage_error(ctx, "no subcommand");
}

}  // namespace boxdim
