#include "amoeba/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "amoeba/chains.hpp"
#include "amoeba/classify.hpp"
#include "amoeba/constructions.hpp"
#include "amoeba/formats.hpp"
#include "amoeba/report_json.hpp"
#include "amoeba/stabilizer_chain.hpp"

namespace amoeba {

namespace {

int max_instance_size() {
    if (const char* env = std::getenv("AMOEBA_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 25;
}

void guard_size(const Graph& g) {
    const int cap = max_instance_size();
    if (g.order() > cap)
        throw Error("graph has " + std::to_string(g.order()) +
                    " vertices; cap is " + std::to_string(cap) + " (set AMOEBA_MAX_N to raise)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error("cannot read " + what + " from \"" + s + "\"");
    }
}

} // namespace

Graph construct_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error("construction spec needs the form kind:args");
    const std::string kind = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    if (kind == "path") return path_graph(parse_int(args, "path order"));
    if (kind == "cycle") return cycle_graph(parse_int(args, "cycle order"));
    if (kind == "complete") return complete_graph(parse_int(args, "complete order"));
    if (kind == "star") return star_graph(parse_int(args, "star order"));
    if (kind == "hn") return h_graph_direct(parse_int(args, "order"));
    if (kind == "fib") return fibonacci_tree(parse_int(args, "tree index")).graph;
    if (kind == "compose") {
        auto parts = split(args, ',');
        if (parts.size() != 3 && parts.size() != 4)
            throw Error("compose spec: compose:GFILE,HFILE,ROOT[,i1-i2-...]");
        Graph g = parse_graph_auto(read_file(parts[0]));
        Graph h = parse_graph_auto(read_file(parts[1]));
        RootedGraph rooted(h, parse_int(parts[2], "root"));
        if (parts.size() == 3) return compose_all(g, rooted).graph;
        std::vector<int> attach;
        for (const auto& tok : split(parts[3], '-')) attach.push_back(parse_int(tok, "attach vertex"));
        return compose_graphs(g, rooted, attach).graph;
    }
    if (kind == "power") {
        auto parts = split(args, ',');
        if (parts.size() != 3) throw Error("power spec: power:HFILE,ROOT,K");
        Graph h = parse_graph_auto(read_file(parts[0]));
        RootedGraph rooted(h, parse_int(parts[1], "root"));
        return power_graph(rooted, parse_int(parts[2], "exponent"));
    }
    throw Error("unknown construction kind \"" + kind + "\"");
}

RootedGraph rooted_construct_from_spec(const std::string& spec, int root) {
    return RootedGraph(construct_from_spec(spec), root);
}

namespace {

struct GraphInput {
    std::string file;
    std::string construct;

    Graph load(std::istream& in) const {
        Graph g;
        if (!construct.empty()) {
            g = construct_from_spec(construct);
        } else if (!file.empty()) {
            g = parse_graph_auto(read_file(file));
        } else {
            std::ostringstream buf;
            buf << in.rdbuf();
            if (buf.str().empty()) throw Error("no input graph (use --input, --construct, or stdin)");
            g = parse_graph_auto(buf.str());
        }
        guard_size(g);
        return g;
    }
};

void add_graph_input(CLI::App* cmd, GraphInput& input) {
    auto* f = cmd->add_option("--input", input.file, "graph file (graph6 or edge list)");
    auto* c = cmd->add_option("--construct", input.construct, "inline construction spec");
    f->excludes(c);
}

std::string orbits_text(const std::vector<std::vector<int>>& orbits) {
    std::string s;
    for (const auto& orbit : orbits) {
        s += '{';
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(orbit[i]);
        }
        s += "} ";
    }
    if (!s.empty()) s.pop_back();
    return s;
}

int cmd_classify(const GraphInput& input, bool json, int root, bool oracle, std::istream& in,
                 std::ostream& out) {
    Graph g = input.load(in);
    ClassifyOptions options;
    options.cross_check_global = oracle;
    ClassificationReport report = classify(g, options);

    bool rooted = root > 0;
    bool stem = false, dbl_global = false, dbl_local = false;
    std::vector<int> similar;
    if (rooted) {
        RootedGraph rg(g, root);
        similar = root_similar_vertices(rg);
        stem = g.order() >= 2 && is_stem_transitive(rg);
        dbl_global = is_double_rooted(rg, false);
        dbl_local = is_double_rooted(rg, true);
    }

    if (oracle) {
        if (g.order() > 7) throw Error("--oracle cross-checks are limited to 7 vertices");
        auto summary = copy_graph_bfs(g);
        if (summary.all_reachable != report.is_local)
            throw InconsistencyError("copy reachability disagrees with the group verdict");
        auto closure = group_elements_naive(report.sg_generators, report.n, 1u << 20);
        if (mpz_class(static_cast<unsigned long>(closure.size())) != report.sg_order)
            throw InconsistencyError("naive closure size disagrees with the chain order");
    }

    if (json) {
        auto j = report_to_json(report);
        if (rooted) {
            j["root"] = root;
            j["root_similar"] = similar;
            j["is_stem_transitive"] = stem;
            j["is_double_rooted_global"] = dbl_global;
            j["is_double_rooted_local"] = dbl_local;
        }
        if (oracle) j["oracle_checked"] = true;
        out << j.dump() << '\n';
        return 0;
    }
    out << "n: " << report.n << "  e: " << report.e << '\n';
    out << "aut order: " << report.aut_order.get_str() << '\n';
    out << "group order: " << report.sg_order.get_str() << '\n';
    out << "local amoeba: " << (report.is_local ? "yes" : "no") << '\n';
    out << "global amoeba: " << (report.is_global ? "yes" : "no") << " (" << report.global_method
        << ")\n";
    out << "orbits: " << orbits_text(report.orbits) << '\n';
    out << "degree-1 vertices:";
    for (int v : report.degree_one_indices) out << ' ' << v;
    out << '\n';
    out << "replacements: " << report.replacement_count << '\n';
    if (rooted) {
        out << "root: " << root << '\n';
        out << "root-similar vertices:";
        for (int v : similar) out << ' ' << v;
        out << '\n';
        out << "stem-transitive: " << (stem ? "yes" : "no") << '\n';
        out << "double-rooted global amoeba: " << (dbl_global ? "yes" : "no") << '\n';
        out << "double-rooted local amoeba: " << (dbl_local ? "yes" : "no") << '\n';
    }
    if (oracle) out << "oracle cross-checks: passed\n";
    return 0;
}

int cmd_replacements(const GraphInput& input, bool json, std::istream& in, std::ostream& out) {
    Graph g = input.load(in);
    GeneratorAtlas atlas = generator_atlas(g);
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = g.order();
        j["count"] = atlas.replacements.size();
        nlohmann::ordered_json swaps = nlohmann::ordered_json::array();
        for (std::size_t i = 1; i < atlas.replacements.size(); ++i) {
            const auto& r = atlas.replacements[i];
            nlohmann::ordered_json s;
            s["remove"] = {r.removed.first, r.removed.second};
            s["add"] = {r.added.first, r.added.second};
            s["witness"] = atlas.witnesses[i - 1].images();
            swaps.push_back(std::move(s));
        }
        j["swaps"] = std::move(swaps);
        nlohmann::ordered_json auts = nlohmann::ordered_json::array();
        for (const auto& a : atlas.aut_gens) auts.push_back(a.images());
        j["aut_generators"] = std::move(auts);
        out << j.dump() << '\n';
        return 0;
    }
    for (const auto& r : atlas.replacements) out << r.to_string() << '\n';
    return 0;
}

int cmd_construct(const std::string& spec, const std::string& format, std::ostream& out) {
    if (spec.empty()) throw Error("construct needs a spec (positional or --construct)");
    Graph g = construct_from_spec(spec);
    guard_size(g);
    if (format == "edgelist")
        out << to_edge_list(g);
    else
        out << to_graph6(g) << '\n';
    return 0;
}

int cmd_morph(const GraphInput& input, const std::string& target_text, int slack, bool json,
              std::istream& in, std::ostream& out) {
    Graph g = input.load(in);
    if (target_text.empty()) throw Error("morph needs --target");
    Permutation target = parse_permutation(target_text, g.order() + slack);
    MorphResult result = morph(g, target, slack);
    auto validation = validate_chain(result.chain);
    if (!validation.ok)
        throw InconsistencyError("produced chain failed validation at step " +
                                 std::to_string(validation.failed_step) + ": " + validation.reason);
    if (json) {
        out << chain_to_json(result.chain).dump() << '\n';
        return 0;
    }
    for (std::size_t s = 0; s < result.chain.steps.size(); ++s) {
        const auto& step = result.chain.steps[s];
        out << "step " << (s + 1) << ": remove {" << step.removed->first << ','
            << step.removed->second << "} add {" << step.added->first << ',' << step.added->second
            << "}\n";
    }
    out << "reached " << target.to_string() << " in " << result.chain.steps.size() << " steps\n";
    return 0;
}

int cmd_replay(const std::string& file, std::ostream& out) {
    if (file.empty()) throw Error("replay needs --input CHAINFILE");
    auto j = nlohmann::ordered_json::parse(read_file(file));
    MorphChain chain = chain_from_json(j);
    auto validation = validate_chain(chain);
    if (!validation.ok) {
        throw Error("chain invalid at step " + std::to_string(validation.failed_step) + ": " +
                    validation.reason);
    }
    out << "chain valid (" << chain.steps.size() << " steps)\n";
    return 0;
}

int cmd_census(const GraphInput& input, std::istream& in, std::ostream& out) {
    std::istringstream file_stream;
    std::istream* src = &in;
    if (!input.file.empty()) {
        file_stream.str(read_file(input.file));
        src = &file_stream;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(*src, line)) lines.push_back(line);

    std::vector<std::string> outputs(lines.size());
    std::atomic<bool> any_error{false};
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= lines.size()) return;
            try {
                Graph g = parse_graph6(lines[i]);
                guard_size(g);
                auto j = report_to_json(classify(g));
                outputs[i] = j.dump();
            } catch (const std::exception& ex) {
                nlohmann::ordered_json j;
                j["error"] = ex.what();
                outputs[i] = j.dump();
                any_error = true;
            }
        }
    };
    unsigned nthreads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                        static_cast<unsigned>(lines.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& s : outputs) out << s << '\n';
    return any_error ? 1 : 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"amoeba status of graphs via feasible edge-replacements"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "JSON output");

    GraphInput input;
    int root = 0;
    bool oracle = false;
    auto* classify_cmd = app.add_subcommand("classify", "amoeba verdicts for one graph");
    add_graph_input(classify_cmd, input);
    classify_cmd->add_option("--root", root, "also report rooted verdicts for this vertex");
    classify_cmd->add_flag("--oracle", oracle, "brute-force cross-checks (needs n <= 7)");

    GraphInput repl_input;
    auto* repl_cmd = app.add_subcommand("replacements", "list feasible edge-replacements");
    add_graph_input(repl_cmd, repl_input);

    std::string construct_spec;
    std::string format = "graph6";
    auto* construct_cmd = app.add_subcommand("construct", "emit a constructed graph");
    construct_cmd->add_option("spec", construct_spec, "construction spec (kind:args)");
    construct_cmd->add_option("--construct", construct_spec, "construction spec (kind:args)");
    construct_cmd->add_option("--format", format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    GraphInput morph_input;
    std::string target_text;
    int slack = 0;
    auto* morph_cmd = app.add_subcommand("morph", "chain of replacements to a target copy");
    add_graph_input(morph_cmd, morph_input);
    morph_cmd->add_option("--target", target_text, "target permutation (one-line or cycles)");
    morph_cmd->add_option("--slack", slack, "extra isolated vertices to move through");

    std::string replay_file;
    auto* replay_cmd = app.add_subcommand("replay", "re-validate a stored chain file");
    replay_cmd->add_option("--input", replay_file, "chain JSON file");

    GraphInput census_input;
    auto* census_cmd = app.add_subcommand("census", "one JSON report per graph6 input line");
    census_cmd->add_option("--input", census_input.file, "file of graph6 lines (default stdin)");

    for (CLI::App* sub : {classify_cmd, repl_cmd, construct_cmd, morph_cmd, replay_cmd, census_cmd})
        sub->fallthrough();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(input, json, root, oracle, in, out);
        if (repl_cmd->parsed()) return cmd_replacements(repl_input, json, in, out);
        if (construct_cmd->parsed()) return cmd_construct(construct_spec, format, out);
        if (morph_cmd->parsed()) return cmd_morph(morph_input, target_text, slack, json, in, out);
        if (replay_cmd->parsed()) return cmd_replay(replay_file, out);
        if (census_cmd->parsed()) return cmd_census(census_input, in, out);
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace amoeba
