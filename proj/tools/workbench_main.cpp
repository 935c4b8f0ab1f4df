#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "workbench/certify.hpp"
#include "workbench/graph_io.hpp"
#include "workbench/json_doc.hpp"
#include "workbench/render.hpp"

#include <json.hpp>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitMalformed = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << data;
}

void emit(const std::optional<std::string>& out_path, const std::string& data) {
    if (out_path) spill(*out_path, data);
    else std::cout << data;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{' || c == '[';
    }
    return false;
}

wb::Graph load_graph(const std::string& path) { return wb::parse_graph_auto(slurp(path)); }

std::uint64_t default_budget() {
    if (const char* env = std::getenv("WORKBENCH_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 50'000'000ULL;
}

struct Config {
    std::uint64_t budget = default_budget();
    std::uint64_t search_budget = 200'000'000ULL;
    int search_limit = 8;
    int level_max = 5;
    int realize_max = 3;
};

Config load_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    auto doc = nlohmann::json::parse(slurp(path));
    if (doc.contains("budget")) cfg.budget = doc["budget"].get<std::uint64_t>();
    if (doc.contains("search_budget")) cfg.search_budget = doc["search_budget"].get<std::uint64_t>();
    if (doc.contains("search_limit")) cfg.search_limit = doc["search_limit"].get<int>();
    if (doc.contains("level_max")) cfg.level_max = doc["level_max"].get<int>();
    if (doc.contains("realize_max")) cfg.realize_max = doc["realize_max"].get<int>();
    return cfg;
}

int run(int argc, char** argv) {
    CLI::App app{"workbench for frame and box intersection-graph classes"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON document with flag defaults");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a construction level");
    std::string gen_kind;
    int gen_level = 1;
    bool gen_frames = false;
    std::string gen_prefix;
    std::string gen_format = "g6";
    gen->add_option("kind", gen_kind, "what to generate (burling)")->required();
    gen->add_option("--level", gen_level, "construction level")->required();
    gen->add_flag("--frames", gen_frames, "also emit the frame realization");
    gen->add_option("-o,--output", gen_prefix, "output file prefix (default burling<level>)");
    gen->add_option("--format", gen_format, "graph format: g6 or edges")
        ->check(CLI::IsMember({"g6", "edges"}));

    // verify
    auto* verify = app.add_subcommand("verify", "verify a family document");
    std::string verify_kind, verify_file;
    std::optional<std::string> verify_out;
    verify->add_option("kind", verify_kind, "burling or cbu")->required();
    verify->add_option("file", verify_file, "family document")->required();
    verify->add_option("-o,--output", verify_out, "write the report here instead of stdout");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "exact chromatic/clique analysis of a graph");
    std::string analyze_file;
    std::optional<std::string> analyze_out;
    std::optional<std::uint64_t> analyze_budget;
    std::optional<int> analyze_k;
    analyze->add_option("file", analyze_file, "graph file (graph6 or edge list)")->required();
    analyze->add_option("--budget", analyze_budget, "decision-node budget");
    analyze->add_option("--k", analyze_k, "only decide k-colorability");
    analyze->add_option("-o,--output", analyze_out, "output path");

    // search
    auto* search = app.add_subcommand("search", "search for a box representation");
    std::string search_kind, search_file;
    int search_dim = 2;
    std::optional<std::uint64_t> search_budget;
    std::optional<std::string> search_out;
    search->add_option("kind", search_kind, "cbu")->required();
    search->add_option("file", search_file, "graph file")->required();
    search->add_option("--dim", search_dim, "box dimension")->required();
    search->add_option("--budget", search_budget, "placement budget");
    search->add_option("-o,--output", search_out, "output path");

    // lift
    auto* lift = app.add_subcommand("lift", "lift a box family one dimension up");
    std::string lift_file;
    std::optional<std::string> lift_out;
    lift->add_option("file", lift_file, "box family document")->required();
    lift->add_option("-o,--output", lift_out, "output path");

    // certify
    auto* certify = app.add_subcommand("certify", "run the incomparability certificate pipeline");
    std::string certify_kind;
    std::string g1_graph_path, g1_boxes_path, g2_graph_path, g2_frames_path;
    std::optional<int> refute_dim;
    std::optional<std::string> certify_out;
    certify->add_option("kind", certify_kind, "theorem1")->required();
    certify->add_option("--g1-graph", g1_graph_path)->required();
    certify->add_option("--g1-boxes", g1_boxes_path)->required();
    certify->add_option("--g2-graph", g2_graph_path)->required();
    certify->add_option("--g2-frames", g2_frames_path)->required();
    certify->add_option("--refute-dim", refute_dim, "attempt the bounded non-representability search");
    certify->add_option("-o,--output", certify_out, "output path");

    // render
    auto* render = app.add_subcommand("render", "render a 2-D family as SVG or a graph as DOT");
    std::string render_file, render_out;
    render->add_option("file", render_file, "family document or graph file")->required();
    render->add_option("-o,--output", render_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    }
    Config cfg = load_config(config_path);

    if (gen->parsed()) {
        if (gen_kind != "burling") throw std::invalid_argument("gen: unknown kind '" + gen_kind + "'");
        wb::BurlingLevel lv = wb::burling_abstract(gen_level, cfg.level_max);
        std::string prefix = gen_prefix.empty() ? "burling" + std::to_string(gen_level) : gen_prefix;
        if (gen_format == "g6")
            spill(prefix + ".g6", wb::to_graph6(lv.graph) + "\n");
        else
            spill(prefix + ".edges", wb::to_edge_list(lv.graph));
        spill(prefix + ".specials.json", wb::specials_to_json(lv));
        if (gen_frames) {
            wb::FrameFamily fam = wb::realize_frames(gen_level, cfg.realize_max);
            spill(prefix + ".frames.json", wb::frame_family_to_json(fam));
        }
        return kExitPass;
    }

    if (verify->parsed()) {
        const std::string text = slurp(verify_file);
        if (verify_kind == "cbu") {
            wb::CbuReport rep = wb::verify_cbu(wb::box_family_from_json(text));
            emit(verify_out, wb::cbu_report_to_json(rep));
            return rep.valid ? kExitPass : kExitViolation;
        }
        if (verify_kind == "burling") {
            wb::FrameFamily fam = wb::frame_family_from_json(text);
            wb::AxiomReport rep = wb::verify_burling_axioms(fam);
            auto probe_violations = wb::verify_probes(fam);
            emit(verify_out, wb::axiom_report_to_json(rep, probe_violations));
            return rep.pass() && probe_violations.empty() ? kExitPass : kExitViolation;
        }
        throw std::invalid_argument("verify: unknown kind '" + verify_kind + "'");
    }

    if (analyze->parsed()) {
        wb::Graph g = load_graph(analyze_file);
        std::uint64_t budget = analyze_budget.value_or(cfg.budget);
        if (analyze_k) {
            wb::ColorVerdict v = wb::k_colorable(g, *analyze_k, budget);
            nlohmann::json doc;
            doc["k"] = *analyze_k;
            doc["nodes"] = v.nodes_explored;
            doc["status"] = v.status == wb::ColorVerdict::Status::Yes ? "yes"
                            : v.status == wb::ColorVerdict::Status::NoComplete ? "no_complete"
                                                                               : "unknown";
            if (v.coloring) {
                nlohmann::json assignment = nlohmann::json::object();
                for (int u = 0; u < static_cast<int>(v.coloring->assignment.size()); ++u)
                    assignment[std::to_string(u)] = v.coloring->assignment[u];
                doc["coloring"] = assignment;
            }
            emit(analyze_out, doc.dump(2) + "\n");
            return kExitPass;
        }
        wb::AnalysisReport rep = wb::analyze_graph(g, budget);
        emit(analyze_out, wb::analysis_to_json(rep));
        return kExitPass;
    }

    if (search->parsed()) {
        if (search_kind != "cbu") throw std::invalid_argument("search: unknown kind '" + search_kind + "'");
        wb::Graph g = load_graph(search_file);
        wb::SearchResult res =
            wb::search_cbu(g, search_dim, search_budget.value_or(cfg.search_budget), cfg.search_limit);
        emit(search_out, wb::search_result_to_json(res));
        return res.status == wb::SearchResult::Status::Unknown ? kExitViolation : kExitPass;
    }

    if (lift->parsed()) {
        wb::BoxFamily fam = wb::box_family_from_json(slurp(lift_file));
        emit(lift_out, wb::box_family_to_json(wb::lift_dim(fam)));
        return kExitPass;
    }

    if (certify->parsed()) {
        if (certify_kind != "theorem1")
            throw std::invalid_argument("certify: unknown kind '" + certify_kind + "'");
        wb::Graph g1 = load_graph(g1_graph_path);
        wb::BoxFamily g1_boxes = wb::box_family_from_json(slurp(g1_boxes_path));
        wb::Graph g2 = load_graph(g2_graph_path);
        wb::FrameFamily g2_frames = wb::frame_family_from_json(slurp(g2_frames_path));
        wb::CertifyOptions opt;
        opt.refute_dim = refute_dim;
        opt.search_budget = cfg.search_budget;
        opt.search_limit = cfg.search_limit;
        wb::CertificateVerdict v = wb::certify_theorem1(g1, g1_boxes, g2, g2_frames, opt);
        emit(certify_out, wb::certificate_to_json(v));
        return v.overall ? kExitPass : kExitViolation;
    }

    if (render->parsed()) {
        std::string text = slurp(render_file);
        std::string out;
        if (looks_like_json(text)) {
            auto doc = nlohmann::json::parse(text);
            if (doc.contains("frames"))
                out = wb::frames_to_svg(wb::frame_family_from_json(text));
            else if (doc.contains("boxes"))
                out = wb::boxes_to_svg(wb::box_family_from_json(text));
            else
                throw std::invalid_argument("render: document is neither a frame nor a box family");
        } else {
            out = wb::to_dot(wb::parse_graph_auto(text));
        }
        spill(render_out, out);
        return kExitPass;
    }

    return kExitMalformed;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
}
