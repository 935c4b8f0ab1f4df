#include "workbench/json_doc.hpp"

#include <algorithm>

#include <json.hpp>

namespace wb {

using nlohmann::json;

namespace {

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json scalar(const Rational& r) { return r.str(); }

Rational parse_scalar(const json& j, const char* what) {
    if (!j.is_string())
        throw std::invalid_argument(std::string("document: ") + what + " must be a scalar string");
    return Rational::parse(j.get<std::string>());
}

json interval_json(const Interval& iv) { return json::array({scalar(iv.lo), scalar(iv.hi)}); }

Interval parse_interval(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(std::string("document: ") + what + " must be [lo, hi]");
    return Interval(parse_scalar(j[0], what), parse_scalar(j[1], what));
}

json rect_json(const Rect& r) {
    return json{{"x", interval_json(r.x)}, {"y", interval_json(r.y)}};
}

Rect parse_rect(const json& j, const char* what) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw std::invalid_argument(std::string("document: ") + what + " must have x and y");
    return Rect(parse_interval(j.at("x"), what), parse_interval(j.at("y"), what));
}

int parse_id(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string("document: ") + what + " id must be an integer");
    return j.get<int>();
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"edges", edges}, {"n", g.vertex_count()}};
}

}  // namespace

std::string box_family_to_json(const BoxFamily& b) {
    json boxes = json::array();
    for (const auto& box : b.boxes) {
        json ivs = json::array();
        for (const auto& iv : box.intervals) ivs.push_back(interval_json(iv));
        boxes.push_back(json{{"id", box.id}, {"intervals", ivs}});
    }
    return dump_canonical(json{{"boxes", boxes}, {"dim", b.dim}});
}

BoxFamily box_family_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("boxes"))
        throw std::invalid_argument("document: box family needs dim and boxes");
    BoxFamily fam;
    fam.dim = parse_id(j.at("dim"), "dim");
    for (const auto& jb : j.at("boxes")) {
        BoxD box;
        box.id = parse_id(jb.at("id"), "box");
        if (!jb.contains("intervals") || !jb.at("intervals").is_array())
            throw std::invalid_argument("document: box needs an intervals array");
        for (const auto& ji : jb.at("intervals"))
            box.intervals.push_back(parse_interval(ji, "box interval"));
        if (static_cast<int>(box.intervals.size()) != fam.dim)
            throw std::invalid_argument("document: box interval count differs from dim");
        fam.boxes.push_back(std::move(box));
    }
    return fam;
}

std::string frame_family_to_json(const FrameFamily& f) {
    json frames = json::array();
    for (const auto& fr : f.frames)
        frames.push_back(json{{"id", fr.id},
                              {"x", interval_json(fr.rect.x)},
                              {"y", interval_json(fr.rect.y)}});
    json doc{{"frames", frames}};
    if (!f.probes.empty()) {
        json probes = json::array();
        for (const auto& p : f.probes)
            probes.push_back(json{{"id", p.id},
                                  {"members", p.members},
                                  {"region", rect_json(p.region)}});
        doc["probes"] = probes;
    }
    return dump_canonical(doc);
}

FrameFamily frame_family_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("frames"))
        throw std::invalid_argument("document: frame family needs frames");
    FrameFamily fam;
    for (const auto& jf : j.at("frames")) {
        Frame fr;
        fr.id = parse_id(jf.at("id"), "frame");
        fr.rect = Rect(parse_interval(jf.at("x"), "frame x"),
                       parse_interval(jf.at("y"), "frame y"));
        fam.frames.push_back(std::move(fr));
    }
    {
        std::vector<int> ids = frame_id_order(fam);
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw std::invalid_argument("document: duplicate frame id");
    }
    if (j.contains("probes")) {
        for (const auto& jp : j.at("probes")) {
            ProbeRecord p;
            p.id = parse_id(jp.at("id"), "probe");
            p.region = parse_rect(jp.at("region"), "probe region");
            if (!jp.contains("members") || !jp.at("members").is_array())
                throw std::invalid_argument("document: probe needs members");
            for (const auto& m : jp.at("members")) p.members.push_back(parse_id(m, "member"));
            std::sort(p.members.begin(), p.members.end());
            fam.probes.push_back(std::move(p));
        }
    }
    return fam;
}

std::string specials_to_json(const BurlingLevel& lv) {
    json specials = json::array();
    for (const auto& s : lv.specials) specials.push_back(s);
    return dump_canonical(json{{"level", lv.level},
                               {"n", lv.graph.vertex_count()},
                               {"specials", specials}});
}

std::string cbu_report_to_json(const CbuReport& rep) {
    json violations = json::array();
    for (const auto& v : rep.violations)
        violations.push_back(json{{"axis0", json::array({scalar(v.axis0.lo), scalar(v.axis0.hi)})},
                                  {"ids", json::array({v.id_a, v.id_b})},
                                  {"kind", "segment-overlap"}});
    return dump_canonical(json{{"graph", graph_json(rep.graph)},
                               {"valid", rep.valid},
                               {"violations", violations}});
}

std::string axiom_report_to_json(const AxiomReport& rep,
                                 const std::vector<AxiomViolation>& probe_violations) {
    json violations = json::array();
    auto emit = [&](const AxiomViolation& v) {
        violations.push_back(json{{"axiom", v.axiom}, {"frames", v.frames}, {"reason", v.reason}});
    };
    for (const auto& v : rep.violations) emit(v);
    for (const auto& v : probe_violations) emit(v);
    return dump_canonical(json{{"a1", rep.a1_ok},
                               {"a2", rep.a2_ok},
                               {"a3", rep.a3_ok},
                               {"pass", rep.pass() && probe_violations.empty()},
                               {"triangle_free", rep.triangle_free},
                               {"violations", violations}});
}

std::string coloring_to_json(const Coloring& c) {
    json assignment = json::object();
    for (int v = 0; v < static_cast<int>(c.assignment.size()); ++v)
        assignment[std::to_string(v)] = c.assignment[v];
    return dump_canonical(json{{"assignment", assignment}, {"colors_used", c.colors_used}});
}

namespace {

json chromatic_json(const ChromaticResult& chi) {
    json out;
    if (chi.exact) {
        out["status"] = "exact";
        out["value"] = chi.upper;
        out["refutation_nodes"] = chi.refutation_nodes;
    } else {
        out["status"] = "bracket";
        out["lower"] = chi.lower;
        out["upper"] = chi.upper;
    }
    if (chi.coloring) {
        json assignment = json::object();
        for (int v = 0; v < static_cast<int>(chi.coloring->assignment.size()); ++v)
            assignment[std::to_string(v)] = chi.coloring->assignment[v];
        out["coloring"] = assignment;
    }
    return out;
}

}  // namespace

std::string analysis_to_json(const AnalysisReport& rep) {
    json doc{{"chi", chromatic_json(rep.chromatic)},
             {"clique", json{{"size", rep.clique.size}, {"witness", rep.clique.witness}}},
             {"m", rep.m},
             {"n", rep.n},
             {"triangle_free", rep.triangle_free}};
    if (rep.wheel)
        doc["wheel"] = json{{"cycle", rep.wheel->cycle}, {"hub", rep.wheel->hub}};
    else
        doc["wheel"] = nullptr;
    return dump_canonical(doc);
}

std::string search_result_to_json(const SearchResult& res) {
    json doc;
    doc["nodes"] = res.nodes;
    switch (res.status) {
        case SearchResult::Status::Representation: doc["status"] = "representation"; break;
        case SearchResult::Status::NoneComplete: doc["status"] = "none_complete"; break;
        case SearchResult::Status::Unknown: doc["status"] = "unknown"; break;
    }
    if (res.family) {
        json boxes = json::array();
        for (const auto& box : res.family->boxes) {
            json ivs = json::array();
            for (const auto& iv : box.intervals) ivs.push_back(interval_json(iv));
            boxes.push_back(json{{"id", box.id}, {"intervals", ivs}});
        }
        doc["family"] = json{{"boxes", boxes}, {"dim", res.family->dim}};
    }
    return dump_canonical(doc);
}

}  // namespace wb
