#include "workbench/certify.hpp"

#include <json.hpp>

namespace wb {

namespace {

CertClaim checked(std::string id, bool pass, std::string details) {
    CertClaim c;
    c.id = std::move(id);
    c.machine_checked = true;
    c.pass = pass;
    c.details = std::move(details);
    return c;
}

CertClaim cited(std::string id, std::string reference, std::string details) {
    CertClaim c;
    c.id = std::move(id);
    c.machine_checked = false;
    c.reference = std::move(reference);
    c.details = std::move(details);
    return c;
}

}  // namespace

CertificateVerdict certify_theorem1(const Graph& g1, const BoxFamily& g1_boxes,
                                    const Graph& g2, const FrameFamily& g2_frames,
                                    const CertifyOptions& opt) {
    CertificateVerdict verdict;

    // (1) the box family is a valid 2-D unidirectional-contact representation of g1
    {
        bool pass = false;
        std::string details;
        if (g1_boxes.dim != 2) {
            details = "box family is not 2-dimensional";
        } else {
            CbuReport rep = verify_cbu(g1_boxes);
            bool same = graphs_equal_by_id(rep.graph, g1);
            pass = rep.valid && same;
            details = rep.valid ? "all contacts lie in hyperplanes perpendicular to axis 0"
                                : "contact condition violated";
            if (!same) details += "; box intersection graph differs from the supplied graph";
        }
        verdict.claims.push_back(checked("g1-is-2cbu-representation", pass, details));
    }

    // (2) g1 is a wheel
    {
        auto w = wheel_witness(g1);
        std::string details = w ? "hub " + std::to_string(w->hub) + " with a spanning cycle of length " +
                                      std::to_string(w->cycle.size())
                                : "no wheel decomposition exists";
        verdict.claims.push_back(checked("g1-is-wheel", w.has_value(), std::move(details)));
    }

    // (3) both graphs are triangle-free
    {
        auto t1 = triangle_witness(g1);
        auto t2 = triangle_witness(g2);
        verdict.claims.push_back(checked("g1-triangle-free", !t1,
                                         t1 ? "triangle found" : "exhaustive scan found no triangle"));
        verdict.claims.push_back(checked("g2-triangle-free", !t2,
                                         t2 ? "triangle found" : "exhaustive scan found no triangle"));
    }

    // (4) the frame family is an axiom-clean representation of g2
    {
        AxiomReport rep = verify_burling_axioms(g2_frames);
        auto probe_violations = verify_probes(g2_frames);
        bool same = graphs_equal_by_id(frame_graph(g2_frames), g2);
        bool pass = rep.pass() && probe_violations.empty() && same;
        std::string details;
        if (!rep.pass()) details = std::to_string(rep.violations.size()) + " axiom violation(s)";
        else if (!probe_violations.empty()) details = "probe records are inconsistent";
        else if (!same) details = "frame intersection graph differs from the supplied graph";
        else details = "axioms hold and the intersection graph matches";
        verdict.claims.push_back(checked("g2-is-burling-representation", pass, std::move(details)));
    }

    // (5) optional bounded refutation: no 2-D representation of g2 on the grid
    bool search_ran = false;
    if (opt.refute_dim) {
        if (g2.vertex_count() <= opt.search_limit) {
            SearchResult res = search_cbu(g2, *opt.refute_dim, opt.search_budget, opt.search_limit);
            search_ran = true;
            bool pass = res.status == SearchResult::Status::NoneComplete;
            std::string details;
            switch (res.status) {
                case SearchResult::Status::NoneComplete:
                    details = "grid search exhausted with no representation at dimension " +
                              std::to_string(*opt.refute_dim);
                    break;
                case SearchResult::Status::Representation:
                    details = "a representation exists at dimension " +
                              std::to_string(*opt.refute_dim) +
                              "; the supplied g2 cannot witness non-membership";
                    break;
                case SearchResult::Status::Unknown:
                    details = "search budget exhausted before the grid was covered";
                    break;
            }
            verdict.claims.push_back(
                checked("g2-no-representation-at-dim-" + std::to_string(*opt.refute_dim), pass,
                        std::move(details)));
        }
    }

    verdict.claims.push_back(cited("wheels-are-not-burling-graphs",
                                   "wheels are not Burling graphs",
                                   "applies to the wheel certified in g1-is-wheel"));
    if (!search_ran)
        verdict.claims.push_back(cited("g2-is-not-cbu",
                                       "the designated g2 graph is not a contact graph of boxes "
                                       "with unidirectional contacts for any dimension",
                                       "bounded search skipped; the claim rests on the cited result"));
    verdict.claims.push_back(cited("cbu-hierarchy-strict",
                                   "for every d >= 1, d-dimensional families realize a strict "
                                   "subclass of the (d+1)-dimensional ones",
                                   "lift_dim witnesses the inclusion direction"));

    verdict.overall = true;
    for (const auto& c : verdict.claims)
        if (c.machine_checked && !c.pass) verdict.overall = false;
    return verdict;
}

std::string certificate_to_json(const CertificateVerdict& v) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : v.claims) {
        nlohmann::json jc;
        jc["id"] = c.id;
        if (c.machine_checked) {
            jc["status"] = "machine_checked";
            jc["pass"] = c.pass;
        } else {
            jc["status"] = "cited_theorem";
            jc["reference"] = c.reference;
        }
        jc["details"] = c.details;
        claims.push_back(jc);
    }
    nlohmann::json doc{{"claims", claims}, {"overall", v.overall ? "pass" : "fail"}};
    return doc.dump(2) + "\n";
}

}  // namespace wb
