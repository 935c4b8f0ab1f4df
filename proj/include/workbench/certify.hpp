#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "workbench/burling.hpp"
#include "workbench/cbu.hpp"
#include "workbench/graph.hpp"

namespace wb {

/// One claim of the incomparability certificate. Every claim is either
/// machine-checked here or explicitly rests on a cited theorem; there are no
/// untagged claims.
struct CertClaim {
    std::string id;
    bool machine_checked = false;
    bool pass = false;          // meaningful when machine_checked
    std::string reference;      // set when resting on a cited theorem
    std::string details;
};

struct CertificateVerdict {
    std::vector<CertClaim> claims;
    bool overall = false;  // all machine-checked claims pass
};

struct CertifyOptions {
    std::optional<int> refute_dim;          // run the bounded non-representability search
    std::uint64_t search_budget = 200'000'000;
    int search_limit = 8;                   // max g2 size for the optional search
};

/// Machine-checks the two legs of the incomparability certificate:
/// g1 (graph + 2-D box family) must be a valid unidirectional-contact
/// representation of a triangle-free wheel; g2 (graph + frame family) must be
/// an axiom-clean frame representation. The steps that rest on cited theorems
/// are recorded as such.
CertificateVerdict certify_theorem1(const Graph& g1, const BoxFamily& g1_boxes,
                                    const Graph& g2, const FrameFamily& g2_frames,
                                    const CertifyOptions& opt = {});

std::string certificate_to_json(const CertificateVerdict& v);

}  // namespace wb
