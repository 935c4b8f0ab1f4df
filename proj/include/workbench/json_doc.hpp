#pragma once

#include <string>

#include "workbench/burling.hpp"
#include "workbench/cbu.hpp"
#include "workbench/coloring.hpp"
#include "workbench/graph.hpp"

namespace wb {

/// Canonical document format: UTF-8 JSON, sorted keys, two-space indent,
/// trailing newline, scalars as "p/q" strings ("p" when q = 1). Parsing
/// normalizes non-canonical scalar spellings; malformed documents throw
/// std::invalid_argument.

std::string box_family_to_json(const BoxFamily& b);
BoxFamily box_family_from_json(const std::string& text);

std::string frame_family_to_json(const FrameFamily& f);
FrameFamily frame_family_from_json(const std::string& text);

std::string specials_to_json(const BurlingLevel& lv);

std::string cbu_report_to_json(const CbuReport& rep);
std::string axiom_report_to_json(const AxiomReport& rep,
                                 const std::vector<AxiomViolation>& probe_violations);

std::string coloring_to_json(const Coloring& c);
std::string analysis_to_json(const AnalysisReport& rep);
std::string search_result_to_json(const SearchResult& res);

}  // namespace wb
