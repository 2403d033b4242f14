#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "ecclab/conjectures.hpp"
#include "ecclab/invariants.hpp"
#include "ecclab/rational.hpp"

namespace ecclab {

enum class OutputFormat { json, csv, text };
OutputFormat parse_format(std::string_view text);

/// One row of the closed-form vs BFS table.
struct FormulaRow {
    std::string family;  // canonical family text, e.g. "broom n=8 delta=3"
    int n = 0;
    Rational closed_form;
    Rational bfs;
    bool agree() const { return closed_form == bfs; }
};

// Objects use std::map ordering, so keys are sorted. A rational field `x`
// is written as "x": "p/q" next to "x_float": double. A floating-only
// quantity has "x": null.
nlohmann::json to_json(const InvariantReport& r, const std::string& graph6);
nlohmann::json to_json(const ScanReport& r);
nlohmann::json to_json(std::span<const A100Row> rows);
nlohmann::json to_json(std::span<const FormulaRow> rows);

std::string render(const InvariantReport& r, const std::string& graph6, OutputFormat f);
std::string render(const ScanReport& r, OutputFormat f);
std::string render(std::span<const A100Row> rows, OutputFormat f);
std::string render(std::span<const FormulaRow> rows, OutputFormat f);

}  // namespace ecclab
