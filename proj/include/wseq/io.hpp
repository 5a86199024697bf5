#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "wseq/common.hpp"
#include "wseq/sequence.hpp"
#include "wseq/weight_function.hpp"

namespace wseq {

// Deterministic JSON text: object keys sorted, doubles with 17 significant digits,
// non-finite doubles as "+inf" / "-inf" / null.
std::string dump_json(const json& j, int indent = 2);

json to_json(const WeightSequence& M);
json to_json(const WeightMatrix& M);
// {"kind", "family", "params", "t_grid", "values"}; grids only for tables.
json to_json(const WeightFunction& w);

// Accepts a serialized sequence or a family descriptor {"id", "params"}; catalog
// families get their generator back when the stored values match it.
WeightSequence sequence_from_json(const json& j, int J = 0);
WeightMatrix matrix_from_json(const json& j, const Config& cfg = default_config());
WeightFunction weight_from_json(const json& j, const Config& cfg = default_config());

json read_json_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

// Columns of equal length under a header row; 17 significant digits.
std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns);

}  // namespace wseq
