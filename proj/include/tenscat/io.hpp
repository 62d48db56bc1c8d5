#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "tenscat/category.hpp"
#include "tenscat/homdiag.hpp"
#include "tenscat/weightcalc.hpp"
#include "tenscat/young.hpp"

namespace tenscat {

// Text wire formats. Parsers throw ParseError carrying the offset of the
// offending character; each parser requires the whole input to be consumed.
//
//   diagram  "[3,1,1]", "[]"
//   label    "([2,1],[1])"
//   weight   "1:1,3:-1" with strictly increasing coordinates; "" is zero
//   shape    "p,q"

std::string format_diagram(const YoungDiagram& d);
YoungDiagram parse_diagram(const std::string& s);

std::string format_label(const SimpleLabel& label);
SimpleLabel parse_label(const std::string& s);

std::string format_weight(const Weight& w);
Weight parse_weight(const std::string& s);

std::string format_shape(TensorShape s);
TensorShape parse_shape(const std::string& s);

// "error: <msg>" plus the input line with a caret under the offset.
std::string caret_message(const ParseError& e);

// JSON payloads. Multisets become arrays of {"label","mult"} in label
// order; filtration layers become an array of one object per layer keyed
// by label text; weight maps are sorted by weight text form.
nlohmann::json multiset_to_json(const LabelMultiset& ms);
nlohmann::json layers_to_json(const FiltrationLayers& layers);
nlohmann::json expansion_to_json(const std::map<YoungDiagram, std::int64_t>& exp);
nlohmann::json weightmap_to_json(const WeightMultiplicities& wm);
nlohmann::json diagram_to_json(const ContractionDiagram& d);
ContractionDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json ext_table_to_json(const std::vector<ExtTableEntry>& entries);

// Text renderings used by the CLI's default output mode.
std::string multiset_to_text(const LabelMultiset& ms);
std::string layers_to_text(const FiltrationLayers& layers);
std::string expansion_to_text(const std::map<YoungDiagram, std::int64_t>& exp);
std::string weightmap_to_text(const WeightMultiplicities& wm);
std::string ext_table_to_text(const std::vector<ExtTableEntry>& entries);

}  // namespace tenscat
