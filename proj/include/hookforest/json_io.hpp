#ifndef HOOKFOREST_JSON_IO_HPP
#define HOOKFOREST_JSON_IO_HPP

#include <json.hpp>

#include "hookforest/bijection.hpp"
#include "hookforest/colored.hpp"
#include "hookforest/forest.hpp"
#include "hookforest/hookpoly.hpp"
#include "hookforest/polynomial.hpp"

namespace hookforest {

// All CLI/file JSON goes through these. Unbounded quantities travel as
// strings ("p/q" for rationals); small structural integers stay numbers.
using json = nlohmann::ordered_json;

json forest_to_json(const PlaneForest& forest);
PlaneForest forest_from_json(const json& j);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json degree_sequence_to_json(const DegreeSequence& r);
DegreeSequence degree_sequence_from_json(const json& j);

// node = {"c": [children...], "label": m, "color": {"e": j} | {"s": t}},
// label/color only on internal vertices
json colored_to_json(const ColoredLabelledForest& forest);
ColoredLabelledForest colored_from_json(const json& j, long long k);

// {"1": [labels...], "2": [...]} keyed by degree
json partition_to_json(const PartitionS& s);
PartitionS partition_from_json(const json& j);

// {"k": K, "g": {"1": ...}, "f": {"1": ...}}
json codes_to_json(const CodeSequence& codes);
CodeSequence codes_from_json(const json& j);

json hook_report_to_json(const HookReport& report);

}  // namespace hookforest

#endif
