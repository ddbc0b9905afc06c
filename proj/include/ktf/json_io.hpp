#pragma once
// JSON encodings. Every integer value is written as a decimal string so
// arbitrary precision survives transport; readers also accept JSON integers.
// Counts (rows, cols, generators, free_rank, level, ...) are plain numbers.

#include "json.hpp"

#include "ktf/elliott.hpp"
#include "ktf/obk.hpp"
#include "ktf/pv.hpp"

namespace ktf::json {

using nlohmann::json;

/// Malformed input; the message names the offending field.
class SchemaError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const Integer &x);
json to_json(const IntVector &v);
json to_json(const IntMatrix &m);
json to_json(const SnfResult &s);
json to_json(const FgAbGroup &g);
json to_json(const PresentedGroup &p);
json to_json(const GroupHom &h);
json to_json(const SpaceKModel &m);
json to_json(const ExtensionK &e);
json to_json(const CrossedProductK &r);
json to_json(const DimensionGroup &g);
json to_json(const DgElement &x);
json to_json(const RationalInterval &r);
json to_json(const ConeDescriptor &c);
json to_json(const PairingDescriptor &p);
json to_json(const ElliottData &e);
json to_json(const OrbitBreakK &r);
std::string rational_string(const mpq_class &q);

Integer integer_from(const json &j, const std::string &where);
IntVector vector_from(const json &j, const std::string &where);
IntMatrix matrix_from(const json &j, const std::string &where = "matrix");
FgAbGroup group_from(const json &j, const std::string &where = "group");
PresentedGroup presentation_from(const json &j, const std::string &where = "presentation");
GroupHom hom_from(const json &j, const std::string &where = "hom");
SpaceKModel model_from(const json &j, const std::string &where = "model");
ExtensionK extension_from(const json &j, const std::string &where);
CrossedProductK crossed_product_from(const json &j, const std::string &where = "crossed product");
DimensionGroup dimgroup_from(const json &j, const std::string &where = "dimgroup");
DgElement element_from(const json &j, const std::string &where = "element");
ConeDescriptor cone_from(const json &j, const std::string &where = "cone");
PairingDescriptor pairing_from(const json &j, const std::string &where = "pairing");
/// Accepts any object with the invariant keys (orbit-break output included).
ElliottData elliott_from(const json &j, const std::string &where = "invariant");

} // namespace ktf::json
