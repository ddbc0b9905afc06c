#include "ktf/json_io.hpp"

namespace ktf::json {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw SchemaError(where + ": " + what);
}

const json &field(const json &j, const std::string &key, const std::string &where) {
  if (!j.is_object())
    fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(where, "missing field '" + key + "'");
  return *it;
}

std::size_t count_from(const json &j, const std::string &where) {
  if (j.is_number_unsigned())
    return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0)
    return static_cast<std::size_t>(j.get<long long>());
  if (j.is_string()) {
    const Integer x = integer_from(j, where);
    if (sgn(x) >= 0 && x.fits_ulong_p())
      return x.get_ui();
  }
  fail(where, "expected a nonnegative count");
}

void reject_unknown_keys(const json &j, std::initializer_list<const char *> known,
                         const std::string &where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char *k : known)
      ok = ok || it.key() == k;
    if (!ok)
      fail(where, "unknown field '" + it.key() + "'");
  }
}

} // namespace

std::string rational_string(const mpq_class &q) { return q.get_str(); }

json to_json(const Integer &x) { return x.get_str(); }

json to_json(const IntVector &v) {
  json a = json::array();
  for (const auto &x : v)
    a.push_back(x.get_str());
  return a;
}

json to_json(const IntMatrix &m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    entries.push_back(to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const SnfResult &s) {
  return {{"u", to_json(s.u)},
          {"d", to_json(s.d)},
          {"v", to_json(s.v)},
          {"diagonal", to_json(s.diagonal())}};
}

json to_json(const FgAbGroup &g) {
  return {{"free_rank", g.free_rank}, {"torsion", to_json(g.torsion)}};
}

json to_json(const PresentedGroup &p) {
  return {{"generators", p.generators}, {"relations", to_json(p.relations)}};
}

json to_json(const GroupHom &h) {
  return {{"source", to_json(h.source)},
          {"target", to_json(h.target)},
          {"matrix", to_json(h.matrix)}};
}

json to_json(const SpaceKModel &m) {
  return {{"k0", to_json(m.k0)},
          {"k1", to_json(m.k1)},
          {"aut0", to_json(m.aut0)},
          {"aut1", to_json(m.aut1)},
          {"unit", to_json(m.unit)}};
}

json to_json(const ExtensionK &e) {
  json j = to_json(e.group);
  j["status"] = to_string(e.status);
  j["sub"] = to_json(e.sub);
  j["quot"] = to_json(e.quot);
  return j;
}

json to_json(const CrossedProductK &r) {
  return {{"k0", to_json(r.k0)}, {"k1", to_json(r.k1)}};
}

json to_json(const DimensionGroup &g) {
  return {{"k", g.k()}, {"step", to_json(g.step)}, {"unit", to_json(g.unit)}};
}

json to_json(const DgElement &x) { return {{"level", x.level}, {"vector", to_json(x.vector)}}; }

json to_json(const RationalInterval &r) {
  return {{"lo", rational_string(r.lo)}, {"hi", rational_string(r.hi)}};
}

json to_json(const ConeDescriptor &c) {
  json j = {{"tag", to_string(c.tag)}};
  if (c.tag == ConeTag::OrderFromQuotient) {
    if (c.dimgroup)
      j["dimgroup"] = to_json(*c.dimgroup);
    j["max_iter"] = c.max_iter;
  }
  return j;
}

json to_json(const PairingDescriptor &p) {
  json j = {{"kind", to_string(p.kind)}};
  if (p.kind == PairingKind::FirstCoordOverK)
    j["k"] = to_json(p.k);
  if (p.kind == PairingKind::StateOfDimGroup) {
    if (p.dimgroup)
      j["dimgroup"] = to_json(*p.dimgroup);
    j["depth"] = p.depth;
  }
  return j;
}

json to_json(const ElliottData &e) {
  return {{"k0", to_json(e.k0)},
          {"cone", to_json(e.cone)},
          {"unit", to_json(e.unit)},
          {"k1", to_json(e.k1)},
          {"trace_extreme_points", e.trace_extreme_points},
          {"pairing", to_json(e.pairing)}};
}

json to_json(const OrbitBreakK &r) {
  json six = json::array();
  for (const auto &g : r.six_term)
    six.push_back(to_json(g));
  json ses = json::array();
  for (const auto &s : r.short_exact)
    ses.push_back({{"label", s.label},
                   {"sub", to_json(s.sub)},
                   {"middle", to_json(s.middle)},
                   {"quot", to_json(s.quot)}});
  json j = {{"regime", to_string(r.regime)},
            {"k0", to_json(r.k0)},
            {"cone", to_json(r.cone)},
            {"unit", to_json(r.unit)},
            {"k1", to_json(r.k1)},
            {"trace_extreme_points", r.trace_extreme_points},
            {"six_term", six},
            {"short_exact", ses},
            {"derivation", r.derivation},
            {"exactness_audit", r.exactness_audit()}};
  if (r.pairing)
    j["pairing"] = to_json(*r.pairing);
  return j;
}

Integer integer_from(const json &j, const std::string &where) {
  if (j.is_number_integer())
    return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned())
    return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
      fail(where, "empty integer string");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        fail(where, "'" + s + "' is not a decimal integer");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  }
  fail(where, "expected a decimal integer string");
}

IntVector vector_from(const json &j, const std::string &where) {
  if (!j.is_array())
    fail(where, "expected an array of integers");
  IntVector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(integer_from(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

IntMatrix matrix_from(const json &j, const std::string &where) {
  reject_unknown_keys(j, {"rows", "cols", "entries"}, where);
  const std::size_t rows = count_from(field(j, "rows", where), where + ".rows");
  const std::size_t cols = count_from(field(j, "cols", where), where + ".cols");
  const json &entries = field(j, "entries", where);
  if (!entries.is_array() || entries.size() != rows)
    fail(where, "entries must be an array of " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const IntVector r = vector_from(entries[i], where + ".entries[" + std::to_string(i) + "]");
    if (r.size() != cols)
      fail(where, "row " + std::to_string(i) + " has " + std::to_string(r.size()) +
                      " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = r[c];
  }
  return m;
}

FgAbGroup group_from(const json &j, const std::string &where) {
  reject_unknown_keys(j, {"free_rank", "torsion"}, where);
  const std::size_t free_rank = count_from(field(j, "free_rank", where), where + ".free_rank");
  // any list of positive cyclic orders; Z/2 + Z/3 reads as Z/6
  const IntVector orders = vector_from(field(j, "torsion", where), where + ".torsion");
  for (const auto &t : orders)
    if (sgn(t) <= 0)
      fail(where, "torsion orders must be positive");
  FgAbGroup g = FgAbGroup::from_cyclic_orders(orders);
  g.free_rank += free_rank;
  return g;
}

PresentedGroup presentation_from(const json &j, const std::string &where) {
  reject_unknown_keys(j, {"generators", "relations"}, where);
  const std::size_t n = count_from(field(j, "generators", where), where + ".generators");
  IntMatrix rel = matrix_from(field(j, "relations", where), where + ".relations");
  if (rel.rows() != n)
    fail(where, "relations must have one row per generator");
  return {n, std::move(rel)};
}

GroupHom hom_from(const json &j, const std::string &where) {
  reject_unknown_keys(j, {"source", "target", "matrix"}, where);
  GroupHom h{presentation_from(field(j, "source", where), where + ".source"),
             presentation_from(field(j, "target", where), where + ".target"),
             matrix_from(field(j, "matrix", where), where + ".matrix")};
  if (h.matrix.rows() != h.target.generators || h.matrix.cols() != h.source.generators)
    fail(where, "matrix must be target.generators x source.generators");
  return h;
}

SpaceKModel model_from(const json &j, const std::string &where) {
  reject_unknown_keys(j, {"k0", "k1", "aut0", "aut1", "unit"}, where);
  return {presentation_from(field(j, "k0", where), where + ".k0"),
          presentation_from(field(j, "k1", where), where + ".k1"),
          matrix_from(field(j, "aut0", where), where + ".aut0"),
          matrix_from(field(j, "aut1", where), where + ".aut1"),
          vector_from(field(j, "unit", where), where + ".unit")};
}

ExtensionK extension_from(const json &j, const std::string &where) {
  ExtensionK e;
  json g = {{"free_rank", field(j, "free_rank", where)}, {"torsion", field(j, "torsion", where)}};
  e.group = group_from(g, where);
  e.status = ExtStatus::SplitForced;
  if (j.contains("status")) {
    const std::string s = j["status"].is_string() ? j["status"].get<std::string>() : "";
    if (s == "ambiguous")
      e.status = ExtStatus::Ambiguous;
    else if (s != "split-forced")
      fail(where, "status must be 'split-forced' or 'ambiguous'");
  }
  e.sub = j.contains("sub") ? group_from(j["sub"], where + ".sub") : e.group;
  e.quot = j.contains("quot") ? group_from(j["quot"], where + ".quot") : FgAbGroup{};
  return e;
}

CrossedProductK crossed_product_from(const json &j, const std::string &where) {
  reject_unknown_keys(j, {"k0", "k1"}, where);
  return {extension_from(field(j, "k0", where), where + ".k0"),
          extension_from(field(j, "k1", where), where + ".k1")};
}

DimensionGroup dimgroup_from(const json &j, const std::string &where) {
  reject_unknown_keys(j, {"k", "step", "unit"}, where);
  DimensionGroup g{matrix_from(field(j, "step", where), where + ".step"),
                   vector_from(field(j, "unit", where), where + ".unit")};
  if (j.contains("k") && count_from(j["k"], where + ".k") != g.k())
    fail(where, "k does not match the step size");
  try {
    g.validate();
  } catch (const std::invalid_argument &e) {
    fail(where, e.what());
  }
  return g;
}

DgElement element_from(const json &j, const std::string &where) {
  if (j.is_array())
    return {0, vector_from(j, where)};
  reject_unknown_keys(j, {"level", "vector"}, where);
  DgElement x;
  x.level = j.contains("level") ? count_from(j["level"], where + ".level") : 0;
  x.vector = vector_from(field(j, "vector", where), where + ".vector");
  return x;
}

ConeDescriptor cone_from(const json &j, const std::string &where) {
  reject_unknown_keys(j, {"tag", "dimgroup", "max_iter"}, where);
  const json &tag = field(j, "tag", where);
  if (!tag.is_string())
    fail(where, "tag must be a string");
  ConeDescriptor c;
  try {
    c.tag = cone_tag_from_string(tag.get<std::string>());
  } catch (const std::invalid_argument &e) {
    fail(where, e.what());
  }
  if (c.tag == ConeTag::OrderFromQuotient)
    c.dimgroup = dimgroup_from(field(j, "dimgroup", where), where + ".dimgroup");
  if (j.contains("max_iter"))
    c.max_iter = count_from(j["max_iter"], where + ".max_iter");
  return c;
}

PairingDescriptor pairing_from(const json &j, const std::string &where) {
  reject_unknown_keys(j, {"kind", "k", "dimgroup", "depth"}, where);
  const json &kind = field(j, "kind", where);
  if (!kind.is_string())
    fail(where, "kind must be a string");
  PairingDescriptor p;
  try {
    p.kind = pairing_kind_from_string(kind.get<std::string>());
  } catch (const std::invalid_argument &e) {
    fail(where, e.what());
  }
  if (p.kind == PairingKind::FirstCoordOverK)
    p.k = integer_from(field(j, "k", where), where + ".k");
  if (p.kind == PairingKind::StateOfDimGroup)
    p.dimgroup = dimgroup_from(field(j, "dimgroup", where), where + ".dimgroup");
  if (j.contains("depth"))
    p.depth = count_from(j["depth"], where + ".depth");
  return p;
}

ElliottData elliott_from(const json &j, const std::string &where) {
  ElliottData e;
  e.k0 = group_from(field(j, "k0", where), where + ".k0");
  e.cone = cone_from(field(j, "cone", where), where + ".cone");
  e.unit = vector_from(field(j, "unit", where), where + ".unit");
  e.k1 = group_from(field(j, "k1", where), where + ".k1");
  e.trace_extreme_points =
      count_from(field(j, "trace_extreme_points", where), where + ".trace_extreme_points");
  e.pairing = pairing_from(field(j, "pairing", where), where + ".pairing");
  try {
    e.validate();
  } catch (const std::invalid_argument &ex) {
    fail(where, ex.what());
  }
  return e;
}

} // namespace ktf::json
