#include "ktf/elliott.hpp"

#include <stdexcept>

namespace ktf {

std::string to_string(ConeTag t) {
  switch (t) {
  case ConeTag::FullPositiveFirstCoord:
    return "FullPositiveFirstCoord";
  case ConeTag::SimpleCone:
    return "SimpleCone";
  case ConeTag::OrderFromQuotient:
    return "OrderFromQuotient";
  case ConeTag::NonNegFree:
    return "NonNegFree";
  case ConeTag::Unknown:
    break;
  }
  return "Unknown";
}

ConeTag cone_tag_from_string(const std::string &s) {
  for (ConeTag t : {ConeTag::FullPositiveFirstCoord, ConeTag::SimpleCone,
                    ConeTag::OrderFromQuotient, ConeTag::NonNegFree, ConeTag::Unknown})
    if (to_string(t) == s)
      return t;
  throw std::invalid_argument("unknown cone tag '" + s + "'");
}

std::string to_string(PairingKind k) {
  switch (k) {
  case PairingKind::FirstCoordinate:
    return "FirstCoordinate";
  case PairingKind::FirstCoordOverK:
    return "FirstCoordOverK";
  case PairingKind::StateOfDimGroup:
    break;
  }
  return "StateOfDimGroup";
}

PairingKind pairing_kind_from_string(const std::string &s) {
  for (PairingKind k :
       {PairingKind::FirstCoordinate, PairingKind::FirstCoordOverK, PairingKind::StateOfDimGroup})
    if (to_string(k) == s)
      return k;
  throw std::invalid_argument("unknown pairing kind '" + s + "'");
}

namespace {

const DimensionGroup &require_dimgroup(const std::optional<DimensionGroup> &g,
                                       const FgAbGroup &group, const char *what) {
  if (!g)
    throw std::invalid_argument(std::string(what) + " needs a dimension group");
  if (group.free_rank < g->k())
    throw std::invalid_argument(std::string(what) + ": group " + group.to_string() +
                                " has fewer free coordinates than the dimension group");
  return *g;
}

DgElement quotient_part(const DimensionGroup &g, const IntVector &x) {
  return {0, IntVector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(g.k()))};
}

} // namespace

Membership cone_contains(const ConeDescriptor &cone, const FgAbGroup &group, const IntVector &x) {
  const IntVector r = group.reduce(x);
  if (cone.tag == ConeTag::Unknown)
    throw std::invalid_argument("cone is Unknown; membership is not decidable");
  if (is_zero(r))
    return Membership::Member;
  switch (cone.tag) {
  case ConeTag::FullPositiveFirstCoord:
  case ConeTag::SimpleCone:
    if (group.free_rank == 0)
      throw std::invalid_argument("first-coordinate cone on a group without free part");
    return sgn(r[0]) > 0 ? Membership::Member : Membership::NonMember;
  case ConeTag::NonNegFree:
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < group.free_rank ? sgn(r[i]) < 0 : sgn(r[i]) != 0)
        return Membership::NonMember;
    }
    return Membership::Member;
  case ConeTag::OrderFromQuotient: {
    const auto &g = require_dimgroup(cone.dimgroup, group, "OrderFromQuotient cone");
    switch (positivity(g, quotient_part(g, r), cone.max_iter)) {
    case Sign::Positive:
      return Membership::Member;
    case Sign::Undetermined:
      return Membership::Undetermined;
    default:
      return Membership::NonMember;
    }
  }
  case ConeTag::Unknown:
    break;
  }
  throw std::logic_error("unreachable cone tag");
}

void ElliottData::validate() const {
  if (trace_extreme_points < 1)
    throw std::invalid_argument("trace simplex needs at least one extreme point");
  if (k0.is_zero_element(unit))
    throw std::invalid_argument("unit class is zero");
  if (pairing.kind == PairingKind::FirstCoordOverK && pairing.k < 1)
    throw std::invalid_argument("pairing parameter k must be >= 1");
  if (pairing.kind == PairingKind::StateOfDimGroup)
    require_dimgroup(pairing.dimgroup, k0, "StateOfDimGroup pairing");
  if (cone.tag != ConeTag::Unknown && cone_contains(cone, k0, unit) != Membership::Member)
    throw std::invalid_argument("unit class is not in the positive cone");
}

ElliottData build_pointlike_invariant(const FgAbGroup &g0, const FgAbGroup &g1,
                                      const Integer &k, std::size_t extreme_points) {
  if (k < 1)
    throw std::invalid_argument("unit multiplicity k must be >= 1");
  if (extreme_points < 1)
    throw std::invalid_argument("trace simplex needs at least one extreme point");
  ElliottData e;
  e.k0 = direct_sum(FgAbGroup::free(1), g0);
  e.cone.tag = ConeTag::SimpleCone;
  e.unit = IntVector(e.k0.dimension());
  e.unit[0] = k;
  e.k1 = g1;
  e.trace_extreme_points = extreme_points;
  e.pairing.kind = PairingKind::FirstCoordOverK;
  e.pairing.k = k;
  return e;
}

mpq_class pairing_eval(const ElliottData &e, const IntVector &x) {
  const IntVector r = e.k0.reduce(x);
  switch (e.pairing.kind) {
  case PairingKind::FirstCoordinate:
  case PairingKind::FirstCoordOverK: {
    if (e.k0.free_rank == 0)
      throw std::invalid_argument("first-coordinate pairing on a finite group");
    mpq_class v(r[0], e.pairing.kind == PairingKind::FirstCoordOverK ? e.pairing.k : Integer(1));
    v.canonicalize();
    return v;
  }
  case PairingKind::StateOfDimGroup: {
    const auto &g = require_dimgroup(e.pairing.dimgroup, e.k0, "StateOfDimGroup pairing");
    return state_value(g, quotient_part(g, r), e.pairing.depth).midpoint();
  }
  }
  throw std::logic_error("unreachable pairing kind");
}

bool projectionless_check(const ElliottData &e) {
  if (e.cone.tag != ConeTag::SimpleCone && e.cone.tag != ConeTag::FullPositiveFirstCoord)
    throw std::invalid_argument("projectionless check is only decidable for SimpleCone and "
                                "FullPositiveFirstCoord, got " +
                                to_string(e.cone.tag));
  e.validate();
  // x and unit - x both nonzero positive <=> 0 < x_1 < unit_1
  return e.unit[0] == 1;
}

namespace {

PairingDescriptor canonical_pairing(PairingDescriptor p) {
  if (p.kind == PairingKind::FirstCoordOverK && p.k == 1)
    p.kind = PairingKind::FirstCoordinate;
  if (p.kind != PairingKind::FirstCoordOverK)
    p.k = 1;
  if (p.kind != PairingKind::StateOfDimGroup) {
    p.dimgroup.reset();
    p.depth = 0;
  }
  return p;
}

// FullPositiveFirstCoord and SimpleCone are the same set; on Z so is NonNegFree.
ConeDescriptor canonical_cone(ConeDescriptor c, const FgAbGroup &group) {
  if (c.tag == ConeTag::FullPositiveFirstCoord ||
      (c.tag == ConeTag::NonNegFree && group == FgAbGroup::free(1)))
    c.tag = ConeTag::SimpleCone;
  if (c.tag != ConeTag::OrderFromQuotient) {
    c.dimgroup.reset();
    c.max_iter = 0;
  }
  return c;
}

} // namespace

bool invariant_equal(const ElliottData &a, const ElliottData &b) {
  if (a.cone.tag == ConeTag::Unknown || b.cone.tag == ConeTag::Unknown)
    throw std::invalid_argument("cannot compare invariants with Unknown cones");
  if (!(a.k0 == b.k0 && a.k1 == b.k1 && a.trace_extreme_points == b.trace_extreme_points))
    return false;
  if (!(canonical_cone(a.cone, a.k0) == canonical_cone(b.cone, b.k0)))
    return false;
  if (a.k0.reduce(a.unit) != b.k0.reduce(b.unit))
    return false;
  return canonical_pairing(a.pairing) == canonical_pairing(b.pairing);
}

} // namespace ktf
