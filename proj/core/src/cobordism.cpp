#include "obk/cobordism.hpp"

#include "obk/error.hpp"

namespace obk {

int CylindricalCobordism::free_boundary_annuli() const { return static_cast<int>(boundary_walk(*base()).size()); }

int CylindricalCobordism::euler_characteristic() const { return obk::euler_characteristic(*base()); }

CylindricalCobordism cylinder(SurfacePtr base) { return CylindricalCobordism(MappingClass::identity(homology_basis(std::move(base)))); }

CylindricalCobordism compose_cobordisms(const CylindricalCobordism& first, const CylindricalCobordism& second) {
  if (!(*first.homology() == *second.homology()))
    throw Error(ErrorKind::BaseMismatch, "cobordisms over different bases");
  // [0,1] then [1,2], rescaled back onto [0,1]: only the order survives.
  return CylindricalCobordism(compose(first.monodromy(), second.monodromy()));
}

SeifertPair::SeifertPair(MappingClass monodromy, std::string tag)
    : monodromy_(std::move(monodromy)), tag_(std::move(tag)) {
  for (int count : boundary_count_per_component(*hypersurface()))
    if (count == 0) throw Error(ErrorKind::ClosedComponent, "Seifert hypersurface component without boundary");
}

SeifertPair circle_collapsed_mapping_torus(const CylindricalCobordism& w) {
  return SeifertPair(w.monodromy(), kCircleCollapsedTag);
}

CylindricalCobordism split_seifert(const SeifertPair& p) { return CylindricalCobordism(p.monodromy()); }

Stiffening stiffen(CylindricalCobordism w, CoreArc core) {
  if (!(Rational(0) < core.lo && core.lo < core.hi && core.hi < Rational(1)))
    throw Error(ErrorKind::DegenerateCore, "core must satisfy 0 < lo < hi < 1");
  return Stiffening{std::move(w), core};
}

StiffenedSum sum_stiffened_detailed(const Stiffening& first, const Stiffening& second, const SumSpec& spec) {
  if (spec.left.host() != first.host.base() || spec.right.host() != second.host.base())
    throw Error(ErrorKind::NotSummable, "patches do not sit on the two bases");
  if (!(second.core.hi < first.core.lo))
    throw Error(ErrorKind::CoreOrderViolation, "the first core must lie strictly after the second");
  SumResult sum = abstract_sum(spec);
  SumHomology h = sum_homology(sum, *first.host.homology(), *second.host.homology());
  const auto phi1 = extend_by_identity(first.host.monodromy(), h.homology, h.left_embedding);
  const auto phi2 = extend_by_identity(second.host.monodromy(), h.homology, h.right_embedding);
  Stiffening result{CylindricalCobordism(compose(phi1, phi2)),
                    CoreArc{second.core.lo, first.core.hi}};
  return StiffenedSum{std::move(result), std::move(sum), std::move(h)};
}

Stiffening sum_stiffened(const Stiffening& first, const Stiffening& second, const SumSpec& spec) {
  return sum_stiffened_detailed(first, second, spec).result;
}

SamedefReport verify_samedef(const Stiffening& first, const Stiffening& second, const SumSpec& spec,
                             const SeifertData& embedded_result) {
  const auto summed = sum_stiffened(first, second, spec);
  SamedefReport report;
  report.page = invariants(*summed.host.base());
  const auto embedded_page = invariants(*embedded_result.surface());
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvariantMismatch, what); };
  if (report.page.euler != embedded_page.euler) fail("Euler characteristics differ");
  if (report.page.boundary_count != embedded_page.boundary_count) fail("boundary counts differ");
  if (report.page.genus != embedded_page.genus) fail("genera differ");
  report.alexander = alexander(embedded_result);
  report.charpoly = char_poly(summed.host.monodromy()).normalized();
  if (!equal_up_to_units(report.alexander, report.charpoly))
    fail("alexander " + report.alexander.to_string() + " vs charpoly " + report.charpoly.to_string());
  return report;
}

}  // namespace obk
