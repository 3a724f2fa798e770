#pragma once

#include <string>

#include "obk/embedded.hpp"
#include "obk/mapclass.hpp"
#include "obk/openbook.hpp"
#include "obk/patching.hpp"

namespace obk {

/// Cylindrical cobordism I x M glued along its monodromy, held
/// intensionally as (base, monodromy). The directing segment is the
/// oriented unit interval.
class CylindricalCobordism {
 public:
  explicit CylindricalCobordism(MappingClass monodromy) : monodromy_(std::move(monodromy)) {}

  const SurfacePtr& base() const noexcept { return monodromy_.homology()->surface(); }
  const HomologyPtr& homology() const noexcept { return monodromy_.homology(); }
  const MappingClass& monodromy() const noexcept { return monodromy_; }

  /// Free boundary Y = (boundary of M) x I: one annulus per boundary circuit.
  int free_boundary_annuli() const;
  /// chi(M x I) = chi(M).
  int euler_characteristic() const;

  friend bool operator==(const CylindricalCobordism&, const CylindricalCobordism&) = default;

 private:
  MappingClass monodromy_;
};

/// Trivial cobordism with identity monodromy.
CylindricalCobordism cylinder(SurfacePtr base);

/// Cobordism with monodromy first o second. Throws BaseMismatch.
CylindricalCobordism compose_cobordisms(const CylindricalCobordism& first, const CylindricalCobordism& second);

inline constexpr const char* kCircleCollapsedTag = "circle-collapsed mapping torus";

/// Seifert hypersurface M together with the monodromy of its complement.
class SeifertPair {
 public:
  /// Throws ClosedComponent.
  SeifertPair(MappingClass monodromy, std::string tag);

  const SurfacePtr& hypersurface() const noexcept { return monodromy_.homology()->surface(); }
  const MappingClass& monodromy() const noexcept { return monodromy_; }
  const std::string& tag() const noexcept { return tag_; }

  friend bool operator==(const SeifertPair&, const SeifertPair&) = default;

 private:
  MappingClass monodromy_;
  std::string tag_;
};

/// Throws ClosedComponent.
SeifertPair circle_collapsed_mapping_torus(const CylindricalCobordism& w);

/// Splitting along M. The radial blow-up in between is invisible here.
CylindricalCobordism split_seifert(const SeifertPair& p);

struct Stiffening {
  CylindricalCobordism host;
  CoreArc core;
};

/// Throws DegenerateCore unless 0 < lo < hi < 1.
Stiffening stiffen(CylindricalCobordism w, CoreArc core);

struct StiffenedSum {
  Stiffening result;
  SumResult sum;
  SumHomology homology;
};

/// Fiberwise sum with the core of `first` placed after the core of
/// `second`; monodromy ext(phi1) o ext(phi2), core the convex hull.
/// Throws NotSummable, CoreOrderViolation.
StiffenedSum sum_stiffened_detailed(const Stiffening& first, const Stiffening& second, const SumSpec& spec);
Stiffening sum_stiffened(const Stiffening& first, const Stiffening& second, const SumSpec& spec);

struct SamedefReport {
  SurfaceInvariants page;
  Polynomial alexander;  // normalized
  Polynomial charpoly;   // normalized
};

/// Compares the embedded sum against the sum of stiffened cobordisms:
/// chi, boundary count, genus, and the Alexander polynomial against the
/// characteristic polynomial of the summed monodromy. Throws
/// InvariantMismatch.
SamedefReport verify_samedef(const Stiffening& first, const Stiffening& second, const SumSpec& spec,
                             const SeifertData& embedded_result);

}  // namespace obk
