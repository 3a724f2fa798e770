#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "obk/integer_matrix.hpp"
#include "obk/patching.hpp"
#include "obk/polynomial.hpp"
#include "obk/surface.hpp"

namespace obk {

/// One traversal of a band: forward runs from end 0 to end 1.
struct CycleStep {
  std::size_t band = 0;
  bool forward = true;
  friend bool operator==(const CycleStep&, const CycleStep&) = default;
};

/// Closed edge-walk in the disk-band graph.
using Cycle = std::vector<CycleStep>;

/// Band traversal counts of a cycle (forward minus backward), one entry
/// per band. This is its class in the cycle space of the graph.
std::vector<Int> cycle_vector(const RibbonSurface& s, const Cycle& c);

/// Algebraic intersection number of two cycles on an orientable surface.
Int intersection_number(const RibbonSurface& s, const Cycle& x, const Cycle& y);

/// First homology of an orientable ribbon surface with a chosen cycle basis
/// and its intersection form.
class HomologyData {
 public:
  /// Validates the cycles (closed walks, independent, full rank) and
  /// computes the intersection form. Throws NotOrientable, InvalidCycle.
  static HomologyData from_basis(SurfacePtr surface, std::vector<Cycle> basis);

  const SurfacePtr& surface() const noexcept { return surface_; }
  const std::vector<Cycle>& basis() const noexcept { return basis_; }
  const IntMatrix& intersection() const noexcept { return intersection_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Coordinates of a closed walk in the basis. Throws CycleNotInSpan.
  std::vector<Int> coordinates(const Cycle& c) const;

  /// <x, y> for coordinate vectors.
  Int pairing(std::span<const Int> x, std::span<const Int> y) const;

  friend bool operator==(const HomologyData& a, const HomologyData& b) {
    return *a.surface_ == *b.surface_ && a.basis_ == b.basis_;
  }

 private:
  SurfacePtr surface_;
  std::vector<Cycle> basis_;
  IntMatrix intersection_;
  IntMatrix cycle_matrix_;  // bands x rank, columns are cycle vectors
};

using HomologyPtr = std::shared_ptr<const HomologyData>;

/// Expected rank: #bands - #disks + #components.
std::size_t homology_rank(const RibbonSurface& s);

/// Default basis. Bands joining the same pair of disks are grouped in band
/// order; consecutive bands of a group give the cycles e_m e_{m+1}^-1, a
/// group that is not needed for a spanning forest adds its first band
/// closed up through the forest, and every self-loop band is a cycle.
HomologyPtr homology_basis(SurfacePtr surface);

/// Twist letter: transvection about a homology class given by coordinates.
struct TwistLetter {
  std::vector<Int> curve;
  int sign = 1;
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Mapping class tracked through its word of twists and the induced
/// automorphism of first homology (columns are images of basis cycles).
/// The word is read as a composition: the last letter acts first.
class MappingClass {
 public:
  static MappingClass identity(HomologyPtr h);
  /// Evaluates a word of twists on h.
  static MappingClass from_word(HomologyPtr h, std::vector<TwistLetter> word);

  const HomologyPtr& homology() const noexcept { return homology_; }
  const std::vector<TwistLetter>& word() const noexcept { return word_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  friend bool operator==(const MappingClass& a, const MappingClass& b) {
    return *a.homology_ == *b.homology_ && a.word_ == b.word_ && a.matrix_ == b.matrix_;
  }

 private:
  HomologyPtr homology_;
  std::vector<TwistLetter> word_;
  IntMatrix matrix_;
};

/// Matrix of x -> x + sign * <x, c> c.
IntMatrix transvection(const HomologyData& h, std::span<const Int> curve, int sign);

MappingClass dehn_twist(HomologyPtr h, std::size_t basis_index, int sign);
MappingClass dehn_twist(HomologyPtr h, std::vector<Int> curve, int sign);
/// Twist about a closed walk; throws CycleNotInSpan.
MappingClass dehn_twist(HomologyPtr h, const Cycle& walk, int sign);

/// first o second (second acts first). Throws SurfaceMismatch.
MappingClass compose(const MappingClass& first, const MappingClass& second);
MappingClass inverse(const MappingClass& phi);

Polynomial char_poly(const MappingClass& phi);

/// Replays the twist word of phi on `target`, mapping basis cycle i of
/// phi's homology to basis cycle embedding[i] of target. The result acts as
/// phi on the image and fixes classes that do not meet the twist curves.
/// Throws BasisEmbeddingMissing.
MappingClass extend_by_identity(const MappingClass& phi, HomologyPtr target, const std::vector<std::size_t>& embedding);

/// Homology of a sum with the transported summand bases, left then right.
struct SumHomology {
  HomologyPtr homology;
  std::vector<std::size_t> left_embedding;
  std::vector<std::size_t> right_embedding;
};

SumHomology sum_homology(const SumResult& sum, const HomologyData& left, const HomologyData& right);

}  // namespace obk
