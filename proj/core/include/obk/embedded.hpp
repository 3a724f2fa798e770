#pragma once

#include <cstddef>
#include <vector>

#include "obk/braid.hpp"
#include "obk/integer_matrix.hpp"
#include "obk/mapclass.hpp"
#include "obk/patching.hpp"
#include "obk/polynomial.hpp"

namespace obk {

/// A connected orientable surface in the 3-sphere, known through the
/// Seifert matrix of a homology basis. Convention: V(i, j) is the linking
/// number of the positive pushoff of cycle i with cycle j, so that
/// V - V^T equals the intersection form J of the basis.
class SeifertData {
 public:
  /// Throws NotConnected, DimensionMismatch, SkewMismatch.
  SeifertData(HomologyPtr homology, IntMatrix seifert_matrix);

  const HomologyPtr& homology() const noexcept { return homology_; }
  const SurfacePtr& surface() const noexcept { return homology_->surface(); }
  const IntMatrix& seifert_matrix() const noexcept { return seifert_; }
  std::size_t rank() const noexcept { return seifert_.rows(); }

 private:
  HomologyPtr homology_;
  IntMatrix seifert_;
};

/// Bidiagonal Seifert matrix of the primitive s-surface (n, sign) in its
/// consecutive-band basis.
SeifertData seifert_matrix_primitive(int n, int sign);

/// Seifert matrix of the Bennequin surface of a braid closure, basis of
/// consecutive same-generator band pairs. Throws DisconnectedSurface when
/// a generator is missing.
SeifertData seifert_matrix_bennequin(const BraidWord& b);

/// Chord of a basis cycle across the patch disk, as positions in the
/// interleaving word (entry, then exit).
struct Chord {
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const Chord&, const Chord&) = default;
};

struct ChordDiagram {
  std::vector<std::vector<Chord>> left;   // per left basis cycle
  std::vector<std::vector<Chord>> right;  // per right basis cycle
};

/// Chords traced by the basis cycles of both summands on the patch disk.
ChordDiagram chords_for(const SumSpec& spec, const HomologyData& left, const HomologyData& right);

/// C(i, j): signed crossings of left cycle i's chords with right cycle j's
/// chords in the merged disk. Throws InvalidChord.
IntMatrix coupling_block(const SumSpec& spec, const ChordDiagram& chords);

/// LeftFirst puts the coupling block above the diagonal: the left summand's
/// pushed-off cycles link the right summand.
enum class SumOrder { LeftFirst, RightFirst };

struct EmbeddedSum {
  SeifertData data;
  SumResult sum;
  SumHomology homology;
};

/// Throws NotSummable, InvalidChord, SkewMismatch.
EmbeddedSum embedded_sum_detailed(const SeifertData& left, const SeifertData& right, const SumSpec& spec,
                                  const ChordDiagram& chords, SumOrder order);
SeifertData embedded_sum(const SeifertData& left, const SeifertData& right, const SumSpec& spec,
                         const ChordDiagram& chords, SumOrder order);

/// det(V^T - t V), normalized up to units.
Polynomial alexander(const SeifertData& d);

/// V^-1 V^T. Throws NotUnimodular.
IntMatrix homological_monodromy(const SeifertData& d);

/// Mod-2 linking of the pushed-off left core with the right core; cores are
/// the first basis cycles crossing the patch exactly once. Throws
/// NoCoreCycle.
int order_invariant(const SeifertData& left, const SeifertData& right, const SumSpec& spec, const ChordDiagram& chords,
                    SumOrder order);

/// det V = +-1 and the Alexander polynomial has full degree r.
bool fiberedness_necessary(const SeifertData& d);

}  // namespace obk
