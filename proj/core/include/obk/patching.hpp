#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "obk/surface.hpp"

namespace obk {

using SurfacePtr = std::shared_ptr<const RibbonSurface>;

/// A disk of a host surface designated as the patch P.
///
/// The boundary of a disk with k slots is cut into 2k arcs: arc 2s is the
/// interval where slot s is attached, arc 2s+1 the gap that follows it. A
/// bare disk has the single arc 0. The attaching region A is a set of arcs
/// that must contain every slot arc; its maximal runs are the attaching
/// arcs, numbered in counterclockwise order starting with the one that
/// contains slot 0.
class Patch {
 public:
  const SurfacePtr& host() const noexcept { return host_; }
  std::size_t disk() const noexcept { return disk_; }
  const std::vector<bool>& attaching() const noexcept { return attaching_; }
  std::vector<std::size_t> attaching_arcs() const;
  std::vector<std::size_t> free_arcs() const;

  /// Slot positions (on the patch disk) of each attaching arc, in order.
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }
  std::size_t attaching_count() const noexcept { return components_.size(); }

  /// Attaching arc containing a given slot position.
  std::size_t component_of_slot(std::size_t slot) const;

 private:
  friend Patch make_patch(SurfacePtr host, std::string_view disk_id, const std::vector<std::size_t>& attach);
  SurfacePtr host_;
  std::size_t disk_ = 0;
  std::vector<bool> attaching_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> slot_component_;
};

/// Throws UnknownDisk, BandOutsideAttachingRegion, InvalidMarking.
Patch make_patch(SurfacePtr host, std::string_view disk_id, const std::vector<std::size_t>& attach);

/// Patch whose attaching arcs are exactly the slot arcs of the disk.
Patch make_slot_patch(SurfacePtr host, std::string_view disk_id);

struct SumSpec {
  Patch left;
  Patch right;
  std::string interleaving;  // cyclic word over {L, R}
};

/// True iff the word uses only L/R with the right letter counts. Throws
/// SameHost when both patches sit on the same surface object.
bool check_summable(const SumSpec& spec);

struct SumResult {
  SurfacePtr surface;
  Patch patch;                           // induced patch: the merged disk with A1 u A2
  std::vector<std::size_t> left_bands;   // band index in the left host -> index in the sum
  std::vector<std::size_t> right_bands;  // band index in the right host -> index in the sum
  std::vector<std::size_t> left_disks;
  std::vector<std::size_t> right_disks;
};

/// Sum of two patched surfaces along their patch disks.
/// Throws NotSummable.
SumResult abstract_sum(const SumSpec& spec);

/// The spec with hosts exchanged and the word read with L and R swapped.
SumSpec swapped(const SumSpec& spec);

}  // namespace obk
