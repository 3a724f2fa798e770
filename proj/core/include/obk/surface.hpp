#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace obk {

/// One end of a named band, as written in a disk's slot list.
struct SlotRecord {
  std::string band;
  int end = 0;  // 0 or 1
};

struct DiskRecord {
  std::string id;
  std::vector<SlotRecord> slots;  // counterclockwise
};

struct BandRecord {
  std::string id;
  int half_twists = 0;
};

struct Slot {
  std::size_t band = 0;
  int end = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Disk {
  std::string id;
  std::vector<Slot> slots;
  friend bool operator==(const Disk&, const Disk&) = default;
};

struct BandEnd {
  std::size_t disk = 0;
  std::size_t position = 0;  // index into the disk's slot list
  friend bool operator==(const BandEnd&, const BandEnd&) = default;
};

struct Band {
  std::string id;
  int half_twists = 0;
  std::array<BandEnd, 2> ends{};
  friend bool operator==(const Band&, const Band&) = default;
};

/// Compact surface-with-boundary presented as disks joined by bands.
///
/// Each disk lists the band ends attached to it in counterclockwise order
/// (seen from the front). A band with an even number of half-twists
/// preserves the local orientation between its two disks; an odd number
/// reverses it. Values are immutable once built.
class RibbonSurface {
 public:
  /// Validates and indexes the presentation. Throws DuplicateId,
  /// DanglingSlot or EmptyPresentation.
  static RibbonSurface build(const std::vector<DiskRecord>& disks, const std::vector<BandRecord>& bands);

  const std::vector<Disk>& disks() const noexcept { return disks_; }
  const std::vector<Band>& bands() const noexcept { return bands_; }
  std::size_t disk_count() const noexcept { return disks_.size(); }
  std::size_t band_count() const noexcept { return bands_.size(); }

  std::optional<std::size_t> find_disk(std::string_view id) const;
  std::optional<std::size_t> find_band(std::string_view id) const;

  /// Records that rebuild an equal surface.
  std::vector<DiskRecord> disk_records() const;
  std::vector<BandRecord> band_records() const;

  friend bool operator==(const RibbonSurface&, const RibbonSurface&) = default;

 private:
  RibbonSurface() = default;
  std::vector<Disk> disks_;
  std::vector<Band> bands_;
};

struct BoundaryArc {
  enum class Kind { DiskGap, BandSide };
  Kind kind = Kind::DiskGap;
  std::size_t index = 0;  // disk index (DiskGap) or band index (BandSide)
  std::size_t which = 0;  // gap after slot `which` (DiskGap) or side 0/1 (BandSide)
  friend bool operator==(const BoundaryArc&, const BoundaryArc&) = default;
};

struct BoundaryCircuit {
  std::vector<BoundaryArc> arcs;
};

struct Orientability {
  bool orientable = false;
  std::optional<std::vector<int>> disk_signs;  // +1/-1 per disk when orientable
};

struct GenusAndBoundary {
  int genus = 0;
  int boundary_count = 0;
  friend bool operator==(const GenusAndBoundary&, const GenusAndBoundary&) = default;
};

int euler_characteristic(const RibbonSurface& s);

/// Total number of boundary arcs: two gaps-or-sides per band end plus one
/// arc per bare disk.
std::size_t boundary_arc_count(const RibbonSurface& s);

std::vector<BoundaryCircuit> boundary_walk(const RibbonSurface& s);

Orientability orientability(const RibbonSurface& s);

/// Connected component label per disk, labels numbered from 0 in order of
/// first appearance.
std::vector<std::size_t> component_labels(const RibbonSurface& s);
std::size_t component_count(const RibbonSurface& s);

/// Boundary circuit count per connected component.
std::vector<int> boundary_count_per_component(const RibbonSurface& s);

/// Throws NotConnected / NotOrientable.
GenusAndBoundary genus_and_boundary(const RibbonSurface& s);

/// Equivalent presentation of an orientable surface in which every disk is
/// positively oriented and every band has an even number of half-twists.
/// Disk and band indices are preserved. Throws NotOrientable.
RibbonSurface oriented_normal_form(const RibbonSurface& s);

/// Two disks D1, D2 joined by n parallel bands B1..Bn carrying 2*sign
/// half-twists, with slots in the same cyclic order on both disks.
RibbonSurface primitive_s_surface(int n, int sign);

/// A single bare disk with id `D`.
RibbonSurface disk_surface(std::string id = "D");

/// Invariant vector used to compare surfaces up to isomorphism.
struct SurfaceInvariants {
  int euler = 0;
  int boundary_count = 0;
  bool orientable = false;
  std::size_t components = 0;
  std::optional<int> genus;  // connected orientable surfaces only
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

SurfaceInvariants invariants(const RibbonSurface& s);

}  // namespace obk
