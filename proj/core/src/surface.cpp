#include "obk/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "obk/error.hpp"

namespace obk {

RibbonSurface RibbonSurface::build(const std::vector<DiskRecord>& disks, const std::vector<BandRecord>& bands) {
  if (disks.empty()) throw Error(ErrorKind::EmptyPresentation, "a surface needs at least one disk");
  RibbonSurface s;
  std::unordered_map<std::string, std::size_t> band_index;
  std::unordered_map<std::string, std::size_t> disk_index;
  for (const auto& b : bands) {
    if (b.id.empty()) throw Error(ErrorKind::DuplicateId, "empty band identifier");
    if (!band_index.emplace(b.id, s.bands_.size()).second) throw Error(ErrorKind::DuplicateId, "band " + b.id);
    s.bands_.push_back(Band{b.id, b.half_twists, {}});
  }
  std::vector<std::array<bool, 2>> seen(bands.size(), {false, false});
  for (const auto& d : disks) {
    if (d.id.empty()) throw Error(ErrorKind::DuplicateId, "empty disk identifier");
    if (!disk_index.emplace(d.id, s.disks_.size()).second) throw Error(ErrorKind::DuplicateId, "disk " + d.id);
    if (band_index.count(d.id)) throw Error(ErrorKind::DuplicateId, "identifier " + d.id + " names a disk and a band");
    Disk disk{d.id, {}};
    for (const auto& slot : d.slots) {
      auto it = band_index.find(slot.band);
      if (it == band_index.end()) throw Error(ErrorKind::DanglingSlot, "slot names unknown band " + slot.band);
      if (slot.end != 0 && slot.end != 1)
        throw Error(ErrorKind::DanglingSlot, "band end must be 0 or 1 in " + slot.band);
      auto& flag = seen[it->second][static_cast<std::size_t>(slot.end)];
      if (flag)
        throw Error(ErrorKind::DanglingSlot, "band end " + slot.band + "." + std::to_string(slot.end) + " used twice");
      flag = true;
      s.bands_[it->second].ends[static_cast<std::size_t>(slot.end)] = BandEnd{s.disks_.size(), disk.slots.size()};
      disk.slots.push_back(Slot{it->second, slot.end});
    }
    s.disks_.push_back(std::move(disk));
  }
  for (std::size_t b = 0; b < bands.size(); ++b)
    for (int e = 0; e < 2; ++e)
      if (!seen[b][static_cast<std::size_t>(e)])
        throw Error(ErrorKind::DanglingSlot, "band end " + bands[b].id + "." + std::to_string(e) + " is not attached");
  return s;
}

std::optional<std::size_t> RibbonSurface::find_disk(std::string_view id) const {
  for (std::size_t i = 0; i < disks_.size(); ++i)
    if (disks_[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> RibbonSurface::find_band(std::string_view id) const {
  for (std::size_t i = 0; i < bands_.size(); ++i)
    if (bands_[i].id == id) return i;
  return std::nullopt;
}

std::vector<DiskRecord> RibbonSurface::disk_records() const {
  std::vector<DiskRecord> out;
  for (const auto& d : disks_) {
    DiskRecord r{d.id, {}};
    for (const auto& slot : d.slots) r.slots.push_back(SlotRecord{bands_[slot.band].id, slot.end});
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BandRecord> RibbonSurface::band_records() const {
  std::vector<BandRecord> out;
  for (const auto& b : bands_) out.push_back(BandRecord{b.id, b.half_twists});
  return out;
}

int euler_characteristic(const RibbonSurface& s) {
  return static_cast<int>(s.disk_count()) - static_cast<int>(s.band_count());
}

std::size_t boundary_arc_count(const RibbonSurface& s) {
  std::size_t bare = 0;
  for (const auto& d : s.disks())
    if (d.slots.empty()) ++bare;
  return 4 * s.band_count() + bare;
}

namespace {

// A corner sits at one side of a slot: c = 0 is met first when running
// counterclockwise around the disk, c = 1 second.
struct Corner {
  std::size_t disk;
  std::size_t slot;
  int c;
};

bool even(int v) { return v % 2 == 0; }

// The side of band b leaving its end `end` at corner c, and the corner at
// the far end it reaches.
std::pair<std::size_t, Corner> follow_side(const RibbonSurface& s, const Corner& at) {
  const Slot& slot = s.disks()[at.disk].slots[at.slot];
  const Band& band = s.bands()[slot.band];
  const bool flat = even(band.half_twists);
  std::size_t side;
  int far_corner;
  if (slot.end == 0) {
    side = static_cast<std::size_t>(at.c);
    far_corner = flat ? 1 - at.c : at.c;
  } else {
    side = static_cast<std::size_t>(flat ? 1 - at.c : at.c);
    far_corner = static_cast<int>(side);
  }
  const BandEnd& far = band.ends[slot.end == 0 ? 1 : 0];
  return {side, Corner{far.disk, far.position, far_corner}};
}

}  // namespace

std::vector<BoundaryCircuit> boundary_walk(const RibbonSurface& s) {
  std::vector<BoundaryCircuit> circuits;
  std::vector<std::vector<bool>> gap_seen(s.disk_count());
  for (std::size_t d = 0; d < s.disk_count(); ++d) gap_seen[d].assign(s.disks()[d].slots.size(), false);

  for (std::size_t d = 0; d < s.disk_count(); ++d) {
    const auto k = s.disks()[d].slots.size();
    if (k == 0) {
      circuits.push_back(BoundaryCircuit{{BoundaryArc{BoundaryArc::Kind::DiskGap, d, 0}}});
      continue;
    }
    for (std::size_t p = 0; p < k; ++p) {
      if (gap_seen[d][p]) continue;
      BoundaryCircuit circuit;
      // Enter along gap (d, p) from corner (p, 1) to corner (p+1, 0).
      std::size_t gd = d, gp = p;
      Corner at{d, (p + 1) % k, 0};
      for (;;) {
        gap_seen[gd][gp] = true;
        circuit.arcs.push_back(BoundaryArc{BoundaryArc::Kind::DiskGap, gd, gp});
        const auto [side, far] = follow_side(s, at);
        circuit.arcs.push_back(BoundaryArc{BoundaryArc::Kind::BandSide, s.disks()[at.disk].slots[at.slot].band, side});
        const auto kk = s.disks()[far.disk].slots.size();
        if (far.c == 1) {
          gd = far.disk;
          gp = far.slot;
          at = Corner{far.disk, (far.slot + 1) % kk, 0};
        } else {
          gd = far.disk;
          gp = (far.slot + kk - 1) % kk;
          at = Corner{far.disk, gp, 1};
        }
        if (gap_seen[gd][gp]) break;
      }
      circuits.push_back(std::move(circuit));
    }
  }
  return circuits;
}

std::vector<std::size_t> component_labels(const RibbonSurface& s) {
  std::vector<std::size_t> parent(s.disk_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& b : s.bands()) {
    const auto a = find(b.ends[0].disk), c = find(b.ends[1].disk);
    if (a != c) parent[std::max(a, c)] = std::min(a, c);
  }
  std::map<std::size_t, std::size_t> relabel;
  std::vector<std::size_t> labels(s.disk_count());
  for (std::size_t d = 0; d < s.disk_count(); ++d) {
    const auto root = find(d);
    auto it = relabel.emplace(root, relabel.size()).first;
    labels[d] = it->second;
  }
  return labels;
}

std::size_t component_count(const RibbonSurface& s) {
  const auto labels = component_labels(s);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<int> boundary_count_per_component(const RibbonSurface& s) {
  const auto labels = component_labels(s);
  std::vector<int> counts(component_count(s), 0);
  for (const auto& circuit : boundary_walk(s)) {
    const auto& arc = circuit.arcs.front();
    ++counts[labels[arc.index]];  // walks always start on a disk arc
  }
  return counts;
}

Orientability orientability(const RibbonSurface& s) {
  std::vector<int> sign(s.disk_count(), 0);
  // adjacency: (neighbour disk, required relative sign)
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(s.disk_count());
  for (const auto& b : s.bands()) {
    const int rel = even(b.half_twists) ? 1 : -1;
    adj[b.ends[0].disk].emplace_back(b.ends[1].disk, rel);
    adj[b.ends[1].disk].emplace_back(b.ends[0].disk, rel);
  }
  for (std::size_t start = 0; start < s.disk_count(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const auto d = queue.front();
      queue.pop_front();
      for (const auto& [e, rel] : adj[d]) {
        const int want = sign[d] * rel;
        if (sign[e] == 0) {
          sign[e] = want;
          queue.push_back(e);
        } else if (sign[e] != want) {
          return Orientability{false, std::nullopt};
        }
      }
    }
  }
  return Orientability{true, sign};
}

GenusAndBoundary genus_and_boundary(const RibbonSurface& s) {
  if (component_count(s) != 1) throw Error(ErrorKind::NotConnected, "genus needs a connected surface");
  if (!orientability(s).orientable) throw Error(ErrorKind::NotOrientable, "genus needs an orientable surface");
  const int b = static_cast<int>(boundary_walk(s).size());
  const int chi = euler_characteristic(s);
  return GenusAndBoundary{(2 - chi - b) / 2, b};
}

RibbonSurface oriented_normal_form(const RibbonSurface& s) {
  const auto o = orientability(s);
  if (!o.orientable) throw Error(ErrorKind::NotOrientable, "surface has no orientation");
  const auto& signs = *o.disk_signs;
  auto disks = s.disk_records();
  for (std::size_t d = 0; d < disks.size(); ++d)
    if (signs[d] < 0) std::reverse(disks[d].slots.begin(), disks[d].slots.end());
  auto bands = s.band_records();
  for (std::size_t b = 0; b < bands.size(); ++b) {
    const auto& ends = s.bands()[b].ends;
    if (signs[ends[0].disk] != signs[ends[1].disk]) bands[b].half_twists += 1;
  }
  return RibbonSurface::build(disks, bands);
}

RibbonSurface primitive_s_surface(int n, int sign) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "primitive s-surface needs n >= 1");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::IndexOutOfRange, "sign must be +1 or -1");
  DiskRecord top{"D1", {}}, bottom{"D2", {}};
  std::vector<BandRecord> bands;
  for (int i = 1; i <= n; ++i) {
    const std::string id = "B" + std::to_string(i);
    bands.push_back(BandRecord{id, 2 * sign});
    top.slots.push_back(SlotRecord{id, 0});
    bottom.slots.push_back(SlotRecord{id, 1});
  }
  return RibbonSurface::build({top, bottom}, bands);
}

RibbonSurface disk_surface(std::string id) { return RibbonSurface::build({DiskRecord{std::move(id), {}}}, {}); }

SurfaceInvariants invariants(const RibbonSurface& s) {
  SurfaceInvariants inv;
  inv.euler = euler_characteristic(s);
  inv.boundary_count = static_cast<int>(boundary_walk(s).size());
  inv.orientable = orientability(s).orientable;
  inv.components = component_count(s);
  if (inv.orientable && inv.components == 1) inv.genus = (2 - inv.euler - inv.boundary_count) / 2;
  return inv;
}

}  // namespace obk
