#include "obk/patching.hpp"

#include <algorithm>
#include <set>

#include "obk/error.hpp"

namespace obk {

std::vector<std::size_t> Patch::attaching_arcs() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < attaching_.size(); ++i)
    if (attaching_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> Patch::free_arcs() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < attaching_.size(); ++i)
    if (!attaching_[i]) out.push_back(i);
  return out;
}

std::size_t Patch::component_of_slot(std::size_t slot) const { return slot_component_.at(slot); }

Patch make_patch(SurfacePtr host, std::string_view disk_id, const std::vector<std::size_t>& attach) {
  if (!host) throw Error(ErrorKind::UnknownDisk, "patch without host surface");
  const auto d = host->find_disk(disk_id);
  if (!d) throw Error(ErrorKind::UnknownDisk, std::string(disk_id));
  const std::size_t k = host->disks()[*d].slots.size();
  const std::size_t arcs = k == 0 ? 1 : 2 * k;

  Patch p;
  p.host_ = std::move(host);
  p.disk_ = *d;
  p.attaching_.assign(arcs, false);
  for (std::size_t a : attach) {
    if (a >= arcs) throw Error(ErrorKind::InvalidMarking, "arc index " + std::to_string(a) + " out of range");
    p.attaching_[a] = true;
  }
  if (k == 0) {
    if (p.attaching_[0]) throw Error(ErrorKind::InvalidMarking, "a bare disk has no attaching arc");
    return p;
  }
  for (std::size_t s = 0; s < k; ++s)
    if (!p.attaching_[2 * s])
      throw Error(ErrorKind::BandOutsideAttachingRegion, "slot " + std::to_string(s) + " of disk " +
                                                              std::string(disk_id) + " is not marked attaching");
  const auto first_free = std::find(p.attaching_.begin(), p.attaching_.end(), false);
  if (first_free == p.attaching_.end())
    throw Error(ErrorKind::InvalidMarking, "the attaching region covers the whole disk boundary");

  // Anchor: the attaching arc that contains slot 0, from its first arc.
  std::size_t start = 0;
  while (p.attaching_[(start + arcs - 1) % arcs]) start = (start + arcs - 1) % arcs;
  p.slot_component_.assign(k, 0);
  bool in_run = false;
  for (std::size_t step = 0; step < arcs; ++step) {
    const std::size_t a = (start + step) % arcs;
    if (!p.attaching_[a]) {
      in_run = false;
      continue;
    }
    if (!in_run) {
      p.components_.emplace_back();
      in_run = true;
    }
    if (a % 2 == 0) {
      p.components_.back().push_back(a / 2);
      p.slot_component_[a / 2] = p.components_.size() - 1;
    }
  }
  return p;
}

Patch make_slot_patch(SurfacePtr host, std::string_view disk_id) {
  if (!host) throw Error(ErrorKind::UnknownDisk, "patch without host surface");
  const auto d = host->find_disk(disk_id);
  if (!d) throw Error(ErrorKind::UnknownDisk, std::string(disk_id));
  std::vector<std::size_t> attach;
  for (std::size_t s = 0; s < host->disks()[*d].slots.size(); ++s) attach.push_back(2 * s);
  return make_patch(std::move(host), disk_id, attach);
}

bool check_summable(const SumSpec& spec) {
  if (spec.left.host() == spec.right.host()) throw Error(ErrorKind::SameHost, "patches share one host surface");
  std::size_t l = 0, r = 0;
  for (char c : spec.interleaving) {
    if (c == 'L')
      ++l;
    else if (c == 'R')
      ++r;
    else
      return false;
  }
  return l == spec.left.attaching_count() && r == spec.right.attaching_count();
}

namespace {

std::string fresh_id(std::string id, const std::set<std::string>& taken) {
  while (taken.count(id)) id += '\'';
  return id;
}

}  // namespace

SumResult abstract_sum(const SumSpec& spec) {
  if (!check_summable(spec)) throw Error(ErrorKind::NotSummable, "interleaving '" + spec.interleaving + "' does not match the patches");
  const RibbonSurface& left = *spec.left.host();
  const RibbonSurface& right = *spec.right.host();

  std::set<std::string> taken;
  for (const auto& d : left.disks()) taken.insert(d.id);
  for (const auto& b : left.bands()) taken.insert(b.id);

  std::vector<std::string> right_band_ids;
  for (const auto& b : right.bands()) {
    right_band_ids.push_back(fresh_id(b.id, taken));
    taken.insert(right_band_ids.back());
  }
  std::vector<std::string> right_disk_ids;
  for (std::size_t d = 0; d < right.disk_count(); ++d) {
    if (d == spec.right.disk()) {
      right_disk_ids.push_back(left.disks()[spec.left.disk()].id);
      continue;
    }
    right_disk_ids.push_back(fresh_id(right.disks()[d].id, taken));
    taken.insert(right_disk_ids.back());
  }

  // Splice the attaching arcs of both patch disks following the word.
  DiskRecord merged{left.disks()[spec.left.disk()].id, {}};
  std::vector<std::pair<char, std::size_t>> slot_owner;  // (side, attaching arc) per merged slot
  std::size_t next_l = 0, next_r = 0;
  for (char c : spec.interleaving) {
    if (c == 'L') {
      for (std::size_t s : spec.left.components()[next_l]) {
        const Slot& slot = left.disks()[spec.left.disk()].slots[s];
        merged.slots.push_back(SlotRecord{left.bands()[slot.band].id, slot.end});
        slot_owner.emplace_back('L', next_l);
      }
      ++next_l;
    } else {
      for (std::size_t s : spec.right.components()[next_r]) {
        const Slot& slot = right.disks()[spec.right.disk()].slots[s];
        merged.slots.push_back(SlotRecord{right_band_ids[slot.band], slot.end});
        slot_owner.emplace_back('R', next_r);
      }
      ++next_r;
    }
  }

  std::vector<DiskRecord> disks = left.disk_records();
  disks[spec.left.disk()] = merged;
  std::vector<BandRecord> bands = left.band_records();

  SumResult out;
  out.left_bands.resize(left.band_count());
  out.left_disks.resize(left.disk_count());
  for (std::size_t b = 0; b < left.band_count(); ++b) out.left_bands[b] = b;
  for (std::size_t d = 0; d < left.disk_count(); ++d) out.left_disks[d] = d;

  out.right_disks.resize(right.disk_count());
  const auto right_records = right.disk_records();
  for (std::size_t d = 0; d < right.disk_count(); ++d) {
    if (d == spec.right.disk()) {
      out.right_disks[d] = spec.left.disk();
      continue;
    }
    DiskRecord rec{right_disk_ids[d], {}};
    for (const auto& slot : right.disks()[d].slots) rec.slots.push_back(SlotRecord{right_band_ids[slot.band], slot.end});
    out.right_disks[d] = disks.size();
    disks.push_back(std::move(rec));
  }
  out.right_bands.resize(right.band_count());
  for (std::size_t b = 0; b < right.band_count(); ++b) {
    out.right_bands[b] = bands.size();
    bands.push_back(BandRecord{right_band_ids[b], right.bands()[b].half_twists});
  }

  out.surface = std::make_shared<const RibbonSurface>(RibbonSurface::build(disks, bands));

  std::vector<std::size_t> attach;
  for (std::size_t s = 0; s < slot_owner.size(); ++s) {
    attach.push_back(2 * s);
    if (s + 1 < slot_owner.size() && slot_owner[s + 1] == slot_owner[s]) attach.push_back(2 * s + 1);
  }
  out.patch = make_patch(out.surface, merged.id, attach);
  return out;
}

SumSpec swapped(const SumSpec& spec) {
  std::string word = spec.interleaving;
  for (char& c : word) c = c == 'L' ? 'R' : (c == 'R' ? 'L' : c);
  return SumSpec{spec.right, spec.left, word};
}

}  // namespace obk
