#include "obk/mapclass.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "obk/error.hpp"

namespace obk {

namespace {

std::size_t from_disk(const RibbonSurface& s, const CycleStep& step) {
  return s.bands()[step.band].ends[step.forward ? 0 : 1].disk;
}

std::size_t to_disk(const RibbonSurface& s, const CycleStep& step) {
  return s.bands()[step.band].ends[step.forward ? 1 : 0].disk;
}

void validate_walk(const RibbonSurface& s, const Cycle& c) {
  if (c.empty()) throw Error(ErrorKind::InvalidCycle, "empty cycle");
  for (const auto& step : c)
    if (step.band >= s.band_count()) throw Error(ErrorKind::InvalidCycle, "cycle uses unknown band");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& next = c[(i + 1) % c.size()];
    if (to_disk(s, c[i]) != from_disk(s, next)) throw Error(ErrorKind::InvalidCycle, "cycle is not a closed walk");
  }
}

// Chord of a walk across one disk, between two points on the disk boundary.
// Point 2p + sub lies inside slot p; each band carries two lanes, and a lane
// keeps its side of the band from one end to the other.
struct Chord {
  std::size_t disk;
  std::size_t entry;
  std::size_t exit;
};

std::size_t lane_point(const RibbonSurface& s, std::size_t band, int end, int lane) {
  const BandEnd& be = s.bands()[band].ends[static_cast<std::size_t>(end)];
  const int sub = end == 0 ? lane : 1 - lane;
  return 2 * be.position + static_cast<std::size_t>(sub);
}

std::vector<Chord> chords(const RibbonSurface& s, const Cycle& c, int lane) {
  std::vector<Chord> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& in = c[i];
    const auto& next = c[(i + 1) % c.size()];
    out.push_back(Chord{to_disk(s, in), lane_point(s, in.band, in.forward ? 1 : 0, lane),
                        lane_point(s, next.band, next.forward ? 0 : 1, lane)});
  }
  return out;
}

bool strictly_between(std::size_t from, std::size_t to, std::size_t x, std::size_t n) {
  if (x == from || x == to) return false;
  return (x + n - from) % n < (to + n - from) % n;
}

Int intersection_normalized(const RibbonSurface& s, const Cycle& x, const Cycle& y) {
  const auto cx = chords(s, x, 0);
  const auto cy = chords(s, y, 1);
  Int total = 0;
  for (const auto& a : cx)
    for (const auto& b : cy) {
      if (a.disk != b.disk) continue;
      const std::size_t n = 2 * s.disks()[a.disk].slots.size();
      const bool r_in = strictly_between(a.entry, a.exit, b.entry, n);
      const bool s_in = strictly_between(a.entry, a.exit, b.exit, n);
      if (r_in == s_in) continue;
      // b crosses a from its right-hand side (the counterclockwise arc) to
      // its left: positive.
      total += r_in ? 1 : -1;
    }
  return total;
}

}  // namespace

std::vector<Int> cycle_vector(const RibbonSurface& s, const Cycle& c) {
  validate_walk(s, c);
  std::vector<Int> v(s.band_count(), 0);
  for (const auto& step : c) v[step.band] += step.forward ? 1 : -1;
  return v;
}

Int intersection_number(const RibbonSurface& s, const Cycle& x, const Cycle& y) {
  validate_walk(s, x);
  validate_walk(s, y);
  return intersection_normalized(oriented_normal_form(s), x, y);
}

std::size_t homology_rank(const RibbonSurface& s) {
  return s.band_count() + component_count(s) - s.disk_count();
}

HomologyData HomologyData::from_basis(SurfacePtr surface, std::vector<Cycle> basis) {
  if (!surface) throw Error(ErrorKind::InvalidCycle, "homology without surface");
  const RibbonSurface normal = oriented_normal_form(*surface);
  HomologyData h;
  h.surface_ = std::move(surface);
  h.basis_ = std::move(basis);
  const std::size_t r = h.basis_.size();
  if (r != homology_rank(*h.surface_))
    throw Error(ErrorKind::InvalidCycle, "basis has " + std::to_string(r) + " cycles, rank is " +
                                             std::to_string(homology_rank(*h.surface_)));
  h.cycle_matrix_ = IntMatrix(h.surface_->band_count(), r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto v = cycle_vector(*h.surface_, h.basis_[j]);
    for (std::size_t b = 0; b < v.size(); ++b) h.cycle_matrix_(b, j) = v[b];
  }
  if (obk::rank(h.cycle_matrix_) != r) throw Error(ErrorKind::InvalidCycle, "basis cycles are dependent");
  h.intersection_ = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const Int v = intersection_normalized(normal, h.basis_[i], h.basis_[j]);
      h.intersection_(i, j) = v;
      h.intersection_(j, i) = -v;
    }
  return h;
}

std::vector<Int> HomologyData::coordinates(const Cycle& c) const {
  const auto v = cycle_vector(*surface_, c);
  auto x = solve_integer(cycle_matrix_, v);
  if (!x) throw Error(ErrorKind::CycleNotInSpan, "walk is not an integral combination of the basis");
  return *x;
}

Int HomologyData::pairing(std::span<const Int> x, std::span<const Int> y) const {
  const auto jy = intersection_ * y;
  Int total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total = checked_add(total, checked_mul(x[i], jy[i]));
  return total;
}

HomologyPtr homology_basis(SurfacePtr surface) {
  const RibbonSurface& s = *surface;
  // Groups of parallel bands keyed by disk pair, in order of first band.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> group_of;
  struct Group {
    std::size_t lo, hi;
    std::vector<std::size_t> bands;
    bool loop;
  };
  std::vector<Group> groups;
  for (std::size_t b = 0; b < s.band_count(); ++b) {
    const auto a = s.bands()[b].ends[0].disk, c = s.bands()[b].ends[1].disk;
    if (a == c) {
      groups.push_back(Group{a, a, {b}, true});
      continue;
    }
    const auto key = std::minmax(a, c);
    auto [it, fresh] = group_of.emplace(key, groups.size());
    if (fresh) groups.push_back(Group{key.first, key.second, {}, false});
    groups[it->second].bands.push_back(b);
  }

  std::vector<std::size_t> parent(s.disk_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree(s.disk_count());  // (neighbour, band)
  std::vector<bool> in_tree(groups.size(), false);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].loop) continue;
    const auto a = find(groups[g].lo), c = find(groups[g].hi);
    if (a == c) continue;
    parent[a] = c;
    in_tree[g] = true;
    const auto b = groups[g].bands.front();
    tree[groups[g].lo].emplace_back(groups[g].hi, b);
    tree[groups[g].hi].emplace_back(groups[g].lo, b);
  }

  auto step_from = [&](std::size_t band, std::size_t disk) {
    return CycleStep{band, s.bands()[band].ends[0].disk == disk};
  };
  auto tree_path = [&](std::size_t from, std::size_t to) {
    std::vector<std::pair<std::size_t, std::size_t>> via(s.disk_count(), {SIZE_MAX, SIZE_MAX});
    std::deque<std::size_t> queue{from};
    via[from] = {from, SIZE_MAX};
    while (!queue.empty()) {
      const auto d = queue.front();
      queue.pop_front();
      for (const auto& [e, band] : tree[d])
        if (via[e].first == SIZE_MAX) {
          via[e] = {d, band};
          queue.push_back(e);
        }
    }
    Cycle path;
    for (std::size_t d = to; d != from; d = via[d].first) path.push_back(step_from(via[d].second, via[d].first));
    std::reverse(path.begin(), path.end());
    return path;
  };

  std::vector<Cycle> basis;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& grp = groups[g];
    if (grp.loop) {
      basis.push_back(Cycle{CycleStep{grp.bands.front(), true}});
      continue;
    }
    for (std::size_t m = 0; m + 1 < grp.bands.size(); ++m)
      basis.push_back(Cycle{step_from(grp.bands[m], grp.lo), step_from(grp.bands[m + 1], grp.hi)});
    if (!in_tree[g]) {
      Cycle c{step_from(grp.bands.front(), grp.lo)};
      const auto back = tree_path(grp.hi, grp.lo);
      c.insert(c.end(), back.begin(), back.end());
      basis.push_back(std::move(c));
    }
  }
  return std::make_shared<const HomologyData>(HomologyData::from_basis(std::move(surface), std::move(basis)));
}

IntMatrix transvection(const HomologyData& h, std::span<const Int> curve, int sign) {
  const std::size_t r = h.rank();
  if (curve.size() != r) throw Error(ErrorKind::DimensionMismatch, "twist curve has wrong length");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::DimensionMismatch, "twist sign must be +1 or -1");
  const auto jc = h.intersection() * curve;
  IntMatrix t = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) t(i, j) = checked_add(t(i, j), checked_mul(sign * curve[i], jc[j]));
  return t;
}

MappingClass MappingClass::identity(HomologyPtr h) { return from_word(std::move(h), {}); }

MappingClass MappingClass::from_word(HomologyPtr h, std::vector<TwistLetter> word) {
  MappingClass m;
  m.matrix_ = IntMatrix::identity(h->rank());
  for (const auto& letter : word) m.matrix_ = m.matrix_ * transvection(*h, letter.curve, letter.sign);
  m.homology_ = std::move(h);
  m.word_ = std::move(word);
  return m;
}

MappingClass dehn_twist(HomologyPtr h, std::size_t basis_index, int sign) {
  if (basis_index >= h->rank()) throw Error(ErrorKind::CycleNotInSpan, "no basis cycle " + std::to_string(basis_index));
  std::vector<Int> curve(h->rank(), 0);
  curve[basis_index] = 1;
  return dehn_twist(std::move(h), std::move(curve), sign);
}

MappingClass dehn_twist(HomologyPtr h, std::vector<Int> curve, int sign) {
  if (curve.size() != h->rank()) throw Error(ErrorKind::CycleNotInSpan, "curve has wrong number of coordinates");
  return MappingClass::from_word(std::move(h), {TwistLetter{std::move(curve), sign}});
}

MappingClass dehn_twist(HomologyPtr h, const Cycle& walk, int sign) {
  auto curve = h->coordinates(walk);
  return dehn_twist(std::move(h), std::move(curve), sign);
}

MappingClass compose(const MappingClass& first, const MappingClass& second) {
  if (first.homology() != second.homology() && !(*first.homology() == *second.homology()))
    throw Error(ErrorKind::SurfaceMismatch, "mapping classes live on different surfaces");
  auto word = first.word();
  word.insert(word.end(), second.word().begin(), second.word().end());
  return MappingClass::from_word(first.homology(), std::move(word));
}

MappingClass inverse(const MappingClass& phi) {
  std::vector<TwistLetter> word(phi.word().rbegin(), phi.word().rend());
  for (auto& letter : word) letter.sign = -letter.sign;
  return MappingClass::from_word(phi.homology(), std::move(word));
}

Polynomial char_poly(const MappingClass& phi) { return characteristic_polynomial(phi.matrix()); }

MappingClass extend_by_identity(const MappingClass& phi, HomologyPtr target,
                                const std::vector<std::size_t>& embedding) {
  const HomologyData& source = *phi.homology();
  if (embedding.size() != source.rank())
    throw Error(ErrorKind::BasisEmbeddingMissing, "embedding covers " + std::to_string(embedding.size()) + " of " +
                                                      std::to_string(source.rank()) + " basis cycles");
  std::set<std::size_t> used;
  for (auto e : embedding)
    if (e >= target->rank() || !used.insert(e).second)
      throw Error(ErrorKind::BasisEmbeddingMissing, "embedding is not injective into the target basis");
  for (std::size_t i = 0; i < embedding.size(); ++i)
    for (std::size_t j = 0; j < embedding.size(); ++j)
      if (source.intersection()(i, j) != target->intersection()(embedding[i], embedding[j]))
        throw Error(ErrorKind::BasisEmbeddingMissing, "embedding does not preserve the intersection form");
  std::vector<TwistLetter> word;
  for (const auto& letter : phi.word()) {
    std::vector<Int> curve(target->rank(), 0);
    for (std::size_t i = 0; i < letter.curve.size(); ++i) curve[embedding[i]] = letter.curve[i];
    word.push_back(TwistLetter{std::move(curve), letter.sign});
  }
  return MappingClass::from_word(std::move(target), std::move(word));
}

SumHomology sum_homology(const SumResult& sum, const HomologyData& left, const HomologyData& right) {
  if (left.surface()->band_count() != sum.left_bands.size() || right.surface()->band_count() != sum.right_bands.size())
    throw Error(ErrorKind::BasisEmbeddingMissing, "homology data does not belong to the summed surfaces");
  std::vector<Cycle> basis;
  auto transport = [&](const HomologyData& h, const std::vector<std::size_t>& band_map) {
    for (const auto& c : h.basis()) {
      Cycle moved;
      for (const auto& step : c) moved.push_back(CycleStep{band_map[step.band], step.forward});
      basis.push_back(std::move(moved));
    }
  };
  transport(left, sum.left_bands);
  transport(right, sum.right_bands);
  SumHomology out;
  out.homology = std::make_shared<const HomologyData>(HomologyData::from_basis(sum.surface, std::move(basis)));
  for (std::size_t i = 0; i < left.rank(); ++i) out.left_embedding.push_back(i);
  for (std::size_t i = 0; i < right.rank(); ++i) out.right_embedding.push_back(left.rank() + i);
  return out;
}

}  // namespace obk
