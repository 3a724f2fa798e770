#include "obk/embedded.hpp"

#include <algorithm>

#include "obk/error.hpp"

namespace obk {

SeifertData::SeifertData(HomologyPtr homology, IntMatrix seifert_matrix)
    : homology_(std::move(homology)), seifert_(std::move(seifert_matrix)) {
  if (component_count(*homology_->surface()) != 1)
    throw Error(ErrorKind::NotConnected, "Seifert data needs a connected surface");
  if (!seifert_.is_square() || seifert_.rows() != homology_->rank())
    throw Error(ErrorKind::DimensionMismatch, "Seifert matrix size does not match the homology rank");
  if (seifert_ - seifert_.transposed() != homology_->intersection())
    throw Error(ErrorKind::SkewMismatch, "V - V^T = " + (seifert_ - seifert_.transposed()).to_string() +
                                             " but J = " + homology_->intersection().to_string());
}

namespace {

// Chain placement: two consecutive cycles sharing a band of sign s. A
// positive band puts the linking above the diagonal, a negative one below.
void place_chain(IntMatrix& v, std::size_t earlier, std::size_t later, int shared_sign) {
  if (shared_sign > 0)
    v(earlier, later) = 1;
  else
    v(later, earlier) = -1;
}

}  // namespace

SeifertData seifert_matrix_primitive(int n, int sign) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "primitive s-surface needs n >= 1");
  auto page = std::make_shared<const RibbonSurface>(primitive_s_surface(n, sign));
  auto h = homology_basis(page);
  const auto r = static_cast<std::size_t>(n - 1);
  IntMatrix v(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    v(i, i) = -sign;
    if (i + 1 < r) place_chain(v, i, i + 1, sign);
  }
  return SeifertData(std::move(h), std::move(v));
}

SeifertData seifert_matrix_bennequin(const BraidWord& b) {
  if (!uses_all_generators(b)) throw Error(ErrorKind::DisconnectedSurface, "every generator must occur");
  auto page = std::make_shared<const RibbonSurface>(bennequin_surface(b));
  auto h = homology_basis(page);
  // Band k is letter k; each basis cycle runs down band a and back up band b.
  struct Span {
    int generator;
    std::size_t a, b;
  };
  std::vector<Span> spans;
  for (const auto& c : h->basis()) {
    if (c.size() != 2) throw Error(ErrorKind::InvalidCycle, "unexpected Bennequin basis cycle");
    const auto a = std::min(c[0].band, c[1].band), z = std::max(c[0].band, c[1].band);
    spans.push_back(Span{std::abs(b.letters[a]), a, z});
  }
  auto sign_of = [&](std::size_t k) { return b.letters[k] > 0 ? 1 : -1; };
  const std::size_t r = spans.size();
  IntMatrix v(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& u = spans[i];
    v(i, i) = -(sign_of(u.a) + sign_of(u.b)) / 2;
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      const auto& w = spans[j];
      if (w.generator == u.generator && u.b == w.a) {
        place_chain(v, i, j, sign_of(u.b));
      } else if (w.generator == u.generator + 1) {
        // u lies in the piece above w: only the pushoff of w links u.
        if (u.a < w.a && w.a < u.b && u.b < w.b) v(j, i) = 1;
        if (w.a < u.a && u.a < w.b && w.b < u.b) v(j, i) = -1;
      }
    }
  }
  return SeifertData(std::move(h), std::move(v));
}

ChordDiagram chords_for(const SumSpec& spec, const HomologyData& left, const HomologyData& right) {
  if (left.surface() != spec.left.host() || right.surface() != spec.right.host())
    throw Error(ErrorKind::NotSummable, "homology data does not sit on the patched surfaces");
  std::vector<std::size_t> l_pos, r_pos;
  for (std::size_t i = 0; i < spec.interleaving.size(); ++i)
    (spec.interleaving[i] == 'L' ? l_pos : r_pos).push_back(i);
  auto trace = [](const Patch& patch, const HomologyData& h, const std::vector<std::size_t>& pos) {
    const RibbonSurface& s = *h.surface();
    std::vector<std::vector<Chord>> out;
    for (const auto& c : h.basis()) {
      std::vector<Chord> chords;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& in = c[i];
        const auto& next = c[(i + 1) % c.size()];
        const BandEnd& arrive = s.bands()[in.band].ends[in.forward ? 1 : 0];
        if (arrive.disk != patch.disk()) continue;
        const BandEnd& leave = s.bands()[next.band].ends[next.forward ? 0 : 1];
        chords.push_back(Chord{pos.at(patch.component_of_slot(arrive.position)),
                               pos.at(patch.component_of_slot(leave.position))});
      }
      out.push_back(std::move(chords));
    }
    return out;
  };
  return ChordDiagram{trace(spec.left, left, l_pos), trace(spec.right, right, r_pos)};
}

IntMatrix coupling_block(const SumSpec& spec, const ChordDiagram& chords) {
  const auto& word = spec.interleaving;
  const std::size_t n = word.size();
  auto check = [&](const Chord& c, char letter) {
    if (c.from >= n || c.to >= n || word[c.from] != letter || word[c.to] != letter)
      throw Error(ErrorKind::InvalidChord, "chord endpoint is not an attaching arc of its summand");
  };
  for (const auto& list : chords.left)
    for (const auto& c : list) check(c, 'L');
  for (const auto& list : chords.right)
    for (const auto& c : list) check(c, 'R');
  auto between = [n](std::size_t from, std::size_t to, std::size_t x) {
    if (x == from || x == to) return false;
    return (x + n - from) % n < (to + n - from) % n;
  };
  IntMatrix c(chords.left.size(), chords.right.size());
  for (std::size_t i = 0; i < chords.left.size(); ++i)
    for (std::size_t j = 0; j < chords.right.size(); ++j)
      for (const auto& a : chords.left[i])
        for (const auto& b : chords.right[j]) {
          const bool r_in = between(a.from, a.to, b.from);
          const bool s_in = between(a.from, a.to, b.to);
          if (r_in != s_in) c(i, j) += r_in ? 1 : -1;
        }
  return c;
}

EmbeddedSum embedded_sum_detailed(const SeifertData& left, const SeifertData& right, const SumSpec& spec,
                                  const ChordDiagram& chords, SumOrder order) {
  if (left.surface() != spec.left.host() || right.surface() != spec.right.host())
    throw Error(ErrorKind::NotSummable, "Seifert data does not sit on the patched surfaces");
  if (chords.left.size() != left.rank() || chords.right.size() != right.rank())
    throw Error(ErrorKind::InvalidChord, "chord diagram does not match the summand bases");
  SumResult sum = abstract_sum(spec);
  SumHomology h = sum_homology(sum, *left.homology(), *right.homology());
  const IntMatrix c = coupling_block(spec, chords);
  const std::size_t r1 = left.rank(), r2 = right.rank();
  IntMatrix v(r1 + r2, r1 + r2);
  v.set_block(0, 0, left.seifert_matrix());
  v.set_block(r1, r1, right.seifert_matrix());
  if (order == SumOrder::LeftFirst)
    v.set_block(0, r1, c);
  else
    v.set_block(r1, 0, -c.transposed());
  SeifertData data(h.homology, std::move(v));
  return EmbeddedSum{std::move(data), std::move(sum), std::move(h)};
}

SeifertData embedded_sum(const SeifertData& left, const SeifertData& right, const SumSpec& spec,
                         const ChordDiagram& chords, SumOrder order) {
  return embedded_sum_detailed(left, right, spec, chords, order).data;
}

Polynomial alexander(const SeifertData& d) {
  const IntMatrix& v = d.seifert_matrix();
  return pencil_determinant(v.transposed(), -v).normalized();
}

IntMatrix homological_monodromy(const SeifertData& d) {
  const IntMatrix& v = d.seifert_matrix();
  return unimodular_inverse(v) * v.transposed();
}

int order_invariant(const SeifertData& left, const SeifertData& right, const SumSpec& spec, const ChordDiagram& chords,
                    SumOrder order) {
  auto core = [](const std::vector<std::vector<Chord>>& lists) {
    for (std::size_t i = 0; i < lists.size(); ++i)
      if (lists[i].size() == 1) return i;
    throw Error(ErrorKind::NoCoreCycle, "no basis cycle crosses the patch exactly once");
  };
  const auto k1 = core(chords.left);
  const auto k2 = core(chords.right);
  const auto sum = embedded_sum(left, right, spec, chords, order);
  const Int lk = sum.seifert_matrix()(k1, left.rank() + k2);
  return static_cast<int>(((lk % 2) + 2) % 2);
}

bool fiberedness_necessary(const SeifertData& d) {
  const Int det = determinant(d.seifert_matrix());
  if (det != 1 && det != -1) return false;
  return alexander(d).degree() == static_cast<int>(d.rank());
}

}  // namespace obk
