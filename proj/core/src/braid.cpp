#include "obk/braid.hpp"

#include <numeric>
#include <sstream>

#include "obk/error.hpp"

namespace obk {

BraidWord make_braid(int strands, std::vector<int> letters) {
  if (strands < 2) throw Error(ErrorKind::IndexOutOfRange, "a braid needs at least 2 strands");
  if (letters.empty()) throw Error(ErrorKind::ParseError, "empty braid word");
  for (int l : letters) {
    if (l == 0) throw Error(ErrorKind::ParseError, "braid letters are nonzero");
    if (std::abs(l) > strands - 1)
      throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(l) + " on " + std::to_string(strands) + " strands");
  }
  return BraidWord{strands, std::move(letters)};
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not an integer: " + token);
    }
    if (used != token.size()) throw Error(ErrorKind::ParseError, "not an integer: " + token);
    letters.push_back(value);
  }
  return make_braid(strands, std::move(letters));
}

std::string to_string(const BraidWord& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < b.letters.size(); ++i) os << (i ? " " : "") << b.letters[i];
  return os.str();
}

bool is_homogeneous(const BraidWord& b) {
  std::vector<int> sign(static_cast<std::size_t>(b.strands), 0);
  for (int l : b.letters) {
    auto& s = sign[static_cast<std::size_t>(std::abs(l))];
    const int here = l > 0 ? 1 : -1;
    if (s != 0 && s != here) return false;
    s = here;
  }
  return true;
}

bool uses_all_generators(const BraidWord& b) {
  std::vector<bool> seen(static_cast<std::size_t>(b.strands), false);
  for (int l : b.letters) seen[static_cast<std::size_t>(std::abs(l))] = true;
  for (int g = 1; g < b.strands; ++g)
    if (!seen[static_cast<std::size_t>(g)]) return false;
  return true;
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : b.letters) {
    const auto g = static_cast<std::size_t>(std::abs(l));
    std::swap(perm[g - 1], perm[g]);
  }
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

RibbonSurface bennequin_surface(const BraidWord& b) {
  std::vector<DiskRecord> disks;
  for (int i = 1; i <= b.strands; ++i) disks.push_back(DiskRecord{"S" + std::to_string(i), {}});
  std::vector<BandRecord> bands;
  for (std::size_t k = 0; k < b.letters.size(); ++k) {
    const int l = b.letters[k];
    const auto g = static_cast<std::size_t>(std::abs(l));
    const std::string id = "X" + std::to_string(k + 1);
    bands.push_back(BandRecord{id, l > 0 ? 2 : -2});
    disks[g - 1].slots.push_back(SlotRecord{id, 0});
    disks[g].slots.push_back(SlotRecord{id, 1});
  }
  return RibbonSurface::build(disks, bands);
}

SDecomposition s_decomposition(const BraidWord& b) {
  if (!is_homogeneous(b)) throw Error(ErrorKind::NotHomogeneous, to_string(b));
  if (!uses_all_generators(b)) throw Error(ErrorKind::MissingGenerator, to_string(b));
  SDecomposition out;
  for (int g = 1; g < b.strands; ++g) {
    PrimitiveType t{0, 1};
    for (int l : b.letters)
      if (std::abs(l) == g) {
        ++t.n;
        t.sign = l > 0 ? 1 : -1;
      }
    out.pieces.push_back(t);
  }
  for (int g = 1; g + 1 < b.strands; ++g) {
    std::string word;
    for (int l : b.letters) {
      if (std::abs(l) == g) word += 'L';
      if (std::abs(l) == g + 1) word += 'R';
    }
    out.interleavings.push_back(std::move(word));
  }
  return out;
}

AbstractOpenBook stallings_open_book(const BraidWord& b) {
  const auto dec = s_decomposition(b);
  AbstractOpenBook acc = primitive_open_book(dec.pieces.front().n, dec.pieces.front().sign);
  std::string bottom = "D2";
  for (std::size_t j = 1; j < dec.pieces.size(); ++j) {
    const AbstractOpenBook piece = primitive_open_book(dec.pieces[j].n, dec.pieces[j].sign);
    SumSpec spec{make_slot_patch(acc.page(), bottom), make_slot_patch(piece.page(), "D1"), dec.interleavings[j - 1]};
    auto summed = sum_open_books(acc, piece, spec);
    const auto piece_bottom = *piece.page()->find_disk("D2");
    bottom = summed.sum.surface->disks()[summed.sum.right_disks[piece_bottom]].id;
    acc = std::move(summed.book);
  }
  return acc;
}

}  // namespace obk
