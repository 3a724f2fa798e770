#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "obk/openbook.hpp"
#include "obk/surface.hpp"

namespace obk {

/// Word in the standard braid generators: letter i > 0 is sigma_i, i < 0 is
/// sigma_|i|^-1. Strands are numbered top-down, the closure runs left to
/// right.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Validated word. Throws ParseError (empty word, zero letter),
/// IndexOutOfRange.
BraidWord make_braid(int strands, std::vector<int> letters);

/// Whitespace-separated nonzero integers. Throws ParseError, IndexOutOfRange.
BraidWord parse_braid(std::string_view text, int strands);

std::string to_string(const BraidWord& b);

bool is_homogeneous(const BraidWord& b);

/// True when every generator 1..n-1 occurs.
bool uses_all_generators(const BraidWord& b);

/// Number of components of the closure: cycles of the underlying
/// permutation.
int closure_components(const BraidWord& b);

/// One disk per strand (S1..Sn), one band per letter (X1..Xc) from S_|i| to
/// S_|i|+1 carrying 2*sign half-twists; slots follow the word order.
RibbonSurface bennequin_surface(const BraidWord& b);

struct PrimitiveType {
  int n = 0;
  int sign = 1;
  friend bool operator==(const PrimitiveType&, const PrimitiveType&) = default;
};

/// Primitive pieces per generator, and the interleaving words that glue
/// piece j (bottom disk, L) to piece j+1 (top disk, R).
struct SDecomposition {
  std::vector<PrimitiveType> pieces;
  std::vector<std::string> interleavings;
};

/// Throws NotHomogeneous, MissingGenerator.
SDecomposition s_decomposition(const BraidWord& b);

/// Left fold of open-book sums over the s-decomposition. Throws
/// NotHomogeneous, MissingGenerator.
AbstractOpenBook stallings_open_book(const BraidWord& b);

}  // namespace obk
