#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "obk/mapclass.hpp"
#include "obk/patching.hpp"

namespace obk {

using Rational = boost::rational<Int>;

/// Page plus geometric monodromy, the monodromy known through its twist
/// word and homology action.
class AbstractOpenBook {
 public:
  /// Throws ClosedComponent if a page component has empty boundary.
  explicit AbstractOpenBook(MappingClass monodromy);

  const SurfacePtr& page() const noexcept { return monodromy_.homology()->surface(); }
  const HomologyPtr& page_homology() const noexcept { return monodromy_.homology(); }
  const MappingClass& monodromy() const noexcept { return monodromy_; }

 private:
  MappingClass monodromy_;
};

/// Twist letter about basis cycle `index` (0-based).
TwistLetter basis_twist(std::size_t rank, std::size_t index, int sign);

/// Book on `page` with the default homology basis.
AbstractOpenBook open_book(SurfacePtr page, std::vector<TwistLetter> word);
/// Same, word given as (basis index, sign) pairs.
AbstractOpenBook open_book(SurfacePtr page, const std::vector<std::pair<std::size_t, int>>& word);

struct OpenBookSum {
  AbstractOpenBook book;
  SumResult sum;
  SumHomology homology;
};

/// Page = abstract sum, monodromy = ext(phi1) o ext(phi2). The spec's
/// patches must sit on the two pages. Throws NotSummable.
OpenBookSum sum_open_books(const AbstractOpenBook& first, const AbstractOpenBook& second, const SumSpec& spec);
AbstractOpenBook open_book_sum(const AbstractOpenBook& first, const AbstractOpenBook& second, const SumSpec& spec);

/// Page primitive_s_surface(n, sign), monodromy the product of sign-twists
/// about the n-1 consecutive-band cycles.
AbstractOpenBook primitive_open_book(int n, int sign);

struct CriticalPoint {
  int index = 1;
  Rational angle{1, 2};  // position of the critical value on the circle, in (0, 1)
  friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

struct CoreArc {
  Rational lo;
  Rational hi;
  friend bool operator==(const CoreArc&, const CoreArc&) = default;
};

/// Open book allowed Morse critical points away from the binding. Without
/// a page it is a purely symbolic record of critical data in ambient
/// dimension w.
class MorseOpenBook {
 public:
  /// Throws InvalidCriticalPoint for indices outside [1, w-1] or angles
  /// outside (0, 1); DimensionMismatch if a page is given with w != 3.
  MorseOpenBook(std::optional<AbstractOpenBook> book, int ambient_dim, std::vector<CriticalPoint> critical);

  const std::optional<AbstractOpenBook>& book() const noexcept { return book_; }
  int ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<CriticalPoint>& critical_points() const noexcept { return critical_; }
  bool is_honest() const noexcept { return critical_.empty(); }

 private:
  std::optional<AbstractOpenBook> book_;
  int ambient_dim_;
  std::vector<CriticalPoint> critical_;
};

/// m_k upper-bound witnesses, k = 1 .. w-1 stored at [k-1].
struct MorseNumbers {
  std::vector<Int> counts;
  bool all_zero() const;
  friend bool operator==(const MorseNumbers&, const MorseNumbers&) = default;
};

MorseNumbers morse_numbers(const MorseOpenBook& m);

/// Default cores: the first book's critical values go to (1/2, 1), the
/// second's to (0, 1/2).
inline const CoreArc kFirstCore{Rational(1, 2), Rational(1)};
inline const CoreArc kSecondCore{Rational(0), Rational(1, 2)};

/// Sum with the critical multigerms placed in disjoint core arcs. Throws
/// NotSummable, AngleCollision, DimensionMismatch.
MorseOpenBook morse_sum(const MorseOpenBook& first, const MorseOpenBook& second, const SumSpec& spec,
                        const CoreArc& first_core = kFirstCore, const CoreArc& second_core = kSecondCore);
/// Symbolic sum of two pageless books.
MorseOpenBook morse_sum(const MorseOpenBook& first, const MorseOpenBook& second,
                        const CoreArc& first_core = kFirstCore, const CoreArc& second_core = kSecondCore);

}  // namespace obk
