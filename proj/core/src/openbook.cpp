#include "obk/openbook.hpp"

#include <algorithm>

#include "obk/error.hpp"

namespace obk {

AbstractOpenBook::AbstractOpenBook(MappingClass monodromy) : monodromy_(std::move(monodromy)) {
  for (int count : boundary_count_per_component(*page()))
    if (count == 0) throw Error(ErrorKind::ClosedComponent, "every page component needs boundary");
}

TwistLetter basis_twist(std::size_t rank, std::size_t index, int sign) {
  if (index >= rank) throw Error(ErrorKind::CycleNotInSpan, "no basis cycle " + std::to_string(index));
  std::vector<Int> curve(rank, 0);
  curve[index] = 1;
  return TwistLetter{std::move(curve), sign};
}

AbstractOpenBook open_book(SurfacePtr page, std::vector<TwistLetter> word) {
  auto h = homology_basis(std::move(page));
  return AbstractOpenBook(MappingClass::from_word(std::move(h), std::move(word)));
}

AbstractOpenBook open_book(SurfacePtr page, const std::vector<std::pair<std::size_t, int>>& word) {
  auto h = homology_basis(std::move(page));
  std::vector<TwistLetter> letters;
  for (const auto& [index, sign] : word) letters.push_back(basis_twist(h->rank(), index, sign));
  return AbstractOpenBook(MappingClass::from_word(std::move(h), std::move(letters)));
}

OpenBookSum sum_open_books(const AbstractOpenBook& first, const AbstractOpenBook& second, const SumSpec& spec) {
  if (spec.left.host() != first.page() || spec.right.host() != second.page())
    throw Error(ErrorKind::NotSummable, "patches do not sit on the two pages");
  SumResult sum = abstract_sum(spec);
  SumHomology h = sum_homology(sum, *first.page_homology(), *second.page_homology());
  const auto phi1 = extend_by_identity(first.monodromy(), h.homology, h.left_embedding);
  const auto phi2 = extend_by_identity(second.monodromy(), h.homology, h.right_embedding);
  return OpenBookSum{AbstractOpenBook(compose(phi1, phi2)), std::move(sum), std::move(h)};
}

AbstractOpenBook open_book_sum(const AbstractOpenBook& first, const AbstractOpenBook& second, const SumSpec& spec) {
  return sum_open_books(first, second, spec).book;
}

AbstractOpenBook primitive_open_book(int n, int sign) {
  auto page = std::make_shared<const RibbonSurface>(primitive_s_surface(n, sign));
  // Positive pieces twist about c_0 first and c_{n-2} last; a negative
  // piece carries the inverse of that product.
  std::vector<std::pair<std::size_t, int>> word;
  for (int i = 0; i + 1 < n; ++i) word.emplace_back(static_cast<std::size_t>(i), sign);
  if (sign > 0) std::reverse(word.begin(), word.end());
  return open_book(std::move(page), word);
}

MorseOpenBook::MorseOpenBook(std::optional<AbstractOpenBook> book, int ambient_dim, std::vector<CriticalPoint> critical)
    : book_(std::move(book)), ambient_dim_(ambient_dim), critical_(std::move(critical)) {
  if (ambient_dim_ < 2) throw Error(ErrorKind::DimensionMismatch, "ambient dimension must be at least 2");
  if (book_ && ambient_dim_ != 3) throw Error(ErrorKind::DimensionMismatch, "surface pages live in dimension 3");
  for (const auto& p : critical_) {
    if (p.index < 1 || p.index > ambient_dim_ - 1)
      throw Error(ErrorKind::InvalidCriticalPoint, "index " + std::to_string(p.index) + " out of range");
    if (p.angle <= Rational(0) || p.angle >= Rational(1))
      throw Error(ErrorKind::InvalidCriticalPoint, "critical angle must lie strictly between 0 and 1");
  }
}

bool MorseNumbers::all_zero() const {
  return std::all_of(counts.begin(), counts.end(), [](Int c) { return c == 0; });
}

MorseNumbers morse_numbers(const MorseOpenBook& m) {
  MorseNumbers out{std::vector<Int>(static_cast<std::size_t>(m.ambient_dim() - 1), 0)};
  for (const auto& p : m.critical_points()) ++out.counts[static_cast<std::size_t>(p.index - 1)];
  return out;
}

namespace {

std::vector<CriticalPoint> merge_critical(const MorseOpenBook& first, const MorseOpenBook& second,
                                          const CoreArc& first_core, const CoreArc& second_core) {
  if (first.ambient_dim() != second.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "Morse books of different ambient dimension");
  for (const auto* core : {&first_core, &second_core})
    if (core->lo < Rational(0) || core->hi > Rational(1) || core->lo >= core->hi)
      throw Error(ErrorKind::AngleCollision, "core arc must be a nonempty subinterval of [0, 1]");
  if (first_core.lo < second_core.hi && second_core.lo < first_core.hi)
    throw Error(ErrorKind::AngleCollision, "core arcs overlap");
  std::vector<CriticalPoint> out;
  auto place = [&](const MorseOpenBook& m, const CoreArc& core) {
    for (const auto& p : m.critical_points())
      out.push_back(CriticalPoint{p.index, core.lo + p.angle * (core.hi - core.lo)});
  };
  place(first, first_core);
  place(second, second_core);
  return out;
}

}  // namespace

MorseOpenBook morse_sum(const MorseOpenBook& first, const MorseOpenBook& second, const SumSpec& spec,
                        const CoreArc& first_core, const CoreArc& second_core) {
  if (!first.book() || !second.book()) throw Error(ErrorKind::NotSummable, "summing along a patch needs two pages");
  auto critical = merge_critical(first, second, first_core, second_core);
  return MorseOpenBook(open_book_sum(*first.book(), *second.book(), spec), first.ambient_dim(), std::move(critical));
}

MorseOpenBook morse_sum(const MorseOpenBook& first, const MorseOpenBook& second, const CoreArc& first_core,
                        const CoreArc& second_core) {
  if (first.book() || second.book()) throw Error(ErrorKind::NotSummable, "books with pages need a sum spec");
  auto critical = merge_critical(first, second, first_core, second_core);
  return MorseOpenBook(std::nullopt, first.ambient_dim(), std::move(critical));
}

}  // namespace obk
