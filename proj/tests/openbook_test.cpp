#include <gtest/gtest.h>

#include "obk/embedded.hpp"
#include "obk/openbook.hpp"
#include "test_seed.hpp"
#include "test_util.hpp"

using namespace obk;
using test::kind_of;
using test::ptr;

namespace {

SumSpec spec_on(const AbstractOpenBook& a, const AbstractOpenBook& b, std::string word) {
  return SumSpec{make_slot_patch(a.page(), "D1"), make_slot_patch(b.page(), "D1"), std::move(word)};
}

MorseOpenBook symbolic(int w, std::vector<CriticalPoint> c) { return MorseOpenBook(std::nullopt, w, std::move(c)); }

}  // namespace

TEST(OpenBook, TrivialBookOnDisk) {
  const auto b = open_book(ptr(disk_surface()), std::vector<TwistLetter>{});
  EXPECT_EQ(b.page_homology()->rank(), 0u);
  EXPECT_EQ(char_poly(b.monodromy()), Polynomial({1}));
}

TEST(OpenBook, PositiveHopfBand) {
  const auto b = open_book(ptr(primitive_s_surface(2, 1)), {{0, 1}});
  EXPECT_EQ(b.monodromy().matrix(), IntMatrix::identity(1));
  EXPECT_EQ(b.monodromy().word().size(), 1u);
  EXPECT_EQ(char_poly(b.monodromy()), Polynomial({-1, 1}));
}

TEST(OpenBook, TwistIndexOutsideBasis) {
  EXPECT_EQ(kind_of([] { open_book(ptr(primitive_s_surface(2, 1)), {{1, 1}}); }), ErrorKind::CycleNotInSpan);
}

TEST(OpenBook, DiskBandPagesAlwaysHaveBoundary) {
  // A closed page cannot be presented by disks and bands, so every
  // constructed page passes the boundary check.
  auto rng = test::rng_for(11);
  for (int i = 0; i < 100; ++i) {
    const auto s = ptr(random_orientable_surface(rng, 4, 4));
    EXPECT_NO_THROW(open_book(s, std::vector<TwistLetter>{}));
    for (int b : boundary_count_per_component(*s)) EXPECT_GT(b, 0);
  }
}

TEST(OpenBookSum, HopfPlusHopfPlusIsTrefoil) {
  const auto a = primitive_open_book(2, 1), b = primitive_open_book(2, 1);
  const auto s = open_book_sum(a, b, spec_on(a, b, "LRLR"));
  EXPECT_EQ(char_poly(s.monodromy()).normalized(), Polynomial({1, -1, 1}));
  EXPECT_EQ(euler_characteristic(*s.page()), -1);
}

TEST(OpenBookSum, HopfPlusHopfMinusIsFigureEight) {
  const auto a = primitive_open_book(2, 1), b = primitive_open_book(2, -1);
  const auto s = open_book_sum(a, b, spec_on(a, b, "LRLR"));
  EXPECT_EQ(char_poly(s.monodromy()).normalized(), Polynomial({1, -3, 1}));
  const auto inv = invariants(*s.page());
  EXPECT_EQ(inv.euler, -1);
  EXPECT_EQ(inv.genus, std::optional<int>(1));
  EXPECT_EQ(inv.boundary_count, 1);
}

TEST(OpenBookSum, TrivialSummandKeepsCharPoly) {
  const auto a = primitive_open_book(4, -1);
  const auto d = open_book(ptr(disk_surface("E")), std::vector<TwistLetter>{});
  const auto s = open_book_sum(a, d, SumSpec{make_slot_patch(a.page(), "D2"), make_patch(d.page(), "E", {}), "LLLL"});
  EXPECT_EQ(char_poly(s.monodromy()), char_poly(a.monodromy()));
}

TEST(OpenBookSum, MonodromyIsFirstAfterSecond) {
  const auto a = primitive_open_book(3, 1), b = primitive_open_book(2, -1);
  const auto spec = spec_on(a, b, "LRLLR");
  const auto detailed = sum_open_books(a, b, spec);
  const auto& h = detailed.homology;
  const auto e1 = extend_by_identity(a.monodromy(), h.homology, h.left_embedding);
  const auto e2 = extend_by_identity(b.monodromy(), h.homology, h.right_embedding);
  EXPECT_EQ(detailed.book.monodromy().matrix(), e1.matrix() * e2.matrix());
}

TEST(OpenBookSum, PatchesOnOtherPagesRejected) {
  const auto a = primitive_open_book(2, 1), b = primitive_open_book(2, 1);
  const auto stranger = ptr(primitive_s_surface(2, 1));
  const SumSpec spec{make_slot_patch(stranger, "D1"), make_slot_patch(b.page(), "D1"), "LRLR"};
  EXPECT_EQ(kind_of([&] { open_book_sum(a, b, spec); }), ErrorKind::NotSummable);
}

TEST(OpenBookSum, RankAndEulerAdditive) {
  auto rng = test::rng_for(12);
  for (int i = 0; i < 60; ++i) {
    const auto a = primitive_open_book(random_int(rng, 2, 6), random_sign(rng));
    const auto b = primitive_open_book(random_int(rng, 2, 6), random_sign(rng));
    const auto pa = make_slot_patch(a.page(), "D1"), pb = make_slot_patch(b.page(), "D2");
    const SumSpec spec{pa, pb, random_interleaving(rng, pa.attaching_count(), pb.attaching_count())};
    const auto s = open_book_sum(a, b, spec);
    EXPECT_EQ(euler_characteristic(*s.page()), euler_characteristic(*a.page()) + euler_characteristic(*b.page()) - 1);
    const auto r = a.page_homology()->rank() + b.page_homology()->rank();
    EXPECT_EQ(s.page_homology()->rank(), r);
    const auto p = char_poly(s.monodromy());
    EXPECT_EQ(p.degree(), static_cast<int>(r));
    EXPECT_TRUE(p.leading() == 1 || p.leading() == -1);
  }
}

TEST(PrimitiveOpenBook, Examples) {
  EXPECT_EQ(char_poly(primitive_open_book(2, 1).monodromy()), Polynomial({-1, 1}));
  const auto b3 = primitive_open_book(3, 1);
  EXPECT_TRUE(equal_up_to_units(char_poly(b3.monodromy()), alexander(seifert_matrix_primitive(3, 1))));
  EXPECT_EQ(char_poly(b3.monodromy()).normalized(), Polynomial({1, -1, 1}));
  for (int n = 2; n <= 8; ++n)
    for (int s : {1, -1}) {
      const auto b = primitive_open_book(n, s);
      EXPECT_EQ(euler_characteristic(*b.page()), 2 - n);
      EXPECT_EQ(b.monodromy().word().size(), static_cast<std::size_t>(n - 1));
      EXPECT_TRUE(equal_up_to_units(char_poly(b.monodromy()), alexander(seifert_matrix_primitive(n, s))))
          << n << " " << s;
    }
}

TEST(MorseOpenBook, Validation) {
  EXPECT_NO_THROW(symbolic(5, {{4, Rational(1, 3)}}));
  EXPECT_EQ(kind_of([] { symbolic(5, {{5, Rational(1, 3)}}); }), ErrorKind::InvalidCriticalPoint);
  EXPECT_EQ(kind_of([] { symbolic(5, {{0, Rational(1, 3)}}); }), ErrorKind::InvalidCriticalPoint);
  EXPECT_EQ(kind_of([] { symbolic(3, {{1, Rational(0)}}); }), ErrorKind::InvalidCriticalPoint);
  EXPECT_EQ(kind_of([] { symbolic(3, {{1, Rational(1)}}); }), ErrorKind::InvalidCriticalPoint);
  EXPECT_EQ(kind_of([] { MorseOpenBook(primitive_open_book(2, 1), 4, {}); }), ErrorKind::DimensionMismatch);
}

TEST(MorseNumbers, Examples) {
  const MorseOpenBook honest(primitive_open_book(2, 1), 3, {});
  EXPECT_TRUE(honest.is_honest());
  EXPECT_TRUE(morse_numbers(honest).all_zero());
  EXPECT_EQ(morse_numbers(honest).counts, (std::vector<Int>{0, 0}));
  EXPECT_EQ(morse_numbers(symbolic(5, {{3, Rational(1, 2)}})).counts, (std::vector<Int>{0, 0, 1, 0}));
}

TEST(MorseSum, HonestBooksStayHonest) {
  const MorseOpenBook a(primitive_open_book(2, 1), 3, {}), b(primitive_open_book(2, -1), 3, {});
  const auto s = morse_sum(a, b, spec_on(*a.book(), *b.book(), "LRLR"));
  EXPECT_TRUE(s.is_honest());
  ASSERT_TRUE(s.book().has_value());
  EXPECT_EQ(char_poly(s.book()->monodromy()).normalized(), Polynomial({1, -3, 1}));
}

TEST(MorseSum, MultigermsAreUnited) {
  const auto a = symbolic(3, {{1, Rational(1, 2)}});
  const auto b = symbolic(3, {{1, Rational(1, 3)}, {1, Rational(2, 3)}});
  const auto s = morse_sum(a, b);
  EXPECT_EQ(morse_numbers(s).counts, (std::vector<Int>{3, 0}));
  // Angles are rescaled into the two core arcs.
  for (std::size_t i = 0; i < s.critical_points().size(); ++i) {
    const auto& angle = s.critical_points()[i].angle;
    if (i == 0) {
      EXPECT_EQ(angle, Rational(3, 4));
    } else {
      EXPECT_LT(angle, Rational(1, 2));
    }
  }
  const auto swapped = morse_sum(b, a);
  EXPECT_EQ(morse_numbers(swapped), morse_numbers(s));
}

TEST(MorseSum, PagedSumCarriesCriticalPoints) {
  const MorseOpenBook a(primitive_open_book(2, 1), 3, {{1, Rational(1, 2)}});
  const MorseOpenBook b(primitive_open_book(2, -1), 3, {{2, Rational(1, 5)}});
  const auto s = morse_sum(a, b, spec_on(*a.book(), *b.book(), "LRLR"), {Rational(5, 8), Rational(7, 8)},
                           {Rational(1, 8), Rational(3, 8)});
  EXPECT_EQ(morse_numbers(s).counts, (std::vector<Int>{1, 1}));
  EXPECT_EQ(s.critical_points()[0].angle, Rational(3, 4));
}

TEST(MorseSum, Errors) {
  const auto a = symbolic(3, {{1, Rational(1, 2)}});
  const auto b = symbolic(4, {{1, Rational(1, 2)}});
  EXPECT_EQ(kind_of([&] { morse_sum(a, b); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { morse_sum(a, a, {Rational(1, 4), Rational(3, 4)}, {Rational(0), Rational(1, 2)}); }),
            ErrorKind::AngleCollision);
  EXPECT_EQ(kind_of([&] { morse_sum(a, a, {Rational(1, 2), Rational(1, 2)}, {Rational(0), Rational(1, 4)}); }),
            ErrorKind::AngleCollision);
  const MorseOpenBook paged(primitive_open_book(2, 1), 3, {});
  EXPECT_EQ(kind_of([&] { morse_sum(paged, a); }), ErrorKind::NotSummable);
}

TEST(MorseSum, CountsAreComponentwiseSums) {
  auto rng = test::rng_for(13);
  for (int i = 0; i < 100; ++i) {
    const int w = random_int(rng, 2, 6);
    auto random_points = [&] {
      std::vector<CriticalPoint> pts;
      const int k = random_int(rng, 0, 4);
      for (int j = 0; j < k; ++j) pts.push_back({random_int(rng, 1, w - 1), Rational(random_int(rng, 1, 9), 10)});
      return pts;
    };
    const auto a = symbolic(w, random_points()), b = symbolic(w, random_points());
    const auto s = morse_numbers(morse_sum(a, b));
    const auto ma = morse_numbers(a), mb = morse_numbers(b);
    for (std::size_t k = 0; k < s.counts.size(); ++k) EXPECT_EQ(s.counts[k], ma.counts[k] + mb.counts[k]);
  }
}
