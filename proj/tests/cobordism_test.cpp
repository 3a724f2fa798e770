#include <gtest/gtest.h>

#include "obk/cobordism.hpp"
#include "test_seed.hpp"
#include "test_util.hpp"

using namespace obk;
using test::kind_of;
using test::ptr;

namespace {

const CoreArc kLate{Rational(5, 8), Rational(7, 8)};
const CoreArc kEarly{Rational(1, 8), Rational(3, 8)};

struct Piece {
  AbstractOpenBook book;
  SeifertData data;
};

Piece piece(int n, int sign) {
  auto b = primitive_open_book(n, sign);
  SeifertData d(b.page_homology(), seifert_matrix_primitive(n, sign).seifert_matrix());
  return Piece{std::move(b), std::move(d)};
}

SumSpec lrlr(const Piece& a, const Piece& b) {
  return SumSpec{make_slot_patch(a.book.page(), "D1"), make_slot_patch(b.book.page(), "D1"), "LRLR"};
}

Stiffening stiff(const Piece& p, CoreArc core) { return stiffen(CylindricalCobordism(p.book.monodromy()), core); }

SeifertData embedded(const Piece& a, const Piece& b, const SumSpec& spec) {
  return embedded_sum(a.data, b.data, spec, chords_for(spec, *a.data.homology(), *b.data.homology()),
                      SumOrder::LeftFirst);
}

}  // namespace

TEST(Cylinder, DiskIdentity) {
  const auto c = cylinder(ptr(disk_surface()));
  EXPECT_EQ(c.monodromy().matrix(), IntMatrix(0, 0));
  EXPECT_EQ(c.euler_characteristic(), 1);
  EXPECT_EQ(c.free_boundary_annuli(), 1);
  EXPECT_EQ(compose_cobordisms(c, c).monodromy().matrix(), c.monodromy().matrix());
}

TEST(Cylinder, TwoSidedIdentity) {
  const auto b = primitive_open_book(4, 1);
  const CylindricalCobordism w(b.monodromy());
  const CylindricalCobordism id(MappingClass::identity(b.page_homology()));
  EXPECT_EQ(compose_cobordisms(w, id).monodromy().matrix(), w.monodromy().matrix());
  EXPECT_EQ(compose_cobordisms(id, w).monodromy().matrix(), w.monodromy().matrix());
  EXPECT_EQ(w.euler_characteristic(), -2);
  EXPECT_EQ(w.free_boundary_annuli(), 2);
}

TEST(Compose, TwistCobordismsConcatenateWords) {
  const auto h = homology_basis(ptr(primitive_s_surface(3, 1)));
  const CylindricalCobordism w1(dehn_twist(h, 0, 1)), w2(dehn_twist(h, 1, -1));
  const auto w = compose_cobordisms(w1, w2);
  EXPECT_EQ(w.monodromy(), compose(w1.monodromy(), w2.monodromy()));
  EXPECT_EQ(w.monodromy().word().size(), 2u);
}

TEST(Compose, BaseMismatch) {
  const CylindricalCobordism a(primitive_open_book(2, 1).monodromy());
  const CylindricalCobordism b(primitive_open_book(3, 1).monodromy());
  EXPECT_EQ(kind_of([&] { compose_cobordisms(a, b); }), ErrorKind::BaseMismatch);
}

TEST(Compose, Associative) {
  auto rng = test::rng_for(21);
  for (int i = 0; i < 3; ++i) {
    const auto h = homology_basis(ptr(random_orientable_surface(rng, 4, 4)));
    auto w = [&] { return CylindricalCobordism(MappingClass::from_word(h, random_twist_word(rng, h->rank()))); };
    const auto a = w(), b = w(), c = w();
    EXPECT_EQ(compose_cobordisms(compose_cobordisms(a, b), c).monodromy().matrix(),
              compose_cobordisms(a, compose_cobordisms(b, c)).monodromy().matrix());
  }
}

TEST(MappingTorus, CylinderOverAnnulus) {
  const auto p = circle_collapsed_mapping_torus(cylinder(ptr(primitive_s_surface(2, 1))));
  EXPECT_EQ(p.tag(), kCircleCollapsedTag);
  EXPECT_EQ(char_poly(p.monodromy()), Polynomial({-1, 1}));
}

TEST(MappingTorus, HopfCobordism) {
  const auto b = primitive_open_book(2, -1);
  const auto p = circle_collapsed_mapping_torus(CylindricalCobordism(b.monodromy()));
  EXPECT_EQ(p.hypersurface(), b.page());
  EXPECT_EQ(p.monodromy(), b.monodromy());
  EXPECT_EQ(p.tag(), kCircleCollapsedTag);
}

TEST(MappingTorus, RoundTripsBothWays) {
  auto rng = test::rng_for(22);
  for (int i = 0; i < 100; ++i) {
    const auto base = ptr(random_orientable_surface(rng));
    const auto h = homology_basis(base);
    const CylindricalCobordism w(MappingClass::from_word(h, random_twist_word(rng, h->rank())));
    const auto p = circle_collapsed_mapping_torus(w);
    EXPECT_EQ(split_seifert(p), w);
    EXPECT_EQ(circle_collapsed_mapping_torus(split_seifert(p)), p);
    EXPECT_EQ(invariants(*split_seifert(p).base()), invariants(*base));
  }
}

TEST(Stiffen, CoreValidation) {
  const auto w = cylinder(ptr(primitive_s_surface(2, 1)));
  EXPECT_NO_THROW(stiffen(w, {Rational(1, 3), Rational(2, 3)}));
  EXPECT_EQ(kind_of([&] { stiffen(w, {Rational(0), Rational(1, 2)}); }), ErrorKind::DegenerateCore);
  EXPECT_EQ(kind_of([&] { stiffen(w, {Rational(1, 2), Rational(1)}); }), ErrorKind::DegenerateCore);
  EXPECT_EQ(kind_of([&] { stiffen(w, {Rational(1, 2), Rational(1, 2)}); }), ErrorKind::DegenerateCore);
  EXPECT_EQ(kind_of([&] { stiffen(w, {Rational(2, 3), Rational(1, 3)}); }), ErrorKind::DegenerateCore);
}

TEST(SumStiffened, TrefoilFromHopfBands) {
  const auto a = piece(2, 1), b = piece(2, 1);
  const auto s = sum_stiffened(stiff(a, kLate), stiff(b, kEarly), lrlr(a, b));
  EXPECT_EQ(char_poly(s.host.monodromy()).normalized(), Polynomial({1, -1, 1}));
  EXPECT_EQ(s.core, (CoreArc{Rational(1, 8), Rational(7, 8)}));
}

TEST(SumStiffened, CoreOrderEnforced) {
  const auto a = piece(2, 1), b = piece(2, 1);
  EXPECT_EQ(kind_of([&] { sum_stiffened(stiff(a, kEarly), stiff(b, kLate), lrlr(a, b)); }),
            ErrorKind::CoreOrderViolation);
  const CoreArc overlap{Rational(1, 4), Rational(3, 4)};
  EXPECT_EQ(kind_of([&] { sum_stiffened(stiff(a, overlap), stiff(b, kEarly), lrlr(a, b)); }),
            ErrorKind::CoreOrderViolation);
}

TEST(SumStiffened, ForeignPatchRejected) {
  const auto a = piece(2, 1), b = piece(2, 1), c = piece(2, 1);
  EXPECT_EQ(kind_of([&] { sum_stiffened(stiff(a, kLate), stiff(b, kEarly), lrlr(c, b)); }), ErrorKind::NotSummable);
}

TEST(SumStiffened, IndependentOfCores) {
  const auto a = piece(3, 1), b = piece(2, -1);
  const auto spec = lrlr(a, b);
  const SumSpec spec3{spec.left, spec.right, "LRLLR"};
  const auto s1 = sum_stiffened(stiff(a, kLate), stiff(b, kEarly), spec3);
  const auto s2 = sum_stiffened(stiff(a, {Rational(9, 10), Rational(19, 20)}), stiff(b, {Rational(1, 100), Rational(1, 2)}), spec3);
  EXPECT_EQ(s1.host.monodromy().matrix(), s2.host.monodromy().matrix());
  EXPECT_EQ(invariants(*s1.host.base()), invariants(*s2.host.base()));
}

TEST(SumStiffened, SwappedOrderComposesTheOtherWay) {
  const auto a = piece(2, 1), b = piece(2, 1);
  const auto spec = lrlr(a, b);
  const auto forward = sum_stiffened_detailed(stiff(a, kLate), stiff(b, kEarly), spec);
  const auto backward = sum_stiffened_detailed(stiff(b, kLate), stiff(a, kEarly), swapped(spec));
  EXPECT_TRUE(equal_up_to_units(char_poly(forward.result.host.monodromy()),
                                char_poly(backward.result.host.monodromy())));
  const auto& h = forward.homology;
  const auto e1 = extend_by_identity(a.book.monodromy(), h.homology, h.left_embedding);
  const auto e2 = extend_by_identity(b.book.monodromy(), h.homology, h.right_embedding);
  EXPECT_EQ(forward.result.host.monodromy().matrix(), e1.matrix() * e2.matrix());
  EXPECT_NE(e1.matrix() * e2.matrix(), e2.matrix() * e1.matrix());
}

TEST(Samedef, HopfPlusHopfPlus) {
  const auto a = piece(2, 1), b = piece(2, 1);
  const auto spec = lrlr(a, b);
  const auto r = verify_samedef(stiff(a, kLate), stiff(b, kEarly), spec, embedded(a, b, spec));
  EXPECT_EQ(r.alexander, Polynomial({1, -1, 1}));
  EXPECT_EQ(r.charpoly, Polynomial({1, -1, 1}));
  EXPECT_EQ(r.page.euler, -1);
}

TEST(Samedef, HopfPlusHopfMinus) {
  const auto a = piece(2, 1), b = piece(2, -1);
  const auto spec = lrlr(a, b);
  const auto r = verify_samedef(stiff(a, kLate), stiff(b, kEarly), spec, embedded(a, b, spec));
  EXPECT_EQ(r.alexander, Polynomial({1, -3, 1}));
  EXPECT_EQ(r.charpoly, Polynomial({1, -3, 1}));
  EXPECT_EQ(r.page.genus, std::optional<int>(1));
  EXPECT_EQ(r.page.boundary_count, 1);
}

TEST(Samedef, TrivialSummands) {
  const auto d1 = ptr(disk_surface("E")), d2 = ptr(disk_surface("F"));
  const auto h1 = homology_basis(d1), h2 = homology_basis(d2);
  const SeifertData e1(h1, IntMatrix(0, 0)), e2(h2, IntMatrix(0, 0));
  const SumSpec spec{make_patch(d1, "E", {}), make_patch(d2, "F", {}), ""};
  const auto emb = embedded_sum(e1, e2, spec, chords_for(spec, *h1, *h2), SumOrder::LeftFirst);
  const auto r = verify_samedef(stiffen(cylinder(d1), kLate), stiffen(cylinder(d2), kEarly), spec, emb);
  EXPECT_EQ(r.alexander, Polynomial({1}));
  EXPECT_EQ(r.charpoly, Polynomial({1}));
}

TEST(Samedef, BogusEmbeddedDataDetected) {
  const auto a = piece(2, 1), b = piece(2, 1), c = piece(2, -1);
  const auto spec = lrlr(a, b);
  const auto wrong_poly = embedded(a, c, lrlr(a, c));
  EXPECT_EQ(kind_of([&] { verify_samedef(stiff(a, kLate), stiff(b, kEarly), spec, wrong_poly); }),
            ErrorKind::InvariantMismatch);
  const auto wrong_page = seifert_matrix_primitive(5, 1);
  EXPECT_EQ(kind_of([&] { verify_samedef(stiff(a, kLate), stiff(b, kEarly), spec, wrong_page); }),
            ErrorKind::InvariantMismatch);
}

TEST(Samedef, RandomPrimitivePairs) {
  auto rng = test::rng_for(23);
  for (int i = 0; i < 60; ++i) {
    const int n1 = random_int(rng, 2, 6), n2 = random_int(rng, 2, 6);
    const auto a = piece(n1, random_sign(rng)), b = piece(n2, random_sign(rng));
    const SumSpec spec{make_slot_patch(a.book.page(), "D1"), make_slot_patch(b.book.page(), "D1"),
                       random_interleaving(rng, static_cast<std::size_t>(n1), static_cast<std::size_t>(n2))};
    for (auto order : {SumOrder::LeftFirst, SumOrder::RightFirst}) {
      const auto emb = embedded_sum(a.data, b.data, spec, chords_for(spec, *a.data.homology(), *b.data.homology()), order);
      EXPECT_NO_THROW(verify_samedef(stiff(a, kLate), stiff(b, kEarly), spec, emb)) << spec.interleaving;
    }
  }
}
