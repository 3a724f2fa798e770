#include <gtest/gtest.h>

#include "obk/braid.hpp"
#include "obk/error.hpp"
#include "obk/mapclass.hpp"
#include "test_seed.hpp"
#include "test_util.hpp"

using namespace obk;

namespace {

using test::kind_of;
using test::ptr;

// Positive and negative Hopf bands summed along D1 with LRLR.
SumResult figure_eight_page() {
  return abstract_sum(SumSpec{make_slot_patch(ptr(primitive_s_surface(2, 1)), "D1"),
                              make_slot_patch(ptr(primitive_s_surface(2, -1)), "D1"), "LRLR"});
}

}  // namespace

TEST(Homology, HopfBandRankOne) {
  const auto h = homology_basis(ptr(primitive_s_surface(2, 1)));
  EXPECT_EQ(h->rank(), 1u);
  EXPECT_EQ(h->intersection(), (IntMatrix{{0}}));
}

TEST(Homology, FigureEightPageRankTwo) {
  const auto h = homology_basis(figure_eight_page().surface);
  ASSERT_EQ(h->rank(), 2u);
  EXPECT_EQ(h->intersection(), (IntMatrix{{0, 1}, {-1, 0}}));
}

TEST(Homology, DiskHasNoHomology) {
  const auto h = homology_basis(ptr(disk_surface()));
  EXPECT_EQ(h->rank(), 0u);
  EXPECT_EQ(h->intersection(), IntMatrix(0, 0));
}

TEST(Homology, NonOrientableRejected) {
  const auto m = ptr(RibbonSurface::build({{"D", {{"M", 0}, {"M", 1}}}}, {{"M", 1}}));
  EXPECT_EQ(kind_of([&] { homology_basis(m); }), ErrorKind::NotOrientable);
}

TEST(Homology, InvalidBases) {
  const auto s = ptr(primitive_s_surface(3, 1));
  const Cycle c1{{0, true}, {1, false}};
  const Cycle c2{{1, true}, {2, false}};
  EXPECT_NO_THROW(HomologyData::from_basis(s, {c1, c2}));
  EXPECT_EQ(kind_of([&] { HomologyData::from_basis(s, {c1}); }), ErrorKind::InvalidCycle);
  EXPECT_EQ(kind_of([&] { HomologyData::from_basis(s, {c1, c1}); }), ErrorKind::InvalidCycle);
  const Cycle open{{0, true}, {1, true}};
  EXPECT_EQ(kind_of([&] { HomologyData::from_basis(s, {c1, open}); }), ErrorKind::InvalidCycle);
}

TEST(Homology, CoordinatesOfWalks) {
  const auto s = ptr(primitive_s_surface(3, 1));
  const auto h = homology_basis(s);
  const Cycle outer{{0, true}, {2, false}};
  const auto x = h->coordinates(outer);
  EXPECT_EQ(cycle_vector(*s, outer), (std::vector<Int>{1, 0, -1}));
  EXPECT_EQ(x.size(), 2u);
  // <c, c> = 0 for every class.
  EXPECT_EQ(h->pairing(x, x), 0);
}

TEST(Homology, BasisCycleOutsideSpan) {
  // Bands B1..B3 of a primitive piece and a walk through a band of another surface.
  const auto s = ptr(primitive_s_surface(2, 1));
  const auto h = homology_basis(s);
  EXPECT_EQ(kind_of([&] { h->coordinates(Cycle{{5, true}}); }), ErrorKind::InvalidCycle);
}

TEST(DehnTwist, SelfPairingZeroGivesIdentity) {
  const auto h = homology_basis(ptr(primitive_s_surface(2, 1)));
  EXPECT_EQ(dehn_twist(h, 0, 1).matrix(), IntMatrix::identity(1));
}

TEST(DehnTwist, TransvectionOnFigureEightPage) {
  const auto h = homology_basis(figure_eight_page().surface);
  const auto t1 = dehn_twist(h, 0, 1);
  EXPECT_EQ(t1.matrix(), (IntMatrix{{1, -1}, {0, 1}}));
  EXPECT_EQ(compose(inverse(t1), t1).matrix(), IntMatrix::identity(2));
  EXPECT_EQ(dehn_twist(h, 0, -1).matrix(), (IntMatrix{{1, 1}, {0, 1}}));
}

TEST(DehnTwist, ByWalkAndByVector) {
  const auto h = homology_basis(figure_eight_page().surface);
  const auto by_index = dehn_twist(h, 1, -1);
  EXPECT_EQ(dehn_twist(h, std::vector<Int>{0, 1}, -1).matrix(), by_index.matrix());
  EXPECT_EQ(dehn_twist(h, h->basis()[1], -1).matrix(), by_index.matrix());
  EXPECT_EQ(kind_of([&] { dehn_twist(h, std::vector<Int>{1}, 1); }), ErrorKind::CycleNotInSpan);
  EXPECT_EQ(kind_of([&] { dehn_twist(h, 7, 1); }), ErrorKind::CycleNotInSpan);
}

TEST(Compose, ExamplesOnFigureEightPage) {
  const auto h = homology_basis(figure_eight_page().surface);
  const auto t1 = dehn_twist(h, 0, 1), t2p = dehn_twist(h, 1, 1), t2m = dehn_twist(h, 1, -1);
  const auto trefoil = compose(t1, t2p);
  EXPECT_EQ(trefoil.matrix().trace(), 1);
  EXPECT_EQ(trefoil.matrix(), t1.matrix() * t2p.matrix());
  const auto eight = compose(t1, t2m);
  EXPECT_EQ(eight.matrix(), (IntMatrix{{2, -1}, {-1, 1}}));
  EXPECT_EQ(eight.matrix().trace(), 3);
  EXPECT_EQ(compose(eight, MappingClass::identity(h)), eight);
  EXPECT_EQ(trefoil.word().size(), 2u);
}

TEST(Compose, DifferentSurfacesRejected) {
  const auto a = homology_basis(ptr(primitive_s_surface(3, 1)));
  const auto b = homology_basis(ptr(primitive_s_surface(4, 1)));
  EXPECT_EQ(kind_of([&] { compose(dehn_twist(a, 0, 1), dehn_twist(b, 0, 1)); }), ErrorKind::SurfaceMismatch);
}

TEST(CharPoly, Examples) {
  const auto h = homology_basis(figure_eight_page().surface);
  EXPECT_EQ(char_poly(MappingClass::identity(h)), Polynomial({1, -2, 1}));
  EXPECT_EQ(char_poly(compose(dehn_twist(h, 0, 1), dehn_twist(h, 1, 1))), Polynomial({1, -1, 1}));
  EXPECT_EQ(char_poly(compose(dehn_twist(h, 0, 1), dehn_twist(h, 1, -1))), Polynomial({1, -3, 1}));
}

TEST(Extend, IdentityExtendsToIdentity) {
  const auto a = ptr(primitive_s_surface(3, 1)), b = ptr(primitive_s_surface(2, -1));
  const auto ha = homology_basis(a), hb = homology_basis(b);
  const auto sum = abstract_sum(SumSpec{make_slot_patch(a, "D1"), make_slot_patch(b, "D1"), "LRLRL"});
  const auto sh = sum_homology(sum, *ha, *hb);
  EXPECT_EQ(sh.homology->rank(), ha->rank() + hb->rank());
  const auto ext = extend_by_identity(MappingClass::identity(ha), sh.homology, sh.left_embedding);
  EXPECT_EQ(ext.matrix(), IntMatrix::identity(3));
}

TEST(Extend, CurveAwayFromPatchGivesBlockDiagonal) {
  // S1 - S2 - S3; the sigma_1 cycle never touches S3, where the patch sits.
  const auto m = ptr(bennequin_surface(parse_braid("1 1 2 2", 3)));
  const auto other = ptr(primitive_s_surface(3, -1));
  const auto hm = homology_basis(m), ho = homology_basis(other);
  std::size_t away = hm->rank();
  for (std::size_t i = 0; i < hm->rank(); ++i) {
    bool touches = false;
    for (const auto& step : hm->basis()[i])
      for (const auto& end : m->bands()[step.band].ends) touches = touches || m->disks()[end.disk].id == "S3";
    if (!touches) away = i;
  }
  ASSERT_LT(away, hm->rank());
  const auto phi = dehn_twist(hm, away, 1);
  const auto sum = abstract_sum(SumSpec{make_slot_patch(m, "S3"), make_slot_patch(other, "D1"), "LRRLR"});
  const auto sh = sum_homology(sum, *hm, *ho);
  const auto ext = extend_by_identity(phi, sh.homology, sh.left_embedding);
  const auto& e = ext.matrix();
  for (std::size_t i = 0; i < hm->rank(); ++i)
    for (std::size_t j = 0; j < hm->rank(); ++j)
      EXPECT_EQ(e(sh.left_embedding[i], sh.left_embedding[j]), phi.matrix()(i, j));
  for (auto j : sh.right_embedding)
    for (std::size_t i = 0; i < e.rows(); ++i) EXPECT_EQ(e(i, j), i == j ? 1 : 0);
}

TEST(Extend, CurveThroughPatchUsesFullPairing) {
  const auto a = ptr(primitive_s_surface(2, 1)), b = ptr(primitive_s_surface(2, 1));
  const auto ha = homology_basis(a), hb = homology_basis(b);
  const auto sum = abstract_sum(SumSpec{make_slot_patch(a, "D1"), make_slot_patch(b, "D1"), "LRLR"});
  const auto sh = sum_homology(sum, *ha, *hb);
  const auto ext = extend_by_identity(dehn_twist(ha, 0, 1), sh.homology, sh.left_embedding);
  EXPECT_EQ(ext.matrix(), transvection(*sh.homology, std::vector<Int>{1, 0}, 1));
  EXPECT_NE(ext.matrix(), IntMatrix::identity(2));
}

TEST(Extend, MissingEmbeddingRejected) {
  const auto a = ptr(primitive_s_surface(3, 1)), b = ptr(primitive_s_surface(2, 1));
  const auto ha = homology_basis(a), hb = homology_basis(b);
  const auto sum = abstract_sum(SumSpec{make_slot_patch(a, "D1"), make_slot_patch(b, "D1"), "LLRLR"});
  const auto sh = sum_homology(sum, *ha, *hb);
  const auto phi = dehn_twist(ha, 0, 1);
  EXPECT_EQ(kind_of([&] { extend_by_identity(phi, sh.homology, {0}); }), ErrorKind::BasisEmbeddingMissing);
  EXPECT_EQ(kind_of([&] { extend_by_identity(phi, sh.homology, {0, 0}); }), ErrorKind::BasisEmbeddingMissing);
}

TEST(MappingClassProperties, FormPreservedDeterminantUnitDuality) {
  auto rng = test::rng_for(6);
  for (int it = 0; it < 150; ++it) {
    const auto s = ptr(random_orientable_surface(rng, 4, 5));
    const auto h = homology_basis(s);
    const auto phi = MappingClass::from_word(h, random_twist_word(rng, h->rank(), 8));
    const IntMatrix& m = phi.matrix();
    const IntMatrix& j = h->intersection();
    EXPECT_TRUE(is_antisymmetric(j));
    EXPECT_EQ(m.transposed() * j * m, j);
    const Int det = determinant(m);
    EXPECT_TRUE(det == 1 || det == -1);
    // char_poly(phi^-1) = +-t^r char_poly(phi)(1/t)
    const auto p = char_poly(phi), q = char_poly(inverse(phi));
    std::vector<Int> rev(p.coefficients().rbegin(), p.coefficients().rend());
    const Polynomial reversed(rev);
    EXPECT_TRUE(q == reversed || q == -reversed) << p.to_string() << " vs " << q.to_string();
    EXPECT_EQ(compose(phi, inverse(phi)).matrix(), IntMatrix::identity(h->rank()));
  }
}

TEST(MappingClassProperties, ComposeAssociative) {
  auto rng = test::rng_for(7);
  for (int it = 0; it < 50; ++it) {
    const auto h = homology_basis(ptr(random_orientable_surface(rng, 3, 5)));
    auto word = [&] { return MappingClass::from_word(h, random_twist_word(rng, h->rank(), 4)); };
    const auto a = word(), b = word(), c = word();
    EXPECT_EQ(compose(compose(a, b), c).matrix(), compose(a, compose(b, c)).matrix());
  }
}
