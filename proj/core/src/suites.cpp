#include "obk/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <thread>

#include "obk/cobordism.hpp"
#include "obk/embedded.hpp"
#include "obk/error.hpp"
#include "obk/openbook.hpp"

namespace obk {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("OBK_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const auto v = std::strtoull(env, &end, 10);
  return *end == '\0' ? v : fallback;
}

Rng instance_rng(std::uint64_t seed, std::size_t instance) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(instance), static_cast<std::uint32_t>(instance >> 32)};
  return Rng(seq);
}

int random_sign(Rng& rng) { return (rng() & 1) ? 1 : -1; }

int random_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BraidWord random_homogeneous_braid(Rng& rng, int max_strands, int max_crossings) {
  const int n = random_int(rng, 2, max_strands);
  const int c = random_int(rng, n - 1, std::max(n - 1, max_crossings));
  std::vector<int> sign(static_cast<std::size_t>(n));
  for (auto& s : sign) s = random_sign(rng);
  std::vector<int> letters;
  for (int g = 1; g < n; ++g) letters.push_back(g * sign[static_cast<std::size_t>(g)]);
  while (static_cast<int>(letters.size()) < c) {
    const int g = random_int(rng, 1, n - 1);
    letters.push_back(g * sign[static_cast<std::size_t>(g)]);
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return make_braid(n, std::move(letters));
}

RibbonSurface random_orientable_surface(Rng& rng, int max_disks, int max_extra_bands) {
  for (;;) {
    const int k = random_int(rng, 1, max_disks);
    const int extra = random_int(rng, 0, max_extra_bands);
    std::vector<DiskRecord> disks;
    for (int i = 0; i < k; ++i) disks.push_back(DiskRecord{"D" + std::to_string(i + 1), {}});
    std::vector<BandRecord> bands;
    auto add_band = [&](int a, int b) {
      const std::string id = "B" + std::to_string(bands.size() + 1);
      bands.push_back(BandRecord{id, random_int(rng, -3, 3)});
      disks[static_cast<std::size_t>(a)].slots.push_back(SlotRecord{id, 0});
      disks[static_cast<std::size_t>(b)].slots.push_back(SlotRecord{id, 1});
    };
    for (int i = 1; i < k; ++i) add_band(random_int(rng, 0, i - 1), i);
    for (int i = 0; i < extra; ++i) add_band(random_int(rng, 0, k - 1), random_int(rng, 0, k - 1));
    for (auto& d : disks) std::shuffle(d.slots.begin(), d.slots.end(), rng);
    auto s = RibbonSurface::build(disks, bands);
    if (orientability(s).orientable) return s;
  }
}

std::vector<TwistLetter> random_twist_word(Rng& rng, std::size_t rank, int max_length) {
  std::vector<TwistLetter> word;
  if (rank == 0) return word;
  const int len = random_int(rng, 0, max_length);
  for (int i = 0; i < len; ++i) {
    std::vector<Int> curve(rank, 0);
    if (rng() % 3 == 0) {
      for (auto& x : curve) x = random_int(rng, -1, 1);
    }
    if (std::all_of(curve.begin(), curve.end(), [](Int x) { return x == 0; }))
      curve[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(rank) - 1))] = 1;
    word.push_back(TwistLetter{std::move(curve), random_sign(rng)});
  }
  return word;
}

std::string random_interleaving(Rng& rng, std::size_t left, std::size_t right) {
  std::string w = std::string(left, 'L') + std::string(right, 'R');
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

RibbonSurface relabeled(const RibbonSurface& s, Rng& rng) {
  auto disks = s.disk_records();
  auto bands = s.band_records();
  std::map<std::string, std::string> band_name;
  std::vector<std::size_t> perm(bands.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < bands.size(); ++i) band_name[bands[i].id] = "b" + std::to_string(perm[i]);
  // Swapping a band's ends is also a relabeling.
  std::map<std::string, bool> flip;
  for (auto& b : bands) {
    flip[b.id] = rng() & 1;
    b.id = band_name[b.id];
  }
  for (auto& d : disks) {
    for (auto& slot : d.slots) {
      if (flip[slot.band]) slot.end = 1 - slot.end;
      slot.band = band_name[slot.band];
    }
    d.id = "d_" + d.id;
    if (!d.slots.empty()) std::rotate(d.slots.begin(), d.slots.begin() + static_cast<long>(rng() % d.slots.size()), d.slots.end());
  }
  std::shuffle(disks.begin(), disks.end(), rng);
  std::shuffle(bands.begin(), bands.end(), rng);
  return RibbonSurface::build(disks, bands);
}

namespace {

using Check = std::function<std::optional<std::string>(Rng&)>;

SuiteResult run(const std::string& name, const SuiteOptions& o, const Check& check) {
  std::vector<std::optional<std::string>> outcome(o.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < o.count;) {
      Rng rng = instance_rng(o.seed, i);
      try {
        outcome[i] = check(rng);
      } catch (const std::exception& e) {
        outcome[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(std::max<std::size_t>(1, o.count))));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult r{name, o.count, 0, {}};
  for (std::size_t i = 0; i < o.count; ++i) {
    if (!outcome[i]) {
      ++r.passed;
    } else if (r.failures.size() < 5) {
      r.failures.push_back("instance " + std::to_string(i) + ": " + *outcome[i]);
    }
  }
  return r;
}

Rational random_unit_rational(Rng& rng) {
  const Int q = random_int(rng, 2, 12);
  return Rational(random_int(rng, 1, static_cast<int>(q) - 1), q);
}

// Two disjoint cores with the first strictly after the second.
std::pair<CoreArc, CoreArc> random_cores(Rng& rng) {
  std::vector<Int> cut;
  while (cut.size() < 4) {
    const Int x = random_int(rng, 1, 63);
    if (std::find(cut.begin(), cut.end(), x) == cut.end()) cut.push_back(x);
  }
  std::sort(cut.begin(), cut.end());
  return {CoreArc{Rational(cut[2], 64), Rational(cut[3], 64)}, CoreArc{Rational(cut[0], 64), Rational(cut[1], 64)}};
}

struct PrimitivePair {
  AbstractOpenBook b1, b2;
  SeifertData d1, d2;
  SumSpec spec;
};

SeifertData primitive_data_on(const AbstractOpenBook& b, int n, int sign) {
  return SeifertData(b.page_homology(), seifert_matrix_primitive(n, sign).seifert_matrix());
}

PrimitivePair random_primitive_pair(Rng& rng, int max_n) {
  const int n1 = random_int(rng, 2, max_n), n2 = random_int(rng, 2, max_n);
  const int s1 = random_sign(rng), s2 = random_sign(rng);
  auto b1 = primitive_open_book(n1, s1);
  auto b2 = primitive_open_book(n2, s2);
  auto d1 = primitive_data_on(b1, n1, s1);
  auto d2 = primitive_data_on(b2, n2, s2);
  const char* disk1 = (rng() & 1) ? "D1" : "D2";
  const char* disk2 = (rng() & 1) ? "D1" : "D2";
  SumSpec spec{make_slot_patch(b1.page(), disk1), make_slot_patch(b2.page(), disk2),
               random_interleaving(rng, static_cast<std::size_t>(n1), static_cast<std::size_t>(n2))};
  return PrimitivePair{std::move(b1), std::move(b2), std::move(d1), std::move(d2), std::move(spec)};
}

std::optional<std::string> expect(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

}  // namespace

SuiteResult roundtrip_suite(const SuiteOptions& o) {
  return run("roundtrip", o, [](Rng& rng) -> std::optional<std::string> {
    auto base = std::make_shared<const RibbonSurface>(random_orientable_surface(rng));
    auto h = homology_basis(base);
    CylindricalCobordism w(MappingClass::from_word(h, random_twist_word(rng, h->rank())));
    const SeifertPair p = circle_collapsed_mapping_torus(w);
    if (p.tag() != kCircleCollapsedTag) return "provenance tag missing";
    const CylindricalCobordism back = split_seifert(p);
    if (!(back == w)) return "split(collapse(W)) != W";
    if (!(circle_collapsed_mapping_torus(back) == p)) return "collapse(split(P)) != P";
    return expect(invariants(*back.base()) == invariants(*base), "base invariants changed");
  });
}

SuiteResult samedef_suite(const SuiteOptions& o) {
  return run("samedef", o, [](Rng& rng) -> std::optional<std::string> {
    auto pp = random_primitive_pair(rng, 6);
    const auto [c1, c2] = random_cores(rng);
    const auto s1 = stiffen(CylindricalCobordism(pp.b1.monodromy()), c1);
    const auto s2 = stiffen(CylindricalCobordism(pp.b2.monodromy()), c2);
    const auto chords = chords_for(pp.spec, *pp.b1.page_homology(), *pp.b2.page_homology());
    const auto left_first = embedded_sum(pp.d1, pp.d2, pp.spec, chords, SumOrder::LeftFirst);
    const auto report = verify_samedef(s1, s2, pp.spec, left_first);
    const auto book = open_book_sum(pp.b1, pp.b2, pp.spec);
    if (!equal_up_to_units(alexander(left_first), char_poly(book.monodromy())))
      return "alexander differs from open-book charpoly";
    const auto right_first = embedded_sum(pp.d1, pp.d2, pp.spec, chords, SumOrder::RightFirst);
    if (!equal_up_to_units(alexander(right_first), report.alexander)) return "order changed the Alexander polynomial";
    const int chi = euler_characteristic(*pp.b1.page()) + euler_characteristic(*pp.b2.page()) - 1;
    return expect(report.page.euler == chi && invariants(*book.page()) == report.page, "page invariants disagree");
  });
}

SuiteResult stallings_suite(const SuiteOptions& o) {
  return run("stallings", o, [](Rng& rng) -> std::optional<std::string> {
    const auto b = random_homogeneous_braid(rng, 5, 10);
    const auto book = stallings_open_book(b);
    const int c = static_cast<int>(b.letters.size());
    const auto tag = " for " + to_string(b) + " on " + std::to_string(b.strands);
    if (euler_characteristic(*book.page()) != b.strands - c) return "page chi != n - c" + tag;
    if (static_cast<int>(boundary_walk(*book.page()).size()) != closure_components(b)) return "boundary count" + tag;
    if (!(invariants(*book.page()) == invariants(bennequin_surface(b)))) return "page differs from Bennequin surface" + tag;
    const auto d = seifert_matrix_bennequin(b);
    if (!fiberedness_necessary(d)) return "fiberedness certificate fails" + tag;
    return expect(equal_up_to_units(alexander(d), char_poly(book.monodromy())), "alexander != charpoly" + tag);
  });
}

SuiteResult morse_suite(const SuiteOptions& o) {
  return run("morse", o, [](Rng& rng) -> std::optional<std::string> {
    auto random_points = [&](int w) {
      std::vector<CriticalPoint> pts(static_cast<std::size_t>(random_int(rng, 0, 4)));
      for (auto& p : pts) p = CriticalPoint{random_int(rng, 1, w - 1), random_unit_rational(rng)};
      return pts;
    };
    auto add = [](const MorseNumbers& a, const MorseNumbers& b) {
      MorseNumbers s = a;
      for (std::size_t k = 0; k < s.counts.size(); ++k) s.counts[k] += b.counts[k];
      return s;
    };
    auto sorted_indices = [](const MorseOpenBook& m) {
      std::vector<int> out;
      for (const auto& p : m.critical_points()) out.push_back(p.index);
      std::sort(out.begin(), out.end());
      return out;
    };
    // Symbolic books in random ambient dimension.
    const int w = random_int(rng, 3, 7);
    const MorseOpenBook a(std::nullopt, w, random_points(w)), b(std::nullopt, w, random_points(w));
    const auto ab = morse_sum(a, b);
    if (!(morse_numbers(ab) == add(morse_numbers(a), morse_numbers(b)))) return "symbolic counts not additive";
    if (sorted_indices(ab) != sorted_indices(morse_sum(b, a))) return "index multiset depends on order";
    // Books with pages.
    auto pp = random_primitive_pair(rng, 5);
    const MorseOpenBook m1(pp.b1, 3, random_points(3)), m2(pp.b2, 3, random_points(3));
    const auto [c1, c2] = random_cores(rng);
    const auto m = morse_sum(m1, m2, pp.spec, c1, c2);
    if (!(morse_numbers(m) == add(morse_numbers(m1), morse_numbers(m2)))) return "page counts not additive";
    for (const auto& p : m.critical_points())
      if (!((c1.lo < p.angle && p.angle < c1.hi) || (c2.lo < p.angle && p.angle < c2.hi)))
        return "critical value outside the cores";
    const auto& page = *m.book()->page();
    if (euler_characteristic(page) != euler_characteristic(*pp.b1.page()) + euler_characteristic(*pp.b2.page()) - 1)
      return "chi not additive on the page";
    // Arbitrary surfaces and patches.
    auto host = [&] { return std::make_shared<const RibbonSurface>(random_orientable_surface(rng, 3, 3)); };
    auto random_patch = [&](const SurfacePtr& s) {
      const auto& d = s->disks()[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(s->disk_count()) - 1))];
      std::vector<std::size_t> attach;
      const auto k = d.slots.size();
      for (std::size_t slot = 0; slot < k; ++slot) {
        attach.push_back(2 * slot);
        // keep the last gap free so a free arc always remains
        if (slot + 1 < k && (rng() & 1)) attach.push_back(2 * slot + 1);
      }
      return make_patch(s, d.id, attach);
    };
    const auto h1 = host(), h2 = host();
    const auto p1 = random_patch(h1), p2 = random_patch(h2);
    SumSpec spec{p1, p2, random_interleaving(rng, p1.attaching_count(), p2.attaching_count())};
    const auto sum = abstract_sum(spec);
    if (euler_characteristic(*sum.surface) != euler_characteristic(*h1) + euler_characteristic(*h2) - 1)
      return "chi not additive for general patches";
    return expect(homology_rank(*sum.surface) == homology_rank(*h1) + homology_rank(*h2), "rank not additive");
  });
}

SuiteResult algebra_suite(const SuiteOptions& o) {
  return run("algebra", o, [](Rng& rng) -> std::optional<std::string> {
    auto check = [](const SeifertData& d, const std::string& what) -> std::optional<std::string> {
      const IntMatrix& v = d.seifert_matrix();
      if (v - v.transposed() != d.homology()->intersection()) return what + ": V - V^T != J";
      const Int det = determinant(v);
      if (det == 1 || det == -1) {
        if (!equal_up_to_units(characteristic_polynomial(homological_monodromy(d)), alexander(d)))
          return what + ": charpoly of V^-1 V^T != alexander";
      }
      if (boundary_walk(*d.surface()).size() == 1) {
        const Int at_one = alexander(d).evaluate(1);
        if (at_one != 1 && at_one != -1) return what + ": knot with alexander(1) != +-1";
      }
      return std::nullopt;
    };
    const auto b = random_homogeneous_braid(rng, 5, 10);
    if (auto f = check(seifert_matrix_bennequin(b), "bennequin " + to_string(b))) return f;
    const int n = random_int(rng, 2, 10);
    if (auto f = check(seifert_matrix_primitive(n, random_sign(rng)), "primitive")) return f;
    auto pp = random_primitive_pair(rng, 6);
    const auto chords = chords_for(pp.spec, *pp.b1.page_homology(), *pp.b2.page_homology());
    for (auto order : {SumOrder::LeftFirst, SumOrder::RightFirst}) {
      const auto sum = embedded_sum(pp.d1, pp.d2, pp.spec, chords, order);
      if (auto f = check(sum, "embedded sum")) return f;
      const Int det = determinant(sum.seifert_matrix());
      if (det != checked_mul(determinant(pp.d1.seifert_matrix()), determinant(pp.d2.seifert_matrix())))
        return "det not multiplicative";
      if (det != 1 && det != -1) return "sum of fiber surfaces lost det +-1";
      if (!fiberedness_necessary(sum)) return "sum of fiber surfaces fails the fiberedness certificate";
    }
    return std::nullopt;
  });
}

std::vector<std::string> suite_names() { return {"roundtrip", "samedef", "stallings", "morse", "algebra"}; }

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "roundtrip") return roundtrip_suite(o);
  if (name == "samedef") return samedef_suite(o);
  if (name == "stallings") return stallings_suite(o);
  if (name == "morse") return morse_suite(o);
  if (name == "algebra") return algebra_suite(o);
  throw Error(ErrorKind::IndexOutOfRange, "unknown suite '" + name + "'");
}

}  // namespace obk
