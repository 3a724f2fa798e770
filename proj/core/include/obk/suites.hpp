#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "obk/braid.hpp"
#include "obk/mapclass.hpp"
#include "obk/surface.hpp"

namespace obk {

using Rng = std::mt19937_64;

/// OBK_SEED if set and numeric, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = 20261019);

/// Instance i of a suite draws from its own stream, so results do not
/// depend on how instances are spread over threads.
Rng instance_rng(std::uint64_t seed, std::size_t instance);

// Generators.
int random_sign(Rng& rng);
int random_int(Rng& rng, int lo, int hi);  // inclusive
/// Homogeneous braid on 2..max_strands strands using every generator,
/// with n-1..max_crossings letters.
BraidWord random_homogeneous_braid(Rng& rng, int max_strands = 5, int max_crossings = 10);
/// Connected orientable surface with up to max_disks disks and
/// max_extra_bands bands beyond a spanning tree; twists may be odd.
RibbonSurface random_orientable_surface(Rng& rng, int max_disks = 4, int max_extra_bands = 4);
/// Word of twists about random small homology classes.
std::vector<TwistLetter> random_twist_word(Rng& rng, std::size_t rank, int max_length = 6);
/// Word with `left` L's and `right` R's in random order.
std::string random_interleaving(Rng& rng, std::size_t left, std::size_t right);
/// Same surface with disks, bands and band ends renamed and reordered.
RibbonSurface relabeled(const RibbonSurface& s, Rng& rng);

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;  // first few only
  bool ok() const { return instances > 0 && passed == instances; }
};

struct SuiteOptions {
  std::uint64_t seed = 20261019;
  std::size_t count = 100;
  unsigned jobs = 1;
};

/// split_seifert o circle_collapsed_mapping_torus and the reverse are identities.
SuiteResult roundtrip_suite(const SuiteOptions& o);
/// Embedded sum of primitive Seifert data against the stiffened cobordism
/// sum of primitive open books.
SuiteResult samedef_suite(const SuiteOptions& o);
/// Stallings open books of homogeneous braids.
SuiteResult stallings_suite(const SuiteOptions& o);
/// chi additivity of sums and exact additivity of Morse counts.
SuiteResult morse_suite(const SuiteOptions& o);
/// V - V^T = J, char_poly of the homological monodromy, determinant
/// multiplicativity under embedded sums.
SuiteResult algebra_suite(const SuiteOptions& o);

std::vector<std::string> suite_names();
/// Throws IndexOutOfRange for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace obk
