#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "obk/integer_matrix.hpp"
#include "obk/openbook.hpp"
#include "obk/plumbgraph.hpp"
#include "obk/surface.hpp"

namespace obk {

// Line-oriented formats; blank lines and '#' comments are ignored. Every
// parser throws ParseError with the offending line number.

///   disk <id>: <band>.<end> ...     (counterclockwise)
///   band <id>: twist <int>
RibbonSurface parse_surface(std::string_view text);
std::string format_surface(const RibbonSurface& s);

/// A surface file that may also carry
///   twist <cycle> <+|->     (1-based cycle index; the last line acts first)
///   critical <k> <p>/<q>
///   core <lo> <hi>
///   seifert <row entries>   (one line per row)
struct BookText {
  std::vector<DiskRecord> disks;
  std::vector<BandRecord> bands;
  std::vector<std::pair<std::size_t, int>> twists;  // 0-based
  std::vector<CriticalPoint> critical;
  std::optional<CoreArc> core;
  std::optional<IntMatrix> seifert;

  RibbonSurface surface() const { return RibbonSurface::build(disks, bands); }
};

BookText parse_book(std::string_view text);
std::string format_twists(const std::vector<std::pair<std::size_t, int>>& twists);

/// patch <surface-file> disk <id> attach <arc> ...
struct PatchText {
  std::string surface_file;
  std::string disk;
  std::vector<std::size_t> attach;
};

PatchText parse_patch(std::string_view text);
std::string format_patch(const PatchText& p);

/// sumspec left <patch-file> right <patch-file> interleave <word>
struct SumSpecText {
  std::string left_file;
  std::string right_file;
  std::string interleaving;
};

SumSpecText parse_sumspec(std::string_view text);
std::string format_sumspec(const SumSpecText& s);

///   vertex <id> <euler> [dim]
///   edge <id> <id> <+1|-1>
PlumbingGraph parse_graph(std::string_view text);
std::string format_graph(const PlumbingGraph& g);

/// "p/q" or "p".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Whole file contents. Throws ParseError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace obk
