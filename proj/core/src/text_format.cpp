#include "obk/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "obk/error.hpp"

namespace obk {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

template <class T>
T parse_number(std::string_view s, std::size_t line) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T value{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) fail(line, "expected an integer, got '" + std::string(s) + "'");
  return value;
}

// "<id>:" or "<id> :" after a keyword; returns the index of the first token after the colon.
std::size_t take_label(const Line& l, std::string& id) {
  if (l.tokens.size() < 2) fail(l.number, "missing identifier after '" + l.tokens[0] + "'");
  id = l.tokens[1];
  if (id.size() > 1 && id.back() == ':') {
    id.pop_back();
    return 2;
  }
  if (l.tokens.size() > 2 && l.tokens[2] == ":") return 3;
  fail(l.number, "expected ':' after '" + id + "'");
}

SlotRecord parse_slot(const std::string& tok, std::size_t line) {
  const auto dot = tok.rfind('.');
  if (dot == std::string::npos || dot == 0) fail(line, "slot '" + tok + "' is not <band>.<end>");
  const auto end = tok.substr(dot + 1);
  if (end != "0" && end != "1") fail(line, "slot end must be 0 or 1 in '" + tok + "'");
  return SlotRecord{tok.substr(0, dot), end == "1" ? 1 : 0};
}

bool parse_surface_line(const Line& l, std::vector<DiskRecord>& disks, std::vector<BandRecord>& bands) {
  const auto& kw = l.tokens[0];
  if (kw == "disk") {
    DiskRecord d;
    for (auto i = take_label(l, d.id); i < l.tokens.size(); ++i) d.slots.push_back(parse_slot(l.tokens[i], l.number));
    disks.push_back(std::move(d));
    return true;
  }
  if (kw == "band") {
    BandRecord b;
    const auto i = take_label(l, b.id);
    if (l.tokens.size() != i + 2 || l.tokens[i] != "twist") fail(l.number, "expected 'band <id>: twist <int>'");
    b.half_twists = parse_number<int>(l.tokens[i + 1], l.number);
    bands.push_back(std::move(b));
    return true;
  }
  return false;
}

}  // namespace

RibbonSurface parse_surface(std::string_view text) {
  std::vector<DiskRecord> disks;
  std::vector<BandRecord> bands;
  for (const auto& l : tokenize(text))
    if (!parse_surface_line(l, disks, bands)) fail(l.number, "unknown keyword '" + l.tokens[0] + "'");
  return RibbonSurface::build(disks, bands);
}

std::string format_surface(const RibbonSurface& s) {
  std::ostringstream out;
  for (const auto& d : s.disk_records()) {
    out << "disk " << d.id << ":";
    for (const auto& slot : d.slots) out << ' ' << slot.band << '.' << slot.end;
    out << '\n';
  }
  for (const auto& b : s.band_records()) out << "band " << b.id << ": twist " << b.half_twists << '\n';
  return out.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(parse_number<Int>(text, 0));
    const Int den = parse_number<Int>(text.substr(slash + 1), 0);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    return Rational(parse_number<Int>(text.substr(0, slash), 0), den);
  } catch (const Error&) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

BookText parse_book(std::string_view text) {
  BookText book;
  std::vector<std::vector<Int>> rows;
  for (const auto& l : tokenize(text)) {
    if (parse_surface_line(l, book.disks, book.bands)) continue;
    const auto& kw = l.tokens[0];
    if (kw == "twist") {
      if (l.tokens.size() != 3 || (l.tokens[2] != "+" && l.tokens[2] != "-"))
        fail(l.number, "expected 'twist <cycle> <+|->'");
      const auto index = parse_number<std::size_t>(l.tokens[1], l.number);
      if (index == 0) fail(l.number, "cycle indices start at 1");
      book.twists.emplace_back(index - 1, l.tokens[2] == "+" ? 1 : -1);
    } else if (kw == "critical") {
      if (l.tokens.size() != 3) fail(l.number, "expected 'critical <index> <p>/<q>'");
      try {
        book.critical.push_back(CriticalPoint{parse_number<int>(l.tokens[1], l.number), parse_rational(l.tokens[2])});
      } catch (const Error& e) {
        fail(l.number, e.what());
      }
    } else if (kw == "core") {
      if (l.tokens.size() != 3) fail(l.number, "expected 'core <lo> <hi>'");
      try {
        book.core = CoreArc{parse_rational(l.tokens[1]), parse_rational(l.tokens[2])};
      } catch (const Error& e) {
        fail(l.number, e.what());
      }
    } else if (kw == "seifert") {
      std::vector<Int> row;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) row.push_back(parse_number<Int>(l.tokens[i], l.number));
      if (!rows.empty() && row.size() != rows.front().size()) fail(l.number, "ragged Seifert matrix");
      rows.push_back(std::move(row));
    } else {
      fail(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (book.disks.empty()) throw Error(ErrorKind::EmptyPresentation, "book file has no disks");
  if (!rows.empty()) {
    if (rows.size() != rows.front().size())
      throw Error(ErrorKind::ParseError, "Seifert matrix must be square");
    IntMatrix v(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) v(i, j) = rows[i][j];
    book.seifert = std::move(v);
  }
  return book;
}

std::string format_twists(const std::vector<std::pair<std::size_t, int>>& twists) {
  std::string out;
  for (const auto& [index, sign] : twists)
    out += "twist " + std::to_string(index + 1) + (sign > 0 ? " +\n" : " -\n");
  return out;
}

PatchText parse_patch(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) throw Error(ErrorKind::ParseError, "a patch file holds exactly one patch line");
  const auto& t = lines[0].tokens;
  if (t.size() < 5 || t[0] != "patch" || t[2] != "disk" || t[4] != "attach")
    fail(lines[0].number, "expected 'patch <surface-file> disk <id> attach <arcs>'");
  PatchText p{t[1], t[3], {}};
  for (std::size_t i = 5; i < t.size(); ++i) p.attach.push_back(parse_number<std::size_t>(t[i], lines[0].number));
  return p;
}

std::string format_patch(const PatchText& p) {
  std::string out = "patch " + p.surface_file + " disk " + p.disk + " attach";
  for (auto a : p.attach) out += " " + std::to_string(a);
  return out + "\n";
}

SumSpecText parse_sumspec(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) throw Error(ErrorKind::ParseError, "a sumspec file holds exactly one sumspec line");
  const auto& t = lines[0].tokens;
  if (t.size() != 7 || t[0] != "sumspec" || t[1] != "left" || t[3] != "right" || t[5] != "interleave")
    fail(lines[0].number, "expected 'sumspec left <patch> right <patch> interleave <word>'");
  if (t[6].find_first_not_of("LR") != std::string::npos) fail(lines[0].number, "interleaving uses only L and R");
  return SumSpecText{t[2], t[4], t[6]};
}

std::string format_sumspec(const SumSpecText& s) {
  return "sumspec left " + s.left_file + " right " + s.right_file + " interleave " + s.interleaving + "\n";
}

PlumbingGraph parse_graph(std::string_view text) {
  std::vector<PlumbingVertex> vertices;
  std::vector<PlumbingEdge> edges;
  for (const auto& l : tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "vertex") {
      if (t.size() != 3 && t.size() != 4) fail(l.number, "expected 'vertex <id> <euler> [dim]'");
      vertices.push_back(PlumbingVertex{t[1], parse_number<Int>(t[2], l.number),
                                        t.size() == 4 ? parse_number<int>(t[3], l.number) : 2});
    } else if (t[0] == "edge") {
      if (t.size() != 4) fail(l.number, "expected 'edge <id> <id> <+1|-1>'");
      edges.push_back(PlumbingEdge{t[1], t[2], parse_number<int>(t[3], l.number)});
    } else {
      fail(l.number, "unknown keyword '" + t[0] + "'");
    }
  }
  return PlumbingGraph::build(std::move(vertices), std::move(edges));
}

std::string format_graph(const PlumbingGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v.id << ' ' << v.euler << ' ' << v.dim << '\n';
  for (const auto& e : g.edges()) out << "edge " << e.v << ' ' << e.w << ' ' << (e.sign > 0 ? "+1" : "-1") << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace obk
