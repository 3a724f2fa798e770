#include "obk_cli/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "obk/obk.hpp"
#include "obk_cli/report.hpp"

namespace obk::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Report& r, bool json, std::ostream& out) { out << (json ? r.json() : r.text()); }

std::pair<int, int> parse_primitive(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected n,sign but got '" + text + "'");
  try {
    std::size_t used = 0;
    const int n = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string s = text.substr(comma + 1);
    int sign = 0;
    if (s == "+" || s == "+1" || s == "1") sign = 1;
    if (s == "-" || s == "-1") sign = -1;
    if (sign == 0 || n < 1) throw std::invalid_argument(text);
    return {n, sign};
  } catch (const std::logic_error&) {
    throw UsageError("expected n,sign with n >= 1 and sign +1 or -1, got '" + text + "'");
  }
}

void add_surface(Report& r, const RibbonSurface& s) {
  const auto inv = invariants(s);
  r.add("disks", s.disk_count());
  r.add("bands", s.band_count());
  r.add("euler", inv.euler);
  r.add("boundary", inv.boundary_count);
  r.add("orientable", inv.orientable);
  r.add("components", inv.components);
  if (inv.genus) r.add("genus", *inv.genus);
  r.op("euler_characteristic");
  r.op("boundary_walk");
  r.op("orientability");
}

void add_seifert(Report& r, const SeifertData& d) {
  r.add("seifert", d.seifert_matrix());
  r.add("alexander", alexander(d));
  r.add("det", determinant(d.seifert_matrix()));
  r.add("fibered_necessary", fiberedness_necessary(d));
  r.op("alexander");
  r.op("fiberedness_necessary");
}

// braid ---------------------------------------------------------------

struct BraidOptions {
  int strands = 0;
  std::string word;
  bool certify = false;
  bool json = false;
};

int cmd_braid(const BraidOptions& o, std::ostream& out) {
  Report r("braid");
  r.input("braid", std::to_string(o.strands) + ":" + o.word);
  const auto b = parse_braid(o.word, o.strands);
  r.op("parse_braid");
  r.add("strands", b.strands);
  r.add("word", to_string(b));
  r.add("crossings", b.letters.size());
  r.add("homogeneous", is_homogeneous(b));
  r.op("is_homogeneous");
  r.add("closure_components", closure_components(b));
  const auto surface = bennequin_surface(b);
  r.op("bennequin_surface");
  add_surface(r, surface);
  std::optional<Polynomial> alex;
  if (uses_all_generators(b)) {
    const auto d = seifert_matrix_bennequin(b);
    r.op("seifert_matrix_bennequin");
    r.add("rank", d.rank());
    add_seifert(r, d);
    alex = alexander(d);
  }
  int code = kOk;
  if (o.certify) {
    const auto dec = s_decomposition(b);
    r.op("s_decomposition");
    Json pieces = Json::array();
    for (const auto& p : dec.pieces) pieces.push_back("(" + std::to_string(p.n) + "," + std::to_string(p.sign) + ")");
    r.add("pieces", pieces);
    const auto book = stallings_open_book(b);
    r.op("stallings_open_book");
    const auto cp = char_poly(book.monodromy()).normalized();
    r.op("char_poly");
    r.add("charpoly", cp);
    const auto page = invariants(*book.page());
    r.add("page_euler", page.euler);
    const bool agree = alex && equal_up_to_units(*alex, cp) && page == invariants(surface) &&
                       page.euler == b.strands - static_cast<int>(b.letters.size());
    r.add("agree", agree);
    if (!agree) code = kVerificationFailure;
  }
  emit(r, o.json, out);
  return code;
}

// sum -----------------------------------------------------------------

struct SumOptions {
  std::string left_primitive, right_primitive, interleave, spec_file;
  std::string left_disk = "D1", right_disk = "D1";
  std::string order = "left-first";
  bool verify_samedef = false;
  bool json = false;
};

struct Side {
  std::optional<AbstractOpenBook> book;
  std::optional<SeifertData> seifert;
  std::vector<CriticalPoint> critical;
  std::optional<CoreArc> core;
  std::optional<Patch> patch;
};

Side primitive_side(const std::string& text, const std::string& disk, Report& r, const std::string& label) {
  const auto [n, sign] = parse_primitive(text);
  r.input(label, "primitive " + std::to_string(n) + "," + std::to_string(sign));
  Side s;
  s.book = primitive_open_book(n, sign);
  r.op("primitive_open_book");
  if (n >= 2) {
    s.seifert = SeifertData(s.book->page_homology(), seifert_matrix_primitive(n, sign).seifert_matrix());
    r.op("seifert_matrix_primitive");
  }
  s.patch = make_slot_patch(s.book->page(), disk);
  r.op("make_patch");
  return s;
}

Side file_side(const fs::path& patch_file, Report& r, const std::string& label) {
  const auto patch_text = read_text_file(patch_file);
  r.input(label + "_patch", patch_text);
  const auto p = parse_patch(patch_text);
  const auto surface_text = read_text_file(patch_file.parent_path() / p.surface_file);
  r.input(label + "_surface", surface_text);
  const auto bt = parse_book(surface_text);
  Side s;
  s.book = open_book(std::make_shared<const RibbonSurface>(bt.surface()), bt.twists);
  r.op("open_book");
  if (bt.seifert) s.seifert = SeifertData(s.book->page_homology(), *bt.seifert);
  s.critical = bt.critical;
  s.core = bt.core;
  s.patch = make_patch(s.book->page(), p.disk, p.attach);
  r.op("make_patch");
  return s;
}

int cmd_sum(const SumOptions& o, std::ostream& out) {
  Report r("sum");
  SumOrder order = SumOrder::LeftFirst;
  if (o.order == "right-first") {
    order = SumOrder::RightFirst;
  } else if (o.order != "left-first") {
    throw UsageError("--order must be left-first or right-first");
  }
  Side left, right;
  std::string word;
  if (!o.spec_file.empty()) {
    if (!o.left_primitive.empty() || !o.right_primitive.empty())
      throw UsageError("--spec cannot be combined with primitive inputs");
    const fs::path spec_path(o.spec_file);
    const auto text = read_text_file(spec_path);
    r.input("spec", text);
    const auto st = parse_sumspec(text);
    left = file_side(spec_path.parent_path() / st.left_file, r, "left");
    right = file_side(spec_path.parent_path() / st.right_file, r, "right");
    word = st.interleaving;
  } else {
    if (o.left_primitive.empty() || o.right_primitive.empty() || o.interleave.empty())
      throw UsageError("give --spec, or --left-primitive, --right-primitive and --interleave");
    left = primitive_side(o.left_primitive, o.left_disk, r, "left");
    right = primitive_side(o.right_primitive, o.right_disk, r, "right");
    word = o.interleave;
    r.input("interleave", word);
  }
  SumSpec spec{*left.patch, *right.patch, word};
  if (!check_summable(spec))
    throw Error(ErrorKind::NotSummable, "interleaving '" + word + "' does not match the attaching arcs");
  r.op("check_summable");
  const auto obs = sum_open_books(*left.book, *right.book, spec);
  r.op("abstract_sum");
  r.op("open_book_sum");
  r.add("interleave", word);
  r.add("euler_left", euler_characteristic(*left.book->page()));
  r.add("euler_right", euler_characteristic(*right.book->page()));
  add_surface(r, *obs.book.page());
  r.add("rank", obs.book.page_homology()->rank());
  const auto cp = char_poly(obs.book.monodromy()).normalized();
  r.op("char_poly");
  r.add("charpoly", cp);

  int code = kOk;
  const CoreArc first_core = left.core.value_or(CoreArc{Rational(5, 8), Rational(7, 8)});
  const CoreArc second_core = right.core.value_or(CoreArc{Rational(1, 8), Rational(3, 8)});
  if (left.seifert && right.seifert) {
    const auto chords = chords_for(spec, *left.book->page_homology(), *right.book->page_homology());
    r.op("embedded_sum");
    const auto emb = embedded_sum(*left.seifert, *right.seifert, spec, chords, order);
    r.add("order", o.order);
    r.add("coupling", coupling_block(spec, chords));
    add_seifert(r, emb);
    try {
      r.add("order_invariant", order_invariant(*left.seifert, *right.seifert, spec, chords, order));
      r.op("order_invariant");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoCoreCycle) throw;
      r.add("order_invariant", "none");
    }
    const bool agree = equal_up_to_units(alexander(emb), cp);
    r.add("agree", agree);
    if (!agree) code = kVerificationFailure;
    if (o.verify_samedef) {
      const auto s1 = stiffen(CylindricalCobordism(left.book->monodromy()), first_core);
      const auto s2 = stiffen(CylindricalCobordism(right.book->monodromy()), second_core);
      r.op("sum_stiffened");
      r.op("verify_samedef");
      try {
        verify_samedef(s1, s2, spec, emb);
        r.add("samedef", "pass");
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvariantMismatch) throw;
        r.add("samedef", "fail");
        code = kVerificationFailure;
      }
    }
  } else if (o.verify_samedef) {
    throw UsageError("--verify-samedef needs Seifert matrices for both summands");
  }
  if (!left.critical.empty() || !right.critical.empty()) {
    const MorseOpenBook m1(left.book, 3, left.critical), m2(right.book, 3, right.critical);
    const auto m = left.core && right.core ? morse_sum(m1, m2, spec, first_core, second_core) : morse_sum(m1, m2, spec);
    r.op("morse_sum");
    r.add("morse_numbers", morse_numbers(m).counts);
  }
  emit(r, o.json, out);
  return code;
}

// plumb ---------------------------------------------------------------

struct PlumbOptions {
  std::string builtin, graph_file;
  bool negative = false;
  bool json = false;
};

int cmd_plumb(const PlumbOptions& o, std::ostream& out) {
  Report r("plumb");
  std::optional<PlumbingGraph> g;
  if (!o.builtin.empty() == !o.graph_file.empty()) throw UsageError("give exactly one of --builtin or --graph");
  if (o.builtin == "milnor") {
    g = milnor_graph();
    r.input("builtin", "milnor");
  } else if (o.builtin == "e8") {
    g = e8_graph(o.negative ? -2 : 2);
    r.input("builtin", o.negative ? "e8-" : "e8");
  } else if (!o.builtin.empty()) {
    throw UsageError("unknown builtin '" + o.builtin + "' (milnor, e8)");
  } else {
    const auto text = read_text_file(o.graph_file);
    r.input("graph", text);
    g = parse_graph(text);
  }
  const auto m = intersection_matrix(*g);
  r.op("intersection_matrix");
  const auto lattice = lattice_report(*g);
  r.op("lattice_report");
  r.add("vertices", g->vertices().size());
  r.add("edges", g->edges().size());
  r.add("connected", g->connected());
  r.add("matrix", m);
  r.add("symmetric", is_symmetric(m));
  r.add("det", lattice.determinant);
  r.add("torsion", lattice.torsion);
  r.add("unimodular", lattice.determinant == 1 || lattice.determinant == -1);
  emit(r, o.json, out);
  return kOk;
}

// surface -------------------------------------------------------------

struct SurfaceOptions {
  std::string file, primitive;
  bool json = false;
};

int cmd_surface(const SurfaceOptions& o, std::ostream& out) {
  Report r("surface");
  if (o.file.empty() == o.primitive.empty()) throw UsageError("give a surface file or --primitive n,sign");
  std::optional<AbstractOpenBook> book;
  std::optional<SeifertData> seifert;
  std::vector<CriticalPoint> critical;
  SurfacePtr page;
  if (!o.primitive.empty()) {
    const auto [n, sign] = parse_primitive(o.primitive);
    r.input("primitive", std::to_string(n) + "," + std::to_string(sign));
    page = std::make_shared<const RibbonSurface>(primitive_s_surface(n, sign));
    r.op("primitive_s_surface");
    if (n >= 2) {
      book = primitive_open_book(n, sign);
      seifert = SeifertData(book->page_homology(), seifert_matrix_primitive(n, sign).seifert_matrix());
    }
  } else {
    const auto text = read_text_file(o.file);
    r.input("surface", text);
    const auto bt = parse_book(text);
    page = std::make_shared<const RibbonSurface>(bt.surface());
    r.op("build_surface");
    if (orientability(*page).orientable) {
      book = open_book(page, bt.twists);
      if (bt.seifert) seifert = SeifertData(book->page_homology(), *bt.seifert);
    } else if (!bt.twists.empty() || bt.seifert) {
      throw Error(ErrorKind::NotOrientable, "twists and Seifert matrices need an orientable surface");
    }
    critical = bt.critical;
  }
  add_surface(r, *page);
  Json lengths = Json::array();
  for (const auto& c : boundary_walk(*page)) lengths.push_back(c.arcs.size());
  r.add("circuit_arcs", lengths);
  if (book) {
    r.op("homology_basis");
    r.add("rank", book->page_homology()->rank());
    r.add("intersection", book->page_homology()->intersection());
    r.add("charpoly", char_poly(book->monodromy()).normalized());
    r.op("char_poly");
  }
  if (seifert) add_seifert(r, *seifert);
  if (!critical.empty()) {
    r.add("morse_numbers", morse_numbers(MorseOpenBook(book, 3, critical)).counts);
    r.op("morse_numbers");
  }
  emit(r, o.json, out);
  return kOk;
}

// verify --------------------------------------------------------------

struct VerifyOptions {
  std::vector<std::string> suites;
  std::size_t count = 100;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
  bool json = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  Report r("verify");
  const auto seed = o.seed.value_or(seed_from_env());
  const auto names = o.suites.empty() ? suite_names() : o.suites;
  r.input("seed", std::to_string(seed));
  r.add("seed", seed);
  r.add("count", o.count);
  bool all = true;
  for (const auto& name : names) {
    const auto res = run_suite(name, SuiteOptions{seed, o.count, o.jobs});
    r.op(name + "_suite");
    r.add(name, std::to_string(res.passed) + "/" + std::to_string(res.instances));
    for (const auto& f : res.failures) err << name << ": " << f << "\n";
    all = all && res.ok();
  }
  r.add("result", all ? "pass" : "fail");
  emit(r, o.json, out);
  return all ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"surface sums, open books and their invariants", "obk"};
  app.set_version_flag("--version", std::string(OBK_VERSION));
  app.require_subcommand(1);

  BraidOptions braid;
  auto* b = app.add_subcommand("braid", "invariants and Stallings certificate of a braid closure");
  b->add_option("--strands", braid.strands, "number of strands")->required();
  b->add_option("--word", braid.word, "whitespace-separated nonzero generator indices")->required();
  b->add_flag("--certify", braid.certify, "build the Stallings open book and compare polynomials");
  b->add_flag("--json", braid.json);

  SumOptions sum;
  auto* s = app.add_subcommand("sum", "abstract, embedded and open-book sum of two patched surfaces");
  s->add_option("--spec", sum.spec_file, "sumspec file");
  s->add_option("--left-primitive", sum.left_primitive, "primitive piece n,sign");
  s->add_option("--right-primitive", sum.right_primitive, "primitive piece n,sign");
  s->add_option("--left-disk", sum.left_disk, "patch disk on the left primitive piece");
  s->add_option("--right-disk", sum.right_disk, "patch disk on the right primitive piece");
  s->add_option("--interleave", sum.interleave, "cyclic L/R word");
  s->add_option("--order", sum.order, "left-first or right-first");
  s->add_flag("--verify-samedef", sum.verify_samedef, "compare the embedded sum with the stiffened cobordism sum");
  s->add_flag("--json", sum.json);

  PlumbOptions plumb;
  auto* p = app.add_subcommand("plumb", "intersection lattice of a plumbing graph");
  p->add_option("--builtin", plumb.builtin, "milnor or e8");
  p->add_option("--graph", plumb.graph_file, "graph file");
  p->add_flag("--negative", plumb.negative, "e8 with Euler numbers -2");
  p->add_flag("--json", plumb.json);

  SurfaceOptions surf;
  auto* f = app.add_subcommand("surface", "invariants of a surface or book file");
  f->add_option("file", surf.file, "surface file");
  f->add_option("--primitive", surf.primitive, "primitive s-surface n,sign");
  f->add_flag("--json", surf.json);

  VerifyOptions verify;
  std::uint64_t seed = 0;
  auto* v = app.add_subcommand("verify", "randomized cross-check suites");
  v->add_option("--suite", verify.suites, "suite name (repeatable)")->check(CLI::IsMember(suite_names()));
  v->add_option("--count", verify.count, "instances per suite")->check(CLI::PositiveNumber);
  v->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber);
  auto* seed_opt = v->add_option("--seed", seed, "overrides OBK_SEED");
  v->add_flag("--json", verify.json);

  std::vector<const char*> argv{"obk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }
  try {
    if (*b) return cmd_braid(braid, out);
    if (*s) return cmd_sum(sum, out);
    if (*p) return cmd_plumb(plumb, out);
    if (*f) return cmd_surface(surf, out);
    if (*v) {
      if (*seed_opt) verify.seed = seed;
      return cmd_verify(verify, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace obk::cli
