// flagvec: command-line front end for the flag-vector library.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flagvec/flagvec.hpp"

namespace {

using namespace flagvec;
using io::json;

constexpr const char* kVersion = "0.1.0";

enum class Format { text, json, csv };

struct Global {
  std::string format;
  bool no_meta = false;
  std::uint64_t seed = VerifyOptions{}.seed;
};

struct FamilyArgs {
  std::string family;
  int d = -1;
  int n = -1;
  std::string lattice_file;
  std::string save_lattice;
};

Format resolve(const Global& g, Format fallback) {
  if (g.format == "json") return Format::json;
  if (g.format == "csv") return Format::csv;
  return fallback;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

json with_meta(const Global& g, const std::string& command, json doc) {
  if (g.no_meta) return doc;
  json out = {{"meta", {{"tool", "flagvec"}, {"version", kVersion}, {"command", command}, {"seed", g.seed}}}};
  for (auto& [k, v] : doc.items()) out[k] = v;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw invalid_params("cannot write " + path);
  out << text;
}

/// Loads the document at `arg`, or parses `arg` itself as inline JSON.
json load_json(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return io::parse(arg);
  return io::parse(read_file(arg));
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      long v = std::stol(text, &used);
      if (used != text.size()) throw parse_error("");
      return {v, v};
    }
    long lo = std::stol(text.substr(0, dots), &used);
    if (used != dots) throw parse_error("");
    std::string rest = text.substr(dots + 2);
    long hi = std::stol(rest, &used);
    if (used != rest.size()) throw parse_error("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw parse_error("expected a range like 8..20, got '" + text + "'");
  }
}

FaceLattice build_family(const FamilyArgs& a) {
  if (!a.lattice_file.empty()) return io::lattice_from_json(load_json(a.lattice_file));
  auto need = [](int v, const char* what, const std::string& fam) {
    if (v < 0) throw invalid_params(fam + " needs " + what);
    return v;
  };
  FaceLattice l = [&] {
    if (a.family == "simplex") return build_simplex(need(a.d, "-d", a.family));
    if (a.family == "cube") return build_cube(need(a.d, "-d", a.family));
    if (a.family == "crosspolytope") return build_crosspolytope(need(a.d, "-d", a.family));
    if (a.family == "cyclic") return build_cyclic(need(a.d, "-d", a.family), need(a.n, "-n", a.family));
    if (a.family == "polygon") return build_polygon(need(a.n, "-n", a.family));
    throw invalid_params("family '" + a.family + "' has no face lattice");
  }();
  if (!a.save_lattice.empty()) write_file(a.save_lattice, io::to_json(l).dump() + "\n");
  return l;
}

void add_family_options(CLI::App* cmd, FamilyArgs& a, bool required) {
  auto* fam = cmd->add_option("family", a.family, "simplex | cube | crosspolytope | cyclic | polygon");
  if (required) fam->required();
  cmd->add_option("-d,--dim", a.d, "dimension");
  cmd->add_option("-n,--vertices", a.n, "number of vertices");
  cmd->add_option("--lattice-file", a.lattice_file, "read the face lattice from a JSON document");
  cmd->add_option("--save-lattice", a.save_lattice, "write the face lattice as JSON");
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out;
}

std::vector<std::string> fvector_header(int d) {
  std::vector<std::string> h;
  for (int i = 0; i < d; ++i) h.push_back("f" + std::to_string(i));
  return h;
}

std::vector<std::string> fvector_cells(const FVector& f) {
  std::vector<std::string> c;
  for (const Integer& x : f.components()) c.push_back(to_string(x));
  return c;
}

std::string verdict_cell(const Verdict& v) {
  return v.holds ? "true" : "false(k=" + std::to_string(v.witness.value_or(-1)) + ")";
}

// generate

int run_generate(const Global& g, const FamilyArgs& a, bool with_flags) {
  FVector f;
  json doc;
  if (a.family == "p7n") {
    if (a.n < 0) throw invalid_params("p7n needs -n");
    f = p7n(a.n);
    doc = {{"family", a.family}, {"n", a.n}, {"d", f.dim()}, {"f", io::to_json(f)}};
  } else {
    FaceLattice l = build_family(a);
    f = l.f_vector();
    doc = {{"family", a.family.empty() ? "lattice-file" : a.family}, {"d", l.dim()}};
    if (a.n >= 0) doc["n"] = a.n;
    doc["f"] = io::to_json(f);
    if (with_flags) doc["flags"] = io::to_json(flag_vector(l))["flags"];
  }
  if (resolve(g, Format::csv) == Format::csv) {
    std::cout << csv_row(fvector_header(f.dim())) << '\n' << csv_row(fvector_cells(f)) << '\n';
  } else {
    emit(with_meta(g, "generate", std::move(doc)));
  }
  return 0;
}

// check

FVector parse_fvector_text(const std::string& text) {
  std::vector<Integer> parts;
  std::string cell;
  std::stringstream ss(text);
  while (std::getline(ss, cell, ',')) {
    auto b = cell.find_first_not_of(" \t\r\n");
    auto e = cell.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw parse_error("empty component in f-vector '" + text + "'");
    parts.push_back(parse_integer(cell.substr(b, e - b + 1)));
  }
  return FVector(std::move(parts));
}

FVector load_fvector(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::string text = read_file(arg);
    auto b = text.find_first_not_of(" \t\r\n");
    if (b != std::string::npos && (text[b] == '[' || text[b] == '{')) {
      json doc = io::parse(text);
      return io::fvector_from_json(doc.is_object() ? doc.at("f") : doc);
    }
    return parse_fvector_text(text);
  }
  return parse_fvector_text(arg);
}

void validate_fvector(const FVector& f, int d) {
  if (f.dim() < 1) throw invalid_params("empty f-vector");
  if (d >= 0 && d != f.dim())
    throw dimension_mismatch("expected " + std::to_string(d) + " components, got " + std::to_string(f.dim()));
  for (const Integer& x : f.components())
    if (x <= 0) throw invalid_params("f-vector components must be positive");
  const Integer minimum = f.dim() + 1;
  if (f[0] < minimum || f[f.dim() - 1] < minimum)
    throw invalid_params("a " + std::to_string(f.dim()) + "-polytope has at least " + to_string(minimum) +
                         " vertices and facets");
}

int run_check(const Global& g, const std::string& input, int d) {
  FVector f = load_fvector(input);
  validate_fvector(f, d);
  PropertyReport p = properties(f);
  if (resolve(g, Format::json) == Format::csv) {
    std::cout << "f,euler,C,L,U,B\n"
              << '"' << f.str() << "\"," << (euler_check(f) ? "true" : "false") << ',' << verdict_cell(p.convex)
              << ',' << verdict_cell(p.log_convex) << ',' << verdict_cell(p.unimodal) << ','
              << verdict_cell(p.barany) << '\n';
  } else {
    emit(with_meta(g, "check",
                   {{"d", f.dim()}, {"f", io::to_json(f)}, {"euler", euler_check(f)}, {"properties", io::to_json(p)}}));
  }
  return 0;
}

// flags

int run_flags(const Global& g, const FamilyArgs& a, const std::string& sparse_file, bool sparse_only) {
  FlagVector v(0);
  if (!sparse_file.empty()) {
    auto [data, d] = io::sparse_from_json(load_json(sparse_file));
    v = complete_from_sparse(data, d);
  } else {
    v = flag_vector(build_family(a));
  }
  if (resolve(g, Format::json) == Format::csv) {
    std::cout << "S,f_S\n";
    if (sparse_only) {
      for (const auto& [s, x] : restrict_to_sparse(v)) std::cout << s.key() << ',' << to_string(x) << '\n';
    } else {
      for (const auto& [s, x] : v.entries()) std::cout << s.key() << ',' << to_string(x) << '\n';
    }
    return 0;
  }
  json doc = sparse_only ? io::to_json(restrict_to_sparse(v), v.dim()) : io::to_json(v);
  doc["gds"] = satisfies_gds(v);
  emit(with_meta(g, "flags", std::move(doc)));
  return 0;
}

// cdindex

int run_cdindex(const Global& g, const FamilyArgs& a, const std::string& input, const std::string& coeff) {
  FlagVector v(0);
  if (!input.empty()) {
    json doc = load_json(input);
    v = doc.contains("entries") && !doc.contains("flags")
            ? complete_from_sparse(io::sparse_from_json(doc).first, io::detail::dimension_from(doc))
            : io::flag_vector_from_json(doc);
  } else {
    FaceLattice l = build_family(a);
    if (!is_eulerian(l)) throw not_eulerian("face lattice is not Eulerian");
    v = flag_vector(l);
  }
  CdPolynomial<Rational> psi = cd_index(v);
  const Format fmt = resolve(g, Format::text);
  if (!coeff.empty()) {
    const CdWord u = parse_cd_word(coeff);
    const Rational value = cd_coefficient(v, u);
    if (fmt == Format::json) {
      emit(with_meta(g, "cdindex", {{"d", v.dim()}, {"word", u.str()}, {"value", to_string(value)}}));
    } else if (fmt == Format::csv) {
      std::cout << "word,coefficient\n" << u.str() << ',' << to_string(value) << '\n';
    } else {
      std::cout << to_string(value) << '\n';
    }
    return 0;
  }
  if (fmt == Format::json) {
    emit(with_meta(g, "cdindex", io::to_json(psi)));
  } else if (fmt == Format::csv) {
    std::cout << "word,coefficient\n";
    for (const auto& [u, c] : psi.terms) std::cout << u.str() << ',' << to_string(c) << '\n';
  } else {
    std::cout << to_string(psi) << '\n';
  }
  return 0;
}

// convolve

FlagForm parse_form_operand(const std::string& arg) {
  if (arg.size() > 3 && arg[0] == 'g' && (arg[1] == '0' || arg[1] == '1') && arg[2] == ':') {
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(arg.substr(3), &used);
      if (used != arg.size() - 3) throw parse_error("");
    } catch (const std::exception&) {
      throw parse_error("bad form operand '" + arg + "'");
    }
    if (d < 0 || d > kMaxDimension) throw parse_error("dimension out of range in '" + arg + "'");
    if (arg[1] == '0') return g0_form(d);
    if (d < 1) throw invalid_params("g1 needs dimension at least 1");
    return g1_form(d);
  }
  return io::form_from_json(load_json(arg));
}

int run_convolve(const Global& g, const std::vector<std::string>& operands, bool reduce, const FamilyArgs& a) {
  std::vector<FlagForm> forms;
  for (const std::string& op : operands) forms.push_back(parse_form_operand(op));
  FlagForm product = forms.front();
  for (std::size_t i = 1; i < forms.size(); ++i) product = convolve(product, forms[i]);
  if (product.dim() > kMaxDimension) throw limit_exceeded("convolution exceeds dimension " + std::to_string(kMaxDimension));
  const FlagForm shown = reduce ? product.reduced() : product;

  json doc = io::to_json(shown);
  doc["form"] = shown.str();
  if (!a.family.empty() || !a.lattice_file.empty()) {
    FaceLattice l = build_family(a);
    if (l.dim() != product.dim())
      throw dimension_mismatch("form has dimension " + std::to_string(product.dim()) + ", lattice " +
                               std::to_string(l.dim()));
    doc["value"] = to_string(evaluate(product, flag_vector(l)));
    if (forms.size() == 2) doc["value_face_sum"] = to_string(evaluate_by_face_sum(forms[0], forms[1], l));
  }
  if (resolve(g, Format::json) == Format::csv) {
    std::cout << "S,coefficient\n";
    for (const auto& [s, c] : shown.coeffs()) std::cout << s.key() << ',' << to_string(c) << '\n';
  } else {
    emit(with_meta(g, "convolve", std::move(doc)));
  }
  return 0;
}

// candidates

int run_candidates(const Global& g, const std::string& which, const std::string& ell_range, const std::string& input) {
  std::vector<std::pair<std::string, CandidateReport>> reports;
  if (!input.empty()) {
    auto [data, d] = io::sparse_from_json(load_json(input));
    reports.emplace_back("input", check_candidate(data, d));
  } else if (which == "7d") {
    reports.emplace_back("7d", check_candidate(candidate_7d(), 7));
  } else if (which == "6d") {
    auto [lo, hi] = parse_range(ell_range);
    if (lo < 0 || hi < lo) throw invalid_params("candidate range needs 0 <= lo <= hi");
    for (long ell = lo; ell <= hi; ++ell) reports.emplace_back(std::to_string(ell), check_candidate(candidate_6d(ell), 6));
  } else {
    throw invalid_params("candidates needs 6d, 7d or --input");
  }
  if (resolve(g, Format::json) == Format::csv) {
    std::cout << "label,d,f,euler,gds,battery_passes,f1_le_f2,C,L,U,B\n";
    for (const auto& [label, r] : reports)
      std::cout << label << ',' << r.d << ",\"" << r.f.str() << "\"," << r.euler << ',' << r.gds << ','
                << r.battery_passes << ',' << r.rise_to_f2 << ',' << verdict_cell(r.properties.convex) << ','
                << verdict_cell(r.properties.log_convex) << ',' << verdict_cell(r.properties.unimodal) << ','
                << verdict_cell(r.properties.barany) << '\n';
    return 0;
  }
  json arr = json::array();
  for (const auto& [label, r] : reports) {
    json item = {{"label", label}};
    json body = io::to_json(r);
    for (auto& [k, v] : body.items()) item[k] = v;
    arr.push_back(std::move(item));
  }
  emit(with_meta(g, "candidates", {{"candidates", std::move(arr)}}));
  return 0;
}

// scan

int run_scan(const Global& g, const std::string& kind, const std::string& range) {
  auto [lo, hi] = parse_range(range);
  const bool csv = resolve(g, Format::csv) == Format::csv;
  json rows = json::array();
  if (kind == "logconv7") {
    std::vector<RatioTriple> scan = logconv_scan(lo, hi);
    if (csv) std::cout << "n,r1,r2,r3,r1_approx,r2_approx,r3_approx\n";
    for (const RatioTriple& t : scan) {
      if (csv) {
        std::cout << csv_row({std::to_string(t.n), to_string(t.r1), to_string(t.r2), to_string(t.r3),
                              to_decimal(t.r1), to_decimal(t.r2), to_decimal(t.r3)})
                  << '\n';
      } else {
        rows.push_back({{"n", t.n},
                        {"r1", to_string(t.r1)},
                        {"r2", to_string(t.r2)},
                        {"r3", to_string(t.r3)},
                        {"approx", {{"r1", to_decimal(t.r1)}, {"r2", to_decimal(t.r2)}, {"r3", to_decimal(t.r3)}}}});
      }
    }
  } else if (kind == "convexity5") {
    std::vector<ConvexityRow> scan = convexity5_scan(lo, hi);
    if (csv) std::cout << "n,f0,f1,f2,f3,f4,gap,gap_approx\n";
    for (const ConvexityRow& r : scan) {
      if (csv) {
        std::vector<std::string> cells{std::to_string(r.n)};
        for (const std::string& c : fvector_cells(r.f)) cells.push_back(c);
        cells.push_back(to_string(r.gap));
        cells.push_back(to_decimal(r.gap));
        std::cout << csv_row(cells) << '\n';
      } else {
        rows.push_back(
            {{"n", r.n}, {"f", io::to_json(r.f)}, {"gap", to_string(r.gap)}, {"approx", {{"gap", to_decimal(r.gap)}}}});
      }
    }
  } else {
    throw invalid_params("scan kind must be logconv7 or convexity5");
  }
  if (!csv) emit(with_meta(g, "scan", {{"kind", kind}, {"rows", std::move(rows)}}));
  return 0;
}

// verify-paper

int run_verify(const Global& g, int samples) {
  VerifyOptions options;
  options.seed = g.seed;
  options.random_samples = samples;
  VerificationReport report = verify_all(options);
  const Format fmt = resolve(g, Format::text);
  if (fmt == Format::json) {
    json checks = json::array();
    for (const Check& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"operation", c.operation},
                        {"claim", c.claim},
                        {"status", c.passed ? "pass" : "fail"},
                        {"expected", c.expected},
                        {"computed", c.computed}});
    json table = json::array();
    for (const TableCell& t : report.table)
      table.push_back({{"property", t.property}, {"d", t.dimension}, {"status", t.status}, {"evidence", t.evidence}});
    emit(with_meta(g, "verify-paper", {{"passed", report.all_passed()}, {"checks", checks}, {"table", table}}));
  } else if (fmt == Format::csv) {
    std::cout << "name,operation,status,expected,computed\n";
    for (const Check& c : report.checks)
      std::cout << c.name << ',' << c.operation << ',' << (c.passed ? "pass" : "fail") << ",\"" << c.expected
                << "\",\"" << c.computed << "\"\n";
  } else {
    if (!g.no_meta) std::cout << "# flagvec " << kVersion << " verify-paper seed=" << g.seed << '\n';
    std::size_t passed = 0;
    for (const Check& c : report.checks) {
      passed += c.passed;
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.operation << "] " << c.claim << '\n';
      if (!c.passed) std::cout << "     expected: " << c.expected << "\n     computed: " << c.computed << '\n';
    }
    std::cout << "\nproperty  d     status  evidence\n";
    for (const TableCell& t : report.table) {
      std::string dim = t.dimension;
      dim.resize(5, ' ');
      std::string status = t.status;
      status.resize(7, ' ');
      std::cout << t.property << "         " << dim << ' ' << status << ' ' << t.evidence << '\n';
    }
    std::cout << '\n' << passed << '/' << report.checks.size() << " checks passed\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact flag-vector combinatorics of convex polytopes"};
  app.fallthrough();
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-meta", g.no_meta, "omit metadata from reports");
  app.add_option("--seed", g.seed, "seed for randomized property sampling");
  app.set_version_flag("--version", kVersion);

  FamilyArgs gen_args;
  bool gen_flags = false;
  auto* gen = app.add_subcommand("generate", "f-vector of a polytope family");
  add_family_options(gen, gen_args, true);
  gen->get_option("family")->check(CLI::IsMember({"simplex", "cube", "crosspolytope", "cyclic", "polygon", "p7n"}));
  gen->add_flag("--flags", gen_flags, "include the full flag vector (JSON)");

  std::string check_input;
  int check_d = -1;
  auto* chk = app.add_subcommand("check", "property verdicts (C), (L), (U), (B) for an f-vector");
  chk->add_option("vector", check_input, "comma-separated f-vector or a file")->required();
  chk->add_option("-d,--dim", check_d, "expected dimension");

  FamilyArgs flag_args;
  std::string sparse_file;
  bool sparse_only = false;
  auto* flg = app.add_subcommand("flags", "flag vector of a family lattice or completion of sparse data");
  add_family_options(flg, flag_args, false);
  flg->add_option("--sparse", sparse_file, "sparse flag data JSON to complete");
  flg->add_flag("--sparse-only", sparse_only, "print only the sparse-basis entries");

  FamilyArgs cd_args;
  std::string cd_input, cd_coeff;
  auto* cdi = app.add_subcommand("cdindex", "cd-index of a family lattice or flag vector");
  add_family_options(cdi, cd_args, false);
  cdi->add_option("--input", cd_input, "flag vector or sparse flag data JSON");
  cdi->add_option("--coeff", cd_coeff, "print a single coefficient, e.g. c2dc2");

  std::vector<std::string> conv_operands;
  bool conv_reduce = false;
  FamilyArgs conv_args;
  auto* conv = app.add_subcommand("convolve", "Kalai convolution of flag forms, left to right");
  conv->add_option("forms", conv_operands, "g0:D, g1:D, or a form JSON document")->required();
  conv->add_flag("--reduce", conv_reduce, "reduce the product to the sparse basis");
  conv->add_option("--family", conv_args.family, "evaluate on this family")
      ->check(CLI::IsMember({"simplex", "cube", "crosspolytope", "cyclic", "polygon"}));
  conv->add_option("-d,--dim", conv_args.d, "family dimension");
  conv->add_option("-n,--vertices", conv_args.n, "family vertex count");
  conv->add_option("--lattice-file", conv_args.lattice_file, "evaluate on a lattice JSON document");

  std::string cand_which, cand_range = "0..10", cand_input;
  auto* cand = app.add_subcommand("candidates", "screen candidate flag vectors against the inequality batteries");
  cand->add_option("which", cand_which, "6d or 7d")->check(CLI::IsMember({"6d", "7d"}));
  cand->add_option("--ell", cand_range, "range of l for the 6d family");
  cand->add_option("--input", cand_input, "sparse flag data JSON");

  std::string scan_kind, scan_range;
  auto* scn = app.add_subcommand("scan", "ratio and convexity scans");
  scn->add_option("kind", scan_kind, "logconv7 or convexity5")->required();
  scn->add_option("--n", scan_range, "range a..b")->required();

  int samples = VerifyOptions{}.random_samples;
  auto* ver = app.add_subcommand("verify-paper", "run every verification check");
  ver->add_option("--samples", samples, "random feasible vectors to sample")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return run_generate(g, gen_args, gen_flags);
    if (*chk) return run_check(g, check_input, check_d);
    if (*flg) return run_flags(g, flag_args, sparse_file, sparse_only);
    if (*cdi) return run_cdindex(g, cd_args, cd_input, cd_coeff);
    if (*conv) return run_convolve(g, conv_operands, conv_reduce, conv_args);
    if (*cand) return run_candidates(g, cand_which, cand_range, cand_input);
    if (*scn) return run_scan(g, scan_kind, scan_range);
    if (*ver) return run_verify(g, samples);
  } catch (const not_eulerian& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const flagvec::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return 1;
  }
  return 2;
}
