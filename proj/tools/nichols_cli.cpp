#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "nichols/report.hpp"

namespace fs = std::filesystem;
using namespace nichols;

namespace {

struct CommonFlags {
  size_t cap_objects = 0, cap_roots = 0;
  size_t t_budget = 4096;
  std::string format = "json";
  std::string out;
  uint64_t seed = 0;
  bool timing = false;
};

struct FamilyFlags {
  std::string name, letter;
  std::vector<int64_t> N, theta, k;
  int64_t d1 = 1, d3 = 2;
  std::vector<int64_t> exponents;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--cap-objects", f.cap_objects, "Maximum groupoid objects (default 4096, or NP_CAPS)");
  app->add_option("--cap-roots", f.cap_roots, "Maximum positive roots (default 16384, or NP_CAPS)");
  app->add_option("--t-budget", f.t_budget, "Exponent candidates tried by the T search")->capture_default_str();
  app->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}))
      ->capture_default_str();
  app->add_option("--out", f.out, "Write reports into this directory");
  app->add_option("--seed", f.seed, "Reserved; has no mathematical effect");
  app->add_flag("--timing", f.timing, "Include per-stage timing in JSON reports");
}

void add_family(CLI::App* app, FamilyFlags& f, bool ranges) {
  app->add_option("--family", f.name, "Family: cartan, superA, superB, superD, D21, superF4, superG3, wk4, br2");
  app->add_option("--letter", f.letter, "Cartan series letter");
  auto* n = app->add_option("--N", f.N, "Order of xi")->delimiter(',');
  auto* t = app->add_option("--theta", f.theta, "Rank")->delimiter(',');
  auto* k = app->add_option("--k", f.k, "Odd vertex position for super rows")->delimiter(',');
  if (!ranges) {
    n->expected(1);
    t->expected(1);
    k->expected(1);
  }
  app->add_option("--d1", f.d1, "D(2,1;alpha) exponent of r")->capture_default_str();
  app->add_option("--d3", f.d3, "D(2,1;alpha) exponent of s")->capture_default_str();
  if (!ranges) app->add_option("--exponents", f.exponents, "Upper exponent per edge")->delimiter(',');
}

AnalysisOptions options_of(const CommonFlags& f) {
  AnalysisOptions o;
  if (f.cap_objects) o.caps.max_objects = f.cap_objects;
  if (f.cap_roots) o.caps.max_roots = f.cap_roots;
  o.t_budget = f.t_budget;
  return o;
}

std::string render(const Analysis& a, const CommonFlags& f) {
  if (f.format == "text") return to_text(a);
  if (f.format == "dot") return to_dot(a);
  return dump(to_json(a, f.timing));
}

std::string extension(const CommonFlags& f) { return f.format == "json" ? ".json" : f.format == "text" ? ".txt" : ".dot"; }

void write_file(const fs::path& p, const std::string& body) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  os << body;
}

int report_error(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return exit_code(e.kind());
}

int run_analyze(const std::string& file, const FamilyFlags& ff, const CommonFlags& cf) {
  AnalysisInput in;
  try {
    if (!file.empty()) {
      std::ifstream is(file, std::ios::binary);
      if (!is) fail(ErrorKind::ParseError, "cannot open " + file);
      std::stringstream ss;
      ss << is.rdbuf();
      in = parse_input_text(ss.str());
      if (in.label.empty()) in.label = fs::path(file).stem().string();
    } else {
      if (ff.name.empty() || ff.N.empty()) fail(ErrorKind::ParseError, "give an input file or --family with --N");
      FamilyParams p;
      p.name = ff.name;
      p.letter = ff.letter;
      p.N = ff.N.front();
      p.theta = ff.theta.empty() ? 0 : static_cast<int>(ff.theta.front());
      p.k = ff.k.empty() ? 0 : static_cast<int>(ff.k.front());
      p.d1 = ff.d1;
      p.d3 = ff.d3;
      p.exponents = ff.exponents;
      in = family_input(p);
    }
  } catch (const Error& e) {
    return report_error(e);
  }
  Analysis a = analyze(in, options_of(cf));
  std::string body = render(a, cf);
  if (cf.out.empty()) {
    std::cout << body;
  } else {
    fs::create_directories(cf.out);
    write_file(fs::path(cf.out) / (a.input.label + extension(cf)), body);
  }
  if (a.error) std::cerr << "error: " << to_string(a.error->kind) << " in " << a.error->stage << ": " << a.error->message << "\n";
  return a.exit_code();
}

int run_sweep(const FamilyFlags& ff, const CommonFlags& cf) {
  std::vector<int64_t> thetas = ff.theta.empty() ? std::vector<int64_t>{0} : ff.theta;
  std::vector<int64_t> ks = ff.k.empty() ? std::vector<int64_t>{0} : ff.k;
  std::vector<std::string> letters;
  std::stringstream ls(ff.letter);
  for (std::string l; std::getline(ls, l, ',');) letters.push_back(l);
  if (letters.empty()) letters.push_back("");
  std::vector<FamilyParams> tuples;
  for (const auto& l : letters)
    for (int64_t t : thetas)
      for (int64_t k : ks)
        for (int64_t n : ff.N) {
          FamilyParams p;
          p.name = ff.name;
          p.letter = l;
          p.theta = static_cast<int>(t);
          p.k = static_cast<int>(k);
          p.N = n;
          p.d1 = ff.d1;
          p.d3 = ff.d3;
          tuples.push_back(p);
        }
  if (!cf.out.empty()) fs::create_directories(cf.out);
  std::vector<SweepRow> rows;
  std::set<std::string> seen;
  for (const auto& p : tuples) {
    try {
      // Rows with a fixed rank ignore --theta; run each instance once.
      if (!seen.insert(family(p).label()).second) continue;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnsupportedParameters) continue;
    }
    Analysis a = analyze(family_input(p), options_of(cf));
    if (!cf.out.empty()) write_file(fs::path(cf.out) / (a.input.label + extension(cf)), render(a, cf));
    rows.push_back(sweep_row(a));
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) { return x.label < y.label; });
  std::string table = sweep_header();
  for (const auto& r : rows) table += to_string(r);
  std::cout << table;
  if (!cf.out.empty()) write_file(fs::path(cf.out) / "summary.tsv", table);
  return 0;
}

int run_selftest(const CommonFlags& cf) {
  std::vector<FamilyParams> samples;
  auto add = [&](std::string name, std::string letter, int theta, int k, int64_t N) {
    FamilyParams p;
    p.name = std::move(name);
    p.letter = std::move(letter);
    p.theta = theta;
    p.k = k;
    p.N = N;
    samples.push_back(p);
  };
  add("cartan", "A", 3, 0, 5);
  add("cartan", "B", 3, 0, 8);
  add("cartan", "G", 2, 0, 7);
  add("superA", "", 2, 1, 5);
  add("superB", "", 3, 1, 7);
  add("wk4", "", 4, 0, 5);
  add("br2", "", 2, 0, 4);
  bool all = true;
  for (const auto& p : samples) {
    Analysis a = analyze(family_input(p), options_of(cf));
    bool ok = !a.error && a.geometry && a.geometry->dimension_consistent && a.recovery && *a.recovery == *a.cm;
    for (const auto& e : a.equivariance) ok = ok && e.pass();
    ok = ok && a.embedding && a.embedding->ok(a.pm->basis.size()) && a.borel && a.borel->ok();
    std::cout << (ok ? "PASS " : "FAIL ") << a.input.label;
    if (a.error) std::cout << " (" << to_string(a.error->kind) << ": " << a.error->message << ")";
    std::cout << "\n";
    all = all && ok;
  }
  return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of braiding matrices of diagonal type"};
  app.require_subcommand(1);

  CommonFlags acf, scf, tcf;
  FamilyFlags aff, sff;
  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one braiding matrix or family instance");
  analyze_cmd->add_option("file", file, "braiding/v1 JSON input");
  add_family(analyze_cmd, aff, false);
  add_common(analyze_cmd, acf);

  auto* sweep_cmd = app.add_subcommand("sweep", "Analyze a family over parameter ranges");
  add_family(sweep_cmd, sff, true);
  add_common(sweep_cmd, scf);
  sweep_cmd->get_option("--family")->required();
  sweep_cmd->get_option("--N")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites on built-in samples");
  add_common(selftest_cmd, tcf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  try {
    if (*analyze_cmd) return run_analyze(file, aff, acf);
    if (*sweep_cmd) return run_sweep(sff, scf);
    if (*selftest_cmd) return run_selftest(tcf);
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
