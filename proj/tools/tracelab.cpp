// tracelab: trace polynomials, icosahedral lattices, subgroup presentations and
// finite covers for generalised triangle groups of type (3,5,2).
//
// Exit codes: 0 success, 1 internal assertion failure, 2 usage or parse error.

#include "CLI11.hpp"
#include "json.hpp"

#include "tracelab/covers.hpp"
#include "tracelab/errors.hpp"
#include "tracelab/report.hpp"
#include "tracelab/subgroups.hpp"
#include "tracelab/trace.hpp"
#include "tracelab/verdict.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

std::string join_command(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) {
    if (i) os << " ";
    os << argv[i];
  }
  return os.str();
}

std::uint64_t resolve_seed(std::uint64_t cli_seed, bool seed_set) {
  if (seed_set) return cli_seed;
  if (const char* env = std::getenv("TRACELAB_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

void emit(const json& report, bool as_json) {
  if (as_json)
    std::cout << report.dump(2) << std::endl;
  else
    std::cout << tracelab::render_text(report);
}

/// Presentation file format: first line "generators <n>", then one relator per
/// line as signed generator indices separated by spaces (e.g. "1 2 -1 -2").
tracelab::Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) tracelab::raise(tracelab::Errc::SyntaxError, "cannot open " + path);
  tracelab::Presentation p;
  std::string keyword;
  if (!(in >> keyword >> p.generator_count) || keyword != "generators")
    tracelab::raise(tracelab::Errc::SyntaxError, "expected 'generators <n>' header");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    tracelab::Relator r;
    r.origin = tracelab::RelatorOrigin::Auxiliary;
    int g;
    while (ls >> g) {
      if (g == 0 || std::abs(g) > p.generator_count)
        tracelab::raise(tracelab::Errc::SyntaxError, "relator index out of range: " + line);
      r.word.push_back(g);
    }
    p.relators.push_back(std::move(r));
  }
  return p;
}

/// Assignment format: "g<i>:u,v;g<j>:u,v" (1-based generators); unlisted
/// generators map to 0.
std::vector<std::array<int, 2>> parse_assignment(const std::string& text, int gens, int n) {
  std::vector<std::array<int, 2>> out(static_cast<std::size_t>(gens), {0, 0});
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    int idx, u, v;
    if (std::sscanf(item.c_str(), "g%d:%d,%d", &idx, &u, &v) != 3 || idx < 1 || idx > gens)
      tracelab::raise(tracelab::Errc::SyntaxError, "bad assignment item: " + item);
    out[static_cast<std::size_t>(idx - 1)] = {((u % n) + n) % n, ((v % n) + n) % n};
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalised triangle group (3,5,2) analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string command = join_command(argc, argv);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit the JSON report instead of text");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "trace polynomial, roots and verdict for a word");
  std::string word_text;
  bool deep = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
  analyze->add_option("word", word_text, "relator word, e.g. \"x y^2 x y\"")->required();
  analyze->add_flag("--deep", deep, "add representations, subgroup census and jet checks");
  analyze->add_option("--seed", seed, "RNG seed (falls back to TRACELAB_SEED)")
      ->each([&](const std::string&) { seed_set = true; });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "classify all words with k <= kmax");
  int kmax = 2;
  enumerate->add_option("--kmax", kmax, "maximum syllable count")->required();

  // verify-lemma2
  app.add_subcommand("verify-lemma2",
                     "verify the icosahedral edge-midpoint lattice facts; "
                     "non-zero exit if any expected value fails");

  // subgroup
  auto* subgroup = app.add_subcommand(
      "subgroup", "Schreier presentation of the index-30 subgroup for a word and root");
  std::string sub_word, sub_alpha = "0";
  subgroup->add_option("word", sub_word)->required();
  subgroup->add_option("--alpha", sub_alpha, "exceptional root: 0, 1, phi or phi-1");

  // cover
  auto* cover = app.add_subcommand("cover", "finite-cover homology growth table");
  std::string pres_path, assign_text, export_path;
  std::vector<int> n_list;
  bool as_csv = false;
  cover->add_option("--presentation-file", pres_path, "presentation file")->required();
  cover->add_option("--n", n_list, "deck modulus (repeatable)")->required();
  cover->add_option("--assign", assign_text, "edge assignment, e.g. \"g1:1,0;g2:0,1\"");
  cover->add_flag("--csv", as_csv, "emit the growth table as CSV");
  cover->add_option("--export-complex", export_path,
                    "write the presentation complex as an edge list to this file");

  // jets-check
  auto* jets = app.add_subcommand("jets-check", "dual-number identities and the conjugate orbit");
  std::uint64_t jets_seed = 0;
  bool jets_seed_set = false;
  jets->add_option("--seed", jets_seed)->each([&](const std::string&) { jets_seed_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
  }

  try {
    if (*analyze) {
      emit(tracelab::analysis_report(word_text, deep, resolve_seed(seed, seed_set), command),
           as_json);
    } else if (*enumerate) {
      if (kmax < 1 || kmax > 5) {
        std::cerr << "kmax must be in 1..5 (8^k words per length; 5 takes about a minute)\n";
        return 2;
      }
      emit(tracelab::census_report(kmax, command), as_json);
    } else if (app.get_subcommand("verify-lemma2")->parsed()) {
      json report = tracelab::lemma2_report();
      report["command"] = command;
      emit(report, as_json);
      if (!report["all_expected_hold"].get<bool>()) return 1;
    } else if (*subgroup) {
      tracelab::GroupWord w = tracelab::parse_word(sub_word);
      tracelab::GoldenScalar alpha;
      if (sub_alpha == "0") alpha = tracelab::GoldenScalar::zero();
      else if (sub_alpha == "1") alpha = tracelab::GoldenScalar::one();
      else if (sub_alpha == "phi") alpha = tracelab::GoldenScalar::phi();
      else if (sub_alpha == "phi-1") alpha = tracelab::GoldenScalar::phi() - tracelab::GoldenScalar::one();
      else {
        std::cerr << "alpha must be one of: 0, 1, phi, phi-1\n";
        return 2;
      }
      tracelab::EssentialRep rep = tracelab::essential_representation(w, alpha);
      tracelab::CosetTable table = tracelab::coset_table(rep, w, tracelab::BaseSubgroup::C);
      tracelab::Presentation pres = tracelab::schreier_presentation(table, w);
      json relators = json::array();
      const char* origin_names[] = {"from_x3", "from_y5", "from_W2_pair", "from_W2_square",
                                    "auxiliary"};
      for (const tracelab::Relator& r : pres.relators)
        relators.push_back(
            {{"word", r.word}, {"origin", origin_names[static_cast<int>(r.origin)]}});
      json out = {{"schema_version", tracelab::kSchemaVersion},
                  {"kind", "subgroup"},
                  {"command", command},
                  {"word", w.str()},
                  {"alpha", alpha.str()},
                  {"index", table.index},
                  {"generators", pres.generator_count},
                  {"census",
                   {{"from_x3", pres.count(tracelab::RelatorOrigin::FromX3)},
                    {"from_y5", pres.count(tracelab::RelatorOrigin::FromY5)},
                    {"from_W2_pair", pres.count(tracelab::RelatorOrigin::FromW2Pair)},
                    {"from_W2_square", pres.count(tracelab::RelatorOrigin::FromW2Square)}}},
                  {"relators", relators},
                  {"squared_roots", pres.squared_roots},
                  {"presentation", pres.str()}};
      if (as_json)
        std::cout << out.dump(2) << std::endl;
      else {
        std::cout << "index " << table.index << ", " << pres.generator_count
                  << " generators, census (" << out["census"]["from_x3"] << ", "
                  << out["census"]["from_y5"] << ", " << out["census"]["from_W2_pair"] << ", "
                  << out["census"]["from_W2_square"] << ")\n"
                  << pres.str() << "\n";
      }
    } else if (*cover) {
      tracelab::Presentation p = load_presentation(pres_path);
      std::vector<tracelab::CoverSpec> specs;
      for (int n : n_list) {
        tracelab::CoverSpec spec;
        spec.n = n;
        spec.assignment = parse_assignment(assign_text, p.generator_count, n);
        specs.push_back(std::move(spec));
      }
      if (!export_path.empty()) {
        std::ofstream out(export_path);
        out << tracelab::export_edge_list(tracelab::presentation_complex(p));
      }
      json report = tracelab::cover_report(p, specs, command);
      if (as_csv) {
        std::cout << "n,h1_full,h2_full,h1_subcomplex,h2_subcomplex,connected\n";
        for (const json& row : report["rows"])
          std::cout << row["n"] << "," << row["h1_full"] << "," << row["h2_full"] << ","
                    << row["h1_subcomplex"] << "," << row["h2_subcomplex"] << ","
                    << (row["connected"].get<bool>() ? 1 : 0) << "\n";
      } else {
        emit(report, as_json);
      }
    } else if (*jets) {
      emit(tracelab::jets_report(resolve_seed(jets_seed, jets_seed_set), command), as_json);
    }
  } catch (const tracelab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case tracelab::Errc::SyntaxError:
      case tracelab::Errc::EmptyAfterReduction:
      case tracelab::Errc::NotAlternatingReducible:
      case tracelab::Errc::PreconditionViolated:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
