// cutcert: exact certificates for cut-number and Alexander-module
// computations. Subcommands: harvey certify|matrix|f4, alex rank,
// group check, magnus weight.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cutcert/cutcert.hpp"
#include "cutcert/json_io.hpp"

namespace {

using namespace cutcert;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;    // bad flags, parse errors, invalid inputs
constexpr int kExitRefused = 2;  // a requested mathematical check failed

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::invalid_argument, what + ": bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw Error(Errc::invalid_argument, what + ": empty list");
  return out;
}

/// Resolves --json paths against CUTCERT_OUTPUT_DIR for relative names and
/// writes atomically: certificates are complete or absent, never partial.
void write_json_atomically(const std::string& path, const Json& j) {
  std::filesystem::path target(path);
  if (target.is_relative()) {
    if (const char* dir = std::getenv("CUTCERT_OUTPUT_DIR")) target = std::filesystem::path(dir) / target;
  }
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io, "cannot open " + tmp.string() + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw Error(Errc::io, "write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

int exit_code_for(Errc code) {
  return code == Errc::check_failed ? kExitRefused : kExitUsage;
}

Alphabet alphabet_for(const std::string& gens_flag, const std::vector<std::string>& texts) {
  if (!gens_flag.empty()) {
    std::vector<std::string> names;
    std::stringstream ss(gens_flag);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) names.push_back(item);
    }
    return Alphabet(std::move(names));
  }
  std::vector<std::string> names;
  for (const auto& t : texts)
    for (const auto& id : scan_identifiers(t)) {
      bool seen = false;
      for (const auto& n : names) seen = seen || n == id;
      if (!seen) names.push_back(id);
    }
  if (names.empty()) names.push_back("x");
  return Alphabet(std::move(names));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open presentation file: " + path);
  return parse_presentation(in);
}

void print_conclusions(const std::vector<harvey::Conclusion>& conclusions) {
  for (const auto& c : conclusions)
    std::cout << "  - " << c.statement << "  [" << c.cites << "]\n";
}

void print_check_lines(const harvey::Certificate& cert) {
  for (const auto& [name, ok] : cert.checks)
    std::cout << "check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
}

int finish_certificate(const harvey::Certificate& cert, const std::string& json_path) {
  print_check_lines(cert);
  std::cout << "det A(1) = " << cert.detA1.str() << "\n";
  if (cert.has_nilpotent_module) {
    std::cout << "free nilpotent module (rank 2, class 3): additive rank "
              << cert.nilpotent_module.additive_rank << ", annihilator J^"
              << cert.nilpotent_module.annihilator_exponent << ", "
              << (cert.nilpotent_module.cyclic ? "cyclic" : "not cyclic") << "\n";
  }
  std::cout << "certified: " << (cert.certified ? "yes" : "no") << "\n";
  print_conclusions(cert.conclusions);
  if (!json_path.empty()) write_json_atomically(json_path, harvey::certificate_to_json(cert));
  if (!cert.certified) {
    std::ostringstream os;
    os << "certificate refused; failed checks:";
    for (const auto& name : cert.failed_checks()) os << " " << name;
    throw Error(Errc::check_failed, os.str());
  }
  return kExitOk;
}

struct MatrixOptions {
  int m = 0;
  std::optional<int> N;
  std::string n_list;
  bool full = false;
  bool jets = false;
  std::string json_path;
};

void print_table(const std::vector<std::vector<std::string>>& cells) {
  size_t width = 1;
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, c.size());
  for (const auto& row : cells) {
    std::cout << "[ ";
    for (size_t i = 0; i < row.size(); ++i) {
      std::cout << row[i];
      if (i + 1 < row.size()) std::cout << std::string(width - row[i].size() + 2, ' ');
    }
    std::cout << " ]\n";
  }
  if (cells.empty()) std::cout << "[ ]  (no pairs for m = 1)\n";
}

int run_harvey_matrix(const MatrixOptions& opt) {
  Json j;
  j["tool"] = tool_header();
  j["kind"] = "relation-matrix";

  std::vector<std::vector<std::string>> cells;
  if (opt.n_list.empty()) {
    // Symbolic mod-J^2 table.
    int N = opt.N.value_or(1);
    harvey::SymbolicMatrix sym = harvey::case_table(opt.m, N);
    j["params"] = Json{{"m", opt.m}, {"N", N}};
    j["pairs"] = harvey::pair_labels(opt.m);
    Json rows = Json::array();
    for (const auto& row : sym) {
      std::vector<std::string> line;
      Json jr = Json::array();
      for (const auto& e : row) {
        line.push_back(e.str());
        jr.push_back(e.str());
      }
      cells.push_back(std::move(line));
      rows.push_back(std::move(jr));
    }
    j["symbolic"] = rows;
    std::cout << "relation matrix mod (t-1)^2, m=" << opt.m << ", N=" << N << "\n";
  } else {
    auto p = harvey::Params::validated(opt.m, parse_int_list(opt.n_list, "--n"), opt.N);
    j["params"] = harvey::params_to_json(p);
    j["pairs"] = harvey::pair_labels(opt.m);
    Json rows = Json::array();
    if (opt.full) {
      PolyMatrix m = harvey::model_relation_matrix(p);
      for (int r = 0; r < m.rows(); ++r) {
        std::vector<std::string> line;
        Json jr = Json::array();
        for (int c = 0; c < m.cols(); ++c) {
          line.push_back(m.at(r, c).to_string());
          jr.push_back(laurent_to_json(m.at(r, c)));
        }
        cells.push_back(std::move(line));
        rows.push_back(std::move(jr));
      }
      j["full"] = rows;
      std::cout << "full relation matrix (trivial-conjugator model), m=" << opt.m
                << ", N=" << p.N << "\n";
    } else if (opt.jets) {
      harvey::JetMatrix jm = harvey::relation_matrix_mod_J2(p);
      for (const auto& row : jm) {
        std::vector<std::string> line;
        Json jr = Json::array();
        for (const auto& e : row) {
          line.push_back("(" + e.value.str() + "," + e.slope.str() + ")");
          jr.push_back(jet_to_json(e));
        }
        cells.push_back(std::move(line));
        rows.push_back(std::move(jr));
      }
      j["jets"] = rows;
      std::cout << "relation matrix jets (value, slope) at t=1, m=" << opt.m << ", N=" << p.N
                << "\n";
    } else {
      harvey::SymbolicMatrix sym = harvey::case_table(p.m, p.N);
      for (const auto& row : sym) {
        std::vector<std::string> line;
        Json jr = Json::array();
        for (const auto& e : row) {
          line.push_back(e.poly(p.n).to_string());
          jr.push_back(laurent_to_json(e.poly(p.n)));
        }
        cells.push_back(std::move(line));
        rows.push_back(std::move(jr));
      }
      j["mod_J2"] = rows;
      std::cout << "relation matrix mod (t-1)^2, m=" << opt.m << ", N=" << p.N << "\n";
    }
  }

  {
    std::ostringstream pairs;
    harvey::PairTable pt(opt.m);
    pairs << "pairs:";
    for (int k = 0; k < pt.count(); ++k)
      pairs << " (" << pt.pair_at(k).first << "," << pt.pair_at(k).second << ")";
    std::cout << pairs.str() << "\n";
  }
  print_table(cells);
  if (!opt.json_path.empty()) write_json_atomically(opt.json_path, j);
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"exact cut-number and Alexander-module certificates"};
  app.require_subcommand(1);

  // ---- harvey ----
  auto* harvey_cmd = app.add_subcommand("harvey", "relation-matrix family certificates");
  harvey_cmd->require_subcommand(1);

  MatrixOptions mopt;
  auto* matrix_cmd = harvey_cmd->add_subcommand("matrix", "print the relation matrix");
  matrix_cmd->add_option("--m", mopt.m, "number of link components")->required();
  int matrix_N = 0;
  auto* matrix_N_opt = matrix_cmd->add_option("--N", matrix_N, "distinguished index (1-based)");
  matrix_cmd->add_option("--n", mopt.n_list, "comma-separated exponents n_1..n_m");
  matrix_cmd->add_flag("--full", mopt.full, "full model matrix, not just mod J^2");
  matrix_cmd->add_flag("--jets", mopt.jets, "print (value, slope) jets at t=1");
  matrix_cmd->add_option("--json", mopt.json_path, "write machine-readable output here");

  struct CertifyOptions {
    int m = 0;
    std::string n_list;
    int N = 0;
    bool has_N = false;
    std::string json_path;
  } copt, fopt;
  auto* certify_cmd = harvey_cmd->add_subcommand("certify", "nonsingularity certificate");
  certify_cmd->add_option("--m", copt.m, "number of link components")->required();
  certify_cmd->add_option("--n", copt.n_list, "comma-separated exponents")->required();
  auto* certify_N = certify_cmd->add_option("--N", copt.N, "distinguished index (1-based)");
  certify_cmd->add_option("--json", copt.json_path, "write the JSON certificate here");

  auto* f4_cmd = harvey_cmd->add_subcommand("f4", "lower-central-series obstruction certificate");
  f4_cmd->add_option("--m", fopt.m, "number of link components")->required();
  f4_cmd->add_option("--n", fopt.n_list, "comma-separated exponents")->required();
  auto* f4_N = f4_cmd->add_option("--N", fopt.N, "distinguished index (1-based)");
  f4_cmd->add_option("--json", fopt.json_path, "write the JSON certificate here");

  // ---- alex ----
  auto* alex_cmd = app.add_subcommand("alex", "Alexander-module ranks from presentations");
  alex_cmd->require_subcommand(1);
  struct AlexOptions {
    std::string pres_path;
    std::string phi_list;
    int sample = 0;
    uint64_t seed = 0;
    std::string json_path;
  } aopt;
  auto* rank_cmd = alex_cmd->add_subcommand("rank", "rank of H_1 of the infinite cyclic cover");
  rank_cmd->add_option("--pres", aopt.pres_path, "presentation file")->required();
  auto* phi_opt = rank_cmd->add_option("--phi", aopt.phi_list, "comma-separated character");
  auto* sample_opt =
      rank_cmd->add_option("--sample", aopt.sample, "sample this many primitive characters");
  rank_cmd->add_option("--seed", aopt.seed, "PRNG seed for sampling");
  rank_cmd->add_option("--json", aopt.json_path, "write machine-readable output here");
  phi_opt->excludes(sample_opt);

  // ---- group ----
  auto* group_cmd = app.add_subcommand("group", "free-group word checks");
  group_cmd->require_subcommand(1);
  struct GroupOptions {
    std::string gens;
    bool metabelian = false;
    std::string lhs, rhs;
  } gopt;
  auto* check_cmd = group_cmd->add_subcommand("check", "decide equality of two words");
  check_cmd->add_option("--gens", gopt.gens, "comma-separated generator names");
  check_cmd->add_flag("--metabelian", gopt.metabelian, "compare in F/F'' instead of F");
  check_cmd->add_option("lhs", gopt.lhs, "left word")->required();
  check_cmd->add_option("rhs", gopt.rhs, "right word")->required();

  // ---- magnus ----
  auto* magnus_cmd = app.add_subcommand("magnus", "Magnus expansion tools");
  magnus_cmd->require_subcommand(1);
  struct MagnusOptions {
    std::string gens;
    int max_k = 10;
    std::string word;
  } wopt;
  auto* weight_cmd = magnus_cmd->add_subcommand("weight", "lower-central-series weight");
  weight_cmd->add_option("--gens", wopt.gens, "comma-separated generator names");
  weight_cmd->add_option("--max-k", wopt.max_k, "decide membership up to F_k");
  weight_cmd->add_option("word", wopt.word, "the word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (matrix_cmd->parsed()) {
      if (*matrix_N_opt) mopt.N = matrix_N;
      return run_harvey_matrix(mopt);
    }
    if (certify_cmd->parsed()) {
      auto p = harvey::Params::validated(
          copt.m, parse_int_list(copt.n_list, "--n"),
          *certify_N ? std::optional<int>(copt.N) : std::nullopt);
      std::cout << "nonsingularity certificate: m=" << p.m << ", N=" << p.N << "\n";
      return finish_certificate(harvey::nonsingularity_certificate(p), copt.json_path);
    }
    if (f4_cmd->parsed()) {
      auto p = harvey::Params::validated(
          fopt.m, parse_int_list(fopt.n_list, "--n"),
          *f4_N ? std::optional<int>(fopt.N) : std::nullopt);
      std::cout << "F/F_4 obstruction certificate: m=" << p.m << ", N=" << p.N << "\n";
      return finish_certificate(harvey::f4_obstruction_certificate(p), fopt.json_path);
    }
    if (rank_cmd->parsed()) {
      Presentation pres = load_presentation(aopt.pres_path);
      if (!aopt.phi_list.empty()) {
        auto phi = parse_int_list(aopt.phi_list, "--phi");
        int rank = h1_rank_of_cover(pres, phi);
        std::cout << "rank " << rank << "\n";
        if (!aopt.json_path.empty()) {
          Json j;
          j["tool"] = tool_header();
          j["kind"] = "alexander-rank";
          char digest[32];
          std::snprintf(digest, sizeof digest, "%016llx",
                        static_cast<unsigned long long>(pres.digest()));
          j["presentation_digest"] = std::string(digest);
          Json jphi = Json::array();
          for (long long x : phi) jphi.push_back(x);
          j["phi"] = jphi;
          j["rank"] = rank;
          write_json_atomically(aopt.json_path, j);
        }
        return kExitOk;
      }
      if (aopt.sample <= 0)
        throw Error(Errc::invalid_argument, "alex rank needs --phi or --sample");
      auto phis = sample_consistent_primitive_phis(pres, aopt.sample, aopt.seed);
      if (phis.empty())
        throw Error(Errc::invalid_argument, "no consistent primitive character exists");
      RankCertificate cert = corank_obstruction(pres, phis);
      for (size_t i = 0; i < cert.phis.size(); ++i)
        std::cout << "phi " << cert.phis[i].str() << " -> rank " << cert.ranks[i] << "\n";
      std::cout << "conclusions: " << cert.conclusions.size() << "\n";
      for (const auto& c : cert.conclusions)
        std::cout << "  - " << c.statement << "  [" << c.cites << "]\n";
      if (!aopt.json_path.empty()) {
        Json j = rank_certificate_to_json(cert);
        j["seed"] = aopt.seed;
        write_json_atomically(aopt.json_path, j);
      }
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      Alphabet a = alphabet_for(gopt.gens, {gopt.lhs, gopt.rhs});
      Word lhs = parse_word(gopt.lhs, a);
      Word rhs = parse_word(gopt.rhs, a);
      bool equal = gopt.metabelian ? equal_mod_second_derived(lhs, rhs) : lhs == rhs;
      std::cout << (equal ? "true" : "false") << "\n";
      return equal ? kExitOk : kExitRefused;
    }
    if (weight_cmd->parsed()) {
      Alphabet a = alphabet_for(wopt.gens, {wopt.word});
      Word w = parse_word(wopt.word, a);
      std::cout << "weight " << lcs_weight(w, wopt.max_k).str() << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << error_to_json(e.code(), e.what()).dump() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << error_to_json(Errc::invalid_argument, e.what()).dump() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
