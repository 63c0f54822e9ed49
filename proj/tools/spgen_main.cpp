// Command-line front end: exact constructions, generation certificates and
// completion search for the symplectic Lie algebra sp_2n.
//
// Exit codes: 0 = success / verified true, 1 = verified false, 2 = error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spgen/completion.hpp"
#include "spgen/json_io.hpp"
#include "spgen/spgen.hpp"

namespace {

using nlohmann::json;
using namespace spgen;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  return json::parse(in);  // parse errors carry the byte position
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << j.dump(2) << "\n";
}

// Prints the machine JSON (--json), the human text otherwise, and mirrors
// the machine JSON to --out when given.
void emit(bool json_mode, const std::string& out_path, const json& machine,
          const std::string& human) {
  if (!out_path.empty()) write_json_file(out_path, machine);
  if (json_mode)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string matrix_block(const Mat<Rational>& m) {
  std::ostringstream os;
  os << m << "\n";
  return os.str();
}

int run_basis(std::size_t n, bool json_mode, const std::string& out_path) {
  const SpContext ctx(n);
  json basis = json::array();
  std::ostringstream human;
  human << "sp_" << ctx.size() << ": dimension " << ctx.dim() << "\n";
  for (std::size_t k = 0; k < ctx.basis().size(); ++k) {
    basis.push_back(mat_to_json(ctx.basis()[k]));
    human << "basis[" << k << "] =\n" << matrix_block(ctx.basis()[k]);
  }
  emit(json_mode, out_path,
       json{{"n", n}, {"dimension", ctx.dim()}, {"basis", std::move(basis)}}, human.str());
  return 0;
}

int run_construct(const std::string& kind, std::size_t n, bool verify, bool json_mode,
                  const std::string& out_path) {
  GeneratorPair pair = [&] {
    switch (pair_tag_from_string(kind)) {
      case PairTag::lemma3: return lemma3_pair(n);
      case PairTag::example1: return example1_pair(n);
      case PairTag::prop3: return prop3_pair(n);
      default: throw std::invalid_argument("construct expects lemma3, example1 or prop3");
    }
  }();

  json out = pair_to_json(pair);
  std::ostringstream human;
  human << to_string(pair.tag) << " pair in sp_" << 2 * n << "\n";
  human << "x =\n" << matrix_block(pair.x) << "y =\n" << matrix_block(pair.y);
  if (pair.t) human << "t =\n" << matrix_block(*pair.t);

  int rc = 0;
  if (verify) {
    const SpContext ctx(n);
    const GenerationResult res = generates_sp(ctx, {pair.x, pair.y});
    out["generates"] = res.generates;
    out["closure_dimension"] = res.closure_dimension;
    if (res.certificate) {
      out["certificate"] = certificate_to_json(*res.certificate);
      human << "generates sp_" << 2 * n << ": yes (dimension " << res.closure_dimension
            << ", certificate words " << res.certificate->words.size() << ")\n";
    } else {
      human << "generates sp_" << 2 * n << ": no (closure dimension " << res.closure_dimension
            << " of " << ctx.dim() << ")\n";
      rc = 1;
    }
  }
  emit(json_mode, out_path, out, human.str());
  return rc;
}

int run_verify(const std::string& pair_path, std::optional<std::size_t> n_flag, bool json_mode,
               const std::string& out_path) {
  const GeneratorPair pair = pair_from_json(load_json_file(pair_path));
  if (n_flag && *n_flag != pair.n)
    throw std::invalid_argument("--n disagrees with the pair file (" + std::to_string(*n_flag) +
                                " vs " + std::to_string(pair.n) + ")");
  const SpContext ctx(pair.n);
  const GenerationResult res = generates_sp(ctx, {pair.x, pair.y});

  json out{{"n", pair.n},
           {"tag", to_string(pair.tag)},
           {"generates", res.generates},
           {"closure_dimension", res.closure_dimension},
           {"dimension", ctx.dim()}};
  if (res.certificate) out["certificate"] = certificate_to_json(*res.certificate);

  std::ostringstream human;
  human << "closure dimension " << res.closure_dimension << " of " << ctx.dim()
        << "; generates sp_" << ctx.size() << ": " << yes_no(res.generates) << "\n";
  emit(json_mode, out_path, out, human.str());
  return res.generates ? 0 : 1;
}

int run_consistent(std::size_t n, const std::string& t_path, bool json_mode,
                   const std::string& out_path) {
  const SpContext ctx(n);
  const Mat<Rational> t = t_path.empty() ? lemma3_T(n) : mat_from_json(load_json_file(t_path));
  const bool ok = consistent_check(ctx, t);
  std::ostringstream human;
  human << "consistent: " << yes_no(ok) << "\n";
  emit(json_mode, out_path, json{{"n", n}, {"consistent", ok}, {"t", mat_to_json(t)}},
       human.str());
  return ok ? 0 : 1;
}

int run_vandermonde(std::size_t n, const std::string& t_path, const std::string& x_path,
                    bool json_mode, const std::string& out_path) {
  const SpContext ctx(n);
  const Mat<Rational> t = [&] {
    if (!t_path.empty()) return mat_from_json(load_json_file(t_path));
    const GeneratorPair p = prop3_pair(n);
    return commutator(p.x, p.y);
  }();
  const Mat<Rational> x = [&] {
    if (!x_path.empty()) return mat_from_json(load_json_file(x_path));
    Mat<Rational> sum = Mat<Rational>::zero(ctx.size(), ctx.size());
    for (const auto& v : ctx.root_vectors()) sum += v;
    return sum;
  }();

  const VandermondeResult res = vandermonde_closure(ctx, t, x);
  json iterates = json::array();
  for (const auto& it : res.iterates) iterates.push_back(mat_to_json(it));
  std::ostringstream human;
  human << res.iterates.size() << " adjoint iterates; linearly independent: "
        << yes_no(res.independent) << "\n";
  emit(json_mode, out_path,
       json{{"n", n}, {"independent", res.independent}, {"iterates", std::move(iterates)}},
       human.str());
  return res.independent ? 0 : 1;
}

int run_complete(std::size_t n, const std::string& x_path, std::uint64_t seed,
                 std::size_t max_trials, bool json_mode, const std::string& out_path) {
  const SpContext ctx(n);
  const Mat<Rational> x = mat_from_json(load_json_file(x_path));
  Rng rng(seed);
  const CompletionResult res = complete_nilpotent(ctx, x, rng, max_trials);

  if (!res.succeeded()) {
    emit(json_mode, out_path,
         json{{"n", n}, {"succeeded", false}, {"trials_attempted", res.trials_attempted}},
         "no generating partner found within " + std::to_string(res.trials_attempted) +
             " trials\n");
    return 1;
  }

  const CompletionSuccess& s = *res.success;
  GeneratorPair pair{n, PairTag::completion, x, s.y, std::nullopt};
  json out{{"succeeded", true},
           {"trial", s.trial},
           {"trials_attempted", res.trials_attempted},
           {"pair", pair_to_json(pair)},
           {"certificate", certificate_to_json(s.certificate)}};
  std::ostringstream human;
  human << "found a generating partner at trial " << s.trial << "\n"
        << "y =\n"
        << matrix_block(s.y) << "certificate words: " << s.certificate.words.size()
        << "; verified: yes\n";
  emit(json_mode, out_path, out, human.str());
  return 0;
}

int run_conjugation_check(std::size_t n, bool json_mode, const std::string& out_path) {
  const ConjugationReport report = verify_lemma3_conjugation(n);
  json out{{"n", n},
           {"invertible", report.invertible},
           {"diagonal_with_all_roots_once", report.diagonal_with_all_roots_once},
           {"offdiagonal_nonzero", report.offdiagonal_nonzero}};
  out["diagonalized"] =
      report.diagonalized ? mat_to_json(*report.diagonalized) : json(nullptr);
  std::ostringstream human;
  human << "eigenvector matrix invertible: " << yes_no(report.invertible) << "\n"
        << "conjugated T diagonal with every 2n-th root of unity once: "
        << yes_no(report.diagonal_with_all_roots_once) << "\n"
        << "all off-diagonal entries of conjugated E_{n+1,1} nonzero: "
        << yes_no(report.offdiagonal_nonzero) << "\n";
  emit(json_mode, out_path, out, human.str());
  return report.all_ok() ? 0 : 1;
}

int run_certificate_verify(const std::string& path, bool json_mode,
                           const std::string& out_path) {
  const Certificate cert = certificate_from_json(load_json_file(path));
  const bool ok = verify_certificate(cert);
  std::ostringstream human;
  human << "certificate valid: " << yes_no(ok) << "\n";
  emit(json_mode, out_path,
       json{{"n", cert.n}, {"words", cert.words.size()}, {"valid", ok}}, human.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact constructions, bracket-closure generation certificates and nilpotent-pair "
      "completion for the symplectic Lie algebra sp_2n"};
  app.require_subcommand(1);

  std::size_t n = 1;
  bool json_mode = false;
  std::string out_path, pair_path, t_path, x_path, cert_path, kind;
  bool verify_flag = false;
  std::uint64_t seed = 0;
  std::size_t max_trials = 200;
  std::optional<std::size_t> n_flag;

  auto* basis = app.add_subcommand("basis", "List the standard basis of sp_2n");
  basis->add_option("--n", n, "Rank n")->required();
  basis->add_flag("--json", json_mode, "Machine-readable output");
  basis->add_option("--out", out_path, "Write JSON output to a file");

  auto* construct =
      app.add_subcommand("construct", "Build a named generating pair (lemma3|example1|prop3)");
  construct->add_option("kind", kind, "One of lemma3, example1, prop3")->required();
  construct->add_option("--n", n, "Rank n")->required();
  construct->add_flag("--verify", verify_flag, "Run the bracket-closure verifier on the pair");
  construct->add_flag("--json", json_mode, "Machine-readable output");
  construct->add_option("--out", out_path, "Write JSON output to a file");

  auto* verify = app.add_subcommand("verify", "Check whether a stored pair generates sp_2n");
  verify->add_option("--pair", pair_path, "GeneratorPair JSON file")->required();
  verify->add_option("--n", n_flag, "Cross-check rank n against the file");
  verify->add_flag("--json", json_mode, "Machine-readable output");
  verify->add_option("--out", out_path, "Write JSON output to a file");

  auto* consistent =
      app.add_subcommand("consistent", "Consistency check (defaults to the cyclic element T)");
  consistent->add_option("--n", n, "Rank n")->required();
  consistent->add_option("--t", t_path, "Matrix JSON file (default: the cyclic element T)");
  consistent->add_flag("--json", json_mode, "Machine-readable output");
  consistent->add_option("--out", out_path, "Write JSON output to a file");

  auto* vandermonde = app.add_subcommand(
      "vandermonde", "Adjoint-iterate independence check for a consistent element");
  vandermonde->add_option("--n", n, "Rank n")->required();
  vandermonde->add_option("--t", t_path, "Consistent element JSON (default: [N, M] of prop3)");
  vandermonde->add_option("--x", x_path, "Start element JSON (default: sum of all root vectors)");
  vandermonde->add_flag("--json", json_mode, "Machine-readable output");
  vandermonde->add_option("--out", out_path, "Write JSON output to a file");

  auto* complete =
      app.add_subcommand("complete", "Complete a nonzero nilpotent member to a generating pair");
  complete->add_option("--n", n, "Rank n")->required();
  complete->add_option("--x", x_path, "Nonzero nilpotent member, matrix JSON file")->required();
  complete->add_option("--seed", seed, "Random seed (runs are deterministic per seed)")
      ->required();
  complete->add_option("--max-trials", max_trials, "Trial budget (default 200)");
  complete->add_flag("--json", json_mode, "Machine-readable output");
  complete->add_option("--out", out_path, "Write JSON output to a file");

  auto* conj = app.add_subcommand("conjugation-check",
                                  "Exact eigenvector diagonalization checks over Q(xi_2n)");
  conj->add_option("--n", n, "Rank n")->required();
  conj->add_flag("--json", json_mode, "Machine-readable output");
  conj->add_option("--out", out_path, "Write JSON output to a file");

  auto* certificate = app.add_subcommand("certificate", "Certificate operations");
  certificate->require_subcommand(1);
  auto* cert_verify = certificate->add_subcommand("verify", "Re-check a stored certificate");
  cert_verify->add_option("file", cert_path, "Certificate JSON file")->required();
  cert_verify->add_flag("--json", json_mode, "Machine-readable output");
  cert_verify->add_option("--out", out_path, "Write JSON output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (basis->parsed()) return run_basis(n, json_mode, out_path);
    if (construct->parsed()) return run_construct(kind, n, verify_flag, json_mode, out_path);
    if (verify->parsed()) return run_verify(pair_path, n_flag, json_mode, out_path);
    if (consistent->parsed()) return run_consistent(n, t_path, json_mode, out_path);
    if (vandermonde->parsed()) return run_vandermonde(n, t_path, x_path, json_mode, out_path);
    if (complete->parsed()) return run_complete(n, x_path, seed, max_trials, json_mode, out_path);
    if (conj->parsed()) return run_conjugation_check(n, json_mode, out_path);
    if (certificate->parsed() && cert_verify->parsed())
      return run_certificate_verify(cert_path, json_mode, out_path);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
