// Acceptance suite: every check is exact (zero tolerance) and the stated
// wall-clock budgets are enforced in-process. Run with no arguments for the
// full suite or with a criterion number (1..8) for a single criterion; one
// PASS/FAIL line is printed per criterion.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spgen/completion.hpp"
#include "spgen/spgen.hpp"

using namespace spgen;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    failed: " << what << "\n";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Mat<Rational> sum_of_root_vectors(const SpContext& ctx) {
  Mat<Rational> x = Mat<Rational>::zero(ctx.size(), ctx.size());
  for (const auto& v : ctx.root_vectors()) x += v;
  return x;
}

// 1. The lowest-weight pair generates sp_2n for n = 1..4 with closure
//    dimensions exactly 3, 10, 21, 36; under 60 seconds total.
void criterion1(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t expected_dim[] = {3, 10, 21, 36};
  for (std::size_t n = 1; n <= 4; ++n) {
    const SpContext ctx(n);
    const GeneratorPair pair = example1_pair(n);
    const GenerationResult res = generates_sp(ctx, {pair.x, pair.y});
    c.require(res.generates, "example1_pair(" + std::to_string(n) + ") generates");
    c.require(res.closure_dimension == expected_dim[n - 1],
              "closure dimension at n=" + std::to_string(n) + " is " +
                  std::to_string(expected_dim[n - 1]) + " (got " +
                  std::to_string(res.closure_dimension) + ")");
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 60.0, "runtime under 60 s (took " + std::to_string(elapsed) + " s)");
}

// 2. The weighted pair generates for n = 1..4 and [N, M] equals
//    diag(a_1, a_2-a_1, ..., -a_1, a_1-a_2, ...) with a_i = 3^i. Exact.
void criterion2(Checker& c) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const SpContext ctx(n);
    const GeneratorPair pair = prop3_pair(n);
    const GenerationResult res = generates_sp(ctx, {pair.x, pair.y});
    c.require(res.generates, "prop3_pair(" + std::to_string(n) + ") generates");

    std::vector<Rational> a;
    Rational w(1);
    for (std::size_t i = 0; i < n; ++i) {
      w *= Rational(3);
      a.push_back(w);
    }
    Mat<Rational> expected = Mat<Rational>::zero(2 * n, 2 * n);
    expected.at(0, 0) = a[0];
    expected.at(n, n) = -a[0];
    for (std::size_t i = 1; i < n; ++i) {
      expected.at(i, i) = a[i] - a[i - 1];
      expected.at(n + i, n + i) = a[i - 1] - a[i];
    }
    c.require(commutator(pair.x, pair.y) == expected,
              "[N, M] diagonal at n=" + std::to_string(n));
  }
}

// 3. lemma3_T(n) is consistent for n = 1..4 and its characteristic
//    polynomial is x^{2n} - 1. Exact.
void criterion3(Checker& c) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const SpContext ctx(n);
    const Mat<Rational> t = lemma3_T(n);
    c.require(consistent_check(ctx, t), "consistent_check(lemma3_T(" + std::to_string(n) + "))");
    c.require(charpoly(t) == Poly::monomial(2 * n) - Poly::constant(Rational(1)),
              "charpoly(lemma3_T(" + std::to_string(n) + ")) = x^{2n} - 1");
  }
}

// 4. The cyclotomic conjugation checks all pass for n = 1..3; the n = 3
//    instance under 30 seconds.
void criterion4(Checker& c) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const ConjugationReport report = verify_lemma3_conjugation(n);
    const double elapsed = seconds_since(start);
    c.require(report.invertible, "C invertible at n=" + std::to_string(n));
    c.require(report.diagonal_with_all_roots_once,
              "C^{-1}TC diagonal with each 2n-th root once at n=" + std::to_string(n));
    c.require(report.offdiagonal_nonzero,
              "off-diagonal entries of C^{-1}E_{n+1,1}C nonzero at n=" + std::to_string(n));
    if (n == 3)
      c.require(elapsed < 30.0,
                "n=3 conjugation check under 30 s (took " + std::to_string(elapsed) + " s)");
  }
}

// 5. Vandermonde independence of the 2n^2 adjoint iterates for n = 1..3,
//    with t the diagonal [N, M] of the weighted pair (weights 3^i) and x the
//    full-support root-vector sum. Exact rank check.
void criterion5(Checker& c) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const SpContext ctx(n);
    const GeneratorPair pair = prop3_pair(n);
    const Mat<Rational> t = commutator(pair.x, pair.y);
    const Mat<Rational> x = sum_of_root_vectors(ctx);
    try {
      const VandermondeResult res = vandermonde_closure(ctx, t, x);
      c.require(res.iterates.size() == 2 * n * n,
                "iterate count 2n^2 at n=" + std::to_string(n));
      c.require(res.independent, "iterates independent at n=" + std::to_string(n));
    } catch (const std::exception& e) {
      c.require(false, "vandermonde_closure at n=" + std::to_string(n) + " (" + e.what() + ")");
    }
  }
}

// 6. Inside 2n x 2n matrices the lowest-weight pair closes at dimension
//    n(2n+1) < 4n^2 - 1 for n = 2, 3. Exact.
void criterion6(Checker& c) {
  for (std::size_t n : {2u, 3u}) {
    const GeneratorPair pair = example1_pair(n);
    const std::size_t s = 2 * n;
    const ClosureResult res = bracket_closure({pair.x, pair.y}, s, s * s);
    c.require(res.dimension == n * (2 * n + 1),
              "closure dimension n(2n+1) at n=" + std::to_string(n) + " (got " +
                  std::to_string(res.dimension) + ")");
    c.require(res.dimension < 4 * n * n - 1,
              "closure is a proper subalgebra of sl_2n at n=" + std::to_string(n));
  }
}

// 7. Randomized completion: 20 pseudo-random nonzero nilpotent members of
//    sp_4 and 20 of sp_6, each completed within 200 trials, every output
//    certificate verified and every y nilpotent; under 10 minutes total.
void criterion7(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n : {2u, 3u}) {
    const SpContext ctx(n);
    Rng input_rng(1000 + n);
    for (int i = 0; i < 20; ++i) {
      const auto& root = ctx.root_vectors()[input_rng.index(ctx.root_vectors().size())];
      const Mat<Rational> g = random_symplectic(ctx, input_rng, 5, 3);
      const Mat<Rational> x = conjugate(g, root);

      Rng trial_rng(5000 + 37 * n + static_cast<std::uint64_t>(i));
      const CompletionResult res = complete_nilpotent(ctx, x, trial_rng, 200);
      const std::string label = "sp_" + std::to_string(2 * n) + " input " + std::to_string(i);
      if (!res.succeeded()) {
        c.require(false, label + " completes within 200 trials");
        continue;
      }
      c.require(is_nilpotent(res.success->y), label + ": y nilpotent");
      c.require(verify_certificate(res.success->certificate), label + ": certificate verifies");
    }
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 600.0, "runtime under 600 s (took " + std::to_string(elapsed) + " s)");
}

// 8. Verifier soundness: 100 random Jacobi checks, Cayley-Hamilton for 50
//    random matrices up to size 8, every emitted certificate round-trips
//    through the verifier, and deleting any single word invalidates a
//    valid certificate.
void criterion8(Checker& c) {
  Rng rng(88);
  auto random_matrix = [&](std::size_t size, long bound) {
    Mat<Rational> m = Mat<Rational>::zero(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m.at(i, j) = Rational(rng.uniform(-bound, bound));
    return m;
  };

  bool jacobi_ok = true;
  for (int i = 0; i < 100; ++i) {
    const std::size_t s = 2 + rng.index(4);
    const auto a = random_matrix(s, 6), b = random_matrix(s, 6), x = random_matrix(s, 6);
    const auto lhs = commutator(a, commutator(b, x)) + commutator(b, commutator(x, a)) +
                     commutator(x, commutator(a, b));
    jacobi_ok = jacobi_ok && lhs.is_zero();
  }
  c.require(jacobi_ok, "100 Jacobi identity checks");

  bool ch_ok = true;
  for (int i = 0; i < 50; ++i) {
    const std::size_t s = 1 + rng.index(8);
    const auto m = random_matrix(s, 5);
    const Poly p = charpoly(m);
    // Horner evaluation of p at m
    Mat<Rational> acc = Mat<Rational>::zero(s, s);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
      acc = acc * m;
      for (std::size_t d = 0; d < s; ++d) acc.at(d, d) += p.coeffs()[k];
    }
    ch_ok = ch_ok && acc.is_zero();
  }
  c.require(ch_ok, "Cayley-Hamilton for 50 random matrices up to size 8");

  std::vector<Certificate> emitted;
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    const SpContext ctx(n);
    for (const GeneratorPair& pair : {example1_pair(n), prop3_pair(n)}) {
      const GenerationResult res = generates_sp(ctx, {pair.x, pair.y});
      c.require(res.generates && res.certificate.has_value(),
                to_string(pair.tag) + " pair generates at n=" + std::to_string(n));
      if (res.certificate) emitted.push_back(*res.certificate);
    }
  }
  {
    const SpContext ctx(2);
    Rng crng(99);
    const Mat<Rational> x =
        conjugate(random_symplectic(ctx, crng, 5, 3),
                  ctx.root_vectors()[crng.index(ctx.root_vectors().size())]);
    const CompletionResult res = complete_nilpotent(ctx, x, crng, 200);
    c.require(res.succeeded(), "completion emits a certificate");
    if (res.succeeded()) emitted.push_back(res.success->certificate);
  }
  bool round_trip_ok = true;
  for (const auto& cert : emitted) round_trip_ok = round_trip_ok && verify_certificate(cert);
  c.require(round_trip_ok, "every emitted certificate passes verify_certificate");

  const Certificate& probe = emitted.front();
  bool deletions_fail = true;
  for (std::size_t k = 0; k < probe.words.size(); ++k) {
    Certificate damaged = probe;
    damaged.words.erase(damaged.words.begin() + static_cast<long>(k));
    deletions_fail = deletions_fail && !verify_certificate(damaged);
  }
  c.require(deletions_fail, "deleting any single word invalidates the certificate");
}

struct CriterionEntry {
  int id;
  const char* label;
  std::function<void(Checker&)> run;
};

const std::vector<CriterionEntry>& criteria() {
  static const std::vector<CriterionEntry> table = {
      {1, "lowest-weight pair generates with dimensions 3, 10, 21, 36 (n = 1..4)", criterion1},
      {2, "weighted pair generates and [N, M] is the expected diagonal (n = 1..4)", criterion2},
      {3, "lemma3_T is consistent with charpoly x^{2n} - 1 (n = 1..4)", criterion3},
      {4, "cyclotomic conjugation checks pass (n = 1..3)", criterion4},
      {5, "Vandermonde iterates independent for the weighted diagonal (n = 1..3)", criterion5},
      {6, "pair closure inside gl_2n is the proper subalgebra sp_2n (n = 2, 3)", criterion6},
      {7, "randomized completion: 20 inputs each in sp_4 and sp_6", criterion7},
      {8, "verifier soundness: Jacobi, Cayley-Hamilton, certificate round trips", criterion8},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 8) {
      std::cerr << "usage: acceptance [criterion 1..8]\n";
      return 2;
    }
  }

  int failures = 0;
  for (const auto& entry : criteria()) {
    if (only != 0 && entry.id != only) continue;
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    entry.run(c);
    const double elapsed = seconds_since(start);
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << entry.id << ": " << entry.label
              << "  [" << std::fixed << std::setprecision(2) << elapsed << " s]\n";
    std::cout.unsetf(std::ios::fixed);
    if (!c.ok) {
      std::cout << c.notes.str();
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
