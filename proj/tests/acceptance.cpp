// Acceptance suite: one line per criterion, exact equality throughout.
// Exit code 0 iff every criterion (and every supplementary identity computed
// along the way) holds.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hallcl/verify.hpp"

using hallcl::verify::Instance;
using hallcl::verify::Report;

namespace {

struct Gate {
  int number;
  std::string title;
  std::vector<std::string> prefixes; // instance-key prefixes this gate owns
};

bool starts_with_any(const std::string& key, const std::vector<std::string>& prefixes) {
  for (const std::string& p : prefixes)
    if (key.rfind(p, 0) == 0) return true;
  return false;
}

} // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<Report> reports;
  reports.push_back(hallcl::verify::run_hopf(6));
  reports.push_back(hallcl::verify::run_pieri_oracle(5));
  reports.push_back(hallcl::verify::run_pairing(6));
  reports.push_back(hallcl::verify::run_newton(6));
  reports.push_back(hallcl::verify::run_cauchy(6));
  reports.push_back(hallcl::verify::run_heisenberg(6));
  reports.push_back(hallcl::verify::run_vertex(6));
  reports.push_back(hallcl::verify::run_jing(6));
  reports.push_back(hallcl::verify::run_psi(6));
  reports.push_back(hallcl::verify::run_qseries(10));

  const std::vector<Gate> gates = {
      {1,
       "Hopf axioms (assoc, comm, coassoc, cocomm, bialgebra, antipode axiom, Hopf pairing)",
       {"assoc/", "comm/", "coassoc/", "cocomm/", "bialgebra/", "antipode-axiom/",
        "hopf-pairing/"}},
      {2, "Pieri-oracle agreement (g at q=2,3; aut at q=2)", {"g/", "aut/"}},
      {3, "antipode closed form on [I_(1^n)], n <= 6", {"antipode-closed-form/"}},
      {4, "power sums: primitivity, orthogonality, Newton identity",
       {"primitivity/", "p-orthogonality/", "newton-identity/"}},
      {5, "Cauchy kernel, one-row series, multivariate Q coefficients",
       {"kernel/", "one-row-series/", "multivariate/"}},
      {6, "Heisenberg commutators on degrees <= 6, |m|,|n| <= 4", {"commutator/"}},
      {7, "vertex operators: D_0 eigenvalues and Jing reconstruction",
       {"d0-eigenvalue/", "jing/"}},
      {8, "psi: algebra map, pairing scaling, P_(2) expansion",
       {"algebra-map/", "pairing-scale/", "P2-expansion"}},
      {9, "q-series identities (q-binomial theorem, u^n summation, q-Chu-Vandermonde)",
       {"q-binomial-theorem/", "elementary-u/", "q-chu-vandermonde/"}},
  };

  bool all_ok = true;
  std::vector<std::string> claimed;
  for (const Gate& g : gates) {
    long n = 0, bad = 0;
    std::string first_fail;
    for (const Report& rep : reports)
      for (const Instance& i : rep.instances) {
        if (!starts_with_any(i.key, g.prefixes)) continue;
        ++n;
        if (!i.pass) {
          ++bad;
          if (first_fail.empty()) first_fail = i.key + " [" + i.detail + "]";
        }
      }
    const bool ok = bad == 0 && n > 0;
    all_ok = all_ok && ok;
    std::printf("[%s] criterion %d: %s (%ld instances%s%s)\n", ok ? "PASS" : "FAIL", g.number,
                g.title.c_str(), n, first_fail.empty() ? "" : "; first failure: ",
                first_fail.c_str());
    for (const std::string& p : g.prefixes) claimed.push_back(p);
  }

  // Identities computed by the suites beyond the nine criteria (dual bases,
  // generating series, eq-prim coefficients, gamma expansion, adjointness,
  // degree shifts, symmetry/stability of expansions) must hold as well.
  {
    long n = 0, bad = 0;
    std::string first_fail;
    for (const Report& rep : reports)
      for (const Instance& i : rep.instances) {
        if (starts_with_any(i.key, claimed)) continue;
        ++n;
        if (!i.pass) {
          ++bad;
          if (first_fail.empty()) first_fail = rep.suite + "/" + i.key + " [" + i.detail + "]";
        }
      }
    const bool ok = bad == 0;
    all_ok = all_ok && ok;
    std::printf("[%s] supplementary identities (%ld instances%s%s)\n", ok ? "PASS" : "FAIL", n,
                first_fail.empty() ? "" : "; first failure: ", first_fail.c_str());
  }

  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::printf("%s in %ld.%03lds\n", all_ok ? "acceptance passed" : "ACCEPTANCE FAILED",
              dt / 1000, dt % 1000);
  return all_ok ? 0 : 1;
}
