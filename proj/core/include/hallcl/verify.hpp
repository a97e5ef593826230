#pragma once

#include <string>
#include <vector>

namespace hallcl::verify {

struct Instance {
  std::string key;
  bool pass = false;
  std::string detail; // failing data, serialized; empty on pass
};

struct Report {
  std::string suite;
  int max_degree = 0;
  std::vector<Instance> instances;

  bool all_pass() const;
  std::string to_json(int indent = -1) const;
};

/// The CLI-facing suites. Throws Error on an unknown name. Valid names:
/// hopf, pieri-oracle, pairing, newton, cauchy, heisenberg, vertex, jing, psi.
Report run_suite(const std::string& name, int max_degree);

Report run_hopf(int max_degree);
Report run_pieri_oracle(int max_degree);
Report run_pairing(int max_degree);
Report run_newton(int max_degree);
Report run_cauchy(int max_degree);
Report run_heisenberg(int max_degree);
Report run_vertex(int max_degree);
Report run_jing(int max_degree);
Report run_psi(int max_degree);

/// The exact q-series identities (terminating q-binomial theorem, the
/// elementary u^n summation, q-Chu-Vandermonde). Driven by the acceptance
/// binary; not one of the CLI suite names.
Report run_qseries(int max_n = 10);

} // namespace hallcl::verify
