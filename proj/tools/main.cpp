// hallcl: exact computations in the classical Hall algebra of nilpotent
// Jordan-quiver representations. JSON output by default, --table for text.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "hallcl/bases.hpp"
#include "hallcl/element.hpp"
#include "hallcl/errors.hpp"
#include "hallcl/hall.hpp"
#include "hallcl/jsonio.hpp"
#include "hallcl/lambda.hpp"
#include "hallcl/operators.hpp"
#include "hallcl/oracle.hpp"
#include "hallcl/text.hpp"
#include "hallcl/verify.hpp"

namespace {

using namespace hallcl;

struct Output {
  bool table = false;
  int component = -1; // >= 0: emit only this homogeneous component
  std::optional<Rational> eval_q;

  JsonOptions json() const { return JsonOptions{-1, eval_q}; }

  std::string coeff_str(const QRat& c) const {
    return eval_q ? c.eval(*eval_q).get_str() : format_qrat(c);
  }

  void element(HallElement x) const {
    if (component >= 0) x = x.component(component);
    if (!table) {
      std::cout << json_of(x, json());
      return;
    }
    if (x.is_zero()) {
      std::cout << "0\n";
      return;
    }
    for (const auto& [lam, c] : x.terms())
      std::cout << basis_name(x.basis()) << lam.to_string() << "\t" << coeff_str(c) << "\n";
  }

  void tensor(const TensorElement& x) const {
    if (!table) {
      std::cout << json_of(x, json());
      return;
    }
    if (x.is_zero()) {
      std::cout << "0\n";
      return;
    }
    for (const auto& [k, c] : x.terms())
      std::cout << basis_name(x.left_basis()) << k.first.to_string() << " (x) "
                << basis_name(x.right_basis()) << k.second.to_string() << "\t" << coeff_str(c)
                << "\n";
  }

  void scalar(const QRat& c) const {
    if (!table) {
      std::cout << json_of(c, json());
      return;
    }
    std::cout << coeff_str(c) << "\n";
  }

  void poly(const QPoly& p) const {
    if (!table) {
      std::cout << json_of(p, json());
      return;
    }
    std::cout << (eval_q ? p.eval(*eval_q).get_str() : format_qpoly(p)) << "\n";
  }

  void multipoly(const MultiPoly& m) const {
    if (!table) {
      std::cout << json_of(m, json());
      return;
    }
    for (const auto& [e, c] : m.terms()) {
      std::cout << "x^(";
      for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
      std::cout << ")\t" << coeff_str(c) << "\n";
    }
  }

  void matrix(const RatMatrix& m) const {
    if (!table) {
      std::cout << json_of(m, json());
      return;
    }
    std::cout << "cols:";
    for (const auto& p : m.cols) std::cout << " " << p.to_string();
    std::cout << "\n";
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      std::cout << m.rows[r].to_string() << ":";
      for (const auto& v : m.entries[r]) std::cout << "\t" << coeff_str(v);
      std::cout << "\n";
    }
  }

  void report(const verify::Report& rep) const {
    if (!table) {
      std::cout << rep.to_json();
      return;
    }
    for (const auto& i : rep.instances) {
      std::cout << (i.pass ? "PASS" : "FAIL") << "  " << i.key;
      if (!i.pass) std::cout << "  [" << i.detail << "]";
      std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "all passed" : "FAILURES PRESENT") << " ("
              << rep.instances.size() << " instances)\n";
  }
};

Rational parse_rational_arg(const std::string& s) {
  try {
    return rational_from_string(s);
  } catch (const std::invalid_argument&) {
    throw Error("invalid rational number: " + s);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact Hall-algebra computations (Hall-Littlewood bases, Heisenberg and vertex "
               "operators, finite-field oracle)"};
  app.require_subcommand(1);

  Output out;
  auto* table_flag = app.add_flag("--table", out.table, "aligned text output instead of JSON");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (the default)")->excludes(table_flag);
  std::string eval_q_str;
  app.add_option("--q", eval_q_str, "evaluate coefficients at this rational q (e.g. 2 or 3/2)");
  int component_degree = -1;
  app.add_option("--degree", component_degree,
                 "restrict element output to one homogeneous component");

  std::string elem_a, elem_b, basis_str = "I", lambda_str, mu_str, nu_str, suite;
  int pieri_p = 0, nvars = 1, boson_n = 0, max_degree = 4, field_q = 2;

  auto* mul = app.add_subcommand("mul", "product of two elements");
  mul->fallthrough();
  mul->add_option("a", elem_a)->required();
  mul->add_option("b", elem_b)->required();
  mul->add_option("--basis", basis_str, "output basis");

  auto* cop = app.add_subcommand("coproduct", "Green coproduct of an element");
  cop->fallthrough();
  cop->add_option("a", elem_a)->required();

  auto* ant = app.add_subcommand("antipode", "antipode of an element");
  ant->fallthrough();
  ant->add_option("a", elem_a)->required();
  ant->add_option("--basis", basis_str, "output basis");

  auto* pai = app.add_subcommand("pair", "Hopf pairing of two elements");
  pai->fallthrough();
  pai->add_option("a", elem_a)->required();
  pai->add_option("b", elem_b)->required();

  auto* con = app.add_subcommand("convert", "rewrite an element in another basis");
  con->fallthrough();
  con->add_option("a", elem_a)->required();
  con->add_option("--basis", basis_str, "target basis")->required();

  auto* hal = app.add_subcommand("hallpoly", "Hall polynomial g^lambda_{mu,nu}");
  hal->fallthrough();
  hal->add_option("--lambda", lambda_str)->required();
  hal->add_option("--mu", mu_str)->required();
  hal->add_option("--nu", nu_str)->required();

  auto* pie = app.add_subcommand("pieri", "Pieri coefficient g^lambda_{mu,(1^p)}");
  pie->fallthrough();
  pie->add_option("--lambda", lambda_str)->required();
  pie->add_option("--mu", mu_str)->required();
  pie->add_option("-p,--p", pieri_p, "column size")->required();

  auto* d0c = app.add_subcommand("d0", "apply the vertex zero mode D_0");
  d0c->fallthrough();
  d0c->add_option("a", elem_a)->required();
  d0c->add_option("--basis", basis_str, "output basis");

  auto* jin = app.add_subcommand("jing", "Jing reconstruction of Q_lambda");
  jin->fallthrough();
  jin->add_option("--lambda", lambda_str)->required();
  jin->add_option("--basis", basis_str, "output basis");

  auto* bos = app.add_subcommand("boson", "apply a Heisenberg generator b_n");
  bos->fallthrough();
  bos->add_option("-n,--n", boson_n, "mode index (negative multiplies, positive lowers)")
      ->required();
  auto* bos_apply = bos->add_option("--apply", elem_a, "element to act on");
  bos->add_option("--basis", basis_str, "output basis");
  int comm_with = 0, comm_degree = 4;
  auto* bos_comm = bos->add_option(
      "--commutator", comm_with, "emit the matrix of [b_n, b_m] on low degrees instead");
  bos->add_option("--max-degree", comm_degree, "degree bound for --commutator");

  auto* exp = app.add_subcommand("expand", "psi image as a symmetric polynomial");
  exp->fallthrough();
  exp->add_option("a", elem_a)->required();
  exp->add_option("--vars", nvars, "number of variables")->required();

  auto* ora = app.add_subcommand("oracle", "finite-field brute-force counts");
  ora->fallthrough();
  auto* org = ora->add_subcommand("g", "count invariant subspaces by type");
  org->fallthrough();
  org->add_option("--lambda", lambda_str)->required();
  org->add_option("--mu", mu_str)->required();
  org->add_option("--nu", nu_str)->required();
  org->add_option("--q", field_q, "field size (prime)")->required();
  auto* oraut = ora->add_subcommand("aut", "count automorphisms");
  oraut->fallthrough();
  oraut->add_option("--lambda", lambda_str)->required();
  oraut->add_option("--q", field_q, "field size (prime)")->required();
  ora->require_subcommand(1);

  auto* ver = app.add_subcommand("verify", "run an identity suite");
  ver->fallthrough();
  ver->add_option("suite", suite,
                  "one of: hopf, pieri-oracle, pairing, newton, cauchy, heisenberg, vertex, "
                  "jing, psi")
      ->required();
  ver->add_option("--max-degree", max_degree, "degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!eval_q_str.empty()) out.eval_q = parse_rational_arg(eval_q_str);
  out.component = component_degree;

  auto target_basis = [&]() {
    const auto b = basis_from_name(basis_str);
    if (!b) throw Error("unknown basis: " + basis_str);
    return *b;
  };

  if (*mul) {
    const HallElement a = convert(parse_element(elem_a), Basis::I);
    const HallElement b = convert(parse_element(elem_b), Basis::I);
    out.element(convert(product(a, b), target_basis()));
  } else if (*cop) {
    out.tensor(coproduct(convert(parse_element(elem_a), Basis::I)));
  } else if (*ant) {
    out.element(convert(antipode(convert(parse_element(elem_a), Basis::I)), target_basis()));
  } else if (*pai) {
    out.scalar(pairing(parse_element(elem_a), parse_element(elem_b)));
  } else if (*con) {
    out.element(convert(parse_element(elem_a), target_basis()));
  } else if (*hal) {
    out.poly(hall_polynomial(parse_partition(lambda_str), parse_partition(mu_str),
                             parse_partition(nu_str)));
  } else if (*pie) {
    out.poly(pieri_coeff(parse_partition(lambda_str), parse_partition(mu_str), pieri_p));
  } else if (*d0c) {
    out.element(convert(vertex_D0(convert(parse_element(elem_a), Basis::I)), target_basis()));
  } else if (*jin) {
    out.element(convert(jing_Q(parse_partition(lambda_str)), target_basis()));
  } else if (*bos) {
    if (bos_comm->count() > 0) {
      out.matrix(commutator_matrix(boson_n, comm_with, comm_degree));
    } else {
      if (bos_apply->count() == 0) throw Error("boson: provide --apply or --commutator");
      const HallElement a = convert(parse_element(elem_a), Basis::I);
      out.element(convert(boson(boson_n)(a), target_basis()));
    }
  } else if (*exp) {
    out.multipoly(expand_vars(psi(convert(parse_element(elem_a), Basis::I)), nvars));
  } else if (*ora) {
    long value = 0;
    if (*org)
      value = count_g(parse_partition(lambda_str), parse_partition(mu_str),
                      parse_partition(nu_str), field_q);
    else
      value = count_aut(parse_partition(lambda_str), field_q);
    std::cout << value << "\n";
  } else if (*ver) {
    const verify::Report rep = verify::run_suite(suite, max_degree);
    out.report(rep);
    return rep.all_pass() ? 0 : 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hallcl::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
