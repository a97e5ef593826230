#include "hallcl/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <tuple>

#include "hallcl/bases.hpp"
#include "hallcl/element.hpp"
#include "hallcl/errors.hpp"
#include "hallcl/hall.hpp"
#include "hallcl/lambda.hpp"
#include "hallcl/operators.hpp"
#include "hallcl/oracle.hpp"
#include "hallcl/text.hpp"

namespace hallcl::verify {

namespace {

struct Builder {
  Report rep;

  explicit Builder(std::string suite, int max_degree) {
    rep.suite = std::move(suite);
    rep.max_degree = max_degree;
  }

  void check(std::string key, bool ok, const std::string& detail = "") {
    rep.instances.push_back({std::move(key), ok, ok ? "" : detail});
  }

  void check_equal(std::string key, const HallElement& got, const HallElement& want) {
    const bool ok = got == want;
    check(std::move(key), ok,
          ok ? "" : "got " + format_element(got) + "; want " + format_element(want));
  }

  void check_equal(std::string key, const QRat& got, const QRat& want) {
    const bool ok = got == want;
    check(std::move(key), ok, ok ? "" : "got " + format_qrat(got) + "; want " + format_qrat(want));
  }

  Report done() {
    std::sort(rep.instances.begin(), rep.instances.end(),
              [](const Instance& a, const Instance& b) { return a.key < b.key; });
    return std::move(rep);
  }
};

std::string tensor_str(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : t.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + format_qrat(c) + ")*" + k.first.to_string() + "(x)" + k.second.to_string();
  }
  return s;
}

void check_tensor(Builder& b, std::string key, const TensorElement& got,
                  const TensorElement& want) {
  const bool ok = got == want;
  b.check(std::move(key), ok, ok ? "" : "got " + tensor_str(got) + "; want " + tensor_str(want));
}

std::vector<Partition> partitions_up_to(int max_degree) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_degree; ++d)
    for (const Partition& p : partitions_of(d)) out.push_back(p);
  return out;
}

HallElement ibasis(const Partition& p) { return HallElement::single(Basis::I, p); }

} // namespace

bool Report::all_pass() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const Instance& i) { return i.pass; });
}

std::string Report::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["max_degree"] = max_degree;
  j["pass"] = all_pass();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Instance& i : instances) {
    nlohmann::ordered_json e;
    e["key"] = i.key;
    e["pass"] = i.pass;
    if (!i.pass) e["detail"] = i.detail;
    arr.push_back(std::move(e));
  }
  j["instances"] = std::move(arr);
  return (indent < 0 ? j.dump() : j.dump(indent)) + "\n";
}

Report run_hopf(int D) {
  Builder b("hopf", D);
  const int Dsmall = D - 1; // bialgebra and Hopf-pairing instances

  // Associativity and commutativity on basis triples/pairs of total degree <= D.
  for (int s = 0; s <= D; ++s)
    for (int a = 0; a <= s; ++a)
      for (const Partition& mu : partitions_of(a))
        for (const Partition& nu : partitions_of(s - a)) {
          if (nu < mu) continue;
          b.check_equal("comm/" + mu.to_string() + "*" + nu.to_string(),
                        product(ibasis(mu), ibasis(nu)), product(ibasis(nu), ibasis(mu)));
        }
  for (int s = 0; s <= D; ++s)
    for (int a = 0; a <= s; ++a)
      for (int c = 0; a + c <= s; ++c) {
        const int mid = s - a - c;
        for (const Partition& x : partitions_of(a))
          for (const Partition& y : partitions_of(mid))
            for (const Partition& z : partitions_of(c))
              b.check_equal(
                  "assoc/" + x.to_string() + "*" + y.to_string() + "*" + z.to_string(),
                  product(product(ibasis(x), ibasis(y)), ibasis(z)),
                  product(ibasis(x), product(ibasis(y), ibasis(z))));
      }

  // Coassociativity and cocommutativity on [I_lambda], |lambda| <= D.
  for (const Partition& lam : partitions_up_to(D)) {
    const TensorElement d1 = coproduct(ibasis(lam));
    check_tensor(b, "cocomm/" + lam.to_string(), d1.swapped(), d1);

    std::map<std::tuple<Partition, Partition, Partition>, QRat> left, right;
    for (const auto& [k, c] : d1.terms()) {
      const TensorElement dl = coproduct(ibasis(k.first));
      for (const auto& [k2, c2] : dl.terms()) {
        auto key = std::make_tuple(k2.first, k2.second, k.second);
        auto [it, ins] = left.try_emplace(key, c * c2);
        if (!ins) it->second += c * c2;
      }
      const TensorElement dr = coproduct(ibasis(k.second));
      for (const auto& [k2, c2] : dr.terms()) {
        auto key = std::make_tuple(k.first, k2.first, k2.second);
        auto [it, ins] = right.try_emplace(key, c * c2);
        if (!ins) it->second += c * c2;
      }
    }
    std::erase_if(left, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(right, [](const auto& kv) { return kv.second.is_zero(); });
    b.check("coassoc/" + lam.to_string(), left == right,
            "(Delta(x)id)Delta differs from (id(x)Delta)Delta");
  }

  // Bialgebra: Delta(x*y) = Delta(x)*Delta(y), total degree <= D-1.
  for (int s = 0; s <= Dsmall; ++s)
    for (int a = 0; a <= s; ++a)
      for (const Partition& mu : partitions_of(a))
        for (const Partition& nu : partitions_of(s - a)) {
          if (nu < mu) continue;
          check_tensor(b, "bialgebra/" + mu.to_string() + "*" + nu.to_string(),
                       coproduct(product(ibasis(mu), ibasis(nu))),
                       tensor_product(coproduct(ibasis(mu)), coproduct(ibasis(nu))));
        }

  // Hopf pairing property <x*y, z> = sum <x,z1><y,z2>, total degree <= D-1.
  for (int s = 0; s <= Dsmall; ++s)
    for (int a = 0; a <= s; ++a)
      for (const Partition& x : partitions_of(a))
        for (const Partition& y : partitions_of(s - a))
          for (const Partition& z : partitions_of(s)) {
            QRat rhs(0);
            const TensorElement dz = coproduct(ibasis(z));
            for (const auto& [k, c] : dz.terms())
              rhs += c * pairing(ibasis(x), ibasis(k.first)) *
                     pairing(ibasis(y), ibasis(k.second));
            b.check_equal("hopf-pairing/" + x.to_string() + "*" + y.to_string() + "," +
                              z.to_string(),
                          pairing(product(ibasis(x), ibasis(y)), ibasis(z)), rhs);
          }

  // Antipode axiom m(id(x)S)Delta = unit.counit on [I_lambda], |lambda| <= D.
  for (const Partition& lam : partitions_up_to(D)) {
    HallElement got(Basis::I);
    const TensorElement dlam = coproduct(ibasis(lam));
    for (const auto& [k, c] : dlam.terms())
      got += product(ibasis(k.first), antipode(ibasis(k.second))) * c;
    const HallElement want =
        lam.empty() ? HallElement::unit(Basis::I) : HallElement(Basis::I);
    b.check_equal("antipode-axiom/" + lam.to_string(), got, want);
  }

  // Antipode closed form on the generators [I_{(1^n)}], n <= D.
  for (int n = 0; n <= D; ++n) {
    HallElement want(Basis::I);
    const QRat c = QRat::q_pow(-n * (n - 1) / 2) * QRat(n % 2 == 0 ? 1 : -1);
    for (const Partition& lam : partitions_of(n)) want.add_term(lam, c);
    b.check_equal("antipode-closed-form/n=" + std::to_string(n),
                  antipode(ibasis(Partition::column(n))), want);
  }
  return b.done();
}

Report run_pieri_oracle(int D) {
  Builder b("pieri-oracle", D);
  for (int q0 : {2, 3}) {
    const int dmax = std::min(D, q0 == 2 ? 5 : 4);
    for (int d = 0; d <= dmax; ++d)
      for (const Partition& lam : partitions_of(d)) {
        const auto tally = count_g_table(lam, q0);
        bool ok = true;
        std::string detail;
        long total = 0;
        for (int a = 0; a <= d; ++a)
          for (const Partition& mu : partitions_of(a))
            for (const Partition& nu : partitions_of(d - a)) {
              const Rational sym =
                  QRat(hall_polynomial(lam, mu, nu)).eval(Rational(q0));
              auto it = tally.find({mu, nu});
              const long cnt = it == tally.end() ? 0 : it->second;
              total += cnt;
              if (sym != cnt) {
                ok = false;
                detail = "g^" + lam.to_string() + "_(" + mu.to_string() + "," +
                         nu.to_string() + "): symbolic " + sym.get_str() + " vs count " +
                         std::to_string(cnt);
              }
            }
        // The tally must also be exhausted by the classification.
        long tsum = 0;
        for (const auto& [k, v] : tally) tsum += v;
        if (tsum != total) {
          ok = false;
          detail = "classification not total: " + std::to_string(tsum) + " vs " +
                   std::to_string(total);
        }
        b.check("g/" + lam.to_string() + "/q=" + std::to_string(q0), ok, detail);
      }
  }
  for (int d = 0; d <= std::min(D, 4); ++d)
    for (const Partition& lam : partitions_of(d)) {
      const Rational sym = aut_order(lam).eval(Rational(2));
      const long cnt = count_aut(lam, 2);
      b.check("aut/" + lam.to_string() + "/q=2", sym == cnt,
              "symbolic " + sym.get_str() + " vs count " + std::to_string(cnt));
    }
  return b.done();
}

Report run_pairing(int D) {
  Builder b("pairing", D);
  for (int m = 1; m <= D; ++m)
    for (int n = m; n <= D; ++n) {
      const QRat want = m == n ? QRat(n) / (QRat::q_pow(n) - QRat(1)) : QRat(0);
      b.check_equal("p-orthogonality/m=" + std::to_string(m) + ",n=" + std::to_string(n),
                    pairing(p_element(m), p_element(n)), want);
    }
  for (int n = 1; n <= D; ++n) {
    const HallElement pn = p_element(n);
    TensorElement want(Basis::I, Basis::I);
    for (const auto& [lam, c] : pn.terms()) {
      want.add_term(lam, Partition{}, c);
      want.add_term(Partition{}, lam, c);
    }
    check_tensor(b, "primitivity/n=" + std::to_string(n), coproduct(pn), want);
  }
  for (const Partition& lam : partitions_up_to(D))
    for (const Partition& mu : partitions_up_to(D)) {
      if (lam.weight() != mu.weight()) continue;
      const QRat want = lam == mu ? QRat(1) : QRat(0);
      b.check_equal("PQ-duality/" + lam.to_string() + "," + mu.to_string(),
                    pairing(convert(HallElement::single(Basis::P, lam), Basis::I),
                            convert(HallElement::single(Basis::Q, mu), Basis::I)),
                    want);
    }
  return b.done();
}

Report run_newton(int D) {
  Builder b("newton", D);
  for (int n = 1; n <= D; ++n)
    b.check("newton-identity/n=" + std::to_string(n), newton_identity_check(n),
            "sum_{r} (-1)^r p_{n-r} e_r differs from (-1)^{n-1} n e_n");

  // E(z) = sum e_n (-z)^n against exp(-sum p_n z^n / n), coefficients to z^D.
  {
    std::vector<HallElement> lhs;
    for (int n = 0; n <= D; ++n)
      lhs.push_back(e_element(n) * QRat(n % 2 == 0 ? 1 : -1));
    std::vector<HallElement> arg(static_cast<std::size_t>(D) + 1, HallElement(Basis::I));
    for (int n = 1; n <= D; ++n)
      arg[static_cast<std::size_t>(n)] = p_element(n) * QRat(Rational(-1, n));
    std::vector<HallElement> rhs(static_cast<std::size_t>(D) + 1, HallElement(Basis::I));
    rhs[0] = HallElement::unit(Basis::I);
    std::vector<HallElement> power = rhs;
    for (int m = 1; m <= D; ++m) {
      std::vector<HallElement> next(static_cast<std::size_t>(D) + 1, HallElement(Basis::I));
      for (std::size_t i = 0; i <= static_cast<std::size_t>(D); ++i) {
        if (power[i].is_zero()) continue;
        for (std::size_t j = 1; i + j <= static_cast<std::size_t>(D); ++j)
          next[i + j] += product(power[i], arg[j]);
      }
      const QRat inv_m = QRat(Rational(1, m));
      for (std::size_t i = 0; i <= static_cast<std::size_t>(D); ++i) {
        next[i] *= inv_m;
        rhs[i] += next[i];
      }
      power = std::move(next);
    }
    for (int n = 0; n <= D; ++n)
      b.check_equal("generating-series/z^" + std::to_string(n),
                    lhs[static_cast<std::size_t>(n)], rhs[static_cast<std::size_t>(n)]);
  }
  return b.done();
}

Report run_cauchy(int D) {
  Builder b("cauchy", D);
  for (int d = 0; d <= D; ++d) {
    const auto [lhs, rhs] = cauchy_kernel_sides(d);
    check_tensor(b, "kernel/d=" + std::to_string(d), lhs, rhs);
  }
  const auto series = q_onecolumn_series(D);
  for (int n = 0; n <= D; ++n)
    b.check_equal("one-row-series/n=" + std::to_string(n),
                  series[static_cast<std::size_t>(n)],
                  convert(HallElement::single(Basis::Q, Partition::row(n)), Basis::I));
  for (const Partition& lam : partitions_up_to(D)) {
    if (lam.empty() || lam.length() > 3) continue;
    b.check_equal("multivariate/" + lam.to_string(), q_multivariate_coeff(lam),
                  convert(HallElement::single(Basis::Q, lam), Basis::I));
  }
  return b.done();
}

Report run_heisenberg(int D) {
  Builder b("heisenberg", D);
  for (int m = -4; m <= 4; ++m)
    for (int n = -4; n <= 4; ++n) {
      if (m == 0 || n == 0) continue;
      const RatMatrix mat = commutator_matrix(m, n, D);
      bool ok;
      if (m + n == 0) {
        // [b_p, b_{-p}] = p/(q^p-1) for p > 0; the reversed order follows by
        // antisymmetry of the commutator.
        const int p = std::max(m, n);
        QRat scalar = QRat(p) / (QRat::q_pow(p) - QRat(1));
        if (m < 0) scalar = -scalar;
        ok = mat.is_scalar_identity(scalar);
      } else {
        ok = mat.is_zero();
      }
      b.check("commutator/m=" + std::to_string(m) + ",n=" + std::to_string(n), ok,
              "matrix differs from delta_{m+n,0} m/(q^m-1) id");
    }

  // The coefficient system equivalent to primitivity of p_n: with
  // c_l = (q;q)_{len(l)-1}, sum_l c_l e^l_{mu,nu} / a_l = 0 for mu, nu
  // nonempty, and e^l_{mu,0} = delta a_l.
  const int dprim = std::min(D, 5);
  for (int n = 1; n <= dprim; ++n) {
    for (int a = 1; a < n; ++a)
      for (const Partition& mu : partitions_of(a))
        for (const Partition& nu : partitions_of(n - a)) {
          QRat s(0);
          for (const Partition& lam : partitions_of(n)) {
            const QRat g = QRat(hall_polynomial(lam, mu, nu));
            if (g.is_zero()) continue;
            s += poch(QRat::q(), lam.length() - 1) * g * aut_order(mu) * aut_order(nu) /
                 aut_order(lam);
          }
          b.check_equal("prim-sum/" + mu.to_string() + "," + nu.to_string(), s, QRat(0));
        }
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : partitions_of(n)) {
        const QRat e = QRat(hall_polynomial(lam, mu, Partition{})) * aut_order(mu);
        b.check_equal("prim-unit/" + lam.to_string() + "," + mu.to_string(), e,
                      lam == mu ? aut_order(lam) : QRat(0));
      }
  }

  // gamma expansion of b_m * b_{-n}: summing c_mu c_nu gamma^{a,b}_{mu,nu}
  // must produce the normal-ordered coefficients from the Heisenberg proof.
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int da = 0; da <= m; ++da)
        for (const Partition& alpha : partitions_of(da))
          for (int db = 0; db <= n; ++db)
            for (const Partition& beta : partitions_of(db)) {
              QRat got(0);
              for (const Partition& mu : partitions_of(m))
                for (const Partition& nu : partitions_of(n))
                  got += poch(QRat::q(), mu.length() - 1) *
                         poch(QRat::q(), nu.length() - 1) *
                         gamma_coeff(alpha, beta, mu, nu);
              QRat want(0);
              if (alpha.empty() && beta.empty() && m == n)
                want += QRat(m) / (QRat::q_pow(m) - QRat(1));
              if (alpha.weight() == m && beta.weight() == n)
                want += poch(QRat::q(), alpha.length() - 1) *
                        poch(QRat::q(), beta.length() - 1);
              b.check_equal("gamma-expansion/m=" + std::to_string(m) +
                                ",n=" + std::to_string(n) + "/" + alpha.to_string() + "," +
                                beta.to_string(),
                            got, want);
            }
  return b.done();
}

Report run_vertex(int D) {
  Builder b("vertex", D);
  for (const Partition& lam : partitions_up_to(D)) {
    const HallElement plam = convert(HallElement::single(Basis::P, lam), Basis::I);
    b.check_equal("d0-eigenvalue/" + lam.to_string(), vertex_D0(plam),
                  plam * QRat::q_pow(lam.length()));
  }

  // Degree shifts on homogeneous inputs.
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lam : partitions_up_to(std::min(D, 4))) {
      for (const GradedOperator& op : {mult_p(n), del_p(n), boson(n), boson(-n)}) {
        const HallElement out = op(ibasis(lam));
        const auto deg = out.homogeneous_degree();
        const bool ok = out.is_zero() || (deg && *deg == lam.weight() + op.degree_shift);
        b.check("degree-shift/n=" + std::to_string(n) + "/shift=" +
                    std::to_string(op.degree_shift) + "/" + lam.to_string(),
                ok, "output degree does not match degree_shift");
      }
    }

  // Adjointness: <p_n x, y> = (n/(q^n-1)) <x, del_{p_n} y> for degrees <= 5.
  const int dadj = std::min(D, 5);
  for (int n = 1; n <= 3; ++n)
    for (int dx = 0; dx + n <= dadj; ++dx)
      for (const Partition& x : partitions_of(dx))
        for (const Partition& y : partitions_of(dx + n)) {
          const QRat lhs = pairing(mult_p(n)(ibasis(x)), ibasis(y));
          const QRat rhs =
              QRat(n) / (QRat::q_pow(n) - QRat(1)) * pairing(ibasis(x), del_p(n)(ibasis(y)));
          b.check_equal("adjoint/n=" + std::to_string(n) + "/" + x.to_string() + "," +
                            y.to_string(),
                        lhs, rhs);
        }
  return b.done();
}

Report run_jing(int D) {
  Builder b("jing", D);
  for (const Partition& lam : partitions_up_to(D))
    b.check_equal("jing/" + lam.to_string(), jing_Q(lam),
                  convert(HallElement::single(Basis::Q, lam), Basis::I));
  b.check_equal("mode/B0(1)", vertex_B(0, HallElement::unit(Basis::I)),
                HallElement::unit(Basis::I));
  b.check_equal("mode/B-1(1)", vertex_B(-1, HallElement::unit(Basis::I)),
                HallElement(Basis::I));
  b.check_equal("mode/B1(1)", vertex_B(1, HallElement::unit(Basis::I)),
                convert(HallElement::single(Basis::Q, Partition::row(1)), Basis::I));
  return b.done();
}

Report run_psi(int D) {
  Builder b("psi", D);
  // Algebra map on basis pairs of total degree <= D.
  for (int s = 0; s <= D; ++s)
    for (int a = 0; a <= s; ++a)
      for (const Partition& mu : partitions_of(a))
        for (const Partition& nu : partitions_of(s - a)) {
          if (nu < mu) continue;
          const LambdaElement got = psi(product(ibasis(mu), ibasis(nu)));
          const LambdaElement want = lambda_product(psi(ibasis(mu)), psi(ibasis(nu)));
          b.check("algebra-map/" + mu.to_string() + "*" + nu.to_string(), got == want,
                  "psi(x*y) differs from psi(x).psi(y)");
        }
  // Pairing scaling q^n on same-degree pairs.
  for (const Partition& lam : partitions_up_to(D))
    for (const Partition& mu : partitions_up_to(D)) {
      if (lam.weight() != mu.weight() || mu < lam) continue;
      b.check_equal("pairing-scale/" + lam.to_string() + "," + mu.to_string(),
                    lambda_pairing(psi(ibasis(lam)), psi(ibasis(mu))),
                    pairing(ibasis(lam), ibasis(mu)) * QRat::q_pow(lam.weight()));
    }
  // Symmetry of expansions under coordinate permutation, and stability.
  for (int N = 2; N <= 4; ++N)
    for (const Partition& lam : partitions_up_to(std::min(D, 6))) {
      if (lam.empty()) continue;
      const MultiPoly mp = expand_vars(psi(ibasis(lam)), N);
      std::vector<int> rot(static_cast<std::size_t>(N));
      for (int i = 0; i < N; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % N;
      std::vector<int> swp(rot.size());
      for (int i = 0; i < N; ++i) swp[static_cast<std::size_t>(i)] = i;
      std::swap(swp[0], swp[1]);
      const bool ok = mp.permuted(rot) == mp && mp.permuted(swp) == mp;
      b.check("symmetric/N=" + std::to_string(N) + "/" + lam.to_string(), ok,
              "expansion is not invariant under coordinate permutations");
      const MultiPoly next = expand_vars(psi(ibasis(lam)), N + 1);
      b.check("stability/N=" + std::to_string(N) + "/" + lam.to_string(),
              next.restricted() == mp, "restriction x_{N+1}=0 does not match");
    }
  // The pinned expansion of psi(P_(2)) in two variables.
  {
    const MultiPoly got =
        expand_vars(psi(convert(HallElement::single(Basis::P, Partition::row(2)), Basis::I)), 2);
    MultiPoly want(2);
    want.add_term({2, 0}, QRat(1));
    want.add_term({0, 2}, QRat(1));
    want.add_term({1, 1}, QRat(1) - QRat::q_pow(-1));
    b.check("P2-expansion", got == want, "differs from x1^2+x2^2+(1-q^-1)x1x2");
  }
  return b.done();
}

Report run_qseries(int max_n) {
  Builder b("qseries", max_n);

  // Terminating q-binomial theorem, coefficients in a second indeterminate x:
  // sum_k (-x)^k q^C(k,2) [n k]_q = (x;q)_n.
  for (int n = 0; n <= max_n; ++n) {
    std::map<int, QPoly> lhs, rhs;
    for (int k = 0; k <= n; ++k) {
      QPoly c = qbinomial(n, k).shifted(k * (k - 1) / 2);
      if (k % 2 == 1) c = -c;
      if (!c.is_zero()) lhs[k] = c;
    }
    rhs[0] = QPoly(1);
    for (int i = 1; i <= n; ++i) {
      // multiply by (1 - x q^{i-1})
      std::map<int, QPoly> next;
      for (const auto& [xe, c] : rhs) {
        next[xe] += c;
        next[xe + 1] -= c.shifted(i - 1);
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      rhs = std::move(next);
    }
    b.check("q-binomial-theorem/n=" + std::to_string(n), lhs == rhs,
            "expansion differs from (x;q)_n");
  }

  // sum_l [n l]_t (u^{-1};t)_l u^l = u^n, coefficients in u Laurent.
  for (int n = 0; n <= std::min(max_n, 8); ++n) {
    std::map<int, QPoly> lhs;
    for (int l = 0; l <= n; ++l) {
      // (u^{-1};t)_l expanded in powers of u.
      std::map<int, QPoly> f{{0, QPoly(1)}};
      for (int i = 1; i <= l; ++i) {
        std::map<int, QPoly> next;
        for (const auto& [ue, c] : f) {
          next[ue] += c;
          next[ue - 1] -= c.shifted(i - 1);
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        f = std::move(next);
      }
      const QPoly bin = qbinomial(n, l);
      for (const auto& [ue, c] : f) {
        lhs[ue + l] += c * bin;
        if (lhs[ue + l].is_zero()) lhs.erase(ue + l);
      }
    }
    const bool ok = lhs.size() == 1 && lhs.count(n) == 1 && lhs[n].is_one();
    b.check("elementary-u/n=" + std::to_string(n), ok, "sum differs from u^n");
  }

  // q-Chu-Vandermonde: sum_j t^{(a-k+j)j} [a k-j]_t [b j]_t = [a+b k]_t.
  for (int a = 0; a <= 5; ++a)
    for (int bb = 0; bb <= 5; ++bb)
      for (int k = 0; k <= a + bb; ++k) {
        QPoly s;
        for (int j = 0; j <= k; ++j) {
          const QPoly t1 = qbinomial(a, k - j);
          if (t1.is_zero()) continue;
          const QPoly t2 = qbinomial(bb, j);
          if (t2.is_zero()) continue;
          s += (t1 * t2).shifted((a - k + j) * j);
        }
        b.check("q-chu-vandermonde/a=" + std::to_string(a) + ",b=" + std::to_string(bb) +
                    ",k=" + std::to_string(k),
                s == qbinomial(a + bb, k), "sum differs from [a+b k]");
      }
  return b.done();
}

Report run_suite(const std::string& name, int max_degree) {
  if (name == "hopf") return run_hopf(max_degree);
  if (name == "pieri-oracle") return run_pieri_oracle(max_degree);
  if (name == "pairing") return run_pairing(max_degree);
  if (name == "newton") return run_newton(max_degree);
  if (name == "cauchy") return run_cauchy(max_degree);
  if (name == "heisenberg") return run_heisenberg(max_degree);
  if (name == "vertex") return run_vertex(max_degree);
  if (name == "jing") return run_jing(max_degree);
  if (name == "psi") return run_psi(max_degree);
  throw Error("unknown verify suite: " + name);
}

} // namespace hallcl::verify
