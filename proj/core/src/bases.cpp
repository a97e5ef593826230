#include "hallcl/bases.hpp"

#include <functional>
#include <stdexcept>

#include "cache.hpp"
#include "hallcl/errors.hpp"

namespace hallcl {

namespace {

using detail::Terms;

HallElement from_terms(Basis b, Terms t) {
  HallElement x(b);
  for (auto& [l, c] : t) x.add_term(l, c);
  return x;
}

/// Q_lambda = a_lambda q^{-n(lambda)} [I_lambda]; this is the diagonal scalar.
QRat q_scalar(const Partition& lambda) {
  return aut_order(lambda) * QRat::q_pow(-static_cast<int>(lambda.n_stat()));
}

HallElement step_i_to_x(const HallElement& x) {
  HallElement r(Basis::X);
  for (const auto& [lam, c] : x.terms())
    for (const auto& [kappa, a] : detail::i_row(lam)) r.add_term(kappa, c * a);
  return r;
}

HallElement step_x_to_i(const HallElement& x) {
  HallElement r(Basis::I);
  for (const auto& [kappa, c] : x.terms())
    for (const auto& [lam, a] : detail::x_row(kappa)) r.add_term(lam, c * a);
  return r;
}

// X_lambda = q^{-n(lambda)} e_{lambda'} and e_mu = q^{n(mu')} X_{mu'}.
HallElement step_x_to_e(const HallElement& x) {
  HallElement r(Basis::e);
  for (const auto& [lam, c] : x.terms())
    r.add_term(lam.conjugate(), c * QRat::q_pow(-static_cast<int>(lam.n_stat())));
  return r;
}

HallElement step_e_to_x(const HallElement& x) {
  HallElement r(Basis::X);
  for (const auto& [mu, c] : x.terms()) {
    const Partition t = mu.conjugate();
    r.add_term(t, c * QRat::q_pow(static_cast<int>(t.n_stat())));
  }
  return r;
}

HallElement expand_monomials(Basis to, const HallElement& x, const Terms& (*gen)(int)) {
  HallElement r(to);
  for (const auto& [mu, c] : x.terms()) {
    Terms acc{{Partition{}, QRat(1)}};
    for (int part : mu.parts()) acc = detail::free_mult(acc, gen(part));
    for (const auto& [key, v] : acc) r.add_term(key, c * v);
  }
  return r;
}

HallElement step_e_to_p(const HallElement& x) { return expand_monomials(Basis::p, x, detail::e_in_p); }
HallElement step_p_to_e(const HallElement& x) { return expand_monomials(Basis::e, x, detail::p_in_e); }

HallElement step_i_to_p_diag(const HallElement& x, Basis to) {
  // P and Q are diagonal rescalings of the I basis.
  HallElement r(to);
  for (const auto& [lam, c] : x.terms()) {
    const QRat s = (to == Basis::P) ? QRat::q_pow(static_cast<int>(lam.n_stat())) : q_scalar(lam);
    r.add_term(lam, c / s);
  }
  return r;
}

HallElement step_diag_to_i(const HallElement& x) {
  HallElement r(Basis::I);
  for (const auto& [lam, c] : x.terms()) {
    const QRat s = (x.basis() == Basis::P) ? QRat::q_pow(static_cast<int>(lam.n_stat()))
                                           : q_scalar(lam);
    r.add_term(lam, c * s);
  }
  return r;
}

Basis next_hop(Basis from, Basis to) {
  switch (from) {
    case Basis::I: return (to == Basis::P || to == Basis::Q) ? to : Basis::X;
    case Basis::P:
    case Basis::Q: return Basis::I;
    case Basis::X: return (to == Basis::e || to == Basis::p) ? Basis::e : Basis::I;
    case Basis::e: return (to == Basis::p) ? Basis::p : Basis::X;
    case Basis::p: return Basis::e;
  }
  throw std::logic_error("next_hop: unreachable");
}

HallElement one_step(const HallElement& x, Basis to) {
  switch (x.basis()) {
    case Basis::I: return (to == Basis::X) ? step_i_to_x(x) : step_i_to_p_diag(x, to);
    case Basis::P:
    case Basis::Q: return step_diag_to_i(x);
    case Basis::X: return (to == Basis::e) ? step_x_to_e(x) : step_x_to_i(x);
    case Basis::e: return (to == Basis::p) ? step_e_to_p(x) : step_e_to_x(x);
    case Basis::p: return step_p_to_e(x);
  }
  throw std::logic_error("one_step: unreachable");
}

} // namespace

HallElement x_element(const Partition& lambda) {
  return from_terms(Basis::I, detail::x_row(lambda));
}

HallElement convert(const HallElement& x, Basis to) {
  HallElement cur = x;
  while (cur.basis() != to) cur = one_step(cur, next_hop(cur.basis(), to));
  return cur;
}

HallElement p_element(int n) {
  if (n < 1) throw std::invalid_argument("p_element: n must be positive");
  HallElement r(Basis::I);
  for (const Partition& lam : partitions_of(n))
    r.add_term(lam, poch(QRat::q(), lam.length() - 1));
  return r;
}

HallElement e_element(int n) {
  if (n < 0) throw std::invalid_argument("e_element: n must be nonnegative");
  return HallElement::single(Basis::I, Partition::column(n), QRat::q_pow(n * (n - 1) / 2));
}

bool newton_identity_check(int n) {
  if (n < 1) throw std::invalid_argument("newton_identity_check: n must be positive");
  HallElement lhs(Basis::I);
  for (int r = 0; r < n; ++r) {
    HallElement term = product(p_element(n - r), e_element(r));
    lhs += (r % 2 == 0) ? term : -term;
  }
  HallElement rhs = e_element(n) * QRat((n % 2 == 1) ? n : -n);
  return lhs == rhs;
}

std::pair<TensorElement, TensorElement> cauchy_kernel_sides(int d) {
  if (d < 0) throw std::invalid_argument("cauchy_kernel_sides: d must be nonnegative");
  TensorElement lhs(Basis::I, Basis::I);
  for (const Partition& lam : partitions_of(d)) {
    // P_l (x) Q_l in I coordinates is the single term q^{n(l)} * a_l q^{-n(l)}.
    lhs.add_term(lam, lam, QRat::q_pow(static_cast<int>(lam.n_stat())) * q_scalar(lam));
  }

  TensorElement arg(Basis::I, Basis::I);
  for (int n = 1; n <= d; ++n) {
    const QRat c = (QRat::q_pow(n) - QRat(1)) * QRat(Rational(1, n));
    const HallElement pn = p_element(n);
    for (const auto& [a, ca] : pn.terms())
      for (const auto& [b, cb] : pn.terms()) arg.add_term(a, b, c * ca * cb);
  }
  TensorElement rhs = TensorElement::single(Basis::I, Basis::I, Partition{}, Partition{});
  TensorElement power = rhs;
  for (int m = 1; m <= d; ++m) {
    power = tensor_product(power, arg, d, d);
    power *= QRat(Rational(1, m));
    if (power.is_zero()) break;
    rhs += power;
  }
  return {lhs.bicomponent(d, d), rhs.bicomponent(d, d)};
}

std::vector<HallElement> q_onecolumn_series(int N) {
  if (N < 0) throw std::invalid_argument("q_onecolumn_series: N must be nonnegative");
  const std::size_t len = static_cast<std::size_t>(N) + 1;
  // z-series with HallElement coefficients, truncated beyond z^N.
  std::vector<HallElement> arg(len, HallElement(Basis::I));
  for (int n = 1; n <= N; ++n)
    arg[static_cast<std::size_t>(n)] =
        p_element(n) * ((QRat::q_pow(n) - QRat(1)) * QRat(Rational(1, n)));

  std::vector<HallElement> acc(len, HallElement(Basis::I));
  acc[0] = HallElement::unit(Basis::I);
  std::vector<HallElement> power = acc;
  for (int m = 1; m <= N; ++m) {
    std::vector<HallElement> next(len, HallElement(Basis::I));
    for (std::size_t i = 0; i < len; ++i) {
      if (power[i].is_zero()) continue;
      for (std::size_t j = 1; i + j < len; ++j) {
        if (arg[j].is_zero()) continue;
        next[i + j] += product(power[i], arg[j]);
      }
    }
    const QRat inv_m = QRat(Rational(1, m));
    for (std::size_t i = 0; i < len; ++i) {
      next[i] *= inv_m;
      acc[i] += next[i];
    }
    power = std::move(next);
  }
  return acc;
}

HallElement q_multivariate_coeff(const Partition& lambda) {
  const int l = lambda.length();
  if (l < 1) throw std::invalid_argument("q_multivariate_coeff: need a nonempty partition");
  const int w = lambda.weight();
  const std::vector<HallElement> qrow = q_onecolumn_series(w);

  // F(z) = (1-z)/(1-q^{-1}z) = 1 + sum_{k>=1} q^{-k}(1-q) z^k; the factor
  // F(z_j/z_i) shifts the one-row index up by k at slot i and down at slot j.
  const QRat fbase = QRat(1) - QRat::q();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) pairs.emplace_back(i, j);

  HallElement acc(Basis::I);
  std::vector<int> k(pairs.size(), 0);
  std::function<void(std::size_t, QRat)> rec = [&](std::size_t idx, QRat weight) {
    if (idx == pairs.size()) {
      std::vector<int> n(static_cast<std::size_t>(l));
      for (int i = 0; i < l; ++i) n[static_cast<std::size_t>(i)] = lambda.part(i + 1);
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        n[static_cast<std::size_t>(pairs[t].first)] += k[t];
        n[static_cast<std::size_t>(pairs[t].second)] -= k[t];
      }
      HallElement term = HallElement::unit(Basis::I);
      for (int i = 0; i < l; ++i) {
        const int ni = n[static_cast<std::size_t>(i)];
        if (ni < 0 || ni > w) return;
        term = product(term, qrow[static_cast<std::size_t>(ni)]);
      }
      acc += term * weight;
      return;
    }
    for (int v = 0; v <= w; ++v) {
      k[idx] = v;
      rec(idx + 1, v == 0 ? weight : weight * fbase * QRat::q_pow(-v));
    }
  };
  rec(0, QRat(1));
  return acc;
}

} // namespace hallcl
