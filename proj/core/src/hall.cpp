#include "hallcl/hall.hpp"

#include "cache.hpp"
#include "hallcl/bases.hpp"
#include "hallcl/errors.hpp"

namespace hallcl {

namespace {

void require_basis(const HallElement& x, Basis b, const char* op) {
  if (x.basis() != b)
    throw BasisMismatchError(std::string(op) + ": expected basis " + basis_name(b) + ", got " +
                             basis_name(x.basis()));
}

} // namespace

QRat aut_order(const Partition& lambda) {
  QRat a = QRat::q_pow(lambda.weight() + 2 * static_cast<int>(lambda.n_stat()));
  for (int i = 1; i <= lambda.part(1); ++i)
    a *= poch_self(QRat::q_pow(-1), lambda.mult(i));
  return a;
}

QPoly pieri_coeff(const Partition& lambda, const Partition& mu, int p) {
  if (p < 0) return QPoly{};
  if (lambda.weight() - mu.weight() != p || !is_vertical_strip(lambda, mu)) return QPoly{};
  const Partition lc = lambda.conjugate();
  const Partition mc = mu.conjugate();
  const int shift = static_cast<int>(lambda.n_stat() - mu.n_stat()) - p * (p - 1) / 2;
  QPoly g = QPoly::monomial(shift);
  for (int i = 1; i <= lambda.part(1); ++i)
    g *= qbinomial(lc.part(i) - lc.part(i + 1), lc.part(i) - mc.part(i)).subst_q_inverse();
  return g;
}

HallElement product(const HallElement& x, const HallElement& y) {
  require_basis(x, Basis::I, "product");
  require_basis(y, Basis::I, "product");
  HallElement r(Basis::I);
  for (const auto& [mu, cm] : x.terms())
    for (const auto& [nu, cn] : y.terms()) {
      const QRat c = cm * cn;
      for (const auto& [lam, g] : detail::pair_product(mu, nu)) r.add_term(lam, c * g);
    }
  return r;
}

QPoly hall_polynomial(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return QPoly{};
  const detail::Terms& pp = detail::pair_product(mu, nu);
  auto it = pp.find(lambda);
  return it == pp.end() ? QPoly{} : it->second.as_polynomial();
}

TensorElement coproduct(const HallElement& x) {
  require_basis(x, Basis::I, "coproduct");
  TensorElement t(Basis::I, Basis::I);
  for (const auto& [lam, c] : x.terms())
    for (const auto& [key, v] : detail::coproduct_row(lam))
      t.add_term(key.first, key.second, c * v);
  return t;
}

QRat counit(const HallElement& x) {
  return convert(x, Basis::I).coeff(Partition{});
}

HallElement antipode(const HallElement& x) {
  require_basis(x, Basis::I, "antipode");
  HallElement r(Basis::I);
  for (const auto& [lam, c] : x.terms())
    for (const auto& [kappa, a] : detail::i_row(lam))
      for (const auto& [mu, s] : detail::antipode_x_row(kappa)) r.add_term(mu, c * a * s);
  return r;
}

QRat pairing(const HallElement& x, const HallElement& y) {
  const HallElement xi = convert(x, Basis::I);
  const HallElement yi = convert(y, Basis::I);
  QRat s(0);
  const auto& smaller = xi.terms().size() <= yi.terms().size() ? xi : yi;
  const auto& larger = xi.terms().size() <= yi.terms().size() ? yi : xi;
  for (const auto& [lam, c] : smaller.terms()) {
    const QRat d = larger.coeff(lam);
    if (!d.is_zero()) s += c * d / aut_order(lam);
  }
  return s;
}

TensorElement tensor_product(const TensorElement& s, const TensorElement& t,
                             int left_degree_bound, int right_degree_bound) {
  if (s.left_basis() != Basis::I || s.right_basis() != Basis::I || t.left_basis() != Basis::I ||
      t.right_basis() != Basis::I)
    throw BasisMismatchError("tensor_product: expects I (x) I operands");
  TensorElement r(Basis::I, Basis::I);
  for (const auto& [ka, ca] : s.terms())
    for (const auto& [kb, cb] : t.terms()) {
      if (left_degree_bound >= 0 &&
          ka.first.weight() + kb.first.weight() > left_degree_bound)
        continue;
      if (right_degree_bound >= 0 &&
          ka.second.weight() + kb.second.weight() > right_degree_bound)
        continue;
      const QRat c = ca * cb;
      for (const auto& [l, gl] : detail::pair_product(ka.first, kb.first))
        for (const auto& [m, gm] : detail::pair_product(ka.second, kb.second))
          r.add_term(l, m, c * gl * gm);
    }
  return r;
}

} // namespace hallcl
