#include "hallcl/operators.hpp"

#include <stdexcept>

#include "cache.hpp"
#include "hallcl/bases.hpp"
#include "hallcl/errors.hpp"
#include "hallcl/hall.hpp"

namespace hallcl {

namespace {

/// d/dp_n on a p-basis element.
HallElement p_derivative(const HallElement& xp, int n) {
  HallElement r(Basis::p);
  for (const auto& [lam, c] : xp.terms()) {
    const int m = lam.mult(n);
    if (m > 0) r.add_term(lam.without_part(n), c * QRat(m));
  }
  return r;
}

/// Multiplication by the p-monomial p_n on a p-basis element.
HallElement p_multiply(const HallElement& xp, int n) {
  HallElement r(Basis::p);
  const Partition pn = Partition::row(n);
  for (const auto& [lam, c] : xp.terms()) r.add_term(lam.merged(pn), c);
  return r;
}

HallElement apply_b(int k, const HallElement& xp) {
  if (k == 0) return xp;
  if (k < 0) return p_multiply(xp, -k);
  const QRat scale = QRat(k) / (QRat::q_pow(k) - QRat(1));
  return p_derivative(xp, k) * scale;
}

/// Coefficients (p basis) of z^0..z^N of exp(sign * sum_n (q^n-1)/n p_n z^n).
std::vector<HallElement> exp_pseries(int sign, int N) {
  const std::size_t len = static_cast<std::size_t>(N < 0 ? 0 : N) + 1;
  std::vector<HallElement> arg(len, HallElement(Basis::p));
  for (int n = 1; n <= N; ++n)
    arg[static_cast<std::size_t>(n)] = HallElement::single(
        Basis::p, Partition::row(n),
        (QRat::q_pow(n) - QRat(1)) * QRat(Rational(sign, n)));

  std::vector<HallElement> acc(len, HallElement(Basis::p));
  acc[0] = HallElement::unit(Basis::p);
  std::vector<HallElement> power = acc;
  for (int m = 1; m <= N; ++m) {
    std::vector<HallElement> next(len, HallElement(Basis::p));
    for (std::size_t i = 0; i < len; ++i) {
      if (power[i].is_zero()) continue;
      for (std::size_t j = 1; i + j < len; ++j)
        for (const auto& [mu, c] : arg[j].terms())
          for (const auto& [lam, d] : power[i].terms())
            next[i + j].add_term(lam.merged(mu), c * d);
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

/// Mode of R^perp(z) = exp(-sum_n del_{p_n} z^{-n}) lowering degree by k.
HallElement r_perp_mode(int k, const HallElement& xp) {
  if (k == 0) return xp;
  HallElement r(Basis::p);
  for (const Partition& mu : partitions_of(k)) {
    Rational denom(1);
    for (int i = 1; i <= mu.part(1); ++i)
      for (int j = 1; j <= mu.mult(i); ++j) denom *= j;
    HallElement t = xp;
    for (int part : mu.parts()) {
      t = p_derivative(t, part);
      if (t.is_zero()) break;
    }
    const Rational sign = (mu.length() % 2 == 0) ? Rational(1) : Rational(-1);
    r += t * QRat(sign / denom);
  }
  return r;
}

HallElement p_free_mult(const HallElement& a, const HallElement& b) {
  HallElement r(Basis::p);
  for (const auto& [mu, cm] : a.terms())
    for (const auto& [nu, cn] : b.terms()) r.add_term(mu.merged(nu), cm * cn);
  return r;
}

/// B_m in p coordinates. The annihilation half runs at qz, i.e. the mode
/// lowering degree by k carries q^{-k}; this is what makes the straightening
/// kernel against Q(w) come out as (1-z)/(1-q^{-1}z), the raising-operator
/// kernel that rebuilds Q_lambda.
HallElement vertex_B_p(int m, const HallElement& xp) {
  const int d = xp.max_degree();
  if (d < 0) return HallElement(Basis::p);
  if (m + d < 0) return HallElement(Basis::p);
  const std::vector<HallElement> qexp = exp_pseries(+1, m + d);
  HallElement acc(Basis::p);
  for (int k = 0; k <= d; ++k) {
    if (m + k < 0) continue;
    HallElement low = r_perp_mode(k, xp);
    if (low.is_zero()) continue;
    low *= QRat::q_pow(-k);
    acc += p_free_mult(qexp[static_cast<std::size_t>(m + k)], low);
  }
  return acc;
}

} // namespace

GradedOperator mult_p(int n) {
  if (n < 1) throw std::invalid_argument("mult_p: n must be positive");
  return GradedOperator{n, [n](const HallElement& x) {
                          return product(p_element(n), x);
                        }};
}

GradedOperator del_p(int n) {
  if (n < 1) throw std::invalid_argument("del_p: n must be positive");
  return GradedOperator{-n, [n](const HallElement& x) {
                          return convert(p_derivative(convert(x, Basis::p), n), Basis::I);
                        }};
}

GradedOperator boson(int n) {
  if (n == 0) return GradedOperator{0, [](const HallElement& x) { return x; }};
  if (n < 0) return mult_p(-n);
  GradedOperator d = del_p(n);
  const QRat scale = QRat(n) / (QRat::q_pow(n) - QRat(1));
  return GradedOperator{-n, [d, scale](const HallElement& x) { return d(x) * scale; }};
}

bool RatMatrix::is_scalar_identity(const QRat& s) const {
  if (rows != cols) return false;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (entries[r][c] != (r == c ? s : QRat(0))) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& row : entries)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

RatMatrix commutator_matrix(int m, int n, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("commutator_matrix: negative degree bound");
  RatMatrix mat;
  for (int d = 0; d <= max_degree; ++d)
    for (const Partition& lam : partitions_of(d)) mat.cols.push_back(lam);
  // Output degrees d - m - n are distinct per input degree, so the row list
  // stays sorted degree-major without deduplication.
  for (int d = 0; d <= max_degree; ++d) {
    const int out = d - m - n;
    if (out < 0) continue;
    for (const Partition& lam : partitions_of(out)) mat.rows.push_back(lam);
  }
  mat.entries.assign(mat.rows.size(), std::vector<QRat>(mat.cols.size(), QRat(0)));

  std::map<Partition, std::size_t> row_index;
  for (std::size_t r = 0; r < mat.rows.size(); ++r) row_index[mat.rows[r]] = r;

  for (std::size_t c = 0; c < mat.cols.size(); ++c) {
    const HallElement xp = convert(HallElement::single(Basis::I, mat.cols[c]), Basis::p);
    HallElement comm = apply_b(m, apply_b(n, xp));
    comm -= apply_b(n, apply_b(m, xp));
    if (comm.is_zero()) continue;
    const HallElement out = convert(comm, Basis::I);
    for (const auto& [lam, v] : out.terms()) {
      auto it = row_index.find(lam);
      if (it == row_index.end())
        throw Error("commutator_matrix: output outside the truncation window");
      mat.entries[it->second][c] = v;
    }
  }
  return mat;
}

QRat gamma_coeff(const Partition& alpha, const Partition& beta, const Partition& mu,
                 const Partition& nu) {
  const int k = mu.weight() - alpha.weight();
  if (k < 0 || k != nu.weight() - beta.weight()) return QRat(0);
  QRat acc(0);
  const QRat aa = aut_order(alpha), ab = aut_order(beta);
  for (const Partition& lam : partitions_of(k)) {
    const QRat g1 = QRat(hall_polynomial(mu, lam, alpha));
    if (g1.is_zero()) continue;
    const QRat g2 = QRat(hall_polynomial(nu, beta, lam));
    if (g2.is_zero()) continue;
    acc += g1 * g2 * aut_order(lam) * aa * ab;
  }
  return acc / (aut_order(mu) * aut_order(nu));
}

HallElement vertex_D0(const HallElement& x) {
  const HallElement xp = convert(x, Basis::p);
  const int d = xp.max_degree();
  if (d < 0) return HallElement(Basis::I);
  const std::vector<HallElement> rexp = exp_pseries(-1, d);
  HallElement acc(Basis::p);
  for (int k = 0; k <= d; ++k) {
    const HallElement low = r_perp_mode(k, xp);
    if (low.is_zero()) continue;
    acc += p_free_mult(rexp[static_cast<std::size_t>(k)], low);
  }
  return convert(acc, Basis::I);
}

HallElement vertex_B(int m, const HallElement& x) {
  return convert(vertex_B_p(m, convert(x, Basis::p)), Basis::I);
}

HallElement jing_Q(const Partition& lambda) {
  HallElement acc = HallElement::unit(Basis::p);
  for (int i = lambda.length(); i >= 1; --i) acc = vertex_B_p(lambda.part(i), acc);
  return convert(acc, Basis::I);
}

} // namespace hallcl
