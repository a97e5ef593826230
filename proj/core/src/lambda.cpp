#include "hallcl/lambda.hpp"

#include <functional>
#include <stdexcept>

#include "hallcl/bases.hpp"

namespace hallcl {

LambdaElement LambdaElement::single(const Partition& lambda, QRat coeff) {
  LambdaElement x;
  x.add_term(lambda, coeff);
  return x;
}

QRat LambdaElement::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QRat(0) : it->second;
}

void LambdaElement::add_term(const Partition& lambda, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LambdaElement LambdaElement::operator-() const {
  LambdaElement r;
  for (const auto& [l, c] : terms_) r.terms_.emplace(l, -c);
  return r;
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

LambdaElement& LambdaElement::operator-=(const LambdaElement& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

LambdaElement& LambdaElement::operator*=(const QRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, c] : terms_) c *= s;
  return *this;
}

LambdaElement lambda_product(const LambdaElement& a, const LambdaElement& b) {
  LambdaElement r;
  for (const auto& [mu, cm] : a.terms())
    for (const auto& [nu, cn] : b.terms()) r.add_term(mu.merged(nu), cm * cn);
  return r;
}

LambdaElement psi(const HallElement& x) {
  const HallElement xe = convert(x, Basis::e);
  LambdaElement r;
  for (const auto& [l, c] : xe.terms()) r.add_term(l, c);
  return r;
}

QRat lambda_pairing(const LambdaElement& a, const LambdaElement& b) {
  // The Hall-Littlewood inner product at t = q^{-1}: diagonal on the
  // P_lambda(x;t) basis with <P,P> = prod_i (t;t)_{m_i(lambda)}^{-1}.
  // Coordinates move from e to P by the same exact linear algebra as in the
  // Hall algebra (psi is the identity on coordinates).
  auto to_P = [](const LambdaElement& x) {
    HallElement h(Basis::e);
    for (const auto& [l, c] : x.terms()) h.add_term(l, c);
    return convert(h, Basis::P);
  };
  const HallElement pa = to_P(a);
  const HallElement pb = to_P(b);
  QRat s(0);
  for (const auto& [lam, ca] : pa.terms()) {
    const QRat cb = pb.coeff(lam);
    if (cb.is_zero()) continue;
    QRat w(1);
    for (int i = 1; i <= lam.part(1); ++i) w *= poch_self(QRat::q_pow(-1), lam.mult(i));
    s += ca * cb / w;
  }
  return s;
}

QRat MultiPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? QRat(0) : it->second;
}

void MultiPoly::add_term(const std::vector<int>& exps, const QRat& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const QRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& sigma) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> pe(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) pe[static_cast<std::size_t>(sigma[i])] = e[i];
    r.add_term(pe, c);
  }
  return r;
}

MultiPoly MultiPoly::restricted() const {
  MultiPoly r(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e.back() != 0) continue;
    r.add_term(std::vector<int>(e.begin(), e.end() - 1), c);
  }
  return r;
}

MultiPoly elementary_poly(int r, int N) {
  if (N < 1) throw std::invalid_argument("elementary_poly: need at least one variable");
  MultiPoly out(N);
  if (r < 0 || r > N) return out;
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == r) {
      std::vector<int> e(static_cast<std::size_t>(N), 0);
      for (int idx : pick) e[static_cast<std::size_t>(idx)] = 1;
      out.add_term(e, QRat(1));
      return;
    }
    for (int i = start; i < N; ++i) {
      pick[static_cast<std::size_t>(chosen)] = i;
      rec(i + 1, chosen + 1);
    }
  };
  rec(0, 0);
  return out;
}

MultiPoly expand_vars(const LambdaElement& a, int N) {
  if (N < 1) throw std::invalid_argument("expand_vars: need at least one variable");
  MultiPoly acc(N);
  for (const auto& [lam, c] : a.terms()) {
    MultiPoly term(N);
    term.add_term(std::vector<int>(static_cast<std::size_t>(N), 0), QRat(1));
    for (int part : lam.parts()) {
      term = term * elementary_poly(part, N);
      if (term.is_zero()) break;
    }
    term *= c;
    acc += term;
  }
  return acc;
}

} // namespace hallcl
