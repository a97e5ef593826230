#include "hallcl/element.hpp"

namespace hallcl {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::I: return "I";
    case Basis::X: return "X";
    case Basis::e: return "e";
    case Basis::P: return "P";
    case Basis::Q: return "Q";
    case Basis::p: return "p";
  }
  return "?";
}

std::optional<Basis> basis_from_name(const std::string& name) {
  if (name == "I") return Basis::I;
  if (name == "X") return Basis::X;
  if (name == "e") return Basis::e;
  if (name == "P") return Basis::P;
  if (name == "Q") return Basis::Q;
  if (name == "p") return Basis::p;
  return std::nullopt;
}

HallElement HallElement::single(Basis b, const Partition& lambda, QRat coeff) {
  HallElement x(b);
  x.add_term(lambda, coeff);
  return x;
}

QRat HallElement::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QRat(0) : it->second;
}

void HallElement::add_term(const Partition& lambda, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HallElement::set_coeff(const Partition& lambda, const QRat& c) {
  if (c.is_zero())
    terms_.erase(lambda);
  else
    terms_[lambda] = c;
}

int HallElement::max_degree() const {
  int d = -1;
  for (const auto& [l, c] : terms_) d = std::max(d, l.weight());
  return d;
}

std::optional<int> HallElement::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.weight();
  for (const auto& [l, c] : terms_)
    if (l.weight() != d) return std::nullopt;
  return d;
}

HallElement HallElement::component(int degree) const {
  HallElement r(basis_);
  for (const auto& [l, c] : terms_)
    if (l.weight() == degree) r.terms_.emplace(l, c);
  return r;
}

HallElement HallElement::retagged(Basis b) const {
  HallElement r(*this);
  r.basis_ = b;
  return r;
}

HallElement HallElement::operator-() const {
  HallElement r(basis_);
  for (const auto& [l, c] : terms_) r.terms_.emplace(l, -c);
  return r;
}

HallElement& HallElement::operator+=(const HallElement& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

HallElement& HallElement::operator-=(const HallElement& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

HallElement& HallElement::operator*=(const QRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, c] : terms_) c *= s;
  return *this;
}

bool HallElement::operator==(const HallElement& o) const {
  return basis_ == o.basis_ && terms_ == o.terms_;
}

TensorElement TensorElement::single(Basis l, Basis r, const Partition& a, const Partition& b,
                                    QRat coeff) {
  TensorElement t(l, r);
  t.add_term(a, b, coeff);
  return t;
}

QRat TensorElement::coeff(const Partition& a, const Partition& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? QRat(0) : it->second;
}

void TensorElement::add_term(const Partition& a, const Partition& b, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::bicomponent(int d1, int d2) const {
  TensorElement r(left_, right_);
  for (const auto& [k, c] : terms_)
    if (k.first.weight() == d1 && k.second.weight() == d2) r.terms_.emplace(k, c);
  return r;
}

TensorElement TensorElement::swapped() const {
  TensorElement r(right_, left_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
  return r;
}

TensorElement TensorElement::operator-() const {
  TensorElement r(left_, right_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const QRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return left_ == o.left_ && right_ == o.right_ && terms_ == o.terms_;
}

} // namespace hallcl
