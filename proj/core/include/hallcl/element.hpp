#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hallcl/partition.hpp"
#include "hallcl/qrat.hpp"

namespace hallcl {

/// The six distinguished bases of H_cl handled by this library.
enum class Basis { I, X, e, P, Q, p };

const char* basis_name(Basis b);
std::optional<Basis> basis_from_name(const std::string& name);

/// A finitely supported QRat-linear combination of basis vectors indexed by
/// partitions, tagged with the basis it is written in. Degree of a term is
/// the weight of its partition (the K_0 grading).
class HallElement {
public:
  explicit HallElement(Basis b = Basis::I) : basis_(b) {}

  static HallElement unit(Basis b = Basis::I) { return single(b, Partition{}, QRat(1)); }
  static HallElement single(Basis b, const Partition& lambda, QRat coeff = QRat(1));

  Basis basis() const { return basis_; }
  const std::map<Partition, QRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRat coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const QRat& c);
  void set_coeff(const Partition& lambda, const QRat& c);

  /// Largest |lambda| in the support; -1 for the zero element.
  int max_degree() const;
  /// Degree if all terms share one (the zero element counts as homogeneous).
  std::optional<int> homogeneous_degree() const;
  HallElement component(int degree) const;

  /// Same terms under a different basis tag (a relabeling, not a conversion).
  HallElement retagged(Basis b) const;

  HallElement operator-() const;
  HallElement& operator+=(const HallElement& o);
  HallElement& operator-=(const HallElement& o);
  HallElement& operator*=(const QRat& s);
  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
  friend HallElement operator*(HallElement a, const QRat& s) { return a *= s; }
  friend HallElement operator*(const QRat& s, HallElement a) { return a *= s; }
  bool operator==(const HallElement& o) const;

private:
  Basis basis_;
  std::map<Partition, QRat> terms_;
};

/// Element of H_cl (x) H_cl: finitely supported map on pairs of partitions,
/// with a basis tag per tensor leg.
class TensorElement {
public:
  using Key = std::pair<Partition, Partition>;

  explicit TensorElement(Basis left = Basis::I, Basis right = Basis::I)
      : left_(left), right_(right) {}

  static TensorElement single(Basis l, Basis r, const Partition& a, const Partition& b,
                              QRat coeff = QRat(1));

  Basis left_basis() const { return left_; }
  Basis right_basis() const { return right_; }
  const std::map<Key, QRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRat coeff(const Partition& a, const Partition& b) const;
  void add_term(const Partition& a, const Partition& b, const QRat& c);

  /// Sum of the terms of bidegree (d1, d2).
  TensorElement bicomponent(int d1, int d2) const;
  /// Swap of the two tensor legs.
  TensorElement swapped() const;

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const QRat& s);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const QRat& s) { return a *= s; }
  bool operator==(const TensorElement& o) const;

private:
  Basis left_, right_;
  std::map<Key, QRat> terms_;
};

} // namespace hallcl
