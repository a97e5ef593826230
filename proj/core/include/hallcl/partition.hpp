#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hallcl {

/// An integer partition: weakly decreasing positive parts, stored without
/// trailing zeros. The empty partition is allowed and denotes the unit in
/// every indexing role it plays here.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are weakly decreasing and > 0.
  explicit Partition(std::vector<int> parts);

  /// Single row (n); empty for n == 0.
  static Partition row(int n);
  /// Single column (1^n); empty for n == 0.
  static Partition column(int n);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;

  /// 1-based part accessor; 0 beyond the length, matching the convention of
  /// identifying a partition with itself padded by zeros.
  int part(int i) const;

  /// Multiplicity of the part value j.
  int mult(int j) const;

  Partition conjugate() const;

  /// n(lambda) = sum_i (i-1) lambda_i.
  long n_stat() const;

  /// sigma_i = n_1 + 2 n_2 + ... + (i-1) n_{i-1} + i (n_i + n_{i+1} + ...)
  /// where n_j is the multiplicity of j; requires i >= 1.
  long sigma(int i) const;

  /// Containment of Young diagrams: lambda_i >= mu_i for all i.
  bool contains(const Partition& mu) const;

  /// Multiset union of parts, re-sorted.
  Partition merged(const Partition& other) const;

  /// Copy with one part equal to n removed; requires mult(n) > 0.
  Partition without_part(int n) const;

  /// Comparison orders by weight first, then by the reverse-lexicographic
  /// enumeration order used by partitions_of (so map iteration matches it).
  std::strong_ordering operator<=>(const Partition& o) const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  /// Textual form "[2,1]"; "[]" for the empty partition.
  std::string to_string() const;

private:
  std::vector<int> parts_;
};

/// All partitions of n in reverse-lexicographic order, e.g.
/// 3 -> (3), (2,1), (1,1,1). Requires n >= 0.
std::vector<Partition> partitions_of(int n);

/// The partial order alpha >= beta defined by equal weights and
/// sigma_i(alpha) <= sigma_i(beta) for every i; equivalently conjugate
/// dominance.
bool succeq(const Partition& alpha, const Partition& beta);

/// True when lambda contains mu and lambda - mu has at most one box per row.
bool is_vertical_strip(const Partition& lambda, const Partition& mu);

} // namespace hallcl
