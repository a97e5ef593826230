#include "hallcl/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hallcl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::row(int n) {
  if (n < 0) throw std::invalid_argument("row: negative size");
  return n == 0 ? Partition{} : Partition{{n}};
}

Partition Partition::column(int n) {
  if (n < 0) throw std::invalid_argument("column: negative size");
  return Partition{std::vector<int>(static_cast<std::size_t>(n), 1)};
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("part index is 1-based");
  return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::mult(int j) const {
  if (j <= 0) return 0;
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int i = 0; i < p; ++i) ++c[static_cast<std::size_t>(i)];
  return Partition{std::move(c)};
}

long Partition::n_stat() const {
  long s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

long Partition::sigma(int i) const {
  if (i < 1) throw std::invalid_argument("sigma needs i >= 1");
  long s = 0;
  for (int p : parts_) s += std::min(p, i);
  return s;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (part(i) < mu.part(i)) return false;
  return true;
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> v = parts_;
  v.insert(v.end(), other.parts_.begin(), other.parts_.end());
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition{std::move(v)};
}

Partition Partition::without_part(int n) const {
  std::vector<int> v = parts_;
  auto it = std::find(v.begin(), v.end(), n);
  if (it == v.end()) throw std::invalid_argument("without_part: part not present");
  v.erase(it);
  return Partition{std::move(v)};
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  int wa = weight(), wb = o.weight();
  if (wa != wb) return wa <=> wb;
  // Reverse-lexicographic within a weight: (3) before (2,1) before (1,1,1).
  return o.parts_ <=> parts_;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool succeq(const Partition& alpha, const Partition& beta) {
  if (alpha.weight() != beta.weight()) return false;
  int imax = std::max(alpha.part(1), beta.part(1));
  for (int i = 1; i <= imax; ++i)
    if (alpha.sigma(i) > beta.sigma(i)) return false;
  return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return false;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) - mu.part(i) > 1) return false;
  return true;
}

} // namespace hallcl
