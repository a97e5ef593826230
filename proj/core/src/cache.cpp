#include "cache.hpp"

#include <functional>
#include <mutex>
#include <vector>

#include "hallcl/hall.hpp"

namespace hallcl::detail {

namespace {

std::recursive_mutex& cache_mutex() {
  static std::recursive_mutex m;
  return m;
}

/// Partitions lambda containing mu with lambda - mu a vertical strip of size
/// p, i.e. the support of multiplication by [I_{(1^p)}].
std::vector<Partition> strip_extensions(const Partition& mu, int p) {
  std::vector<Partition> out;
  const int rows = mu.length() + p;
  std::vector<int> cur(static_cast<std::size_t>(rows));
  std::function<void(int, int, int)> rec = [&](int i, int placed, int prev) {
    if (p - placed > rows - i + 1) return; // not enough rows left
    if (i > rows) {
      if (placed == p) {
        std::vector<int> parts(cur.begin(), cur.begin() + rows);
        out.emplace_back(std::move(parts));
      }
      return;
    }
    for (int d = 0; d <= 1; ++d) {
      const int v = mu.part(i) + d;
      if (v > prev) continue;
      if (d == 1 && placed == p) continue;
      cur[static_cast<std::size_t>(i - 1)] = v;
      rec(i + 1, placed + d, v);
    }
  };
  rec(1, 0, 1 << 30);
  return out;
}

} // namespace

void add_to(Terms& acc, const Partition& key, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Terms pieri_mult(const Terms& x, int r) {
  if (r == 0) return x;
  Terms acc;
  for (const auto& [mu, c] : x)
    for (const Partition& lam : strip_extensions(mu, r))
      add_to(acc, lam, c * QRat(pieri_coeff(lam, mu, r)));
  return acc;
}

const Terms& x_row(const Partition& kappa) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  static std::map<Partition, Terms> memo;
  auto it = memo.find(kappa);
  if (it != memo.end()) return it->second;
  Terms t{{Partition{}, QRat(1)}};
  const Partition conj = kappa.conjugate();
  for (int k = 1; k <= kappa.part(1); ++k) t = pieri_mult(t, conj.part(k));
  return memo.emplace(kappa, std::move(t)).first->second;
}

const Terms& i_row(const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  static std::map<Partition, Terms> memo;
  auto it = memo.find(lambda);
  if (it != memo.end()) return it->second;
  // [I_lambda] = X_lambda - sum_{mu strictly below lambda} a_{lambda mu} [I_mu].
  Terms t{{lambda, QRat(1)}};
  for (const auto& [mu, a] : x_row(lambda)) {
    if (mu == lambda) continue;
    for (const auto& [kappa, c] : i_row(mu)) add_to(t, kappa, -(a * c));
  }
  return memo.emplace(lambda, std::move(t)).first->second;
}

const Terms& pair_product(const Partition& mu, const Partition& nu) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  static std::map<std::pair<Partition, Partition>, Terms> memo;
  const std::pair<Partition, Partition> key =
      (nu < mu) ? std::make_pair(nu, mu) : std::make_pair(mu, nu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // Factor the second argument through the X basis and run Pieri cascades.
  Terms acc;
  for (const auto& [kappa, c] : i_row(key.second)) {
    Terms t{{key.first, c}};
    const Partition conj = kappa.conjugate();
    for (int k = 1; k <= kappa.part(1); ++k) t = pieri_mult(t, conj.part(k));
    for (const auto& [lam, v] : t) add_to(acc, lam, v);
  }
  return memo.emplace(key, std::move(acc)).first->second;
}

Terms mult_terms(const Terms& a, const Terms& b) {
  Terms acc;
  for (const auto& [mu, cm] : a)
    for (const auto& [nu, cn] : b) {
      const QRat c = cm * cn;
      for (const auto& [lam, g] : pair_product(mu, nu)) add_to(acc, lam, c * g);
    }
  return acc;
}

const TensorTerms& coproduct_row(const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  static std::map<Partition, TensorTerms> memo;
  auto it = memo.find(lambda);
  if (it != memo.end()) return it->second;
  TensorTerms t;
  const QRat alam_inv = aut_order(lambda).inverse();
  const int n = lambda.weight();
  for (int a = 0; a <= n; ++a)
    for (const Partition& mu : partitions_of(a))
      for (const Partition& nu : partitions_of(n - a)) {
        const Terms& pp = pair_product(mu, nu);
        auto pit = pp.find(lambda);
        if (pit == pp.end()) continue;
        const QRat c = alam_inv * aut_order(mu) * aut_order(nu) * pit->second;
        if (!c.is_zero()) t.emplace(std::make_pair(mu, nu), c);
      }
  return memo.emplace(lambda, std::move(t)).first->second;
}

namespace {

/// S([I_{(1^n)}]) = (-1)^n q^{-binom(n,2)} sum_{|lambda|=n} [I_lambda].
Terms antipode_column(int n) {
  Terms t;
  const QRat c = QRat::q_pow(-n * (n - 1) / 2) * QRat((n % 2 == 0) ? 1 : -1);
  for (const Partition& lam : partitions_of(n)) t.emplace(lam, c);
  return t;
}

} // namespace

const Terms& antipode_x_row(const Partition& kappa) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  static std::map<Partition, Terms> memo;
  auto it = memo.find(kappa);
  if (it != memo.end()) return it->second;
  Terms t{{Partition{}, QRat(1)}};
  const Partition conj = kappa.conjugate();
  for (int k = 1; k <= kappa.part(1); ++k) t = mult_terms(t, antipode_column(conj.part(k)));
  return memo.emplace(kappa, std::move(t)).first->second;
}

Terms free_mult(const Terms& a, const Terms& b) {
  Terms acc;
  for (const auto& [mu, cm] : a)
    for (const auto& [nu, cn] : b) add_to(acc, mu.merged(nu), cm * cn);
  return acc;
}

const Terms& e_in_p(int n) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  static std::map<int, Terms> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Terms t;
  if (n == 0) {
    t.emplace(Partition{}, QRat(1));
  } else {
    // n e_n = (-1)^{n-1} sum_{r=0}^{n-1} (-1)^r p_{n-r} * e_r.
    for (int r = 0; r < n; ++r) {
      const QRat sign(((n - 1 - r) % 2 == 0) ? 1 : -1);
      for (const auto& [mu, c] : e_in_p(r))
        add_to(t, mu.merged(Partition::row(n - r)), sign * c);
    }
    const QRat inv_n = QRat(Rational(1, n));
    for (auto& [mu, c] : t) c *= inv_n;
  }
  return memo.emplace(n, std::move(t)).first->second;
}

const Terms& p_in_e(int n) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  static std::map<int, Terms> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Terms t;
  if (n == 0) {
    t.emplace(Partition{}, QRat(1));
  } else {
    // p_n = (-1)^{n-1} n e_n - sum_{r=1}^{n-1} (-1)^r p_{n-r} * e_r.
    t.emplace(Partition::row(n), QRat((n % 2 == 1) ? n : -n));
    for (int r = 1; r < n; ++r) {
      const QRat sign((r % 2 == 0) ? -1 : 1);
      for (const auto& [mu, c] : p_in_e(n - r))
        add_to(t, mu.merged(Partition::row(r)), sign * c);
    }
  }
  return memo.emplace(n, std::move(t)).first->second;
}

} // namespace hallcl::detail
