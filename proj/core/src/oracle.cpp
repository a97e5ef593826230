#include "hallcl/oracle.hpp"

#include <algorithm>
#include <functional>

#include "hallcl/errors.hpp"

namespace hallcl {

namespace {

using Vec = std::vector<std::uint8_t>;
using Mat = std::vector<Vec>;

int mod_inv(int a, int p) {
  // Fermat; p is a small prime and a != 0 mod p.
  int r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// In-place row reduction; returns the rank.
int rref(Mat& m, int p) {
  const int nr = static_cast<int>(m.size());
  if (nr == 0) return 0;
  const int nc = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int piv = -1;
    for (int r = rank; r < nr; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(rank)]);
    Vec& prow = m[static_cast<std::size_t>(rank)];
    const int inv = mod_inv(prow[static_cast<std::size_t>(col)], p);
    for (auto& v : prow) v = static_cast<std::uint8_t>(v * inv % p);
    for (int r = 0; r < nr; ++r) {
      if (r == rank) continue;
      Vec& row = m[static_cast<std::size_t>(r)];
      const int f = row[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = 0; c < nc; ++c)
        row[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(
            (row[static_cast<std::size_t>(c)] + (p - f) * prow[static_cast<std::size_t>(c)]) % p);
    }
    ++rank;
  }
  return rank;
}

int mat_rank(Mat m, int p) { return rref(m, p); }

/// A^k over F_p, n x n, flattened input.
Mat mat_power(const std::vector<std::uint8_t>& a, int n, int k, int p) {
  Mat id(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  Mat base(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          a[static_cast<std::size_t>(i * n + j)];
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat r(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const int xv = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        if (xv == 0) continue;
        for (int j = 0; j < n; ++j)
          r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              static_cast<std::uint8_t>(
                  (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                   xv * y[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]) %
                  p);
      }
    return r;
  };
  Mat r = id;
  for (int i = 0; i < k; ++i) r = mul(r, base);
  return r;
}

Vec apply_action(const FqModule& m, const Vec& v) {
  Vec w(static_cast<std::size_t>(m.dim), 0);
  for (int i = 0; i < m.dim; ++i) {
    int s = 0;
    for (int j = 0; j < m.dim; ++j)
      s += m.action[static_cast<std::size_t>(i * m.dim + j)] * v[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s % m.q0);
  }
  return w;
}

/// Reduces v against echelon rows; true iff v lies in the row space.
bool in_row_space(const Subspace& s, Vec v, int p) {
  for (const Vec& row : s.rows) {
    int pivot = -1;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) {
        pivot = static_cast<int>(c);
        break;
      }
    const int f = v[static_cast<std::size_t>(pivot)];
    if (f == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      v[c] = static_cast<std::uint8_t>((v[c] + (p - f) * row[c]) % p);
  }
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

bool is_invariant(const FqModule& m, const Subspace& s) {
  for (const Vec& row : s.rows)
    if (!in_row_space(s, apply_action(m, row), m.q0)) return false;
  return true;
}

/// Partition with conjugate column sums sigma_i = ker dims of powers.
Partition type_from_kernels(const std::function<int(int)>& kernel_dim, int total) {
  std::vector<int> conj;
  int prev = 0;
  for (int i = 1; prev < total; ++i) {
    const int cur = kernel_dim(i);
    conj.push_back(cur - prev);
    prev = cur;
    if (i > total) throw Error("type_from_kernels: action is not nilpotent");
  }
  return Partition{std::move(conj)}.conjugate();
}

void check_enum_bounds(int dim, int q0) {
  if (q0 != 2 && q0 != 3)
    throw ResourceBoundError("subspace enumeration supports q0 in {2,3}");
  if (dim > 6 || (q0 == 3 && dim > 5))
    throw ResourceBoundError("subspace enumeration bound exceeded (dim " + std::to_string(dim) +
                             " at q0 " + std::to_string(q0) + ")");
}

} // namespace

FqModule build_module(const Partition& lambda, int q0) {
  if (q0 != 2 && q0 != 3 && q0 != 5 && q0 != 7)
    throw ResourceBoundError("build_module: q0 must be a small prime");
  const int n = lambda.weight();
  if (n > 6) throw ResourceBoundError("build_module: |lambda| <= 6 required");
  FqModule m;
  m.q0 = q0;
  m.dim = n;
  m.action.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  int off = 0;
  for (int part : lambda.parts()) {
    for (int i = 0; i + 1 < part; ++i)
      m.action[static_cast<std::size_t>((off + i) * n + off + i + 1)] = 1;
    off += part;
  }
  return m;
}

std::vector<Subspace> invariant_subspaces(const FqModule& m) {
  check_enum_bounds(m.dim, m.q0);
  std::vector<Subspace> out;
  const int n = m.dim;
  const int p = m.q0;
  for (int r = 0; r <= n; ++r) {
    // Pivot columns c_1 < ... < c_r; free entries sit right of a pivot in
    // non-pivot columns. This walks each echelon form exactly once.
    std::vector<int> cols(static_cast<std::size_t>(r));
    std::function<void(int, int)> choose = [&](int start, int k) {
      if (k == r) {
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < r; ++i)
          for (int c = cols[static_cast<std::size_t>(i)] + 1; c < n; ++c)
            if (std::find(cols.begin(), cols.end(), c) == cols.end()) free_pos.emplace_back(i, c);
        std::vector<int> fill(free_pos.size(), 0);
        while (true) {
          Subspace s;
          s.n = n;
          s.rows.assign(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(n), 0));
          for (int i = 0; i < r; ++i)
            s.rows[static_cast<std::size_t>(i)]
                  [static_cast<std::size_t>(cols[static_cast<std::size_t>(i)])] = 1;
          for (std::size_t t = 0; t < free_pos.size(); ++t)
            s.rows[static_cast<std::size_t>(free_pos[t].first)]
                  [static_cast<std::size_t>(free_pos[t].second)] =
                static_cast<std::uint8_t>(fill[t]);
          if (is_invariant(m, s)) out.push_back(std::move(s));
          std::size_t idx = 0;
          for (; idx < fill.size(); ++idx) {
            if (++fill[idx] < p) break;
            fill[idx] = 0;
          }
          if (idx == fill.size()) break;
        }
        return;
      }
      for (int c = start; c < n; ++c) {
        cols[static_cast<std::size_t>(k)] = c;
        choose(c + 1, k + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

Partition module_type(const FqModule& m) {
  return type_from_kernels(
      [&](int i) { return m.dim - mat_rank(mat_power(m.action, m.dim, i, m.q0), m.q0); }, m.dim);
}

Partition submodule_type(const FqModule& m, const Subspace& s) {
  if (!is_invariant(m, s)) throw Error("submodule_type: subspace is not invariant");
  const int r = s.dim();
  if (r == 0) return Partition{};
  // Restrict the action to the subspace in echelon coordinates: the
  // coefficient of basis row j in any member is its value at pivot j.
  std::vector<int> pivots;
  for (const Vec& row : s.rows) {
    int pv = 0;
    while (row[static_cast<std::size_t>(pv)] == 0) ++pv;
    pivots.push_back(pv);
  }
  std::vector<std::uint8_t> restricted(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    const Vec w = apply_action(m, s.rows[static_cast<std::size_t>(k)]);
    for (int j = 0; j < r; ++j)
      restricted[static_cast<std::size_t>(j * r + k)] =
          w[static_cast<std::size_t>(pivots[static_cast<std::size_t>(j)])];
  }
  FqModule sub{m.q0, r, std::move(restricted)};
  return module_type(sub);
}

Partition quotient_type(const FqModule& m, const Subspace& s) {
  if (!is_invariant(m, s)) throw Error("quotient_type: subspace is not invariant");
  const int n = m.dim;
  const int r = s.dim();
  if (n == r) return Partition{};
  // dim ker(xbar^i) = n - rank[a^i | basis of s], with the extra columns
  // killing everything that lands inside s.
  auto kernel_dim = [&](int i) {
    const Mat ai = mat_power(m.action, n, i, m.q0);
    Mat ext(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n + r), 0));
    for (int row = 0; row < n; ++row) {
      for (int c = 0; c < n; ++c)
        ext[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
            ai[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      for (int k = 0; k < r; ++k)
        ext[static_cast<std::size_t>(row)][static_cast<std::size_t>(n + k)] =
            s.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(row)];
    }
    return n - mat_rank(std::move(ext), m.q0);
  };
  return type_from_kernels(kernel_dim, n - r);
}

std::map<std::pair<Partition, Partition>, long> count_g_table(const Partition& lambda, int q0) {
  const FqModule m = build_module(lambda, q0);
  check_enum_bounds(m.dim, q0);
  std::map<std::pair<Partition, Partition>, long> tally;
  for (const Subspace& s : invariant_subspaces(m))
    ++tally[{quotient_type(m, s), submodule_type(m, s)}];
  return tally;
}

long count_g(const Partition& lambda, const Partition& mu, const Partition& nu, int q0) {
  const auto tally = count_g_table(lambda, q0);
  auto it = tally.find({mu, nu});
  return it == tally.end() ? 0 : it->second;
}

long count_aut(const Partition& lambda, int q0) {
  if (q0 != 2 && q0 != 3)
    throw ResourceBoundError("count_aut: q0 must be 2 or 3");
  long cdim = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.length(); ++j) cdim += std::min(lambda.part(i), lambda.part(j));
  if ((q0 == 2 && cdim > 16) || (q0 == 3 && cdim > 10))
    throw ResourceBoundError("count_aut: commutant dimension bound exceeded");

  const FqModule m = build_module(lambda, q0);
  const int n = m.dim;
  if (n == 0) return 1;
  const int p = q0;
  // Solve X J = J X: one linear equation per matrix entry of the difference.
  const int nn = n * n;
  Mat sys;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec eq(static_cast<std::size_t>(nn), 0);
      for (int k = 0; k < n; ++k) {
        eq[static_cast<std::size_t>(i * n + k)] = static_cast<std::uint8_t>(
            (eq[static_cast<std::size_t>(i * n + k)] +
             m.action[static_cast<std::size_t>(k * n + j)]) %
            p);
        eq[static_cast<std::size_t>(k * n + j)] = static_cast<std::uint8_t>(
            (eq[static_cast<std::size_t>(k * n + j)] + p -
             m.action[static_cast<std::size_t>(i * n + k)]) %
            p);
      }
      sys.push_back(std::move(eq));
    }
  // Nullspace basis of the system.
  const int rank = rref(sys, p);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(static_cast<std::size_t>(nn), false);
  {
    int r = 0;
    for (int c = 0; c < nn && r < rank; ++c)
      if (sys[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pivot_col.push_back(c);
        is_pivot[static_cast<std::size_t>(c)] = true;
        ++r;
      }
  }
  std::vector<Vec> basis;
  for (int c = 0; c < nn; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    Vec v(static_cast<std::size_t>(nn), 0);
    v[static_cast<std::size_t>(c)] = 1;
    for (int r = 0; r < rank; ++r) {
      const int coef = sys[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (coef != 0)
        v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
            static_cast<std::uint8_t>((p - coef) % p);
    }
    basis.push_back(std::move(v));
  }
  if (static_cast<long>(basis.size()) != cdim)
    throw Error("count_aut: commutant dimension mismatch");

  // Enumerate the commutant and count the invertible members.
  long count = 0;
  std::vector<int> sel(basis.size(), 0);
  while (true) {
    Mat x(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sel[b] == 0) continue;
      for (int t = 0; t < nn; ++t)
        x[static_cast<std::size_t>(t / n)][static_cast<std::size_t>(t % n)] =
            static_cast<std::uint8_t>((x[static_cast<std::size_t>(t / n)]
                                        [static_cast<std::size_t>(t % n)] +
                                       sel[b] * basis[b][static_cast<std::size_t>(t)]) %
                                      p);
    }
    if (mat_rank(x, p) == n) ++count;
    std::size_t idx = 0;
    for (; idx < sel.size(); ++idx) {
      if (++sel[idx] < p) break;
      sel[idx] = 0;
    }
    if (idx == sel.size()) break;
  }
  return count;
}

} // namespace hallcl
