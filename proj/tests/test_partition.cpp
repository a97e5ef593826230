#include <doctest.h>

#include <set>
#include <stdexcept>

#include "hallcl/partition.hpp"

using namespace hallcl;

namespace {

// Independent count of partitions via Euler's pentagonal-number recurrence.
long partition_count(int n) {
  static std::vector<long> p{1};
  for (int m = static_cast<int>(p.size()); m <= n; ++m) {
    long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p.push_back(s);
  }
  return p[static_cast<std::size_t>(n)];
}

} // namespace

TEST_SUITE_BEGIN("partition");

TEST_CASE("enumeration order and counts") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(3) ==
        std::vector<Partition>{Partition{{3}}, Partition{{2, 1}}, Partition{{1, 1, 1}}});
  CHECK(partitions_of(6).size() == 11);
  CHECK(partition_count(6) == 11);
  for (int n = 0; n <= 20; ++n)
    CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n));
  // each partition appears exactly once
  for (int n = 0; n <= 10; ++n) {
    const auto ps = partitions_of(n);
    CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
  }
}

TEST_CASE("conjugate") {
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition{{2, 1}}.conjugate() == Partition{{2, 1}});
  CHECK(Partition{{3, 1}}.conjugate() == Partition{{2, 1, 1}});
  for (int n = 0; n <= 12; ++n)
    for (const Partition& lam : partitions_of(n)) CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("n_stat") {
  CHECK(Partition{{5}}.n_stat() == 0);
  CHECK(Partition{{1, 1, 1}}.n_stat() == 3);
  CHECK(Partition{{2, 1}}.n_stat() == 1);
  // n(lambda) = sum_k C(lambda'_k, 2)
  for (int n = 0; n <= 12; ++n)
    for (const Partition& lam : partitions_of(n)) {
      long s = 0;
      const Partition c = lam.conjugate();
      for (int part : c.parts()) s += static_cast<long>(part) * (part - 1) / 2;
      CHECK(lam.n_stat() == s);
    }
}

TEST_CASE("sigma") {
  CHECK(Partition{{2, 1}}.sigma(1) == 2);
  CHECK(Partition{{2, 1}}.sigma(2) == 3);
  CHECK(Partition{{1, 1}}.sigma(5) == 2);
  // sigma_i = conjugate partial sums
  for (int n = 0; n <= 10; ++n)
    for (const Partition& lam : partitions_of(n)) {
      const Partition c = lam.conjugate();
      for (int i = 1; i <= n + 1; ++i) {
        long ps = 0;
        for (int k = 1; k <= i; ++k) ps += c.part(k);
        CHECK(lam.sigma(i) == ps);
      }
    }
}

TEST_CASE("succeq") {
  CHECK(succeq(Partition{{2, 1}}, Partition{{1, 1, 1}}));
  CHECK_FALSE(succeq(Partition{{1, 1, 1}}, Partition{{2, 1}}));
  // incomparable pair
  CHECK_FALSE(succeq(Partition{{3, 3}}, Partition{{4, 1, 1}}));
  CHECK_FALSE(succeq(Partition{{4, 1, 1}}, Partition{{3, 3}}));

  // partial order axioms on partitions of fixed n <= 8
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (const Partition& a : ps) {
      CHECK(succeq(a, a));
      for (const Partition& b : ps) {
        if (succeq(a, b) && succeq(b, a)) CHECK(a == b);
        for (const Partition& c : ps)
          if (succeq(a, b) && succeq(b, c)) CHECK(succeq(a, c));
      }
    }
  }
}

TEST_CASE("vertical strips") {
  CHECK(is_vertical_strip(Partition{{2, 1}}, Partition{{1, 1}}));
  CHECK_FALSE(is_vertical_strip(Partition{{3, 1}}, Partition{{1, 1}}));
  CHECK(is_vertical_strip(Partition{{2, 2, 1}}, Partition{{2, 1}}));
  CHECK(is_vertical_strip(Partition{}, Partition{}));
  CHECK_FALSE(is_vertical_strip(Partition{{1}}, Partition{{2}}));
}

TEST_CASE("accessors and validation") {
  const Partition lam{{3, 3, 1}};
  CHECK(lam.weight() == 7);
  CHECK(lam.length() == 3);
  CHECK(lam.part(1) == 3);
  CHECK(lam.part(4) == 0);
  CHECK(lam.mult(3) == 2);
  CHECK(lam.mult(2) == 0);
  CHECK(lam.to_string() == "[3,3,1]");
  CHECK(Partition{}.to_string() == "[]");
  CHECK(Partition{{2, 1, 0, 0}} == Partition{{2, 1}});
  CHECK_THROWS_AS((Partition{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS((Partition{{2, -1}}), std::invalid_argument);
}

TEST_SUITE_END();
