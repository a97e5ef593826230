#include <doctest.h>

#include "hallcl/errors.hpp"
#include "hallcl/hall.hpp"
#include "hallcl/oracle.hpp"
#include "hallcl/qrat.hpp"

using namespace hallcl;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("build_module") {
  const FqModule m = build_module(Partition{{2}}, 2);
  CHECK(m.dim == 2);
  CHECK(m.action == std::vector<std::uint8_t>{0, 1, 0, 0});
  CHECK(build_module(Partition{}, 2).dim == 0);
  const FqModule z = build_module(Partition{{1, 1}}, 3);
  CHECK(z.action == std::vector<std::uint8_t>{0, 0, 0, 0});
  CHECK_THROWS_AS(build_module(Partition{{7}}, 2), ResourceBoundError);
  CHECK_THROWS_AS(build_module(Partition{{2}}, 4), ResourceBoundError);
}

TEST_CASE("invariant subspace counts") {
  CHECK(invariant_subspaces(build_module(Partition{{2}}, 2)).size() == 3);
  CHECK(invariant_subspaces(build_module(Partition{{1, 1}}, 2)).size() == 5);
  CHECK(invariant_subspaces(build_module(Partition{}, 2)).size() == 1);
  // hard bound, not truncation
  CHECK_THROWS_AS(invariant_subspaces(FqModule{3, 6, std::vector<std::uint8_t>(36, 0)}),
                  ResourceBoundError);
}

TEST_CASE("module types") {
  for (int d = 0; d <= 6; ++d)
    for (const Partition& lam : partitions_of(d))
      CHECK(module_type(build_module(lam, 2)) == lam);

  const FqModule m2 = build_module(Partition{{2}}, 2);
  const auto subs = invariant_subspaces(m2);
  for (const Subspace& s : subs) {
    if (s.dim() == 1) {
      // the image of the action is the unique invariant line
      CHECK(submodule_type(m2, s) == Partition{{1}});
      CHECK(quotient_type(m2, s) == Partition{{1}});
    }
  }
  // non-invariant subspace rejected (the action sends e2 to e1)
  const FqModule m3 = build_module(Partition{{2}}, 2);
  Subspace bad;
  bad.n = 2;
  bad.rows = {{0, 1}};
  CHECK_THROWS_AS(submodule_type(m3, bad), Error);
}

TEST_CASE("count_g") {
  CHECK(count_g(Partition{{2}}, Partition{{1}}, Partition{{1}}, 2) == 1);
  CHECK(count_g(Partition{{1, 1}}, Partition{{1}}, Partition{{1}}, 2) == 3);
  CHECK(count_g(Partition{{1, 1}}, Partition{{1}}, Partition{{1}}, 3) == 4);
  const Rational sym =
      eval_at(QRat(hall_polynomial(Partition{{2, 1}}, Partition{{1, 1}}, Partition{{1}})),
              Rational(2));
  CHECK(Rational(count_g(Partition{{2, 1}}, Partition{{1, 1}}, Partition{{1}}, 2)) == sym);
}

TEST_CASE("count_g matches hall polynomials everywhere in range") {
  for (int q0 : {2, 3}) {
    const int dmax = q0 == 2 ? 5 : 4;
    for (int d = 0; d <= dmax; ++d)
      for (const Partition& lam : partitions_of(d)) {
        const auto tally = count_g_table(lam, q0);
        long total = 0;
        for (const auto& [key, cnt] : tally) {
          total += cnt;
          CHECK(Rational(cnt) ==
                eval_at(QRat(hall_polynomial(lam, key.first, key.second)), Rational(q0)));
        }
        // classification is total: every invariant subspace lands in the tally
        CHECK(total == static_cast<long>(invariant_subspaces(build_module(lam, q0)).size()));
      }
  }
}

TEST_CASE("count_aut") {
  CHECK(count_aut(Partition{{1}}, 2) == 1);
  CHECK(count_aut(Partition{{1, 1}}, 2) == 6);
  CHECK(count_aut(Partition{{2, 1}}, 2) == 8);
  for (int d = 0; d <= 4; ++d)
    for (const Partition& lam : partitions_of(d))
      CHECK(Rational(count_aut(lam, 2)) == eval_at(aut_order(lam), Rational(2)));
  // (1^5) has commutant dimension 25 > 16
  CHECK_THROWS_AS(count_aut(Partition{{1, 1, 1, 1, 1}}, 2), ResourceBoundError);
  CHECK(count_aut(Partition{{2}}, 3) == 6);
  CHECK(Rational(count_aut(Partition{{2, 1}}, 3)) ==
        eval_at(aut_order(Partition{{2, 1}}), Rational(3)));
}

TEST_SUITE_END();
