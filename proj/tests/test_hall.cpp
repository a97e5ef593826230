#include <doctest.h>

#include <thread>
#include <vector>

#include "hallcl/bases.hpp"
#include "hallcl/errors.hpp"
#include "hallcl/hall.hpp"
#include "hallcl/text.hpp"

using namespace hallcl;

namespace {

HallElement I(std::vector<int> parts, QRat c = QRat(1)) {
  return HallElement::single(Basis::I, Partition{std::move(parts)}, std::move(c));
}

const QRat q = QRat::q();

} // namespace

TEST_SUITE_BEGIN("hall");

TEST_CASE("aut_order") {
  CHECK(aut_order(Partition{}) == QRat(1));
  CHECK(aut_order(Partition{{1}}) == q - QRat(1));
  // |GL(2)| = (q^2-1)(q^2-q)
  CHECK(aut_order(Partition{{1, 1}}) ==
        (QRat::q_pow(2) - QRat(1)) * (QRat::q_pow(2) - q));
  // q^3 (q-1)^2; equals 8 at q=2
  CHECK(aut_order(Partition{{2, 1}}) == QRat::q_pow(3) * (q - QRat(1)).pow(2));
  CHECK(eval_at(aut_order(Partition{{2, 1}}), Rational(2)) == 8);
}

TEST_CASE("pieri_coeff") {
  QPoly grass;
  grass.set_coeff(0, 1);
  grass.set_coeff(1, 1);
  grass.set_coeff(2, 1);
  CHECK(pieri_coeff(Partition{{1, 1, 1}}, Partition{{1, 1}}, 1) == grass);
  CHECK(pieri_coeff(Partition{{2}}, Partition{{1}}, 1) == QPoly(1));
  CHECK(pieri_coeff(Partition{{2, 1}}, Partition{{1, 1}}, 1) == QPoly(1));
  CHECK(eval_at(QRat(pieri_coeff(Partition{{2, 1}}, Partition{{1, 1}}, 1)), Rational(2)) == 1);
  CHECK(eval_at(QRat(pieri_coeff(Partition{{2, 1}}, Partition{{1, 1}}, 1)), Rational(3)) == 1);

  // nonzero exactly on vertical strips of the right size, with nonnegative
  // integer coefficients
  for (int d = 0; d <= 7; ++d)
    for (const Partition& lam : partitions_of(d))
      for (int dm = 0; dm <= d; ++dm)
        for (const Partition& mu : partitions_of(dm)) {
          const QPoly g = pieri_coeff(lam, mu, d - dm);
          const bool expect = is_vertical_strip(lam, mu);
          CHECK(!g.is_zero() == expect);
          if (!g.is_zero()) {
            CHECK(g.min_exp() >= 0);
            CHECK(g.has_integer_coeffs());
            for (const auto& [e, c] : g.terms()) CHECK(c > 0);
          }
        }
}

TEST_CASE("product") {
  CHECK(product(I({1}), I({1})) ==
        I({2}) + I({1, 1}, QRat(1) + q));
  CHECK(product(I({1}), I({1, 1})) ==
        I({2, 1}) + I({1, 1, 1}, QRat(1) + q + q * q));
  const HallElement x = I({3, 1}) + I({2}, q - QRat(1));
  CHECK(product(HallElement::unit(Basis::I), x) == x);
  CHECK(product(x, HallElement::unit(Basis::I)) == x);
  CHECK_THROWS_AS(product(x.retagged(Basis::P), x), BasisMismatchError);
}

TEST_CASE("hall_polynomial") {
  QPoly onepq;
  onepq.set_coeff(0, 1);
  onepq.set_coeff(1, 1);
  CHECK(hall_polynomial(Partition{{1, 1}}, Partition{{1}}, Partition{{1}}) == onepq);
  CHECK(hall_polynomial(Partition{{3}}, Partition{{1}}, Partition{{1}}).is_zero());
  CHECK(hall_polynomial(Partition{{2, 1}}, Partition{{1}}, Partition{{1, 1}}) == QPoly(1));

  // symmetry and integrality, degrees <= 6
  for (int d = 0; d <= 6; ++d)
    for (const Partition& lam : partitions_of(d))
      for (int a = 0; a <= d; ++a)
        for (const Partition& mu : partitions_of(a))
          for (const Partition& nu : partitions_of(d - a)) {
            const QPoly g = hall_polynomial(lam, mu, nu);
            CHECK(g.has_integer_coeffs());
            if (!g.is_zero()) CHECK(g.min_exp() >= 0);
            CHECK(g == hall_polynomial(lam, nu, mu));
          }
}

TEST_CASE("coproduct") {
  TensorElement d1(Basis::I, Basis::I);
  d1.add_term(Partition{{1}}, Partition{}, QRat(1));
  d1.add_term(Partition{}, Partition{{1}}, QRat(1));
  CHECK(coproduct(I({1})) == d1);

  TensorElement d11(Basis::I, Basis::I);
  d11.add_term(Partition{{1, 1}}, Partition{}, QRat(1));
  d11.add_term(Partition{{1}}, Partition{{1}}, QRat::q_pow(-1));
  d11.add_term(Partition{}, Partition{{1, 1}}, QRat(1));
  CHECK(coproduct(I({1, 1})) == d11);

  TensorElement d2(Basis::I, Basis::I);
  d2.add_term(Partition{{2}}, Partition{}, QRat(1));
  d2.add_term(Partition{{1}}, Partition{{1}}, QRat(1) - QRat::q_pow(-1));
  d2.add_term(Partition{}, Partition{{2}}, QRat(1));
  CHECK(coproduct(I({2})) == d2);
}

TEST_CASE("counit") {
  CHECK(counit(HallElement::unit(Basis::I)) == QRat(1));
  CHECK(counit(I({2, 1})) == QRat(0));
  CHECK(counit(HallElement::unit(Basis::I) * QRat(3) + I({1})) == QRat(3));
  CHECK(counit(HallElement::unit(Basis::P)) == QRat(1));
}

TEST_CASE("antipode") {
  CHECK(antipode(I({1})) == I({1}, QRat(-1)));
  CHECK(antipode(I({1, 1})) ==
        (I({2}) + I({1, 1})) * QRat::q_pow(-1));
  CHECK(antipode(HallElement::unit(Basis::I)) == HallElement::unit(Basis::I));
  // S is an algebra antihomomorphism = homomorphism here: S(x*y) = S(x)*S(y)
  for (int a = 1; a <= 3; ++a)
    for (const Partition& mu : partitions_of(a))
      for (const Partition& nu : partitions_of(4 - a)) {
        const HallElement x = HallElement::single(Basis::I, mu);
        const HallElement y = HallElement::single(Basis::I, nu);
        CHECK(antipode(product(x, y)) == product(antipode(x), antipode(y)));
      }
  // S is an involution on a commutative Hopf algebra
  for (int d = 0; d <= 5; ++d)
    for (const Partition& lam : partitions_of(d)) {
      const HallElement x = HallElement::single(Basis::I, lam);
      CHECK(antipode(antipode(x)) == x);
    }
}

TEST_CASE("pairing") {
  CHECK(pairing(I({1}), I({1})) == QRat(1) / (q - QRat(1)));
  CHECK(pairing(I({2}), I({1, 1})) == QRat(0));
  CHECK(pairing(p_element(1), p_element(1)) == QRat(1) / (q - QRat(1)));
}

TEST_CASE("concurrent use of the shared caches") {
  // build-once read-many: hammer the same degrees from several threads and
  // compare against serial results
  const HallElement serial = product(I({2, 1}), I({2, 1}));
  const QRat sp = pairing(p_element(4), p_element(4));
  std::vector<std::thread> pool;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      bool good = true;
      for (int rep = 0; rep < 5; ++rep) {
        good = good && product(I({2, 1}), I({2, 1})) == serial;
        good = good && pairing(p_element(4), p_element(4)) == sp;
        good = good && convert(convert(I({3, 1}), Basis::p), Basis::I) == I({3, 1});
      }
      ok[static_cast<std::size_t>(t)] = good ? 1 : 0;
    });
  for (auto& th : pool) th.join();
  for (int v : ok) CHECK(v == 1);
}

TEST_CASE("grading") {
  for (int a = 0; a <= 4; ++a)
    for (const Partition& mu : partitions_of(a))
      for (int b = 0; b <= 4 - a; ++b)
        for (const Partition& nu : partitions_of(b)) {
          const auto deg = product(HallElement::single(Basis::I, mu),
                                   HallElement::single(Basis::I, nu))
                               .homogeneous_degree();
          CHECK(deg);
          if (!(mu.empty() && nu.empty())) CHECK(*deg == a + b);
        }
}

TEST_SUITE_END();
