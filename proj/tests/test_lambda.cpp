#include <doctest.h>

#include "hallcl/bases.hpp"
#include "hallcl/hall.hpp"
#include "hallcl/lambda.hpp"

using namespace hallcl;

namespace {

const QRat q = QRat::q();

LambdaElement e_of(std::vector<int> parts, QRat c = QRat(1)) {
  return LambdaElement::single(Partition{std::move(parts)}, std::move(c));
}

} // namespace

TEST_SUITE_BEGIN("lambda");

TEST_CASE("psi on generators") {
  CHECK(psi(HallElement::single(Basis::I, Partition{{1, 1}})) ==
        e_of({2}, QRat::q_pow(-1)));
  CHECK(psi(p_element(1)) == e_of({1}));
  CHECK(psi(convert(HallElement::single(Basis::P, Partition{{2}}), Basis::I)) ==
        e_of({1, 1}) - e_of({2}, QRat(1) + QRat::q_pow(-1)));
}

TEST_CASE("lambda pairing") {
  const QRat t = QRat::q_pow(-1);
  CHECK(lambda_pairing(e_of({1}), e_of({1})) == QRat(1) / (QRat(1) - t));
  // e's are not orthogonal for the Hall-Littlewood product:
  // <e_2, e_{(1,1)}> = (1/2) z_{(1,1)} / (1-t)^2 = 1/(1-t)^2
  CHECK(lambda_pairing(e_of({2}), e_of({1, 1})) ==
        QRat(1) / ((QRat(1) - t) * (QRat(1) - t)));
  const QRat lhs = lambda_pairing(psi(p_element(1)), psi(p_element(1)));
  CHECK(lhs == QRat(1) / (QRat(1) - t));
  CHECK(lhs == q * pairing(p_element(1), p_element(1)));
  // <psi(p_m), psi(p_n)> = delta_{m,n} n/(1 - q^{-n})
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      CHECK(lambda_pairing(psi(p_element(m)), psi(p_element(n))) ==
            (m == n ? QRat(n) / (QRat(1) - QRat::q_pow(-n)) : QRat(0)));
}

TEST_CASE("expand_vars") {
  MultiPoly e1(2);
  e1.add_term({1, 0}, QRat(1));
  e1.add_term({0, 1}, QRat(1));
  CHECK(expand_vars(e_of({1}), 2) == e1);

  MultiPoly p2(2);
  p2.add_term({2, 0}, QRat(1));
  p2.add_term({0, 2}, QRat(1));
  p2.add_term({1, 1}, QRat(1) - QRat::q_pow(-1));
  CHECK(expand_vars(psi(convert(HallElement::single(Basis::P, Partition{{2}}), Basis::I)),
                    2) == p2);

  CHECK(expand_vars(e_of({3}), 2).is_zero());
}

TEST_CASE("psi multiplicative on a sample") {
  const HallElement a = HallElement::single(Basis::I, Partition{{2}});
  const HallElement b = HallElement::single(Basis::I, Partition{{1, 1}});
  CHECK(psi(product(a, b)) == lambda_product(psi(a), psi(b)));
}

TEST_CASE("pairing scaling on a degree") {
  for (const Partition& lam : partitions_of(3))
    for (const Partition& mu : partitions_of(3)) {
      const HallElement a = HallElement::single(Basis::I, lam);
      const HallElement b = HallElement::single(Basis::I, mu);
      CHECK(lambda_pairing(psi(a), psi(b)) == pairing(a, b) * QRat::q_pow(3));
    }
}

TEST_SUITE_END();
