#include <doctest.h>

#include <random>

#include "hallcl/bases.hpp"
#include "hallcl/text.hpp"

using namespace hallcl;

namespace {

HallElement random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), deg(0, 6), coefd(-4, 4), expd(-2, 3);
  static const Basis bases[] = {Basis::I, Basis::X, Basis::e, Basis::P, Basis::Q, Basis::p};
  HallElement x(bases[rng() % 6]);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    const auto parts = partitions_of(deg(rng));
    const Partition lam = parts[rng() % parts.size()];
    QPoly num, den;
    num.set_coeff(expd(rng), Rational(coefd(rng)));
    num.set_coeff(expd(rng), Rational(coefd(rng)));
    den.set_coeff(0, 1);
    if (rng() % 2) den.set_coeff(1, Rational(coefd(rng)));
    if (num.is_zero()) continue;
    x.add_term(lam, QRat(num, den));
  }
  return x;
}

} // namespace

TEST_SUITE_BEGIN("text");

TEST_CASE("parse_element examples") {
  const HallElement p2 = parse_element("I[2] + (1-q)*I[1,1]");
  CHECK(p2 == p_element(2));
  CHECK(parse_element("P[]") == HallElement::unit(Basis::P));
  CHECK_THROWS_AS(parse_element("I[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_element("I[0]"), ParseError);
  CHECK_THROWS_AS(parse_element("B[1]"), ParseError);
  CHECK_THROWS_AS(parse_element("I[1] + P[1]"), ParseError);
  CHECK(parse_element("0").is_zero());
  CHECK(parse_element("-I[1]") == HallElement::single(Basis::I, Partition{{1}}, QRat(-1)));
  CHECK(parse_element("q^-1*X[2,1]") ==
        HallElement::single(Basis::X, Partition{{2, 1}}, QRat::q_pow(-1)));
  CHECK(parse_element("3*e[1] - 2*e[1]") ==
        HallElement::single(Basis::e, Partition{{1}}, QRat(1)));
}

TEST_CASE("parse error positions") {
  try {
    parse_element("I[1,2]");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(e.expected().find("weakly decreasing") != std::string::npos);
  }
  try {
    parse_coeff("1 + * 2");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("format and reparse round-trip") {
  std::mt19937 rng(987654321);
  for (int i = 0; i < 200; ++i) {
    const HallElement x = random_element(rng);
    const HallElement back = parse_element(format_element(x));
    if (x.is_zero())
      CHECK(back.is_zero());
    else
      CHECK(back == x);
  }
}

TEST_CASE("format is canonical") {
  CHECK(format_element(p_element(2)) == "I[2] + (1 - q)*I[1,1]");
  CHECK(format_qrat(QRat(1) / (QRat::q() - QRat(1))) == "1/(-1 + q)");
  CHECK(format_qpoly(qbinomial(3, 1)) == "1 + q + q^2");
  CHECK(format_element(HallElement(Basis::Q)) == "0");
}

TEST_SUITE_END();
