#include <doctest.h>

#include "hallcl/bases.hpp"
#include "hallcl/hall.hpp"
#include "hallcl/operators.hpp"

using namespace hallcl;

namespace {

HallElement I(std::vector<int> parts, QRat c = QRat(1)) {
  return HallElement::single(Basis::I, Partition{std::move(parts)}, std::move(c));
}

const QRat q = QRat::q();

} // namespace

TEST_SUITE_BEGIN("operators");

TEST_CASE("mult_p") {
  const GradedOperator m2 = mult_p(2);
  CHECK(m2.degree_shift == 2);
  CHECK(m2(HallElement::unit(Basis::I)) == p_element(2));
  CHECK(convert(m2(convert(HallElement::single(Basis::p, Partition{{1}}), Basis::I)),
                Basis::p) == HallElement::single(Basis::p, Partition{{2, 1}}));
  CHECK(mult_p(1)(I({1})) == I({2}) + I({1, 1}, QRat(1) + q));
}

TEST_CASE("del_p") {
  const GradedOperator d2 = del_p(2);
  CHECK(d2.degree_shift == -2);
  CHECK(d2(p_element(2)) == HallElement::unit(Basis::I));
  CHECK(d2(convert(HallElement::single(Basis::p, Partition{{2, 2}}), Basis::I)) ==
        p_element(2) * QRat(2));
  CHECK(d2(HallElement::unit(Basis::I)).is_zero());
  CHECK(del_p(1)(HallElement::unit(Basis::I)).is_zero());
}

TEST_CASE("boson") {
  CHECK(boson(-1)(HallElement::unit(Basis::I)) == p_element(1));
  CHECK(boson(2)(HallElement::unit(Basis::I)).is_zero());
  // b_n p_n (1) = [b_n, p_n](1) = n/(q^n-1)
  CHECK(boson(1)(p_element(1)) ==
        HallElement::unit(Basis::I) * (QRat(1) / (q - QRat(1))));
  CHECK(boson(3)(p_element(3)) ==
        HallElement::unit(Basis::I) * (QRat(3) / (QRat::q_pow(3) - QRat(1))));
  CHECK(boson(0)(I({2, 1})) == I({2, 1}));
}

TEST_CASE("commutator matrices") {
  const QRat c1 = QRat(1) / (q - QRat(1));
  CHECK(commutator_matrix(1, -1, 4).is_scalar_identity(c1));
  CHECK(commutator_matrix(-1, 1, 4).is_scalar_identity(-c1));
  CHECK(commutator_matrix(2, -1, 4).is_zero());
  CHECK(commutator_matrix(-1, -2, 4).is_zero());
  CHECK(commutator_matrix(2, -2, 3)
            .is_scalar_identity(QRat(2) / (QRat::q_pow(2) - QRat(1))));
}

TEST_CASE("gamma_coeff") {
  CHECK(gamma_coeff(Partition{}, Partition{}, Partition{{1}}, Partition{{1}}) ==
        QRat(1) / (q - QRat(1)));
  CHECK(gamma_coeff(Partition{{1}}, Partition{{1}}, Partition{{1}}, Partition{{1}}) ==
        QRat(1));
  // degree mismatch
  CHECK(gamma_coeff(Partition{{1}}, Partition{}, Partition{{1}}, Partition{{1}}) ==
        QRat(0));
  CHECK(gamma_coeff(Partition{{2}}, Partition{}, Partition{{1}}, Partition{{1}}) ==
        QRat(0));
}

TEST_CASE("vertex_D0 eigenvalues") {
  CHECK(vertex_D0(HallElement::unit(Basis::I)) == HallElement::unit(Basis::I));
  const HallElement p1 = convert(HallElement::single(Basis::P, Partition{{1}}), Basis::I);
  CHECK(vertex_D0(p1) == p1 * q);
  const HallElement p21 = convert(HallElement::single(Basis::P, Partition{{2, 1}}), Basis::I);
  CHECK(vertex_D0(p21) == p21 * QRat::q_pow(2));
  // linearity across different eigenvalues
  const HallElement mix = p1 * (q - QRat(1)) + p21;
  CHECK(vertex_D0(mix) == p1 * (q - QRat(1)) * q + p21 * QRat::q_pow(2));
}

TEST_CASE("vertex_B modes") {
  CHECK(vertex_B(1, HallElement::unit(Basis::I)) == I({1}, q - QRat(1)));
  CHECK(vertex_B(0, HallElement::unit(Basis::I)) == HallElement::unit(Basis::I));
  CHECK(vertex_B(-1, HallElement::unit(Basis::I)).is_zero());
}

TEST_CASE("jing reconstruction") {
  CHECK(jing_Q(Partition{}) == HallElement::unit(Basis::I));
  CHECK(jing_Q(Partition{{1}}) == I({1}, q - QRat(1)));
  CHECK(jing_Q(Partition{{2, 1}}) ==
        convert(HallElement::single(Basis::Q, Partition{{2, 1}}), Basis::I));
}

TEST_CASE("operators are linear") {
  const HallElement a = I({2}) + I({1, 1}, q);
  const HallElement b = I({1}, QRat(1) - q);
  const QRat ca = q + QRat(2), cb = QRat::q_pow(-1);
  for (const GradedOperator& op : {mult_p(2), del_p(1), boson(1), boson(-2)})
    CHECK(op(a * ca + b * cb) == op(a) * ca + op(b) * cb);
}

TEST_SUITE_END();
