#include <gtest/gtest.h>

#include <set>

#include "bswidth/gf.hpp"

using namespace bsw;
using gf::Code;

namespace {

const std::uint64_t kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 243, 256};

}  // namespace

TEST(Gf, PrimeFieldMatchesIntegerArithmetic) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 13u, 31u}) {
    auto f = gf::field_of_order(p);
    for (Code a = 0; a < p; ++a)
      for (Code b = 0; b < p; ++b) {
        EXPECT_EQ(f->add(a, b), (a + b) % p);
        EXPECT_EQ(f->mul(a, b), (a * b) % p);
        EXPECT_EQ(f->sub(a, b), (a + p - b) % p);
      }
  }
}

TEST(Gf, TablesAgreeWithPolynomialReduction) {
  for (auto q : kOrders) {
    auto f = gf::field_of_order(q);
    if (q > 128) continue;
    for (Code a = 0; a < q; ++a)
      for (Code b = 0; b < q; ++b) ASSERT_EQ(f->mul(a, b), f->mul_reference(a, b)) << f->name();
  }
}

TEST(Gf, Gf4ByHand) {
  // only irreducible quadratic over F_2 is x^2 + x + 1, so x*x = x + 1
  auto f = gf::field_of_order(4);
  EXPECT_EQ(f->mul(2, 2), 3u);
  EXPECT_EQ(f->mul(2, 3), 1u);
  EXPECT_EQ(f->add(2, 3), 1u);
}

TEST(Gf, ModulusIsIrreducible) {
  for (auto q : kOrders) {
    auto f = gf::field_of_order(q);
    EXPECT_EQ(f->modulus().size(), f->k() + 1u);
    EXPECT_TRUE(gf::detail::is_irreducible(f->modulus(), f->p())) << f->name();
  }
}

TEST(Gf, MultiplicativeGroupIsCyclic) {
  for (auto q : kOrders) {
    auto f = gf::field_of_order(q);
    EXPECT_EQ(f->mult_order(f->primitive()), q - 1) << f->name();
    std::set<Code> powers;
    for (std::uint64_t e = 0; e + 1 < q; ++e) powers.insert(f->pow(f->primitive(), e));
    EXPECT_EQ(powers.size(), q - 1);
  }
}

TEST(Gf, FermatAndInverses) {
  for (auto q : kOrders) {
    auto f = gf::field_of_order(q);
    for (Code a = 0; a < q; ++a) {
      EXPECT_EQ(f->pow(a, q), a);
      if (a) {
        EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
      }
      EXPECT_EQ(f->add(a, f->neg(a)), 0u);
    }
  }
}

TEST(Gf, FrobeniusIsAFieldAutomorphism) {
  for (auto q : {8ull, 9ull, 27ull, 64ull, 81ull}) {
    auto f = gf::field_of_order(q);
    for (Code a = 0; a < q; ++a) {
      EXPECT_EQ(f->frobenius(a, 1), f->pow(a, f->p()));
      EXPECT_EQ(f->frobenius(a, f->k()), a);
      for (Code b = 0; b < q; b += 3) {
        EXPECT_EQ(f->frobenius(f->mul(a, b), 1), f->mul(f->frobenius(a, 1), f->frobenius(b, 1)));
        EXPECT_EQ(f->frobenius(f->add(a, b), 1), f->add(f->frobenius(a, 1), f->frobenius(b, 1)));
      }
    }
  }
}

TEST(Gf, SquaresAndSubfields) {
  for (auto q : {3ull, 5ull, 9ull, 25ull, 27ull, 49ull}) {
    auto f = gf::field_of_order(q);
    std::set<Code> squares;
    for (Code a = 1; a < q; ++a) squares.insert(f->mul(a, a));
    for (Code a = 1; a < q; ++a) EXPECT_EQ(f->is_square(a), squares.count(a) == 1);
    EXPECT_EQ(squares.size(), (q - 1) / 2);
  }
  auto f = gf::field_of_order(81);
  std::uint64_t in_f9 = 0;
  for (Code a = 0; a < 81; ++a) in_f9 += f->subfield_order(a) <= 9;
  EXPECT_EQ(in_f9, 9u);
}

TEST(Gf, QuadraticConjugation) {
  for (auto q : {4ull, 9ull, 25ull, 49ull}) {
    auto f = gf::field_of_order(q);
    for (Code a = 0; a < q; ++a) {
      EXPECT_EQ(f->conj(f->conj(a)), a);
      const Code norm = f->mul(a, f->conj(a));
      EXPECT_EQ(f->conj(norm), norm);  // norms lie in the base field
    }
    const auto beta = gf::solve_special(f, gf::Special::trace_zero);
    EXPECT_FALSE(beta.is_zero());
    EXPECT_EQ(f->add(beta.code(), f->conj(beta.code())), 0u);
    const auto gamma = gf::solve_special(f, gf::Special::trace_minus_one);
    EXPECT_EQ(f->add(gamma.code(), f->conj(gamma.code())), f->neg(1));
  }
  EXPECT_THROW(gf::field_of_order(7)->conj(3), SpecError);
}

TEST(Gf, ValueTypeAndErrors) {
  auto f = gf::field_of_order(9);
  gf::FieldElem a(f, 5), b(f, 7);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a - a + b, b);
  EXPECT_EQ(a.pow(8).code(), 1u);
  EXPECT_THROW(gf::FieldElem(f, 9), SpecError);
  EXPECT_THROW((void)(a + gf::FieldElem(gf::field_of_order(3), 1)), SpecError);
  EXPECT_THROW(f->inv(0), MathError);
  EXPECT_THROW(gf::field_of_order(6), SpecError);
  EXPECT_THROW(gf::field_of_order(1), SpecError);
  EXPECT_THROW(gf::field_of_order(1u << 17), CapExceeded);
}
