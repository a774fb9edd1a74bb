#include <doctest.h>

#include <vector>

#include "sgnpart/bigint.hpp"
#include "sgnpart/polynomial.hpp"

using sgnpart::bigint;
using sgnpart::polynomial;

namespace {

polynomial make(std::initializer_list<std::int64_t> coeffs) {
  std::vector<bigint> cs;
  for (auto c : coeffs) cs.emplace_back(c);
  return polynomial(std::move(cs));
}

}  // namespace

TEST_CASE("polynomial normalization") {
  CHECK(make({}).is_zero());
  CHECK(make({0, 0, 0}).is_zero());
  CHECK(make({}).degree() == -1);
  CHECK(make({5}).degree() == 0);
  CHECK(make({1, 2, 3, 0, 0}).degree() == 2);
  CHECK(make({0, 0, 1, 0}) == polynomial::monomial(2));
}

TEST_CASE("polynomial ring operations") {
  polynomial xm1 = make({-1, 1});
  polynomial xp1 = make({1, 1});
  CHECK(xm1 * xp1 == make({-1, 0, 1}));
  CHECK(xm1 + xp1 == make({0, 2}));
  CHECK(xm1 - xm1 == polynomial());
  CHECK(polynomial() * xm1 == polynomial());
  CHECK(bigint(3) * make({1, 2}) == make({3, 6}));
  CHECK(bigint(0) * make({1, 2}) == polynomial());

  // (x-1)^3 = x^3 - 3x^2 + 3x - 1
  CHECK(xm1 * xm1 * xm1 == make({-1, 3, -3, 1}));
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::vector<polynomial> samples = {
      polynomial(), make({7}), make({-1, 1}), make({3, 0, -2, 1}),
      make({0, 5, 0, 0, 1})};
  for (const auto& p : samples) {
    for (const auto& q : samples) {
      for (std::int64_t x = -6; x <= 6; ++x) {
        bigint bx(x);
        CHECK((p * q).eval(bx) == p.eval(bx) * q.eval(bx));
        CHECK((p + q).eval(bx) == p.eval(bx) + q.eval(bx));
      }
    }
  }
}

TEST_CASE("polynomial coefficient access") {
  polynomial p = make({4, 0, -7});
  CHECK(p.coeff(0) == bigint(4));
  CHECK(p.coeff(1) == bigint(0));
  CHECK(p.coeff(2) == bigint(-7));
  CHECK(p.coeff(3) == bigint(0));
  CHECK(p.coeff(-1) == bigint(0));
}

TEST_CASE("polynomial rendering") {
  CHECK(polynomial().to_string() == "0");
  CHECK(make({1}).to_string() == "1");
  CHECK(make({-1, 1}).to_string() == "x - 1");
  CHECK(make({3, 0, -2, 1}).to_string() == "x^3 - 2x^2 + 3");
  CHECK(make({0, -1}).to_string() == "-x");
}
