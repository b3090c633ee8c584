#include <doctest.h>

#include <random>

#include "taufact/error.hpp"
#include "taufact/exact_arith.hpp"

using namespace taufact;

namespace {

// Schoolbook product over plain integers, independent of Poly's storage.
std::vector<long> schoolbook(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  const int degree = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 2)) - 1;
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
  for (auto& v : c) v = static_cast<long>(rng() % 21) - 10;
  return Poly(std::move(c));
}

Poly random_monic(std::mt19937_64& rng, int max_degree) {
  const int degree = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_degree));
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
  for (auto& v : c) v = static_cast<long>(rng() % 9) - 4;
  c.back() = 1;
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly_mul") {
  const Poly x{0, 1}, x1{1, 1};
  CHECK(poly_mul(x, x1) == Poly{0, 1, 1});
  CHECK(poly_mul(Poly{}, x1).is_zero());
  const auto expected = schoolbook({1, 1}, {1, 1});
  CHECK(poly_mul(x1, x1) == Poly{expected[0], expected[1], expected[2]});
  CHECK(poly_mul(x1, x1) == Poly{1, 2, 1});
  CHECK(poly_mul(Poly{3, 0, -2}, Poly{1, 5}).degree() == 3);
}

TEST_CASE("poly_add trims leading cancellation") {
  CHECK(poly_add(Poly{0, 1, 1}, Poly{0, 1}) == Poly{0, 2, 1});
  CHECK(poly_add(Poly{0, 0, 1}, Poly{0, 0, -1}).is_zero());
  CHECK(poly_add(Poly{1, 1}, Poly{1, 1}) == Poly{2, 2});
  CHECK(poly_add(Poly{1, 2, 3}, Poly{0, 0, -3}).degree() == 1);
}

TEST_CASE("poly_divmod_monic") {
  const Poly g{0, 1, 1};  // x^2 + x
  auto [q, r] = poly_divmod_monic(Poly::monomial(3), g);
  CHECK(q == Poly{-1, 1});
  CHECK(r == Poly{0, 1});
  CHECK(poly_add(poly_mul(g, q), r) == Poly::monomial(3));

  auto small = poly_divmod_monic(Poly{1, 1}, g);
  CHECK(small.quotient.is_zero());
  CHECK(small.remainder == Poly{1, 1});

  auto self = poly_divmod_monic(g, g);
  CHECK(self.quotient == Poly{1});
  CHECK(self.remainder.is_zero());

  CHECK_THROWS_AS(poly_divmod_monic(Poly{1}, Poly{1, 2}), Error);
  CHECK_THROWS_AS(poly_divmod_monic(Poly{1}, Poly{}), Error);
  try {
    poly_divmod_monic(Poly{1}, Poly{0, 2});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonMonicDivisor);
  }
}

TEST_CASE("ring axioms and division round trip on random inputs") {
  std::mt19937_64 rng(20240611);
  for (int iter = 0; iter < 300; ++iter) {
    const Poly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));

    const Poly g = random_monic(rng, 4);
    const auto [q, r] = poly_divmod_monic(a, g);
    CHECK(q * g + r == a);
    CHECK(r.degree() < g.degree());

    // (a*g + b) div g == (a, b) when deg b < deg g.
    const Poly low = poly_divmod_monic(b, g).remainder;
    const auto back = poly_divmod_monic(a * g + low, g);
    CHECK(back.quotient == a);
    CHECK(back.remainder == low);
  }
}

TEST_CASE("large integers stay exact") {
  // Product of 14 primes just below 10^6.
  Integer acc = 1;
  for (int i = 0; i < 14; ++i) acc *= 999983;
  Poly p = Poly::constant(acc);
  const auto [q, r] = poly_divmod_monic(p * Poly{0, 1}, Poly{0, 1});
  CHECK(q == p);
  CHECK(r.is_zero());
  CHECK(to_string(acc).size() == 84);
}

TEST_CASE("text syntax") {
  CHECK(parse_poly("x^2+x") == Poly{0, 1, 1});
  CHECK(parse_poly(" 3*x - 7 ") == Poly{-7, 3});
  CHECK(parse_poly("-x-1") == Poly{-1, -1});
  CHECK(parse_poly("x^3 + 2x^2 + x") == Poly{0, 1, 2, 1});
  CHECK(parse_poly("x - x").is_zero());
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("-28") == Poly{-28});
  CHECK(to_string(Poly{1, 2, 1}) == "x^2+2*x+1");
  CHECK(to_string(Poly{-1, -1}) == "-x-1");
  CHECK(to_string(Poly{}) == "0");
  CHECK(to_string(Poly{0, 0, -3}) == "-3*x^2");
  CHECK_THROWS_AS(parse_poly(""), Error);
  CHECK_THROWS_AS(parse_poly("x^"), Error);
  CHECK_THROWS_AS(parse_poly("2 3"), Error);
  CHECK_THROWS_AS(parse_poly("y+1"), Error);
  CHECK(parse_integer("-17") == -17);
  CHECK_THROWS_AS(parse_integer("1.5"), Error);
  CHECK_THROWS_AS(parse_integer("-"), Error);
}

TEST_CASE("printed polynomials re-parse to themselves") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const Poly p = random_poly(rng, 6);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("poly_less orders by degree then top coefficient") {
  CHECK(poly_less(Poly{}, Poly{1}));
  CHECK(poly_less(Poly{1}, Poly{0, 1}));
  CHECK(poly_less(Poly{0, 1}, Poly{1, 1}));
  CHECK(poly_less(Poly{-1, 1}, Poly{1, 1}));
  CHECK_FALSE(poly_less(Poly{1, 1}, Poly{1, 1}));
  CHECK(poly_less(Poly{-5}, Poly{3}));
}
