#include <array>
#include <random>
#include <set>

#include "doctest.h"

#include "cca/higman.hpp"
#include "oracles/closure.hpp"
#include "oracles/collector.hpp"

using namespace cca;
using higman::Element;
using higman::Group;
using higman::Params;

namespace
{

Params quaternion_params()
{
  Params p(2, 1);
  p.set_b(1, 1, true);
  p.set_b(2, 1, true);
  p.set_c(1, 2, 1, true);
  p.constrained = true;
  return p;
}

// Q8 as sign and unit index over {1, i, j, k}.
struct Quat
{
  int sign;
  int unit;
  bool operator==(Quat const &) const = default;
};

Quat qmul(Quat a, Quat b)
{
  // unit products: table[a][b] = (sign, unit)
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> table{{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  auto [s, u] = table[a.unit][b.unit];
  return {a.sign * b.sign * s, u};
}

Quat quat_image(Element const &x)
{
  // g1 -> i, g2 -> j, h1 -> -1
  Quat q{1, 0};
  if (x.e & 1u)
    q = qmul(q, {1, 1});
  if (x.e & 2u)
    q = qmul(q, {1, 2});
  if (x.f & 1u)
    q = qmul(q, {-1, 0});
  return q;
}

Element random_element(Group const &g, std::mt19937_64 &rng)
{
  return g.element_at(rng() % g.order());
}

Element commutator(Group const &g, Element const &x, Element const &y)
{
  return g.multiply(g.multiply(g.invert(x), g.invert(y)), g.multiply(x, y));
}

Element h_word(std::uint64_t mask) { return {0, mask}; }

} // namespace

TEST_CASE("quaternion pattern: r=2, s=1")
{
  Group g(quaternion_params());
  REQUIRE(g.order() == 8);
  auto elements = g.elements();

  int involutions = 0;
  bool abelian = true;
  for (auto const &x : elements) {
    if (x != g.identity() && g.multiply(x, x) == g.identity())
      ++involutions;
    CHECK(g.power(x, 4) == g.identity());
    for (auto const &y : elements) {
      if (g.multiply(x, y) != g.multiply(y, x))
        abelian = false;
      CHECK(quat_image(g.multiply(x, y)) == qmul(quat_image(x), quat_image(y)));
    }
  }
  CHECK(involutions == 1);
  CHECK_FALSE(abelian);

  std::set<std::pair<int, int>> images;
  for (auto const &x : elements)
    images.insert({quat_image(x).sign, quat_image(x).unit});
  CHECK(images.size() == 8);
}

TEST_CASE("r=1, s=1 with g^2 = h gives C4")
{
  Params p(1, 1);
  p.set_b(1, 1, true);
  Group g(p);
  auto x = g.g(1);
  CHECK(g.power(x, 2) == g.h(1));
  CHECK(g.power(x, 3) == g.multiply(x, g.h(1)));
  CHECK(g.power(x, 4) == g.identity());
  CHECK(g.power(x, 2) != g.identity());
}

TEST_CASE("identity is neutral and inverses cancel")
{
  std::mt19937_64 rng(7);
  for (unsigned n = 3; n <= 10; ++n) {
    Group g(higman::sample_params(n, n));
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_element(g, rng);
      CHECK(g.multiply(g.identity(), x) == x);
      CHECK(g.multiply(x, g.identity()) == x);
      CHECK(g.multiply(x, g.invert(x)) == g.identity());
      CHECK(g.multiply(g.invert(x), x) == g.identity());
    }
  }
}

TEST_CASE("associativity on random triples")
{
  std::mt19937_64 rng(11);
  for (unsigned n = 3; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Group g(higman::sample_params(n, seed));
      for (int trial = 0; trial < 200; ++trial) {
        auto a = random_element(g, rng), b = random_element(g, rng), c = random_element(g, rng);
        CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      }
    }
  }
}

TEST_CASE("defining relations hold verbatim")
{
  for (unsigned n = 3; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto p = higman::sample_params(n, seed);
      Group g(p);
      for (unsigned i = 1; i <= p.s(); ++i) {
        CHECK(g.multiply(g.h(i), g.h(i)) == g.identity());
        for (unsigned j = 1; j <= p.s(); ++j)
          CHECK(commutator(g, g.h(i), g.h(j)) == g.identity());
      }
      for (unsigned i = 1; i <= p.r(); ++i) {
        for (unsigned j = 1; j <= p.s(); ++j)
          CHECK(commutator(g, g.g(i), g.h(j)) == g.identity());
        CHECK(g.multiply(g.g(i), g.g(i)) == h_word(p.square_word(i)));
        for (unsigned j = i + 1; j <= p.r(); ++j)
          CHECK(commutator(g, g.g(i), g.g(j)) == h_word(p.commutator_word(i, j)));
      }
      CHECK(g.multiply(g.g(p.r()), g.g(p.r())) == g.h(1));
      CHECK(g.multiply(g.g(p.r() - 1), g.g(p.r() - 1)) == g.h(1));
    }
  }
}

TEST_CASE("closed-form product equals the word-rewriting collector")
{
  std::mt19937_64 rng(13);
  for (unsigned n = 3; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto p = higman::sample_params(n, seed);
      Group g(p);
      for (int trial = 0; trial < 100; ++trial) {
        auto a = random_element(g, rng), b = random_element(g, rng);
        CHECK(g.multiply(a, b) == oracle::collect_product(p, a, b));
      }
    }
  }
  // unconstrained random parameters exercise every b row
  for (int trial = 0; trial < 20; ++trial) {
    Params p(1 + rng() % 5, 1 + rng() % 3);
    for (unsigned i = 1; i <= p.r(); ++i)
      for (unsigned k = 1; k <= p.s(); ++k) {
        p.set_b(i, k, rng() & 1u);
        for (unsigned j = i + 1; j <= p.r(); ++j)
          p.set_c(i, j, k, rng() & 1u);
      }
    Group g(p);
    for (auto const &a : g.elements())
      for (auto const &b : g.elements())
        CHECK(g.multiply(a, b) == oracle::collect_product(p, a, b));
  }
}

TEST_CASE("order is 2^n and normal forms are distinct")
{
  for (unsigned n = 3; n <= 8; ++n) {
    Group g(higman::sample_params(n, 5));
    std::set<Element> seen;
    for (auto const &x : g.elements()) {
      seen.insert(x);
      CHECK(g.element_at(g.index(x)) == x);
    }
    CHECK(seen.size() == (std::size_t{1} << n));
  }
}

TEST_CASE("sampling")
{
  auto p3 = higman::sample_params(3, 99);
  CHECK(p3.r() == 2);
  CHECK(p3.s() == 1);
  CHECK(p3.b(1, 1));
  CHECK(p3.b(2, 1));
  CHECK(higman::free_bits(2, 1) == 1);

  auto p6 = higman::sample_params(6, 1);
  CHECK(p6.r() == 4);
  CHECK(p6.s() == 2);
  CHECK(higman::free_bits(4, 2) == 16);
  CHECK(p6.satisfies_constraint());

  CHECK(higman::sample_params(9, 42) == higman::sample_params(9, 42));
  CHECK_THROWS_AS(higman::sample_params(2, 0), InvalidArgument);

  // every free bit is reachable: across seeds each one takes both values
  std::set<std::pair<std::string, bool>> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    auto p = higman::sample_params(6, seed);
    for (unsigned i = 1; i <= 2; ++i)
      for (unsigned k = 1; k <= 2; ++k)
        seen.insert({"b" + std::to_string(i) + std::to_string(k), p.b(i, k)});
    for (unsigned i = 1; i <= 4; ++i)
      for (unsigned j = i + 1; j <= 4; ++j)
        for (unsigned k = 1; k <= 2; ++k)
          seen.insert({"c" + std::to_string(i) + std::to_string(j) + std::to_string(k), p.c(i, j, k)});
  }
  CHECK(seen.size() == 2 * 16);
}

TEST_CASE("params JSON round trip")
{
  auto p = higman::sample_params(8, 3);
  CHECK(higman::params_from_json(higman::params_to_json(p)) == p);

  CHECK_THROWS_AS(higman::params_from_json("{"), ParseError);
  CHECK_THROWS_AS(higman::params_from_json(R"({"r":2,"s":1,"b":[[0],[1]],"constrained":true})"),
                  ParseError);
  CHECK_THROWS_AS(higman::params_from_json(R"({"r":2,"s":1,"b":[[1],[1]],"c":[{"i":2,"j":1,"k":1,"bit":1}]})"),
                  ParseError);
}

TEST_CASE("regular representation")
{
  Group q(quaternion_params());
  auto rep = q.regular_representation();
  CHECK(rep.degree() == 8);
  CHECK(rep.order() == 8);
  CHECK(rep.orbit(0).size() == 8);
  CHECK(oracle::closure(8, rep.generators()).size() == 8);

  // x -> x*a composes as right actions do
  std::mt19937_64 rng(3);
  Group g(higman::sample_params(7, 2));
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_element(g, rng), b = random_element(g, rng);
    CHECK(g.right_action(a) * g.right_action(b) == g.right_action(g.multiply(a, b)));
  }

  Group big(higman::sample_params(8, 0));
  CHECK(big.regular_representation().order() == 256);
  CHECK_THROWS_AS(big.regular_representation(128), LimitExceeded);
}

TEST_CASE("labels")
{
  Group g(higman::sample_params(6, 0));
  CHECK(g.label(g.identity()) == "1");
  CHECK(g.label(Element{0b101, 0b10}) == "g1*g3*h2");
}
