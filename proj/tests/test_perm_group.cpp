#include <random>
#include <set>

#include "doctest.h"

#include "cca/perm_group.hpp"
#include "oracles/closure.hpp"

using namespace cca;

namespace
{

Permutation cyc(std::string const &s, std::size_t n) { return parse_cycles(s, n); }

PermutationGroup sym4() { return {4, {cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)}}; }

Permutation random_perm(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<Point> images(n);
  for (Point i = 0; i < n; ++i)
    images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

} // namespace

TEST_CASE("orders from the stabilizer chain")
{
  CHECK(sym4().order() == 24);
  CHECK(oracle::closure(4, sym4().generators()).size() == 24);

  CHECK(PermutationGroup::trivial(5).order() == 1);
  CHECK(PermutationGroup(3, {Permutation(3)}).order() == 1);

  PermutationGroup alt5(5, {cyc("(1 2 3)", 5), cyc("(1 2 3 4 5)", 5)});
  CHECK(alt5.order() == 60);
  CHECK(oracle::closure(5, alt5.generators()).size() == 60);
}

TEST_CASE("base points are the smallest moved points")
{
  PermutationGroup g(6, {cyc("(3 4 5)", 6), cyc("(3 4)", 6)});
  CHECK(g.order() == 6);
  CHECK(g.base().front() == 2);
}

TEST_CASE("membership")
{
  auto g = sym4();
  PermutationGroup a4(4, {cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
  CHECK(a4.order() == 12);
  CHECK(a4.contains(cyc("(1 2)(3 4)", 4)));
  CHECK_FALSE(a4.contains(cyc("(1 2)", 4)));
  CHECK(g.contains(cyc("(1 2)", 4)));
  CHECK_THROWS_AS((void)g.contains(Permutation(5)), InvalidArgument);
}

TEST_CASE("subgroup index")
{
  auto g = sym4();
  PermutationGroup a4(4, {cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
  CHECK(subgroup_index(g, a4) == 2);
  CHECK(subgroup_index(g, g) == 1);
  PermutationGroup other(4, {cyc("(1 2 3)", 4)});
  CHECK_THROWS_AS((void)subgroup_index(other, a4), InvalidArgument);
}

TEST_CASE("normality, normal closure and centralizers")
{
  auto g = sym4();
  PermutationGroup a4(4, {cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
  CHECK(is_normal(g, a4));

  PermutationGroup s3(3, {cyc("(1 2)", 3), cyc("(1 2 3)", 3)});
  PermutationGroup t(3, {cyc("(1 2)", 3)});
  CHECK_FALSE(is_normal(s3, t));

  std::vector<Permutation> x{cyc("(1 2)(3 4)", 4)};
  CHECK(normal_closure(g, x).order() == 4);
  std::vector<Permutation> y{cyc("(1 2)", 4)};
  CHECK(normal_closure(g, y).order() == 24);

  CHECK(centralizer_bruteforce(g, cyc("(1 2)(3 4)", 4)).order() == 8);
  CHECK_THROWS_AS((void)centralizer_bruteforce(g, cyc("(1 2)", 4), 10), LimitExceeded);

  CHECK(is_central(g, Permutation(4)));
  CHECK_FALSE(is_central(g, cyc("(1 2)", 4)));
}

TEST_CASE("element enumeration")
{
  PermutationGroup s3(3, {cyc("(1 2)", 3), cyc("(1 2 3)", 3)});
  auto els = s3.elements();
  CHECK(els.size() == 6);
  CHECK(els.front().is_identity());
  CHECK(std::set<Permutation>(els.begin(), els.end()).size() == 6);
  CHECK(els == s3.elements());
  CHECK_THROWS_AS((void)s3.elements(5), LimitExceeded);
}

TEST_CASE("chain order agrees with closure on random groups")
{
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 6;
    std::vector<Permutation> gens;
    for (std::size_t k = 0, count = 1 + rng() % 3; k < count; ++k)
      gens.push_back(random_perm(n, rng));
    PermutationGroup g(n, gens);
    auto closed = oracle::closure(n, gens);
    REQUIRE(g.order() == closed.size());

    auto els = g.elements();
    CHECK(std::set<Permutation>(els.begin(), els.end()) == closed);
    for (auto const &x : gens)
      CHECK(g.contains(x));
  }
}

TEST_CASE("membership is closed under products")
{
  std::mt19937_64 rng(99);
  PermutationGroup g(7, {cyc("(1 2 3 4 5 6 7)", 7), cyc("(1 2)(3 6)", 7)});
  auto els = g.elements();
  for (int i = 0; i < 1000; ++i) {
    auto const &x = els[rng() % els.size()];
    auto const &y = els[rng() % els.size()];
    CHECK(g.contains(x * y));
  }
  // an odd permutation is outside this simple group of order 168
  CHECK(g.order() == 168);
  CHECK_FALSE(g.contains(cyc("(1 2)", 7)));
}

TEST_CASE("is_normal matches conjugation of every element")
{
  std::mt19937_64 rng(5);
  PermutationGroup g = PermutationGroup(5, {cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)});
  auto els = g.elements();
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Permutation> gens{els[rng() % els.size()], els[rng() % els.size()]};
    auto h = subgroup(g, gens);
    bool brute = true;
    for (auto const &x : h.elements())
      for (auto const &y : els)
        brute = brute && h.contains(conjugate(x, y));
    CHECK(is_normal(g, h) == brute);
  }
}
