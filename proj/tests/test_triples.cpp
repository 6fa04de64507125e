#include <set>

#include "doctest.h"

#include "cca/group_expr.hpp"
#include "cca/higman_triple.hpp"
#include "cca/triples.hpp"
#include "cca/zoo.hpp"
#include "oracles/closure.hpp"

using namespace cca;

namespace
{

Permutation cyc(std::string const &s, std::size_t n) { return parse_cycles(s, n); }

std::set<Permutation> as_set(std::vector<Permutation> const &v) { return {v.begin(), v.end()}; }

std::vector<Permutation> involutions(PermutationGroup const &g)
{
  std::vector<Permutation> result;
  for (auto const &x : g.elements())
    if (x.order() == 2)
      result.push_back(x);
  return result;
}

} // namespace

TEST_CASE("S(tau) in Sym(3)")
{
  auto s3 = zoo::symmetric(3);
  auto st = s_tau(s3, cyc("(1 2)", 3));
  CHECK(st.definitional_form_checked);
  CHECK(as_set(st.elements) ==
        std::set<Permutation>{cyc("(1 2)", 3), cyc("(1 2 3)", 3), cyc("(1 3 2)", 3)});
  CHECK(as_set(s_tau_definitional(s3, cyc("(1 2)", 3))) == as_set(st.elements));

  CHECK_THROWS_AS(s_tau(s3, cyc("(1 2 3)", 3)), InvalidArgument);
  CHECK_THROWS_AS(s_tau(s3, Permutation(3)), InvalidArgument);
}

TEST_CASE("S(tau) for a central tau is everything but the identity")
{
  auto c4 = zoo::cyclic(4);
  auto g = cyc("(1 2 3 4)", 4);
  CHECK(s_tau(c4, g * g).elements.size() == 3);

  auto d4 = zoo::dihedral(4);
  auto r = zoo::dihedral_rotation(4);
  CHECK(s_tau(d4, r * r).elements.size() == 7);
}

TEST_CASE("both forms of S(tau) agree and generate every involution on small groups")
{
  for (char const *e : {"S3", "S4", "A4", "D5", "D6", "C2 x C2 x C2", "S3 x C2", "D4", "higman:n=5,seed=3",
                        "C4 x C2"}) {
    CAPTURE(e);
    auto g = construct(e).group;
    auto invs = involutions(g);
    for (auto const &tau : invs) {
      auto st = s_tau(g, tau);
      CHECK(st.definitional_form_checked);
      auto span = generated_by(g.degree(), st.elements);
      for (auto const &y : invs)
        CHECK(span.contains(y));
      // (Aii) holds by construction
      std::vector<Permutation> none;
      CHECK(validate_triple(g, st.elements, none, tau).checks.aii);
    }
  }
}

TEST_CASE("S_H(tau) generates H for the Alt(6) point stabilizer")
{
  auto a6 = zoo::alternating(6);
  auto h = zoo::point_stabilizer(a6, 0);
  auto tau = cyc("(3 5)(4 6)", 6);
  auto st = s_tau(h, tau);
  CHECK(generated_by(6, st.elements).order() == 60);
}

TEST_CASE("Alt(6) triple")
{
  auto a6 = zoo::alternating(6);
  auto h = zoo::point_stabilizer(a6, 0);
  auto t = cyc("(1 2)(3 4 5 6)", 6);
  auto tau = t * t;
  CHECK(tau == cyc("(3 5)(4 6)", 6));
  auto s = s_tau(h, tau).elements;
  std::vector<Permutation> ts{t};
  auto triple = validate_triple(a6, s, ts, tau);
  CHECK(triple.valid);
  CHECK(triple.index == 6);
  CHECK_FALSE(triple.tau_central);

  auto check = crosscheck_triple(a6, triple);
  CHECK(check.connected);
  CHECK_FALSE(check.verdict.is_cca);
  CHECK(check.verdict.witness);

  auto record = triple_record("A6", triple, check);
  CHECK(record["valid"] == true);
  CHECK(record["checks"]["Av"] == true);
  CHECK(record["crosscheck"]["is_cca"] == false);
  for (auto const &x : record["S"])
    CHECK(a6.contains(parse_cycles(x.get<std::string>(), 6)));
}

TEST_CASE("C4 degenerate triple fails only (Av)")
{
  auto c4 = zoo::cyclic(4);
  auto g = cyc("(1 2 3 4)", 4);
  std::vector<Permutation> none, ts{g};
  auto triple = validate_triple(c4, none, ts, g * g);
  CHECK(triple.checks.ai);
  CHECK(triple.checks.aii);
  CHECK(triple.checks.aiii);
  CHECK(triple.checks.aiv);
  CHECK_FALSE(triple.checks.av);
  CHECK_FALSE(triple.valid);
  CHECK(triple.tau_central);
  CHECK(triple.index == 2);
}

TEST_CASE("malformed triples throw")
{
  auto s3 = zoo::symmetric(3);
  std::vector<Permutation> none, outside{cyc("(1 2 3 4)", 4)};
  CHECK_THROWS_AS(validate_triple(s3, none, none, cyc("(1 2 3)", 3)), InvalidArgument);
  CHECK_THROWS_AS(validate_triple(s3, outside, none, cyc("(1 2)", 3)), InvalidArgument);
  CHECK_THROWS_AS(validate_triple(zoo::alternating(3), none, none, cyc("(1 2)", 3)), InvalidArgument);
}

TEST_CASE("square roots")
{
  auto c4 = zoo::cyclic(4);
  auto g = cyc("(1 2 3 4)", 4);
  CHECK(as_set(square_roots(c4, g * g)) == std::set<Permutation>{g, g.inverse()});

  higman::Params qp(2, 1);
  qp.set_b(1, 1, true);
  qp.set_b(2, 1, true);
  qp.set_c(1, 2, 1, true);
  higman::Group q(qp);
  CHECK(square_roots(q.regular_representation(), q.right_action(q.h(1))).size() == 6);

  auto s4 = zoo::symmetric(4);
  auto tau = cyc("(1 2)(3 4)", 4);
  std::size_t brute = 0;
  for (auto const &x : oracle::closure(4, s4.generators()))
    if (x * x == tau)
      ++brute;
  CHECK(square_roots(s4, tau).size() == brute);
  CHECK(brute == 2);
}

TEST_CASE("Higman triples")
{
  auto n3 = higman::canonical_triple(higman::sample_params(3, 0));
  CHECK(n3.triple.s.size() == 1);
  CHECK(n3.triple.t.size() == 2);
  CHECK(n3.triple.valid);
  CHECK(n3.triple.index == 4);
  CHECK(n3.triple.tau_central);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto h = higman::canonical_triple(higman::sample_params(6, seed));
    CHECK(h.triple.s.size() == 4);
    CHECK(h.triple.valid);
    CHECK(h.triple.index == 4);
    auto check = crosscheck_triple(h.regular, h.triple);
    CHECK(check.connected);
    CHECK_FALSE(check.verdict.is_cca);
  }

  auto unconstrained = higman::Params(3, 2);
  CHECK_THROWS_AS(higman::canonical_triple(unconstrained), InvalidArgument);
}

TEST_CASE("subgroup strategy on Sym(5) under both readings of the {4,5} stabilizer")
{
  auto s5 = zoo::symmetric(5);
  std::vector<Point> pts{3, 4};
  auto t = cyc("(1 4 2 5)", 5);
  auto tau = t * t;
  CHECK(tau == cyc("(1 2)(4 5)", 5));
  std::vector<Permutation> ts{t};

  auto pointwise = zoo::pointwise_stabilizer(s5, pts);
  auto setwise = zoo::setwise_stabilizer(s5, pts);
  auto from_setwise = validate_triple(s5, s_tau(setwise, tau).elements, ts, tau);
  CHECK(from_setwise.valid);
  CHECK_FALSE(pointwise.contains(tau));
  CHECK(setwise.contains(tau));
  // tau acts on the pointwise stabilizer by conjugation, so the filter form still applies
  auto from_pointwise = validate_triple(s5, s_tau(pointwise, tau).elements, ts, tau);
  CHECK(from_pointwise.valid);
  CHECK(from_pointwise.index == 10);

  auto check = crosscheck_triple(s5, from_setwise);
  CHECK(check.connected);
  CHECK_FALSE(check.verdict.is_cca);

  auto search = search_triple_subgroup_strategy(s5, setwise);
  REQUIRE(search.triple);
  CHECK(search.triple->valid);
}

TEST_CASE("subgroup strategy on Alt(7)")
{
  auto a7 = zoo::alternating(7);
  auto h = zoo::point_stabilizer(a7, 0);
  auto search = search_triple_subgroup_strategy(a7, h);
  REQUIRE(search.triple);
  CHECK(search.triple->valid);

  auto tau = cyc("(3 5)(4 6)", 7);
  std::vector<Permutation> given_tau{tau};
  auto directed = search_triple_subgroup_strategy(a7, h, given_tau);
  REQUIRE(directed.triple);
  auto roots = square_roots(a7, tau);
  CHECK(std::find(roots.begin(), roots.end(), cyc("(1 2)(3 4 5 6)", 7)) != roots.end());
}

TEST_CASE("subgroup strategy exhausts when no triple exists")
{
  // Sym(3) has no element of order 4, so no involution is a square
  auto s3 = zoo::symmetric(3);
  auto h = zoo::point_stabilizer(s3, 0);
  auto search = search_triple_subgroup_strategy(s3, h);
  CHECK_FALSE(search.triple);
  CHECK(search.taus_tried > 0);
}
