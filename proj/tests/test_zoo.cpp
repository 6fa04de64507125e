#include <numeric>
#include <set>

#include "doctest.h"

#include "cca/field.hpp"
#include "cca/group_expr.hpp"
#include "cca/zoo.hpp"
#include "oracles/closure.hpp"

using namespace cca;

namespace
{

std::vector<unsigned> supported_field_orders()
{
  std::vector<unsigned> qs;
  for (unsigned q = 2; q <= 32; ++q)
    if (prime_power(q).first)
      qs.push_back(q);
  return qs;
}

bool has_order4_by_closure(PermutationGroup const &g)
{
  for (auto const &x : oracle::closure(g.degree(), g.generators()))
    if (x.order() == 4)
      return true;
  return false;
}

} // namespace

TEST_CASE("field axioms hold exhaustively")
{
  for (unsigned q : supported_field_orders()) {
    CAPTURE(q);
    auto f = FieldTable::make(q);
    CHECK(f.order() == q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a)
        CHECK(f.mul(a, f.inv(a)) == 1);
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (a && b)
          CHECK(f.mul(a, b) != 0);
        for (unsigned c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    std::set<unsigned> powers;
    for (unsigned k = 0; k + 1 < q; ++k)
      powers.insert(f.pow(f.primitive(), k));
    CHECK(powers.size() == q - 1);
  }
  CHECK_THROWS_AS(FieldTable::make(6), InvalidArgument);
  CHECK_THROWS_AS(FieldTable::make(49), InvalidArgument);
}

TEST_CASE("PSL(2,q) orders and degrees")
{
  for (unsigned q : supported_field_orders()) {
    if (q < 4)
      continue;
    CAPTURE(q);
    auto g = zoo::psl2(q);
    CHECK(g.degree() == q + 1);
    std::uint64_t expected = std::uint64_t{q} * (q - 1) * (q + 1) / std::gcd(2u, q - 1);
    CHECK(g.order() == expected);
  }
  auto psl27 = zoo::psl2(7);
  CHECK(psl27.elements().size() == 168);
  CHECK(oracle::closure(8, psl27.generators()).size() == 168);
  CHECK(oracle::closure(18, zoo::psl2(17).generators()).size() == 2448);
}

TEST_CASE("order-4 elements in PSL(2,q) follow q mod 8")
{
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u}) {
    CAPTURE(q);
    bool expected = q % 2 == 1 && (q % 8 == 1 || q % 8 == 7);
    CHECK(zoo::has_element_of_order4(zoo::psl2(q)) == expected);
  }
  CHECK_FALSE(zoo::has_element_of_order4(zoo::psl2(13)));
  CHECK_FALSE(zoo::has_element_of_order4(zoo::psl2(16)));
  CHECK(zoo::has_element_of_order4(zoo::symmetric(4)));
  CHECK_FALSE(zoo::has_element_of_order4(zoo::alternating(5)));
  for (unsigned q : {5u, 7u, 9u, 11u})
    CHECK(zoo::has_element_of_order4(zoo::psl2(q)) == has_order4_by_closure(zoo::psl2(q)));
}

TEST_CASE("standard families")
{
  CHECK(zoo::symmetric(1).order() == 1);
  CHECK(zoo::symmetric(5).order() == 120);
  CHECK(zoo::alternating(5).order() == 60);
  CHECK(zoo::alternating(8).order() == 20160);
  CHECK(zoo::alternating(2).order() == 1);
  CHECK(zoo::alternating(3).order() == 3);
  CHECK(zoo::cyclic(7).order() == 7);
  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    auto d = zoo::dihedral(n);
    CHECK(d.order() == 2 * n);
    auto rot = zoo::dihedral_rotation(n);
    auto inv = rot.inverse();
    PermutationGroup rotations(d.degree(), {rot});
    std::uint64_t reflections = 0;
    for (auto const &x : d.elements())
      if (!rotations.contains(x) && conjugate(rot, x) == inv)
        ++reflections;
    CHECK(reflections == n);
  }
}

TEST_CASE("stabilizers")
{
  auto a6 = zoo::alternating(6);
  auto h = zoo::point_stabilizer(a6, 0);
  CHECK(h.order() == 60);
  CHECK(is_subgroup(a6, h));
  for (auto const &x : h.generators())
    CHECK(x[0] == 0);

  auto s5 = zoo::symmetric(5);
  std::vector<Point> pts{3, 4};
  CHECK(zoo::pointwise_stabilizer(s5, pts).order() == 6);
  auto setwise = zoo::setwise_stabilizer(s5, pts);
  CHECK(setwise.order() == 12);
  CHECK(setwise.contains(parse_cycles("(1 2)(4 5)", 5)));
  CHECK_FALSE(zoo::pointwise_stabilizer(s5, pts).contains(parse_cycles("(1 2)(4 5)", 5)));

  int filtered = 0;
  for (auto const &x : s5.elements())
    if ((x[3] == 3 || x[3] == 4) && (x[4] == 3 || x[4] == 4))
      ++filtered;
  CHECK(filtered == 12);

  CHECK(zoo::point_stabilizer(zoo::psl2(7), 7).order() == 21);
}

TEST_CASE("cyclic subgroups and normalizers")
{
  auto s3 = zoo::symmetric(3);
  auto c3 = zoo::cyclic_subgroups_of_order(s3, 3);
  REQUIRE(c3.size() == 1);
  CHECK(zoo::normalizer_bruteforce(s3, c3.front()).order() == 6);
  CHECK(zoo::cyclic_subgroups_of_order(s3, 2).size() == 3);

  auto psl = zoo::psl2(17);
  auto nine = zoo::cyclic_subgroups_of_order(psl, 9);
  auto eight = zoo::cyclic_subgroups_of_order(psl, 8);
  REQUIRE_FALSE(nine.empty());
  REQUIRE_FALSE(eight.empty());
  // 2448 / 18 and 2448 / 16 conjugates
  CHECK(nine.size() == 136);
  CHECK(eight.size() == 153);
  CHECK(zoo::normalizer_bruteforce(psl, nine.front()).order() == 18);
  CHECK(zoo::normalizer_bruteforce(psl, eight.front()).order() == 16);
}

TEST_CASE("direct products and involution counts")
{
  std::vector<PermutationGroup> factors{zoo::symmetric(3), zoo::cyclic(2)};
  auto p = zoo::direct_product(factors);
  CHECK(p.degree() == 5);
  CHECK(p.order() == 12);
  CHECK(zoo::involution_count(p) == 7);
  CHECK(zoo::involution_count(zoo::symmetric(4)) == 9);
  CHECK(zoo::involution_count(zoo::alternating(5)) == 15);
}

TEST_CASE("bundled sporadic data")
{
  auto names = zoo::sporadic_names();
  REQUIRE(std::find(names.begin(), names.end(), "M11") != names.end());
  auto m11 = zoo::sporadic("M11");
  CHECK(m11.group.degree() == 11);
  CHECK(m11.group.order() == 7920);
  CHECK(m11.group.elements().size() == 7920);
  CHECK(oracle::closure(11, m11.group.generators()).size() == 7920);
  CHECK_THROWS_AS(zoo::sporadic("M99"), InvalidArgument);
}

TEST_CASE("group expressions parse, print and construct")
{
  std::vector<std::pair<std::string, std::string>> corpus{
    {"S3", "S3"},
    {"A 5", "A5"},
    {"C7", "C7"},
    {"D4", "D4"},
    {"PSL2(13)", "PSL2(13)"},
    {"PSL2( 17 )", "PSL2(17)"},
    {"S3 x C2", "S3 x C2"},
    {"S3xC2xC2", "S3 x C2 x C2"},
    {"perm:5:(1 2 3),(1,2)", "perm:5:(1 2 3),(1 2)"},
    {"perm:4:(1 2)(3 4), (1 3)(2 4)", "perm:4:(1 2)(3 4),(1 3)(2 4)"},
    {"perm:3:()", "perm:3:()"},
    {"higman:n=8,seed=42", "higman:n=8,seed=42"},
    {"higman:n=6", "higman:n=6,seed=0"},
    {"higman:params.json", "higman:params.json"},
    {"A4 x higman:n=3,seed=1", "A4 x higman:n=3,seed=1"},
  };
  for (auto const &[text, normal] : corpus) {
    CAPTURE(text);
    auto e = parse_group_expr(text);
    CHECK(print(e) == normal);
    CHECK(parse_group_expr(print(e)) == e);
  }

  for (std::string bad : {"", "S", "S0", "Q8", "PSL2(13", "perm:3:", "perm:3:(1 4)", "S3 x", "S3 C2",
                          "higman:n=2", "higman:n=6,seed", "perm:3(1 2)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_expr(bad), ParseError);
  }

  CHECK(construct("A5").group.order() == 60);
  CHECK(construct("PSL2(7)").group.degree() == 8);
  CHECK(construct("S3 x C2 x C2").group.order() == 24);
  CHECK(construct("D5").group.order() == 10);
  CHECK(construct("perm:4:(1 2)(3 4),(1 3)(2 4)").group.order() == 4);
  auto h = construct("higman:n=6,seed=1");
  CHECK(h.group.order() == 64);
  REQUIRE(h.higman);
  CHECK(h.higman->order() == 64);
  CHECK(construct("A4 x higman:n=3,seed=1").group.order() == 96);
  CHECK_THROWS_AS(construct("PSL2(6)"), InvalidArgument);
  CHECK_THROWS_AS(construct("higman:n=13,seed=0"), LimitExceeded);
  CHECK_THROWS_AS(construct("higman:/nonexistent/params.json"), ParseError);
}
