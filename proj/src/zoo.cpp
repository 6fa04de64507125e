#include "cca/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

#include "cca/embedded_data.hpp"
#include "cca/field.hpp"

namespace cca::zoo
{

namespace
{

Permutation cycle_on(std::size_t degree, std::vector<Point> points)
{
  return Permutation::from_cycles(degree, {std::move(points)});
}

std::vector<Point> range(Point first, Point last)
{
  std::vector<Point> v(last - first);
  std::iota(v.begin(), v.end(), first);
  return v;
}

} // namespace

PermutationGroup symmetric(unsigned n)
{
  if (n < 1)
    throw InvalidArgument("Sym(n) needs n >= 1");
  if (n == 1)
    return PermutationGroup::trivial(1);
  return {n, {cycle_on(n, {0, 1}), cycle_on(n, range(0, n))}};
}

PermutationGroup alternating(unsigned n)
{
  if (n < 1)
    throw InvalidArgument("Alt(n) needs n >= 1");
  if (n < 3)
    return PermutationGroup::trivial(n);
  if (n == 3)
    return {3, {cycle_on(3, {0, 1, 2})}};
  auto long_cycle = n % 2 ? cycle_on(n, range(0, n)) : cycle_on(n, range(1, n));
  return {n, {cycle_on(n, {0, 1, 2}), long_cycle}};
}

PermutationGroup cyclic(unsigned n)
{
  if (n < 1)
    throw InvalidArgument("C(n) needs n >= 1");
  if (n == 1)
    return PermutationGroup::trivial(1);
  return {n, {cycle_on(n, range(0, n))}};
}

Permutation dihedral_rotation(unsigned n)
{
  if (n < 1)
    throw InvalidArgument("D(n) needs n >= 1");
  if (n == 1)
    return Permutation(2);
  if (n == 2)
    return Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  return cycle_on(n, range(0, n));
}

PermutationGroup dihedral(unsigned n)
{
  if (n < 1)
    throw InvalidArgument("D(n) needs n >= 1");
  if (n == 1)
    return {2, {cycle_on(2, {0, 1})}};
  if (n == 2)
    return {4, {dihedral_rotation(2), Permutation::from_cycles(4, {{0, 2}, {1, 3}})}};

  std::vector<Point> reflection(n);
  for (Point i = 0; i < n; ++i)
    reflection[i] = (n - i) % n;
  return {n, {dihedral_rotation(n), Permutation(reflection)}};
}

std::uint64_t psl2_order(unsigned q)
{
  std::uint64_t const qq = q;
  return qq * (qq * qq - 1) / (q % 2 ? 2 : 1);
}

PermutationGroup psl2(unsigned q, unsigned max_q)
{
  auto field = FieldTable::make(q, max_q);
  std::size_t const degree = q + 1;
  Point const infinity = q;
  unsigned const square = field.mul(field.primitive(), field.primitive());

  std::vector<Point> translate(degree), scale(degree), invert(degree);
  for (Point x = 0; x < q; ++x) {
    translate[x] = field.add(x, 1);
    scale[x] = field.mul(square, x);
    invert[x] = x == 0 ? infinity : field.neg(field.inv(x));
  }
  translate[infinity] = infinity;
  scale[infinity] = infinity;
  invert[infinity] = 0;

  PermutationGroup g(degree, {Permutation(translate), Permutation(scale), Permutation(invert)});
  if (g.order() != psl2_order(q))
    throw Error("PSL(2," + std::to_string(q) + ") generated a group of order " +
                std::to_string(g.order()));
  return g;
}

PermutationGroup direct_product(std::span<PermutationGroup const> factors)
{
  if (factors.empty())
    return PermutationGroup::trivial(1);
  std::size_t degree = 0;
  for (auto const &f : factors)
    degree += f.degree();

  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (auto const &f : factors) {
    for (auto const &g : f.generators()) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (Point i = 0; i < f.degree(); ++i)
        images[offset + i] = static_cast<Point>(offset + g[i]);
      gens.emplace_back(std::move(images));
    }
    offset += f.degree();
  }
  return {degree, std::move(gens)};
}

std::vector<std::string> sporadic_names()
{
  auto table = nlohmann::json::parse(embedded::sporadic_generators_json);
  std::vector<std::string> names;
  for (auto const &entry : table.at("groups"))
    names.push_back(entry.at("name").get<std::string>());
  return names;
}

SporadicGroup sporadic(std::string const &name)
{
  auto table = nlohmann::json::parse(embedded::sporadic_generators_json);
  for (auto const &entry : table.at("groups")) {
    if (entry.at("name").get<std::string>() != name)
      continue;
    auto degree = entry.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (auto const &text : entry.at("generators"))
      gens.push_back(parse_cycles(text.get<std::string>(), degree));
    SporadicGroup result{name, entry.at("provenance").get<std::string>(),
                         PermutationGroup(degree, std::move(gens))};
    auto expected = entry.at("order").get<std::uint64_t>();
    if (result.group.order() != expected)
      throw Error("bundled generators for " + name + " give order " +
                  std::to_string(result.group.order()) + ", expected " + std::to_string(expected));
    return result;
  }
  throw InvalidArgument("no bundled generators for " + name);
}

bool has_element_of_order4(PermutationGroup const &g, std::size_t limit)
{
  for (auto const &x : g.generators())
    if (x.order() == 4)
      return true;
  auto elements = g.elements(limit);
  return std::any_of(elements.begin(), elements.end(),
                     [](Permutation const &x) { return x.order() == 4; });
}

std::uint64_t involution_count(PermutationGroup const &g, std::size_t limit)
{
  auto elements = g.elements(limit);
  return static_cast<std::uint64_t>(std::count_if(
    elements.begin(), elements.end(), [](Permutation const &x) { return x.order() == 2; }));
}

PermutationGroup point_stabilizer(PermutationGroup const &g, Point p)
{
  if (p >= g.degree())
    throw InvalidArgument("point " + std::to_string(p + 1) + " outside the group's degree");

  // Schreier's lemma over a transversal of the orbit of p
  std::vector<Point> orbit{p};
  std::vector<std::optional<Permutation>> rep(g.degree());
  rep[p] = g.identity();
  for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
    for (auto const &s : g.generators()) {
      Point image = s[orbit[pos]];
      if (!rep[image]) {
        rep[image] = *rep[orbit[pos]] * s;
        orbit.push_back(image);
      }
    }
  }
  std::vector<Permutation> schreier;
  for (Point beta : orbit) {
    for (auto const &s : g.generators()) {
      Permutation h = *rep[beta] * s * rep[s[beta]]->inverse();
      if (!h.is_identity())
        schreier.push_back(std::move(h));
    }
  }
  return generated_by(g.degree(), schreier);
}

PermutationGroup pointwise_stabilizer(PermutationGroup const &g, std::span<Point const> points)
{
  PermutationGroup result = g;
  for (Point p : points)
    result = point_stabilizer(result, p);
  return result;
}

PermutationGroup setwise_stabilizer(PermutationGroup const &g, std::span<Point const> points,
                                    std::size_t limit)
{
  std::set<Point> set;
  for (Point p : points) {
    if (p >= g.degree())
      throw InvalidArgument("point " + std::to_string(p + 1) + " outside the group's degree");
    set.insert(p);
  }
  std::vector<Permutation> keep;
  for (auto const &x : g.elements(limit)) {
    if (std::all_of(set.begin(), set.end(), [&](Point p) { return set.count(x[p]) > 0; }))
      keep.push_back(x);
  }
  return generated_by(g.degree(), keep);
}

std::vector<PermutationGroup> cyclic_subgroups_of_order(PermutationGroup const &g, std::uint64_t m,
                                                        std::size_t limit)
{
  std::vector<PermutationGroup> result;
  std::set<Permutation> covered;
  for (auto const &x : g.elements(limit)) {
    if (x.order() != m || covered.count(x))
      continue;
    // record every generator of <x> so the subgroup is listed once
    for (std::uint64_t k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1)
        covered.insert(x.pow(static_cast<std::int64_t>(k)));
    result.emplace_back(g.degree(), std::vector<Permutation>{x});
  }
  return result;
}

PermutationGroup normalizer_bruteforce(PermutationGroup const &g, PermutationGroup const &h,
                                       std::size_t limit)
{
  std::vector<Permutation> keep;
  for (auto const &x : g.elements(limit)) {
    bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                  [&](Permutation const &y) { return h.contains(conjugate(y, x)); });
    if (normalizes)
      keep.push_back(x);
  }
  return generated_by(g.degree(), keep);
}

} // namespace cca::zoo
