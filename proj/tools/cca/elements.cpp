#include "elements.hpp"

#include <cctype>
#include <charconv>

#include "cca/zoo.hpp"

namespace cca::cli
{

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

unsigned parse_uint(std::string_view s, std::string_view what)
{
  s = trim(s);
  unsigned v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
    throw ParseError("expected a number for " + std::string(what) + ", got '" + std::string(s) + "'");
  return v;
}

std::vector<Point> parse_points(std::string_view list, std::size_t degree)
{
  std::vector<Point> points;
  for (auto const &item : split_top_level(list)) {
    unsigned p = parse_uint(item, "a point");
    if (p < 1 || p > degree)
      throw InvalidArgument("point " + std::to_string(p) + " is outside 1.." + std::to_string(degree));
    points.push_back(p - 1);
  }
  if (points.empty())
    throw ParseError("expected at least one point");
  return points;
}

} // namespace

std::vector<std::string> split_top_level(std::string_view text)
{
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    auto piece = trim(text.substr(start, end - start));
    if (!piece.empty())
      out.emplace_back(piece);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(')
      ++depth;
    else if (text[i] == ')')
      --depth;
    else if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

Permutation ElementCodec::parse(std::string_view text) const
{
  text = trim(text);
  auto const &g = _group.group;
  Permutation p = (_group.higman && !text.empty() && text.front() != '(') ? parse_word(text)
                                                                          : parse_cycles(text, g.degree());
  if (!g.contains(p))
    throw InvalidArgument(p.str() + " is not an element of " + _group.name);
  return p;
}

Permutation ElementCodec::parse_word(std::string_view text) const
{
  auto const &h = *_group.higman;
  higman::Element x = h.identity();
  if (text == "1")
    return h.right_action(x);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto token = trim(text.substr(pos, end - pos));
    if (token.size() < 2 || (token[0] != 'g' && token[0] != 'h'))
      throw ParseError("expected a generator g<i> or h<j> in '" + std::string(text) + "'");
    unsigned exponent = 1;
    auto caret = token.find('^');
    if (caret != std::string_view::npos) {
      exponent = parse_uint(token.substr(caret + 1), "an exponent");
      token = token.substr(0, caret);
    }
    unsigned i = parse_uint(token.substr(1), "a generator index");
    unsigned count = token[0] == 'g' ? h.params().r() : h.params().s();
    if (i < 1 || i > count)
      throw InvalidArgument(std::string(token) + " is not a generator of this group");
    x = h.multiply(x, h.power(token[0] == 'g' ? h.g(i) : h.h(i), exponent));
    pos = end + 1;
  }
  return h.right_action(x);
}

std::vector<Permutation> ElementCodec::parse_list(std::vector<std::string> const &items) const
{
  std::vector<Permutation> out;
  for (auto const &item : items)
    for (auto const &piece : split_top_level(item))
      out.push_back(parse(piece));
  return out;
}

PermutationGroup parse_subgroup(std::string_view spec, ConstructedGroup const &group, Limits const &limits)
{
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("subgroup spec '" + std::string(spec) + "' needs the form KIND:ARGS");
  auto kind = trim(spec.substr(0, colon));
  auto args = spec.substr(colon + 1);
  auto const &g = group.group;

  if (kind == "point") {
    auto points = parse_points(args, g.degree());
    if (points.size() != 1)
      throw ParseError("point: takes one point");
    return zoo::point_stabilizer(g, points[0]);
  }
  if (kind == "pointwise")
    return zoo::pointwise_stabilizer(g, parse_points(args, g.degree()));
  if (kind == "setwise")
    return zoo::setwise_stabilizer(g, parse_points(args, g.degree()), limits.enumeration);
  if (kind == "normalizer") {
    unsigned m = parse_uint(args, "a cyclic subgroup order");
    auto cyclic = zoo::cyclic_subgroups_of_order(g, m, limits.enumeration);
    if (cyclic.empty())
      throw InvalidArgument(group.name + " has no cyclic subgroup of order " + std::to_string(m));
    return zoo::normalizer_bruteforce(g, cyclic.front(), limits.enumeration);
  }
  if (kind == "gens") {
    ElementCodec codec(group);
    return subgroup(g, codec.parse_list({std::string(args)}));
  }
  throw ParseError("unknown subgroup kind '" + std::string(kind) +
                   "' (point, pointwise, setwise, normalizer, gens)");
}

} // namespace cca::cli
