#include "cca/cayley.hpp"

#include <algorithm>
#include <set>

namespace cca
{

void check_connection_set(std::span<Permutation const> s)
{
  std::set<Permutation> members(s.begin(), s.end());
  if (members.size() != s.size())
    throw InvalidArgument("connection set contains duplicates");
  for (auto const &x : s) {
    if (x.is_identity())
      throw InvalidArgument("connection set contains the identity");
    if (!members.count(x.inverse()))
      throw InvalidArgument("connection set is not inverse-closed: missing inverse of " +
                            x.str());
  }
}

bool generates(PermutationGroup const &group, std::span<Permutation const> s)
{
  return PermutationGroup(group.degree(), {s.begin(), s.end()}).order() == group.order();
}

ColouredCayleyGraph ColouredCayleyGraph::build(PermutationGroup const &group,
                                               std::span<Permutation const> connection_set,
                                               Limits const &limits)
{
  if (group.order() > limits.graph)
    throw LimitExceeded("Cayley graph on " + std::to_string(group.order()) +
                        " vertices exceeds the graph limit " + std::to_string(limits.graph));
  check_connection_set(connection_set);

  auto data = std::make_shared<VertexData>();
  data->group = group;
  data->elements = group.elements(limits.graph);
  data->index.reserve(data->elements.size());
  for (Vertex v = 0; v < data->elements.size(); ++v)
    data->index.emplace(data->elements[v], v);

  std::vector<std::pair<Vertex, Permutation>> sorted;
  for (auto const &s : connection_set) {
    if (s.degree() != group.degree() || !group.contains(s))
      throw InvalidArgument("connection set element " + s.str() + " is not in the group");
    sorted.emplace_back(data->index.at(s), s);
  }
  std::sort(sorted.begin(), sorted.end());

  ColouredCayleyGraph g;
  g._vertices = std::move(data);
  for (auto &[v, s] : sorted) {
    g._s_vertex.push_back(v);
    g._connection.push_back(std::move(s));
  }
  g.finish_colours();

  auto const &elements = g._vertices->elements;
  auto const &index = g._vertices->index;
  g._lmul.assign(g._connection.size(), std::vector<Vertex>(elements.size()));
  for (std::size_t k = 0; k < g._connection.size(); ++k) {
    for (Vertex v = 0; v < elements.size(); ++v)
      g._lmul[k][v] = index.at(g._connection[k] * elements[v]);
  }
  return g;
}

ColouredCayleyGraph ColouredCayleyGraph::restrict_to(std::span<std::size_t const> positions) const
{
  std::vector<std::size_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("restrict_to: repeated connection-set position");
  for (std::size_t k : sorted) {
    if (k >= valency())
      throw InvalidArgument("restrict_to: position out of range");
    if (!std::binary_search(sorted.begin(), sorted.end(), _s_inverse[k]))
      throw InvalidArgument("restrict_to: subset is not inverse-closed");
  }

  ColouredCayleyGraph g;
  g._vertices = _vertices;
  for (std::size_t k : sorted) {
    g._s_vertex.push_back(_s_vertex[k]);
    g._connection.push_back(_connection[k]);
    g._lmul.push_back(_lmul[k]);
  }
  g.finish_colours();
  return g;
}

void ColouredCayleyGraph::finish_colours()
{
  ColouredCayleyGraph &g = *this;

  std::size_t const k_count = g._connection.size();
  g._s_inverse.resize(k_count);
  g._colour_of.assign(k_count, SIZE_MAX);
  for (std::size_t k = 0; k < k_count; ++k) {
    Vertex inv = g._vertices->index.at(g._connection[k].inverse());
    g._s_inverse[k] = *g.s_position(inv);
  }
  // members are visited by increasing vertex, so classes come out ordered
  // by their smallest member
  for (std::size_t k = 0; k < k_count; ++k) {
    if (g._colour_of[k] != SIZE_MAX)
      continue;
    std::vector<std::size_t> members{k};
    if (g._s_inverse[k] != k)
      members.push_back(g._s_inverse[k]);
    for (std::size_t m : members)
      g._colour_of[m] = g._colours.size();
    g._colours.push_back(std::move(members));
  }
}

std::optional<Vertex> ColouredCayleyGraph::vertex_of(Permutation const &p) const
{
  auto it = _vertices->index.find(p);
  if (it == _vertices->index.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ColouredCayleyGraph::s_position(Vertex v) const
{
  auto it = std::lower_bound(_s_vertex.begin(), _s_vertex.end(), v);
  if (it == _s_vertex.end() || *it != v)
    return std::nullopt;
  return static_cast<std::size_t>(it - _s_vertex.begin());
}

Vertex ColouredCayleyGraph::multiply(Vertex u, Vertex v) const
{
  auto const &els = _vertices->elements;
  return _vertices->index.at(els[u] * els[v]);
}

bool ColouredCayleyGraph::is_connected() const
{
  std::vector<bool> seen(vertex_count(), false);
  std::vector<Vertex> queue{0};
  seen[0] = true;
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    for (auto const &row : _lmul) {
      Vertex w = row[queue[pos]];
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == vertex_count();
}

bool ColouredCayleyGraph::is_colour_preserving(VertexMap const &map) const
{
  if (map.size() != vertex_count())
    return false;
  std::vector<bool> hit(vertex_count(), false);
  for (Vertex img : map) {
    if (img >= vertex_count() || hit[img])
      return false;
    hit[img] = true;
  }
  for (std::size_t k = 0; k < valency(); ++k) {
    auto const &cls = _colours[_colour_of[k]];
    for (Vertex v = 0; v < vertex_count(); ++v) {
      Vertex target = map[_lmul[k][v]];
      bool ok = std::any_of(cls.begin(), cls.end(),
                            [&](std::size_t m) { return _lmul[m][map[v]] == target; });
      if (!ok)
        return false;
    }
  }
  return true;
}

VertexMap ColouredCayleyGraph::right_translation(Vertex g) const
{
  VertexMap map(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v)
    map[v] = multiply(v, g);
  return map;
}

std::vector<std::tuple<Vertex, Vertex, std::size_t>> ColouredCayleyGraph::edges() const
{
  std::set<std::tuple<Vertex, Vertex, std::size_t>> unique;
  for (std::size_t k = 0; k < valency(); ++k) {
    for (Vertex v = 0; v < vertex_count(); ++v) {
      Vertex w = _lmul[k][v];
      unique.emplace(std::min(v, w), std::max(v, w), _colour_of[k]);
    }
  }
  return {unique.begin(), unique.end()};
}

nlohmann::ordered_json ColouredCayleyGraph::to_json() const
{
  nlohmann::ordered_json j;
  auto vertices = nlohmann::ordered_json::array();
  for (auto const &x : _vertices->elements)
    vertices.push_back(x.str());
  j["vertices"] = std::move(vertices);

  auto edge_list = nlohmann::ordered_json::array();
  for (auto const &[u, v, c] : edges())
    edge_list.push_back({u, v, c});
  j["edges"] = std::move(edge_list);

  auto colours = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < _colours.size(); ++c) {
    auto members = nlohmann::ordered_json::array();
    for (std::size_t k : _colours[c])
      members.push_back(_connection[k].str());
    colours.push_back({{"id", c}, {"elements", std::move(members)}});
  }
  j["colours"] = std::move(colours);
  return j;
}

} // namespace cca
