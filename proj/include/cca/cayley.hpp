#ifndef CCA_CAYLEY_HPP
#define CCA_CAYLEY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "cca/perm_group.hpp"

namespace cca
{

using Vertex = std::uint32_t;

/// A vertex permutation: map[v] is the image of vertex v.
using VertexMap = std::vector<Vertex>;

/**
 * Cay(G, S) with the edge {g, sg} coloured by the class {s, s^-1}.
 *
 * Vertices are the elements of G in enumeration order, so vertex 0 is the
 * identity. The connection set is stored sorted by vertex index, and colour
 * classes are numbered by their smallest member. An involution s forms a
 * singleton class and contributes a single edge {g, sg}.
 */
class ColouredCayleyGraph
{
public:
  /**
   * Throws InvalidArgument if S contains the identity or a non-element of G,
   * has duplicates or is not inverse-closed; LimitExceeded if |G| exceeds
   * limits.graph.
   */
  static ColouredCayleyGraph build(PermutationGroup const &group,
                                   std::span<Permutation const> connection_set,
                                   Limits const &limits = {});

  /**
   * The graph on the same group whose connection set is the given subset of
   * this graph's connection set (positions, any order). Vertex data is
   * shared, so this is cheap. Throws InvalidArgument if the subset is not
   * inverse-closed or repeats a position.
   */
  ColouredCayleyGraph restrict_to(std::span<std::size_t const> positions) const;

  PermutationGroup const &group() const { return _vertices->group; }
  std::size_t vertex_count() const { return _vertices->elements.size(); }
  Permutation const &element(Vertex v) const { return _vertices->elements[v]; }
  std::span<Permutation const> elements() const { return _vertices->elements; }
  std::optional<Vertex> vertex_of(Permutation const &p) const;

  /// Connection set, sorted by vertex index.
  std::span<Permutation const> connection_set() const { return _connection; }
  std::size_t valency() const { return _connection.size(); }
  /// Vertex of the k-th connection element.
  Vertex s_vertex(std::size_t k) const { return _s_vertex[k]; }
  /// Position in the connection set of the inverse of the k-th element.
  std::size_t s_inverse(std::size_t k) const { return _s_inverse[k]; }
  /// Position in the connection set of a vertex, if it is one.
  std::optional<std::size_t> s_position(Vertex v) const;

  std::size_t colour_count() const { return _colours.size(); }
  /// Members of a colour class as positions in the connection set.
  std::span<std::size_t const> colour_class(std::size_t c) const { return _colours[c]; }
  std::size_t colour_of(std::size_t k) const { return _colour_of[k]; }

  /// Vertex of s_k * element(v).
  Vertex left_multiply(std::size_t k, Vertex v) const { return _lmul[k][v]; }

  /// Vertex of element(u) * element(v).
  Vertex multiply(Vertex u, Vertex v) const;

  /// Breadth-first reachability from the identity.
  bool is_connected() const;

  /// True iff the map is a bijection sending every edge to an edge of the same colour.
  bool is_colour_preserving(VertexMap const &map) const;

  /// The right translation v -> v*element(g).
  VertexMap right_translation(Vertex g) const;

  /// Each undirected edge once as (u, v, colour) with u < v (u == v never occurs).
  std::vector<std::tuple<Vertex, Vertex, std::size_t>> edges() const;

  /// {vertices, edges, colours} dump with elements in cycle notation.
  nlohmann::ordered_json to_json() const;

private:
  struct VertexData
  {
    PermutationGroup group;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, Vertex, PermutationHash> index;
  };

  std::shared_ptr<VertexData const> _vertices;
  std::vector<Permutation> _connection;
  std::vector<Vertex> _s_vertex;
  std::vector<std::size_t> _s_inverse;
  std::vector<std::vector<std::size_t>> _colours;
  std::vector<std::size_t> _colour_of;
  std::vector<std::vector<Vertex>> _lmul;

  void finish_colours();
};

/// <S> = G, decided with the stabilizer chain.
bool generates(PermutationGroup const &group, std::span<Permutation const> s);

/// Throws InvalidArgument unless S is identity-free, duplicate-free and inverse-closed.
void check_connection_set(std::span<Permutation const> s);

} // namespace cca

#endif // CCA_CAYLEY_HPP
