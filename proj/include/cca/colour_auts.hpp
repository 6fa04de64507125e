#ifndef CCA_COLOUR_AUTS_HPP
#define CCA_COLOUR_AUTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "cca/cayley.hpp"

namespace cca
{

/**
 * The colour-preserving automorphisms of a Cayley graph that fix the
 * identity vertex, as a stabilizer chain along the breadth-first spanning
 * tree. Once a vertex's parent is fixed, the vertex can only go to itself
 * or to the other neighbour of its parent in its colour, so every level of
 * the chain has orbit length 1 or 2.
 */
struct VertexStabilizer
{
  /// Tree vertices whose level has orbit length 2, in tree order.
  std::vector<Vertex> base;
  /// generators[i] fixes every vertex before base[i] in tree order and moves base[i].
  std::vector<VertexMap> generators;
  unsigned log2_order = 0;
  /// Every element (identity first), when the order is at most the enumeration cap.
  std::optional<std::vector<VertexMap>> elements;

  /// Throws LimitExceeded if the order does not fit in 64 bits.
  std::uint64_t order() const;
};

struct CCAVerdict
{
  bool is_cca = false;
  std::uint64_t group_order = 0;
  unsigned stab1_log2 = 0;          ///< |stab1| = 2^stab1_log2
  std::uint64_t aut_pm1_order = 0;  ///< from the independent sign-choice search
  std::optional<VertexMap> witness; ///< first strong generator that is not a group automorphism

  /// 2^stab1_log2; throws LimitExceeded beyond 64 bits.
  std::uint64_t stab1_order() const;
  /// |Aut_c| = |G| * |stab1|; throws LimitExceeded beyond 64 bits.
  std::uint64_t autc_order() const;
};

/**
 * Builds the chain level by level: for each tree vertex, a depth-first
 * search looks for one colour-preserving map that fixes every earlier
 * vertex and swaps it to its alternative. The search assigns vertices in
 * tree order, taking the image of a child s*v among the neighbours of the
 * image of v in the colour of s, and backtracks on a repeated image or on
 * an edge to an assigned vertex whose colour is not preserved.
 *
 * When 2^log2_order <= enumeration_cap the elements are also listed by a
 * full depth-first enumeration, and Error is thrown if their number
 * disagrees with the chain. Throws InvalidArgument if the graph is
 * disconnected.
 */
VertexStabilizer stab1(ColouredCayleyGraph const &graph, std::uint64_t enumeration_cap = 4096);

/// Filters all (|G|-1)! bijections fixing vertex 0, in lexicographic order. Throws LimitExceeded if |G| > 8.
std::vector<VertexMap> stab1_oracle(ColouredCayleyGraph const &graph);

/**
 * Aut_{+-1}(G, S) as vertex maps: for each choice of s -> s or s^-1 on the
 * colour classes, extends the assignment along the spanning tree and keeps
 * it if it is a bijective homomorphism. Throws InvalidArgument unless S
 * generates G.
 */
std::vector<VertexMap> aut_pm1(ColouredCayleyGraph const &graph);

/// Same, building Cay(G, S) first.
std::vector<VertexMap> aut_pm1(PermutationGroup const &group, std::span<Permutation const> s,
                               Limits const &limits = {});

/**
 * For a colour-preserving map fixing the identity: does it satisfy
 * map(s*v) = map(s)*map(v) for all s in S and all vertices v?
 */
bool is_group_automorphism(ColouredCayleyGraph const &graph, VertexMap const &map);

/**
 * Decides whether Cay(G, S) is CCA: it is iff every identity-fixing
 * colour-preserving automorphism is a group automorphism, and it suffices
 * to test the strong generators of stab1. Aut_{+-1} is found separately
 * and must lie in stab1, with |Aut_{+-1}| = |stab1| exactly when the graph
 * is CCA; Error is thrown if either fails. Throws InvalidArgument if the
 * graph is disconnected.
 */
CCAVerdict is_cca_graph(ColouredCayleyGraph const &graph);

nlohmann::ordered_json to_json(CCAVerdict const &verdict);

enum class GroupVerdict
{
  cca,
  non_cca,
  unknown
};

char const *to_string(GroupVerdict v);

struct GroupCCAResult
{
  GroupVerdict verdict = GroupVerdict::unknown;
  std::uint64_t candidate_sets = 0; ///< 2^k for k inverse-pair classes, empty set included
  std::uint64_t sets_checked = 0;
  std::uint64_t connected_sets = 0;
  std::optional<std::vector<Permutation>> witness_s;
  std::optional<CCAVerdict> witness_verdict;
};

struct ExhaustiveOptions
{
  std::uint64_t budget = std::uint64_t{1} << 22; ///< max connection sets examined
  unsigned threads = 1;
  Limits limits{};
};

/**
 * Examines every inverse-closed identity-free S in G (the empty set
 * included; it is connected only for the trivial group). Classes
 * {x, x^-1} are numbered by their smallest element index and bit i of the
 * subset mask selects class i; masks are examined in increasing order, and
 * the witness is the smallest mask giving a connected non-CCA graph. With
 * several threads the masks are processed in blocks and merged so that the
 * result, counters included, equals the sequential run.
 */
GroupCCAResult is_cca_group_exhaustive(PermutationGroup const &group,
                                       ExhaustiveOptions const &options = {});

} // namespace cca

#endif // CCA_COLOUR_AUTS_HPP
