#ifndef CCA_PERM_GROUP_HPP
#define CCA_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cca/error.hpp"
#include "cca/permutation.hpp"

namespace cca
{

/**
 * One level of a stabilizer chain: the orbit of `base_point` under the
 * pointwise stabilizer of the earlier base points, with an explicit
 * transversal (reps[i] maps base_point to orbit[i]).
 */
struct ChainLevel
{
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<Permutation> reps;
  std::vector<Permutation> inverse_reps;
  std::vector<std::int32_t> orbit_index; ///< point -> position in orbit, or -1
};

/**
 * Permutation group given by generators, with a base and strong generating
 * set built by deterministic Schreier-Sims at construction time. Base points
 * are chosen as the smallest point moved by the generator under
 * consideration, so the chain (and hence element enumeration order) depends
 * only on the generator list.
 *
 * Instances are immutable and can be shared freely between threads.
 */
class PermutationGroup
{
public:
  using element_type = Permutation;

  PermutationGroup() : PermutationGroup(1, {}) {}
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermutationGroup trivial(std::size_t degree) { return {degree, {}}; }

  std::size_t degree() const { return _degree; }
  std::span<Permutation const> generators() const { return _generators; }
  Permutation identity() const { return Permutation(_degree); }

  std::uint64_t order() const { return _order; }
  bool contains(Permutation const &p) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  std::span<ChainLevel const> chain() const { return _chain; }

  /**
   * All elements, each exactly once, identity first. The order is the
   * mixed-radix order of transversal indices with the first base point as
   * the most significant digit. Throws LimitExceeded if order() > limit.
   */
  std::vector<Permutation> elements(std::size_t limit = Limits{}.enumeration) const;

  /// Orbit of a point under the group, in discovery order.
  std::vector<Point> orbit(Point p) const;

  // group-element contract shared with other group realizations
  static Permutation multiply(Permutation const &a, Permutation const &b) { return a * b; }
  static Permutation invert(Permutation const &a) { return a.inverse(); }

private:
  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::vector<ChainLevel> _chain;
  std::uint64_t _order = 1;

  void schreier_sims();
};

/// The subgroup generated by the given elements (same degree as g).
PermutationGroup subgroup(PermutationGroup const &g, std::vector<Permutation> generators);

/// Adds elements one at a time, skipping those already generated.
PermutationGroup generated_by(std::size_t degree, std::span<Permutation const> elements);

/// True iff every generator of h lies in g.
bool is_subgroup(PermutationGroup const &g, PermutationGroup const &h);

/// |G : H|. Throws InvalidArgument unless H <= G.
std::uint64_t subgroup_index(PermutationGroup const &g, PermutationGroup const &h);

/// H normal in G, tested on generators. Throws InvalidArgument unless H <= G.
bool is_normal(PermutationGroup const &g, PermutationGroup const &h);

/// Smallest normal subgroup of G containing the given elements.
PermutationGroup normal_closure(PermutationGroup const &g, std::span<Permutation const> elements);

/// C_G(p) by filtering all elements of G.
PermutationGroup centralizer_bruteforce(PermutationGroup const &g, Permutation const &p,
                                        std::size_t limit = Limits{}.enumeration);

/// True iff p commutes with every generator of G.
bool is_central(PermutationGroup const &g, Permutation const &p);

} // namespace cca

#endif // CCA_PERM_GROUP_HPP
