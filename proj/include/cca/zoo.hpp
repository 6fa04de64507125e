#ifndef CCA_ZOO_HPP
#define CCA_ZOO_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cca/higman.hpp"
#include "cca/perm_group.hpp"

namespace cca::zoo
{

PermutationGroup symmetric(unsigned n);
PermutationGroup alternating(unsigned n);
PermutationGroup cyclic(unsigned n);

/// Dihedral group of order 2n: on n points for n >= 3, regular for n <= 2.
PermutationGroup dihedral(unsigned n);

/// The rotation generator used by dihedral(n).
Permutation dihedral_rotation(unsigned n);

/**
 * PSL(2, q) acting on the q+1 points of the projective line (field elements
 * 0..q-1, then infinity as point q), generated by x -> x+1, x -> l^2 x for a
 * primitive l, and x -> -1/x.
 */
PermutationGroup psl2(unsigned q, unsigned max_q = 32);

/// q(q^2 - 1) / gcd(2, q - 1).
std::uint64_t psl2_order(unsigned q);

/// Direct product acting on the disjoint union of the factors' points.
PermutationGroup direct_product(std::span<PermutationGroup const> factors);

/// A group from the bundled sporadic generator data, validated against its stored order.
struct SporadicGroup
{
  std::string name;
  std::string provenance;
  PermutationGroup group;
};

/// Names of the bundled sporadic groups.
std::vector<std::string> sporadic_names();
/// Throws InvalidArgument for an unknown name and Error if the stored order check fails.
SporadicGroup sporadic(std::string const &name);

/**
 * Exact scan for an element of order 4: generators first, then every
 * element. Throws LimitExceeded if the scan needs more than `limit` elements.
 */
bool has_element_of_order4(PermutationGroup const &g, std::size_t limit = Limits{}.enumeration);

/// Number of involutions, by enumeration.
std::uint64_t involution_count(PermutationGroup const &g, std::size_t limit = Limits{}.enumeration);

/// G_p, from Schreier generators of the orbit of p.
PermutationGroup point_stabilizer(PermutationGroup const &g, Point p);

/// Pointwise stabilizer of a set of (0-based) points.
PermutationGroup pointwise_stabilizer(PermutationGroup const &g, std::span<Point const> points);

/// Setwise stabilizer, by filtering all elements.
PermutationGroup setwise_stabilizer(PermutationGroup const &g, std::span<Point const> points,
                                    std::size_t limit = Limits{}.enumeration);

/**
 * Cyclic subgroups of order m, one per subgroup, each generated by its
 * first generator in enumeration order; listed by that generator's index.
 */
std::vector<PermutationGroup> cyclic_subgroups_of_order(PermutationGroup const &g, std::uint64_t m,
                                                        std::size_t limit = Limits{}.enumeration);

/// N_G(H), by filtering all elements of G.
PermutationGroup normalizer_bruteforce(PermutationGroup const &g, PermutationGroup const &h,
                                       std::size_t limit = Limits{}.enumeration);

} // namespace cca::zoo

#endif // CCA_ZOO_HPP
