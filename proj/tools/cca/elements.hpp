#ifndef CCA_TOOLS_ELEMENTS_HPP
#define CCA_TOOLS_ELEMENTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cca/group_expr.hpp"

namespace cca::cli
{

/**
 * Reads and writes elements of a constructed group. Input is 1-based cycle
 * notation, or for a Higman group also a word such as "g1*g3^2*h2" (or
 * "1"). Output is always cycle notation, which reads back unchanged.
 */
class ElementCodec
{
public:
  explicit ElementCodec(ConstructedGroup const &group) : _group(group) {}

  /// Throws ParseError for bad syntax and InvalidArgument for non-members.
  Permutation parse(std::string_view text) const;

  /// Each item may hold several elements separated by commas outside parentheses.
  std::vector<Permutation> parse_list(std::vector<std::string> const &items) const;

  std::string str(Permutation const &p) const { return p.str(); }

private:
  ConstructedGroup const &_group;

  Permutation parse_word(std::string_view text) const;
};

/// Splits at commas that are not inside parentheses; drops empty pieces.
std::vector<std::string> split_top_level(std::string_view text);

/**
 * Subgroups by name (points 1-based):
 *
 *   point:P            stabilizer of P
 *   pointwise:P,Q,...  pointwise stabilizer
 *   setwise:P,Q,...    setwise stabilizer
 *   normalizer:M       normalizer of the first cyclic subgroup of order M
 *   gens:X,Y,...       generated by the given elements
 *
 * Throws ParseError for a malformed spec and InvalidArgument when it names
 * nothing (bad point, no cyclic subgroup of that order).
 */
PermutationGroup parse_subgroup(std::string_view spec, ConstructedGroup const &group, Limits const &limits);

} // namespace cca::cli

#endif // CCA_TOOLS_ELEMENTS_HPP
