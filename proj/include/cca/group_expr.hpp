#ifndef CCA_GROUP_EXPR_HPP
#define CCA_GROUP_EXPR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cca/higman.hpp"
#include "cca/perm_group.hpp"

namespace cca
{

/**
 * Group expressions:
 *
 *   EXPR := ATOM | EXPR "x" EXPR
 *   ATOM := ("S"|"A"|"C"|"D") INT | "PSL2(" INT ")"
 *         | "perm:" INT ":" CYCLES ("," CYCLES)*
 *         | "higman:" (INLINE | FILE)
 *   INLINE := "n=" INT ["," "seed=" INT]
 *
 * "D n" is the dihedral group of order 2n. A perm atom gives the degree and
 * then one generator per CYCLES item in 1-based cycle notation. A Higman
 * FILE is a JSON params file and may not contain whitespace. Products are
 * flattened, so "S3 x C2 x C2" is a single product node with three factors.
 */
struct GroupExpr
{
  enum class Kind
  {
    symmetric,
    alternating,
    cyclic,
    dihedral,
    psl2,
    perm,
    higman_inline,
    higman_file,
    product
  };

  Kind kind = Kind::cyclic;
  unsigned n = 1;                      ///< S/A/C/D size, PSL2 field order, Higman n
  std::uint64_t seed = 0;              ///< higman_inline
  std::size_t degree = 0;              ///< perm
  std::vector<Permutation> generators; ///< perm
  std::string path;                    ///< higman_file
  std::vector<GroupExpr> factors;      ///< product

  friend bool operator==(GroupExpr const &, GroupExpr const &) = default;
};

/// Throws ParseError.
GroupExpr parse_group_expr(std::string_view text);

/// Normal form; parse_group_expr(print(e)) == e.
std::string print(GroupExpr const &expr);

/// A constructed group together with whatever structure its atoms carry.
struct ConstructedGroup
{
  std::string name;
  PermutationGroup group;
  /// Set when the expression is a single Higman atom (the group is its regular representation).
  std::optional<higman::Group> higman;
};

/**
 * Builds the permutation group of an expression. Throws InvalidArgument for
 * unsupported parameters (e.g. q not a prime power), LimitExceeded when
 * a limit is hit and ParseError for unreadable Higman files.
 */
ConstructedGroup construct(GroupExpr const &expr, Limits const &limits = {});

/// parse + construct.
ConstructedGroup construct(std::string_view text, Limits const &limits = {});

} // namespace cca

#endif // CCA_GROUP_EXPR_HPP
