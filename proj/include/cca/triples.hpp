#ifndef CCA_TRIPLES_HPP
#define CCA_TRIPLES_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "cca/colour_auts.hpp"
#include "cca/perm_group.hpp"

namespace cca
{

/// S_X(tau) = {x in X : x^tau in {x, x^-1}} - {1}.
struct STauSet
{
  Permutation tau;
  std::vector<Permutation> elements; ///< in the carrier's enumeration order
  /// Set when tau lies in the carrier and the form (C_X(tau) u {y tau : y^2 = 1}) - {1} was compared.
  bool definitional_form_checked = false;
};

/**
 * Filters the carrier's elements, conjugating by tau in the ambient
 * symmetric group. When tau is in the carrier the set is also computed
 * from centralizer and involutions, and Error is thrown if the two differ.
 * Throws InvalidArgument if tau is not an involution.
 */
STauSet s_tau(PermutationGroup const &carrier, Permutation const &tau,
              std::size_t limit = Limits{}.enumeration);

/// (C_X(tau) u {y tau : y in X, y^2 = 1}) - {1}, in enumeration order. Requires tau in X.
std::vector<Permutation> s_tau_definitional(PermutationGroup const &carrier, Permutation const &tau,
                                            std::size_t limit = Limits{}.enumeration);

struct TripleChecks
{
  bool ai = false;   ///< G = <S u T>
  bool aii = false;  ///< tau inverts or centralises every s in S
  bool aiii = false; ///< t^2 = tau for every t in T
  bool aiv = false;  ///< <S u {tau}> != G
  bool av = false;   ///< tau non-central, or |G : <S u {tau}>| > 2

  bool all() const { return ai && aii && aiii && aiv && av; }
  friend bool operator==(TripleChecks const &, TripleChecks const &) = default;
};

struct NonCCATriple
{
  std::vector<Permutation> s;
  std::vector<Permutation> t;
  Permutation tau;
  TripleChecks checks;
  bool valid = false;
  std::uint64_t index = 0; ///< |G : <S u {tau}>|
  bool tau_central = false;
};

/**
 * Tests every condition of a candidate triple literally. Failed conditions
 * are verdicts; only malformed input throws (InvalidArgument for elements
 * outside G or a tau that is not an involution).
 */
NonCCATriple validate_triple(PermutationGroup const &g, std::span<Permutation const> s,
                             std::span<Permutation const> t, Permutation const &tau);

/// {t in X : t^2 = tau}, in enumeration order.
std::vector<Permutation> square_roots(PermutationGroup const &x, Permutation const &tau,
                                      std::size_t limit = Limits{}.enumeration);

struct TripleSearch
{
  std::optional<NonCCATriple> triple;
  std::size_t taus_tried = 0;
  std::size_t roots_tried = 0;
};

/**
 * For each involution tau (the given candidates, or else the involutions of
 * H followed by the involutions of G outside H that normalize H), takes
 * S = S_H(tau) and looks for t in G - <S u {tau}> with t^2 = tau, returning
 * the first valid triple (S, {t}, tau). Both loops follow enumeration order.
 */
TripleSearch search_triple_subgroup_strategy(
  PermutationGroup const &g, PermutationGroup const &h,
  std::optional<std::vector<Permutation>> const &tau_candidates = std::nullopt,
  std::size_t limit = Limits{}.enumeration);

/// S u T closed under inverses, identity removed, in first-appearance order.
std::vector<Permutation> triple_connection_set(NonCCATriple const &triple);

struct CrossCheck
{
  bool connected = false;
  CCAVerdict verdict;
};

/**
 * Builds Cay(G, S u T) (closed under inverses) and confirms it is connected
 * and not CCA. A valid triple failing this is a bug in this library; Error
 * is thrown with the full triple in the message.
 */
CrossCheck crosscheck_triple(PermutationGroup const &g, NonCCATriple const &triple,
                             Limits const &limits = {});

nlohmann::ordered_json to_json(TripleChecks const &checks);

/// {group, S, T, tau, checks, valid, index, crosscheck?}.
nlohmann::ordered_json triple_record(std::string const &group, NonCCATriple const &triple,
                                     std::optional<CrossCheck> const &crosscheck = std::nullopt);

} // namespace cca

#endif // CCA_TRIPLES_HPP
