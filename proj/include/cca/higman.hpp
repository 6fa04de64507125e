#ifndef CCA_HIGMAN_HPP
#define CCA_HIGMAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cca/perm_group.hpp"

namespace cca::higman
{

/**
 * Parameters of a class-2 group of order 2^(r+s) on generators
 * g_1..g_r, h_1..h_s with relations
 *
 *   h_i^2 = 1,  [h_i, h_j] = 1,  [g_i, h_j] = 1,
 *   g_i^2     = h_1^b(i,1) ... h_s^b(i,s),
 *   [g_i,g_j] = h_1^c(i,j,1) ... h_s^c(i,j,s)   (i < j).
 *
 * Indices in the accessors are 1-based to match the generator names.
 * `constrained` means g_r^2 = g_{r-1}^2 = h_1.
 */
class Params
{
public:
  Params() = default;
  Params(unsigned r, unsigned s);

  unsigned r() const { return _r; }
  unsigned s() const { return _s; }
  unsigned n() const { return _r + _s; }

  bool b(unsigned i, unsigned j) const;
  void set_b(unsigned i, unsigned j, bool bit);
  bool c(unsigned i, unsigned j, unsigned k) const;
  void set_c(unsigned i, unsigned j, unsigned k, bool bit);

  /// g_i^2 as a bit mask over h_1..h_s (bit k-1 is h_k).
  std::uint64_t square_word(unsigned i) const;
  /// [g_i, g_j] as a bit mask over h_1..h_s; requires i < j.
  std::uint64_t commutator_word(unsigned i, unsigned j) const;

  /// Rows r-1 and r of b equal (1, 0, ..., 0).
  bool satisfies_constraint() const;

  bool constrained = false;
  std::optional<std::uint64_t> seed;

  friend bool operator==(Params const &, Params const &) = default;

private:
  unsigned _r = 0, _s = 0;
  std::vector<std::uint64_t> _b;              // per i: mask over h
  std::vector<std::vector<std::uint64_t>> _c; // [i][j]: mask over h, i < j

  void check(unsigned i, unsigned j) const;
};

/// Normal form g_1^e_1 ... g_r^e_r h_1^f_1 ... h_s^f_s; bit i-1 of e is e_i.
struct Element
{
  std::uint64_t e = 0;
  std::uint64_t f = 0;

  friend bool operator==(Element const &, Element const &) = default;
  friend auto operator<=>(Element const &, Element const &) = default;
};

/**
 * The group defined by a parameter set, with products computed directly in
 * normal form. Collecting g^x g^y moves each g_i of the right factor left
 * past every g_j (j > i) of the left factor, picking up [g_i, g_j], and then
 * squares coinciding generators; all the pieces are central, so the h-part of
 * the product is x.f + y.f + B(x.e, y.e) for a bilinear form B over GF(2).
 */
class Group
{
public:
  using element_type = Element;

  explicit Group(Params params);

  Params const &params() const { return _params; }
  unsigned n() const { return _params.n(); }
  std::uint64_t order() const { return std::uint64_t{1} << n(); }

  Element identity() const { return {}; }
  Element multiply(Element const &a, Element const &b) const;
  Element invert(Element const &a) const;
  Element power(Element const &a, unsigned k) const;

  /// The h-part picked up when collecting g^x * g^y.
  std::uint64_t collection_cocycle(std::uint64_t x, std::uint64_t y) const;

  Element g(unsigned i) const;
  Element h(unsigned j) const;

  /// Position of an element in elements(): e + 2^r f.
  std::uint64_t index(Element const &a) const { return a.e | (a.f << _params.r()); }
  Element element_at(std::uint64_t index) const;
  std::vector<Element> elements() const;

  /// "1" or a word such as "g1*g3*h2".
  std::string label(Element const &a) const;

  /// Right-multiplication action of a on elements(): x -> x*a.
  Permutation right_action(Element const &a) const;

  /**
   * Degree-2^n permutation group generated by the right actions of all
   * g_i and h_j. Throws LimitExceeded if 2^n > max_degree.
   */
  PermutationGroup regular_representation(std::size_t max_degree = Limits{}.graph) const;

private:
  Params _params;
  std::uint64_t _mask_r, _mask_s;
};

/**
 * Random constrained parameters with r = floor(2n/3), s = n - r. Rows
 * 1..r-2 of b and every c(i,j,k) come from a 64-bit Mersenne twister seeded
 * with `seed`, one bit per draw, so the result is identical on every
 * platform. Throws InvalidArgument for n < 3 or n > 20.
 */
Params sample_params(unsigned n, std::uint64_t seed);

/// Number of free parameter bits of a constrained family: C(r,2)s + (r-2)s.
unsigned free_bits(unsigned r, unsigned s);

/// Params as the JSON object {n, r, s, b, c, constrained, seed?}.
std::string params_to_json(Params const &p);

/// Parses the JSON params file format; throws ParseError.
Params params_from_json(std::string const &text);

} // namespace cca::higman

#endif // CCA_HIGMAN_HPP
