#ifndef CCA_PERMUTATION_HPP
#define CCA_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cca
{

using Point = std::uint32_t;

/**
 * A bijection of {0, ..., degree-1}.
 *
 * Action convention: permutations act on the right, so `p * q` means
 * "apply p, then q", i.e. (p * q)(i) = q(p(i)). Conjugation is
 * x^g = g^-1 * x * g. Every product, cycle string and report in this
 * library uses this convention.
 *
 * Points are 0-based internally; cycle notation is 1-based.
 */
class Permutation
{
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws InvalidArgument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation of `degree` points from 0-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point i) const { return _images[i]; }
  std::span<Point const> images() const { return _images; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Least k >= 1 with p^k = 1.
  std::uint64_t order() const;

  Permutation pow(std::int64_t k) const;

  /// Smallest point moved, or degree() for the identity.
  Point first_moved() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// 1-based cycle notation, "()" for the identity.
  std::string str() const;

  friend Permutation operator*(Permutation const &lhs, Permutation const &rhs);
  Permutation &operator*=(Permutation const &rhs);

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> _images;
};

/// x^g = g^-1 x g.
Permutation conjugate(Permutation const &x, Permutation const &g);

/// [x, y] = x^-1 y^-1 x y.
Permutation commutator(Permutation const &x, Permutation const &y);

/**
 * Parses 1-based cycle notation such as "(1 2)(3 4 5 6)"; whitespace between
 * tokens is ignored, "()" or "" is the identity and commas inside a cycle are
 * accepted as separators. Throws ParseError on malformed input or points
 * outside {1..degree}.
 */
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Largest point mentioned in a cycle string (1-based), 0 for the identity.
std::size_t max_point_in_cycles(std::string_view text);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace cca

#endif // CCA_PERMUTATION_HPP
