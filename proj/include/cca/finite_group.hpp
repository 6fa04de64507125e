#ifndef CCA_FINITE_GROUP_HPP
#define CCA_FINITE_GROUP_HPP

#include <concepts>
#include <cstdint>

namespace cca
{

/// The element-level contract every group realization provides.
template <typename G>
concept FiniteGroup = requires(G const &g, typename G::element_type const &a) {
  typename G::element_type;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.multiply(a, a) } -> std::convertible_to<typename G::element_type>;
  { g.invert(a) } -> std::convertible_to<typename G::element_type>;
  { g.order() } -> std::convertible_to<std::uint64_t>;
};

/// Least k >= 1 with a^k = 1, by repeated multiplication.
template <FiniteGroup G>
std::uint64_t element_order(G const &g, typename G::element_type const &a)
{
  auto one = g.identity();
  auto x = a;
  std::uint64_t k = 1;
  while (!(x == one)) {
    x = g.multiply(x, a);
    ++k;
  }
  return k;
}

} // namespace cca

#endif // CCA_FINITE_GROUP_HPP
