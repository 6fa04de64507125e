#include "cca/higman_triple.hpp"

namespace cca::higman
{

HigmanTriple canonical_triple(Params const &params, std::size_t max_degree)
{
  if (!params.satisfies_constraint())
    throw InvalidArgument("the triple needs parameters with g_r^2 = g_{r-1}^2 = h_1");

  Group group(params);
  auto regular = group.regular_representation(max_degree);
  unsigned const r = params.r();

  std::vector<Permutation> s, t;
  for (unsigned i = 1; i + 2 <= r; ++i)
    s.push_back(group.right_action(group.g(i)));
  for (unsigned j = 1; j <= params.s(); ++j)
    s.push_back(group.right_action(group.h(j)));
  t.push_back(group.right_action(group.g(r - 1)));
  t.push_back(group.right_action(group.g(r)));
  auto tau = group.right_action(group.h(1));

  auto triple = validate_triple(regular, s, t, tau);
  return {std::move(group), std::move(regular), std::move(triple)};
}

} // namespace cca::higman
