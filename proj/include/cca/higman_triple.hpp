#ifndef CCA_HIGMAN_TRIPLE_HPP
#define CCA_HIGMAN_TRIPLE_HPP

#include "cca/higman.hpp"
#include "cca/triples.hpp"

namespace cca::higman
{

struct HigmanTriple
{
  Group group;
  PermutationGroup regular; ///< right regular representation the triple lives in
  NonCCATriple triple;
};

/**
 * S = {g_1, ..., g_{r-2}, h_1, ..., h_s}, T = {g_{r-1}, g_r}, tau = h_1,
 * validated in the regular representation. Throws InvalidArgument unless
 * the parameters satisfy g_r^2 = g_{r-1}^2 = h_1, and LimitExceeded if
 * 2^n exceeds max_degree.
 */
HigmanTriple canonical_triple(Params const &params, std::size_t max_degree = Limits{}.graph);

} // namespace cca::higman

#endif // CCA_HIGMAN_TRIPLE_HPP
