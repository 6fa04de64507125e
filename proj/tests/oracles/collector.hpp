#ifndef CCA_TESTS_ORACLES_COLLECTOR_HPP
#define CCA_TESTS_ORACLES_COLLECTOR_HPP

// Literal word-rewriting collector for the Higman presentations. It applies
// one defining relation at a time to adjacent letters and is the reference
// the closed-form product in cca::higman::Group is checked against.

#include <vector>

#include "cca/higman.hpp"

namespace cca::oracle
{

/// Letters 0..r-1 are g_1..g_r, letters r..r+s-1 are h_1..h_s.
using Word = std::vector<unsigned>;

Word word_of(higman::Params const &p, higman::Element const &x);

/// Rewrites a word into normal form g_1^e_1 ... g_r^e_r h_1^f_1 ... h_s^f_s.
higman::Element collect(higman::Params const &p, Word word);

/// Product computed by concatenating normal-form words and collecting.
higman::Element collect_product(higman::Params const &p, higman::Element const &a,
                                higman::Element const &b);

} // namespace cca::oracle

#endif // CCA_TESTS_ORACLES_COLLECTOR_HPP
