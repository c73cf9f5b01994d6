#pragma once

// Restriction along the classical chains
//   gl(n-1) < gl(n),  so(2n-1) < so(2n+1),  sp(2n-2) < sp(2n).

#include "stabrep/char_oracle.hpp"

namespace stabrep {

// One-step restriction of the irreducible with highest weight w (rank n >= 2)
// to rank n-1, sorted by decreasing weight.
//   SL: single interlacing, multiplicity free.
//   O : through so(2n), double interlacing with the last so(2n) coordinate signed.
//   SP: double interlacing; the multiplicity counts the intermediate sequences.
Decomposition branch(const RankedWeight& w);

// Composite restriction of w down to the given rank (rank <= w.rank()).
Decomposition restrict_to(const RankedWeight& w, int rank);

// Multiplicity of truncate(mu, i) in the restriction of truncate(lambda, j).
BigInt restrict_mult(const ThetaWeight& mu, int i, const ThetaWeight& lambda, int j);

}  // namespace stabrep
