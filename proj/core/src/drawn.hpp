#pragma once

#include <utility>
#include <vector>

#include "strata/taut_class.hpp"

namespace strata {

// A picture of a stratum: legs per vertex (marking 0 = unlabeled), edges as
// vertex pairs, and psi on half-edges given as (edge, side), side 0 at the
// first vertex of the pair.
struct Drawn {
  std::vector<int> genus;
  std::vector<std::vector<int>> legs;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> psi;
};

// Sum over the non-isomorphic ways of putting the unused markings of 1..n on
// the unlabeled legs, each term xi_*(psi monomial) / |Aut|.
TautClass drawn(int n, const Drawn& d);

}  // namespace strata
