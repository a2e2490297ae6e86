#pragma once

#include <string>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley {

/// Named instance family with integer parameters:
///   maximal n      — the graded maximal ideal (x_1,...,x_n)
///   skeleton n d   — all squarefree monomials of degree d in n variables
///   figure1        — (x1 x2^3, x1^3 x2)
///   figure4        — (x1^2 x2^4, x1^3 x2^3, x1^5 x2) / (x1^4 x2^5, x1^6 x2^2)
///   rp2            — the Stanley-Reisner ideal of the 6-vertex projective
///                    plane triangulation
///   delta-12-34    — the face ring S/I for the complex with facets {1,2},{3,4}
struct FamilySpec {
  std::string name;
  std::vector<int> params;
};

QuotientPair instantiate(const FamilySpec& spec);

/// Squarefree ideal of minimal nonfaces of the complex generated by the given
/// facets (0-based vertices). Facets must not be nested.
MonomialIdeal stanley_reisner(int nvars, const std::vector<std::vector<int>>& facets);

const std::vector<std::string>& family_names();

}  // namespace stanley
