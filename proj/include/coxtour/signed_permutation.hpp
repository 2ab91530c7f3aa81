#pragma once

#include <vector>

#include "coxtour/score_vector.hpp"
#include "coxtour/tournament.hpp"

namespace coxtour {

// A bijection phi of {+-1,...,+-n} with phi(-k) = -phi(k), stored as the
// images of +1..+n. Weyl groups: B/C = all signed permutations, D = the
// even-sign subgroup, A = plain permutations.
struct SignedPermutation {
  std::vector<int> image;  // image[k-1] = phi(k), entries in {+-1..+-n}

  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> img);

  static SignedPermutation identity(int n);

  int n() const { return static_cast<int>(image.size()); }
  int apply(int player) const;  // signed; accepts negative players
  int negative_count() const;
  bool is_plain() const { return negative_count() == 0; }
  bool in_weyl_group(Family f) const;
  SignedPermutation inverse() const;
};

// (phi . s)_{|phi(i)|} = sgn(phi(i)) s_i.
ScoreVector apply(const SignedPermutation& phi, const ScoreVector& s);

// Relabels players and edge roles so that score(phi . t) = phi . score(t).
// Throws if phi is not in the Weyl group of t's family.
Tournament apply_signed_permutation(const Tournament& t, const SignedPermutation& phi);

}  // namespace coxtour
