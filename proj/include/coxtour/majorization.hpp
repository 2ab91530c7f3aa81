#pragma once

#include <vector>

namespace coxtour {

// x <=_w y: every prefix sum of the descending rearrangement of x is bounded
// by the matching prefix sum for y. Throws on length mismatch.
bool weak_submajorize(std::vector<int> x, std::vector<int> y);

// x <= y in the majorization order: weak sub-majorization plus equal totals.
bool majorize(const std::vector<int>& x, const std::vector<int>& y);

// Given integer x weakly sub-majorized by y, returns z with x <= z (entrywise)
// and z majorized by y. Repeatedly increments the leftmost minimal coordinate
// until the totals agree, which keeps the result deterministic.
std::vector<int> lift_to_majorization(const std::vector<int>& x, const std::vector<int>& y);

// Given x <= z, z majorized by y and sum(x) = sum(y) mod 2, returns z' with
// x <= z' majorized by y and z'_i = x_i mod 2 for all i. Sorts z descending
// (stable), alternates -1/+1 over the parity-mismatch positions, unsorts.
// The output is re-checked; when y has repeated entries a valid z' need not
// exist at all, and the routine throws internal_error rather than return a
// non-majorized vector. Every target used by construct() has distinct
// entries, where the adjustment always succeeds.
std::vector<int> match_parity(const std::vector<int>& x, const std::vector<int>& z,
                              const std::vector<int>& y);

}  // namespace coxtour
