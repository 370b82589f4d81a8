#pragma once

#include <span>
#include <vector>

namespace gc {

// +1 for even permutations, -1 for odd. `perm` must be a permutation of 0..n-1.
int permutation_sign(std::span<const int> perm);

std::vector<int> inverse_permutation(std::span<const int> perm);

// (a ∘ b)[i] = a[b[i]]
std::vector<int> compose(std::span<const int> a, std::span<const int> b);

bool is_permutation_of_range(std::span<const int> perm);

// Sign picked up when a sequence of graded symbols is rearranged. Item i sits
// at position i of the source sequence and has parity `odd[i]`; `target[i]` is
// the position item i occupies afterwards. Only swaps of two odd items count.
int koszul_sign(std::span<const int> target, std::span<const bool> odd);

}  // namespace gc
