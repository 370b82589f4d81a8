#include "gc/permutation.hpp"

#include <cassert>
#include <cstddef>

namespace gc {

int permutation_sign(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
      seen[i] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return inv;
}

std::vector<int> compose(std::span<const int> a, std::span<const int> b) {
  assert(a.size() == b.size());
  std::vector<int> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

bool is_permutation_of_range(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int x : perm) {
    if (x < 0 || static_cast<std::size_t>(x) >= perm.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

int koszul_sign(std::span<const int> target, std::span<const bool> odd) {
  assert(target.size() == odd.size());
  // Count inversions among odd items only.
  int sign = 1;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!odd[i]) continue;
    for (std::size_t j = i + 1; j < target.size(); ++j) {
      if (odd[j] && target[i] > target[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace gc
