#pragma once

#include "ybekit/solution.hpp"

namespace fixtures {

using ybekit::Perm;
using ybekit::Solution;

inline Solution cyclic(std::size_t n) {
  std::vector<ybekit::Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<ybekit::Point>((i + 1) % n);
  return Solution::permutation(Perm(std::move(images)));
}

/// Five points whose permutation group is Sym(3) acting on {0,1,2} and,
/// through signs, on {3,4}: sigma = [id, id, id, (1 2)(3 4), (0 1)(3 4)].
inline Solution sym3_five() {
  const auto id = Perm::identity(5);
  return Solution({id, id, id, Perm{0, 2, 1, 4, 3}, Perm{1, 0, 2, 4, 3}});
}

/// Irretractable solution on four points with group of order 8.
inline Solution irretractable_four() {
  return Solution({Perm{0, 1, 3, 2}, Perm{2, 3, 1, 0}, Perm{3, 2, 0, 1}, Perm{1, 0, 2, 3}});
}

}  // namespace fixtures
