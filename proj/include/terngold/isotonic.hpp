#pragma once

#include <algorithm>
#include <span>
#include <vector>

namespace terngold {

// Euclidean projection onto the nonincreasing cone via pool-adjacent-violators:
// sweep left to right merging blocks whose means would increase, then emit
// each block's mean.  O(n) with the classic stack of (sum, count) blocks.
inline std::vector<double> project_nonincreasing(std::span<const double> v) {
  struct Block {
    double sum;
    int count;
  };
  std::vector<Block> stack;
  stack.reserve(v.size());
  for (double value : v) {
    Block b{value, 1};
    // A later block with a larger mean violates "nonincreasing"; pooling
    // replaces both by their joint mean.
    while (!stack.empty() &&
           stack.back().sum * b.count <= b.sum * stack.back().count) {
      b.sum += stack.back().sum;
      b.count += stack.back().count;
      stack.pop_back();
    }
    stack.push_back(b);
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const Block& b : stack) {
    double mean = b.sum / b.count;
    out.insert(out.end(), b.count, mean);
  }
  return out;
}

// Projection onto {nonincreasing} ∩ [lo, hi]^n.  The box and the monotone
// cone commute for this order (clamping a monotone sequence keeps it monotone
// and is the nearest box point), so PAV followed by a clamp is exact.
inline std::vector<double> project_nonincreasing_clamped(
    std::span<const double> v, double lo = 0.0, double hi = 1.0) {
  std::vector<double> out = project_nonincreasing(v);
  for (double& x : out) x = std::clamp(x, lo, hi);
  return out;
}

}  // namespace terngold
