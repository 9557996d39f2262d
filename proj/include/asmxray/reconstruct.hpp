#pragma once

// Reconstruction of ASMs from their antidiagonal X-ray.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "asmxray/core.hpp"

namespace asmxray {

struct SearchOptions {
  /// Stop after this many matrices; unbounded when empty.
  std::optional<std::size_t> limit;
  /// Called whenever the search completes antidiagonal k (1-based) with a
  /// sum equal to x_k. `partial` holds the entries assigned so far; cells on
  /// later antidiagonals are 0.
  std::function<void(int k, const IntMatrix& partial)> on_antidiagonal;
};

/// All n x n ASMs with X-ray `x`, in the order of an antidiagonal-by-
/// antidiagonal backtracking search (cells within an antidiagonal top to
/// bottom, values tried -1, 0, 1). An infeasible X-ray yields an empty list.
std::vector<Asm> find_asms_with_xray(const XRay& x, const SearchOptions& options = {});
std::vector<Asm> find_asms_with_xray(const XRay& x, std::optional<std::size_t> limit);

/// True iff exactly one ASM has X-ray `x`.
bool is_determined_xray(const XRay& x);

/// The matrix map_a(p) with xray(map_a(p)) = x, found by scanning Dyck
/// paths. Throws Error(NotDeterminedImage) if no path matches.
Asm reconstruct_determined(const XRay& x);

}  // namespace asmxray
