#pragma once

// Dyck paths and the two matrix constructions built on them:
//
//  * map_a sends a Dyck path to a diagonally symmetric ASM by filling the
//    antidiagonal segment between every peak (valley) and its mirror image
//    with +1s (-1s).
//  * map_m acts on diagonally symmetric ASMs. It keeps the X-ray and fixes
//    exactly the matrices in the image of map_a.

#include <string>
#include <string_view>
#include <vector>

#include "asmxray/core.hpp"

namespace asmxray {

enum class Step : char { East = 'E', South = 'S' };

/// Lattice path of east/south steps from the top-left to the bottom-right
/// corner of an n x n square that never goes below the main diagonal.
class DyckPath {
 public:
  /// Throws Error(NotDyck) when the steps are unbalanced or dip below the
  /// diagonal, or when the path is empty.
  explicit DyckPath(std::vector<Step> steps);

  int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// Accepts E/S, and U/D as synonyms (U = E, D = S). Surrounding whitespace is
/// ignored. Throws Error(ParseError) on other characters.
DyckPath parse_dyck_path(std::string_view text);
std::string render_dyck_path(const DyckPath& p);

struct ValleyPoint {
  Cell cell;         ///< cell immediately south-west of the S->E turn
  bool on_diagonal;  ///< the turn point lies on the main diagonal
  friend auto operator<=>(const ValleyPoint&, const ValleyPoint&) = default;
};

struct PathGeometry {
  DyckPath path;
  std::vector<Cell> peaks;  ///< cell south-west of each E->S turn, left to right
  std::vector<ValleyPoint> valleys;
};

/// A turn reached after k east steps and m south steps has its south-west
/// cell at (m+1, k).
PathGeometry path_geometry(const DyckPath& p);

Asm map_a(const DyckPath& p);

/// Boundary of the union of the shadows {(r',c') : r' >= r, c' <= c} cast by
/// the +1 entries of `a`. Throws Error(NotDyck) if that boundary leaves the
/// region above the diagonal; this cannot happen for a valid ASM.
DyckPath shadow_path(const Asm& a);

/// Throws Error(NotInImage) when `a` is not map_a of any path.
DyckPath inverse_a(const Asm& a);

/// (i, j) -> (j + 1, i - 1). Cells on the subdiagonal are fixed.
constexpr Cell reflect_subdiagonal(Cell c) { return Cell{c.col + 1, c.row - 1}; }

/// The shade of an indecomposable diagonally symmetric matrix with shadow
/// path `p`: the cells strictly south-west of the cells just below the path
/// that also lie north-east of the path's mirror image. The set is invariant
/// under reflect_subdiagonal. Returned as an n x n 0/1 mask.
IntMatrix shade_mask(const DyckPath& p);

/// map_m without the final validation, so callers can inspect a result that
/// fails the ASM conditions. Throws Error(NotSymmetric).
IntMatrix map_m_unchecked(const Asm& a);

/// Applies the map independently to every direct summand of `a`.
/// Throws Error(NotSymmetric) if `a` is not diagonally symmetric.
Asm map_m(const Asm& a);

}  // namespace asmxray
