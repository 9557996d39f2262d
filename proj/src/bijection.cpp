#include "asmxray/bijection.hpp"

#include <algorithm>
#include <cctype>

namespace asmxray {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw Error(ErrorCode::NotDyck, "empty path");
  int height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    height += steps_[i] == Step::East ? 1 : -1;
    if (height < 0) throw Error(ErrorCode::NotDyck, "path goes below the diagonal at step " + std::to_string(i + 1));
  }
  if (height != 0) throw Error(ErrorCode::NotDyck, "unequal numbers of east and south steps");
}

DyckPath parse_dyck_path(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty path");
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'E':
      case 'U': steps.push_back(Step::East); break;
      case 'S':
      case 'D': steps.push_back(Step::South); break;
      default: throw Error(ErrorCode::ParseError, std::string("unexpected step '") + ch + "'");
    }
  }
  return DyckPath(std::move(steps));
}

std::string render_dyck_path(const DyckPath& p) {
  std::string out;
  out.reserve(p.steps().size());
  for (Step s : p.steps()) out += static_cast<char>(s);
  return out;
}

PathGeometry path_geometry(const DyckPath& p) {
  PathGeometry g{p, {}, {}};
  const auto& steps = p.steps();
  int east = 0;
  int south = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    (steps[i] == Step::East ? east : south) += 1;
    if (steps[i] == Step::East && steps[i + 1] == Step::South)
      g.peaks.push_back(Cell{south + 1, east});
    else if (steps[i] == Step::South && steps[i + 1] == Step::East)
      g.valleys.push_back(ValleyPoint{Cell{south + 1, east}, east == south});
  }
  return g;
}

namespace {

// Column of the path while it runs along the bottom edge of row r, for
// r = 0 .. n (entry 0 is 0).
std::vector<int> path_columns(const DyckPath& p) {
  std::vector<int> cols{0};
  int east = 0;
  for (Step s : p.steps()) {
    if (s == Step::East)
      ++east;
    else
      cols.push_back(east);
  }
  return cols;
}

void fill_antidiagonal_segment(IntMatrix& m, Cell from, int value) {
  for (int t = 0; t <= from.col - from.row; ++t) m.at(from.row + t, from.col - t) = value;
}

}  // namespace

Asm map_a(const DyckPath& p) {
  const PathGeometry g = path_geometry(p);
  IntMatrix m(p.semilength());
  for (Cell peak : g.peaks) fill_antidiagonal_segment(m, peak, 1);
  for (const ValleyPoint& v : g.valleys)
    if (!v.on_diagonal) fill_antidiagonal_segment(m, v.cell, -1);
  return Asm::validate(std::move(m));
}

DyckPath shadow_path(const Asm& a) {
  const int n = a.size();
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * n));
  int reach = 0;
  for (int r = 1; r <= n; ++r) {
    for (int c = n; c > reach; --c)
      if (a.at(r, c) == 1) {
        reach = c;
        break;
      }
    if (reach < r) throw Error(ErrorCode::NotDyck, "shadow line dips below the diagonal in row " + std::to_string(r));
    while (static_cast<int>(steps.size()) - (r - 1) < reach) steps.push_back(Step::East);
    steps.push_back(Step::South);
  }
  return DyckPath(std::move(steps));
}

DyckPath inverse_a(const Asm& a) {
  DyckPath p = shadow_path(a);
  if (map_a(p) != a) throw Error(ErrorCode::NotInImage, "matrix is not the image of a Dyck path");
  return p;
}

IntMatrix shade_mask(const DyckPath& p) {
  const int n = p.semilength();
  const std::vector<int> reach = path_columns(p);
  IntMatrix mask(n);
  for (int r = 2; r <= n; ++r)
    for (int c = 1; c + 1 <= reach[static_cast<std::size_t>(r - 1)]; ++c)
      if (r <= reach[static_cast<std::size_t>(c)]) mask.at(r, c) = 1;
  return mask;
}

namespace {

IntMatrix map_m_indecomposable(const Asm& a) {
  const int n = a.size();
  const DyckPath path = shadow_path(a);
  const IntMatrix shade = shade_mask(path);

  IntMatrix out = a.matrix();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (shade.at(r, c)) out.at(reflect_subdiagonal(Cell{r, c})) = a.at(r, c);

  for (const ValleyPoint& v : path_geometry(path).valleys) {
    if (v.on_diagonal || out.at(v.cell) != 0) continue;
    out.at(v.cell) = -1;
    out.at(reflect_subdiagonal(v.cell)) = 1;
  }
  return out;
}

}  // namespace

IntMatrix map_m_unchecked(const Asm& a) {
  if (!is_diagonally_symmetric(a)) throw Error(ErrorCode::NotSymmetric, "map_m needs a diagonally symmetric matrix");
  IntMatrix out(a.size());
  int offset = 0;
  for (const Asm& block : direct_summands(a)) {
    const IntMatrix image = map_m_indecomposable(block);
    for (int r = 1; r <= block.size(); ++r)
      for (int c = 1; c <= block.size(); ++c) out.at(offset + r, offset + c) = image.at(r, c);
    offset += block.size();
  }
  return out;
}

Asm map_m(const Asm& a) { return Asm::validate(map_m_unchecked(a)); }

}  // namespace asmxray
