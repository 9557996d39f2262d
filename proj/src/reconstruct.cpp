#include "asmxray/reconstruct.hpp"

#include <algorithm>

#include "asmxray/bijection.hpp"
#include "asmxray/enumerate.hpp"

namespace asmxray {

namespace {

// Depth-first search over cells in antidiagonal order. Every line keeps its
// prefix sum in {0,1}; a line is closed at its last cell with prefix sum 1.
class XRaySearch {
 public:
  XRaySearch(const XRay& x, const SearchOptions& options)
      : x_(x),
        options_(options),
        n_(x.size()),
        m_(n_),
        row_prefix_(static_cast<std::size_t>(n_) + 1, 0),
        col_prefix_(static_cast<std::size_t>(n_) + 1, 0) {
    for (int k = 1; k <= 2 * n_ - 1; ++k)
      for (int r = std::max(1, k + 1 - n_); r <= std::min(n_, k); ++r) order_.push_back(Cell{r, k + 1 - r});
  }

  std::vector<Asm> run() {
    if (x_.total() != n_) return {};
    if (options_.limit && *options_.limit == 0) return {};
    visit(0, 0);
    return std::move(found_);
  }

 private:
  bool full() const { return options_.limit && found_.size() >= *options_.limit; }

  // Range of sums the unassigned cells of antidiagonal k can still add, given
  // that cells from `next` onward are unassigned. Cells on one antidiagonal
  // share no line, so the bounds are attained independently.
  std::pair<int, int> remaining_range(std::size_t next, int k) const {
    int lo = 0;
    int hi = 0;
    for (std::size_t i = next; i < order_.size(); ++i) {
      const Cell c = order_[i];
      if (c.row + c.col != k + 1) break;
      const int rp = row_prefix_[static_cast<std::size_t>(c.row)];
      const int cp = col_prefix_[static_cast<std::size_t>(c.col)];
      if (rp == 0 && cp == 0) ++hi;
      if (rp == 1 && cp == 1) --lo;
    }
    return {lo, hi};
  }

  void visit(std::size_t index, int diagonal_sum) {
    if (full()) return;
    if (index == order_.size()) {
      found_.push_back(Asm::validate(m_));
      return;
    }
    const Cell cell = order_[index];
    const int k = cell.row + cell.col - 1;
    const bool last_on_diagonal =
        index + 1 == order_.size() || order_[index + 1].row + order_[index + 1].col != cell.row + cell.col;
    int& rp = row_prefix_[static_cast<std::size_t>(cell.row)];
    int& cp = col_prefix_[static_cast<std::size_t>(cell.col)];

    for (int v = -1; v <= 1; ++v) {
      if (rp + v < 0 || rp + v > 1 || cp + v < 0 || cp + v > 1) continue;
      if (cell.col == n_ && rp + v != 1) continue;
      if (cell.row == n_ && cp + v != 1) continue;
      const int sum = diagonal_sum + v;

      rp += v;
      cp += v;
      m_.at(cell) = v;
      if (last_on_diagonal) {
        if (sum == x_[k]) {
          if (options_.on_antidiagonal) options_.on_antidiagonal(k, m_);
          visit(index + 1, 0);
        }
      } else {
        const auto [lo, hi] = remaining_range(index + 1, k);
        const int need = x_[k] - sum;
        if (need >= lo && need <= hi) visit(index + 1, sum);
      }
      m_.at(cell) = 0;
      rp -= v;
      cp -= v;
      if (full()) return;
    }
  }

  const XRay& x_;
  const SearchOptions& options_;
  int n_;
  IntMatrix m_;
  std::vector<int> row_prefix_;
  std::vector<int> col_prefix_;
  std::vector<Cell> order_;
  std::vector<Asm> found_;
};

}  // namespace

std::vector<Asm> find_asms_with_xray(const XRay& x, const SearchOptions& options) {
  return XRaySearch(x, options).run();
}

std::vector<Asm> find_asms_with_xray(const XRay& x, std::optional<std::size_t> limit) {
  SearchOptions options;
  options.limit = limit;
  return find_asms_with_xray(x, options);
}

bool is_determined_xray(const XRay& x) { return find_asms_with_xray(x, std::size_t{2}).size() == 1; }

Asm reconstruct_determined(const XRay& x) {
  DyckPathStream paths(x.size());
  while (auto p = paths.next()) {
    Asm candidate = map_a(*p);
    if (xray(candidate) == x) return candidate;
  }
  throw Error(ErrorCode::NotDeterminedImage, "no Dyck path has X-ray " + render_xray(x));
}

}  // namespace asmxray
