#include "asmxray/enumerate.hpp"

#include <stdexcept>

namespace asmxray {

// ---------------------------------------------------------------------------
// Dyck paths

DyckPathStream::DyckPathStream(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("semilength must be positive");
  current_.assign(static_cast<std::size_t>(n), Step::East);
  current_.resize(static_cast<std::size_t>(2 * n), Step::South);
}

std::optional<DyckPath> DyckPathStream::next() {
  if (done_) return std::nullopt;
  DyckPath out(current_);

  // Lexicographic successor: turn the rightmost E that can become S (height
  // before it at least 1) into S, then put all remaining E steps first.
  int height = 0;
  int east_before = 0;
  int pivot = -1;
  int east_at_pivot = 0;
  for (std::size_t i = 0; i < current_.size(); ++i) {
    if (current_[i] == Step::East) {
      if (height >= 1) {
        pivot = static_cast<int>(i);
        east_at_pivot = east_before;
      }
      ++east_before;
      ++height;
    } else {
      --height;
    }
  }
  if (pivot < 0) {
    done_ = true;
  } else {
    const auto p = static_cast<std::size_t>(pivot);
    current_[p] = Step::South;
    const int remaining_east = n_ - east_at_pivot;
    std::size_t i = p + 1;
    for (int k = 0; k < remaining_east; ++k) current_[i++] = Step::East;
    while (i < current_.size()) current_[i++] = Step::South;
  }
  return out;
}

std::vector<DyckPath> all_dyck_paths(int n) {
  std::vector<DyckPath> out;
  DyckPathStream stream(n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

// ---------------------------------------------------------------------------
// ASMs

AsmStream::AsmStream(int n, bool symmetric_only)
    : n_(n), symmetric_(symmetric_only), column_state_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
}

std::vector<std::vector<int>> AsmStream::candidate_rows(int row) const {
  std::vector<std::vector<int>> out;
  std::vector<int> partial(static_cast<std::size_t>(n_), 0);

  auto fixed_value = [&](int col) -> std::optional<int> {
    if (!symmetric_ || col >= row) return std::nullopt;
    const Level& above = stack_[static_cast<std::size_t>(col - 1)];
    return above.rows[above.index][static_cast<std::size_t>(row - 1)];
  };

  auto extend = [&](auto&& self, int col, int prefix) -> void {
    if (col > n_) {
      out.push_back(partial);
      return;
    }
    const int state = column_state_[static_cast<std::size_t>(col - 1)];
    const std::optional<int> fixed = fixed_value(col);
    for (int v = -1; v <= 1; ++v) {
      if (fixed && v != *fixed) continue;
      const int p = prefix + v;
      if (p < 0 || p > 1) continue;
      if (state + v < 0 || state + v > 1) continue;
      if (col == n_ && p != 1) continue;
      partial[static_cast<std::size_t>(col - 1)] = v;
      self(self, col + 1, p);
    }
    partial[static_cast<std::size_t>(col - 1)] = 0;
  };
  extend(extend, 1, 0);
  return out;
}

namespace {
void add_row(std::vector<int>& state, const std::vector<int>& row, int sign) {
  for (std::size_t c = 0; c < row.size(); ++c) state[c] += sign * row[c];
}
}  // namespace

void AsmStream::push_level() {
  Level level{candidate_rows(static_cast<int>(stack_.size()) + 1), 0};
  if (!level.rows.empty()) add_row(column_state_, level.rows.front(), +1);
  stack_.push_back(std::move(level));
}

std::optional<Asm> AsmStream::next() {
  // Invariant: column_state_ is the sum of the current row of every level
  // whose index is in range.
  auto advance = [this] {
    Level& top = stack_.back();
    add_row(column_state_, top.rows[top.index], -1);
    if (++top.index < top.rows.size()) add_row(column_state_, top.rows[top.index], +1);
  };

  if (!started_) {
    started_ = true;
    push_level();
  } else if (!stack_.empty()) {
    advance();
  }

  while (!stack_.empty()) {
    const Level& top = stack_.back();
    if (top.index >= top.rows.size()) {
      stack_.pop_back();
      if (!stack_.empty()) advance();
      continue;
    }
    if (static_cast<int>(stack_.size()) == n_) {
      IntMatrix m(n_);
      for (int r = 1; r <= n_; ++r) {
        const Level& level = stack_[static_cast<std::size_t>(r - 1)];
        for (int c = 1; c <= n_; ++c) m.at(r, c) = level.rows[level.index][static_cast<std::size_t>(c - 1)];
      }
      return Asm::validate(std::move(m));
    }
    push_level();
  }
  return std::nullopt;
}

std::vector<Asm> all_asms(int n) {
  std::vector<Asm> out;
  AsmStream stream(n);
  while (auto a = stream.next()) out.push_back(std::move(*a));
  return out;
}

std::vector<Asm> all_dsasms(int n) {
  std::vector<Asm> out;
  AsmStream stream(n, true);
  while (auto a = stream.next()) out.push_back(std::move(*a));
  return out;
}

// ---------------------------------------------------------------------------
// Histograms

std::uint64_t XRayHistogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, value] : counts) sum += value;
  return sum;
}

std::uint64_t XRayHistogram::count(const XRay& x) const {
  const auto it = counts.find(render_xray(x));
  return it == counts.end() ? 0 : it->second;
}

std::size_t XRayHistogram::singleton_count() const {
  std::size_t k = 0;
  for (const auto& [key, value] : counts)
    if (value == 1) ++k;
  return k;
}

XRayHistogram xray_histogram(int n) {
  XRayHistogram h{n, {}};
  AsmStream stream(n);
  while (auto a = stream.next()) ++h.counts[render_xray(xray(*a))];
  return h;
}

std::string histogram_csv(const XRayHistogram& h) {
  std::string out = "xray,count\n";
  for (const auto& [key, value] : h.counts) out += key + "," + std::to_string(value) + "\n";
  return out;
}

std::uint64_t multiplicity(const XRayHistogram& h, const Asm& a) {
  if (h.size != a.size()) throw std::invalid_argument("histogram size does not match matrix size");
  return h.count(xray(a));
}

std::uint64_t multiplicity(const Asm& a) { return multiplicity(xray_histogram(a.size()), a); }

std::vector<Asm> determined_asms(const XRayHistogram& h) {
  std::vector<Asm> out;
  AsmStream stream(h.size);
  while (auto a = stream.next())
    if (h.count(xray(*a)) == 1) out.push_back(std::move(*a));
  return out;
}

std::vector<Asm> determined_asms(int n) { return determined_asms(xray_histogram(n)); }

EnumerationReport enumeration_report(int n) {
  EnumerationReport report;
  report.n = n;
  report.histogram = xray_histogram(n);
  report.asm_count = report.histogram.total();
  report.determined_count = report.histogram.singleton_count();

  AsmStream symmetric(n, true);
  while (symmetric.next()) ++report.dsasm_count;
  DyckPathStream paths(n);
  while (paths.next()) ++report.dyck_count;
  return report;
}

}  // namespace asmxray
