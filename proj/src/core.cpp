#include "asmxray/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace asmxray {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::RowSum: return "RowSum";
    case ErrorCode::ColSum: return "ColSum";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotDyck: return "NotDyck";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotDeterminedImage: return "NotDeterminedImage";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      line_(line) {}

IntMatrix::IntMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
}

std::vector<std::vector<int>> IntMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int r = 1; r <= n_; ++r) {
    auto& row = out[static_cast<std::size_t>(r - 1)];
    row.reserve(static_cast<std::size_t>(n_));
    for (int c = 1; c <= n_; ++c) row.push_back(at(r, c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation
//
// Sums are checked before prefix sums so that a line with the wrong total is
// reported as RowSum/ColSum rather than as a symptom of it. The alternating
// condition itself is the prefix-sum formulation: every prefix sum of every
// line lies in {0,1}.

Asm Asm::validate(IntMatrix m) {
  const int n = m.size();
  if (n < 1) throw Error(ErrorCode::NotSquare, "matrix must be at least 1x1");

  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      const int v = m.at(r, c);
      if (v < -1 || v > 1)
        throw Error(ErrorCode::EntryOutOfRange,
                    "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + std::to_string(v), r);
    }

  for (int r = 1; r <= n; ++r) {
    int sum = 0;
    for (int c = 1; c <= n; ++c) sum += m.at(r, c);
    if (sum != 1) throw Error(ErrorCode::RowSum, "row " + std::to_string(r) + " sums to " + std::to_string(sum), r);
  }
  for (int c = 1; c <= n; ++c) {
    int sum = 0;
    for (int r = 1; r <= n; ++r) sum += m.at(r, c);
    if (sum != 1) throw Error(ErrorCode::ColSum, "column " + std::to_string(c) + " sums to " + std::to_string(sum), c);
  }

  for (int r = 1; r <= n; ++r) {
    int prefix = 0;
    for (int c = 1; c <= n; ++c) {
      prefix += m.at(r, c);
      if (prefix < 0 || prefix > 1)
        throw Error(ErrorCode::NotAlternating, "row " + std::to_string(r) + " does not alternate", r);
    }
  }
  for (int c = 1; c <= n; ++c) {
    int prefix = 0;
    for (int r = 1; r <= n; ++r) {
      prefix += m.at(r, c);
      if (prefix < 0 || prefix > 1)
        throw Error(ErrorCode::NotAlternating, "column " + std::to_string(c) + " does not alternate", c);
    }
  }
  return Asm(std::move(m));
}

Asm Asm::identity(int n) {
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return Asm(std::move(m));
}

Asm Asm::anti_identity(int n) {
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i) m.at(i, n + 1 - i) = 1;
  return Asm(std::move(m));
}

Asm validate_asm(int size, const std::vector<std::vector<int>>& entries) {
  if (size < 1 || entries.size() != static_cast<std::size_t>(size))
    throw Error(ErrorCode::NotSquare, "expected " + std::to_string(size) + " rows, got " +
                                          std::to_string(entries.size()));
  IntMatrix m(size);
  for (int r = 1; r <= size; ++r) {
    const auto& row = entries[static_cast<std::size_t>(r - 1)];
    if (row.size() != static_cast<std::size_t>(size))
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                            " entries", r);
    for (int c = 1; c <= size; ++c) m.at(r, c) = row[static_cast<std::size_t>(c - 1)];
  }
  return Asm::validate(std::move(m));
}

// ---------------------------------------------------------------------------
// X-rays

XRay::XRay(std::vector<int> sums) : sums_(std::move(sums)) {
  if (sums_.empty()) throw Error(ErrorCode::ParseError, "empty X-ray");
  if (sums_.size() % 2 == 0)
    throw Error(ErrorCode::ParseError, "X-ray length " + std::to_string(sums_.size()) + " is even");
  auto corner_ok = [](int v) { return v == 0 || v == 1; };
  if (!corner_ok(sums_.front()) || !corner_ok(sums_.back()))
    throw Error(ErrorCode::ParseError, "corner sums must be 0 or 1");
}

int XRay::total() const { return std::accumulate(sums_.begin(), sums_.end(), 0); }

std::vector<int> antidiagonal_sums(const IntMatrix& m) {
  const int n = m.size();
  std::vector<int> sums(static_cast<std::size_t>(2 * n - 1), 0);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) sums[static_cast<std::size_t>(r + c - 2)] += m.at(r, c);
  return sums;
}

XRay xray(const Asm& a) { return XRay(antidiagonal_sums(a.matrix())); }

XRay parse_xray(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty X-ray");
  std::vector<int> sums;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = text.find('/', start);
    std::string_view token = text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    // Tolerate the spaced form "0/ 2/-1/ 2/ 0".
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(token) + "'");
    sums.push_back(value);
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return XRay(std::move(sums));
}

std::string render_xray(const XRay& x) {
  std::string out;
  for (std::size_t i = 0; i < x.sums().size(); ++i) {
    if (i) out += '/';
    out += std::to_string(x.sums()[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetries and block structure

bool is_diagonally_symmetric(const Asm& a) {
  const int n = a.size();
  for (int r = 1; r <= n; ++r)
    for (int c = r + 1; c <= n; ++c)
      if (a.at(r, c) != a.at(c, r)) return false;
  return true;
}

Asm transpose(const Asm& a) {
  const int n = a.size();
  IntMatrix m(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) m.at(c, r) = a.at(r, c);
  return Asm::validate(std::move(m));
}

std::vector<Asm> direct_summands(const Asm& a) {
  const int n = a.size();
  std::vector<Asm> blocks;
  int begin = 1;  // first row of the current block
  for (int end = 1; end <= n; ++end) {
    // Rows sum to 1, so zero off-diagonal blocks already force the leading
    // block to sum to `end`.
    bool split = true;
    for (int r = 1; r <= end && split; ++r)
      for (int c = end + 1; c <= n; ++c)
        if (a.at(r, c) != 0) { split = false; break; }
    for (int r = end + 1; r <= n && split; ++r)
      for (int c = 1; c <= end; ++c)
        if (a.at(r, c) != 0) { split = false; break; }
    if (!split) continue;
    const int len = end - begin + 1;
    IntMatrix block(len);
    for (int r = 0; r < len; ++r)
      for (int c = 0; c < len; ++c) block.at(r + 1, c + 1) = a.at(begin + r, begin + c);
    blocks.push_back(Asm::validate(std::move(block)));
    begin = end + 1;
  }
  return blocks;
}

Asm block_diagonal(const std::vector<Asm>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.size();
  IntMatrix m(n);
  int offset = 0;
  for (const auto& b : blocks) {
    for (int r = 1; r <= b.size(); ++r)
      for (int c = 1; c <= b.size(); ++c) m.at(offset + r, offset + c) = b.at(r, c);
    offset += b.size();
  }
  return Asm::validate(std::move(m));
}

// ---------------------------------------------------------------------------
// Text rendering

std::string render_matrix(const IntMatrix& m, RenderStyle style) {
  const int n = m.size();
  std::string out;
  if (style == RenderStyle::Signs) {
    for (int r = 1; r <= n; ++r) {
      if (r > 1) out += '\n';
      for (int c = 1; c <= n; ++c) {
        const int v = m.at(r, c);
        out += v > 0 ? '+' : v < 0 ? '-' : '.';
      }
    }
    return out;
  }
  std::size_t width = 1;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) width = std::max(width, std::to_string(m.at(r, c)).size());
  for (int r = 1; r <= n; ++r) {
    if (r > 1) out += '\n';
    for (int c = 1; c <= n; ++c) {
      if (c > 1) out += ' ';
      const std::string cell = std::to_string(m.at(r, c));
      out.append(width - cell.size(), ' ');
      out += cell;
    }
  }
  return out;
}

std::string render_asm(const Asm& a, RenderStyle style) { return render_matrix(a.matrix(), style); }

}  // namespace asmxray
