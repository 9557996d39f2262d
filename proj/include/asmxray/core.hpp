#pragma once

// Domain types for alternating sign matrices and their antidiagonal X-rays.
//
// All coordinates are 1-based (row, col) with row 1 at the top, the same
// convention used when a matrix is written out on paper.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asmxray {

enum class ErrorCode {
  NotSquare,
  EntryOutOfRange,
  RowSum,
  ColSum,
  NotAlternating,
  ParseError,
  NotDyck,
  NotInImage,
  NotSymmetric,
  NotDeterminedImage,
};

std::string_view to_string(ErrorCode code);

/// Domain failure carrying a stable error name. `line()` is the 1-based
/// row/column index for matrix validation errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Dense square integer matrix with no invariants beyond its shape.
/// Intermediate results of the matrix maps live here before validation.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n);

  int size() const noexcept { return n_; }
  int at(int row, int col) const { return cells_[index(row, col)]; }
  int& at(int row, int col) { return cells_[index(row, col)]; }
  int at(Cell c) const { return at(c.row, c.col); }
  int& at(Cell c) { return at(c.row, c.col); }

  std::vector<std::vector<int>> rows() const;

  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(col - 1);
  }

  int n_ = 0;
  std::vector<int> cells_;
};

/// An n x n alternating sign matrix. Only obtainable through validation, so
/// every instance satisfies the row/column prefix-sum conditions.
class Asm {
 public:
  /// Throws Error (RowSum, ColSum, NotAlternating, EntryOutOfRange).
  static Asm validate(IntMatrix m);

  static Asm identity(int n);
  static Asm anti_identity(int n);

  int size() const noexcept { return m_.size(); }
  int at(int row, int col) const { return m_.at(row, col); }
  int at(Cell c) const { return m_.at(c); }
  const IntMatrix& matrix() const noexcept { return m_; }
  std::vector<std::vector<int>> rows() const { return m_.rows(); }

  friend auto operator<=>(const Asm&, const Asm&) = default;

 private:
  explicit Asm(IntMatrix m) : m_(std::move(m)) {}

  IntMatrix m_;
};

/// Validates nested row vectors. Throws NotSquare when the shape does not
/// match `size`, otherwise the same errors as Asm::validate.
Asm validate_asm(int size, const std::vector<std::vector<int>>& entries);

/// Antidiagonal sums x_1 .. x_{2n-1}; x_k sums the cells with row+col = k+1.
class XRay {
 public:
  /// Requires an odd, non-empty length and corner values in {0,1}.
  /// Throws Error(ParseError) otherwise.
  explicit XRay(std::vector<int> sums);

  int size() const noexcept { return static_cast<int>(sums_.size() + 1) / 2; }
  const std::vector<int>& sums() const noexcept { return sums_; }
  /// 1-based.
  int operator[](int k) const { return sums_[static_cast<std::size_t>(k - 1)]; }
  int total() const;

  friend auto operator<=>(const XRay&, const XRay&) = default;

 private:
  std::vector<int> sums_;
};

XRay xray(const Asm& a);
/// Antidiagonal sums of an arbitrary square matrix, no corner checks.
std::vector<int> antidiagonal_sums(const IntMatrix& m);

bool is_diagonally_symmetric(const Asm& a);
Asm transpose(const Asm& a);

/// Splits `a` into its indecomposable diagonal blocks, top-left first.
std::vector<Asm> direct_summands(const Asm& a);
/// Inverse of direct_summands: places the blocks along the diagonal.
Asm block_diagonal(const std::vector<Asm>& blocks);

XRay parse_xray(std::string_view text);
std::string render_xray(const XRay& x);

enum class RenderStyle { Signs, Integers };

/// Rows separated by '\n', no trailing newline.
std::string render_asm(const Asm& a, RenderStyle style);
std::string render_matrix(const IntMatrix& m, RenderStyle style);

}  // namespace asmxray
