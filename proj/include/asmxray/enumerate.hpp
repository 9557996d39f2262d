#pragma once

// Exhaustive generators and the X-ray statistics computed from them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asmxray/bijection.hpp"
#include "asmxray/core.hpp"

namespace asmxray {

/// Dyck paths of semilength n in lexicographic order (E < S).
class DyckPathStream {
 public:
  explicit DyckPathStream(int n);
  std::optional<DyckPath> next();

 private:
  int n_;
  std::vector<Step> current_;
  bool done_ = false;
};

/// Every n x n ASM exactly once, built row by row over the column prefix-sum
/// state. Rows are tried in lexicographic order with -1 < 0 < 1, so the
/// stream is ordered row-major lexicographically.
///
/// With `symmetric_only`, the entries left of the diagonal are copied from
/// the rows above and only diagonally symmetric matrices are produced, in
/// the same relative order.
class AsmStream {
 public:
  explicit AsmStream(int n, bool symmetric_only = false);
  std::optional<Asm> next();

 private:
  struct Level {
    std::vector<std::vector<int>> rows;
    std::size_t index = 0;
  };

  void push_level();
  std::vector<std::vector<int>> candidate_rows(int row) const;

  int n_;
  bool symmetric_;
  std::vector<Level> stack_;
  std::vector<int> column_state_;  // 0/1 prefix sums, one per column
  bool started_ = false;
};

std::vector<DyckPath> all_dyck_paths(int n);
std::vector<Asm> all_asms(int n);
std::vector<Asm> all_dsasms(int n);

/// Multiset of X-rays over all n x n ASMs. Keys are rendered X-rays
/// ("0/2/-1/2/0"), so iteration is in ascending string order.
struct XRayHistogram {
  int size = 0;
  std::map<std::string, std::uint64_t> counts;

  std::uint64_t total() const;
  /// 0 if no ASM has that X-ray.
  std::uint64_t count(const XRay& x) const;
  std::size_t singleton_count() const;
};

XRayHistogram xray_histogram(int n);

/// CSV with header "xray,count", rows in ascending xray-string order.
std::string histogram_csv(const XRayHistogram& h);

/// Number of ASMs of the same size sharing the X-ray of `a`.
std::uint64_t multiplicity(const Asm& a);
std::uint64_t multiplicity(const XRayHistogram& h, const Asm& a);

/// ASMs with multiplicity 1, in generation order.
std::vector<Asm> determined_asms(int n);
std::vector<Asm> determined_asms(const XRayHistogram& h);

struct EnumerationReport {
  int n = 0;
  std::uint64_t asm_count = 0;
  std::uint64_t dsasm_count = 0;
  std::uint64_t dyck_count = 0;
  std::uint64_t determined_count = 0;
  XRayHistogram histogram;
};

EnumerationReport enumeration_report(int n);

}  // namespace asmxray
