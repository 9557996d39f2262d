#include "asmxray/verify.hpp"

#include <set>

#include "asmxray/bijection.hpp"
#include "asmxray/reconstruct.hpp"

namespace asmxray {

bool VerificationResult::ok() const {
  for (const auto& [name, passed] : checks)
    if (!passed) return false;
  return true;
}

VerificationResult verify(int n) {
  VerificationResult result;
  result.report = enumeration_report(n);
  const EnumerationReport& report = result.report;
  auto& checks = result.checks;

  std::set<Asm> image;
  bool round_trip = true;
  for (const DyckPath& p : all_dyck_paths(n)) {
    Asm a = map_a(p);
    round_trip = round_trip && shadow_path(a) == p && is_diagonally_symmetric(a);
    image.insert(std::move(a));
  }
  checks["map_a_injective"] = image.size() == report.dyck_count;
  checks["shadow_path_round_trip"] = round_trip;

  const std::vector<Asm> determined = determined_asms(report.histogram);
  const std::set<Asm> determined_set(determined.begin(), determined.end());
  checks["determined_equals_image"] = determined_set == image;
  checks["determined_count_equals_dyck_count"] = report.determined_count == report.dyck_count;

  std::uint64_t asm_count = 0;
  std::set<Asm> filtered;
  bool transpose_ok = true;
  AsmStream stream(n);
  while (auto a = stream.next()) {
    ++asm_count;
    transpose_ok = transpose_ok && xray(transpose(*a)) == xray(*a);
    if (is_diagonally_symmetric(*a)) filtered.insert(*a);
  }
  checks["histogram_total_equals_asm_count"] = report.histogram.total() == asm_count;
  checks["transpose_preserves_xray"] = transpose_ok;

  bool lemma1 = true;
  bool lemma2 = true;
  bool preserves = true;
  std::set<Asm> generated;
  for (const Asm& a : all_dsasms(n)) {
    generated.insert(a);
    const IntMatrix raw = map_m_unchecked(a);
    try {
      const Asm image_of_a = Asm::validate(raw);
      const bool fixed = image_of_a == a;
      lemma2 = lemma2 && fixed == image.contains(a) && (fixed || !is_diagonally_symmetric(image_of_a));
    } catch (const Error&) {
      lemma1 = false;
      lemma2 = false;
    }
    preserves = preserves && antidiagonal_sums(raw) == xray(a).sums();
  }
  checks["dsasm_generator_matches_filter"] = generated == filtered && generated.size() == report.dsasm_count;
  checks["map_m_yields_asm"] = lemma1;
  checks["map_m_fixed_points_are_image"] = lemma2;
  checks["map_m_preserves_xray"] = preserves;

  bool reconstruct_image = true;
  for (const Asm& a : image) {
    const auto found = find_asms_with_xray(xray(a));
    reconstruct_image = reconstruct_image && found.size() == 1 && found.front() == a;
    reconstruct_image = reconstruct_image && reconstruct_determined(xray(a)) == a;
  }
  checks["reconstruct_image_unique"] = reconstruct_image;

  bool agreement = true;
  for (const auto& [key, count] : report.histogram.counts)
    agreement = agreement && find_asms_with_xray(parse_xray(key)).size() == count;
  checks["reconstruct_counts_match_histogram"] = agreement;

  return result;
}

}  // namespace asmxray
