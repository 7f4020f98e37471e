#include "mayer/criteria.hpp"

namespace mayer {

namespace {

void check_criterion(int criterion) {
  if (criterion < 1 || criterion > 3)
    throw ValidationError("criterion must be 1, 2 or 3, got " + std::to_string(criterion));
}

}  // namespace

std::int64_t cr1(const BasicLinearCombination& blc) {
  return static_cast<std::int64_t>(blc.length());
}

std::int64_t cr2(const BasicLinearCombination& blc) {
  std::int64_t total = 0;
  for (const auto& t : blc.terms()) total += t.graph.edge_count();
  return total;
}

std::int64_t cr3(const BasicLinearCombination& blc) {
  std::int64_t total = 0;
  for (const auto& t : blc.terms()) total += n1_complexity(t.graph);
  return total;
}

bool is_complete(const BasicLinearCombination& blc) {
  for (const auto& t : blc.terms())
    if (!t.graph.is_complete()) return false;
  return true;
}

ComplexityReport complexity_report(const BasicLinearCombination& blc) {
  ComplexityReport r;
  r.order = blc.order();
  r.cr1 = cr1(blc);
  r.complete = true;
  r.n1.reserve(blc.length());
  for (const auto& t : blc.terms()) {
    const int n1 = n1_complexity(t.graph);
    r.n1.push_back(n1);
    r.cr2 += t.graph.edge_count();
    r.cr3 += n1;
    r.complete = r.complete && t.graph.is_complete();
  }
  return r;
}

std::int64_t criterion_value(const ComplexityReport& report, int criterion) {
  check_criterion(criterion);
  return criterion == 1 ? report.cr1 : criterion == 2 ? report.cr2 : report.cr3;
}

std::int64_t cr_prime(std::span<const BasicLinearCombination> collection, int criterion) {
  check_criterion(criterion);
  std::int64_t total = 0;
  for (const auto& blc : collection)
    total += criterion == 1 ? cr1(blc) : criterion == 2 ? cr2(blc) : cr3(blc);
  return total;
}

Verdict compare(std::int64_t subject_score, std::int64_t reference_score, int criterion,
                bool known_marginally_harder) {
  check_criterion(criterion);
  Verdict v{VerdictKind::approximately_equal, criterion, subject_score, reference_score};
  if (subject_score > reference_score)
    v.kind = VerdictKind::significantly_more_complex;
  else if (subject_score < reference_score)
    v.kind = VerdictKind::significantly_simpler;
  else
    v.marginally_more_complex = known_marginally_harder;
  return v;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::significantly_simpler: return "significantly_simpler";
    case VerdictKind::approximately_equal: return "approximately_equal";
    case VerdictKind::significantly_more_complex: return "significantly_more_complex";
  }
  return "unknown";
}

}  // namespace mayer
