#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mayer/blc.hpp"

namespace mayer {

struct ComplexityReport {
  int order = 0;
  std::int64_t cr1 = 0;
  std::int64_t cr2 = 0;
  std::int64_t cr3 = 0;
  bool complete = false;
  std::vector<int> n1;  // per term, in term order

  /// cr2 - cr3 = cr1 (n-1), valid whenever every term is basic.
  bool edge_identity_holds() const { return cr2 - cr3 == cr1 * (order - 1); }
};

std::int64_t cr1(const BasicLinearCombination& blc);
std::int64_t cr2(const BasicLinearCombination& blc);
/// Sum of N1 over terms; every term of a BasicLinearCombination is basic.
std::int64_t cr3(const BasicLinearCombination& blc);
bool is_complete(const BasicLinearCombination& blc);
ComplexityReport complexity_report(const BasicLinearCombination& blc);

/// Criterion i (1, 2 or 3) summed over a collection.
std::int64_t cr_prime(std::span<const BasicLinearCombination> collection, int criterion);
std::int64_t criterion_value(const ComplexityReport& report, int criterion);

enum class VerdictKind { significantly_simpler, approximately_equal, significantly_more_complex };

struct Verdict {
  VerdictKind kind;
  int criterion;
  std::int64_t subject_score;
  std::int64_t reference_score;
  /// Equal scores, but the caller knows the subject to be the harder one.
  bool marginally_more_complex = false;
};

/// How the subject compares with the reference under one criterion:
/// a strictly larger score is significantly more complex.
Verdict compare(std::int64_t subject_score, std::int64_t reference_score, int criterion,
                bool known_marginally_harder = false);

std::string to_string(VerdictKind kind);

}  // namespace mayer
