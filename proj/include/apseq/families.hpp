#pragma once

#include "apseq/builtins.hpp"

namespace apseq {

/// Family names that apply to the target, in a fixed order.
std::vector<std::string> applicable_families(const AnalysisTarget& target);

/// Members for k (or n) in k_from..k_to. `ell` is the even exponent of the palindromic family.
/// Throws ValidationError when the family does not apply to the target.
std::vector<DifferenceFamily> difference_families(const AnalysisTarget& target, std::string_view family,
                                                  unsigned k_from, unsigned k_to, unsigned ell = 2);

enum class Verdict { Pass, Fail, PredictedOnly, Error };

const char* to_string(Verdict v);

struct BoundReport {
  DifferenceFamily family;
  std::optional<APResult> measured;
  Verdict verdict = Verdict::Error;
  std::string message;
};

/// Scans each member with a_of_d; per-member errors are recorded, not thrown.
std::vector<BoundReport> verify_family(SequenceWindow& window, const Certifier& cert,
                                       const std::vector<DifferenceFamily>& members, const ScanPolicy& policy);
std::vector<BoundReport> verify_family(const AnalysisTarget& target, const std::vector<DifferenceFamily>& members,
                                       const ScanPolicy& policy);

}  // namespace apseq
