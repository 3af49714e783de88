#pragma once

#include <set>

#include "apseq/stream.hpp"

namespace apseq {

bool is_primitive(const Substitution& sub);

struct LegalWords {
  std::set<Word> words;
  /// False when the substitution is not primitive; words are then those legal from some letter.
  bool primitive = true;
};

LegalWords legal_words(const Substitution& sub, std::size_t n);

/// Level-2 induced substitution on right-collared letters a_b (ab legal).
struct CollaredSubstitution {
  std::vector<std::pair<Letter, Letter>> letters;
  Substitution sub;
};

CollaredSubstitution induced_two_block(const Substitution& sub);

enum class RecurrenceMode { Formula, Exact };

struct RecurrenceReport {
  std::uint64_t c = 0;
  std::uint64_t L = 0;
  BigInt R_formula;
  std::uint64_t N_bound = 0;
  std::optional<std::uint64_t> N_exact;
  std::optional<std::uint64_t> zeta2_exact;
  /// L * zeta2 when zeta2 is known.
  std::optional<std::uint64_t> R_exact;
};

/// c^4 - 2c^2 + 3.
std::uint64_t recurrence_exponent(std::uint64_t c);
/// 2 L^(c^4-2c^2+3) - L.
BigInt recurrence_formula(std::uint64_t c, std::uint64_t L);

/// Least n with every legal 2-word inside rho^n(a) for every letter a; none if not reached by c^4-2c^2+3.
std::optional<std::uint64_t> saturation_level(const Substitution& sub);

/// Exact mode computes N from per-letter 2-word sets of rho^n(a) and zeta2 from return gaps inside
/// rho^N(b) rho^N(c) for every legal bc. Throws ResourceError when that superword exceeds `cap`.
RecurrenceReport recurrence_constants(const Substitution& sub, RecurrenceMode mode,
                                      std::uint64_t cap = std::uint64_t{1} << 24);

enum class Aperiodicity { AperiodicByCriterion, PeriodicDetected, Unknown };

const char* to_string(Aperiodicity a);

struct AperiodicityCertificate {
  Aperiodicity verdict = Aperiodicity::Unknown;
  std::uint64_t period = 0;
  std::string reason;
};

AperiodicityCertificate aperiodicity_certificate(const Substitution& sub,
                                                 std::uint64_t prefix_cap = std::uint64_t{1} << 20);

struct HeightReport {
  std::uint64_t height = 1;
  std::uint64_t prefix_len = 0;
};

/// Largest h coprime to L dividing gcd{a > 0 : w_a = w_0} over the first prefix_len letters.
HeightReport height(const Substitution& sub, std::uint64_t prefix_len);

}  // namespace apseq
