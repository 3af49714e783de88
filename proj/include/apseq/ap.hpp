#pragma once

#include <memory>

#include "apseq/group.hpp"
#include "apseq/language.hpp"
#include "apseq/stream.hpp"

namespace apseq {

enum class APStatus { ExactUnderBound, LowerBoundOnly, ResourceCap };

const char* to_string(APStatus s);

struct APResult {
  std::uint64_t d = 1;
  std::uint64_t best_len = 0;
  std::uint64_t best_start = 0;
  std::uint64_t prefix_len = 0;
  APStatus status = APStatus::LowerBoundOnly;
  std::string note;
};

/// Longest monochromatic progression of difference d; leftmost start among maxima.
APResult max_ap_in_prefix(std::span<const Letter> word, std::uint64_t d);
/// Same result, computed over contiguous segments in parallel.
APResult max_ap_in_prefix_omp(std::span<const Letter> word, std::uint64_t d, int jobs = 0);

struct ScanPolicy {
  std::uint64_t min_prefix = std::uint64_t{1} << 20;
  std::uint64_t prefix_cap = std::uint64_t{1} << 26;
  std::optional<std::uint64_t> r_override;
  int jobs = 0;
};

/// Coded prefix of a fixed point that grows on demand; read-only between `ensure` calls.
class SequenceWindow {
 public:
  SequenceWindow(FixedPointSpec fp, std::optional<Coding> coding, int jobs = 0);

  void ensure(std::uint64_t len, std::uint64_t cap);
  std::span<const Letter> view(std::uint64_t len) const;
  std::uint64_t size() const { return data_.size(); }

  const FixedPointSpec& fixed_point() const { return fp_; }
  const Coding* coding() const { return coding_ ? &*coding_ : nullptr; }

 private:
  FixedPointSpec fp_;
  std::optional<Coding> coding_;
  int jobs_;
  Word data_;
};

/// Upper bound min over M of L^{N+M}/gcd(d, L^M), for M from the least with d <= L^M up to the
/// exponent making q^M > d (q the smallest prime-power factor of L), restricted to M with
/// gcd(d, L^M) = gcd(d, L^{N+M}).
struct UpperBound {
  BigInt value;
  std::uint64_t M = 0;
  BigInt ell;
};

std::optional<UpperBound> upper_bound_formula(std::uint64_t L, const BigInt& d, std::uint64_t N);

/// Requires a bijective substitution with Abelian column group; N is computed from the
/// substitution when not supplied.
std::optional<UpperBound> upper_bound(const Substitution& sub, const BigInt& d,
                                      std::optional<std::uint64_t> N = std::nullopt);

/// The closed form L^{N+1} d^{ceil B}, reported alongside the minimum.
BigInt closed_form_bound(std::uint64_t L, const BigInt& d, std::uint64_t N);

/// Whether a fixed point (with coding) qualifies for certified scans, and the data needed to certify.
struct Certifier {
  bool eligible = false;
  std::string reason;
  std::optional<Substitution> normalized;
  std::uint64_t N = 0;
  bool N_exact = false;
  BigInt R;

  static Certifier build(const FixedPointSpec& fp, const Coding* coding, std::optional<std::uint64_t> r_override);

  std::optional<BigInt> bound(std::uint64_t d) const;
  /// (R+1)(d U(d) + 1), the prefix length that contains every progression of span d U(d).
  std::optional<BigInt> window(std::uint64_t d) const;
};

APResult a_of_d(SequenceWindow& window, const Certifier& cert, std::uint64_t d, const ScanPolicy& policy,
                std::optional<std::uint64_t> predicted_lower = std::nullopt);
APResult a_of_d(const FixedPointSpec& fp, const Coding* coding, std::uint64_t d, const ScanPolicy& policy,
                std::optional<std::uint64_t> predicted_lower = std::nullopt);

/// Rows for d_from..d_to in increasing d; the d values are scanned in parallel rounds.
std::vector<APResult> scan(SequenceWindow& window, const Certifier& cert, std::uint64_t d_from, std::uint64_t d_to,
                           const ScanPolicy& policy);

std::string scan_csv_header();
std::string scan_csv_row(const APResult& r);

struct DifferenceFamily {
  std::string name;
  std::vector<std::pair<std::string, std::uint64_t>> params;
  BigInt d;
  BigInt predicted_lower;
  std::optional<BigInt> predicted_upper;
  /// Growth exponent alpha of the family, written as a fraction "1/n".
  std::string growth;
  std::string source;
};

}  // namespace apseq
