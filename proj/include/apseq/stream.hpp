#pragma once

#include <optional>

#include "apseq/substitution.hpp"

namespace apseq {

inline constexpr std::uint64_t kDefaultPrefixCap = std::uint64_t{1} << 30;

/// Letter-to-letter map into an output alphabet.
class Coding {
 public:
  Coding(Alphabet output, std::vector<Letter> map);
  static Coding identity(const Alphabet& alphabet);

  const Alphabet& output() const { return output_; }
  const std::vector<Letter>& map() const { return map_; }
  Letter operator()(Letter a) const { return map_[a]; }
  bool injective() const { return injective_; }
  std::size_t domain_size() const { return map_.size(); }

 private:
  Alphabet output_;
  std::vector<Letter> map_;
  bool injective_ = false;
};

/// A one-sided fixed point of rho^power whose first letter is `seed`.
struct FixedPointSpec {
  Substitution sub;
  Letter seed = 0;
  unsigned power = 1;

  /// With a seed: smallest p <= c with rho_0^p(seed) = seed. Without: the smallest
  /// (p, letter) pair over all letters. Throws ValidationError when no power works.
  static FixedPointSpec make(const Substitution& sub, std::optional<Letter> seed = std::nullopt);
};

/// w_n by composing columns along the base-L digits of n.
Letter letter_at(const FixedPointSpec& fp, std::uint64_t n);

/// Writes w_start .. w_{start+span-1}, coded when `coding` is given, into out[0..span).
void fill_range(const FixedPointSpec& fp, std::uint64_t start, std::uint64_t span, Letter* out,
                const Coding* coding = nullptr);

Word prefix(const FixedPointSpec& fp, std::uint64_t len, const Coding* coding = nullptr,
            std::uint64_t cap = kDefaultPrefixCap);

/// Same output as `prefix`, generated in independent chunks across OpenMP threads.
Word prefix_parallel(const FixedPointSpec& fp, std::uint64_t len, const Coding* coding = nullptr,
                     std::uint64_t cap = kDefaultPrefixCap, int jobs = 0);

/// Space-separated symbol names.
std::string export_text(const Alphabet& alphabet, std::span<const Letter> word);
/// One byte per letter index; throws ValidationError if an index exceeds 255.
std::string export_u8(std::span<const Letter> word);

}  // namespace apseq
