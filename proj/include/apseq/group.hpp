#pragma once

#include "apseq/substitution.hpp"

namespace apseq {

/// A bijection of 0..c-1; composition follows map notation, (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Letter> image);
  static Permutation identity(std::size_t c);
  static Permutation from_column(const ColumnMap& column);

  std::size_t size() const { return image_.size(); }
  Letter operator()(Letter a) const { return image_[a]; }
  const std::vector<Letter>& image() const { return image_; }

  Permutation operator*(const Permutation& inner) const;
  Permutation inverse() const;
  Permutation pow(std::uint64_t e) const;
  std::uint64_t order() const;
  bool is_identity() const;

  /// "(0 1 2)(3 4)" using the alphabet's letter names; "()" for the identity.
  std::string cycles(const Alphabet& alphabet) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Letter> image_;
};

struct ColumnGroup {
  std::vector<Permutation> generators;
  /// Sorted, so membership is a binary search.
  std::vector<Permutation> elements;
  std::uint64_t order = 0;
  std::uint64_t exponent = 1;
  bool abelian = true;
  bool transitive = false;

  bool contains(const Permutation& p) const;

  /// Closure of the bijective columns. Throws ValidationError naming the first non-bijective
  /// column and ResourceError past `element_cap` elements.
  static ColumnGroup generate(const Substitution& sub, std::uint64_t element_cap = 5'000'000);
  static ColumnGroup generate(std::vector<Permutation> generators, std::size_t c,
                              std::uint64_t element_cap = 5'000'000);
};

struct PalindromicityReport {
  std::optional<Permutation> g_witness;
  bool inverse_palindromic = false;
};

/// Candidate g = rho_0 o rho_{L-1}; checks rho_i o rho_{L-1-i} = g for every i.
PalindromicityReport palindromicity(const Substitution& sub);

struct NormalizedSubstitution {
  Substitution sub;
  unsigned power = 1;
};

/// For bijective rho, rho^p with p the order of rho_0, so that column 0 is the identity.
NormalizedSubstitution normalize_zero_column(const Substitution& sub,
                                             std::uint64_t max_length = std::uint64_t{1} << 20);

/// Positions m (L^{ke}-1)/(L^k-1), 0 <= m < L^k, each checked to be the identity column of rho^{ke}
/// with e the group exponent. Requires a bijective substitution with rho_0 = id.
std::vector<std::uint64_t> identity_column_witness(const Substitution& sub, unsigned k);

}  // namespace apseq
