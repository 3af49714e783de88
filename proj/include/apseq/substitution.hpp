#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "apseq/types.hpp"

namespace apseq {

/// Ordered set of distinct symbol names; letters are referred to by their dense index.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  /// Letters "0", "1", ..., "n-1".
  static Alphabet numbered(std::size_t n);

  std::size_t size() const { return letters_.size(); }
  const std::string& name(Letter a) const { return letters_.at(a); }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<Letter> find(std::string_view symbol) const;
  Letter index(std::string_view symbol) const;

  /// True when every letter is a single UTF-8 code point, so words print without separators.
  bool compact() const { return compact_; }
  std::string format(std::span<const Letter> word) const;

  bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, Letter> index_;
  bool compact_ = true;
};

enum class ColumnKind { Bijective, Coincidence, PartialCoincidence };

const char* to_string(ColumnKind kind);

/// A column a -> rho_i(a), stored as its image table.
struct ColumnMap {
  std::vector<Letter> image;

  Letter operator()(Letter a) const { return image[a]; }
  std::size_t size() const { return image.size(); }
  std::size_t image_size() const;
  ColumnKind kind() const;
  bool is_bijective() const { return image_size() == image.size(); }
  bool is_identity() const;

  static ColumnMap identity(std::size_t c);
  bool operator==(const ColumnMap&) const = default;
};

/// outer o inner, i.e. a -> outer(inner(a)).
ColumnMap compose(const ColumnMap& outer, const ColumnMap& inner);

/// Constant-length substitution over a finite alphabet. Immutable once built.
class Substitution {
 public:
  /// Validates that there is one rule per letter, all of the same length L >= 1,
  /// and that every rule letter is in range.
  Substitution(Alphabet alphabet, std::vector<Word> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  std::size_t length() const { return length_; }

  Letter at(Letter a, std::size_t i) const { return table_[std::size_t{a} * length_ + i]; }
  std::span<const Letter> rule(Letter a) const {
    return {table_.data() + std::size_t{a} * length_, length_};
  }

  ColumnMap column(std::size_t i) const;
  std::vector<ColumnMap> columns() const;
  bool is_bijective() const;

  Word apply(std::span<const Letter> word) const;
  /// rho^n(seed), materialized. Throws ResourceError past `cap` letters.
  Word expand(Letter seed, unsigned n, std::uint64_t cap = std::uint64_t{1} << 28) const;
  Word expand(std::span<const Letter> word, unsigned n, std::uint64_t cap = std::uint64_t{1} << 28) const;

  /// rho^n as a substitution of length L^n on the same alphabet.
  Substitution power(unsigned n, std::uint64_t max_length = std::uint64_t{1} << 20) const;

  bool operator==(const Substitution& other) const {
    return alphabet_ == other.alphabet_ && length_ == other.length_ && table_ == other.table_;
  }

 private:
  Alphabet alphabet_;
  std::size_t length_ = 0;
  std::vector<Letter> table_;
};

/// Column k of rho^n: rho_{k_0} o rho_{k_1} o ... o rho_{k_{n-1}} for the base-L digits of k.
/// Never materializes rho^n.
ColumnMap power_column(const Substitution& sub, std::uint64_t k, unsigned n);

/// Text format: `letter -> word` clauses separated by ';' or newlines, '#' comments,
/// optional `@alphabet a b c` header fixing letter order.
Substitution parse_substitution(std::string_view source);
std::string format_substitution(const Substitution& sub);

}  // namespace apseq
