#include "apseq/substitution.hpp"

#include <algorithm>

namespace apseq {

const char* to_string(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::Bijective: return "bijective";
    case ColumnKind::Coincidence: return "coincidence";
    case ColumnKind::PartialCoincidence: return "partial-coincidence";
  }
  return "?";
}

std::size_t ColumnMap::image_size() const {
  std::vector<bool> seen(image.size(), false);
  std::size_t n = 0;
  for (Letter b : image) {
    if (!seen[b]) {
      seen[b] = true;
      ++n;
    }
  }
  return n;
}

ColumnKind ColumnMap::kind() const {
  std::size_t n = image_size();
  if (n == image.size()) return ColumnKind::Bijective;
  if (n == 1) return ColumnKind::Coincidence;
  return ColumnKind::PartialCoincidence;
}

bool ColumnMap::is_identity() const {
  for (std::size_t a = 0; a < image.size(); ++a) {
    if (image[a] != a) return false;
  }
  return true;
}

ColumnMap ColumnMap::identity(std::size_t c) {
  ColumnMap m;
  m.image.resize(c);
  for (std::size_t a = 0; a < c; ++a) m.image[a] = static_cast<Letter>(a);
  return m;
}

ColumnMap compose(const ColumnMap& outer, const ColumnMap& inner) {
  ColumnMap m;
  m.image.resize(inner.size());
  for (std::size_t a = 0; a < inner.size(); ++a) m.image[a] = outer.image[inner.image[a]];
  return m;
}

Substitution::Substitution(Alphabet alphabet, std::vector<Word> rules) : alphabet_(std::move(alphabet)) {
  const std::size_t c = alphabet_.size();
  if (rules.size() != c) {
    throw ValidationError("expected " + std::to_string(c) + " rules, got " + std::to_string(rules.size()));
  }
  length_ = rules.front().size();
  if (length_ == 0) throw ValidationError("rule for '" + alphabet_.name(0) + "' is empty");
  table_.reserve(c * length_);
  for (std::size_t a = 0; a < c; ++a) {
    if (rules[a].size() != length_) {
      throw ValidationError("unequal rule lengths: '" + alphabet_.name(static_cast<Letter>(a)) + "' has length " +
                            std::to_string(rules[a].size()) + ", expected " + std::to_string(length_));
    }
    for (Letter b : rules[a]) {
      if (b >= c) throw ValidationError("rule letter index " + std::to_string(b) + " out of range");
      table_.push_back(b);
    }
  }
}

ColumnMap Substitution::column(std::size_t i) const {
  if (i >= length_) {
    throw ValidationError("column index " + std::to_string(i) + " out of range 0.." + std::to_string(length_ - 1));
  }
  ColumnMap m;
  m.image.resize(size());
  for (std::size_t a = 0; a < size(); ++a) m.image[a] = at(static_cast<Letter>(a), i);
  return m;
}

std::vector<ColumnMap> Substitution::columns() const {
  std::vector<ColumnMap> out;
  out.reserve(length_);
  for (std::size_t i = 0; i < length_; ++i) out.push_back(column(i));
  return out;
}

bool Substitution::is_bijective() const {
  for (std::size_t i = 0; i < length_; ++i) {
    if (!column(i).is_bijective()) return false;
  }
  return true;
}

Word Substitution::apply(std::span<const Letter> word) const {
  Word out;
  out.reserve(word.size() * length_);
  for (Letter a : word) {
    auto r = rule(a);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Word Substitution::expand(Letter seed, unsigned n, std::uint64_t cap) const {
  Word w{seed};
  return expand(w, n, cap);
}

Word Substitution::expand(std::span<const Letter> word, unsigned n, std::uint64_t cap) const {
  Word w(word.begin(), word.end());
  for (unsigned j = 0; j < n; ++j) {
    auto next = checked_mul(w.size(), length_);
    if (!next || *next > cap) {
      throw ResourceError("expansion exceeds cap of " + std::to_string(cap) + " letters");
    }
    w = apply(w);
  }
  return w;
}

Substitution Substitution::power(unsigned n, std::uint64_t max_length) const {
  if (n == 0) throw ValidationError("power exponent must be positive");
  auto len = checked_pow(length_, n);
  if (!len || *len > max_length) {
    throw ResourceError("power rule length exceeds cap of " + std::to_string(max_length));
  }
  std::vector<Word> rules;
  rules.reserve(size());
  for (std::size_t a = 0; a < size(); ++a) rules.push_back(expand(static_cast<Letter>(a), n, max_length));
  return Substitution(alphabet_, std::move(rules));
}

ColumnMap power_column(const Substitution& sub, std::uint64_t k, unsigned n) {
  if (n == 0) throw ValidationError("power_column: n must be positive");
  const std::uint64_t L = sub.length();
  auto bound = checked_pow(L, n);
  if (bound && k >= *bound) {
    throw ValidationError("power_column: k=" + std::to_string(k) + " out of range for n=" + std::to_string(n));
  }
  std::vector<std::size_t> digits(n, 0);
  for (unsigned j = 0; j < n && L > 1; ++j) {
    digits[j] = k % L;
    k /= L;
  }
  // The most significant digit acts first.
  ColumnMap r = ColumnMap::identity(sub.size());
  for (unsigned j = n; j-- > 0;) {
    for (auto& x : r.image) x = sub.at(x, digits[j]);
  }
  return r;
}

}  // namespace apseq
