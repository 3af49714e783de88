#include "apseq/substitution.hpp"

namespace apseq {

namespace {

std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char ch : s) {
    if ((ch & 0xC0U) != 0x80U) ++n;
  }
  return n;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ValidationError("alphabet must contain at least one letter");
  if (letters_.size() > kMaxAlphabet) {
    throw ValidationError("alphabet too large: " + std::to_string(letters_.size()) + " letters");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const std::string& s = letters_[i];
    if (s.empty()) throw ValidationError("empty letter name");
    if (!index_.emplace(s, static_cast<Letter>(i)).second) {
      throw ValidationError("duplicate letter '" + s + "' in alphabet");
    }
    if (utf8_length(s) != 1) compact_ = false;
  }
}

Alphabet Alphabet::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index(std::string_view symbol) const {
  auto found = find(symbol);
  if (!found) throw ValidationError("unknown letter '" + std::string(symbol) + "'");
  return *found;
}

std::string Alphabet::format(std::span<const Letter> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact_ && i > 0) out += ' ';
    out += letters_.at(word[i]);
  }
  return out;
}

}  // namespace apseq
