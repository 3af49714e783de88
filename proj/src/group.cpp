#include "apseq/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace apseq {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<Letter>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Letter x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t factorial_cap(std::size_t c) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= c; ++i) {
    auto next = checked_mul(f, i);
    if (!next) return std::numeric_limits<std::uint64_t>::max();
    f = *next;
  }
  return f;
}

}  // namespace

Permutation::Permutation(std::vector<Letter> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Letter x : image_) {
    if (x >= image_.size() || seen[x]) throw ValidationError("image is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t c) { return Permutation(ColumnMap::identity(c).image); }

Permutation Permutation::from_column(const ColumnMap& column) { return Permutation(column.image); }

Permutation Permutation::operator*(const Permutation& inner) const {
  std::vector<Letter> r(size());
  for (std::size_t a = 0; a < size(); ++a) r[a] = image_[inner.image_[a]];
  Permutation p;
  p.image_ = std::move(r);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Letter> r(size());
  for (std::size_t a = 0; a < size(); ++a) r[image_[a]] = static_cast<Letter>(a);
  Permutation p;
  p.image_ = std::move(r);
  return p;
}

Permutation Permutation::pow(std::uint64_t e) const {
  Permutation result = identity(size());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(size(), false);
  std::uint64_t ord = 1;
  for (std::size_t a = 0; a < size(); ++a) {
    if (seen[a]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = a; !seen[x]; x = image_[x]) {
      seen[x] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Permutation::is_identity() const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (image_[a] != a) return false;
  }
  return true;
}

std::string Permutation::cycles(const Alphabet& alphabet) const {
  std::string out;
  std::vector<bool> seen(size(), false);
  for (std::size_t a = 0; a < size(); ++a) {
    if (seen[a] || image_[a] == a) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = a; !seen[x]; x = image_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += alphabet.name(static_cast<Letter>(x));
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool ColumnGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

ColumnGroup ColumnGroup::generate(const Substitution& sub, std::uint64_t element_cap) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < sub.length(); ++i) {
    ColumnMap col = sub.column(i);
    if (!col.is_bijective()) {
      throw ValidationError("column " + std::to_string(i) + " is not bijective (" + to_string(col.kind()) + ")");
    }
    Permutation p = Permutation::from_column(col);
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
  }
  return generate(std::move(gens), sub.size(), element_cap);
}

ColumnGroup ColumnGroup::generate(std::vector<Permutation> generators, std::size_t c, std::uint64_t element_cap) {
  ColumnGroup g;
  g.generators = std::move(generators);
  const std::uint64_t cap = std::min(factorial_cap(c), element_cap);
  std::unordered_set<std::vector<Letter>, ImageHash> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(c);
  seen.insert(id.image());
  queue.push_back(id);
  g.elements.push_back(id);
  // Right multiplication by generators reaches every element of the finite group.
  while (!queue.empty()) {
    Permutation x = queue.front();
    queue.pop_front();
    for (const Permutation& s : g.generators) {
      Permutation y = x * s;
      if (seen.insert(y.image()).second) {
        if (seen.size() > cap) {
          throw ResourceError("column group exceeds " + std::to_string(cap) + " elements");
        }
        g.elements.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(g.elements.begin(), g.elements.end());
  g.order = g.elements.size();
  for (const Permutation& x : g.elements) g.exponent = std::lcm(g.exponent, x.order());
  for (std::size_t i = 0; i < g.generators.size() && g.abelian; ++i) {
    for (std::size_t j = i + 1; j < g.generators.size(); ++j) {
      if (g.generators[i] * g.generators[j] != g.generators[j] * g.generators[i]) {
        g.abelian = false;
        break;
      }
    }
  }
  std::vector<bool> orbit(c, false);
  for (const Permutation& x : g.elements) orbit[x(0)] = true;
  g.transitive = std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
  return g;
}

PalindromicityReport palindromicity(const Substitution& sub) {
  if (!sub.is_bijective()) throw ValidationError("palindromicity needs a bijective substitution");
  const std::size_t L = sub.length();
  Permutation g = Permutation::from_column(sub.column(0)) * Permutation::from_column(sub.column(L - 1));
  PalindromicityReport rep;
  for (std::size_t i = 0; i < L; ++i) {
    Permutation x = Permutation::from_column(sub.column(i)) * Permutation::from_column(sub.column(L - 1 - i));
    if (x != g) return rep;
  }
  rep.inverse_palindromic = g.is_identity();
  rep.g_witness = std::move(g);
  return rep;
}

NormalizedSubstitution normalize_zero_column(const Substitution& sub, std::uint64_t max_length) {
  if (!sub.is_bijective()) throw ValidationError("normalization needs a bijective substitution");
  auto p = Permutation::from_column(sub.column(0)).order();
  if (p == 1) return {sub, 1};
  return {sub.power(static_cast<unsigned>(p), max_length), static_cast<unsigned>(p)};
}

std::vector<std::uint64_t> identity_column_witness(const Substitution& sub, unsigned k) {
  if (k == 0) throw ValidationError("identity_column_witness: k must be positive");
  if (!sub.is_bijective() || !sub.column(0).is_identity()) {
    throw ValidationError("identity_column_witness needs a bijective substitution with identity column 0");
  }
  auto group = ColumnGroup::generate(sub);
  const std::uint64_t L = sub.length();
  const std::uint64_t e = group.exponent;
  auto Lk = checked_pow(L, k);
  auto Lke = checked_pow(L, k * e);
  if (!Lk || !Lke) throw ResourceError("identity witness positions overflow 64 bits");
  const std::uint64_t d = (*Lke - 1) / (*Lk - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < *Lk; ++m) {
    std::uint64_t pos = m * d;
    if (!power_column(sub, pos, static_cast<unsigned>(k * e)).is_identity()) {
      throw Error("internal: column " + std::to_string(pos) + " of the power is not the identity");
    }
    out.push_back(pos);
  }
  return out;
}

}  // namespace apseq
