#include "apseq/stream.hpp"

#include <algorithm>

#include <omp.h>

namespace apseq {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kLeafTable = std::uint64_t{1} << 20;

// Number of base-L digits needed for n, rounded up to a multiple of p (at least p).
unsigned padded_digits(std::uint64_t n, std::uint64_t L, unsigned p) {
  unsigned m = 0;
  u128 span = 1;
  while (span <= n) {
    span *= L;
    ++m;
  }
  unsigned k = (m + p - 1) / p;
  return std::max(1U, k) * p;
}

}  // namespace

Coding::Coding(Alphabet output, std::vector<Letter> map) : output_(std::move(output)), map_(std::move(map)) {
  std::vector<bool> seen(output_.size(), false);
  injective_ = true;
  for (Letter b : map_) {
    if (b >= output_.size()) throw ValidationError("coding image index out of range");
    if (seen[b]) injective_ = false;
    seen[b] = true;
  }
}

Coding Coding::identity(const Alphabet& alphabet) {
  std::vector<Letter> map(alphabet.size());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = static_cast<Letter>(a);
  return Coding(alphabet, std::move(map));
}

FixedPointSpec FixedPointSpec::make(const Substitution& sub, std::optional<Letter> seed) {
  if (sub.length() < 2) throw ValidationError("fixed points need substitution length L >= 2");
  const std::size_t c = sub.size();
  auto order_of = [&](Letter a) -> unsigned {
    Letter x = a;
    for (unsigned p = 1; p <= c; ++p) {
      x = sub.at(x, 0);
      if (x == a) return p;
    }
    return 0;
  };
  if (seed) {
    if (*seed >= c) throw ValidationError("seed letter out of range");
    unsigned p = order_of(*seed);
    if (p == 0) {
      throw ValidationError("no power of the substitution maps '" + sub.alphabet().name(*seed) +
                            "' to a word starting with itself");
    }
    return FixedPointSpec{sub, *seed, p};
  }
  std::optional<FixedPointSpec> best;
  for (std::size_t a = 0; a < c; ++a) {
    unsigned p = order_of(static_cast<Letter>(a));
    if (p != 0 && (!best || p < best->power)) best = FixedPointSpec{sub, static_cast<Letter>(a), p};
  }
  if (!best) throw ValidationError("no letter starts a fixed point of any power");
  return *best;
}

Letter letter_at(const FixedPointSpec& fp, std::uint64_t n) {
  const std::uint64_t L = fp.sub.length();
  unsigned m = padded_digits(n, L, fp.power);
  // Most significant digit first.
  u128 place = 1;
  for (unsigned j = 1; j < m; ++j) place *= L;
  Letter x = fp.seed;
  u128 rest = n;
  for (unsigned j = 0; j < m; ++j) {
    auto digit = static_cast<std::size_t>(rest / place);
    rest %= place;
    x = fp.sub.at(x, digit);
    place /= L;
  }
  return x;
}

void fill_range(const FixedPointSpec& fp, std::uint64_t start, std::uint64_t span, Letter* out,
                const Coding* coding) {
  if (span == 0) return;
  const Substitution& sub = fp.sub;
  const std::uint64_t L = sub.length();
  const std::size_t c = sub.size();
  const u128 end = u128{start} + span;
  unsigned K = padded_digits(static_cast<std::uint64_t>(end - 1), L, fp.power);

  // Leaf level J: rho^J(a) tabulated for every letter.
  const std::uint64_t budget = std::min<std::uint64_t>(kLeafTable, std::max<std::uint64_t>(span, 4096));
  unsigned J = 0;
  std::uint64_t leaf = 1;
  while (J < K && (leaf * L) * c <= budget) {
    leaf *= L;
    ++J;
  }
  std::vector<Letter> table(c * leaf);
  for (std::size_t a = 0; a < c; ++a) {
    Word w = sub.expand(static_cast<Letter>(a), J);
    for (std::uint64_t i = 0; i < leaf; ++i) table[a * leaf + i] = coding ? (*coding)(w[i]) : w[i];
  }

  struct Node {
    Letter letter;
    unsigned level;
    u128 pos;
  };
  std::vector<u128> size(K + 1, 1);
  for (unsigned j = 1; j <= K; ++j) size[j] = size[j - 1] * L;
  std::vector<Node> stack;
  stack.reserve(std::size_t{L} * (K + 1));
  stack.push_back({fp.seed, K, 0});
  while (!stack.empty()) {
    Node nd = stack.back();
    stack.pop_back();
    u128 lo = nd.pos;
    u128 hi = nd.pos + size[nd.level];
    if (hi <= start || lo >= end) continue;
    if (nd.level == J) {
      u128 from = std::max<u128>(lo, start);
      u128 to = std::min<u128>(hi, end);
      const Letter* src = table.data() + std::size_t{nd.letter} * leaf + static_cast<std::size_t>(from - lo);
      std::copy(src, src + static_cast<std::size_t>(to - from), out + static_cast<std::size_t>(from - start));
      continue;
    }
    const u128 child = size[nd.level - 1];
    for (std::uint64_t i = L; i-- > 0;) {
      stack.push_back({sub.at(nd.letter, i), nd.level - 1, nd.pos + child * i});
    }
  }
}

Word prefix(const FixedPointSpec& fp, std::uint64_t len, const Coding* coding, std::uint64_t cap) {
  if (len == 0) throw ValidationError("prefix length must be positive");
  if (len > cap) throw ResourceError("prefix length " + std::to_string(len) + " exceeds cap " + std::to_string(cap));
  Word out(len);
  fill_range(fp, 0, len, out.data(), coding);
  return out;
}

Word prefix_parallel(const FixedPointSpec& fp, std::uint64_t len, const Coding* coding, std::uint64_t cap,
                     int jobs) {
  if (len == 0) throw ValidationError("prefix length must be positive");
  if (len > cap) throw ResourceError("prefix length " + std::to_string(len) + " exceeds cap " + std::to_string(cap));
  Word out(len);
  const std::uint64_t chunk = std::uint64_t{1} << 18;
  const auto chunks = static_cast<std::int64_t>((len + chunk - 1) / chunk);
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < chunks; ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(i) * chunk;
    std::uint64_t n = std::min(chunk, len - s);
    fill_range(fp, s, n, out.data() + s, coding);
  }
  return out;
}

std::string export_text(const Alphabet& alphabet, std::span<const Letter> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

std::string export_u8(std::span<const Letter> word) {
  std::string out(word.size(), '\0');
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] > 255) throw ValidationError("letter index " + std::to_string(word[i]) + " does not fit in u8");
    out[i] = static_cast<char>(word[i]);
  }
  return out;
}

}  // namespace apseq
