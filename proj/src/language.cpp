#include "apseq/language.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace apseq {

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t c = a.size();
  BoolMatrix r(c, std::vector<bool>(c, false));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < c; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < c; ++j) {
        if (b[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

std::set<std::pair<Letter, Letter>> legal_pairs(const Substitution& sub) {
  std::set<std::pair<Letter, Letter>> out;
  for (const Word& w : legal_words(sub, 2).words) out.emplace(w[0], w[1]);
  return out;
}

}  // namespace

bool is_primitive(const Substitution& sub) {
  const std::size_t c = sub.size();
  BoolMatrix m(c, std::vector<bool>(c, false));
  for (std::size_t a = 0; a < c; ++a) {
    for (Letter b : sub.rule(static_cast<Letter>(a))) m[a][b] = true;
  }
  // Boolean squaring up to the Wielandt index; once positive, all higher powers stay positive.
  const std::uint64_t cap = c * c - 2 * c + 2;
  std::uint64_t e = 1;
  while (e < cap) {
    m = multiply(m, m);
    e *= 2;
  }
  for (const auto& row : m) {
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  }
  return true;
}

LegalWords legal_words(const Substitution& sub, std::size_t n) {
  if (n == 0) throw ValidationError("legal_words: n must be positive");
  LegalWords out;
  out.primitive = is_primitive(sub);
  std::set<Word> all;
  for (std::size_t a = 0; a < sub.size(); ++a) all.insert(Word{static_cast<Letter>(a)});
  std::vector<Word> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& x : frontier) {
      Word img = sub.apply(x);
      for (std::size_t len = 1; len <= n && len <= img.size(); ++len) {
        for (std::size_t i = 0; i + len <= img.size(); ++i) {
          Word u(img.begin() + static_cast<std::ptrdiff_t>(i), img.begin() + static_cast<std::ptrdiff_t>(i + len));
          if (all.insert(u).second) next.push_back(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
  for (const Word& w : all) {
    if (w.size() == n) out.words.insert(w);
  }
  return out;
}

CollaredSubstitution induced_two_block(const Substitution& sub) {
  auto pairs = legal_pairs(sub);
  std::vector<std::pair<Letter, Letter>> letters(pairs.begin(), pairs.end());
  std::map<std::pair<Letter, Letter>, Letter> index;
  std::vector<std::string> names;
  const Alphabet& A = sub.alphabet();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    index[letters[i]] = static_cast<Letter>(i);
    names.push_back(A.name(letters[i].first) + "_" + A.name(letters[i].second));
  }
  const std::size_t L = sub.length();
  std::vector<Word> rules;
  for (const auto& [a, b] : letters) {
    Word x = sub.apply(Word{a, b});
    Word r;
    for (std::size_t i = 0; i < L; ++i) r.push_back(index.at({x[i], x[i + 1]}));
    rules.push_back(std::move(r));
  }
  return CollaredSubstitution{letters, Substitution(Alphabet(std::move(names)), std::move(rules))};
}

std::uint64_t recurrence_exponent(std::uint64_t c) { return c * c * c * c - 2 * c * c + 3; }

BigInt recurrence_formula(std::uint64_t c, std::uint64_t L) {
  return 2 * pow_big(L, recurrence_exponent(c)) - L;
}

std::optional<std::uint64_t> saturation_level(const Substitution& sub) {
  const std::uint64_t bound = recurrence_exponent(sub.size());
  const std::size_t c = sub.size();
  auto L2 = legal_pairs(sub);
  struct State {
    Letter first;
    Letter last;
    std::set<std::pair<Letter, Letter>> pairs;
  };
  std::vector<State> st(c);
  for (std::size_t a = 0; a < c; ++a) st[a] = {static_cast<Letter>(a), static_cast<Letter>(a), {}};
  auto complete = [&] {
    return std::all_of(st.begin(), st.end(), [&](const State& s) { return s.pairs.size() == L2.size(); });
  };
  std::uint64_t n = 0;
  while (!complete()) {
    if (n >= bound) return std::nullopt;
    std::vector<State> next(c);
    for (std::size_t a = 0; a < c; ++a) {
      auto r = sub.rule(static_cast<Letter>(a));
      State s{st[r.front()].first, st[r.back()].last, {}};
      for (std::size_t i = 0; i < r.size(); ++i) {
        s.pairs.insert(st[r[i]].pairs.begin(), st[r[i]].pairs.end());
        if (i + 1 < r.size()) s.pairs.emplace(st[r[i]].last, st[r[i + 1]].first);
      }
      next[a] = std::move(s);
    }
    st = std::move(next);
    ++n;
  }
  return n;
}

RecurrenceReport recurrence_constants(const Substitution& sub, RecurrenceMode mode, std::uint64_t cap) {
  RecurrenceReport rep;
  rep.c = sub.size();
  rep.L = sub.length();
  rep.N_bound = recurrence_exponent(rep.c);
  rep.R_formula = recurrence_formula(rep.c, rep.L);
  if (mode == RecurrenceMode::Formula) return rep;
  if (!is_primitive(sub)) throw ValidationError("exact recurrence constants need a primitive substitution");

  auto level = saturation_level(sub);
  if (!level) return rep;
  const std::uint64_t n = *level;
  const std::size_t c = sub.size();
  auto L2 = legal_pairs(sub);
  rep.N_exact = n;

  auto block = checked_pow(rep.L, n);
  if (!block || *block > cap / 2) {
    throw ResourceError("exact return-word scan needs superwords of length 2*L^" + std::to_string(n) +
                        ", above cap " + std::to_string(cap));
  }
  std::vector<Word> tiles(c);
  for (std::size_t a = 0; a < c; ++a) tiles[a] = sub.expand(static_cast<Letter>(a), static_cast<unsigned>(n), cap);
  std::uint64_t zeta = 0;
  for (const auto& [b, d] : L2) {
    Word w = tiles[b];
    w.insert(w.end(), tiles[d].begin(), tiles[d].end());
    std::map<std::pair<Letter, Letter>, std::size_t> last;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      std::pair<Letter, Letter> u{w[i], w[i + 1]};
      auto it = last.find(u);
      if (it != last.end()) {
        zeta = std::max<std::uint64_t>(zeta, i - it->second);
        it->second = i;
      } else {
        last.emplace(u, i);
      }
    }
  }
  rep.zeta2_exact = zeta;
  rep.R_exact = zeta * rep.L;
  return rep;
}

const char* to_string(Aperiodicity a) {
  switch (a) {
    case Aperiodicity::AperiodicByCriterion: return "aperiodic-by-criterion";
    case Aperiodicity::PeriodicDetected: return "periodic-detected";
    case Aperiodicity::Unknown: return "unknown";
  }
  return "?";
}

AperiodicityCertificate aperiodicity_certificate(const Substitution& sub, std::uint64_t prefix_cap) {
  AperiodicityCertificate cert;
  if (is_primitive(sub) && sub.is_bijective()) {
    auto L2 = legal_pairs(sub);
    std::map<Letter, int> firsts;
    std::map<Letter, int> lasts;
    for (const auto& [a, b] : L2) {
      if (++firsts[a] == 2) {
        cert.verdict = Aperiodicity::AperiodicByCriterion;
        cert.reason = "legal 2-words share first letter " + sub.alphabet().name(a);
        return cert;
      }
      if (++lasts[b] == 2) {
        cert.verdict = Aperiodicity::AperiodicByCriterion;
        cert.reason = "legal 2-words share last letter " + sub.alphabet().name(b);
        return cert;
      }
    }
  }
  std::optional<FixedPointSpec> fp;
  try {
    fp = FixedPointSpec::make(sub);
  } catch (const ValidationError& e) {
    cert.reason = e.what();
    return cert;
  }
  Word w = prefix(*fp, prefix_cap, nullptr, prefix_cap);
  // Prefix function; the shortest period of the whole prefix is n - pi[n-1].
  std::vector<std::size_t> pi(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  std::size_t p = w.size() - pi.back();
  if (p <= w.size() / 2) {
    Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    try {
      Word img = sub.expand(v, fp->power, prefix_cap);
      bool ok = img.size() % p == 0;
      for (std::size_t i = 0; ok && i < img.size(); ++i) ok = img[i] == v[i % p];
      if (ok) {
        cert.verdict = Aperiodicity::PeriodicDetected;
        cert.period = p;
        cert.reason = "fixed point is the periodic word with period " + std::to_string(p);
        return cert;
      }
    } catch (const ResourceError&) {
    }
  }
  cert.reason = "criterion inapplicable and no period found in a prefix of length " + std::to_string(w.size());
  return cert;
}

HeightReport height(const Substitution& sub, std::uint64_t prefix_len) {
  auto fp = FixedPointSpec::make(sub);
  Word w = prefix(fp, prefix_len);
  std::uint64_t g = 0;
  for (std::size_t a = 1; a < w.size(); ++a) {
    if (w[a] == w[0]) g = std::gcd(g, static_cast<std::uint64_t>(a));
  }
  if (g == 0) throw ValidationError("prefix too short: the first letter never recurs");
  const std::uint64_t L = sub.length();
  for (std::uint64_t s = std::gcd(g, L); s > 1; s = std::gcd(g, L)) g /= s;
  return {g, prefix_len};
}

}  // namespace apseq
