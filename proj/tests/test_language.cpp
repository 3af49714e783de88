#include <doctest.h>

#include "apseq/builtins.hpp"
#include "oracles.hpp"

using namespace apseq;

namespace {

std::set<std::string> as_strings(const Substitution& s, const LegalWords& lw) {
  std::set<std::string> out;
  for (const auto& w : lw.words) out.insert(s.alphabet().format(w));
  return out;
}

/// Factors of length n of the expanded images of every letter.
std::set<std::string> factors(const oracle::Rules& r, std::size_t n, unsigned level) {
  std::set<std::string> out;
  for (const auto& [a, _] : r) {
    auto w = oracle::expand(r, std::string(1, a), level);
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  }
  return out;
}

}  // namespace

TEST_CASE("primitivity") {
  CHECK(is_primitive(thue_morse(2)));
  CHECK_FALSE(is_primitive(parse_substitution("a -> aa ; b -> bb")));
  CHECK(is_primitive(builtin("outlook6").sub));
  CHECK_FALSE(is_primitive(parse_substitution("a -> ab ; b -> bb")));
  for (const auto& name : {"rs", "hadamard4", "vandermonde:3", "a4-example", "supersub5", "supersub6"})
    CHECK_MESSAGE(is_primitive(builtin(name).sub), name);
}

TEST_CASE("legal words") {
  auto tm = thue_morse(2);
  CHECK(as_strings(tm, legal_words(tm, 2)) == std::set<std::string>{"00", "01", "10", "11"});
  auto three = as_strings(tm, legal_words(tm, 3));
  CHECK(three.count("000") == 0);
  CHECK(three.count("111") == 0);
  CHECK(three == factors({{'0', "01"}, {'1', "10"}}, 3, 6));
  auto o6 = builtin("outlook6").sub;
  auto one = legal_words(o6, 1);
  CHECK(one.primitive);
  CHECK(one.words.size() == 6);
  oracle::Rules r{{'a', "ad"}, {'b', "bc"}, {'c', "ea"}, {'d', "ab"}, {'e', "bf"}, {'f', "ba"}};
  CHECK(as_strings(o6, legal_words(o6, 4)) == factors(r, 4, 10));
}

TEST_CASE("induced two-block substitution") {
  auto tm = thue_morse(2);
  auto ind = induced_two_block(tm);
  CHECK(ind.sub.size() == 4);
  const auto& A = ind.sub.alphabet();
  Letter x00 = A.index("0_0");
  CHECK(A.format(ind.sub.rule(x00)) == "0_1 1_0");
  CHECK(induced_two_block(thue_morse(3)).sub.size() == 9);

  for (const char* name : {"tm:3", "outlook6", "a4-example"}) {
    auto s = builtin(name).sub;
    auto c = induced_two_block(s);
    for (Letter x = 0; x < c.sub.size(); ++x) {
      auto rule = c.sub.rule(x);
      for (std::size_t i = 0; i < s.length(); ++i) CHECK(c.letters[rule[i]].first == s.at(c.letters[x].first, i));
    }
  }
}

TEST_CASE("recurrence constants") {
  auto f = recurrence_constants(thue_morse(2), RecurrenceMode::Formula);
  CHECK(f.R_formula == 4094);
  CHECK(f.N_bound == 11);
  CHECK_FALSE(f.N_exact.has_value());
  auto e = recurrence_constants(thue_morse(2), RecurrenceMode::Exact);
  REQUIRE(e.N_exact.has_value());
  CHECK(*e.N_exact == 3);
  auto g = recurrence_constants(thue_morse(5).power(1), RecurrenceMode::Formula);
  CHECK(g.L == 5);
  CHECK(recurrence_exponent(3) == 66);
  CHECK(recurrence_constants(builtin("c3-invpal").sub, RecurrenceMode::Formula).N_bound == 66);
  CHECK_THROWS_AS(recurrence_constants(parse_substitution("a -> aa ; b -> bb"), RecurrenceMode::Exact),
                  ValidationError);
  CHECK_THROWS_AS(recurrence_constants(builtin("tm:3").sub, RecurrenceMode::Exact, 64), ResourceError);
}

TEST_CASE("exact level matches the first level whose images contain every legal 2-word") {
  for (const char* name : {"tm:2", "tm:3", "outlook6"}) {
    auto s = builtin(name).sub;
    auto legal = legal_words(s, 2).words;
    auto level = saturation_level(s);
    REQUIRE(level.has_value());
    auto contains_all = [&](unsigned n) {
      for (Letter a = 0; a < s.size(); ++a) {
        auto w = s.expand(a, n);
        std::set<Word> seen;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) seen.insert({w[i], w[i + 1]});
        if (seen != legal) return false;
      }
      return true;
    };
    CHECK(contains_all(static_cast<unsigned>(*level)));
    if (*level > 0) CHECK_FALSE(contains_all(static_cast<unsigned>(*level - 1)));
  }
}

TEST_CASE("aperiodicity certificate") {
  CHECK(aperiodicity_certificate(thue_morse(2)).verdict == Aperiodicity::AperiodicByCriterion);
  auto per = aperiodicity_certificate(parse_substitution("a -> ab ; b -> ab"));
  CHECK(per.verdict == Aperiodicity::PeriodicDetected);
  CHECK(per.period == 2);
  CHECK(aperiodicity_certificate(parse_substitution("a -> ab ; b -> aa")).verdict == Aperiodicity::Unknown);
  CHECK(aperiodicity_certificate(builtin("c3-invpal").sub).verdict == Aperiodicity::AperiodicByCriterion);
}

TEST_CASE("height") {
  CHECK(height(thue_morse(2), 1 << 16).height == 1);
  CHECK(height(build_spin_substitution(SpinSystem::rudin_shapiro()), 1 << 16).height == 1);
  auto h = height(parse_substitution("a -> ab ; b -> ab"), 1 << 10);
  CHECK(h.height == 1);
  // Returns of a in the fixed point of a -> aba, b -> bab: a at every even position, so gcd 2.
  CHECK(height(parse_substitution("a -> aba ; b -> bab"), 1 << 12).height == 2);
}
