#include <doctest.h>

#include "apseq/builtins.hpp"
#include "oracles.hpp"

using namespace apseq;

namespace {

std::string str(const Alphabet& a, std::span<const Letter> w) { return a.format(w); }

std::string column_string(const Substitution& s, const ColumnMap& m) {
  std::string out;
  for (Letter a = 0; a < m.size(); ++a) out += s.alphabet().name(m(a));
  return out;
}

oracle::Rules rules_of(const Substitution& s) {
  oracle::Rules r;
  for (Letter a = 0; a < s.size(); ++a) r[s.alphabet().name(a)[0]] = s.alphabet().format(s.rule(a));
  return r;
}

}  // namespace

TEST_CASE("parse binary Thue-Morse") {
  auto s = parse_substitution("0 -> 01 ; 1 -> 10");
  CHECK(s.size() == 2);
  CHECK(s.length() == 2);
  CHECK(str(s.alphabet(), s.rule(0)) == "01");
  CHECK(str(s.alphabet(), s.rule(1)) == "10");
  CHECK(s == thue_morse(2));
}

TEST_CASE("parse the six-letter length-2 substitution") {
  auto s = parse_substitution("a -> ad ; b -> bc ; c -> ea\nd -> ab ; e -> bf ; f -> ba\n");
  CHECK(s.size() == 6);
  CHECK(s.length() == 2);
  CHECK(s == builtin("outlook6").sub);
}

TEST_CASE("unequal rule lengths are rejected") {
  CHECK_THROWS_AS(parse_substitution("0 -> 01 ; 1 -> 1"), ValidationError);
  try {
    parse_substitution("0 -> 01 ; 1 -> 1");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("length") != std::string::npos);
  }
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_AS(parse_substitution("0 -> 01\n1 10"), ParseError);
  try {
    parse_substitution("0 -> 01\n1 -> ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_substitution("0 -> 01 ; 1 -> 12"), ValidationError);
  CHECK_THROWS_AS(parse_substitution("0 -> 01 ; 0 -> 10 ; 1 -> 10"), ValidationError);
  CHECK_THROWS_AS(parse_substitution("@alphabet 0 1 2\n0 -> 01 ; 1 -> 10"), ValidationError);
  CHECK_THROWS_AS(parse_substitution(""), Error);
}

TEST_CASE("comments, header order and multi-character letters") {
  auto s = parse_substitution("@alphabet b a  # order\nb -> ba\na -> ab # tail\n");
  CHECK(s.alphabet().name(0) == "b");
  CHECK(s.at(0, 1) == 1);
  auto m = parse_substitution("@alphabet x1 x2\nx1 -> x1 x2\nx2 -> x2 x1\n");
  CHECK(m.size() == 2);
  CHECK(m.length() == 2);
  CHECK_FALSE(m.alphabet().compact());
  auto again = parse_substitution(format_substitution(m));
  CHECK(again == m);
}

TEST_CASE("JSON mirror") {
  auto s = parse_substitution(R"({"alphabet": ["b", "a"], "rules": {"a": ["a", "b"], "b": "ba"}})");
  CHECK(s.alphabet().name(0) == "b");
  CHECK(str(s.alphabet(), s.rule(1)) == "ab");
  CHECK_THROWS_AS(parse_substitution(R"({"rules": {"a": ["a", "b"]})"), ParseError);
  CHECK_THROWS_AS(parse_substitution(R"({"rules": {"a": ["a", "c"]}})"), ValidationError);
}

TEST_CASE("format round trip on built-ins") {
  for (const auto& name : builtin_names()) {
    auto t = builtin(name == "tm:L" ? "tm:4" : name == "vandermonde:L" ? "vandermonde:3" : name);
    CHECK_MESSAGE(parse_substitution(format_substitution(t.sub)) == t.sub, name);
  }
}

TEST_CASE("columns") {
  auto tm = thue_morse(2);
  CHECK(column_string(tm, tm.column(1)) == "10");
  CHECK(tm.column(1).kind() == ColumnKind::Bijective);
  for (std::size_t L : {3, 5, 7}) {
    auto t = thue_morse(L);
    for (std::size_t i = 0; i < L; ++i)
      for (Letter a = 0; a < L; ++a) CHECK(t.column(i)(a) == (a + i) % L);
  }
  auto co = parse_substitution("a -> ab ; b -> ab");
  CHECK(co.column(0).kind() == ColumnKind::Coincidence);
  CHECK(co.column(0).image == std::vector<Letter>{0, 0});
  auto partial = parse_substitution("a -> a ; b -> a ; c -> b");
  CHECK(partial.column(0).kind() == ColumnKind::PartialCoincidence);
  CHECK_FALSE(co.is_bijective());
}

TEST_CASE("power columns") {
  auto tm = thue_morse(2);
  CHECK(power_column(tm, 3, 2).is_identity());
  auto t3 = thue_morse(3);
  CHECK(power_column(t3, 13, 3).is_identity());
  auto theta = build_spin_substitution(SpinSystem::rudin_shapiro());
  auto col = power_column(theta, 2, 2);
  CHECK(col(0) == 0);
  CHECK(col == theta.power(2).column(2));
  CHECK_THROWS_AS(power_column(tm, 0, 0), ValidationError);
  CHECK_THROWS_AS(power_column(tm, 4, 2), ValidationError);
}

TEST_CASE("power columns against expanded images") {
  for (const char* name : {"a4-example", "outlook6", "supersub5", "s3-noninvpal"}) {
    auto s = builtin(name).sub;
    auto r = rules_of(s);
    for (unsigned n = 1; n <= 3; ++n) {
      std::uint64_t len = 1;
      for (unsigned i = 0; i < n; ++i) len *= s.length();
      for (std::uint64_t k = 0; k < len; k += 1 + len / 40)
        CHECK(column_string(s, power_column(s, k, n)) == oracle::power_column(r, k, n));
    }
  }
}

TEST_CASE("expand and power") {
  auto tm = thue_morse(2);
  CHECK(str(tm.alphabet(), tm.expand(0, 3)) == "01101001");
  CHECK(tm.power(3).length() == 8);
  CHECK(str(tm.alphabet(), tm.power(3).rule(1)) == "10010110");
  CHECK_THROWS_AS(tm.expand(0, 30, 1024), ResourceError);
  CHECK_THROWS_AS(tm.power(30), ResourceError);
}
