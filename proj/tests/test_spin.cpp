#include <doctest.h>

#include "apseq/builtins.hpp"
#include "oracles.hpp"

using namespace apseq;

TEST_CASE("Rudin-Shapiro spin substitution") {
  auto sys = SpinSystem::rudin_shapiro();
  auto theta = build_spin_substitution(sys);
  const auto& A = theta.alphabet();
  CHECK(A.letters() == std::vector<std::string>{"0", "1", "0~1", "1~1"});
  CHECK(A.format(theta.rule(A.index("0"))) == "0 1");
  CHECK(A.format(theta.rule(A.index("1"))) == "0 1~1");
  CHECK(A.format(theta.rule(A.index("0~1"))) == "0~1 1~1");
  CHECK(A.format(theta.rule(A.index("1~1"))) == "0~1 1");
}

TEST_CASE("Vandermonde spin substitution") {
  auto sys = SpinSystem::vandermonde(3);
  auto theta = build_spin_substitution(sys);
  CHECK(theta.size() == 9);
  CHECK(theta.length() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(sys.spin_of(theta.at(0, i)) == 0);
    CHECK(sys.digit_of(theta.at(0, i)) == i);
  }
  for (Letter a = 0; a < theta.size(); ++a)
    for (std::size_t i = 0; i < 3; ++i) {
      Letter base = sys.letter(sys.digit_of(a), 0);
      CHECK(sys.spin_of(theta.at(a, i)) == (sys.spin_of(theta.at(base, i)) + sys.spin_of(a)) % 3);
      CHECK(sys.digit_of(theta.at(a, i)) == sys.digit_of(theta.at(base, i)));
    }
}

TEST_CASE("spin_letter_at") {
  auto rs = SpinSystem::rudin_shapiro();
  CHECK(spin_letter_at(rs, 6) == 1);
  CHECK(spin_letter_at(SpinSystem::vandermonde(3), 4) == 1);
  for (const auto& sys : {rs, SpinSystem::hadamard4(), SpinSystem::vandermonde(3), SpinSystem::vandermonde(5)})
    CHECK(spin_letter_at(sys, 0) == 0);
  for (std::uint64_t n = 0; n < 1 << 14; ++n) {
    REQUIRE(spin_letter_at(rs, n) == static_cast<std::uint64_t>(oracle::rudin_shapiro(n)));
    REQUIRE(spin_letter_at(SpinSystem::hadamard4(), n) == static_cast<std::uint64_t>(oracle::hadamard4(n)));
    REQUIRE(spin_letter_at(SpinSystem::vandermonde(5), n) == oracle::vandermonde(n, 5));
  }
}

TEST_CASE("fixed point spins agree with the digit formula") {
  for (const char* name : {"rs", "hadamard4", "vandermonde:3", "vandermonde:5"}) {
    auto t = builtin(name);
    auto w = prefix(t.fixed_point(), 1 << 14, &*t.default_coding);
    for (std::uint64_t n = 0; n < w.size(); ++n) REQUIRE(w[n] == spin_letter_at(*t.spin, n));
  }
}

TEST_CASE("recurrences") {
  auto r = check_recurrence(SpinSystem::rudin_shapiro(), 1 << 16);
  CHECK(r.ok);
  CHECK(r.checked > 0);
  auto v = check_recurrence(SpinSystem::vandermonde(5), 15625);
  CHECK(v.ok);
  auto u = [](std::uint64_t n) { return static_cast<std::uint64_t>(oracle::rudin_shapiro(n)); };
  for (std::uint64_t n = 0; n < 1 << 16; ++n) {
    REQUIRE(u(2 * n) == u(n));
    REQUIRE(u(2 * n + 1) == ((n & 1) + u(n)) % 2);
  }
}

TEST_CASE("corrupted matrix is caught") {
  SpinSystem bad(2, 2, {{0, 1}, {0, 1}});
  auto truth = SpinSystem::rudin_shapiro();
  auto r = check_recurrence(truth, 1024, [&](std::uint64_t n) { return spin_letter_at(bad, n); });
  CHECK_FALSE(r.ok);
  CHECK(r.n < 4);
  CHECK_THROWS_AS(SpinSystem(2, 2, {{1, 0}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(SpinSystem(2, 2, {{0, 0}}), ValidationError);
}

TEST_CASE("spin system JSON") {
  auto s = SpinSystem::from_json(R"({"digits": 2, "modulus": 2, "matrix": [[0, 0], [0, 1]]})");
  CHECK(build_spin_substitution(s) == build_spin_substitution(SpinSystem::rudin_shapiro()));
  CHECK_THROWS_AS(SpinSystem::from_json("{"), ParseError);
}
