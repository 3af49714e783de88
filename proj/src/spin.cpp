#include "apseq/spin.hpp"

#include <json.hpp>

namespace apseq {

SpinSystem::SpinSystem(std::size_t digits, std::uint64_t modulus, std::vector<std::vector<std::uint64_t>> matrix)
    : digits_(digits), modulus_(modulus), matrix_(std::move(matrix)) {
  if (digits_ < 2) throw ValidationError("spin system needs at least two digits");
  if (modulus_ < 1) throw ValidationError("spin modulus must be positive");
  if (digits_ * modulus_ > kMaxAlphabet) throw ValidationError("spin alphabet too large");
  if (matrix_.size() != digits_) throw ValidationError("spin matrix must have D rows");
  for (auto& row : matrix_) {
    if (row.size() != digits_) throw ValidationError("spin matrix must be square");
    for (auto& x : row) x %= modulus_;
  }
  if (matrix_[0][0] != 0) throw ValidationError("spin matrix entry (0,0) must be the identity");
}

SpinSystem SpinSystem::rudin_shapiro() { return SpinSystem(2, 2, {{0, 0}, {0, 1}}); }

SpinSystem SpinSystem::hadamard4() {
  return SpinSystem(4, 2, {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 0}});
}

SpinSystem SpinSystem::vandermonde(std::size_t L) {
  std::vector<std::vector<std::uint64_t>> m(L, std::vector<std::uint64_t>(L));
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) m[i][j] = (i * j) % L;
  }
  return SpinSystem(L, L, std::move(m));
}

SpinSystem SpinSystem::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid spin JSON: ") + e.what(), 1, e.byte);
  }
  try {
    return SpinSystem(j.at("digits").get<std::size_t>(), j.at("modulus").get<std::uint64_t>(),
                      j.at("matrix").get<std::vector<std::vector<std::uint64_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("spin JSON: ") + e.what());
  }
}

Alphabet SpinSystem::alphabet() const {
  std::vector<std::string> names(digits_ * modulus_);
  for (std::uint64_t s = 0; s < modulus_; ++s) {
    for (std::size_t d = 0; d < digits_; ++d) {
      names[letter(d, s)] = s == 0 ? std::to_string(d) : std::to_string(d) + "~" + std::to_string(s);
    }
  }
  return Alphabet(std::move(names));
}

Substitution build_spin_substitution(const SpinSystem& sys) {
  const std::size_t D = sys.digits();
  std::vector<Word> rules(D * sys.modulus());
  for (std::size_t a = 0; a < rules.size(); ++a) {
    auto x = static_cast<Letter>(a);
    for (std::size_t i = 0; i < D; ++i) {
      rules[a].push_back(sys.letter(i, (sys.at(i, sys.digit_of(x)) + sys.spin_of(x)) % sys.modulus()));
    }
  }
  return Substitution(sys.alphabet(), std::move(rules));
}

Coding spin_coding(const SpinSystem& sys) {
  std::vector<Letter> map(sys.digits() * sys.modulus());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = static_cast<Letter>(sys.spin_of(static_cast<Letter>(a)));
  return Coding(Alphabet::numbered(sys.modulus()), std::move(map));
}

Coding digit_coding(const SpinSystem& sys) {
  std::vector<Letter> map(sys.digits() * sys.modulus());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = static_cast<Letter>(sys.digit_of(static_cast<Letter>(a)));
  return Coding(Alphabet::numbered(sys.digits()), std::move(map));
}

std::uint64_t spin_letter_at(const SpinSystem& sys, std::uint64_t n) {
  const std::uint64_t D = sys.digits();
  std::uint64_t s = 0;
  while (n > 0) {
    std::uint64_t lo = n % D;
    n /= D;
    s += sys.at(lo, n % D);
  }
  return s % sys.modulus();
}

SpinRecurrenceReport check_recurrence(const SpinSystem& sys, std::uint64_t n_max,
                                      const std::function<std::uint64_t(std::uint64_t)>& sequence) {
  if (n_max < 1) throw ValidationError("check_recurrence: n_max must be positive");
  const std::uint64_t D = sys.digits();
  std::function<std::uint64_t(std::uint64_t)> u = sequence;
  Word coded;
  if (!u) {
    auto fp = FixedPointSpec::make(build_spin_substitution(sys), sys.letter(0, 0));
    Coding coding = spin_coding(sys);
    coded = prefix(fp, D * (n_max + 1), &coding);
    u = [&coded](std::uint64_t i) -> std::uint64_t { return coded[i]; };
  }
  SpinRecurrenceReport rep;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const std::uint64_t un = u(n);
    for (std::size_t a = 0; a < D; ++a) {
      std::uint64_t expected = (sys.at(a, n % D) + un) % sys.modulus();
      std::uint64_t actual = u(D * n + a);
      ++rep.checked;
      if (expected != actual) {
        rep.ok = false;
        rep.n = n;
        rep.a = a;
        rep.expected = expected;
        rep.actual = actual;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace apseq
