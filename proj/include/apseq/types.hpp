#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace apseq {

/// Dense letter index, 0..c-1.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxAlphabet = 65535;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed substitution text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a domain invariant or an operation's precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (prefix length, group size, superword length) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

BigInt pow_big(std::uint64_t base, std::uint64_t exponent);
std::string to_decimal(const BigInt& value);
std::optional<std::uint64_t> to_u64(const BigInt& value);

/// base^exponent, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent);
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Prime factorization by trial division, primes ascending. Requires 2 <= n < 2^63.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace apseq
