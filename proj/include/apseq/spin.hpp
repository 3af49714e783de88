#pragma once

#include <functional>

#include "apseq/stream.hpp"

namespace apseq {

/// Digits 0..D-1 carrying spins in the cyclic group of order `modulus`, written additively.
class SpinSystem {
 public:
  /// Entries are reduced mod `modulus`; matrix(0,0) must be 0 so that digit 0 with spin 0 starts a fixed point.
  SpinSystem(std::size_t digits, std::uint64_t modulus, std::vector<std::vector<std::uint64_t>> matrix);

  static SpinSystem rudin_shapiro();
  static SpinSystem hadamard4();
  static SpinSystem vandermonde(std::size_t L);
  /// {"digits": D, "modulus": Lg, "matrix": [[...], ...]}
  static SpinSystem from_json(std::string_view text);

  std::size_t digits() const { return digits_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
  const std::vector<std::vector<std::uint64_t>>& matrix() const { return matrix_; }

  Letter letter(std::size_t digit, std::uint64_t spin) const {
    return static_cast<Letter>(spin * digits_ + digit);
  }
  std::size_t digit_of(Letter a) const { return a % digits_; }
  std::uint64_t spin_of(Letter a) const { return a / digits_; }

  /// Letters named "d" for spin 0 and "d~e" otherwise.
  Alphabet alphabet() const;

 private:
  std::size_t digits_;
  std::uint64_t modulus_;
  std::vector<std::vector<std::uint64_t>> matrix_;
};

/// theta(a)_i = (i, matrix(i, digit(a)) + spin(a)).
Substitution build_spin_substitution(const SpinSystem& sys);

/// Projection onto the spin exponent, output letters "0".."Lg-1".
Coding spin_coding(const SpinSystem& sys);
/// Projection onto the digit, output letters "0".."D-1".
Coding digit_coding(const SpinSystem& sys);

/// Spin exponent of w_n, the sum of matrix(n_i, n_{i+1}) over base-D digits with n_{k+1} = 0.
std::uint64_t spin_letter_at(const SpinSystem& sys, std::uint64_t n);

struct SpinRecurrenceReport {
  bool ok = true;
  std::uint64_t checked = 0;
  std::uint64_t n = 0;
  std::size_t a = 0;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
};

/// Checks u_{Dn+a} = matrix(a, n mod D) + u_n for n <= n_max and all digits a, where u is
/// `sequence` or, by default, the spin coding of the fixed point generated by the stream module.
SpinRecurrenceReport check_recurrence(const SpinSystem& sys, std::uint64_t n_max,
                                      const std::function<std::uint64_t(std::uint64_t)>& sequence = {});

}  // namespace apseq
