#pragma once

#include "apseq/types.hpp"

namespace apseq {

struct VdwQuery {
  std::uint64_t c = 2;
  std::uint64_t L = 2;
  std::uint64_t M = 1;
  std::optional<std::uint64_t> R_override;
  std::optional<std::uint64_t> exponent_override;
};

struct VdwUpper {
  BigInt value;
  /// Least k with L^k >= M.
  std::uint64_t k = 0;
  BigInt E;
  BigInt R;
  bool R_from_formula = true;
  std::uint64_t N0 = 0;
};

/// (R+1) L^{kE}. Throws ResourceError when k E log2(L) exceeds 2^26 bits.
VdwUpper vdw_upper(const VdwQuery& q);

struct VdwLower {
  BigInt progression_length;
  BigInt window_length;
  std::uint64_t N0 = 0;
  /// Smallest prime-power factor q = p^a of L and the least b with q^b >= L.
  std::uint64_t prime = 0;
  unsigned prime_exponent = 0;
  std::uint64_t B_ceil = 0;
  std::vector<std::string> trace;
};

/// (L^{N0+1} m^{ceil B} + 1, L^{N0+1} m^{ceil B + 1} + 1) with N0 = c^4 - 2c^2 + 3. Requires c, m > 1, 2 <= L < 2^63.
VdwLower vdw_lower(std::uint64_t c, std::uint64_t L, std::uint64_t m);

/// Least k with L^k >= M, by repeated multiplication.
std::uint64_t ceil_log(std::uint64_t L, const BigInt& M);

}  // namespace apseq
