#include "apseq/vdw.hpp"

#include <bit>

#include "apseq/language.hpp"

namespace apseq {

std::uint64_t ceil_log(std::uint64_t L, const BigInt& M) {
  if (L < 2) throw ValidationError("ceil_log needs L >= 2");
  std::uint64_t k = 0;
  for (BigInt p = 1; p < M; p *= L) ++k;
  return k;
}

VdwUpper vdw_upper(const VdwQuery& q) {
  if (q.c < 2 || q.L < 2 || q.M < 1) throw ValidationError("vdw upper needs c >= 2, L >= 2, M >= 1");
  if ((q.R_override && *q.R_override == 0) || (q.exponent_override && *q.exponent_override == 0)) {
    throw ValidationError("overrides must be positive");
  }
  VdwUpper r;
  r.k = ceil_log(q.L, q.M);
  r.N0 = recurrence_exponent(q.c);
  if (q.exponent_override) {
    r.E = *q.exponent_override;
  } else {
    r.E = 1;
    for (std::uint64_t i = 2; i <= q.c; ++i) r.E *= i;
  }
  r.R_from_formula = !q.R_override;
  r.R = q.R_override ? BigInt(*q.R_override) : recurrence_formula(q.c, q.L);
  BigInt exponent = r.E * r.k;
  const auto bits_per = static_cast<std::uint64_t>(std::bit_width(q.L));
  if (exponent * bits_per > BigInt(std::uint64_t{1} << 26)) {
    throw ResourceError("L^(kE) exceeds 2^26 bits; supply a smaller exponent override");
  }
  r.value = (r.R + 1) * pow_big(q.L, exponent.convert_to<std::uint64_t>());
  return r;
}

VdwLower vdw_lower(std::uint64_t c, std::uint64_t L, std::uint64_t m) {
  if (c < 2 || m < 2) throw ValidationError("vdw lower needs c > 1 and m > 1");
  if (L < 2) throw ValidationError("vdw lower needs L >= 2");
  VdwLower r;
  r.N0 = recurrence_exponent(c);
  auto factors = factorize(L);
  std::string fac;
  std::uint64_t q = 0;
  for (const auto& [p, a] : factors) {
    std::uint64_t pa = *checked_pow(p, a);
    fac += (fac.empty() ? "" : "*") + std::to_string(p) + "^" + std::to_string(a);
    if (q == 0 || pa < q) {
      q = pa;
      r.prime = p;
      r.prime_exponent = a;
    }
  }
  r.trace.push_back("L = " + fac);
  r.trace.push_back("q = " + std::to_string(r.prime) + "^" + std::to_string(r.prime_exponent) + " = " +
                    std::to_string(q));
  BigInt qb = 1;
  while (qb < L) {
    BigInt next = qb * q;
    ++r.B_ceil;
    r.trace.push_back("q^" + std::to_string(r.B_ceil) + " = " + to_decimal(next) + (next >= L ? " >= " : " < ") +
                      std::to_string(L));
    qb = next;
  }
  BigInt base = pow_big(L, r.N0 + 1) * pow_big(m, r.B_ceil);
  r.progression_length = base + 1;
  r.window_length = base * m + 1;
  return r;
}

}  // namespace apseq
