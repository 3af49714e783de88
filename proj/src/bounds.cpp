#include "apseq/families.hpp"

#include <algorithm>

namespace apseq {

namespace {

bool same_matrix(const SpinSystem& a, const SpinSystem& b) {
  return a.digits() == b.digits() && a.modulus() == b.modulus() && a.matrix() == b.matrix();
}

bool is_vandermonde(const SpinSystem& s) {
  return s.digits() == s.modulus() && same_matrix(s, SpinSystem::vandermonde(s.digits()));
}

// rho_0 = id and rho_i = rho_1^i with rho_1 of order L on L letters.
bool is_thue_morse_shape(const Substitution& sub) {
  const std::size_t L = sub.length();
  if (sub.size() != L || !sub.is_bijective()) return false;
  Permutation g = Permutation::from_column(sub.column(1 % L));
  if (g.order() != L) return false;
  Permutation x = Permutation::identity(L);
  for (std::size_t i = 0; i < L; ++i) {
    if (Permutation::from_column(sub.column(i)) != x) return false;
    x = g * x;
  }
  return true;
}

struct Bijective {
  Substitution sub;
  ColumnGroup group;
  std::uint64_t N;
};

std::optional<Bijective> bijective_view(const AnalysisTarget& t) {
  if (t.spin || !t.sub.is_bijective()) return std::nullopt;
  auto norm = normalize_zero_column(t.sub);
  auto group = ColumnGroup::generate(norm.sub);
  std::uint64_t N = saturation_level(norm.sub).value_or(recurrence_exponent(norm.sub.size()));
  return Bijective{std::move(norm.sub), std::move(group), N};
}

std::optional<BigInt> abelian_upper(const Bijective& b, const BigInt& d) {
  if (!b.group.abelian) return std::nullopt;
  auto u = upper_bound_formula(b.sub.length(), d, b.N);
  if (!u) return std::nullopt;
  return u->value;
}

DifferenceFamily member(std::string name, std::vector<std::pair<std::string, std::uint64_t>> params, BigInt d,
                        BigInt lower, std::string growth, std::string source) {
  DifferenceFamily f;
  f.name = std::move(name);
  f.params = std::move(params);
  f.d = std::move(d);
  f.predicted_lower = std::move(lower);
  f.growth = std::move(growth);
  f.source = std::move(source);
  return f;
}

std::string inverse_growth(std::uint64_t denom) { return "1/" + std::to_string(denom); }

}  // namespace

std::vector<std::string> applicable_families(const AnalysisTarget& t) {
  std::vector<std::string> out;
  if (auto b = bijective_view(t)) {
    out.push_back("identity");
    if (b->group.abelian && palindromicity(b->sub).g_witness) out.push_back("palindromic");
    if (is_thue_morse_shape(t.sub)) out.push_back("thue-morse");
  }
  if (t.spin) {
    if (same_matrix(*t.spin, SpinSystem::rudin_shapiro())) {
      out.insert(out.end(), {"rs-plus", "rs-minus", "rs-power"});
    }
    if (same_matrix(*t.spin, SpinSystem::hadamard4())) {
      out.insert(out.end(), {"hadamard-plus", "hadamard-minus", "hadamard-power"});
    }
    if (is_vandermonde(*t.spin)) out.insert(out.end(), {"vandermonde", "vandermonde-power"});
  }
  if (t.partition) {
    try {
      lift_identity_family(t.sub, *t.partition, 1, 1);
      out.push_back("lifted-identity");
    } catch (const ValidationError&) {
    }
  }
  if (t.partition && t.recipe) out.push_back("supersub-column");
  return out;
}

std::vector<DifferenceFamily> difference_families(const AnalysisTarget& t, std::string_view family, unsigned k_from,
                                                  unsigned k_to, unsigned ell) {
  if (k_from < 1 || k_from > k_to) throw ValidationError("family range must satisfy 1 <= from <= to");
  auto names = applicable_families(t);
  if (std::find(names.begin(), names.end(), family) == names.end()) {
    throw ValidationError("family '" + std::string(family) + "' does not apply to " + t.name);
  }
  std::vector<DifferenceFamily> out;
  if (family == "lifted-identity") return lift_identity_family(t.sub, *t.partition, k_from, k_to);

  const std::uint64_t L = t.sub.length();
  auto bij = bijective_view(t);
  for (unsigned k = k_from; k <= k_to; ++k) {
    if (family == "identity") {
      const std::uint64_t Lp = bij->sub.length();
      const std::uint64_t e = bij->group.exponent;
      BigInt d = (pow_big(Lp, k * e) - 1) / (pow_big(Lp, k) - 1);
      auto f = member("identity", {{"k", k}, {"exponent", e}}, d, pow_big(Lp, k), inverse_growth(e - 1),
                      "identity columns of the power k*exponent");
      f.predicted_upper = abelian_upper(*bij, f.d);
      out.push_back(std::move(f));
    } else if (family == "palindromic") {
      if (ell < 2 || ell % 2 != 0) throw ValidationError("palindromic family needs an even ell >= 2");
      const std::uint64_t Lp = bij->sub.length();
      auto pal = palindromicity(bij->sub);
      BigInt d = (pow_big(Lp, std::uint64_t{k} * ell) - 1) / (pow_big(Lp, k) + 1);
      BigInt lower = pow_big(Lp, k) + (pal.inverse_palindromic ? 2 : 0);
      auto f = member("palindromic", {{"n", k}, {"ell", ell}}, d, lower, inverse_growth(ell - 1),
                      pal.inverse_palindromic ? "g-palindromic columns, inverse palindromic extension"
                                              : "g-palindromic columns");
      f.predicted_upper = abelian_upper(*bij, f.d);
      out.push_back(std::move(f));
    } else if (family == "thue-morse") {
      BigInt d = pow_big(L, k) - 1;
      BigInt lower = pow_big(L, k) + (k % L == 0 ? 2 * L : 0);
      auto f = member("thue-morse", {{"n", k}}, d, lower, "1/1", "three level-2n supertiles");
      f.predicted_upper = abelian_upper(*bij, f.d);
      out.push_back(std::move(f));
    } else if (family == "rs-plus") {
      out.push_back(member("rs-plus", {{"n", k}}, pow_big(2, k) + 1, pow_big(2, k - 1) + 2, "1/1", "2^n+1"));
    } else if (family == "rs-minus") {
      out.push_back(member("rs-minus", {{"n", k}}, pow_big(2, k) - 1, pow_big(2, k - 1) + (k % 2 == 0 ? 1 : 3), "1/1",
                           "2^n-1"));
    } else if (family == "rs-power") {
      out.push_back(member("rs-power", {{"n", k}}, pow_big(2, k), 4, "0", "2^n"));
    } else if (family == "hadamard-plus") {
      out.push_back(member("hadamard-plus", {{"n", k}}, pow_big(4, k) + 1, pow_big(4, k - 1) + 2, "1/1", "4^n+1"));
    } else if (family == "hadamard-minus") {
      out.push_back(member("hadamard-minus", {{"n", k}}, pow_big(4, k) - 1, pow_big(4, k - 1) + 3, "1/1", "4^n-1"));
    } else if (family == "hadamard-power") {
      out.push_back(member("hadamard-power", {{"n", k}}, pow_big(4, k), 6, "0", "4^n"));
    } else if (family == "vandermonde") {
      BigInt d = (pow_big(L, std::uint64_t{k} * L) - 1) / (pow_big(L, k) - 1);
      out.push_back(member("vandermonde", {{"n", k}}, d, pow_big(L, k - 1) + 1, inverse_growth(L - 1),
                           "(L^{nL}-1)/(L^n-1)"));
    } else if (family == "vandermonde-power") {
      out.push_back(member("vandermonde-power", {{"n", k}}, pow_big(L, k), L + 2, "0", "L^n"));
    } else if (family == "supersub-column") {
      const std::uint64_t s = t.recipe->step;
      BigInt Ln = pow_big(L, k);
      BigInt d = s * (1 + Ln + Ln * Ln);
      out.push_back(member("supersub-column", {{"n", k}, {"step", s}}, d, 2 * Ln / s, "1/2",
                           "columns sending the seed block to the seed"));
    }
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::PredictedOnly: return "PREDICTED-ONLY";
    case Verdict::Error: return "ERROR";
  }
  return "?";
}

std::vector<BoundReport> verify_family(SequenceWindow& window, const Certifier& cert,
                                       const std::vector<DifferenceFamily>& members, const ScanPolicy& policy) {
  std::vector<BoundReport> out;
  for (const auto& m : members) {
    BoundReport rep;
    rep.family = m;
    const BigInt cap = policy.prefix_cap;
    if (m.d >= cap || m.d * m.predicted_lower > cap) {
      rep.verdict = Verdict::PredictedOnly;
      rep.message = "difference or predicted span exceeds the prefix cap";
      out.push_back(std::move(rep));
      continue;
    }
    try {
      auto d = m.d.convert_to<std::uint64_t>();
      auto lower = m.predicted_lower.convert_to<std::uint64_t>();
      APResult r = a_of_d(window, cert, d, policy, lower);
      bool ok = BigInt(r.best_len) >= m.predicted_lower;
      if (ok && r.status == APStatus::ExactUnderBound && m.predicted_upper) ok = BigInt(r.best_len) <= *m.predicted_upper;
      rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
      rep.measured = r;
    } catch (const Error& e) {
      rep.verdict = Verdict::Error;
      rep.message = e.what();
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<BoundReport> verify_family(const AnalysisTarget& target, const std::vector<DifferenceFamily>& members,
                                       const ScanPolicy& policy) {
  auto fp = target.fixed_point();
  const Coding* coding = target.default_coding ? &*target.default_coding : nullptr;
  SequenceWindow window(fp, target.default_coding, policy.jobs);
  Certifier cert = Certifier::build(fp, coding, policy.r_override);
  return verify_family(window, cert, members, policy);
}

}  // namespace apseq
