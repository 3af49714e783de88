#include "apseq/ap.hpp"

#include <algorithm>

#include <omp.h>

namespace apseq {

namespace {

struct Best {
  std::uint64_t len = 0;
  std::uint64_t start = 0;
  bool better_than(const Best& o) const { return len > o.len || (len == o.len && start < o.start); }
};

// Runs ending at i along each residue class; the first run to reach a new maximum has the
// smallest end, hence the smallest start.
Best kernel_segment(std::span<const Letter> w, std::uint64_t d, std::uint64_t s, std::uint64_t e) {
  Best best;
  std::vector<std::uint32_t> run(static_cast<std::size_t>(std::min<std::uint64_t>(d, e - s)));
  std::size_t r = 0;
  for (std::uint64_t i = s; i < e; ++i) {
    std::uint32_t len;
    if (i < s + d) {
      len = 1;
      for (std::uint64_t j = i; j >= d && w[j - d] == w[i]; j -= d) ++len;
    } else {
      len = w[i] == w[i - d] ? run[r] + 1 : 1;
    }
    run[r] = len;
    if (len > best.len) {
      best.len = len;
      best.start = i - (len - 1) * d;
    }
    if (++r == run.size()) r = 0;
  }
  return best;
}

APResult finish(std::uint64_t d, std::size_t n, const Best& b) {
  APResult r;
  r.d = d;
  r.best_len = b.len;
  r.best_start = b.start;
  r.prefix_len = n;
  return r;
}

bool fits(const BigInt& x, std::uint64_t cap) { return x <= BigInt(cap); }

// One step of the prefix-doubling policy shared by a_of_d and scan.
struct ScanState {
  std::uint64_t d = 1;
  std::uint64_t P = 0;
  std::optional<BigInt> window;
  std::optional<APResult> last;
  bool done = false;
};

ScanState start_state(const Certifier& cert, std::uint64_t d, const ScanPolicy& policy,
                      std::optional<std::uint64_t> predicted_lower) {
  const std::uint64_t cap = policy.prefix_cap;
  if (d >= cap) {
    throw ResourceError("difference " + std::to_string(d) + " does not fit the prefix cap " + std::to_string(cap));
  }
  ScanState st;
  st.d = d;
  BigInt p0 = policy.min_prefix;
  if (predicted_lower) p0 = std::max(p0, BigInt(64) * d * *predicted_lower);
  if (cert.eligible) {
    st.window = cert.window(d);
    if (st.window && fits(*st.window, cap)) p0 = std::max(p0, *st.window);
  }
  if (!fits(p0, cap)) p0 = cap;
  st.P = p0.convert_to<std::uint64_t>();
  return st;
}

void advance(ScanState& st, const APResult& r, const ScanPolicy& policy) {
  bool stable = st.last && st.last->best_len == r.best_len;
  st.last = r;
  if (stable || st.P > policy.prefix_cap / 2) {
    st.done = true;
    APResult& out = *st.last;
    out.status = st.window && BigInt(out.prefix_len) >= *st.window ? APStatus::ExactUnderBound : APStatus::LowerBoundOnly;
    return;
  }
  st.P *= 2;
}

}  // namespace

const char* to_string(APStatus s) {
  switch (s) {
    case APStatus::ExactUnderBound: return "ExactUnderBound";
    case APStatus::LowerBoundOnly: return "LowerBoundOnly";
    case APStatus::ResourceCap: return "ResourceCap";
  }
  return "?";
}

APResult max_ap_in_prefix(std::span<const Letter> word, std::uint64_t d) {
  if (d == 0) throw ValidationError("difference must be positive");
  if (word.empty()) throw ValidationError("word must be nonempty");
  return finish(d, word.size(), kernel_segment(word, d, 0, word.size()));
}

APResult max_ap_in_prefix_omp(std::span<const Letter> word, std::uint64_t d, int jobs) {
  if (d == 0) throw ValidationError("difference must be positive");
  if (word.empty()) throw ValidationError("word must be nonempty");
  const std::uint64_t n = word.size();
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::uint64_t seg = std::max<std::uint64_t>({(n + 4 * threads - 1) / (4 * threads), 4 * d, 1u << 16});
  const auto count = static_cast<std::int64_t>((n + seg - 1) / seg);
  std::vector<Best> parts(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t t = 0; t < count; ++t) {
    std::uint64_t s = static_cast<std::uint64_t>(t) * seg;
    parts[static_cast<std::size_t>(t)] = kernel_segment(word, d, s, std::min(n, s + seg));
  }
  Best best;
  for (const Best& b : parts) {
    if (b.better_than(best)) best = b;
  }
  return finish(d, n, best);
}

SequenceWindow::SequenceWindow(FixedPointSpec fp, std::optional<Coding> coding, int jobs)
    : fp_(std::move(fp)), coding_(std::move(coding)), jobs_(jobs) {}

void SequenceWindow::ensure(std::uint64_t len, std::uint64_t cap) {
  if (len > cap) throw ResourceError("prefix length " + std::to_string(len) + " exceeds cap " + std::to_string(cap));
  if (len <= data_.size()) return;
  const std::uint64_t old = data_.size();
  data_.resize(len);
  const std::uint64_t chunk = std::uint64_t{1} << 18;
  const auto chunks = static_cast<std::int64_t>((len - old + chunk - 1) / chunk);
  const int threads = jobs_ > 0 ? jobs_ : omp_get_max_threads();
  const Coding* c = coding();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < chunks; ++i) {
    std::uint64_t s = old + static_cast<std::uint64_t>(i) * chunk;
    fill_range(fp_, s, std::min(chunk, len - s), data_.data() + s, c);
  }
}

std::span<const Letter> SequenceWindow::view(std::uint64_t len) const {
  return std::span<const Letter>(data_.data(), std::min<std::uint64_t>(len, data_.size()));
}

std::optional<UpperBound> upper_bound_formula(std::uint64_t L, const BigInt& d, std::uint64_t N) {
  if (L < 2 || d < 1) return std::nullopt;
  std::uint64_t q = L;
  for (const auto& [p, a] : factorize(L)) q = std::min(q, *checked_pow(p, a));
  std::uint64_t M = 1;
  BigInt LM = L;
  while (LM < d) {
    LM *= L;
    ++M;
  }
  std::uint64_t M_last = 1;
  for (BigInt qM = q; qM <= d; qM *= q) ++M_last;
  const BigInt LN = pow_big(L, N);
  std::optional<UpperBound> best;
  for (; M <= M_last; ++M, LM *= L) {
    BigInt ell = boost::multiprecision::gcd(d, LM);
    BigInt LNM = LN * LM;
    if (boost::multiprecision::gcd(d, LNM) != ell) continue;
    BigInt v = LNM / ell;
    if (!best || v < best->value) best = UpperBound{v, M, ell};
  }
  return best;
}

std::optional<UpperBound> upper_bound(const Substitution& sub, const BigInt& d, std::optional<std::uint64_t> N) {
  if (!sub.is_bijective()) return std::nullopt;
  if (!ColumnGroup::generate(sub).abelian) return std::nullopt;
  std::uint64_t n = N ? *N : saturation_level(sub).value_or(recurrence_exponent(sub.size()));
  return upper_bound_formula(sub.length(), d, n);
}

BigInt closed_form_bound(std::uint64_t L, const BigInt& d, std::uint64_t N) {
  std::uint64_t q = L;
  for (const auto& [p, a] : factorize(L)) q = std::min(q, *checked_pow(p, a));
  std::uint64_t B = 0;
  for (BigInt qb = 1; qb < L; qb *= q) ++B;
  BigInt dB = 1;
  for (std::uint64_t i = 0; i < B; ++i) dB *= d;
  return pow_big(L, N + 1) * dB;
}

Certifier Certifier::build(const FixedPointSpec& fp, const Coding* coding, std::optional<std::uint64_t> r_override) {
  Certifier c;
  if (coding && !coding->injective()) {
    c.reason = "coding is not injective";
    return c;
  }
  if (!fp.sub.is_bijective()) {
    c.reason = "substitution is not bijective";
    return c;
  }
  try {
    auto norm = normalize_zero_column(fp.sub);
    const Substitution& s = norm.sub;
    if (!ColumnGroup::generate(s).abelian) {
      c.reason = "column group is not Abelian";
      return c;
    }
    if (!is_primitive(s)) {
      c.reason = "substitution is not primitive";
      return c;
    }
    auto ap = aperiodicity_certificate(s);
    if (ap.verdict != Aperiodicity::AperiodicByCriterion) {
      c.reason = std::string("aperiodicity not certified (") + to_string(ap.verdict) + ")";
      return c;
    }
    auto N = saturation_level(s);
    c.N_exact = N.has_value();
    c.N = N.value_or(recurrence_exponent(s.size()));
    c.R = r_override ? BigInt(*r_override) : recurrence_formula(s.size(), s.length());
    c.normalized = s;
    c.eligible = true;
  } catch (const ResourceError& e) {
    c.reason = e.what();
  }
  return c;
}

std::optional<BigInt> Certifier::bound(std::uint64_t d) const {
  if (!eligible) return std::nullopt;
  auto u = upper_bound_formula(normalized->length(), d, N);
  if (!u) return std::nullopt;
  return u->value;
}

std::optional<BigInt> Certifier::window(std::uint64_t d) const {
  auto u = bound(d);
  if (!u) return std::nullopt;
  return (R + 1) * (BigInt(d) * *u + 1);
}

APResult a_of_d(SequenceWindow& window, const Certifier& cert, std::uint64_t d, const ScanPolicy& policy,
                std::optional<std::uint64_t> predicted_lower) {
  if (d == 0) throw ValidationError("difference must be positive");
  ScanState st = start_state(cert, d, policy, predicted_lower);
  while (!st.done) {
    window.ensure(st.P, policy.prefix_cap);
    APResult r = policy.jobs == 1 ? max_ap_in_prefix(window.view(st.P), d)
                                  : max_ap_in_prefix_omp(window.view(st.P), d, policy.jobs);
    advance(st, r, policy);
  }
  return *st.last;
}

APResult a_of_d(const FixedPointSpec& fp, const Coding* coding, std::uint64_t d, const ScanPolicy& policy,
                std::optional<std::uint64_t> predicted_lower) {
  SequenceWindow window(fp, coding ? std::optional<Coding>(*coding) : std::nullopt, policy.jobs);
  Certifier cert = Certifier::build(fp, coding, policy.r_override);
  return a_of_d(window, cert, d, policy, predicted_lower);
}

std::vector<APResult> scan(SequenceWindow& window, const Certifier& cert, std::uint64_t d_from, std::uint64_t d_to,
                           const ScanPolicy& policy) {
  if (d_from < 1 || d_from > d_to) throw ValidationError("scan range must satisfy 1 <= from <= to");
  const std::size_t count = d_to - d_from + 1;
  std::vector<ScanState> states(count);
  std::vector<APResult> rows(count);
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t d = d_from + i;
    try {
      states[i] = start_state(cert, d, policy, std::nullopt);
      pending.push_back(i);
    } catch (const ResourceError& e) {
      rows[i].d = d;
      rows[i].status = APStatus::ResourceCap;
      rows[i].note = e.what();
    }
  }
  const int threads = policy.jobs > 0 ? policy.jobs : omp_get_max_threads();
  while (!pending.empty()) {
    std::uint64_t need = 0;
    for (std::size_t i : pending) need = std::max(need, states[i].P);
    window.ensure(need, policy.prefix_cap);
    const auto n = static_cast<std::int64_t>(pending.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t t = 0; t < n; ++t) {
      ScanState& st = states[pending[static_cast<std::size_t>(t)]];
      advance(st, max_ap_in_prefix(window.view(st.P), st.d), policy);
    }
    std::vector<std::size_t> next;
    for (std::size_t i : pending) {
      if (states[i].done) {
        rows[i] = *states[i].last;
      } else {
        next.push_back(i);
      }
    }
    pending = std::move(next);
  }
  return rows;
}

std::string scan_csv_header() { return "d,best_len,best_start,prefix_len,status"; }

std::string scan_csv_row(const APResult& r) {
  return std::to_string(r.d) + "," + std::to_string(r.best_len) + "," + std::to_string(r.best_start) + "," +
         std::to_string(r.prefix_len) + "," + to_string(r.status);
}

}  // namespace apseq
