// One line per criterion: "criterion N: PASS|FAIL <detail>". With an argument, runs only that criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "apseq/families.hpp"
#include "apseq/vdw.hpp"
#include "oracles.hpp"
#include "property_checks.hpp"

using namespace apseq;

namespace {

// Pinned limits. All comparisons are exact integer comparisons.
constexpr std::uint64_t kOraclePrefix = std::uint64_t{1} << 18;
constexpr std::uint64_t kOracleMaxD = 64;
constexpr std::uint64_t kScanCap = std::uint64_t{1} << 24;
constexpr std::uint64_t kSpinRecurrenceMax = std::uint64_t{1} << 16;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

ScanPolicy full_prefix_policy() {
  ScanPolicy p;
  p.prefix_cap = kScanCap;
  p.min_prefix = kScanCap;
  return p;
}

ScanPolicy doubling_policy() {
  ScanPolicy p;
  p.prefix_cap = kScanCap;
  p.min_prefix = std::uint64_t{1} << 16;
  return p;
}

std::uint64_t measure(const AnalysisTarget& t, std::uint64_t d, const ScanPolicy& p) {
  const Coding* coding = t.default_coding ? &*t.default_coding : nullptr;
  return a_of_d(t.fixed_point(), coding, d, p).best_len;
}

void criterion_1(Outcome& o) {
  std::uint64_t compared = 0;
  for (const char* name : {"tm:2", "tm:3", "rs", "vandermonde:3", "outlook6"}) {
    auto t = builtin(name);
    const Coding* coding = t.default_coding ? &*t.default_coding : nullptr;
    auto w = prefix(t.fixed_point(), kOraclePrefix, coding);
    for (std::uint64_t d = 1; d <= kOracleMaxD; ++d) {
      auto serial = max_ap_in_prefix(w, d);
      auto par = max_ap_in_prefix_omp(w, d);
      auto [len, start] = oracle::longest_ap(w, d);
      o.check(serial.best_len == len && serial.best_start == start,
              std::string(name) + " d=" + std::to_string(d) + " serial");
      o.check(par.best_len == len && par.best_start == start, std::string(name) + " d=" + std::to_string(d) + " omp");
      ++compared;
    }
  }
  o.detail << compared << " (target, d) pairs equal to the double-loop oracle on 2^18 letters";
}

void criterion_2(Outcome& o) {
  auto rs = builtin("rs");
  auto p = full_prefix_policy();
  auto expect = [&](std::uint64_t d, std::uint64_t want) {
    auto got = measure(rs, d, p);
    o.check(got == want, "A(" + std::to_string(d) + ")=" + std::to_string(got) + " want " + std::to_string(want));
  };
  for (unsigned n = 4; n <= 10; ++n) expect((1ULL << n) + 1, (1ULL << (n - 1)) + 2);
  for (unsigned n = 6; n <= 10; n += 2) expect((1ULL << n) - 1, (1ULL << (n - 1)) + 1);
  for (unsigned n = 5; n <= 9; n += 2) expect((1ULL << n) - 1, (1ULL << (n - 1)) + 3);
  for (unsigned n = 1; n <= 5; ++n) expect(1ULL << n, 4);
  o.detail << "A(2^n+1), A(2^n-1), A(2^n) on the 2^24-letter spin prefix";
}

void criterion_3(Outcome& o) {
  auto p = doubling_policy();
  auto tm2 = builtin("tm:2");
  auto tm3 = builtin("tm:3");
  auto at_least = [&](const AnalysisTarget& t, std::uint64_t d, std::uint64_t want) {
    auto got = measure(t, d, p);
    o.detail << t.name << " A(" << d << ")=" << got << ">=" << want << " ";
    o.check(got >= want, t.name + " d=" + std::to_string(d));
  };
  at_least(tm2, 3, 8);
  at_least(tm2, 15, 20);
  at_least(tm3, 2, 3);
  at_least(tm3, 8, 9);
  at_least(tm3, 26, 33);
}

void criterion_4(Outcome& o) {
  auto run = [&](const char* name, unsigned k_to, std::vector<std::uint64_t> ds) {
    auto t = builtin(name);
    auto members = difference_families(t, "identity", 1, k_to);
    auto reports = verify_family(t, members, doubling_policy());
    o.check(reports.size() == ds.size(), std::string(name) + " member count");
    for (std::size_t i = 0; i < reports.size() && i < ds.size(); ++i) {
      const auto& r = reports[i];
      o.check(r.family.d == ds[i], std::string(name) + " d=" + to_decimal(r.family.d));
      o.check(r.family.predicted_lower == pow_big(t.sub.length(), i + 1), std::string(name) + " lower");
      o.check(r.verdict == Verdict::Pass, std::string(name) + " d=" + to_decimal(r.family.d) + " verdict");
      o.detail << name << " d=" << to_decimal(r.family.d) << ":" << (r.measured ? r.measured->best_len : 0) << " ";
    }
  };
  run("tm:2", 4, {3, 5, 9, 17});
  run("tm:3", 3, {13, 91, 757});
  run("a4-example", 1, {364});
}

void criterion_5(Outcome& o) {
  auto p = doubling_policy();
  auto v3 = builtin("vandermonde:3");
  std::uint64_t pk = 1;
  for (unsigned n = 1; n <= 3; ++n) {
    pk *= 3;
    std::uint64_t d = (pk * pk * pk - 1) / (pk - 1);
    auto got = measure(v3, d, p);
    o.detail << "V3 A(" << d << ")=" << got << " ";
    o.check(got >= pk / 3 + 1, "vandermonde d=" + std::to_string(d));
  }
  auto a1 = measure(v3, 1, p);
  o.check(a1 == 5, "vandermonde A(1)=" + std::to_string(a1));
  auto h = builtin("hadamard4");
  std::uint64_t q = 1;
  for (unsigned n = 0; n <= 3; ++n, q *= 4) {
    auto got = measure(h, q, p);
    o.check(got == 6, "hadamard A(" + std::to_string(q) + ")=" + std::to_string(got));
    if (n == 0) continue;
    auto plus = measure(h, q + 1, p);
    auto minus = measure(h, q - 1, p);
    o.detail << "H A(" << q + 1 << ")=" << plus << " A(" << q - 1 << ")=" << minus << " ";
    o.check(plus >= q / 4 + 2, "hadamard plus n=" + std::to_string(n));
    o.check(minus >= q / 4 + 3, "hadamard minus n=" + std::to_string(n));
  }
}

void criterion_6(Outcome& o) {
  for (auto [M, W] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{8, 640}, {16, 2560}, {32, 10240}, {64, 40960}}) {
    auto v = vdw_upper({2, 2, M, 9, std::nullopt});
    o.check(v.value == W, "M=" + std::to_string(M) + " gives " + to_decimal(v.value));
    o.detail << "W(" << M << ")<=" << to_decimal(v.value) << " ";
  }
  auto f = vdw_upper({2, 2, 8, std::nullopt, std::nullopt});
  o.check(f.value == 262080, "formula R at M=8 gives " + to_decimal(f.value));
  auto l = vdw_lower(2, 2, 2);
  o.check(l.progression_length == 8193 && l.window_length == 16385, "vdw_lower(2,2,2)");
  o.detail << "formula=" << to_decimal(f.value) << " lower=(" << to_decimal(l.progression_length) << ","
           << to_decimal(l.window_length) << ")";
}

void criterion_7(Outcome& o) {
  for (std::size_t L : {2, 3, 5}) {
    auto g = ColumnGroup::generate(thue_morse(L));
    bool cyclic = false;
    for (const auto& e : g.elements) cyclic = cyclic || e.order() == L;
    o.check(g.order == L && cyclic, "tm:" + std::to_string(L) + " group");
  }
  auto a4 = ColumnGroup::generate(builtin("a4-example").sub);
  o.check(a4.order == 12 && a4.exponent == 6, "a4 order/exponent");
  auto c3 = builtin("c3-invpal");
  o.check(palindromicity(c3.sub).inverse_palindromic, "c3-invpal inverse palindromic");
  std::uint64_t p5 = 1;
  for (unsigned k = 1; k <= 2; ++k) {
    p5 *= 5;
    auto got = measure(c3, p5 - 1, doubling_policy());
    o.detail << "c3 A(" << p5 - 1 << ")=" << got << " ";
    o.check(got >= p5 + 2, "c3-invpal k=" + std::to_string(k));
  }
  auto s3 = builtin("s3-noninvpal").sub;
  o.check(!palindromicity(s3.power(2)).inverse_palindromic, "s3 square reported inverse palindromic");
  o.detail << "groups C2 C3 C5, A4 order 12 exponent 6";
}

void criterion_8(Outcome& o) {
  auto t = builtin("supersub6");
  const auto& A = t.sub.alphabet();
  auto run_at = [&](std::uint64_t d, std::uint64_t count) {
    auto w = lift_column_family(t.sub, *t.partition, t.recipe->columns, d, count);
    return A.name(w.letter) == "a" ? w.run : 0;
  };
  auto r1 = run_at(129, 4);
  o.check(r1 >= 4, "d=129 run " + std::to_string(r1));
  auto r2 = run_at(4215, 24);
  o.check(r2 >= 24, "d=4215 run " + std::to_string(r2));
  // Longest run of a's at d = 4215 anywhere in the prefix.
  auto fp = t.fixed_point();
  auto w = prefix(fp, kScanCap);
  Letter a = A.index("a");
  std::uint64_t best = 0;
  for (std::uint64_t s = 0; s < 4215; ++s) {
    std::uint64_t cur = 0;
    for (std::uint64_t i = s; i < w.size(); i += 4215) {
      cur = w[i] == a ? cur + 1 : 0;
      best = std::max(best, cur);
    }
  }
  auto formula_d = difference_families(t, "supersub-column", 2, 2)[0].d;
  auto r_formula = run_at(static_cast<std::uint64_t>(formula_d), 30);
  auto s5 = builtin("supersub5");
  auto lifted = verify_family(s5, lift_identity_family(s5.sub, *s5.partition, 1, 1), doubling_policy());
  o.check(lifted.size() == 1 && lifted[0].verdict == Verdict::Pass, "supersub5 lifted identity k=1");
  o.detail << "d=129 run " << r1 << "; d=4215 run " << r2 << ", longest a-run at 4215 in 2^24 letters " << best
           << "; d=3+3*36+3*1296=" << to_decimal(formula_d) << " run " << r_formula << "; supersub5 k=1 "
           << (lifted.empty() ? "none" : to_string(lifted[0].verdict));
}

void criterion_9(Outcome& o) {
  auto t = builtin("outlook6");
  const auto& A = t.sub.alphabet();
  auto g = graph_of_sets(t.sub);
  std::set<std::string> minimal;
  for (auto v : g.minimal) {
    std::string s;
    for (Letter x : g.nodes[v]) s += A.name(x);
    minimal.insert(s);
  }
  o.check(g.column_number == 2, "column number " + std::to_string(g.column_number));
  o.check(minimal == std::set<std::string>{"ab", "cd", "ae", "df"}, "minimal sets");
  std::size_t bij = 0;
  for (const char* name : {"tm:2", "tm:3", "rs", "hadamard4", "vandermonde:3", "a4-example", "c3-invpal",
                           "s3-noninvpal", "supersub5", "supersub6"}) {
    auto s = builtin(name).sub;
    if (!s.is_bijective()) continue;
    auto gb = graph_of_sets(s);
    o.check(gb.nodes.size() == 1 && gb.nodes[0].size() == s.size(), std::string(name) + " graph");
    ++bij;
  }
  o.detail << "column number " << g.column_number << ", minimal sets";
  for (const auto& m : minimal) o.detail << " {" << m << "}";
  o.detail << ", " << bij << " bijective built-ins with one node";
}

void criterion_10(Outcome& o) {
  std::vector<std::pair<const char*, props::Failures>> suites{
      {"column-composition", props::column_composition()},
      {"group-closure", props::group_closure()},
      {"spin-recurrences", props::spin_recurrences(kSpinRecurrenceMax)},
      {"commuting-square", props::commuting_square()},
      {"coding-consistency", props::coding_consistency()}};
  for (const auto& [name, f] : suites) {
    o.check(f.empty(), std::string(name) + ": " + (f.empty() ? "" : f.front()));
    o.detail << name << "=" << f.size() << " ";
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::function<void(Outcome&)>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                      criterion_5, criterion_6, criterion_7, criterion_8,
                                                      criterion_9, criterion_10};
  std::vector<std::size_t> selected;
  if (argc > 1) {
    selected.push_back(std::stoul(argv[1]));
  } else {
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(i);
  }
  bool all = true;
  for (auto i : selected) {
    if (i < 1 || i > criteria.size()) {
      std::cerr << "no criterion " << i << '\n';
      return 1;
    }
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i - 1](o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(1) << secs << " s) " << o.detail.str();
    for (const auto& f : o.failures) std::cout << " [failed: " << f << "]";
    std::cout << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
