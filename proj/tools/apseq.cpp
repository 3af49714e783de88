#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "apseq/report.hpp"

using namespace apseq;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kInput = 1, kVerify = 2, kResource = 3 };

std::string g_config_hash;

std::string fnv1a(const std::vector<std::string>& parts) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& p : parts) {
    for (unsigned char ch : p) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xffU;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string header_text() { return std::string("apseq ") + kVersion + " config=" + g_config_hash; }

struct Source {
  std::string builtin_name;
  std::string file;
  std::string seed;
  std::string blocks;
  std::string coding = "default";
};

void add_source(CLI::App* app, Source& s, bool with_coding) {
  auto* b = app->add_option("--builtin", s.builtin_name, "Built-in substitution name");
  auto* f = app->add_option("--file", s.file, "Substitution file (text or JSON)")->check(CLI::ExistingFile);
  b->excludes(f);
  app->add_option("--seed", s.seed, "First letter of the fixed point");
  app->add_option("--partition", s.blocks, "Partition of the alphabet, e.g. \"a | b c\"");
  if (with_coding) app->add_option("--coding", s.coding, "none, default, spin, digit, or a JSON coding file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AnalysisTarget load_target(const Source& s) {
  AnalysisTarget t = [&] {
    if (!s.file.empty()) {
      return make_target(parse_substitution(read_file(s.file)), std::filesystem::path(s.file).stem().string());
    }
    if (!s.builtin_name.empty()) return builtin(s.builtin_name);
    throw ValidationError("one of --builtin or --file is required");
  }();
  if (!s.seed.empty()) t.seed = t.sub.alphabet().index(s.seed);
  if (!s.blocks.empty()) t.partition = Partition::parse(s.blocks, t.sub.alphabet());
  return t;
}

/// JSON object mapping each letter to an output symbol.
Coding load_coding_file(const std::string& path, const Alphabet& alphabet) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  if (!j.is_object()) throw ValidationError("coding file must be a JSON object");
  std::vector<std::string> out;
  std::vector<Letter> map(alphabet.size());
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    const auto& name = alphabet.name(static_cast<Letter>(a));
    if (!j.contains(name)) throw ValidationError("coding file has no image for letter '" + name + "'");
    const auto& v = j[name];
    std::string sym = v.is_string() ? v.get<std::string>() : v.dump();
    auto it = std::find(out.begin(), out.end(), sym);
    if (it == out.end()) {
      out.push_back(sym);
      it = out.end() - 1;
    }
    map[a] = static_cast<Letter>(it - out.begin());
  }
  return Coding(Alphabet(out), map);
}

std::optional<Coding> resolve_coding(const AnalysisTarget& t, const std::string& name) {
  if (name == "none") return std::nullopt;
  if (name == "default") return t.default_coding;
  if (name == "spin" || name == "digit") {
    if (!t.spin) throw ValidationError("coding '" + name + "' needs a spin substitution");
    return name == "spin" ? spin_coding(*t.spin) : digit_coding(*t.spin);
  }
  if (std::filesystem::exists(name)) return load_coding_file(name, t.sub.alphabet());
  throw ValidationError("unknown coding '" + name + "'");
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      auto v = std::stoull(text);
      return {v, v};
    }
    auto a = std::stoull(text.substr(0, colon));
    auto b = std::stoull(text.substr(colon + 1));
    if (a > b) throw ValidationError("empty range " + text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw ValidationError("bad range '" + text + "', expected A:B");
  }
}

/// Output target: "-" or empty is stdout; relative paths go under $APSEQ_OUT_DIR when set.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    std::filesystem::path p(path);
    if (const char* dir = std::getenv("APSEQ_OUT_DIR"); dir && *dir && p.is_relative()) {
      std::filesystem::create_directories(dir);
      p = std::filesystem::path(dir) / p;
    }
    file_.open(p, std::ios::binary);
    if (!file_) throw ValidationError("cannot write " + p.string());
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void write_json(const std::string& path, Json body) {
  Json j;
  j["header"] = header_text();
  for (auto& [k, v] : body.items()) j[k] = v;
  Output out(path);
  out.stream() << j.dump(2) << '\n';
}

struct Knobs {
  std::uint64_t prefix_cap = std::uint64_t{1} << 26;
  std::uint64_t min_prefix = std::uint64_t{1} << 20;
  std::optional<std::uint64_t> r_override;
  int jobs = 0;

  ScanPolicy policy() const {
    if (prefix_cap == 0 || min_prefix == 0) throw ValidationError("caps must be positive");
    ScanPolicy p;
    p.prefix_cap = prefix_cap;
    p.min_prefix = std::min(min_prefix, prefix_cap);
    p.r_override = r_override;
    p.jobs = jobs;
    return p;
  }
};

void add_knobs(CLI::App* app, Knobs& k) {
  app->add_option("--prefix-cap", k.prefix_cap, "Largest prefix scanned");
  app->add_option("--min-prefix", k.min_prefix, "First prefix length scanned");
  app->add_option("--r-override", k.r_override, "Linear recurrence constant used for certification");
  app->add_option("--jobs", k.jobs, "Worker threads (0 = all)");
}

}  // namespace

int main(int argc, char** argv) {
  g_config_hash = fnv1a(std::vector<std::string>(argv + 1, argv + argc));

  CLI::App app{"Monochromatic arithmetic progressions in automatic sequences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Source src;
  Knobs knobs;
  std::string json_path, csv_path, dot_path;

  auto* analyze = app.add_subcommand("analyze", "Structure report for a substitution");
  add_source(analyze, src, false);
  analyze->add_option("--json", json_path, "Output path");

  std::string range = "1:64";
  auto* apscan = app.add_subcommand("apscan", "A(d) for a range of differences");
  add_source(apscan, src, true);
  add_knobs(apscan, knobs);
  apscan->add_option("--range", range, "Differences A:B");
  apscan->add_option("--csv", csv_path, "CSV output path");
  apscan->add_option("--json", json_path, "JSON output path");

  std::string family = "all";
  std::string krange = "1:3";
  unsigned ell = 2;
  auto* verify = app.add_subcommand("verify", "Measure difference families against predicted bounds");
  add_source(verify, src, true);
  add_knobs(verify, knobs);
  verify->add_option("--family", family, "Family name or 'all'");
  verify->add_option("--range", krange, "Family parameter range A:B");
  verify->add_option("--ell", ell, "Even exponent for the palindromic family");
  verify->add_option("--json", json_path, "JSON output path");
  verify->add_option("--csv", csv_path, "CSV output path");

  auto* vdw = app.add_subcommand("vdw", "Van der Waerden-type bounds");
  vdw->require_subcommand(1);
  VdwQuery vq;
  std::uint64_t m = 2;
  auto* vdw_up = vdw->add_subcommand("upper", "Upper bound W <= (R+1) L^{kE}");
  vdw_up->add_option("--c", vq.c)->required();
  vdw_up->add_option("--L", vq.L)->required();
  vdw_up->add_option("--M", vq.M)->required();
  vdw_up->add_option("--R", vq.R_override);
  vdw_up->add_option("--exponent", vq.exponent_override);
  vdw_up->add_option("--json", json_path);
  auto* vdw_lo = vdw->add_subcommand("lower", "Progression with no monochromatic progression of length m");
  vdw_lo->add_option("--c", vq.c)->required();
  vdw_lo->add_option("--L", vq.L)->required();
  vdw_lo->add_option("--m", m)->required();
  vdw_lo->add_option("--json", json_path);

  auto* graph = app.add_subcommand("graph", "Graph of sets and column number");
  add_source(graph, src, false);
  graph->add_option("--dot", dot_path, "DOT output path");
  graph->add_option("--json", json_path, "JSON output path");

  std::uint64_t length = 64;
  std::string format = "text";
  std::string out_path;
  auto* pre = app.add_subcommand("prefix", "Export a prefix of the fixed point");
  add_source(pre, src, true);
  pre->add_option("--length", length, "Number of letters");
  pre->add_option("--format", format, "text or u8")->check(CLI::IsMember({"text", "u8"}));
  pre->add_option("--out", out_path, "Output path");
  pre->add_option("--prefix-cap", knobs.prefix_cap, "Largest prefix allowed");

  std::string lift_range;
  std::vector<std::size_t> columns;
  std::uint64_t lift_d = 0, count = 0;
  auto* part = app.add_subcommand("partition", "Column-compatible partitions and lifted progressions");
  add_source(part, src, false);
  add_knobs(part, knobs);
  part->add_option("--lift-identity", lift_range, "Verify the lifted identity family for k in A:B");
  part->add_option("--columns", columns, "Columns sending the seed's block to the seed")->delimiter(',');
  part->add_option("--d", lift_d, "Difference for the column witness");
  part->add_option("--count", count, "Number of terms to verify");
  part->add_option("--json", json_path, "JSON output path");

  auto* list = app.add_subcommand("builtins", "List built-in substitutions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (list->parsed()) {
      for (const auto& n : builtin_names()) std::cout << n << '\n';
      return kOk;
    }

    if (analyze->parsed()) {
      write_json(json_path, apseq::analyze(load_target(src)));
      return kOk;
    }

    if (apscan->parsed()) {
      auto t = load_target(src);
      auto [from, to] = parse_range(range);
      if (from == 0) throw ValidationError("differences start at 1");
      auto policy = knobs.policy();
      auto coding = resolve_coding(t, src.coding);
      auto fp = t.fixed_point();
      auto cert = Certifier::build(fp, coding ? &*coding : nullptr, policy.r_override);
      SequenceWindow window(fp, coding, policy.jobs);
      auto rows = scan(window, cert, from, to, policy);
      if (!json_path.empty()) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        write_json(json_path, {{"target", t.name}, {"certified", cert.eligible}, {"rows", arr}});
      }
      if (!csv_path.empty() || json_path.empty()) {
        Output out(csv_path);
        out.stream() << "# " << header_text() << '\n' << scan_csv_header() << '\n';
        for (const auto& r : rows) out.stream() << scan_csv_row(r) << '\n';
      }
      bool capped = std::any_of(rows.begin(), rows.end(), [](const APResult& r) { return r.status == APStatus::ResourceCap; });
      return capped ? kResource : kOk;
    }

    if (verify->parsed()) {
      auto t = load_target(src);
      auto [kf, kt] = parse_range(krange);
      auto policy = knobs.policy();
      auto coding = resolve_coding(t, src.coding);
      std::vector<std::string> names =
          family == "all" ? applicable_families(t) : std::vector<std::string>{family};
      auto fp = t.fixed_point();
      auto cert = Certifier::build(fp, coding ? &*coding : nullptr, policy.r_override);
      SequenceWindow window(fp, coding, policy.jobs);
      Json reports = Json::array();
      std::vector<BoundReport> all;
      for (const auto& name : names) {
        auto members = difference_families(t, name, static_cast<unsigned>(kf), static_cast<unsigned>(kt), ell);
        for (auto& r : verify_family(window, cert, members, policy)) all.push_back(std::move(r));
      }
      bool pass = !all.empty();
      for (const auto& r : all) {
        reports.push_back(to_json(r));
        pass = pass && r.verdict == Verdict::Pass;
      }
      if (!csv_path.empty()) {
        Output out(csv_path);
        out.stream() << "# " << header_text() << '\n'
                     << "family,d,predicted_lower,predicted_upper,measured,status,verdict\n";
        for (const auto& r : all) {
          out.stream() << r.family.name << ',' << to_decimal(r.family.d) << ','
                       << to_decimal(r.family.predicted_lower) << ','
                       << (r.family.predicted_upper ? to_decimal(*r.family.predicted_upper) : "") << ','
                       << (r.measured ? std::to_string(r.measured->best_len) : "") << ','
                       << (r.measured ? to_string(r.measured->status) : "") << ',' << to_string(r.verdict) << '\n';
        }
      }
      if (!json_path.empty() || csv_path.empty()) {
        write_json(json_path, {{"target", t.name}, {"certified", cert.eligible}, {"all_pass", pass},
                               {"reports", reports}});
      }
      return pass ? kOk : kVerify;
    }

    if (vdw_up->parsed()) {
      write_json(json_path, to_json(vdw_upper(vq)));
      return kOk;
    }
    if (vdw_lo->parsed()) {
      write_json(json_path, to_json(vdw_lower(vq.c, vq.L, m)));
      return kOk;
    }

    if (graph->parsed()) {
      auto t = load_target(src);
      auto g = graph_of_sets(t.sub);
      if (!dot_path.empty()) {
        Output out(dot_path);
        out.stream() << "// " << header_text() << '\n' << export_dot(g, t.sub.alphabet());
      }
      if (!json_path.empty() || dot_path.empty()) write_json(json_path, to_json(g, t.sub.alphabet()));
      return kOk;
    }

    if (pre->parsed()) {
      auto t = load_target(src);
      auto coding = resolve_coding(t, src.coding);
      auto fp = t.fixed_point();
      auto w = prefix_parallel(fp, length, coding ? &*coding : nullptr, knobs.prefix_cap, 1);
      const Alphabet& out_alpha = coding ? coding->output() : t.sub.alphabet();
      Output out(out_path);
      if (format == "u8") {
        out.stream() << export_u8(w);
      } else {
        out.stream() << export_text(out_alpha, w) << '\n';
      }
      return kOk;
    }

    if (part->parsed()) {
      auto t = load_target(src);
      const Alphabet& A = t.sub.alphabet();
      Json j;
      j["target"] = t.name;
      Json compat = Json::array();
      for (const auto& p : compatible_partitions(t.sub)) compat.push_back(p.format(A));
      j["compatible"] = compat;
      bool ok = true;
      if (t.partition) {
        auto q = check_partition(t.sub, *t.partition);
        j["partition"] = t.partition->format(A);
        j["valid"] = q.valid();
        if (q.xi) {
          j["quotient"] = format_substitution(*q.xi);
        } else {
          const auto& ce = *q.counterexample;
          j["counterexample"] = {{"column", ce.column},
                                 {"block", ce.block},
                                 {"a", A.name(ce.a)},
                                 {"b", A.name(ce.b)}};
          ok = false;
        }
        if (!lift_range.empty()) {
          auto [kf, kt] = parse_range(lift_range);
          auto members = lift_identity_family(t.sub, *t.partition, static_cast<unsigned>(kf),
                                              static_cast<unsigned>(kt));
          Json reports = Json::array();
          for (const auto& r : verify_family(t, members, knobs.policy())) {
            reports.push_back(to_json(r));
            ok = ok && r.verdict == Verdict::Pass;
          }
          j["lifted_identity"] = reports;
        }
        if (lift_d > 0) {
          auto cols = columns.empty() && t.recipe ? t.recipe->columns : columns;
          auto w = lift_column_family(t.sub, *t.partition, cols, lift_d, count == 0 ? 8 : count);
          Json verified = w.verified;
          Json excluded = w.excluded;
          j["column_witness"] = {{"letter", A.name(w.letter)},
                                 {"d", lift_d},
                                 {"verified", verified},
                                 {"excluded", excluded},
                                 {"run", w.run}};
        }
      } else if (!lift_range.empty() || lift_d > 0) {
        throw ValidationError("lifting needs a partition (--partition)");
      }
      write_json(json_path, j);
      return ok ? kOk : kVerify;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
