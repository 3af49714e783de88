#include "apseq/builtins.hpp"

#include <charconv>

namespace apseq {

namespace {

std::size_t parse_param(std::string_view name, std::string_view text, std::size_t lo, std::size_t hi) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < lo || v > hi) {
    throw ValidationError("built-in '" + std::string(name) + "' needs a parameter in " + std::to_string(lo) + ".." +
                          std::to_string(hi));
  }
  return v;
}

AnalysisTarget parsed(std::string name, std::string_view rules) {
  return make_target(parse_substitution(rules), std::move(name));
}

}  // namespace

Substitution thue_morse(std::size_t L) {
  if (L < 2 || L > 255) throw ValidationError("Thue-Morse length must be in 2..255");
  std::vector<Word> rules(L, Word(L));
  for (std::size_t a = 0; a < L; ++a) {
    for (std::size_t i = 0; i < L; ++i) rules[a][i] = static_cast<Letter>((a + i) % L);
  }
  return Substitution(Alphabet::numbered(L), std::move(rules));
}

AnalysisTarget make_target(Substitution sub, std::string name) {
  return AnalysisTarget{std::move(name), std::move(sub), std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                        std::nullopt};
}

AnalysisTarget spin_target(const SpinSystem& sys, std::string name) {
  AnalysisTarget t = make_target(build_spin_substitution(sys), std::move(name));
  t.spin = sys;
  t.default_coding = spin_coding(sys);
  t.seed = sys.letter(0, 0);
  return t;
}

AnalysisTarget builtin(std::string_view name) {
  auto colon = name.find(':');
  std::string_view head = name.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
  if (head == "tm") {
    std::size_t L = arg.empty() ? 2 : parse_param(name, arg, 2, 255);
    AnalysisTarget t = make_target(thue_morse(L), "tm:" + std::to_string(L));
    t.seed = 0;
    return t;
  }
  if (!arg.empty() && head != "vandermonde") throw ValidationError("built-in '" + std::string(head) + "' takes no parameter");
  if (head == "rs") return spin_target(SpinSystem::rudin_shapiro(), "rs");
  if (head == "hadamard4") return spin_target(SpinSystem::hadamard4(), "hadamard4");
  if (head == "vandermonde") {
    std::size_t L = arg.empty() ? 3 : parse_param(name, arg, 2, 255);
    return spin_target(SpinSystem::vandermonde(L), "vandermonde:" + std::to_string(L));
  }
  if (head == "a4-example") return parsed("a4-example", "0 -> 011; 1 -> 120; 2 -> 203; 3 -> 332");
  if (head == "c3-invpal") return parsed("c3-invpal", "0 -> 02010; 1 -> 10121; 2 -> 21202");
  if (head == "s3-noninvpal") return parsed("s3-noninvpal", "0 -> 01120; 1 -> 12001; 2 -> 20212");
  if (head == "supersub5") {
    AnalysisTarget t =
        parsed("supersub5", "a -> acdaec; b -> babead; c -> bacead; d -> ddabca; e -> edabca");
    t.partition = Partition::parse("a | b c | d e", t.sub.alphabet());
    t.seed = t.sub.alphabet().index("a");
    return t;
  }
  if (head == "supersub6") {
    AnalysisTarget t = parsed("supersub6",
                              "a -> abbabd; b -> aabaac; c -> cddcce; d -> dccddf; e -> effeea; f -> fefefb");
    t.partition = Partition::parse("a b | c d | e f", t.sub.alphabet());
    t.recipe = ColumnRecipe{{0, 3}, 3};
    t.seed = t.sub.alphabet().index("a");
    return t;
  }
  if (head == "outlook6") {
    AnalysisTarget t = parsed("outlook6", "a -> ad; b -> bc; c -> ea; d -> ab; e -> bf; f -> ba");
    t.seed = t.sub.alphabet().index("a");
    return t;
  }
  throw ValidationError("unknown built-in '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"tm:L", "rs", "hadamard4", "vandermonde:L", "a4-example", "c3-invpal", "s3-noninvpal",
          "supersub5", "supersub6", "outlook6"};
}

}  // namespace apseq
