#include <json.hpp>

#include "apseq/substitution.hpp"

namespace apseq {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t col;
};

struct Clause {
  Token lhs;
  std::vector<Token> rhs;
};

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

std::vector<std::string> split_code_points(const std::string& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    auto ch = static_cast<unsigned char>(s[i]);
    std::size_t n = ch < 0x80 ? 1 : (ch >> 5) == 0x6 ? 2 : (ch >> 4) == 0xE ? 3 : 4;
    out.push_back(s.substr(i, n));
    i += n;
  }
  return out;
}

// Tokenizes one logical line (comment already removed) into whitespace-separated chunks with columns.
std::vector<Token> chunks(const std::string& text, std::size_t line, std::size_t col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) out.push_back({text.substr(i, j - i), line, col0 + i});
    i = j;
  }
  return out;
}

Substitution build(const std::vector<std::string>& order, const std::vector<Clause>& clauses) {
  Alphabet alphabet(order);
  std::vector<std::optional<Word>> rules(alphabet.size());
  for (const auto& cl : clauses) {
    auto a = alphabet.find(cl.lhs.text);
    if (!a) throw ValidationError("rule for '" + cl.lhs.text + "' is not in the declared alphabet");
    if (rules[*a]) throw ValidationError("duplicate rule for letter '" + cl.lhs.text + "'");
    Word w;
    for (const auto& tok : cl.rhs) {
      if (auto b = alphabet.find(tok.text)) {
        w.push_back(*b);
        continue;
      }
      for (const auto& cp : split_code_points(tok.text)) {
        auto b = alphabet.find(cp);
        if (!b) {
          throw ValidationError("unknown letter '" + cp + "' in rule for '" + cl.lhs.text + "' (line " +
                                std::to_string(tok.line) + ")");
        }
        w.push_back(*b);
      }
    }
    rules[*a] = std::move(w);
  }
  std::vector<Word> table;
  for (std::size_t a = 0; a < rules.size(); ++a) {
    if (!rules[a]) throw ValidationError("missing rule for letter '" + order[a] + "'");
    table.push_back(std::move(*rules[a]));
  }
  return Substitution(std::move(alphabet), std::move(table));
}

Substitution parse_json(std::string_view source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
  if (!j.is_object() || !j.contains("rules") || !j["rules"].is_object()) {
    throw ValidationError("JSON substitution needs an object field \"rules\"");
  }
  std::vector<std::string> order;
  std::vector<Clause> clauses;
  if (j.contains("alphabet")) {
    for (const auto& x : j["alphabet"]) order.push_back(x.get<std::string>());
  }
  bool implicit = order.empty();
  for (const auto& [key, value] : j["rules"].items()) {
    Clause cl{{key, 1, 1}, {}};
    if (value.is_string()) {
      cl.rhs.push_back({value.get<std::string>(), 1, 1});
    } else if (value.is_array()) {
      for (const auto& x : value) cl.rhs.push_back({x.get<std::string>(), 1, 1});
    } else {
      throw ValidationError("rule for '" + key + "' must be a string or an array of letters");
    }
    if (implicit) order.push_back(key);
    clauses.push_back(std::move(cl));
  }
  return build(order, clauses);
}

}  // namespace

Substitution parse_substitution(std::string_view source) {
  std::size_t first = source.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && source[first] == '{') return parse_json(source);

  std::vector<std::string> order;
  bool have_header = false;
  std::vector<Clause> clauses;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    std::string text(source.substr(pos, eol - pos));
    ++line;
    pos = eol + 1;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);

    std::size_t seg_start = 0;
    while (seg_start <= text.size()) {
      std::size_t semi = text.find(';', seg_start);
      if (semi == std::string::npos) semi = text.size();
      std::string seg = text.substr(seg_start, semi - seg_start);
      std::size_t col0 = seg_start + 1;
      seg_start = semi + 1;

      auto toks = chunks(seg, line, col0);
      if (toks.empty()) continue;
      if (toks[0].text == "@alphabet") {
        if (have_header || !clauses.empty()) throw ParseError("@alphabet header must come first", line, toks[0].col);
        have_header = true;
        for (std::size_t t = 1; t < toks.size(); ++t) order.push_back(toks[t].text);
        if (order.empty()) throw ParseError("@alphabet header lists no letters", line, toks[0].col);
        continue;
      }
      // Accept "a->b" and "a ->b" by locating the arrow inside the raw segment.
      std::size_t arrow = seg.find("->");
      if (arrow == std::string::npos) throw ParseError("expected 'letter -> word'", line, toks[0].col);
      auto left = chunks(seg.substr(0, arrow), line, col0);
      auto right = chunks(seg.substr(arrow + 2), line, col0 + arrow + 2);
      if (left.size() != 1) {
        throw ParseError(left.empty() ? "missing letter before '->'" : "left side must be a single letter", line,
                         left.empty() ? col0 + arrow : left[1].col);
      }
      if (right.empty()) throw ParseError("missing word after '->'", line, col0 + arrow + 2);
      for (const auto& r : right) {
        if (r.text.find("->") != std::string::npos) throw ParseError("unexpected '->'", line, r.col);
      }
      if (!have_header) {
        bool known = false;
        for (const auto& s : order) known = known || s == left[0].text;
        if (!known) order.push_back(left[0].text);
      }
      clauses.push_back({left[0], std::move(right)});
    }
    if (eol == source.size()) break;
  }
  if (clauses.empty()) throw ParseError("no rules found", line, 1);
  return build(order, clauses);
}

std::string format_substitution(const Substitution& sub) {
  const Alphabet& A = sub.alphabet();
  std::string out;
  if (!A.compact()) {
    out += "@alphabet";
    for (const auto& s : A.letters()) out += " " + s;
    out += '\n';
  }
  for (std::size_t a = 0; a < sub.size(); ++a) {
    out += A.name(static_cast<Letter>(a)) + " -> " + A.format(sub.rule(static_cast<Letter>(a))) + '\n';
  }
  return out;
}

}  // namespace apseq
