#include "apseq/supersub.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace apseq {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::vector<Letter> image_set(const Substitution& sub, const std::vector<Letter>& s, std::size_t digit) {
  std::vector<bool> in(sub.size(), false);
  for (Letter a : s) in[sub.at(a, digit)] = true;
  std::vector<Letter> out;
  for (std::size_t b = 0; b < in.size(); ++b) {
    if (in[b]) out.push_back(static_cast<Letter>(b));
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<std::vector<Letter>> blocks, std::size_t c) : blocks_(std::move(blocks)) {
  theta_.assign(c, c);
  for (auto& b : blocks_) {
    if (b.empty()) throw ValidationError("partition block is empty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (Letter a : blocks_[i]) {
      if (a >= c) throw ValidationError("partition letter out of range");
      if (theta_[a] != c) throw ValidationError("partition blocks overlap");
      theta_[a] = i;
    }
  }
  if (std::find(theta_.begin(), theta_.end(), c) != theta_.end()) {
    throw ValidationError("partition does not cover the alphabet");
  }
}

Partition Partition::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<std::vector<Letter>> blocks(1);
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) blocks.back().push_back(alphabet.index(tok));
    tok.clear();
  };
  for (char ch : text) {
    if (ch == '|') {
      flush();
      blocks.emplace_back();
    } else if (ch == ' ' || ch == '\t' || ch == ',') {
      flush();
    } else {
      tok += ch;
    }
  }
  flush();
  return Partition(std::move(blocks), alphabet.size());
}

std::string Partition::format(const Alphabet& alphabet) const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += " | ";
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j > 0) out += ' ';
      out += alphabet.name(blocks_[i][j]);
    }
  }
  return out;
}

QuotientResult check_partition(const Substitution& sub, const Partition& p) {
  QuotientResult res;
  const std::size_t n = p.size();
  std::vector<Word> rules(n, Word(sub.length()));
  for (std::size_t col = 0; col < sub.length(); ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& block = p.blocks()[i];
      Letter first = block.front();
      std::size_t target = p.block_of(sub.at(first, col));
      for (Letter b : block) {
        if (p.block_of(sub.at(b, col)) != target) {
          res.counterexample = PartitionCounterexample{col, i, first, b};
          return res;
        }
      }
      rules[i][col] = static_cast<Letter>(target);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("A" + std::to_string(i + 1));
  res.xi = Substitution(Alphabet(std::move(names)), std::move(rules));
  return res;
}

std::vector<Partition> compatible_partitions(const Substitution& sub) {
  const std::size_t c = sub.size();
  std::vector<Partition> out;
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a + 1; b < c; ++b) {
      UnionFind uf(c);
      uf.unite(a, b);
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t x = 0; x < c; ++x) {
          std::size_t root = uf.find(x);
          if (root == x) continue;
          for (std::size_t col = 0; col < sub.length(); ++col) {
            changed |= uf.unite(sub.at(static_cast<Letter>(x), col), sub.at(static_cast<Letter>(root), col));
          }
        }
      }
      std::map<std::size_t, std::vector<Letter>> groups;
      for (std::size_t x = 0; x < c; ++x) groups[uf.find(x)].push_back(static_cast<Letter>(x));
      if (groups.size() == 1) continue;
      std::vector<std::vector<Letter>> blocks;
      for (auto& [root, members] : groups) blocks.push_back(std::move(members));
      Partition p(std::move(blocks), c);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<DifferenceFamily> lift_identity_family(const Substitution& sub, const Partition& p, unsigned k_from,
                                                   unsigned k_to) {
  auto fp = FixedPointSpec::make(sub);
  const auto& seed_block = p.blocks()[p.block_of(fp.seed)];
  if (seed_block.size() != 1) throw ValidationError("block of the seed letter is not a singleton");
  auto q = check_partition(sub, p);
  if (!q.valid()) throw ValidationError("partition does not induce a supersubstitution");
  const Substitution& xi = *q.xi;
  if (!xi.is_bijective()) throw ValidationError("quotient is not bijective");
  if (!xi.column(0).is_identity()) throw ValidationError("quotient column 0 is not the identity");
  if (!is_primitive(xi)) throw ValidationError("quotient is not primitive");
  if (aperiodicity_certificate(xi).verdict != Aperiodicity::AperiodicByCriterion) {
    throw ValidationError("quotient is not certified aperiodic");
  }
  auto group = ColumnGroup::generate(xi);
  const std::uint64_t L = xi.length();
  const std::uint64_t e = group.exponent;
  std::vector<DifferenceFamily> out;
  for (unsigned k = k_from; k <= k_to; ++k) {
    DifferenceFamily f;
    f.name = "lifted-identity";
    f.params = {{"k", k}, {"exponent", e}};
    f.d = (pow_big(L, k * e) - 1) / (pow_big(L, k) - 1);
    f.predicted_lower = pow_big(L, k);
    f.growth = "1/" + std::to_string(e - 1);
    f.source = "quotient identity columns, singleton seed block";
    out.push_back(std::move(f));
  }
  return out;
}

ColumnWitness lift_column_family(const Substitution& sub, const Partition& p, const std::vector<std::size_t>& columns,
                                 std::uint64_t d, std::uint64_t count) {
  auto fp = FixedPointSpec::make(sub);
  const std::size_t block = p.block_of(fp.seed);
  for (std::size_t col : columns) {
    if (col >= sub.length()) throw ValidationError("column " + std::to_string(col) + " out of range");
    for (Letter a : p.blocks()[block]) {
      if (sub.at(a, col) != fp.seed) {
        throw ValidationError("column " + std::to_string(col) + " does not send '" + sub.alphabet().name(a) +
                              "' to the seed letter");
      }
    }
  }
  auto q = check_partition(sub, p);
  if (!q.valid()) throw ValidationError("partition does not induce a supersubstitution");
  auto wfp = FixedPointSpec::make(*q.xi, static_cast<Letter>(block));
  const std::uint64_t L = sub.length();
  ColumnWitness out;
  out.letter = fp.seed;
  bool in_run = true;
  for (std::uint64_t k = 0; k < count; ++k) {
    auto nk = checked_mul(k, d);
    if (!nk) throw ResourceError("witness position overflows 64 bits");
    std::uint64_t n = *nk;
    bool ok = std::find(columns.begin(), columns.end(), n % L) != columns.end() && letter_at(wfp, n / L) == block;
    if (ok) {
      if (letter_at(fp, n) != fp.seed) throw Error("internal: witness position " + std::to_string(n) + " mismatch");
      out.verified.push_back(n);
      if (in_run) ++out.run;
    } else {
      out.excluded.push_back(n);
      in_run = false;
    }
  }
  return out;
}

SetGraph graph_of_sets(const Substitution& sub) {
  SetGraph g;
  std::map<std::vector<Letter>, std::size_t> index;
  std::vector<Letter> full(sub.size());
  std::iota(full.begin(), full.end(), Letter{0});
  index[full] = 0;
  g.nodes.push_back(full);
  for (std::size_t head = 0; head < g.nodes.size(); ++head) {
    for (std::size_t digit = 0; digit < sub.length(); ++digit) {
      auto img = image_set(sub, g.nodes[head], digit);
      auto [it, fresh] = index.emplace(img, g.nodes.size());
      if (fresh) g.nodes.push_back(img);
      g.edges.push_back({head, digit, it->second});
    }
  }
  // Kosaraju: order by finish time on the graph, then components on the reverse graph.
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> fwd(n), rev(n);
  for (const auto& e : g.edges) {
    fwd[e.from].push_back(e.to);
    rev[e.to].push_back(e.from);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < fwd[v].size()) {
        std::size_t w = fwd[v][i++];
        if (!seen[w]) {
          seen[w] = true;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<std::size_t> comp(n, n);
  std::size_t ncomp = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != n) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = ncomp;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : rev[v]) {
        if (comp[w] == n) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<bool> sink(ncomp, true);
  for (const auto& e : g.edges) {
    if (comp[e.from] != comp[e.to]) sink[comp[e.from]] = false;
  }
  std::size_t best = sub.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (sink[comp[v]]) best = std::min(best, g.nodes[v].size());
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (sink[comp[v]] && g.nodes[v].size() == best) g.minimal.push_back(v);
  }
  g.column_number = best;
  return g;
}

std::string export_dot(const SetGraph& g, const Alphabet& alphabet) {
  std::string out = "digraph sets {\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    std::string label = "{";
    for (std::size_t i = 0; i < g.nodes[v].size(); ++i) {
      if (i > 0) label += ",";
      label += alphabet.name(g.nodes[v][i]);
    }
    label += "}";
    bool minimal = std::find(g.minimal.begin(), g.minimal.end(), v) != g.minimal.end();
    out += "  n" + std::to_string(v) + " [label=\"" + label + "\"" + (minimal ? ", peripheries=2" : "") + "];\n";
  }
  for (const auto& e : g.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" + std::to_string(e.digit) +
           "\"];\n";
  }
  out += "  // column_number=" + std::to_string(g.column_number) + "\n}\n";
  return out;
}

std::vector<std::vector<std::string>> parse_dot_nodes(std::string_view dot) {
  std::vector<std::vector<std::string>> out;
  std::size_t pos = 0;
  const std::string key = "[label=\"{";
  while ((pos = dot.find(key, pos)) != std::string_view::npos) {
    pos += key.size();
    std::size_t end = dot.find("}\"", pos);
    if (end == std::string_view::npos) throw ParseError("unterminated node label", 1, pos);
    std::vector<std::string> letters;
    std::string_view body = dot.substr(pos, end - pos);
    std::size_t s = 0;
    while (s <= body.size() && !body.empty()) {
      std::size_t comma = body.find(',', s);
      if (comma == std::string_view::npos) comma = body.size();
      letters.emplace_back(body.substr(s, comma - s));
      s = comma + 1;
    }
    out.push_back(std::move(letters));
    pos = end;
  }
  return out;
}

}  // namespace apseq
