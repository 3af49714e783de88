#include <doctest.h>

#include "apseq/builtins.hpp"
#include "apseq/families.hpp"

using namespace apseq;

TEST_CASE("five-letter partition") {
  auto t = builtin("supersub5");
  auto q = check_partition(t.sub, *t.partition);
  REQUIRE(q.valid());
  const auto& xi = *q.xi;
  CHECK(xi.size() == 3);
  CHECK(xi.length() == 6);
  CHECK(xi.is_bijective());
  CHECK(xi.column(0).is_identity());
  CHECK(ColumnGroup::generate(xi).order == 6);
  for (Letter a = 0; a < t.sub.size(); ++a)
    for (std::size_t i = 0; i < t.sub.length(); ++i)
      CHECK(xi.at(static_cast<Letter>(t.partition->block_of(a)), i) == t.partition->block_of(t.sub.at(a, i)));
}

TEST_CASE("six-letter partition") {
  auto t = builtin("supersub6");
  auto q = check_partition(t.sub, *t.partition);
  REQUIRE(q.valid());
  CHECK(q.xi->alphabet().format(q.xi->rule(0)) == "A1 A1 A1 A1 A1 A2");
}

TEST_CASE("incompatible partition") {
  auto t = builtin("outlook6");
  const auto& A = t.sub.alphabet();
  auto q = check_partition(t.sub, Partition::parse("a b | c d e f", A));
  REQUIRE_FALSE(q.valid());
  const auto& ce = *q.counterexample;
  CHECK(ce.column == 0);
  std::set<std::string> pair{A.name(ce.a), A.name(ce.b)};
  CHECK(pair == std::set<std::string>{"c", "d"});
}

TEST_CASE("partition parsing") {
  auto A = builtin("supersub5").sub.alphabet();
  auto p = Partition::parse("d e | a | c b", A);
  CHECK(p.format(A) == "a | b c | d e");
  CHECK(p.block_of(A.index("c")) == 1);
  CHECK_THROWS_AS(Partition::parse("a b | b c d e", A), ValidationError);
  CHECK_THROWS_AS(Partition::parse("a | b c", A), ValidationError);
  CHECK_THROWS_AS(Partition::parse("a | b c | d x", A), ValidationError);
}

TEST_CASE("compatible partitions") {
  auto t = builtin("supersub6");
  auto ps = compatible_partitions(t.sub);
  CHECK(std::find(ps.begin(), ps.end(), *t.partition) != ps.end());
  for (const auto& p : ps) CHECK(check_partition(t.sub, p).valid());
}

TEST_CASE("lifted identity family") {
  auto t = builtin("supersub5");
  auto fam = lift_identity_family(t.sub, *t.partition, 1, 2);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].d == (pow_big(6, 6) - 1) / 5);
  CHECK(fam[0].predicted_lower == 6);
  CHECK(fam[1].predicted_lower == 36);
  ScanPolicy policy;
  policy.prefix_cap = std::uint64_t{1} << 24;
  auto rep = verify_family(t, {fam[0]}, policy);
  CHECK(rep[0].verdict == Verdict::Pass);

  auto A = t.sub.alphabet();
  CHECK_THROWS_AS(lift_identity_family(t.sub, Partition::parse("a b c d e", A), 1, 1), ValidationError);
}

TEST_CASE("lifted column witnesses") {
  auto t = builtin("supersub6");
  const auto& p = *t.partition;
  auto w1 = lift_column_family(t.sub, p, {0, 3}, 129, 4);
  CHECK(w1.run >= 4);
  CHECK(t.sub.alphabet().name(w1.letter) == "a");
  auto fp = t.fixed_point();
  for (auto pos : w1.verified) CHECK(letter_at(fp, pos) == w1.letter);
  auto w2 = lift_column_family(t.sub, p, {0, 3}, 3999, 24);
  CHECK(w2.run >= 24);
  auto w3 = lift_column_family(t.sub, p, {0}, 129, 8);
  CHECK_FALSE(w3.excluded.empty());
  for (auto pos : w3.excluded) CHECK(pos % 6 != 0);
  CHECK_THROWS_AS(lift_column_family(t.sub, p, {1}, 129, 4), ValidationError);
}

TEST_CASE("graph of sets for the six-letter length-2 substitution") {
  auto t = builtin("outlook6");
  const auto& A = t.sub.alphabet();
  auto g = graph_of_sets(t.sub);
  CHECK(g.column_number == 2);
  auto set_of = [&](std::initializer_list<const char*> xs) {
    std::vector<Letter> s;
    for (auto x : xs) s.push_back(A.index(x));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::set<std::vector<Letter>> nodes(g.nodes.begin(), g.nodes.end());
  std::set<std::vector<Letter>> expected{set_of({"a", "b", "c", "d", "e", "f"}), set_of({"a", "b", "c", "d", "f"}),
                                         set_of({"a", "b", "c", "d"}), set_of({"c", "d", "f"}),
                                         set_of({"a", "b", "e"}), set_of({"a", "b"}), set_of({"c", "d"}),
                                         set_of({"a", "e"}), set_of({"d", "f"})};
  CHECK(nodes == expected);
  std::set<std::vector<Letter>> minimal;
  for (auto v : g.minimal) minimal.insert(g.nodes[v]);
  CHECK(minimal == std::set<std::vector<Letter>>{set_of({"a", "b"}), set_of({"c", "d"}), set_of({"a", "e"}),
                                                 set_of({"d", "f"})});
  auto edge = [&](std::vector<Letter> from, std::size_t digit, std::vector<Letter> to) {
    for (const auto& e : g.edges)
      if (g.nodes[e.from] == from && e.digit == digit) return g.nodes[e.to] == to;
    return false;
  };
  CHECK(edge(set_of({"a", "b"}), 0, set_of({"a", "b"})));
  CHECK(edge(set_of({"a", "b"}), 1, set_of({"c", "d"})));
  CHECK(edge(set_of({"c", "d"}), 1, set_of({"a", "b"})));
  CHECK(edge(set_of({"c", "d"}), 0, set_of({"a", "e"})));
  CHECK(edge(set_of({"a", "e"}), 1, set_of({"d", "f"})));
}

TEST_CASE("graph of sets degenerate cases") {
  for (const char* name : {"tm:3", "tm:5", "a4-example", "c3-invpal", "s3-noninvpal"}) {
    auto s = builtin(name).sub;
    auto g = graph_of_sets(s);
    CHECK(g.nodes.size() == 1);
    CHECK(g.column_number == s.size());
  }
  auto co = graph_of_sets(parse_substitution("a -> ab ; b -> ab"));
  bool singleton = false;
  for (const auto& n : co.nodes) singleton = singleton || n.size() == 1;
  CHECK(singleton);
  CHECK(co.column_number == 1);
  auto one = graph_of_sets(parse_substitution("a -> b ; b -> a"));
  CHECK(one.nodes.size() == 1);
  REQUIRE(one.edges.size() == 1);
  CHECK(one.edges[0].from == 0);
  CHECK(one.edges[0].to == 0);
  CHECK(one.edges[0].digit == 0);
}

TEST_CASE("DOT round trip") {
  for (const char* name : {"outlook6", "tm:2", "supersub5"}) {
    auto s = builtin(name).sub;
    auto g = graph_of_sets(s);
    auto dot = export_dot(g, s.alphabet());
    CHECK(dot.find("column_number=" + std::to_string(g.column_number)) != std::string::npos);
    auto back = parse_dot_nodes(dot);
    REQUIRE(back.size() == g.nodes.size());
    for (std::size_t v = 0; v < back.size(); ++v) {
      std::vector<std::string> names;
      for (Letter a : g.nodes[v]) names.push_back(s.alphabet().name(a));
      CHECK(back[v] == names);
    }
  }
}
