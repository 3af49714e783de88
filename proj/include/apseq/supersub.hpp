#pragma once

#include "apseq/ap.hpp"

namespace apseq {

/// Disjoint cover of the alphabet; blocks sorted internally and ordered by smallest member.
class Partition {
 public:
  Partition(std::vector<std::vector<Letter>> blocks, std::size_t c);
  /// Blocks separated by '|', letters by whitespace, e.g. "a | b c | d e".
  static Partition parse(std::string_view text, const Alphabet& alphabet);

  const std::vector<std::vector<Letter>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::size_t block_of(Letter a) const { return theta_[a]; }
  const std::vector<std::size_t>& theta() const { return theta_; }
  std::string format(const Alphabet& alphabet) const;

  bool operator==(const Partition& o) const { return blocks_ == o.blocks_; }

 private:
  std::vector<std::vector<Letter>> blocks_;
  std::vector<std::size_t> theta_;
};

struct PartitionCounterexample {
  std::size_t column = 0;
  std::size_t block = 0;
  Letter a = 0;
  Letter b = 0;
};

struct QuotientResult {
  std::optional<Substitution> xi;
  std::optional<PartitionCounterexample> counterexample;
  bool valid() const { return xi.has_value(); }
};

/// Quotient substitution on letters A1..An when every column respects the blocks.
QuotientResult check_partition(const Substitution& sub, const Partition& p);

/// Tooling: for each pair of letters, the finest column-compatible partition joining them.
/// Distinct nontrivial results only.
std::vector<Partition> compatible_partitions(const Substitution& sub);

/// Identity family of the quotient as lower bounds for the fixed point of `sub`.
/// The seed's block must be a singleton and the quotient must be aperiodic, primitive, bijective
/// with identity column 0.
std::vector<DifferenceFamily> lift_identity_family(const Substitution& sub, const Partition& p, unsigned k_from,
                                                   unsigned k_to);

struct ColumnWitness {
  Letter letter = 0;
  std::vector<std::uint64_t> verified;
  std::vector<std::uint64_t> excluded;
  /// Number of consecutive verified terms k d from k = 0.
  std::uint64_t run = 0;
};

/// For k < count, position k d is verified when its last base-L digit is one of `columns` and the
/// quotient fixed point has the seed's block at (k d) div L. Columns must map the seed's block to the seed.
ColumnWitness lift_column_family(const Substitution& sub, const Partition& p, const std::vector<std::size_t>& columns,
                                 std::uint64_t d, std::uint64_t count);

struct SetGraph {
  std::vector<std::vector<Letter>> nodes;
  struct Edge {
    std::size_t from;
    std::size_t digit;
    std::size_t to;
  };
  std::vector<Edge> edges;
  std::vector<std::size_t> minimal;
  std::size_t column_number = 0;
};

SetGraph graph_of_sets(const Substitution& sub);
std::string export_dot(const SetGraph& g, const Alphabet& alphabet);
/// Letter sets of the nodes in a DOT text written by export_dot, in node order.
std::vector<std::vector<std::string>> parse_dot_nodes(std::string_view dot);

}  // namespace apseq
