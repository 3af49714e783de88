#pragma once

#include "apseq/spin.hpp"
#include "apseq/supersub.hpp"

namespace apseq {

/// Columns sending the seed's block to the seed, with the step s of the difference s(1 + L^n + L^{2n}).
struct ColumnRecipe {
  std::vector<std::size_t> columns;
  std::uint64_t step = 0;
};

/// A substitution together with whatever structure the analyses need.
struct AnalysisTarget {
  std::string name;
  Substitution sub;
  std::optional<SpinSystem> spin;
  std::optional<Partition> partition;
  std::optional<ColumnRecipe> recipe;
  std::optional<Coding> default_coding;
  std::optional<Letter> seed;

  FixedPointSpec fixed_point() const { return FixedPointSpec::make(sub, seed); }
};

/// Thue-Morse over L letters: rho_i(a) = a + i mod L.
Substitution thue_morse(std::size_t L);

AnalysisTarget make_target(Substitution sub, std::string name = "custom");
AnalysisTarget spin_target(const SpinSystem& sys, std::string name);

/// Names: tm:L, rs, hadamard4, vandermonde:L, a4-example, c3-invpal, s3-noninvpal, supersub5,
/// supersub6, outlook6.
AnalysisTarget builtin(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace apseq
