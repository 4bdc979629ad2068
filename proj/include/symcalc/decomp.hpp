#pragma once

#include "symcalc/families.hpp"

namespace symcalc {

// The three decomposition series. Each one splits members of an input
// family into a left/right summand pair, down to a terminal family:
//
//   A : input C,  terminal c1C, split (C m, C m')    with m >= 1, m' >= 1
//   B : input bC, terminal b1C, split (bC m, dD m')  with m >= 0, m' >= 2
//   D : input dD, terminal d1D, split (dD m, dD m')  with m >= 2, m' >= 2
enum class Series { A, B, D };

inline constexpr Series kAllSeries[] = {Series::A, Series::B, Series::D};

std::string_view series_tag(Series s);  // "a", "b", "d"
std::optional<Series> series_from_tag(std::string_view tag);

FamilyId input_family(Series s);
FamilyId terminal_family(Series s);
FamilyId left_family(Series s);
FamilyId right_family(Series s);
Entry min_left_size(Series s);
Entry min_right_size(Series s);

// One decomposition step: either the input is terminal, or it splits as
// sum(left, right) with the series' family and size constraints. For
// splits, `branch` records which reduction produced it ("a1", "a2", "b1",
// "b2", "c1", "c2"; the B/D labels use the b*/c* vocabulary).
struct Decomposition {
  enum class Kind { Terminal, Split };

  Kind kind = Kind::Terminal;
  std::optional<SymbolPair> left;
  std::optional<SymbolPair> right;
  Entry m = 0;
  Entry m_prime = 0;
  std::string branch;

  bool is_split() const noexcept { return kind == Kind::Split; }

  static Decomposition terminal();
  static Decomposition split(SymbolPair l, SymbolPair r, std::string branch_label);

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Deterministic single step. The input must belong to the series' input
// family (NotInFamily otherwise) and carry a bound index large enough for
// the reduction to run; normalized input (k = n+1) always qualifies, and
// NotNormalized is thrown when an under-padded pair cannot be reduced.
Decomposition decompose_step(const SymbolPair& p, Series s);

// A leaf of the full recursive decomposition: a pair lying in the terminal
// family of `series` (series A and D recurse into both summands; series B
// recurses into the left summand with B and the right with D).
struct AtomLeaf {
  SymbolPair pair;
  Series series;

  friend bool operator==(const AtomLeaf&, const AtomLeaf&) = default;
};

// Iterated decomposition. Every leaf is terminal in its own series'
// terminal family, and the leaves sum back to the input. All leaves are
// reported at the input's bound index.
std::vector<AtomLeaf> atomize(const SymbolPair& p, Series s);

// Brute-force reference: every entrywise split of p into a valid
// (left family, right family) summand pair within the series' size bounds.
// Ordered by the left component sequence, then the left second component
// (both lexicographic). Splits only; terminal membership is not consulted.
std::vector<Decomposition> oracle_decompositions(const SymbolPair& p, Series s);

}  // namespace symcalc
