#pragma once

#include "symcalc/decomp.hpp"

namespace symcalc {

// Classical group series, characteristic 2 throughout this module.
enum class GroupSeries { B, C, D };

inline constexpr GroupSeries kAllGroupSeries[] = {GroupSeries::B, GroupSeries::C,
                                                  GroupSeries::D};

std::string_view group_series_tag(GroupSeries s);  // "B", "C", "D"
std::optional<GroupSeries> group_series_from_tag(std::string_view tag);

struct GroupType {
  GroupSeries series;
  Entry rank = 0;
};

// Smallest rank the classical parametrizations are stated for
// (B, C: rank >= 2; D: rank >= 4). Smaller ranks are computed anyway and
// flagged as outside that range.
Entry min_paper_rank(GroupSeries s);

enum class Side { Group, Algebra };
std::string_view side_tag(Side s);  // "group", "algebra"
std::optional<Side> side_from_tag(std::string_view tag);

// A label for one orbit: a symbol pair plus, in type D when the pair is
// diagonal (a = a'), a marker distinguishing the two elements of its fiber.
enum class SplitMark { I, II };

struct OrbitLabel {
  SymbolPair pair;
  std::optional<SplitMark> split;

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

struct SpringerSet {
  GroupType group;
  Side side;
  std::vector<OrbitLabel> labels;  // pair order, I before II
  bool outside_paper_range = false;
};

// The orbit label set for the group/algebra side:
//   algebra: C_n -> all of C(n); B_n -> bC(n); D_n -> dD(n) fiber-expanded
//   group:   B_n, C_n -> b2C(n); D_n -> d2D(n) fiber-expanded
SpringerSet springer_set(GroupType g, Side side);

// Fiber over a dD member: two labels (I, II) when the pair is diagonal,
// one unmarked label otherwise. Throws NotInFamily outside dD.
std::vector<OrbitLabel> zeta_fiber(const SymbolPair& p);

// Fixed point of the series recursion at size n: the terminal family of
// the series plus all sums of smaller fixed-point members within the
// series' size bounds (series B sums its own members with series-D ones).
// Sums are taken at the common bound index n+1; the result is sorted.
std::vector<SymbolPair> t2_fixed_point(Series s, Entry n);

// The inclusion of the group-side label set into the algebra-side one,
// enumerated as (domain -> codomain) pairs plus the codomain labels not hit.
struct TauResult {
  GroupType group;
  std::vector<std::pair<OrbitLabel, OrbitLabel>> mapping;
  std::vector<OrbitLabel> unhit;
  bool outside_paper_range = false;

  bool bijection() const noexcept { return unhit.empty(); }
};

TauResult tau(GroupType g);

struct CountRow {
  Entry n = 0;
  Entry card_group = 0;
  Entry card_algebra = 0;
  Entry difference = 0;  // card_algebra - card_group
};

// One row per rank n in [min_paper_rank(series), max_n], with fiber-expanded
// cardinalities for type D.
std::vector<CountRow> counts(GroupSeries series, Entry max_n);

// Exceptional types: the recorded label sets added on the algebra side at
// each bad prime, with their b-invariants. Pure static data.
enum class ExceptionalType { G2, F4, E6, E7, E8 };

inline constexpr ExceptionalType kAllExceptionalTypes[] = {
    ExceptionalType::G2, ExceptionalType::F4, ExceptionalType::E6,
    ExceptionalType::E7, ExceptionalType::E8};

std::string_view exceptional_tag(ExceptionalType t);  // "g2", ...
std::optional<ExceptionalType> exceptional_from_tag(std::string_view tag);

struct ExceptionalDelta {
  ExceptionalType group;
  int p = 0;
  std::vector<std::pair<std::string, Entry>> added;  // (label, b-invariant)
};

// Throws UnknownCase when (t, p) is not one of the recorded bad-prime cases.
ExceptionalDelta exceptional_delta(ExceptionalType t, int p);

}  // namespace symcalc
