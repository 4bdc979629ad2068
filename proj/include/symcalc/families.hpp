#pragma once

#include <optional>
#include <utility>

#include "symcalc/seq.hpp"

namespace symcalc {

// Hard cap on the pair size accepted by the exhaustive enumerators and
// everything built on top of them. Enumeration cost grows with the square
// of the partition function, so this is a practicality bound, not a
// correctness one.
inline constexpr Entry kMaxSize = 24;

// The nine constrained families of symbol pairs. C is the unconstrained
// set of equal-length pairs of given size; D adds the dominance-or-equality
// condition; the decorated families add per-index inequalities:
//
//   bC  : a'_i <= a_i + 2                                  (all i)
//   b1C : bC and a_i <= a'_{i+1}                           (i < k)
//   b2C : bC and a_i <= a'_{i+1} + 2                       (i < k)
//   c1C : a_i <= a'_{i+1} + 1 (i < k) and a'_i <= a_i + 1  (all i)
//   dD  : D  and a'_i <= a_i                               (all i)
//   d1D : dD and a_i <= a'_{i+1} + 2                       (i < k)
//   d2D : dD and a_i <= a'_{i+1} + 4                       (i < k)
enum class FamilyId { C, D, bC, b1C, b2C, c1C, dD, d1D, d2D };

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::C,   FamilyId::D,   FamilyId::bC,
    FamilyId::b1C, FamilyId::b2C, FamilyId::c1C,
    FamilyId::dD,  FamilyId::d1D, FamilyId::d2D,
};

// Serialized tags: "c","d","b","b1","b2","c1","dd","d1","d2".
std::string_view family_tag(FamilyId f);
std::optional<FamilyId> family_from_tag(std::string_view tag);

// Membership, evaluated at the pair's own bound index.
bool member(const SymbolPair& p, FamilyId f);

// All members of the family with size n, at the canonical bound index
// k = n+1, sorted in the pair order. Throws CapExceeded beyond kMaxSize.
std::vector<SymbolPair> enumerate_family(FamilyId f, Entry n);

// All partitions of m (parts weakly decreasing), and the rendering of a
// partition as a nondecreasing sequence of the requested length.
std::vector<std::vector<Entry>> partitions(Entry m);
BoundedSeq partition_to_seq(const std::vector<Entry>& parts, std::size_t length);

// A closure statement: sums of a left-family member and a right-family
// member land in the target family. Arbitrary triples are allowed so that
// failing rules can be documented by their counterexamples.
struct ClosureRule {
  FamilyId left;
  FamilyId right;
  FamilyId target;
};

std::optional<ClosureRule> parse_closure_rule(std::string_view text);  // "b+dd=b"
std::string closure_rule_text(const ClosureRule& rule);

struct ClosureReport {
  bool pass = false;
  // First violating summand pair in scan order (sizes ascending, then the
  // pair order on each side), at the common bound index max_n + 1.
  std::optional<std::pair<SymbolPair, SymbolPair>> counterexample;
};

// Exhaustively checks sum(x, y) in target for all x in left with size m,
// y in right with size m', m + m' <= max_n, at common bound index max_n+1.
ClosureReport verify_closure(const ClosureRule& rule, Entry max_n);

}  // namespace symcalc
