#pragma once

#include "symcalc/springer.hpp"

namespace symcalc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Independent count of partitions of m (recurrence-based; not derived from
// the enumeration code it is used to cross-check).
Entry partition_count(Entry m);

// Number of pairs of partitions with total size n: sum_m p(m) * p(n-m).
Entry bipartition_count(Entry n);

// The individual exhaustive suites. Each runs every size up to max_n and
// reports the first failure in its detail string.
CheckResult check_closure(const ClosureRule& rule, Entry max_n, bool expect_pass = true);
CheckResult check_chain_inclusions(Entry max_n);
CheckResult check_cardinality_oracle(Entry max_n);
CheckResult check_family_containment(Entry max_n);
CheckResult check_padding_invariance(Entry max_n);
CheckResult check_sequence_algebra(Entry max_n);
CheckResult check_decomposition(Series s, Entry max_n);  // totality, soundness,
                                                         // oracle consistency, dichotomy
CheckResult check_fixed_point(Series s, Entry max_n);
CheckResult check_label_bookkeeping(Entry max_n);
CheckResult check_orbit_spots();
CheckResult check_exceptional_records();

// Every suite above, in a fixed order, at the given bound.
std::vector<CheckResult> verify_all(Entry max_n);

}  // namespace symcalc
