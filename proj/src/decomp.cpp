#include "symcalc/decomp.hpp"

#include <cassert>
#include <numeric>

namespace symcalc {

std::string_view series_tag(Series s) {
  switch (s) {
    case Series::A: return "a";
    case Series::B: return "b";
    case Series::D: return "d";
  }
  return "?";
}

std::optional<Series> series_from_tag(std::string_view tag) {
  for (Series s : kAllSeries)
    if (series_tag(s) == tag) return s;
  return std::nullopt;
}

FamilyId input_family(Series s) {
  switch (s) {
    case Series::A: return FamilyId::C;
    case Series::B: return FamilyId::bC;
    case Series::D: return FamilyId::dD;
  }
  return FamilyId::C;
}

FamilyId terminal_family(Series s) {
  switch (s) {
    case Series::A: return FamilyId::c1C;
    case Series::B: return FamilyId::b1C;
    case Series::D: return FamilyId::d1D;
  }
  return FamilyId::c1C;
}

FamilyId left_family(Series s) { return input_family(s); }

FamilyId right_family(Series s) {
  return s == Series::A ? FamilyId::C : FamilyId::dD;
}

Entry min_left_size(Series s) {
  switch (s) {
    case Series::A: return 1;
    case Series::B: return 0;
    case Series::D: return 2;
  }
  return 0;
}

Entry min_right_size(Series s) { return s == Series::A ? 1 : 2; }

Decomposition Decomposition::terminal() { return Decomposition{}; }

Decomposition Decomposition::split(SymbolPair l, SymbolPair r, std::string branch_label) {
  Decomposition d;
  d.kind = Kind::Split;
  d.m = l.size();
  d.m_prime = r.size();
  d.left = std::move(l);
  d.right = std::move(r);
  d.branch = std::move(branch_label);
  return d;
}

namespace {

using Seq = std::vector<Entry>;

[[noreturn]] void invalid_split(const char* what) {
  throw std::logic_error(std::string("decompose_step produced an invalid split: ") + what);
}

// Full validation of a candidate split against the series contract. Every
// emitted split passes through here.
Decomposition checked_split(const SymbolPair& input, Series s, Seq la, Seq lap, Seq ra,
                            Seq rap, const char* branch) {
  SymbolPair left = SymbolPair::make(std::move(la), std::move(lap));
  SymbolPair right = SymbolPair::make(std::move(ra), std::move(rap));
  if (sum(left, right) != input) invalid_split("summands do not reconstruct the input");
  if (!member(left, left_family(s))) invalid_split("left summand outside its family");
  if (!member(right, right_family(s))) invalid_split("right summand outside its family");
  if (left.size() < min_left_size(s)) invalid_split("left size below the series bound");
  if (right.size() < min_right_size(s)) invalid_split("right size below the series bound");
  return Decomposition::split(std::move(left), std::move(right), branch);
}

// Smallest i in [0, k-1] with v[i] < v[i+1]; -1 when v is constant.
std::ptrdiff_t first_ascent(const Seq& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

// Series A. Peel a unit staircase off whichever component has an ascent:
// the right summand is the indicator of [s+1, k] in that component for the
// smallest ascent position s, the left summand is the remainder.
Decomposition decompose_a(const SymbolPair& p) {
  const Seq& c = p.a().entries();
  const Seq& cp = p.a_prime().entries();
  const std::size_t len = c.size();

  if (std::ptrdiff_t s = first_ascent(c); s >= 0) {
    Seq la = c, ra(len, 0);
    for (std::size_t i = static_cast<std::size_t>(s) + 1; i < len; ++i) {
      ra[i] = 1;
      la[i] -= 1;
    }
    return checked_split(p, Series::A, std::move(la), cp, std::move(ra), Seq(len, 0), "a1");
  }
  if (std::ptrdiff_t s = first_ascent(cp); s >= 0) {
    Seq lap = cp, rap(len, 0);
    for (std::size_t i = static_cast<std::size_t>(s) + 1; i < len; ++i) {
      rap[i] = 1;
      lap[i] -= 1;
    }
    return checked_split(p, Series::A, c, std::move(lap), Seq(len, 0), std::move(rap), "a2");
  }
  // Both components constant and the pair is not terminal: the bound index
  // is too small for the reduction (a normalized pair would be all zero here).
  fail(Errc::NotNormalized,
       "constant non-terminal pair " + p.to_string() + "; normalize first");
}

// Series B and D share one reduction, differing by the offset in the
// comparison of a' against a (2 for B, 0 for D), the summand families, and
// the branch labels. Writing off = 2 or 0:
//
//   branch 1: pick the largest s in [l, k] with c'_s < c_s + off (l = first
//     nonzero index of c), then the smallest t <= s such that
//     c'_j < c_j + off throughout [t, s] and c_{t-1} < c_t. The right
//     summand takes 1 on [t, k] in the first component and on [s+1, k] in
//     the second, its size is r = 2k - t - s + 1. When r = 1 (t = s = k)
//     the step only peels one unit off c_k; the unit is accumulated into
//     the right summand and the reduction restarts on the smaller pair.
//
//   branch 2: c' = c + off throughout [l, k]; pick the largest ascent
//     position s of c' in [l, k-1] and take the indicator of [s+1, k] in
//     both components (size 2(k - s) >= 2).
//
// Any remaining shape is terminal, so it never reaches the reduction.
Decomposition decompose_bd(const SymbolPair& p, Series s) {
  const Entry off = s == Series::B ? 2 : 0;
  const char* branch1 = s == Series::B ? "b1" : "c1";
  const char* branch2 = s == Series::B ? "b2" : "c2";
  const std::size_t len = p.length();
  const std::size_t k = len - 1;

  Seq c = p.a().entries();
  Seq cp = p.a_prime().entries();
  Seq acc(len, 0);  // right-summand units accumulated by r = 1 reductions

  for (;;) {
    std::size_t l = 0;
    while (l < len && c[l] == 0) ++l;
    if (l == len)
      invalid_split("first component vanished while the pair is not terminal");

    // branch 1 scan: largest index where a' sits strictly below a + off.
    std::ptrdiff_t sidx = -1;
    for (std::size_t i = len; i-- > l;)
      if (cp[i] < c[i] + off) {
        sidx = static_cast<std::ptrdiff_t>(i);
        break;
      }

    if (sidx >= 0) {
      const std::size_t su = static_cast<std::size_t>(sidx);
      std::size_t t = l;
      for (std::size_t i = su + 1; i-- > l;)
        if (cp[i] == c[i] + off) {
          t = i + 1;
          break;
        }
      assert(t <= su);
      assert((t == 0 ? Entry{0} : c[t - 1]) < c[t]);

      const Entry r = 2 * static_cast<Entry>(k) - static_cast<Entry>(t) -
                      static_cast<Entry>(su) + 1;
      if (r == 1) {
        // t = s = k: peel one unit off c_k, fold it into the accumulated
        // right summand, and reduce the remainder.
        acc[k] += 1;
        c[k] -= 1;
        SymbolPair reduced = SymbolPair::make(c, cp);
        if (!member(reduced, input_family(s)) || member(reduced, terminal_family(s)))
          invalid_split("unit reduction left the series' reducible range");
        continue;
      }
      Seq la = c, lap = cp, ra = acc, rap(len, 0);
      for (std::size_t i = t; i <= k; ++i) {
        ra[i] += 1;
        la[i] -= 1;
      }
      for (std::size_t i = su + 1; i <= k; ++i) {
        rap[i] = 1;
        lap[i] -= 1;
      }
      return checked_split(p, s, std::move(la), std::move(lap), std::move(ra),
                           std::move(rap), branch1);
    }

    // branch 2: a' = a + off on [l, k]; split at the last ascent of a'.
    std::ptrdiff_t s2 = -1;
    for (std::size_t i = k; i-- > l;)
      if (cp[i] < cp[i + 1]) {
        s2 = static_cast<std::ptrdiff_t>(i);
        break;
      }
    if (s2 >= 0) {
      Seq la = c, lap = cp, ra = acc, rap(len, 0);
      for (std::size_t i = static_cast<std::size_t>(s2) + 1; i <= k; ++i) {
        ra[i] += 1;
        rap[i] = 1;
        la[i] -= 1;
        lap[i] -= 1;
      }
      return checked_split(p, s, std::move(la), std::move(lap), std::move(ra),
                           std::move(rap), branch2);
    }

    // a' = a + off and constant on [l, k]: such a pair is terminal at an
    // adequate bound index, so reaching here means the input was too short.
    fail(Errc::NotNormalized,
         "pair " + p.to_string() + " cannot be reduced at this bound index; normalize first");
  }
}

}  // namespace

Decomposition decompose_step(const SymbolPair& p, Series s) {
  if (!member(p, input_family(s)))
    fail(Errc::NotInFamily, "pair " + p.to_string() + " is not in family " +
                                std::string(family_tag(input_family(s))));
  if (member(p, terminal_family(s))) return Decomposition::terminal();
  switch (s) {
    case Series::A: return decompose_a(p);
    case Series::B:
    case Series::D: return decompose_bd(p, s);
  }
  fail(Errc::UnknownCase, "unhandled series");
}

namespace {

void atomize_into(const SymbolPair& p, Series s, std::vector<AtomLeaf>& out) {
  Decomposition d = decompose_step(p, s);
  if (!d.is_split()) {
    out.push_back(AtomLeaf{p, s});
    return;
  }
  atomize_into(*d.left, s, out);
  atomize_into(*d.right, s == Series::A ? Series::A : Series::D, out);
}

}  // namespace

std::vector<AtomLeaf> atomize(const SymbolPair& p, Series s) {
  std::vector<AtomLeaf> out;
  atomize_into(p, s, out);
  return out;
}

namespace {

// All ways to write v as x + y with both parts nondecreasing, reported as
// the x side, in lexicographic order. At each index the admissible values
// form the window [x_{i-1}, x_{i-1} + (v_i - v_{i-1})].
void gen_seq_splits(const Seq& v, std::size_t i, Entry prev_x, Entry prev_rest, Seq& cur,
                    std::vector<Seq>& out) {
  if (i == v.size()) {
    out.push_back(cur);
    return;
  }
  for (Entry x = prev_x; x + prev_rest <= v[i]; ++x) {
    cur.push_back(x);
    gen_seq_splits(v, i + 1, x, v[i] - x, cur, out);
    cur.pop_back();
  }
}

std::vector<Seq> seq_splits(const Seq& v) {
  std::vector<Seq> out;
  Seq cur;
  gen_seq_splits(v, 0, 0, 0, cur, out);
  return out;
}

}  // namespace

std::vector<Decomposition> oracle_decompositions(const SymbolPair& p, Series s) {
  if (!member(p, input_family(s)))
    fail(Errc::NotInFamily, "pair " + p.to_string() + " is not in family " +
                                std::string(family_tag(input_family(s))));
  if (p.size() > kMaxSize)
    fail(Errc::CapExceeded, "size " + std::to_string(p.size()) + " exceeds the cap");

  const Seq& c = p.a().entries();
  const Seq& cp = p.a_prime().entries();
  const Entry n = p.size();
  std::vector<Decomposition> out;
  for (const Seq& xa : seq_splits(c)) {
    for (const Seq& xap : seq_splits(cp)) {
      SymbolPair left = SymbolPair::make(xa, xap);
      const Entry m = left.size();
      const Entry mp = n - m;
      if (m < min_left_size(s) || mp < min_right_size(s)) continue;
      Seq ya(c.size()), yap(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        ya[i] = c[i] - xa[i];
        yap[i] = cp[i] - xap[i];
      }
      SymbolPair right = SymbolPair::make(std::move(ya), std::move(yap));
      if (!member(left, left_family(s)) || !member(right, right_family(s))) continue;
      out.push_back(Decomposition::split(std::move(left), std::move(right), ""));
    }
  }
  return out;
}

}  // namespace symcalc
