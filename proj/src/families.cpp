#include "symcalc/families.hpp"

#include <algorithm>
#include <map>

namespace symcalc {

std::string_view family_tag(FamilyId f) {
  switch (f) {
    case FamilyId::C: return "c";
    case FamilyId::D: return "d";
    case FamilyId::bC: return "b";
    case FamilyId::b1C: return "b1";
    case FamilyId::b2C: return "b2";
    case FamilyId::c1C: return "c1";
    case FamilyId::dD: return "dd";
    case FamilyId::d1D: return "d1";
    case FamilyId::d2D: return "d2";
  }
  return "?";
}

std::optional<FamilyId> family_from_tag(std::string_view tag) {
  for (FamilyId f : kAllFamilies)
    if (family_tag(f) == tag) return f;
  return std::nullopt;
}

namespace {

// a'_i <= a_i + slack for all i.
bool below_with_slack(const SymbolPair& p, Entry slack) {
  for (std::size_t i = 0; i < p.length(); ++i)
    if (p.a_prime()[i] > p.a()[i] + slack) return false;
  return true;
}

// a_i <= a'_{i+1} + gap for all i in [0, k-1].
bool gap_condition(const SymbolPair& p, Entry gap) {
  for (std::size_t i = 0; i + 1 < p.length(); ++i)
    if (p.a()[i] > p.a_prime()[i + 1] + gap) return false;
  return true;
}

bool dominance(const SymbolPair& p) {
  return p.a().total() > p.a_prime().total() || p.diagonal();
}

}  // namespace

bool member(const SymbolPair& p, FamilyId f) {
  switch (f) {
    case FamilyId::C: return true;
    case FamilyId::D: return dominance(p);
    case FamilyId::bC: return below_with_slack(p, 2);
    case FamilyId::b1C: return below_with_slack(p, 2) && gap_condition(p, 0);
    case FamilyId::b2C: return below_with_slack(p, 2) && gap_condition(p, 2);
    case FamilyId::c1C: return below_with_slack(p, 1) && gap_condition(p, 1);
    case FamilyId::dD: return dominance(p) && below_with_slack(p, 0);
    case FamilyId::d1D: return dominance(p) && below_with_slack(p, 0) && gap_condition(p, 2);
    case FamilyId::d2D: return dominance(p) && below_with_slack(p, 0) && gap_condition(p, 4);
  }
  return false;
}

namespace {

void gen_partitions(Entry remaining, Entry max_part, std::vector<Entry>& cur,
                    std::vector<std::vector<Entry>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (Entry part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void check_cap(Entry n) {
  if (n < 0 || n > kMaxSize)
    fail(Errc::CapExceeded,
         "size " + std::to_string(n) + " outside [0, " + std::to_string(kMaxSize) + "]");
}

}  // namespace

std::vector<std::vector<Entry>> partitions(Entry m) {
  check_cap(m);
  std::vector<std::vector<Entry>> out;
  std::vector<Entry> cur;
  gen_partitions(m, m, cur, out);
  return out;
}

BoundedSeq partition_to_seq(const std::vector<Entry>& parts, std::size_t length) {
  std::vector<Entry> entries(length, 0);
  // parts are weakly decreasing; written in reverse they fill the tail.
  std::size_t pos = length;
  for (Entry part : parts) entries[--pos] = part;
  return BoundedSeq(std::move(entries));
}

std::vector<SymbolPair> enumerate_family(FamilyId f, Entry n) {
  check_cap(n);
  const std::size_t len = static_cast<std::size_t>(n) + 2;  // canonical k = n+1
  std::vector<SymbolPair> out;
  for (Entry m = 0; m <= n; ++m) {
    const auto first = partitions(m);
    const auto second = partitions(n - m);
    for (const auto& lam : first) {
      BoundedSeq a = partition_to_seq(lam, len);
      for (const auto& mu : second) {
        SymbolPair p(a, partition_to_seq(mu, len));
        if (member(p, f)) out.push_back(std::move(p));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ClosureRule> parse_closure_rule(std::string_view text) {
  const auto plus = text.find('+');
  const auto eq = text.find('=');
  if (plus == std::string_view::npos || eq == std::string_view::npos || eq < plus)
    return std::nullopt;
  auto left = family_from_tag(text.substr(0, plus));
  auto right = family_from_tag(text.substr(plus + 1, eq - plus - 1));
  auto target = family_from_tag(text.substr(eq + 1));
  if (!left || !right || !target) return std::nullopt;
  return ClosureRule{*left, *right, *target};
}

std::string closure_rule_text(const ClosureRule& rule) {
  std::string s(family_tag(rule.left));
  s += '+';
  s += family_tag(rule.right);
  s += '=';
  s += family_tag(rule.target);
  return s;
}

ClosureReport verify_closure(const ClosureRule& rule, Entry max_n) {
  check_cap(max_n);
  const std::size_t common_len = static_cast<std::size_t>(max_n) + 2;
  std::map<std::pair<FamilyId, Entry>, std::vector<SymbolPair>> cache;
  auto padded_family = [&](FamilyId f, Entry size) -> const std::vector<SymbolPair>& {
    auto key = std::make_pair(f, size);
    auto it = cache.find(key);
    if (it == cache.end()) {
      std::vector<SymbolPair> padded;
      for (const auto& p : enumerate_family(f, size))
        padded.push_back(pad(p, common_len - p.length()));
      it = cache.emplace(key, std::move(padded)).first;
    }
    return it->second;
  };

  for (Entry m = 0; m <= max_n; ++m)
    for (Entry mp = 0; m + mp <= max_n; ++mp)
      for (const auto& x : padded_family(rule.left, m))
        for (const auto& y : padded_family(rule.right, mp))
          if (!member(sum(x, y), rule.target))
            return {false, std::make_pair(x, y)};
  return {true, std::nullopt};
}

}  // namespace symcalc
