#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symcalc {

using Entry = long long;

enum class Errc {
  NotNondecreasing,
  LengthMismatch,
  NotStabilizable,
  CapExceeded,
  NotInFamily,
  NotNormalized,
  UnknownCase,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

// A nondecreasing sequence of natural numbers a_0 <= a_1 <= ... <= a_k.
// k (the largest index) is the bound index; the length is k+1.
class BoundedSeq {
public:
  explicit BoundedSeq(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t length() const noexcept { return entries_.size(); }
  std::size_t bound_index() const noexcept { return entries_.size() - 1; }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  Entry total() const noexcept;

  friend bool operator==(const BoundedSeq&, const BoundedSeq&) = default;
  friend auto operator<=>(const BoundedSeq& x, const BoundedSeq& y) {
    return x.entries_ <=> y.entries_;
  }

private:
  std::vector<Entry> entries_;
};

// An ordered pair (a, a') of equal-length bounded sequences. Its size n is
// |a| + |a'|. Pairs are immutable values; the ordering compares the first
// component entrywise, then the second.
class SymbolPair {
public:
  SymbolPair(BoundedSeq a, BoundedSeq a_prime);
  static SymbolPair make(std::vector<Entry> a, std::vector<Entry> a_prime);

  const BoundedSeq& a() const noexcept { return a_; }
  const BoundedSeq& a_prime() const noexcept { return a_prime_; }
  std::size_t length() const noexcept { return a_.length(); }
  std::size_t bound_index() const noexcept { return a_.bound_index(); }
  Entry size() const noexcept { return a_.total() + a_prime_.total(); }
  bool diagonal() const noexcept { return a_ == a_prime_; }

  std::string to_string() const;

  friend bool operator==(const SymbolPair&, const SymbolPair&) = default;
  friend auto operator<=>(const SymbolPair&, const SymbolPair&) = default;

private:
  BoundedSeq a_;
  BoundedSeq a_prime_;
};

// Entrywise sum of two pairs with the same bound index.
SymbolPair sum(const SymbolPair& p, const SymbolPair& q);
inline SymbolPair operator+(const SymbolPair& p, const SymbolPair& q) { return sum(p, q); }

// Prefix both components with m zeros (the stabilization imbedding, applied
// m times). The size is unchanged.
SymbolPair pad(const SymbolPair& p, std::size_t m);

// Canonical representative with bound index k = n+1 (length n+2), where
// n is the pair's size; n = 0 normalizes to k = 1. Pads when short; strips
// simultaneous leading zeros when long. Throws NotStabilizable if a leading
// entry that must be dropped is nonzero (impossible for valid pairs).
SymbolPair normalize(const SymbolPair& p);

// The pair of all-zero sequences with the given bound index.
SymbolPair zero_pair(std::size_t k);

}  // namespace symcalc
