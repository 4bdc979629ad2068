#include "symcalc/seq.hpp"

#include <numeric>
#include <sstream>

namespace symcalc {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotNondecreasing: return "NotNondecreasing";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotStabilizable: return "NotStabilizable";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotInFamily: return "NotInFamily";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::UnknownCase: return "UnknownCase";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

BoundedSeq::BoundedSeq(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    fail(Errc::NotNondecreasing, "sequence must be nonempty");
  if (entries_.front() < 0)
    fail(Errc::NotNondecreasing, "entries must be nonnegative");
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
    if (entries_[i] > entries_[i + 1])
      fail(Errc::NotNondecreasing,
           "entry " + std::to_string(entries_[i + 1]) + " at index " +
               std::to_string(i + 1) + " breaks the nondecreasing order");
}

Entry BoundedSeq::total() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), Entry{0});
}

SymbolPair::SymbolPair(BoundedSeq a, BoundedSeq a_prime)
    : a_(std::move(a)), a_prime_(std::move(a_prime)) {
  if (a_.length() != a_prime_.length())
    fail(Errc::LengthMismatch, "components have lengths " + std::to_string(a_.length()) +
                                   " and " + std::to_string(a_prime_.length()));
}

SymbolPair SymbolPair::make(std::vector<Entry> a, std::vector<Entry> a_prime) {
  return SymbolPair(BoundedSeq(std::move(a)), BoundedSeq(std::move(a_prime)));
}

namespace {

void render_seq(std::ostringstream& os, const BoundedSeq& s) {
  os << '(';
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ')';
}

}  // namespace

std::string SymbolPair::to_string() const {
  std::ostringstream os;
  os << '(';
  render_seq(os, a_);
  os << ',';
  render_seq(os, a_prime_);
  os << ')';
  return os.str();
}

SymbolPair sum(const SymbolPair& p, const SymbolPair& q) {
  if (p.length() != q.length())
    fail(Errc::LengthMismatch, "cannot add pairs with lengths " +
                                   std::to_string(p.length()) + " and " +
                                   std::to_string(q.length()));
  std::vector<Entry> a(p.length()), ap(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) {
    a[i] = p.a()[i] + q.a()[i];
    ap[i] = p.a_prime()[i] + q.a_prime()[i];
  }
  return SymbolPair::make(std::move(a), std::move(ap));
}

SymbolPair pad(const SymbolPair& p, std::size_t m) {
  if (m == 0) return p;
  std::vector<Entry> a(m, 0), ap(m, 0);
  a.insert(a.end(), p.a().entries().begin(), p.a().entries().end());
  ap.insert(ap.end(), p.a_prime().entries().begin(), p.a_prime().entries().end());
  return SymbolPair::make(std::move(a), std::move(ap));
}

SymbolPair normalize(const SymbolPair& p) {
  const Entry n = p.size();
  const std::size_t target_len = static_cast<std::size_t>(n) + 2;
  const std::size_t len = p.length();
  if (len < target_len) return pad(p, target_len - len);
  if (len == target_len) return p;
  const std::size_t drop = len - target_len;
  for (std::size_t i = 0; i < drop; ++i)
    if (p.a()[i] != 0 || p.a_prime()[i] != 0)
      fail(Errc::NotStabilizable,
           "nonzero leading entry at index " + std::to_string(i) +
               " prevents truncation to the canonical bound index");
  std::vector<Entry> a(p.a().entries().begin() + drop, p.a().entries().end());
  std::vector<Entry> ap(p.a_prime().entries().begin() + drop, p.a_prime().entries().end());
  return SymbolPair::make(std::move(a), std::move(ap));
}

SymbolPair zero_pair(std::size_t k) {
  std::vector<Entry> z(k + 1, 0);
  return SymbolPair::make(z, z);
}

}  // namespace symcalc
