#include "scottmax/sequence.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cursor.hpp"

namespace scottmax {

namespace {

void require_positive(std::span<const Nat> entries) {
  if (std::ranges::any_of(entries, [](Nat v) { return v == 0; }))
    throw InputError("sequence entries must be positive naturals");
}

// Shortest p dividing |w| with w == (w[0..p))^(|w|/p).
std::size_t primitive_root_length(std::span<const Nat> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

void join(std::ostream& os, std::span<const Nat> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
}

}  // namespace

std::string NatOmega::to_string() const { return omega_ ? "w" : std::to_string(value_); }

Seq Seq::finite(std::vector<Nat> entries) {
  if (entries.empty()) throw InputError("finite sequences must be nonempty");
  require_positive(entries);
  return Seq(std::move(entries), {});
}

Seq Seq::periodic(std::vector<Nat> preamble, std::vector<Nat> period) {
  if (period.empty()) throw InputError("period must be nonempty");
  require_positive(preamble);
  require_positive(period);

  period.resize(primitive_root_length(period));
  // Absorb preamble tail into the period: x|u...y with x == y becomes |x u...
  while (!preamble.empty() && preamble.back() == period.back()) {
    preamble.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return Seq(std::move(preamble), std::move(period));
}

SeqLen Seq::length() const { return is_finite() ? SeqLen(head_.size()) : SeqLen::omega(); }

Nat Seq::at(Nat k) const {
  if (k == 0) throw IndexError("sequence positions start at 1");
  if (k <= head_.size()) return head_[k - 1];
  if (is_finite())
    throw IndexError("position " + std::to_string(k) + " past end of length-" + std::to_string(head_.size()) +
                     " sequence");
  return period_[(k - 1 - head_.size()) % period_.size()];
}

Seq Seq::prefix(Nat k) const {
  if (k == 0 || !length().at_least(k)) throw IndexError("prefix length out of range");
  std::vector<Nat> out;
  out.reserve(k);
  for (Nat i = 1; i <= k; ++i) out.push_back(at(i));
  return Seq(std::move(out), {});
}

Seq Seq::extended(Nat entry) const {
  if (is_infinite()) throw InputError("cannot extend an infinite sequence");
  if (entry == 0) throw InputError("sequence entries must be positive naturals");
  auto out = head_;
  out.push_back(entry);
  return Seq(std::move(out), {});
}

Nat Seq::max_entry() const {
  Nat m = 0;
  for (Nat v : head_) m = std::max(m, v);
  for (Nat v : period_) m = std::max(m, v);
  return m;
}

std::string Seq::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Seq& s) {
  os << '[';
  join(os, s.head());
  if (s.is_infinite()) {
    os << '|';
    join(os, s.period());
  }
  return os << ']';
}

SeqLen length(const Seq& a) { return a.length(); }

Nat index(const Seq& a, Nat k) { return a.at(k); }

bool substring_leq(const Seq& a, const Seq& b) {
  if (a.is_infinite()) return a == b;
  const Nat n = a.head().size();
  if (!b.length().at_least(n)) return false;
  for (Nat k = 1; k <= n; ++k)
    if (a.at(k) != b.at(k)) return false;
  return true;
}

bool comparable(const Seq& a, const Seq& b) { return substring_leq(a, b) || substring_leq(b, a); }

bool has_upper_bound_sigma(const Seq& a, const Seq& b) {
  // Anything above an infinite sequence is that sequence, and anything above a
  // finite one extends it, so the longer input is the only candidate to test.
  const Seq& candidate = a.length() >= b.length() ? a : b;
  const Seq& other = &candidate == &a ? b : a;
  if (other.is_infinite() && candidate.is_infinite()) return other == candidate;
  const Nat n = other.head().size();
  for (Nat k = 1; k <= n; ++k)
    if (other.at(k) != candidate.at(k)) return false;
  return true;
}

Nat component_index(const Seq& a) { return a.at(1); }

namespace {

std::vector<Nat> parse_list(detail::Cursor& cur, bool allow_empty) {
  std::vector<Nat> out;
  char c = cur.peek();
  if (c == '|' || c == ']') {
    if (!allow_empty) cur.fail("expected a positive natural");
    return out;
  }
  out.push_back(cur.positive());
  while (cur.accept(',')) out.push_back(cur.positive());
  return out;
}

}  // namespace

Seq parse_seq(std::string_view text, std::size_t offset) {
  detail::Cursor cur(text, offset);
  cur.expect('[');
  auto head = parse_list(cur, true);
  Seq result = [&] {
    if (cur.accept('|')) {
      auto period = parse_list(cur, false);
      cur.expect(']');
      return Seq::periodic(std::move(head), std::move(period));
    }
    if (head.empty()) cur.fail("finite sequences must be nonempty");
    cur.expect(']');
    return Seq::finite(std::move(head));
  }();
  cur.finish();
  return result;
}

Nat StreamView::at(Nat k) {
  if (k == 0) throw IndexError("sequence positions start at 1");
  while (cache_.size() < k) {
    Nat v = gen_(cache_.size() + 1);
    if (v == 0) throw InputError("stream produced a non-positive entry");
    cache_.push_back(v);
  }
  return cache_[k - 1];
}

Seq StreamView::prefix(Nat k) {
  if (k == 0) throw IndexError("prefix length out of range");
  at(k);
  return Seq::finite(std::vector<Nat>(cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(k)));
}

}  // namespace scottmax
