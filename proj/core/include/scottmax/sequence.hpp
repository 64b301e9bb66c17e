#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scottmax/errors.hpp"

namespace scottmax {

using Nat = std::uint64_t;

/// A positive natural number or omega; omega is the top of the total order.
class NatOmega {
 public:
  constexpr NatOmega() = default;
  constexpr explicit NatOmega(Nat value) : value_(value) {}

  static constexpr NatOmega omega() {
    NatOmega w;
    w.omega_ = true;
    return w;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr bool is_finite() const { return !omega_; }

  // Only meaningful when is_finite().
  constexpr Nat value() const { return value_; }

  constexpr bool operator==(const NatOmega&) const = default;
  constexpr std::strong_ordering operator<=>(const NatOmega& other) const {
    if (omega_ != other.omega_) return omega_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (omega_) return std::strong_ordering::equal;
    return value_ <=> other.value_;
  }

  constexpr bool at_least(Nat n) const { return omega_ || value_ >= n; }

  std::string to_string() const;

 private:
  Nat value_ = 1;
  bool omega_ = false;
};

using SeqLen = NatOmega;

/// Nonempty finite or eventually-periodic infinite sequence of positive naturals,
/// ordered by the prefix (substring) relation.
///
/// Infinite sequences are kept in canonical form: the period is primitive and
/// the preamble is as short as possible. Equality is structural on that form.
class Seq {
 public:
  static Seq finite(std::vector<Nat> entries);
  static Seq periodic(std::vector<Nat> preamble, std::vector<Nat> period);

  bool is_finite() const { return period_.empty(); }
  bool is_infinite() const { return !period_.empty(); }

  SeqLen length() const;

  /// k-th entry, 1-based. Throws IndexError past the end of a finite sequence.
  Nat at(Nat k) const;

  /// The finite prefix of length k (1 <= k <= length()).
  Seq prefix(Nat k) const;

  /// Finite sequence followed by one more entry.
  Seq extended(Nat entry) const;

  // For finite sequences `head()` holds all entries and `period()` is empty.
  std::span<const Nat> head() const { return head_; }
  std::span<const Nat> period() const { return period_; }

  /// Largest entry that occurs anywhere in the sequence.
  Nat max_entry() const;

  bool operator==(const Seq&) const = default;
  auto operator<=>(const Seq&) const = default;

  std::string to_string() const;

 private:
  Seq(std::vector<Nat> head, std::vector<Nat> period) : head_(std::move(head)), period_(std::move(period)) {}

  std::vector<Nat> head_;
  std::vector<Nat> period_;
};

std::ostream& operator<<(std::ostream& os, const Seq& s);

SeqLen length(const Seq& a);
Nat index(const Seq& a, Nat k);

/// a is a prefix of b (a finite), or a == b (a infinite).
bool substring_leq(const Seq& a, const Seq& b);
bool comparable(const Seq& a, const Seq& b);

/// Whether {a, b} has an upper bound among sequences. Decided by building the
/// only possible candidate bound (the longer of the two) and testing it.
bool has_upper_bound_sigma(const Seq& a, const Seq& b);

/// First entry; sequences are comparable only inside one component.
Nat component_index(const Seq& a);

/// Parses `[1,5,7,11]` or `[3|2,4]` (`[|2]` for an empty preamble).
/// `offset` is added to reported error positions.
Seq parse_seq(std::string_view text, std::size_t offset = 0);

/// Index-function view of an arbitrary infinite sequence. Used only to cut
/// finite prefixes; never compared for equality. Memoizes computed entries, so
/// a single view must not be advanced from two threads at once.
class StreamView {
 public:
  using Generator = std::function<Nat(Nat)>;

  explicit StreamView(Generator gen) : gen_(std::move(gen)) {}

  Nat at(Nat k);
  Seq prefix(Nat k);
  std::size_t memoized() const { return cache_.size(); }

 private:
  Generator gen_;
  std::vector<Nat> cache_;
};

}  // namespace scottmax
