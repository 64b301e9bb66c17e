#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scottmax/sequence.hpp"

namespace scottmax {

/// Index of an X-point x_{m,n}: column m, rank n (finite or omega).
struct XIndex {
  Nat m;
  NatOmega n;

  bool operator==(const XIndex&) const = default;
  auto operator<=>(const XIndex&) const = default;
};

/// Element of L = X ∪ Σ ∪ Σ*.
class LElem {
 public:
  enum class Kind { xpoint, sigma, sigmastar };

  static LElem x(Nat m, Nat n);
  static LElem x_top(Nat m);
  static LElem x(XIndex idx);
  static LElem sigma(Seq a) { return LElem(std::move(a), Kind::sigma); }
  static LElem sigmastar(Seq a) { return LElem(std::move(a), Kind::sigmastar); }

  Kind kind() const { return kind_; }
  bool is_x() const { return kind_ == Kind::xpoint; }
  bool is_sigma() const { return kind_ == Kind::sigma; }
  bool is_star() const { return kind_ == Kind::sigmastar; }
  bool is_sequence() const { return kind_ != Kind::xpoint; }

  /// Throws VariantError unless is_x().
  const XIndex& xindex() const;
  /// Throws VariantError unless is_sequence().
  const Seq& seq() const;

  bool operator==(const LElem&) const = default;
  std::strong_ordering operator<=>(const LElem& other) const;

  /// `x(4,11)`, `x(3,w)`, `s[1,5]`, `t[1,5]`.
  std::string to_string() const;

 private:
  LElem(XIndex idx) : kind_(Kind::xpoint), payload_(idx) {}
  LElem(Seq a, Kind k) : kind_(k), payload_(std::move(a)) {}

  Kind kind_;
  std::variant<XIndex, Seq> payload_;
};

std::ostream& operator<<(std::ostream& os, const LElem& u);

LElem parse_elem(std::string_view text, std::size_t offset = 0);

/// The order of L.
bool leq(const LElem& u, const LElem& v);
inline bool less(const LElem& u, const LElem& v) { return u != v && leq(u, v); }

LElem star(const LElem& u);
LElem unstar(const LElem& u);

/// x_{k,m} sits below a exactly when it sits below a*.
bool x_point_star_transfer_holds(Nat k, Nat m, const Seq& a);

/// a ≤ b, a ≤ b*, a* ≤ b* and a ⊑ b all agree.
bool sequence_star_orders_agree(const Seq& a, const Seq& b);

/// Maximal in L: starred infinite sequences and the tops x_{m,ω}.
bool is_maximal(const LElem& u);

/// Compact in L: everything except infinite sequences (plain or starred) and x_{m,ω}.
bool is_compact(const LElem& u);

/// min(↑x_{k,m} ∩ Σ) = {⟨n₁,…,n_k⟩ : n_k ≥ m}.
class MinUpperGenerators {
 public:
  MinUpperGenerators(Nat k, Nat m);

  Nat column() const { return k_; }
  Nat rank() const { return m_; }

  bool contains(const Seq& a) const;

  /// Members with every entry ≤ bound, in lexicographic order.
  std::vector<Seq> members_up_to(Nat bound) const;

 private:
  Nat k_;
  Nat m_;
};

MinUpperGenerators min_upper_generators(Nat k, Nat m);

/// Whether {u, v} has an upper bound in L.
bool has_upper_bound_L(const LElem& u, const LElem& v);

/// Unbounded (or, for error reporting, bounded) decidable subset of ℕ.
class IndexSet {
 public:
  static IndexSet naturals();
  static IndexSet arithmetic(Nat start, Nat step);
  static IndexSet primes();
  static IndexSet squares();
  static IndexSet explicit_set(std::vector<Nat> members);

  bool contains(Nat n) const;
  bool unbounded() const { return !finite_.has_value(); }

  /// Least member ≥ n; nullopt only for bounded sets.
  std::optional<Nat> next_at_least(Nat n) const;

  /// The first `count` members in increasing order (fewer if bounded).
  std::vector<Nat> first(std::size_t count) const;

  const std::string& name() const { return name_; }

 private:
  IndexSet(std::string name, std::function<bool(Nat)> pred, std::optional<std::vector<Nat>> finite)
      : name_(std::move(name)), pred_(std::move(pred)), finite_(std::move(finite)) {}

  std::string name_;
  std::function<bool(Nat)> pred_;
  std::optional<std::vector<Nat>> finite_;
};

struct ChainRefutation {
  Nat n;  // member of the index set with x_{m,n} ≰ a
};
struct IsUpperBound {};

using ChainBoundResult = std::variant<ChainRefutation, IsUpperBound>;

/// Shows that a sequence element a is not an upper bound of {x_{m,n} : n ∈ ns}
/// by producing a member n of ns with x_{m,n} ≰ a.
ChainBoundResult refute_chain_upper_bound(Nat m, const IndexSet& ns, const LElem& a);

/// Supremum of {x_{m,n} : n ∈ ns} for unbounded ns: always x_{m,ω}. Throws
/// InputError for bounded ns, std::logic_error if a sampled sequence bound
/// is not refuted.
LElem chain_sup_X(Nat m, const IndexSet& ns);

/// For a finite directed D whose greatest element has the target kind, whether
/// every member of D lies below some member of that kind.
bool directed_restriction_check(std::span<const LElem> D, LElem::Kind target);

bool is_directed(std::span<const LElem> D);

/// Bounded fragment of L used by the exhaustive suites: x_{m,n} with m ≤ bound
/// and n ∈ {1..bound, ω}; plain and starred finite sequences with entries ≤ bound
/// and length ≤ depth; plain and starred constant sequences [|c] for c ≤ bound.
std::vector<LElem> truncation(Nat bound, Nat depth);

/// All finite sequences with entries in [1, max_entry] and length in [1, max_len].
std::vector<Seq> finite_sequences(Nat max_entry, Nat max_len);

}  // namespace scottmax
