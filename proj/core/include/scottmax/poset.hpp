#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scottmax/errors.hpp"
#include "scottmax/sequence.hpp"

namespace scottmax {

/// Labeled binary relation stored as a dense matrix. Not necessarily an order.
class Relation {
 public:
  explicit Relation(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool holds(std::size_t a, std::size_t b) const { return m_[a * size() + b]; }
  void set(std::size_t a, std::size_t b, bool v = true) { m_[a * size() + b] = v; }

  /// Throws InputError for an unknown label.
  std::size_t index_of(const std::string& label) const;

  void add_reflexive();
  void close_transitively();

  bool operator==(const Relation&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<bool> m_;
};

struct OrderViolation {
  enum class Kind { reflexivity, antisymmetry, transitivity };
  Kind kind;
  std::vector<std::size_t> elements;  // 1, 2 or 3 indices
  std::string describe(const Relation& r) const;
};

struct OrderReport {
  std::vector<OrderViolation> violations;
  bool ok() const { return violations.empty(); }
};

OrderReport verify_partial_order(const Relation& r);

using ElementSet = std::vector<std::size_t>;  // sorted, unique indices

/// Finite poset. Construction validates the order axioms.
class FinitePoset {
 public:
  /// Throws InputError (with the violation list) unless r is a partial order.
  explicit FinitePoset(Relation r);

  /// Reflexive-transitive closure of the given pairs; throws InputError if the
  /// closure is not antisymmetric.
  static FinitePoset from_generators(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t size() const { return rel_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return rel_.holds(a, b); }
  const std::vector<std::string>& labels() const { return rel_.labels(); }
  const Relation& relation() const { return rel_; }

  ElementSet indices_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(const ElementSet& s) const;

 private:
  Relation rel_;
};

ElementSet normalize(ElementSet s);

ElementSet upset(const FinitePoset& p, const ElementSet& a);
ElementSet downset(const FinitePoset& p, const ElementSet& a);
bool is_upper_set(const FinitePoset& p, const ElementSet& a);
ElementSet maximals(const FinitePoset& p);
ElementSet minimals(const FinitePoset& p);

/// Least upper bound of a subset, if one exists.
std::optional<std::size_t> supremum(const FinitePoset& p, const ElementSet& a);
bool is_directed(const FinitePoset& p, const ElementSet& d);

/// Brute force over every directed subset whose supremum dominates y.
/// Limited to posets with at most 20 elements.
bool way_below_finite(const FinitePoset& p, std::size_t x, std::size_t y);

/// Every directed subset of a finite poset has a greatest element, so Scott
/// open coincides with upward closed.
bool is_scott_open_finite(const FinitePoset& p, const ElementSet& u);

/// S is an intersection of Scott opens exactly when it equals ↑S.
bool is_gdelta_finite(const FinitePoset& p, const ElementSet& s);

/// All partial orders on n labeled points (n ≤ 5), labels "0".."n-1".
std::vector<FinitePoset> labeled_posets(std::size_t n);

/// One representative per isomorphism class on n points (n ≤ 5).
std::vector<FinitePoset> posets_up_to_iso(std::size_t n);

/// Adjacency encoding minimized over relabelings; equal iff isomorphic.
std::uint64_t canonical_code(const FinitePoset& p);

/// Order presented by an element enumerator and a decidable predicate.
template <class T>
struct OraclePoset {
  /// Elements reachable at a given truncation depth; grows with depth.
  std::function<std::vector<T>(std::size_t depth)> universe;
  std::function<bool(const T&, const T&)> leq;
  std::size_t truncation = 8;
};

template <class T>
struct Sup {
  T value;
};

template <class T>
struct NoSup {
  std::string reason;
  std::vector<T> witness;  // e.g. two incomparable minimal upper bounds
};

template <class T>
using SupResult = std::variant<Sup<T>, NoSup<T>>;

namespace detail {

template <class T>
SupResult<T> sup_at_depth(const OraclePoset<T>& p, std::span<const T> a, std::size_t depth, bool& empty) {
  std::vector<T> bounds;
  for (const T& c : p.universe(depth))
    if (std::ranges::all_of(a, [&](const T& x) { return p.leq(x, c); })) bounds.push_back(c);
  empty = bounds.empty();
  if (bounds.empty()) return NoSup<T>{"no upper bound", {}};

  std::vector<T> minimal;
  for (const T& b : bounds)
    if (std::ranges::none_of(bounds, [&](const T& c) { return !(c == b) && p.leq(c, b); })) minimal.push_back(b);
  if (minimal.size() == 1 && std::ranges::all_of(bounds, [&](const T& c) { return p.leq(minimal[0], c); }))
    return Sup<T>{minimal[0]};
  if (minimal.size() >= 2) return NoSup<T>{"incomparable minimal upper bounds", {minimal[0], minimal[1]}};
  return NoSup<T>{"no least upper bound", minimal};
}

template <class T>
bool same_outcome(const SupResult<T>& a, const SupResult<T>& b) {
  if (a.index() != b.index()) return false;
  if (auto* s = std::get_if<Sup<T>>(&a)) return s->value == std::get<Sup<T>>(b).value;
  return std::get<NoSup<T>>(a).witness == std::get<NoSup<T>>(b).witness;
}

}  // namespace detail

/// Supremum of a finite nonempty subset, computed over the truncated universe.
/// The answer is accepted only when doubling the truncation reproduces it;
/// otherwise IndeterminateError.
template <class T>
SupResult<T> sup_in_oracle(const OraclePoset<T>& p, std::span<const T> a) {
  if (a.empty()) throw InputError("supremum of an empty set is not defined here");
  bool empty_small = false, empty_large = false;
  auto small = detail::sup_at_depth(p, a, p.truncation, empty_small);
  auto large = detail::sup_at_depth(p, a, 2 * p.truncation, empty_large);
  if (empty_small || !detail::same_outcome(small, large))
    throw IndeterminateError("truncation " + std::to_string(p.truncation) + " too small to decide the supremum");
  return small;
}

/// Builds the finite poset induced on `elems` by `le`.
template <class T, class Leq, class Label>
FinitePoset induced_poset(std::span<const T> elems, Leq&& le, Label&& label) {
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const T& e : elems) labels.push_back(label(e));
  Relation r(std::move(labels));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (le(elems[i], elems[j])) r.set(i, j);
  return FinitePoset(std::move(r));
}

/// Two chains x_1 < x_2 < … < x_ω and y_1 < … < y_ω with x_m below y_n for
/// finite m ≤ n. The `joined` variant additionally puts x_ω below y_ω.
class TwoChainPoset {
 public:
  enum class Variant { plain, joined };
  enum class Side { x, y };

  struct Elem {
    Side side;
    NatOmega n;
    bool operator==(const Elem&) const = default;
    auto operator<=>(const Elem&) const = default;
    std::string to_string() const;
  };

  /// Subset given by finitely many elements plus, optionally, every finite-index
  /// element of one side.
  struct Subset {
    std::vector<Elem> members;
    std::optional<Side> whole_chain;
  };

  explicit TwoChainPoset(Variant v) : variant_(v) {}

  Variant variant() const { return variant_; }
  bool leq(const Elem& a, const Elem& b) const;

  /// Exact supremum by symbolic reasoning over representative indices.
  SupResult<Elem> sup(const Subset& s) const;

  /// Reflexive-transitive closure of the generating relations on indices
  /// 1..n plus ω; used to cross-check `leq`.
  FinitePoset closure_fixture(Nat n) const;

  OraclePoset<Elem> as_oracle(std::size_t truncation = 8) const;

  static Elem parse(std::string_view text);

 private:
  Variant variant_;
};

}  // namespace scottmax
