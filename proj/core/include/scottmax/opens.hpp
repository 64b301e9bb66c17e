#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scottmax/domain.hpp"

namespace scottmax {

/// A parametric family of compact generators c; it denotes the union of the ↑c.
class GenFamily {
 public:
  enum class Kind { single, x_rank_at_least, sigma_len_at_least, star_len_at_least, x_column, explicit_list };

  static GenFamily single(LElem c);
  /// x_{m,j} for every column m and every j ≥ k.
  static GenFamily x_rank_at_least(Nat k);
  /// Plain sequences of length exactly k.
  static GenFamily sigma_len_at_least(Nat k);
  /// Starred sequences of length exactly k.
  static GenFamily star_len_at_least(Nat k);
  /// x_{m,j} for j ≥ min_n.
  static GenFamily x_column(Nat m, Nat min_n);
  static GenFamily explicit_list(std::vector<LElem> cs);

  Kind kind() const { return kind_; }
  Nat k() const { return k_; }
  Nat m() const { return m_; }
  const std::vector<LElem>& elems() const { return elems_; }

  /// Some generator of the family lies below u.
  bool contains(const LElem& u) const;

  /// A generator below u, if any. Deterministic.
  std::optional<LElem> generator_below(const LElem& u) const;

  std::string to_string() const;

  bool operator==(const GenFamily&) const = default;

 private:
  GenFamily(Kind kind, Nat k, Nat m, std::vector<LElem> elems)
      : kind_(kind), k_(k), m_(m), elems_(std::move(elems)) {}

  Kind kind_;
  Nat k_ = 1;
  Nat m_ = 1;
  std::vector<LElem> elems_;
};

/// Scott open set of L given as a finite union of generator families.
class OpenDesc {
 public:
  explicit OpenDesc(std::vector<GenFamily> families);

  const std::vector<GenFamily>& families() const { return families_; }

  bool contains(const LElem& u) const;
  std::optional<LElem> generator_below(const LElem& u) const;

  std::string to_string() const;

  bool operator==(const OpenDesc&) const = default;

 private:
  std::vector<GenFamily> families_;
};

bool contains(const OpenDesc& o, const LElem& u);

/// Whether every maximal element of L (each x_{m,ω} and each starred infinite
/// sequence) lies in o.
bool covers_max(const OpenDesc& o);

/// A maximal element outside o, or nullopt when covers_max(o).
std::optional<LElem> uncovered_maximal(const OpenDesc& o);

/// U_k = x_rank_at_least(k) ∪ sigma_len_at_least(k) ∪ star_len_at_least(k).
OpenDesc canonical_family(Nat k);

/// Countable family of opens U_1, U_2, … produced lazily by level.
class IndexedFamily {
 public:
  IndexedFamily(std::string name, std::function<OpenDesc(Nat)> level)
      : name_(std::move(name)), level_(std::move(level)) {}

  static IndexedFamily canonical();
  /// Uses opens[k-1]; levels past the end repeat the last open.
  static IndexedFamily from_list(std::string name, std::vector<OpenDesc> opens);

  const std::string& name() const { return name_; }
  OpenDesc at(Nat k) const;

 private:
  std::string name_;
  std::function<OpenDesc(Nat)> level_;
};

/// u ∈ U_k for every k ≤ depth (vacuously true for depth 0).
bool intersection_member_prefix_check(const IndexedFamily& family, const LElem& u, Nat depth);

enum class Membership { member, non_member, unknown };

/// Open generated by an arbitrary stream of compact elements. Membership is
/// only semi-decidable, so queries run under a step budget. A stream cursor is
/// confined to the calling thread.
class StreamOpen {
 public:
  /// Returns the i-th generator (0-based) or nullopt when the stream is exhausted.
  using Source = std::function<std::optional<LElem>(std::size_t)>;

  explicit StreamOpen(Source src) : src_(std::move(src)) {}

  /// Examines at most `budget` generators. `non_member` only when the stream
  /// ended within budget without a generator below u.
  Membership contains(const LElem& u, std::size_t budget) const;

 private:
  Source src_;
};

}  // namespace scottmax
