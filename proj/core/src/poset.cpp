#include "scottmax/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace scottmax {

Relation::Relation(std::vector<std::string> labels) : labels_(std::move(labels)), m_(labels_.size() * labels_.size()) {
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
}

std::size_t Relation::index_of(const std::string& label) const {
  auto it = std::ranges::find(labels_, label);
  if (it == labels_.end()) throw InputError("unknown element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

void Relation::add_reflexive() {
  for (std::size_t i = 0; i < size(); ++i) set(i, i);
}

void Relation::close_transitively() {
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (holds(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (holds(k, j)) set(i, j);
}

std::string OrderViolation::describe(const Relation& r) const {
  const auto& l = r.labels();
  switch (kind) {
    case Kind::reflexivity:
      return "reflexivity: " + l[elements[0]] + " <= " + l[elements[0]] + " missing";
    case Kind::antisymmetry:
      return "antisymmetry: " + l[elements[0]] + " <= " + l[elements[1]] + " and back, but distinct";
    case Kind::transitivity:
      return "transitivity: " + l[elements[0]] + " <= " + l[elements[1]] + " <= " + l[elements[2]] + " but " +
             l[elements[0]] + " <= " + l[elements[2]] + " missing";
  }
  return {};
}

OrderReport verify_partial_order(const Relation& r) {
  OrderReport rep;
  using K = OrderViolation::Kind;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!r.holds(i, i)) rep.violations.push_back({K::reflexivity, {i}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r.holds(i, j) && r.holds(j, i)) rep.violations.push_back({K::antisymmetry, {i, j}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.holds(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (r.holds(j, k) && !r.holds(i, k)) rep.violations.push_back({K::transitivity, {i, j, k}});
    }
  return rep;
}

FinitePoset::FinitePoset(Relation r) : rel_(std::move(r)) {
  auto rep = verify_partial_order(rel_);
  if (!rep.ok()) {
    std::string msg = "not a partial order:";
    for (std::size_t i = 0; i < rep.violations.size() && i < 5; ++i) msg += " " + rep.violations[i].describe(rel_) + ";";
    throw InputError(msg);
  }
}

FinitePoset FinitePoset::from_generators(std::vector<std::string> labels,
                                         const std::vector<std::pair<std::string, std::string>>& pairs) {
  Relation r(std::move(labels));
  for (const auto& [a, b] : pairs) r.set(r.index_of(a), r.index_of(b));
  r.add_reflexive();
  r.close_transitively();
  return FinitePoset(std::move(r));
}

ElementSet FinitePoset::indices_of(std::span<const std::string> labels) const {
  ElementSet out;
  for (const auto& l : labels) out.push_back(rel_.index_of(l));
  return normalize(std::move(out));
}

std::vector<std::string> FinitePoset::labels_of(const ElementSet& s) const {
  std::vector<std::string> out;
  for (auto i : s) out.push_back(labels()[i]);
  return out;
}

ElementSet normalize(ElementSet s) {
  std::ranges::sort(s);
  auto [first, last] = std::ranges::unique(s);
  s.erase(first, last);
  return s;
}

ElementSet upset(const FinitePoset& p, const ElementSet& a) {
  ElementSet out;
  for (std::size_t y = 0; y < p.size(); ++y)
    if (std::ranges::any_of(a, [&](std::size_t x) { return p.leq(x, y); })) out.push_back(y);
  return out;
}

ElementSet downset(const FinitePoset& p, const ElementSet& a) {
  ElementSet out;
  for (std::size_t y = 0; y < p.size(); ++y)
    if (std::ranges::any_of(a, [&](std::size_t x) { return p.leq(y, x); })) out.push_back(y);
  return out;
}

bool is_upper_set(const FinitePoset& p, const ElementSet& a) { return upset(p, a) == normalize(a); }

ElementSet maximals(const FinitePoset& p) {
  ElementSet out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (upset(p, {x}) == ElementSet{x}) out.push_back(x);
  return out;
}

ElementSet minimals(const FinitePoset& p) {
  ElementSet out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (downset(p, {x}) == ElementSet{x}) out.push_back(x);
  return out;
}

std::optional<std::size_t> supremum(const FinitePoset& p, const ElementSet& a) {
  ElementSet bounds;
  for (std::size_t c = 0; c < p.size(); ++c)
    if (std::ranges::all_of(a, [&](std::size_t x) { return p.leq(x, c); })) bounds.push_back(c);
  for (std::size_t b : bounds)
    if (std::ranges::all_of(bounds, [&](std::size_t c) { return p.leq(b, c); })) return b;
  return std::nullopt;
}

bool is_directed(const FinitePoset& p, const ElementSet& d) {
  if (d.empty()) return false;
  for (std::size_t a : d)
    for (std::size_t b : d)
      if (std::ranges::none_of(d, [&](std::size_t c) { return p.leq(a, c) && p.leq(b, c); })) return false;
  return true;
}

bool way_below_finite(const FinitePoset& p, std::size_t x, std::size_t y) {
  const std::size_t n = p.size();
  if (n > 20) throw InputError("way-below brute force is limited to 20 elements");
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    ElementSet d;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) d.push_back(i);
    if (!is_directed(p, d)) continue;
    auto s = supremum(p, d);
    if (!s || !p.leq(y, *s)) continue;
    if (std::ranges::none_of(d, [&](std::size_t e) { return p.leq(x, e); })) return false;
  }
  return true;
}

bool is_scott_open_finite(const FinitePoset& p, const ElementSet& u) { return is_upper_set(p, u); }

bool is_gdelta_finite(const FinitePoset& p, const ElementSet& s) { return upset(p, s) == normalize(s); }

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

std::vector<FinitePoset> labeled_posets(std::size_t n) {
  if (n > 5) throw InputError("labeled poset enumeration is limited to 5 points");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::vector<FinitePoset> out;
  Relation r(numeric_labels(n));
  for (std::uint32_t bits = 0; bits < (1u << slots.size()); ++bits) {
    for (std::size_t s = 0; s < slots.size(); ++s) r.set(slots[s].first, slots[s].second, bits & (1u << s));
    r.add_reflexive();
    if (verify_partial_order(r).ok()) out.emplace_back(r);
  }
  return out;
}

std::uint64_t canonical_code(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > 7) throw InputError("canonical codes are limited to 7 points");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code = (code << 1) | (p.leq(perm[i], perm[j]) ? 1 : 0);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (static_cast<std::uint64_t>(n) << 56) | best;
}

std::vector<FinitePoset> posets_up_to_iso(std::size_t n) {
  std::set<std::uint64_t> seen;
  std::vector<FinitePoset> out;
  for (auto& p : labeled_posets(n))
    if (seen.insert(canonical_code(p)).second) out.push_back(std::move(p));
  return out;
}

// TwoChainPoset

std::string TwoChainPoset::Elem::to_string() const { return (side == Side::x ? "x" : "y") + n.to_string(); }

bool TwoChainPoset::leq(const Elem& a, const Elem& b) const {
  if (a.side == b.side) return a.n <= b.n;
  if (a.side == Side::y) return false;
  if (a.n.is_finite()) return b.n.is_omega() || a.n <= b.n;
  return variant_ == Variant::joined && b.n.is_omega();
}

SupResult<TwoChainPoset::Elem> TwoChainPoset::sup(const Subset& s) const {
  if (s.members.empty() && !s.whole_chain) throw InputError("supremum of an empty set is not defined here");
  Nat top = 0;
  for (const Elem& e : s.members)
    if (e.n.is_finite()) top = std::max(top, e.n.value());

  // Indices above `top` behave alike against the subset, so 1..top+1 and ω
  // represent every candidate bound; any larger finite index sits above the
  // representative on its side and cannot be minimal.
  std::vector<Elem> reps;
  for (Side side : {Side::x, Side::y}) {
    for (Nat i = 1; i <= top + 1; ++i) reps.push_back({side, NatOmega(i)});
    reps.push_back({side, NatOmega::omega()});
  }

  auto bounds_chain = [&](const Elem& c) {
    if (!s.whole_chain) return true;
    // A finite candidate of index k is beaten by chain member k+1.
    if (c.n.is_finite()) return false;
    return leq(Elem{*s.whole_chain, NatOmega(top + 1)}, c);
  };

  std::vector<Elem> bounds;
  for (const Elem& c : reps)
    if (bounds_chain(c) && std::ranges::all_of(s.members, [&](const Elem& m) { return leq(m, c); }))
      bounds.push_back(c);
  if (bounds.empty()) return NoSup<Elem>{"no upper bound", {}};

  for (const Elem& b : bounds)
    if (std::ranges::all_of(bounds, [&](const Elem& c) { return leq(b, c); })) return Sup<Elem>{b};

  std::vector<Elem> minimal;
  for (const Elem& b : bounds)
    if (std::ranges::none_of(bounds, [&](const Elem& c) { return c != b && leq(c, b); })) minimal.push_back(b);
  return NoSup<Elem>{"incomparable minimal upper bounds", minimal};
}

FinitePoset TwoChainPoset::closure_fixture(Nat n) const {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> gens;
  for (const char* side : {"x", "y"}) {
    for (Nat i = 1; i <= n; ++i) labels.push_back(side + std::to_string(i));
    labels.push_back(std::string(side) + "w");
    for (Nat i = 1; i < n; ++i) gens.emplace_back(side + std::to_string(i), side + std::to_string(i + 1));
    gens.emplace_back(side + std::to_string(n), std::string(side) + "w");
  }
  for (Nat m = 1; m <= n; ++m)
    for (Nat k = m; k <= n; ++k) gens.emplace_back("x" + std::to_string(m), "y" + std::to_string(k));
  if (variant_ == Variant::joined) gens.emplace_back("xw", "yw");
  return FinitePoset::from_generators(std::move(labels), gens);
}

OraclePoset<TwoChainPoset::Elem> TwoChainPoset::as_oracle(std::size_t truncation) const {
  OraclePoset<Elem> p;
  p.universe = [](std::size_t depth) {
    std::vector<Elem> out;
    for (Side side : {Side::x, Side::y}) {
      for (Nat i = 1; i <= depth; ++i) out.push_back({side, NatOmega(i)});
      out.push_back({side, NatOmega::omega()});
    }
    return out;
  };
  p.leq = [self = *this](const Elem& a, const Elem& b) { return self.leq(a, b); };
  p.truncation = truncation;
  return p;
}

TwoChainPoset::Elem TwoChainPoset::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'x' && text[0] != 'y'))
    throw ParseError("expected x<n>, y<n>, xw or yw", 0);
  Side side = text[0] == 'x' ? Side::x : Side::y;
  auto rest = text.substr(1);
  if (rest == "w") return {side, NatOmega::omega()};
  Nat v = 0;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(rest[i]))) throw ParseError("expected digits or 'w'", i + 1);
    v = v * 10 + static_cast<Nat>(rest[i] - '0');
  }
  if (v == 0) throw ParseError("indices start at 1", 1);
  return {side, NatOmega(v)};
}

}  // namespace scottmax
