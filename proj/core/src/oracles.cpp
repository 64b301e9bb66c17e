#include "scottmax/oracles.hpp"

#include <algorithm>

namespace scottmax::oracle {

std::vector<LElem> upper_candidates(const LElem& u, Nat bound, Nat depth) {
  std::vector<LElem> out = truncation(bound, depth);
  out.push_back(u);
  if (u.is_x()) {
    const XIndex& i = u.xindex();
    if (i.n.is_finite()) out.push_back(LElem::x(i.m, i.n.value() + 1));
    out.push_back(LElem::x_top(i.m));
    return out;
  }
  const Seq& s = u.seq();
  out.push_back(LElem::sigmastar(s));
  if (s.is_finite()) {
    for (Nat c = 1; c <= bound + 1; ++c) {
      out.push_back(LElem::sigma(s.extended(c)));
      out.push_back(LElem::sigmastar(s.extended(c)));
    }
    out.push_back(LElem::sigmastar(Seq::periodic(std::vector<Nat>(s.head().begin(), s.head().end()), {1})));
  }
  return out;
}

bool upper_bound_by_search(const LElem& u, const LElem& v, Nat bound, Nat depth) {
  auto pool = upper_candidates(u, bound, depth);
  auto more = upper_candidates(v, bound, depth);
  pool.insert(pool.end(), more.begin(), more.end());
  return std::ranges::any_of(pool, [&](const LElem& w) { return leq(u, w) && leq(v, w); });
}

bool maximal_by_search(const LElem& u, Nat bound, Nat depth) {
  return std::ranges::none_of(upper_candidates(u, bound, depth),
                              [&](const LElem& v) { return v != u && leq(u, v); });
}

namespace {

// Everything of bounded size that could lie below u.
std::vector<LElem> predecessor_pool(const LElem& u, Nat size) {
  std::vector<LElem> pool;
  for (Nat k = 1; k <= size; ++k)
    for (Nat j = 1; j <= size; ++j) pool.push_back(LElem::x(k, j));
  if (u.is_x()) {
    for (Nat j = 1; j <= size; ++j) pool.push_back(LElem::x(u.xindex().m, j));
    return pool;
  }
  const Seq& s = u.seq();
  for (Nat len = 1; s.length().at_least(len) && len <= size; ++len) {
    pool.push_back(LElem::sigma(s.prefix(len)));
    pool.push_back(LElem::sigmastar(s.prefix(len)));
  }
  for (Nat k = 1; k <= size && s.length().at_least(k); ++k)
    for (Nat j = 1; j <= s.at(k) && j <= 4 * size; ++j) pool.push_back(LElem::x(k, j));
  return pool;
}

std::size_t strict_downset_size(const LElem& u, Nat size) {
  auto pool = predecessor_pool(u, size);
  std::ranges::sort(pool);
  auto [first, last] = std::ranges::unique(pool);
  pool.erase(first, last);
  return static_cast<std::size_t>(std::ranges::count_if(pool, [&](const LElem& v) { return v != u && leq(v, u); }));
}

// The natural increasing chain aimed at u, when u has infinitely many predecessors.
std::vector<LElem> canonical_chain(const LElem& u, Nat length) {
  std::vector<LElem> chain;
  if (u.is_x()) {
    for (Nat n = 1; n <= length; ++n) chain.push_back(LElem::x(u.xindex().m, n));
    return chain;
  }
  for (Nat n = 1; n <= length && u.seq().length().at_least(n); ++n) {
    Seq p = u.seq().prefix(n);
    chain.push_back(u.is_star() ? LElem::sigmastar(p) : LElem::sigma(p));
  }
  return chain;
}

}  // namespace

bool non_compact_by_chain(const LElem& u) {
  constexpr Nat kSmall = 6, kLarge = 12;
  if (strict_downset_size(u, kSmall) == strict_downset_size(u, kLarge)) return false;

  const auto chain = canonical_chain(u, kLarge);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!less(chain[i], chain[i + 1])) return false;
  if (!std::ranges::all_of(chain, [&](const LElem& c) { return less(c, u); })) return false;

  // u must be least among the candidate bounds of the chain. A candidate
  // bounding the first members is also tested against a member far beyond
  // anything it can dominate.
  auto far_member = [&](const LElem& w) {
    Nat reach = w.is_x() ? (w.xindex().n.is_finite() ? w.xindex().n.value() : 1) : w.seq().max_entry();
    Nat idx = std::max<Nat>(kLarge, reach) + 1;
    if (u.is_x()) return LElem::x(u.xindex().m, idx);
    Seq p = u.seq().prefix(idx);
    return u.is_star() ? LElem::sigmastar(p) : LElem::sigma(p);
  };
  // The chain must keep climbing below u past any fixed size.
  if (!less(far_member(u), u)) return false;
  for (const LElem& w : upper_candidates(u, 3, 3)) {
    const bool bounds = std::ranges::all_of(chain, [&](const LElem& c) { return leq(c, w); }) && leq(far_member(w), w);
    if (bounds && !leq(u, w)) return false;
  }
  return true;
}

std::vector<LElem> enumerate_generators(const GenFamily& f, Nat bound) {
  using K = GenFamily::Kind;
  std::vector<LElem> out;
  switch (f.kind()) {
    case K::single:
    case K::explicit_list:
      return f.elems();
    case K::x_rank_at_least:
      for (Nat m = 1; m <= bound; ++m)
        for (Nat j = f.k(); j <= bound; ++j) out.push_back(LElem::x(m, j));
      return out;
    case K::x_column:
      for (Nat j = f.k(); j <= bound; ++j) out.push_back(LElem::x(f.m(), j));
      return out;
    case K::sigma_len_at_least:
    case K::star_len_at_least:
      for (const Seq& s : finite_sequences(bound, f.k())) {
        if (s.head().size() != f.k()) continue;
        out.push_back(f.kind() == K::sigma_len_at_least ? LElem::sigma(s) : LElem::sigmastar(s));
      }
      return out;
  }
  return out;
}

bool contains_by_enumeration(const OpenDesc& o, const LElem& u, Nat bound) {
  for (const GenFamily& f : o.families())
    for (const LElem& c : enumerate_generators(f, bound))
      if (leq(c, u)) return true;
  return false;
}

namespace {

std::vector<ElementSet> all_subsets(std::size_t n) {
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

bool member(const ElementSet& s, std::size_t x) { return std::ranges::binary_search(s, x); }

}  // namespace

bool scott_open_by_definition(const FinitePoset& p, const ElementSet& u) {
  const ElementSet us = normalize(u);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (member(us, x) && p.leq(x, y) && !member(us, y)) return false;

  for (const ElementSet& d : all_subsets(p.size())) {
    if (!is_directed(p, d)) continue;
    auto s = supremum(p, d);
    if (s && member(us, *s) && std::ranges::none_of(d, [&](std::size_t e) { return member(us, e); })) return false;
  }
  return true;
}

bool gdelta_by_intersection(const FinitePoset& p, const ElementSet& s) {
  const ElementSet target = normalize(s);
  ElementSet meet(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) meet[i] = i;
  for (const ElementSet& u : all_subsets(p.size())) {
    if (!std::ranges::includes(u, target) || !scott_open_by_definition(p, u)) continue;
    ElementSet next;
    std::ranges::set_intersection(meet, u, std::back_inserter(next));
    meet = std::move(next);
  }
  return meet == target;
}

}  // namespace scottmax::oracle
