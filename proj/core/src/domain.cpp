#include "scottmax/domain.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "cursor.hpp"

namespace scottmax {

LElem LElem::x(Nat m, Nat n) {
  if (m == 0 || n == 0) throw InputError("x-point indices must be positive");
  return LElem(XIndex{m, NatOmega(n)});
}

LElem LElem::x_top(Nat m) {
  if (m == 0) throw InputError("x-point indices must be positive");
  return LElem(XIndex{m, NatOmega::omega()});
}

LElem LElem::x(XIndex idx) {
  if (idx.m == 0 || (idx.n.is_finite() && idx.n.value() == 0)) throw InputError("x-point indices must be positive");
  return LElem(idx);
}

const XIndex& LElem::xindex() const {
  if (!is_x()) throw VariantError("not an x-point: " + to_string());
  return std::get<XIndex>(payload_);
}

const Seq& LElem::seq() const {
  if (!is_sequence()) throw VariantError("not a sequence element: " + to_string());
  return std::get<Seq>(payload_);
}

std::strong_ordering LElem::operator<=>(const LElem& other) const {
  if (kind_ != other.kind_) return kind_ <=> other.kind_;
  if (is_x()) return xindex() <=> other.xindex();
  return seq() <=> other.seq();
}

std::string LElem::to_string() const {
  switch (kind_) {
    case Kind::xpoint:
      return "x(" + std::to_string(xindex().m) + "," + xindex().n.to_string() + ")";
    case Kind::sigma:
      return "s" + seq().to_string();
    case Kind::sigmastar:
      return "t" + seq().to_string();
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const LElem& u) { return os << u.to_string(); }

LElem parse_elem(std::string_view text, std::size_t offset) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  if (lead == text.size()) throw ParseError("empty element", offset + lead);

  const char tag = text[lead];
  if (tag == 's' || tag == 't') {
    Seq a = parse_seq(text.substr(lead + 1), offset + lead + 1);
    return tag == 's' ? LElem::sigma(std::move(a)) : LElem::sigmastar(std::move(a));
  }
  if (tag != 'x') throw ParseError("expected 'x(', 's[' or 't['", offset + lead);

  detail::Cursor cur(text.substr(lead + 1), offset + lead + 1);
  cur.expect('(');
  Nat m = cur.positive();
  cur.expect(',');
  LElem result = [&] {
    if (cur.accept('w')) return LElem::x_top(m);
    return LElem::x(m, cur.positive());
  }();
  cur.expect(')');
  cur.finish();
  return result;
}

namespace {

// Condition for x_{k,m} (m finite) below a sequence element.
bool x_below_sequence(const XIndex& x, const Seq& v) {
  if (x.n.is_omega()) return false;
  return v.length().at_least(x.m) && v.at(x.m) >= x.n.value();
}

}  // namespace

bool leq(const LElem& u, const LElem& v) {
  using K = LElem::Kind;
  switch (u.kind()) {
    case K::xpoint:
      if (v.is_x()) return u.xindex().m == v.xindex().m && u.xindex().n <= v.xindex().n;
      return x_below_sequence(u.xindex(), v.seq());
    case K::sigma:
      return v.is_sequence() && substring_leq(u.seq(), v.seq());
    case K::sigmastar:
      return v.is_star() && substring_leq(u.seq(), v.seq());
  }
  return false;
}

LElem star(const LElem& u) {
  if (!u.is_sigma()) throw VariantError("star expects a plain sequence, got " + u.to_string());
  return LElem::sigmastar(u.seq());
}

LElem unstar(const LElem& u) {
  if (!u.is_star()) throw VariantError("unstar expects a starred sequence, got " + u.to_string());
  return LElem::sigma(u.seq());
}

bool x_point_star_transfer_holds(Nat k, Nat m, const Seq& a) {
  const LElem x = LElem::x(k, m);
  return leq(x, LElem::sigma(a)) == leq(x, LElem::sigmastar(a));
}

bool sequence_star_orders_agree(const Seq& a, const Seq& b) {
  const LElem sa = LElem::sigma(a), sb = LElem::sigma(b);
  const LElem ta = LElem::sigmastar(a), tb = LElem::sigmastar(b);
  const bool base = substring_leq(a, b);
  return leq(sa, sb) == base && leq(sa, tb) == base && leq(ta, tb) == base;
}

bool is_maximal(const LElem& u) {
  if (u.is_x()) return u.xindex().n.is_omega();
  return u.is_star() && u.seq().is_infinite();
}

bool is_compact(const LElem& u) {
  if (u.is_x()) return u.xindex().n.is_finite();
  return u.seq().is_finite();
}

MinUpperGenerators::MinUpperGenerators(Nat k, Nat m) : k_(k), m_(m) {
  if (k == 0 || m == 0) throw InputError("generator parameters must be positive");
}

bool MinUpperGenerators::contains(const Seq& a) const {
  return a.is_finite() && a.head().size() == k_ && a.at(k_) >= m_;
}

std::vector<Seq> MinUpperGenerators::members_up_to(Nat bound) const {
  std::vector<Seq> out;
  if (bound < m_) return out;
  std::vector<Nat> cur(k_, 1);
  cur.back() = m_;
  while (true) {
    out.push_back(Seq::finite(cur));
    std::size_t i = k_;
    while (i > 0) {
      --i;
      if (cur[i] < bound) {
        ++cur[i];
        break;
      }
      cur[i] = (i + 1 == k_) ? m_ : 1;
      if (i == 0) return out;
    }
  }
}

MinUpperGenerators min_upper_generators(Nat k, Nat m) { return MinUpperGenerators(k, m); }

bool has_upper_bound_L(const LElem& u, const LElem& v) {
  if (u.is_sequence() && v.is_sequence()) {
    // Starring the longer payload bounds both whenever the payloads are comparable.
    return comparable(u.seq(), v.seq());
  }
  if (u.is_x() && v.is_x()) {
    const XIndex &a = u.xindex(), &b = v.xindex();
    if (a.m == b.m) return true;
    // Different columns: a long enough sequence carrying both ranks works,
    // but x_{m,ω} sits below nothing else.
    return a.n.is_finite() && b.n.is_finite();
  }
  const XIndex& x = u.is_x() ? u.xindex() : v.xindex();
  const Seq& s = u.is_x() ? v.seq() : u.seq();
  if (x.n.is_omega()) return false;
  // Extensions keep existing entries, so only a short sequence can still be raised.
  if (!s.length().at_least(x.m)) return true;
  return s.at(x.m) >= x.n.value();
}

IndexSet IndexSet::naturals() {
  return IndexSet("naturals", [](Nat) { return true; }, std::nullopt);
}

IndexSet IndexSet::arithmetic(Nat start, Nat step) {
  if (start == 0 || step == 0) throw InputError("arithmetic index set needs positive start and step");
  return IndexSet(
      "arithmetic(" + std::to_string(start) + "," + std::to_string(step) + ")",
      [start, step](Nat n) { return n >= start && (n - start) % step == 0; }, std::nullopt);
}

IndexSet IndexSet::primes() {
  return IndexSet(
      "primes",
      [](Nat n) {
        if (n < 2) return false;
        for (Nat d = 2; d * d <= n; ++d)
          if (n % d == 0) return false;
        return true;
      },
      std::nullopt);
}

IndexSet IndexSet::squares() {
  return IndexSet(
      "squares",
      [](Nat n) {
        Nat r = 1;
        while (r * r < n) ++r;
        return r * r == n;
      },
      std::nullopt);
}

IndexSet IndexSet::explicit_set(std::vector<Nat> members) {
  if (std::ranges::any_of(members, [](Nat v) { return v == 0; }))
    throw InputError("index sets contain positive naturals");
  std::ranges::sort(members);
  auto [first, last] = std::ranges::unique(members);
  members.erase(first, last);
  auto copy = members;
  return IndexSet(
      "explicit", [copy](Nat n) { return std::ranges::binary_search(copy, n); }, std::move(members));
}

bool IndexSet::contains(Nat n) const { return n >= 1 && pred_(n); }

std::optional<Nat> IndexSet::next_at_least(Nat n) const {
  if (n == 0) n = 1;
  if (finite_) {
    auto it = std::ranges::lower_bound(*finite_, n);
    if (it == finite_->end()) return std::nullopt;
    return *it;
  }
  // Unbounded sets are infinite, so the scan terminates.
  while (!pred_(n)) ++n;
  return n;
}

std::vector<Nat> IndexSet::first(std::size_t count) const {
  std::vector<Nat> out;
  Nat n = 1;
  while (out.size() < count) {
    auto next = next_at_least(n);
    if (!next) break;
    out.push_back(*next);
    n = *next + 1;
  }
  return out;
}

ChainBoundResult refute_chain_upper_bound(Nat m, const IndexSet& ns, const LElem& a) {
  if (m == 0) throw InputError("column index must be positive");
  if (!ns.unbounded()) throw InputError("index set '" + ns.name() + "' is bounded");
  if (!a.is_sequence()) throw InputError("candidate bound must be a sequence element, got " + a.to_string());

  const Seq& s = a.seq();
  const Nat floor = s.length().at_least(m) ? s.at(m) + 1 : 1;
  const Nat n = *ns.next_at_least(floor);
  if (leq(LElem::x(m, n), a)) return IsUpperBound{};
  return ChainRefutation{n};
}

LElem chain_sup_X(Nat m, const IndexSet& ns) {
  if (!ns.unbounded()) throw InputError("index set '" + ns.name() + "' is bounded");
  const std::vector<Seq> samples = {
      Seq::finite({m}),
      Seq::finite(std::vector<Nat>(m, 1)),
      Seq::finite(std::vector<Nat>(m + 1, 1000)),
      Seq::periodic({}, {m + 7}),
      Seq::periodic(std::vector<Nat>(m, 3), {2, 9}),
  };
  for (const Seq& s : samples) {
    for (const LElem& cand : {LElem::sigma(s), LElem::sigmastar(s)}) {
      if (std::holds_alternative<IsUpperBound>(refute_chain_upper_bound(m, ns, cand)))
        throw std::logic_error("chain over column " + std::to_string(m) + " bounded by " + cand.to_string());
    }
  }
  return LElem::x_top(m);
}

bool is_directed(std::span<const LElem> D) {
  if (D.empty()) return false;
  for (const LElem& a : D)
    for (const LElem& b : D)
      if (std::ranges::none_of(D, [&](const LElem& c) { return leq(a, c) && leq(b, c); })) return false;
  return true;
}

bool directed_restriction_check(std::span<const LElem> D, LElem::Kind target) {
  if (!is_directed(D)) throw InputError("set is not directed");
  auto top = std::ranges::find_if(D, [&](const LElem& c) {
    return std::ranges::all_of(D, [&](const LElem& d) { return leq(d, c); });
  });
  // A finite directed set always has a greatest element; its kind is the kind of the sup.
  if (top == D.end() || top->kind() != target)
    throw InputError("no element of the target kind bounds the set");

  return std::ranges::all_of(D, [&](const LElem& d) {
    return std::ranges::any_of(D, [&](const LElem& e) { return e.kind() == target && leq(d, e); });
  });
}

std::vector<Seq> finite_sequences(Nat max_entry, Nat max_len) {
  std::vector<Seq> out;
  std::vector<std::vector<Nat>> layer = {{}};
  for (Nat len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Nat>> next;
    for (const auto& w : layer) {
      for (Nat e = 1; e <= max_entry; ++e) {
        auto ext = w;
        ext.push_back(e);
        out.push_back(Seq::finite(ext));
        next.push_back(std::move(ext));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<LElem> truncation(Nat bound, Nat depth) {
  std::vector<LElem> out;
  for (Nat m = 1; m <= bound; ++m) {
    for (Nat n = 1; n <= bound; ++n) out.push_back(LElem::x(m, n));
    out.push_back(LElem::x_top(m));
  }
  for (const Seq& s : finite_sequences(bound, depth)) {
    out.push_back(LElem::sigma(s));
    out.push_back(LElem::sigmastar(s));
  }
  for (Nat c = 1; c <= bound; ++c) {
    out.push_back(LElem::sigma(Seq::periodic({}, {c})));
    out.push_back(LElem::sigmastar(Seq::periodic({}, {c})));
  }
  return out;
}

}  // namespace scottmax
