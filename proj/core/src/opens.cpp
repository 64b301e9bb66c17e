#include "scottmax/opens.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace scottmax {

namespace {

void require_positive(Nat v, const char* what) {
  if (v == 0) throw InputError(std::string(what) + " must be >= 1");
}

// First position holding an entry >= k, if any.
std::optional<Nat> first_position_at_least(const Seq& s, Nat k) {
  const auto head = s.head();
  for (std::size_t i = 0; i < head.size(); ++i)
    if (head[i] >= k) return i + 1;
  const auto period = s.period();
  for (std::size_t i = 0; i < period.size(); ++i)
    if (period[i] >= k) return head.size() + i + 1;
  return std::nullopt;
}

}  // namespace

GenFamily GenFamily::single(LElem c) {
  if (!is_compact(c)) throw InputError("generator " + c.to_string() + " is not compact");
  return GenFamily(Kind::single, 1, 1, {std::move(c)});
}

GenFamily GenFamily::x_rank_at_least(Nat k) {
  require_positive(k, "k");
  return GenFamily(Kind::x_rank_at_least, k, 1, {});
}

GenFamily GenFamily::sigma_len_at_least(Nat k) {
  require_positive(k, "k");
  return GenFamily(Kind::sigma_len_at_least, k, 1, {});
}

GenFamily GenFamily::star_len_at_least(Nat k) {
  require_positive(k, "k");
  return GenFamily(Kind::star_len_at_least, k, 1, {});
}

GenFamily GenFamily::x_column(Nat m, Nat min_n) {
  require_positive(m, "m");
  require_positive(min_n, "min_n");
  return GenFamily(Kind::x_column, min_n, m, {});
}

GenFamily GenFamily::explicit_list(std::vector<LElem> cs) {
  if (cs.empty()) throw InputError("explicit_list needs at least one generator");
  for (const LElem& c : cs)
    if (!is_compact(c)) throw InputError("generator " + c.to_string() + " is not compact");
  return GenFamily(Kind::explicit_list, 1, 1, std::move(cs));
}

std::optional<LElem> GenFamily::generator_below(const LElem& u) const {
  switch (kind_) {
    case Kind::single:
    case Kind::explicit_list:
      for (const LElem& c : elems_)
        if (leq(c, u)) return c;
      return std::nullopt;
    case Kind::x_rank_at_least:
      if (u.is_x()) {
        if (u.xindex().n.at_least(k_)) return LElem::x(u.xindex().m, k_);
        return std::nullopt;
      }
      if (auto p = first_position_at_least(u.seq(), k_)) return LElem::x(*p, k_);
      return std::nullopt;
    case Kind::sigma_len_at_least:
      if (u.is_sequence() && u.seq().length().at_least(k_)) return LElem::sigma(u.seq().prefix(k_));
      return std::nullopt;
    case Kind::star_len_at_least:
      if (u.is_star() && u.seq().length().at_least(k_)) return LElem::sigmastar(u.seq().prefix(k_));
      return std::nullopt;
    case Kind::x_column:
      if (u.is_x()) {
        if (u.xindex().m == m_ && u.xindex().n.at_least(k_)) return LElem::x(m_, k_);
        return std::nullopt;
      }
      if (u.seq().length().at_least(m_) && u.seq().at(m_) >= k_) return LElem::x(m_, k_);
      return std::nullopt;
  }
  return std::nullopt;
}

bool GenFamily::contains(const LElem& u) const { return generator_below(u).has_value(); }

std::string GenFamily::to_string() const {
  auto list = [&] {
    std::string s;
    for (std::size_t i = 0; i < elems_.size(); ++i) s += (i ? "," : "") + elems_[i].to_string();
    return s;
  };
  switch (kind_) {
    case Kind::single:
      return "single(" + elems_[0].to_string() + ")";
    case Kind::x_rank_at_least:
      return "x_rank_at_least(" + std::to_string(k_) + ")";
    case Kind::sigma_len_at_least:
      return "sigma_len_at_least(" + std::to_string(k_) + ")";
    case Kind::star_len_at_least:
      return "star_len_at_least(" + std::to_string(k_) + ")";
    case Kind::x_column:
      return "x_column(" + std::to_string(m_) + "," + std::to_string(k_) + ")";
    case Kind::explicit_list:
      return "explicit_list(" + list() + ")";
  }
  return {};
}

OpenDesc::OpenDesc(std::vector<GenFamily> families) : families_(std::move(families)) {
  if (families_.empty()) throw InputError("an open needs at least one generator family");
}

std::optional<LElem> OpenDesc::generator_below(const LElem& u) const {
  for (const GenFamily& f : families_)
    if (auto g = f.generator_below(u)) return g;
  return std::nullopt;
}

bool OpenDesc::contains(const LElem& u) const {
  return std::ranges::any_of(families_, [&](const GenFamily& f) { return f.contains(u); });
}

std::string OpenDesc::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < families_.size(); ++i) s += (i ? " | " : "") + families_[i].to_string();
  return s;
}

bool contains(const OpenDesc& o, const LElem& u) { return o.contains(u); }

namespace {

using GK = GenFamily::Kind;

// Uncovered x_{m,ω}: only x_rank_at_least reaches every column.
std::optional<LElem> uncovered_top(const OpenDesc& o) {
  Nat widest = 0;
  for (const GenFamily& f : o.families()) {
    switch (f.kind()) {
      case GK::x_rank_at_least:
        return std::nullopt;
      case GK::x_column:
        widest = std::max(widest, f.m());
        break;
      case GK::single:
      case GK::explicit_list:
        for (const LElem& c : f.elems())
          if (c.is_x()) widest = std::max(widest, c.xindex().m);
        break;
      default:
        break;
    }
  }
  return LElem::x_top(widest + 1);
}

// Uncovered a* with a infinite. Constraints: every entry below a global cap
// (x_rank_at_least), entry m below a per-position cap (x-point generators in
// column m), and no finite sequence generator may be a prefix of a.
std::optional<LElem> uncovered_starred(const OpenDesc& o) {
  constexpr Nat kUnbounded = std::numeric_limits<Nat>::max();
  Nat global_cap = kUnbounded;
  std::map<Nat, Nat> column_cap;
  std::vector<Seq> prefixes;

  auto cap_column = [&](Nat m, Nat n) {
    auto [it, fresh] = column_cap.emplace(m, n - 1);
    if (!fresh) it->second = std::min(it->second, n - 1);
  };
  auto add_generator = [&](const LElem& c) {
    if (c.is_x())
      cap_column(c.xindex().m, c.xindex().n.value());
    else
      prefixes.push_back(c.seq());
  };

  for (const GenFamily& f : o.families()) {
    switch (f.kind()) {
      case GK::sigma_len_at_least:
      case GK::star_len_at_least:
        return std::nullopt;
      case GK::x_rank_at_least:
        global_cap = std::min(global_cap, f.k() - 1);
        break;
      case GK::x_column:
        cap_column(f.m(), f.k());
        break;
      case GK::single:
      case GK::explicit_list:
        for (const LElem& c : f.elems()) add_generator(c);
        break;
    }
  }

  Nat horizon = 1;
  for (const auto& [m, cap] : column_cap) horizon = std::max(horizon, m);
  for (const Seq& p : prefixes) horizon = std::max<Nat>(horizon, p.head().size());

  auto cap_at = [&](Nat pos) {
    Nat cap = global_cap;
    if (auto it = column_cap.find(pos); it != column_cap.end()) cap = std::min(cap, it->second);
    return cap;
  };
  if (global_cap == 0) return std::nullopt;
  for (Nat pos = 1; pos <= horizon; ++pos)
    if (cap_at(pos) == 0) return std::nullopt;

  // Depth-first search over the first `horizon` entries. Only values that keep
  // some prefix alive branch; any other admissible value escapes all prefixes.
  std::vector<Nat> chosen;
  std::function<bool(Nat, const std::vector<const Seq*>&)> search = [&](Nat pos,
                                                                         const std::vector<const Seq*>& alive) {
    if (alive.empty()) {
      while (chosen.size() < horizon) chosen.push_back(1);
      return true;
    }
    const Nat cap = cap_at(pos);
    std::vector<Nat> values;
    for (const Seq* p : alive) values.push_back(p->at(pos));
    std::ranges::sort(values);
    values.erase(std::unique(values.begin(), values.end()), values.end());

    Nat fresh = 1;
    while (std::ranges::binary_search(values, fresh)) ++fresh;
    if (fresh <= cap) {
      chosen.push_back(fresh);
      if (search(pos + 1, {})) return true;
      chosen.pop_back();
    }
    for (Nat v : values) {
      if (v > cap) continue;
      std::vector<const Seq*> next;
      bool completes = false;
      for (const Seq* p : alive) {
        if (p->at(pos) != v) continue;
        if (p->head().size() == pos) completes = true;
        next.push_back(p);
      }
      if (completes) continue;
      chosen.push_back(v);
      if (search(pos + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };

  std::vector<const Seq*> all;
  for (const Seq& p : prefixes) all.push_back(&p);
  if (!search(1, all)) return std::nullopt;
  return LElem::sigmastar(Seq::periodic(std::move(chosen), {1}));
}

}  // namespace

std::optional<LElem> uncovered_maximal(const OpenDesc& o) {
  auto witness = uncovered_top(o);
  if (!witness) witness = uncovered_starred(o);
  if (witness && o.contains(*witness))
    throw std::logic_error("coverage search produced a covered element " + witness->to_string());
  return witness;
}

bool covers_max(const OpenDesc& o) { return !uncovered_maximal(o).has_value(); }

OpenDesc canonical_family(Nat k) {
  return OpenDesc(
      {GenFamily::x_rank_at_least(k), GenFamily::sigma_len_at_least(k), GenFamily::star_len_at_least(k)});
}

IndexedFamily IndexedFamily::canonical() { return IndexedFamily("canonical", canonical_family); }

IndexedFamily IndexedFamily::from_list(std::string name, std::vector<OpenDesc> opens) {
  if (opens.empty()) throw InputError("family '" + name + "' has no opens");
  return IndexedFamily(std::move(name), [opens = std::move(opens)](Nat k) {
    return opens[std::min<std::size_t>(k, opens.size()) - 1];
  });
}

OpenDesc IndexedFamily::at(Nat k) const {
  if (k == 0) throw InputError("family levels start at 1");
  return level_(k);
}

bool intersection_member_prefix_check(const IndexedFamily& family, const LElem& u, Nat depth) {
  for (Nat k = 1; k <= depth; ++k)
    if (!family.at(k).contains(u)) return false;
  return true;
}

Membership StreamOpen::contains(const LElem& u, std::size_t budget) const {
  for (std::size_t i = 0; i < budget; ++i) {
    auto g = src_(i);
    if (!g) return Membership::non_member;
    if (!is_compact(*g)) throw InputError("stream generator " + g->to_string() + " is not compact");
    if (leq(*g, u)) return Membership::member;
  }
  return Membership::unknown;
}

}  // namespace scottmax
