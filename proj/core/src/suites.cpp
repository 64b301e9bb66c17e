#include "scottmax/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "scottmax/domain.hpp"
#include "scottmax/oracles.hpp"
#include "scottmax/poset.hpp"

namespace scottmax {

bool SuiteReport::ok() const {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.ok(); });
}

namespace {

class Check {
 public:
  explicit Check(std::string label) : start_(std::chrono::steady_clock::now()) { res_.label = std::move(label); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++res_.cases;
    if (ok) return;
    if (res_.violations++ == 0) res_.first_counterexample = describe();
  }

  CheckResult done() {
    res_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(res_);
  }

 private:
  CheckResult res_;
  std::chrono::steady_clock::time_point start_;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Nat uniform(Nat lo, Nat hi) { return std::uniform_int_distribution<Nat>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  std::vector<Nat> word(Nat max_entry, Nat min_len, Nat max_len) {
    std::vector<Nat> w(uniform(min_len, max_len));
    for (auto& v : w) v = uniform(1, max_entry);
    return w;
  }

  Seq finite(Nat max_entry, Nat max_len) { return Seq::finite(word(max_entry, 1, max_len)); }
  Seq periodic(Nat max_entry, Nat max_len) {
    return Seq::periodic(word(max_entry, 0, max_len), word(max_entry, 1, std::max<Nat>(1, max_len / 2)));
  }
  Seq any(Nat max_entry, Nat max_len) { return uniform(0, 3) == 0 ? periodic(max_entry, max_len) : finite(max_entry, max_len); }

  // A sequence above s: s itself when infinite, otherwise an extension.
  Seq above(const Seq& s, Nat max_entry, Nat max_len) {
    if (s.is_infinite()) return s;
    std::vector<Nat> head(s.head().begin(), s.head().end());
    auto tail = word(max_entry, 0, max_len);
    if (coin()) {
      head.insert(head.end(), tail.begin(), tail.end());
      return Seq::finite(std::move(head));
    }
    return Seq::periodic(std::move(head), word(max_entry, 1, 3));
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Seq> periodic_samples(Nat max_entry) {
  std::vector<Seq> out;
  for (Nat c = 1; c <= max_entry; ++c) out.push_back(Seq::periodic({}, {c}));
  for (Nat a = 1; a <= max_entry; ++a)
    for (Nat b = 1; b <= max_entry; ++b) {
      out.push_back(Seq::periodic({a}, {b}));
      if (a != b) out.push_back(Seq::periodic({}, {a, b}));
    }
  return out;
}

std::string pair_text(const std::string& a, const std::string& b) { return a + " , " + b; }

}  // namespace

SuiteReport run_sequence_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.scope = "seq";
  Sampler rng(opt.seed);

  std::vector<Seq> pool = finite_sequences(opt.bound, opt.depth);
  for (const Seq& s : periodic_samples(opt.bound)) pool.push_back(s);

  {
    Check c("prefix order is a partial order (exhaustive)");
    for (const Seq& a : pool) c.expect(substring_leq(a, a), [&] { return a.to_string(); });
    for (const Seq& a : pool)
      for (const Seq& b : pool)
        if (a != b)
          c.expect(!(substring_leq(a, b) && substring_leq(b, a)), [&] { return pair_text(a.to_string(), b.to_string()); });
    for (const Seq& a : pool)
      for (const Seq& b : pool) {
        if (!substring_leq(a, b)) continue;
        for (const Seq& d : pool)
          if (substring_leq(b, d))
            c.expect(substring_leq(a, d), [&] { return a.to_string() + " <= " + b.to_string() + " <= " + d.to_string(); });
      }
    rep.checks.push_back(c.done());
  }
  {
    Check c("prefix order is a partial order (randomized, entries <= 8, length <= 6)");
    for (std::uint64_t i = 0; i < opt.random_cases; ++i) {
      Seq a = rng.any(8, 6);
      Seq b = rng.coin() ? rng.above(a, 8, 3) : rng.any(8, 6);
      Seq d = rng.coin() ? rng.above(b, 8, 3) : rng.any(8, 6);
      c.expect(substring_leq(a, a), [&] { return a.to_string(); });
      c.expect(a == b || !(substring_leq(a, b) && substring_leq(b, a)), [&] { return pair_text(a.to_string(), b.to_string()); });
      c.expect(!(substring_leq(a, b) && substring_leq(b, d)) || substring_leq(a, d),
               [&] { return a.to_string() + " <= " + b.to_string() + " <= " + d.to_string(); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("finite sequences are compact along prefix chains");
    for (std::uint64_t i = 0; i < opt.random_cases / 10; ++i) {
      Seq limit = rng.periodic(8, 6);
      Seq a = rng.coin() ? limit.prefix(rng.uniform(1, 12)) : rng.finite(8, 6);
      if (!substring_leq(a, limit)) continue;
      bool reached = false;
      for (Nat k = 1; k <= 64 && !reached; ++k) reached = substring_leq(a, limit.prefix(k));
      c.expect(reached, [&] { return a.to_string() + " below " + limit.to_string(); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("infinite sequences are sups of their prefixes");
    for (std::uint64_t i = 0; i < opt.random_cases / 10; ++i) {
      Seq a = rng.periodic(opt.bound + 2, 5);
      bool below = true;
      for (Nat k = 1; k <= 32; ++k) below = below && substring_leq(a.prefix(k), a);
      c.expect(below, [&] { return a.to_string(); });
      for (const Seq& b : pool) {
        bool bounds = true;
        for (Nat k = 1; k <= 32 && bounds; ++k) bounds = substring_leq(a.prefix(k), b);
        if (bounds) c.expect(substring_leq(a, b), [&] { return pair_text(a.to_string(), b.to_string()); });
      }
      Seq twin = Seq::periodic(std::vector<Nat>(a.head().begin(), a.head().end()),
                               std::vector<Nat>(a.period().begin(), a.period().end()));
      c.expect(substring_leq(a, twin), [&] { return a.to_string(); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("upper bound exists iff comparable (exhaustive, brute-force search)");
    std::vector<Seq> uppers = finite_sequences(opt.bound, opt.depth + 1);
    for (const Seq& s : periodic_samples(opt.bound)) uppers.push_back(s);
    for (const Seq& a : pool)
      for (const Seq& b : pool) {
        const bool searched = std::ranges::any_of(uppers, [&](const Seq& d) { return substring_leq(a, d) && substring_leq(b, d); });
        c.expect(searched == comparable(a, b) && searched == has_upper_bound_sigma(a, b),
                 [&] { return pair_text(a.to_string(), b.to_string()); });
      }
    rep.checks.push_back(c.done());
  }
  {
    Check c("comparable sequences share their first entry");
    for (const Seq& a : pool)
      for (const Seq& b : pool)
        if (substring_leq(a, b))
          c.expect(component_index(a) == component_index(b), [&] { return pair_text(a.to_string(), b.to_string()); });
    rep.checks.push_back(c.done());
  }
  {
    Check c("canonical form is unique per periodic sequence");
    for (std::uint64_t i = 0; i < opt.random_cases / 10; ++i) {
      auto pre = rng.word(4, 0, 3);
      auto per = rng.word(4, 1, 3);
      Seq base = Seq::periodic(pre, per);
      auto doubled = per;
      doubled.insert(doubled.end(), per.begin(), per.end());
      auto shifted_pre = pre;
      shifted_pre.push_back(per.front());
      auto rotated = per;
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      for (const Seq& other : {Seq::periodic(pre, doubled), Seq::periodic(shifted_pre, rotated)}) {
        bool same_entries = true;
        for (Nat k = 1; k <= 24; ++k) same_entries = same_entries && base.at(k) == other.at(k);
        c.expect(same_entries && base == other, [&] { return pair_text(base.to_string(), other.to_string()); });
      }
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

SuiteReport run_domain_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.scope = "L";
  Sampler rng(opt.seed);
  const std::vector<LElem> T = truncation(opt.bound, opt.depth);
  rep.notes.push_back("truncation has " + std::to_string(T.size()) + " elements");

  {
    Check c("order of L: reflexive, antisymmetric, transitive (exhaustive)");
    for (const LElem& u : T) c.expect(leq(u, u), [&] { return u.to_string(); });
    for (const LElem& u : T)
      for (const LElem& v : T)
        if (u != v) c.expect(!(leq(u, v) && leq(v, u)), [&] { return pair_text(u.to_string(), v.to_string()); });
    for (const LElem& u : T)
      for (const LElem& v : T) {
        if (!leq(u, v)) continue;
        for (const LElem& w : T)
          if (leq(v, w))
            c.expect(leq(u, w), [&] { return u.to_string() + " <= " + v.to_string() + " <= " + w.to_string(); });
      }
    rep.checks.push_back(c.done());
  }

  std::vector<Seq> seqs;
  for (const LElem& u : T)
    if (u.is_sigma()) seqs.push_back(u.seq());

  {
    Check c("x-point below a iff below a* (exhaustive)");
    for (Nat k = 1; k <= opt.depth + 1; ++k)
      for (Nat m = 1; m <= opt.bound + 1; ++m)
        for (const Seq& a : seqs)
          c.expect(x_point_star_transfer_holds(k, m, a),
                   [&] { return "x(" + std::to_string(k) + "," + std::to_string(m) + ") vs " + a.to_string(); });
    rep.checks.push_back(c.done());
  }
  {
    Check c("x-point below a iff below a* (randomized)");
    for (std::uint64_t i = 0; i < opt.random_cases; ++i) {
      Nat k = rng.uniform(1, opt.random_depth + 1), m = rng.uniform(1, opt.random_bound);
      Seq a = rng.any(opt.random_bound, opt.random_depth);
      c.expect(x_point_star_transfer_holds(k, m, a),
               [&] { return "x(" + std::to_string(k) + "," + std::to_string(m) + ") vs " + a.to_string(); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("a <= b, a <= b*, a* <= b* and prefix order agree (exhaustive)");
    for (const Seq& a : seqs)
      for (const Seq& b : seqs)
        c.expect(sequence_star_orders_agree(a, b), [&] { return pair_text(a.to_string(), b.to_string()); });
    rep.checks.push_back(c.done());
  }
  {
    Check c("a <= b, a <= b*, a* <= b* and prefix order agree (randomized)");
    for (std::uint64_t i = 0; i < opt.random_cases; ++i) {
      Seq a = rng.any(opt.random_bound, opt.random_depth);
      Seq b = rng.coin() ? rng.above(a, opt.random_bound, opt.random_depth) : rng.any(opt.random_bound, opt.random_depth);
      c.expect(sequence_star_orders_agree(a, b), [&] { return pair_text(a.to_string(), b.to_string()); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("X and plain sequences form a lower set; starred sequences an upper set");
    for (const LElem& u : T)
      for (const LElem& v : T) {
        if (!leq(u, v)) continue;
        if (!v.is_star()) c.expect(!u.is_star(), [&] { return pair_text(u.to_string(), v.to_string()); });
        if (u.is_star()) c.expect(v.is_star(), [&] { return pair_text(u.to_string(), v.to_string()); });
      }
    rep.checks.push_back(c.done());
  }

  std::vector<LElem> extended = T;
  for (const Seq& s : periodic_samples(opt.bound + 2)) {
    extended.push_back(LElem::sigma(s));
    extended.push_back(LElem::sigmastar(s));
  }
  {
    Check c("maximal elements: closed form vs search");
    for (const LElem& u : extended)
      c.expect(is_maximal(u) == oracle::maximal_by_search(u, opt.bound, opt.depth), [&] { return u.to_string(); });
    rep.checks.push_back(c.done());
  }
  {
    Check c("compact elements: closed form vs chain oracle");
    for (const LElem& u : extended)
      c.expect(is_compact(u) == !oracle::non_compact_by_chain(u), [&] { return u.to_string(); });
    rep.checks.push_back(c.done());
  }
  {
    Check c("minimal sequences above a column point form an antichain");
    for (Nat k = 1; k <= 2; ++k)
      for (Nat m = 1; m <= opt.bound; ++m) {
        auto gens = min_upper_generators(k, m);
        auto members = gens.members_up_to(opt.bound);
        for (const Seq& a : members)
          for (const Seq& b : members)
            if (a != b)
              c.expect(!has_upper_bound_L(LElem::sigma(a), LElem::sigma(b)) &&
                           !oracle::upper_bound_by_search(LElem::sigma(a), LElem::sigma(b), opt.bound, opt.depth),
                       [&] { return pair_text(a.to_string(), b.to_string()); });
        for (const Seq& a : seqs) {
          const LElem x = LElem::x(k, m);
          bool minimal = leq(x, LElem::sigma(a));
          for (Nat len = 1; minimal && a.length().at_least(len + 1); ++len)
            if (leq(x, LElem::sigma(a.prefix(len)))) minimal = false;
          if (a.is_infinite()) minimal = false;
          c.expect(gens.contains(a) == minimal, [&] { return x.to_string() + " vs " + a.to_string(); });
        }
      }
    rep.checks.push_back(c.done());
  }
  {
    Check c("upper bounds in L: case analysis vs search (exhaustive)");
    for (const LElem& u : T)
      for (const LElem& v : T)
        c.expect(has_upper_bound_L(u, v) == oracle::upper_bound_by_search(u, v, opt.bound, opt.depth),
                 [&] { return pair_text(u.to_string(), v.to_string()); });
    rep.checks.push_back(c.done());
  }
  {
    Check c("column chains have no sequence upper bound");
    const std::vector<IndexSet> sets = {IndexSet::naturals(), IndexSet::arithmetic(2, 2), IndexSet::arithmetic(5, 7),
                                        IndexSet::primes(), IndexSet::squares()};
    for (std::uint64_t i = 0; i < 200; ++i) {
      Seq s = rng.any(opt.random_bound, opt.random_depth);
      const LElem cand = rng.coin() ? LElem::sigma(s) : LElem::sigmastar(s);
      for (const IndexSet& ns : sets) {
        const Nat m = rng.uniform(1, opt.random_depth + 2);
        auto r = refute_chain_upper_bound(m, ns, cand);
        const auto* ref = std::get_if<ChainRefutation>(&r);
        c.expect(ref && ns.contains(ref->n) && !leq(LElem::x(m, ref->n), cand),
                 [&] { return "column " + std::to_string(m) + " over " + ns.name() + " vs " + cand.to_string(); });
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("directed sets are cofinally restricted to the kind of their top");
    for (const LElem& top : T) {
      if (top.is_x()) continue;
      std::vector<LElem> below;
      for (const LElem& u : T)
        if (leq(u, top) && u != top) below.push_back(u);
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<LElem> D{top};
        for (const LElem& u : below)
          if (rng.coin()) D.push_back(u);
        c.expect(directed_restriction_check(D, top.kind()), [&] { return "top " + top.to_string(); });
      }
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

SuiteReport run_finite_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.scope = "finite";

  std::vector<FinitePoset> all;
  std::size_t iso_classes = 0;
  for (std::size_t n = 1; n <= opt.max_elems; ++n) {
    auto ps = labeled_posets(n);
    iso_classes += posets_up_to_iso(n).size();
    rep.notes.push_back(std::to_string(ps.size()) + " labeled posets on " + std::to_string(n) + " points");
    all.insert(all.end(), ps.begin(), ps.end());
  }
  rep.notes.push_back(std::to_string(all.size()) + " labeled posets in total, " + std::to_string(iso_classes) +
                      " up to isomorphism");

  auto describe = [](const FinitePoset& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (i != j && p.leq(i, j)) s += p.labels()[i] + "<" + p.labels()[j] + " ";
    return s + "}";
  };
  auto subsets = [](std::size_t n) {
    std::vector<ElementSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      ElementSet s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      out.push_back(std::move(s));
    }
    return out;
  };

  {
    Check c("way-below coincides with the order");
    for (const auto& p : all)
      for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
          c.expect(way_below_finite(p, x, y) == p.leq(x, y), [&] { return describe(p); });
    rep.checks.push_back(c.done());
  }
  {
    Check c("Scott open iff upper set");
    for (const auto& p : all)
      for (const auto& u : subsets(p.size())) {
        const bool open = oracle::scott_open_by_definition(p, u);
        c.expect(open == is_upper_set(p, u) && open == is_scott_open_finite(p, u), [&] { return describe(p); });
      }
    rep.checks.push_back(c.done());
  }
  {
    Check c("G-delta iff open");
    for (const auto& p : all)
      for (const auto& s : subsets(p.size())) {
        const bool gd = oracle::gdelta_by_intersection(p, s);
        c.expect(gd == is_gdelta_finite(p, s) && gd == is_scott_open_finite(p, s), [&] { return describe(p); });
      }
    rep.checks.push_back(c.done());
  }
  {
    Check c("maximal points form a G-delta set");
    for (const auto& p : all) {
      const ElementSet mx = maximals(p);
      c.expect(is_upper_set(p, mx) && oracle::gdelta_by_intersection(p, mx), [&] { return describe(p); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("two-chain poset: symbolic order matches generated closure");
    using TC = TwoChainPoset;
    const Nat n = 10;
    for (auto variant : {TC::Variant::plain, TC::Variant::joined}) {
      TC tc(variant);
      FinitePoset closure = tc.closure_fixture(n);
      for (std::size_t i = 0; i < closure.size(); ++i)
        for (std::size_t j = 0; j < closure.size(); ++j) {
          const auto a = TC::parse(closure.labels()[i]), b = TC::parse(closure.labels()[j]);
          c.expect(tc.leq(a, b) == closure.leq(i, j), [&] { return a.to_string() + " , " + b.to_string(); });
        }
    }
    TC plain(TC::Variant::plain), joined(TC::Variant::joined);
    const TC::Elem xw{TC::Side::x, NatOmega::omega()}, yw{TC::Side::y, NatOmega::omega()};
    for (Nat i = 1; i <= n + 1; ++i)
      for (Nat j = 1; j <= n + 1; ++j)
        for (auto sa : {TC::Side::x, TC::Side::y})
          for (auto sb : {TC::Side::x, TC::Side::y}) {
            const TC::Elem a{sa, i > n ? NatOmega::omega() : NatOmega(i)};
            const TC::Elem b{sb, j > n ? NatOmega::omega() : NatOmega(j)};
            const bool differs = plain.leq(a, b) != joined.leq(a, b);
            c.expect(differs == (a == xw && b == yw), [&] { return a.to_string() + " , " + b.to_string(); });
          }
    rep.checks.push_back(c.done());
  }
  {
    Check c("two-chain poset: supremum of the x-chain");
    using TC = TwoChainPoset;
    const TC::Subset chain{{}, TC::Side::x};
    auto plain = TC(TC::Variant::plain).sup(chain);
    auto joined = TC(TC::Variant::joined).sup(chain);
    const TC::Elem xw{TC::Side::x, NatOmega::omega()}, yw{TC::Side::y, NatOmega::omega()};
    const auto* none = std::get_if<NoSup<TC::Elem>>(&plain);
    c.expect(none && none->witness == std::vector<TC::Elem>{xw, yw}, [] { return std::string("plain variant"); });
    const auto* some = std::get_if<Sup<TC::Elem>>(&joined);
    c.expect(some && some->value == xw, [] { return std::string("joined variant"); });
    rep.checks.push_back(c.done());
  }
  return rep;
}

}  // namespace scottmax
