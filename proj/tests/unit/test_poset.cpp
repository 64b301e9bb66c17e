#include <gtest/gtest.h>

#include <set>

#include "scottmax/domain.hpp"
#include "scottmax/errors.hpp"
#include "scottmax/oracles.hpp"
#include "scottmax/poset.hpp"

using namespace scottmax;

namespace {

FinitePoset chain3() { return FinitePoset::from_generators({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
FinitePoset antichain2() { return FinitePoset::from_generators({"a", "b"}, {}); }

std::vector<std::string> L(const FinitePoset& p, const ElementSet& s) { return p.labels_of(s); }
using Labels = std::vector<std::string>;

}  // namespace

TEST(Poset, VerifyReportsEachAxiom) {
  Relation ok({"a", "b"});
  ok.add_reflexive();
  ok.set(0, 1);
  EXPECT_TRUE(verify_partial_order(ok).ok());

  Relation anti = ok;
  anti.set(1, 0);
  auto r = verify_partial_order(anti);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, OrderViolation::Kind::antisymmetry);

  Relation trans({"a", "b", "c"});
  trans.add_reflexive();
  trans.set(0, 1);
  trans.set(1, 2);
  r = verify_partial_order(trans);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, OrderViolation::Kind::transitivity);
  trans.close_transitively();
  EXPECT_TRUE(verify_partial_order(trans).ok());

  Relation refl({"a"});
  EXPECT_EQ(verify_partial_order(refl).violations.at(0).kind, OrderViolation::Kind::reflexivity);
  EXPECT_THROW(Relation({"a", "a"}), InputError);
  EXPECT_THROW(FinitePoset{anti}, InputError);
}

TEST(Poset, UpsetsDownsetsExtremals) {
  const auto c = chain3();
  EXPECT_EQ(L(c, upset(c, c.indices_of(Labels{"b"}))), (Labels{"b", "c"}));
  EXPECT_TRUE(upset(c, {}).empty());
  const auto a = antichain2();
  EXPECT_EQ(L(a, downset(a, a.indices_of(Labels{"a"}))), (Labels{"a"}));
  EXPECT_EQ(L(c, maximals(c)), (Labels{"c"}));
  EXPECT_EQ(L(c, minimals(c)), (Labels{"a"}));
  EXPECT_EQ(L(a, maximals(a)), (Labels{"a", "b"}));
  EXPECT_THROW(c.indices_of(Labels{"z"}), InputError);
}

TEST(Poset, MaximalsOfTruncatedColumns) {
  std::vector<LElem> xs;
  for (Nat m = 1; m <= 2; ++m) {
    for (Nat n = 1; n <= 2; ++n) xs.push_back(LElem::x(m, n));
    xs.push_back(LElem::x_top(m));
  }
  const auto p = induced_poset(std::span<const LElem>(xs), [](const LElem& u, const LElem& v) { return leq(u, v); },
                               [](const LElem& u) { return u.to_string(); });
  EXPECT_EQ(L(p, maximals(p)), (Labels{"x(1,w)", "x(2,w)"}));
}

TEST(Poset, WayBelowOpenGdeltaSmallCases) {
  const auto ab = FinitePoset::from_generators({"a", "b"}, {{"a", "b"}});
  EXPECT_TRUE(way_below_finite(ab, 0, 1));
  const auto anti = antichain2();
  EXPECT_FALSE(way_below_finite(anti, 0, 1));
  EXPECT_TRUE(is_scott_open_finite(ab, {1}));
  EXPECT_FALSE(is_scott_open_finite(ab, {0}));
  EXPECT_FALSE(is_gdelta_finite(ab, {0}));
  EXPECT_TRUE(is_gdelta_finite(ab, {0, 1}));
  EXPECT_EQ(supremum(ab, {0, 1}), std::optional<std::size_t>(1));
  EXPECT_EQ(supremum(anti, {0, 1}), std::nullopt);
}

TEST(Poset, EnumerationCounts) {
  // Labeled posets: 1, 3, 19, 219, 4231. Unlabeled: 1, 2, 5, 16, 63.
  const std::vector<std::size_t> labeled = {1, 3, 19, 219, 4231};
  const std::vector<std::size_t> unlabeled = {1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(labeled_posets(n).size(), labeled[n - 1]) << n;
    EXPECT_EQ(posets_up_to_iso(n).size(), unlabeled[n - 1]) << n;
  }
}

TEST(Poset, FiniteTheoryAgainstDefinitions) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const FinitePoset& p : labeled_posets(n)) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) ASSERT_EQ(way_below_finite(p, x, y), p.leq(x, y));
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        ElementSet s;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) s.push_back(i);
        const bool open = oracle::scott_open_by_definition(p, s);
        ASSERT_EQ(is_scott_open_finite(p, s), open);
        ASSERT_EQ(is_upper_set(p, s), open);
        ASSERT_EQ(is_gdelta_finite(p, s), oracle::gdelta_by_intersection(p, s));
      }
      ASSERT_TRUE(oracle::gdelta_by_intersection(p, maximals(p)));
    }
}

TEST(Poset, IsomorphismCodeIsInvariant) {
  const auto p = FinitePoset::from_generators({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  const auto q = FinitePoset::from_generators({"p", "q", "r"}, {{"q", "p"}, {"q", "r"}});
  const auto r = FinitePoset::from_generators({"p", "q", "r"}, {{"p", "q"}, {"r", "q"}});
  EXPECT_EQ(canonical_code(p), canonical_code(q));
  EXPECT_NE(canonical_code(p), canonical_code(r));
}

TEST(TwoChain, SupremumOfTheXChain) {
  using TC = TwoChainPoset;
  TC::Subset c{{}, TC::Side::x};
  const auto plain = TC(TC::Variant::plain).sup(c);
  ASSERT_TRUE(std::holds_alternative<NoSup<TC::Elem>>(plain));
  const auto& none = std::get<NoSup<TC::Elem>>(plain);
  std::set<std::string> w;
  for (const auto& e : none.witness) w.insert(e.to_string());
  EXPECT_EQ(w, (std::set<std::string>{"xw", "yw"}));

  const auto joined = TC(TC::Variant::joined).sup(c);
  ASSERT_TRUE(std::holds_alternative<Sup<TC::Elem>>(joined));
  EXPECT_EQ(std::get<Sup<TC::Elem>>(joined).value.to_string(), "xw");
}

TEST(TwoChain, OtherSubsets) {
  using TC = TwoChainPoset;
  const TC plain(TC::Variant::plain);
  auto sup_of = [&](TC::Subset s) { return std::get<Sup<TC::Elem>>(plain.sup(s)).value.to_string(); };
  EXPECT_EQ(sup_of({{TC::parse("x2"), TC::parse("x5")}, std::nullopt}), "x5");
  EXPECT_EQ(sup_of({{TC::parse("x2"), TC::parse("y1")}, std::nullopt}), "y2");
  EXPECT_EQ(sup_of({{}, TC::Side::y}), "yw");
  EXPECT_EQ(sup_of({{TC::parse("x7")}, TC::Side::y}), "yw");
  EXPECT_THROW(TC::parse("z1"), ParseError);
}

TEST(TwoChain, SymbolicOrderMatchesClosure) {
  using TC = TwoChainPoset;
  for (auto v : {TC::Variant::plain, TC::Variant::joined}) {
    const TC poset(v);
    const FinitePoset closed = poset.closure_fixture(6);
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t j = 0; j < closed.size(); ++j)
        ASSERT_EQ(poset.leq(TC::parse(closed.labels()[i]), TC::parse(closed.labels()[j])), closed.leq(i, j))
            << closed.labels()[i] << " " << closed.labels()[j];
  }
}

TEST(TwoChain, GenericOracleAgreesOnFiniteSubsets) {
  using TC = TwoChainPoset;
  const TC plain(TC::Variant::plain);
  const auto oracle = plain.as_oracle();
  std::vector<TC::Elem> a = {TC::parse("x1"), TC::parse("x3")};
  auto r = sup_in_oracle(oracle, std::span<const TC::Elem>(a));
  ASSERT_TRUE(std::holds_alternative<Sup<TC::Elem>>(r));
  EXPECT_EQ(std::get<Sup<TC::Elem>>(r).value.to_string(), "x3");
  std::vector<TC::Elem> empty;
  EXPECT_THROW(sup_in_oracle(oracle, std::span<const TC::Elem>(empty)), InputError);
}
