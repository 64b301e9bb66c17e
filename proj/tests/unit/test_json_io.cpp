#include <gtest/gtest.h>

#include "scottmax/diagonal.hpp"
#include "scottmax/errors.hpp"
#include "scottmax/json_io.hpp"

using namespace scottmax;

TEST(JsonIo, PosetAppliesClosure) {
  const auto p = poset_from_json(R"J({"elements":["a","b","c"],"leq":[["a","b"],["b","c"]]})J");
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_TRUE(p.leq(1, 1));
}

TEST(JsonIo, RelationIsLiteral) {
  const auto r = relation_from_json(R"J({"elements":["a","b","c"],"leq":[["a","b"],["b","c"]]})J");
  EXPECT_FALSE(r.holds(0, 2));
  EXPECT_FALSE(r.holds(0, 0));
}

TEST(JsonIo, PosetRejectsCyclesAndUnknowns) {
  EXPECT_THROW(poset_from_json(R"J({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})J"), InputError);
  EXPECT_THROW(poset_from_json(R"J({"elements":["a"],"leq":[["a","z"]]})J"), InputError);
  EXPECT_THROW(poset_from_json(R"J({"elements":["a"],"leq":[],"extra":1})J"), InputError);
  EXPECT_THROW(poset_from_json(R"J({"elements":["a","a"],"leq":[]})J"), InputError);
}

TEST(JsonIo, MalformedJsonReportsOffset) {
  try {
    poset_from_json(R"J({"elements": [1,)J");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.offset(), 10u);
  }
}

TEST(JsonIo, FamilyKinds) {
  const auto fam = family_from_json(R"J({"name":"mix","opens":[
      {"families":[{"kind":"x_rank_at_least","k":2},{"kind":"single","elem":"s[1,5]"}]},
      {"families":[{"kind":"x_column","m":3,"min_n":4},{"kind":"explicit_list","elems":["x(1,1)","t[2]"]},
                   {"kind":"sigma_len_at_least","k":2},{"kind":"star_len_at_least","k":3}]}]})J",
                                    "fallback");
  EXPECT_EQ(fam.name(), "mix");
  EXPECT_EQ(fam.at(1).families().size(), 2u);
  EXPECT_EQ(fam.at(1).families()[1], GenFamily::single(LElem::sigma(Seq::finite({1, 5}))));
  EXPECT_EQ(fam.at(2).families()[0], GenFamily::x_column(3, 4));
  EXPECT_EQ(fam.at(7), fam.at(2));
  EXPECT_EQ(family_from_json(R"J({"kind":"canonical"})J", "x").name(), "canonical");
  EXPECT_EQ(family_from_json(R"J({"opens":[{"families":[{"kind":"x_rank_at_least","k":1}]}]})J", "fb").name(), "fb");
}

TEST(JsonIo, FamilyErrors) {
  EXPECT_THROW(family_from_json(R"J({"opens":[]})J", "f"), InputError);
  EXPECT_THROW(family_from_json(R"J({"opens":[{"families":[{"kind":"bogus","k":1}]}]})J", "f"), InputError);
  EXPECT_THROW(family_from_json(R"J({"opens":[{"families":[{"kind":"x_rank_at_least","k":0}]}]})J", "f"), InputError);
  EXPECT_THROW(family_from_json(R"J({"opens":[{"families":[{"kind":"single","elem":"x(1,w)"}]}]})J", "f"), InputError);
  EXPECT_THROW(family_from_json(R"J({"opens":[{"families":[{"kind":"single","elem":"x(1,"}]}]})J", "f"), ParseError);
  EXPECT_THROW(family_from_json(R"J({"kind":"other"})J", "f"), InputError);
}

TEST(JsonIo, CertificateRoundTrip) {
  const auto cert = std::get<DiagCertificate>(diagonalize(IndexedFamily::canonical(), 3, 100));
  const std::string text = certificate_to_json(cert);
  EXPECT_EQ(text,
            R"J({"family":"canonical","depth":3,"levels":[{"k":1,"n":1,"gen":"x(1,1)"},{"k":2,"n":2,"gen":"x(2,2)"},)J"
            R"J({"k":3,"n":3,"gen":"x(3,3)"}],"prefix":[1,2,3]})J");
  EXPECT_EQ(certificate_from_json(text), cert);
  EXPECT_THROW(certificate_from_json(R"J({"family":"c","depth":1,"levels":[],"prefix":[1],"x":0})J"), InputError);
}
