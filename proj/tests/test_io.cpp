#include <gtest/gtest.h>

#include "ultraseq/descriptor.hpp"
#include "ultraseq/io.hpp"

using namespace ultraseq;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Json, RoundTripKeepsTailsAndHugeValues) {
  const SeqWindow w(-3, {BigInt("123456789012345678901234567890123456789012345"), -2, 7},
                    ExtRule::periodic(ints({-6, -2})), ExtRule::constant(-2));
  const std::string text = to_json(w);
  EXPECT_NE(text.find("\"123456789012345678901234567890123456789012345\""), std::string::npos);
  EXPECT_EQ(from_json(text), w);
}

TEST(Json, AcceptsMissingSidesAndRejectsGarbage) {
  EXPECT_EQ(from_json(R"({"lo": 2, "values": ["1", "-4"]})"), SeqWindow(2, ints({1, -4})));
  EXPECT_THROW(from_json("{"), std::invalid_argument);
  EXPECT_THROW(from_json(R"({"lo": 0})"), std::invalid_argument);
  EXPECT_THROW(from_json(R"({"lo": 0, "values": ["x"]})"), std::invalid_argument);
  EXPECT_THROW(from_json(R"({"lo": 0, "values": ["1"], "left": {"kind": "spiral"}})"),
               std::invalid_argument);
}

TEST(Csv, FormatAndRoundTrip) {
  const SeqWindow w(-1, ints({-2, 1, 2}));
  EXPECT_EQ(to_csv(w), "index,value\n-1,-2\n0,1\n1,2\n");
  EXPECT_EQ(from_csv(to_csv(w)), w);
  EXPECT_EQ(from_csv("index,value\r\n5,3\r\n6,4\r\n"), SeqWindow(5, ints({3, 4})));
}

TEST(Csv, Rejections) {
  EXPECT_THROW(from_csv(""), std::invalid_argument);
  EXPECT_THROW(from_csv("i,v\n0,1\n"), std::invalid_argument);
  EXPECT_THROW(from_csv("index,value\n0,1\n2,3\n"), std::invalid_argument);
  EXPECT_THROW(from_csv("index,value\n0;1\n"), std::invalid_argument);
  EXPECT_THROW(from_csv("index,value\n"), std::invalid_argument);
}

TEST(Range, Parsing) {
  EXPECT_EQ(parse_range("-80..10"), std::make_pair(Index{-80}, Index{10}));
  EXPECT_EQ(parse_range("3..3"), std::make_pair(Index{3}, Index{3}));
  EXPECT_THROW(parse_range("4..3"), std::invalid_argument);
  EXPECT_THROW(parse_range("4-3"), std::invalid_argument);
  EXPECT_THROW(parse_range("a..3"), std::invalid_argument);
}

TEST(Descriptor, AllFamiliesParse) {
  EXPECT_EQ(FamilyDescriptor::parse("pi:m=3").m, 3);
  EXPECT_EQ(FamilyDescriptor::parse("pistar:m=1").kind, FamilyDescriptor::Kind::pistar);
  const auto tau = FamilyDescriptor::parse("tau:m=2,P=6;9,N=1;3");
  EXPECT_EQ(tau.tau, (TauConfig{2, {6, 9}, {1, 3}}));
  EXPECT_EQ(*FamilyDescriptor::parse("omega:extent=4").extent, 4);
  const auto op = FamilyDescriptor::parse("opower:r=3,unit=+,-,-");
  EXPECT_EQ(op.opower.placement, (std::vector<int>{1, -1, -1}));
  EXPECT_EQ(FamilyDescriptor::parse("opower:m=2").opower.r, 5);
  const auto c = FamilyDescriptor::parse("composite:left=tau:m=2,P=6;9,N=1;3,mid=omega:-4..6,seed=1");
  EXPECT_EQ(c.tau, (TauConfig{2, {6, 9}, {1, 3}}));
  EXPECT_EQ(c.mid, omega_segment(-4, 6));
  EXPECT_EQ(c.seed, 1);
  const auto g = FamilyDescriptor::parse("grec:P=1,Q=-1,r=1,init=0;1");
  EXPECT_EQ(g.init, ints({0, 1}));
}

TEST(Descriptor, ErrorsNameTheProblem) {
  auto message = [](const char* text) {
    try {
      FamilyDescriptor::parse(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("zeta:m=1").find("unknown family"), std::string::npos);
  EXPECT_NE(message("pi:n=1").find("unknown key"), std::string::npos);
  EXPECT_NE(message("pi:").find("missing key 'm'"), std::string::npos);
  EXPECT_NE(message("tau:m=1,P=2,N=1").find("adjacent"), std::string::npos);
  EXPECT_NE(message("opower:r=3,unit=+,+,-").find("sums"), std::string::npos);
  EXPECT_NE(message("opower:r=3,unit=+,x,-").find("+, - or 0"), std::string::npos);
  EXPECT_NE(message("composite:left=pi:m=1,seed=1").find("tau"), std::string::npos);
  EXPECT_NE(message("grec:P=1,Q=1,r=2,init=1;2").find("2r"), std::string::npos);
  EXPECT_NE(message("pi:m=1,m=2").find("duplicate"), std::string::npos);
}

TEST(Descriptor, WindowsCoverTheRange) {
  for (const char* d : {"pi:m=2", "pistar:m=1", "tau:m=1,P=5,N=1", "omega:",
                        "opower:r=3,unit=+,-,-",
                        "composite:left=tau:m=1,P=5,N=1,seed=3", "grec:P=2,Q=1,r=2,init=1;0;0;0"}) {
    const auto fam = FamilyDescriptor::parse(d);
    const Index a = fam.kind == FamilyDescriptor::Kind::grec ? 0 : -90;
    const SeqWindow w = fam.window(a, 15);
    for (Index k = a; k <= 16; ++k) ASSERT_TRUE(w.in_domain(k)) << d << " " << k;
  }
}
