#include <gtest/gtest.h>

#include "slcopula/errors.hpp"
#include "slcopula/json_io.hpp"
#include "support/generators.hpp"

using namespace slc;
namespace st = slc::testing;

namespace {

void expect_same_diagonal(const Diagonal& a, const Diagonal& b) {
  for (int k = 0; k <= 100; ++k) EXPECT_NEAR(a(k / 100.0), b(k / 100.0), 1e-15);
  EXPECT_EQ(a.kinks(), b.kinks());
  EXPECT_EQ(a.jumps(), b.jumps());
}

}  // namespace

TEST(DiagonalJson, DocumentedForms) {
  const char* specs[] = {
      R"({"variant":"m","m":0.5})",
      R"({"variant":"p","p":0.8})",
      R"({"variant":"beta","beta":0.5})",
      R"({"variant":"step","side":"right","a":0.4})",
      R"({"variant":"step","side":"left","a":0.4})",
      R"({"variant":"mixture","atoms":[{"m":0.0,"w":0.5},{"m":1.0,"w":0.5}]})",
      R"({"variant":"tabulated","knots":[[0,0],[0.5,0.3],[1,1]]})",
      R"({"variant":"reflected","inner":{"variant":"p","p":0.5}})",
      R"({"variant":"combination","parts":[{"w":1,"spec":{"variant":"m","m":0.2}},{"w":3,"spec":{"variant":"beta","beta":0.1}}]})",
  };
  for (const char* s : specs) {
    const Diagonal d = diagonal_from_json(parse_json(s));
    expect_same_diagonal(d, diagonal_from_json(to_json(d)));
  }
  EXPECT_DOUBLE_EQ(diagonal_from_json(parse_json(specs[0]))(0.3), 0.15);
}

TEST(DiagonalJson, RandomRoundTrip) {
  st::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const Diagonal d = st::random_any_diagonal(rng);
    const Json j = to_json(d);
    expect_same_diagonal(d, diagonal_from_json(parse_json(j.dump())));
  }
}

TEST(DiagonalJson, Errors) {
  EXPECT_THROW(diagonal_from_json(parse_json(R"({"m":0.5})")), SpecError);
  EXPECT_THROW(diagonal_from_json(parse_json(R"({"variant":"q"})")), SpecError);
  EXPECT_THROW(diagonal_from_json(parse_json(R"({"variant":"m"})")), SpecError);
  EXPECT_THROW(diagonal_from_json(parse_json(R"({"variant":"m","m":"half"})")), SpecError);
  EXPECT_THROW(diagonal_from_json(parse_json(R"({"variant":"m","m":2})")), SpecError);
  EXPECT_THROW(diagonal_from_json(parse_json(R"({"variant":"step","side":"up","a":0.4})")), SpecError);
  EXPECT_THROW(diagonal_from_json(parse_json(R"({"variant":"tabulated","knots":[[0,0,1],[1,1]]})")), SpecError);
  EXPECT_THROW(diagonal_from_json(parse_json(R"({"variant":"tabulated","knots":[[0,0],[0.7,0.5]]})")), SpecError);
  EXPECT_THROW(parse_json("{not json"), SpecError);
}

TEST(MeasureJson, RoundTrip) {
  const auto mu = measure_from_json(parse_json(R"({"atoms":[{"m":0.25,"w":0.5},{"m":0.75,"w":0.5}]})"));
  EXPECT_EQ(mu, DiscreteMeasure({{0.25, 0.5}, {0.75, 0.5}}));
  EXPECT_EQ(measure_from_json(to_json(mu)), mu);
  EXPECT_THROW(measure_from_json(parse_json(R"({"atoms":[{"m":0.25,"w":0.4}]})")), SpecError);
}

TEST(PiecewiseJson, RoundTrip) {
  const auto pw = to_piecewise(DiscreteMeasure({{0.25, 0.5}, {0.75, 0.5}}));
  const Json j = to_json(pw);
  EXPECT_TRUE(j.contains("breakpoints"));
  EXPECT_TRUE(j.contains("alpha"));
  EXPECT_TRUE(j.contains("beta"));
  const auto back = piecewise_from_json(j);
  EXPECT_EQ(back.breakpoints, pw.breakpoints);
  EXPECT_EQ(back.alpha, pw.alpha);
  EXPECT_EQ(back.beta, pw.beta);
}

TEST(ReportJson, ClassReportCarriesFlagsAndWitnesses) {
  const Json j = to_json(validate(reflect(Diagonal::family_p(0.5))));
  EXPECT_EQ(j["is_diagonal"], true);
  EXPECT_EQ(j["in_copula_class"], false);
  ASSERT_TRUE(j["witnesses"].is_array());
  EXPECT_FALSE(j["witnesses"].empty());
  bool phi_witness = false;
  for (const auto& w : j["witnesses"]) phi_witness = phi_witness || w["condition"] == "phi_nondecreasing";
  EXPECT_TRUE(phi_witness);
}

TEST(ReportJson, MeasureTriple) {
  const Json j = to_json(MeasureTriple{0.0625, 1.0 / 12.0, 0.125});
  EXPECT_EQ(j["rho"], 0.0625);
  EXPECT_EQ(j["footrule"], 0.125);
}

TEST(ReportJson, SerializationIsDeterministic) {
  const Diagonal d = Diagonal::family_beta(0.4);
  EXPECT_EQ(to_json(validate(d)).dump(), to_json(validate(d)).dump());
  EXPECT_EQ(to_json(classify_quasicopula(d)).dump(), to_json(classify_quasicopula(d)).dump());
}
