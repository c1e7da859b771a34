#include <gmhs/example33.hpp>

#include "support/candidate_roofs.hpp"

#include <gtest/gtest.h>

using namespace gmhs;

namespace {

using gmhs::testing::kDistinctParams;
const Example33Params& kDistinct = kDistinctParams;
const QMatrix I1 = QMatrix::identity(1), I2 = QMatrix::identity(2), I3 = QMatrix::identity(3);
const QMatrix kDropE{{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
using gmhs::testing::ladder;
using gmhs::testing::signed_middle;
CMatrix diag(const std::vector<int>& d) { return gmhs::testing::diag_c(d); }

void expect_refuted_at(const Roof& r, const std::string& eq, const std::string& label = {}) {
  const Refutation out = refute_roof(kDistinct, r);
  EXPECT_TRUE(out.refuted);
  EXPECT_EQ(out.violated, eq) << render_refutation(out);
  EXPECT_EQ(out.label, label);
  ASSERT_FALSE(out.trace.empty());
  EXPECT_FALSE(out.trace.back().holds);
}

std::size_t multisets(std::size_t kinds, std::size_t size) {
  std::size_t num = 1, den = 1;
  for (std::size_t a = 1; a <= size; ++a) {
    num *= kinds + a - 1;
    den *= a;
  }
  return num / den;
}

}  // namespace

TEST(Fixture, ObjectsAndSequenceAreValid) {
  for (const Rat& c : {Rat(0), Rat(1), Rat(-3, 2), Rat(7)}) {
    const YonedaExt e = build_example33({c, Rat(2)});
    for (const auto& o : e.objects) EXPECT_TRUE(check_gmhs(o).ok());
    for (const auto& m : e.maps) EXPECT_TRUE(is_gmhs_morphism(m));
    EXPECT_TRUE(check_exact(e).ok());
    EXPECT_EQ(e.objects[2].op("zD1"), (CMatrix{{GaussRat(1), GaussRat(c)}, {GaussRat(0), GaussRat(-1)}}));
  }
  EXPECT_TRUE(check_exact(build_example33_split()).ok());
  // j fails to be a morphism once the w/z pairing is dropped.
  YonedaExt e = build_example33(kDistinct);
  e.maps[1].corr = identity_correspondence(ex33::site(), ex33::site());
  EXPECT_TRUE(is_gmhs_morphism(e.maps[1]));
  e.maps[1].corr = ex33::corr_j();
  e.objects[2].z_ops["zD1"] = diag({-1, -1});
  e.maps[1].target = e.objects[2];
  EXPECT_FALSE(is_gmhs_morphism(e.maps[1]));
}

TEST(Refute, ProjectionThatIgnoresW) {
  const YonedaExt e = build_example33(kDistinct);
  expect_refuted_at(ladder(e, {I2, I3, I2, I1}, {I2, kDropE, ex33::matrix_k(), I1}), "f′∘x_{D_i} = f′", "wD1");
}

TEST(Refute, ZeroRetraction) {
  const YonedaExt e = build_example33(kDistinct);
  expect_refuted_at(ladder(e, {I2, I3, I2, I1}, {I2, QMatrix::zero(2, 3), ex33::matrix_k(), I1}), "f′∘i″ = id_S");
}

TEST(Refute, SplitMiddleWithGAlpha) {
  const YonedaExt ep = build_example33_split();
  expect_refuted_at(ladder(ep, {I2, ex33::matrix_i(), QMatrix{{Rat(1)}, {Rat(0)}}, I1}, {I2, I2, I1, I1}), "k∘g = h′");
}

TEST(Refute, NonExactMiddle) {
  YonedaExt dead = build_example33(kDistinct);
  dead.maps[1].matrix = QMatrix::zero(2, 3);
  expect_refuted_at(ladder(dead, {I2, I3, I2, I1}, {I2, kDropE, ex33::matrix_k(), I1}), "E″ exact");
}

TEST(Refute, AntiInvariantLineCarriesP) {
  const YonedaExt m = signed_middle(-1);
  ASSERT_TRUE(check_exact(m).ok());
  expect_refuted_at(ladder(m, {I2, I3, I2, I1}, {I2, kDropE, ex33::matrix_k(), I1}), "(R′_i − E)p⃗ = 0", "wD1");
}

TEST(Refute, InvariantLineMissesT) {
  const YonedaExt m = signed_middle(1);
  ASSERT_TRUE(check_exact(m).ok());
  expect_refuted_at(ladder(m, {I2, I3, I2, I1}, {I2, kDropE, ex33::matrix_k(), I1}), "(R′_i − E)t⃗ = −p⃗", "wD1");
}

TEST(Refute, EqualParameterWitnessFailsAtScalarEquation) {
  const auto cls = classify_example33({Rat(1), Rat(1)});
  ASSERT_EQ(cls.verdict, Verdict::Trivial);
  ASSERT_TRUE(cls.witness.has_value());
  EXPECT_FALSE(refute_roof({Rat(1), Rat(1)}, *cls.witness).refuted);
  const Refutation out = refute_roof(kDistinct, *cls.witness);
  EXPECT_TRUE(out.refuted);
  EXPECT_EQ(out.violated, "q·c(D_i) = −2p");
  EXPECT_EQ(out.label, "zD2");
  EXPECT_NE(render_refutation(out).find("refuted at q·c(D_i) = −2p [zD2]"), std::string::npos);
}

TEST(Refute, SharedCandidateListNamesEachViolation) {
  const auto cands = gmhs::testing::hand_built_roofs();
  ASSERT_EQ(cands.size(), 7u);
  for (const auto& c : cands) {
    SCOPED_TRACE(c.name);
    expect_refuted_at(c.roof, c.violated, c.label);
  }
}

TEST(Refute, WrongShapeIsReportedFirst) {
  Roof r = identity_roof(build_example33(kDistinct));
  r.up.pop_back();
  const Refutation out = refute_roof(kDistinct, r);
  EXPECT_TRUE(out.refuted);
  EXPECT_EQ(out.violated, "roof shape");
  EXPECT_EQ(out.trace.size(), 1u);
}

TEST(Search, CandidateCountsMatchMultisetCount) {
  for (std::size_t bound = 0; bound <= 3; ++bound) {
    std::size_t expected = 0;
    for (std::size_t m = 0; m <= bound; ++m) expected += 2 * multisets(4, m);
    EXPECT_EQ(roof_candidates(kDistinct, bound).size(), expected) << "bound " << bound;
  }
  EXPECT_EQ(roof_candidates(kDistinct, 2).size(), 30u);
  for (const auto& c : roof_candidates(kDistinct, 2)) EXPECT_TRUE(check_exact(c).ok());
}

TEST(Classify, EqualParametersAreTrivialWithCheckedWitness) {
  for (const Rat& c : {Rat(0), Rat(1), Rat(-3, 2), Rat(7)}) {
    const Example33Params p{c, c};
    const auto cls = classify_example33(p);
    EXPECT_EQ(cls.verdict, Verdict::Trivial);
    ASSERT_TRUE(cls.witness.has_value());
    EXPECT_TRUE(check_roof(build_example33(p), build_example33_split(), *cls.witness));
    EXPECT_FALSE(cls.certificate.has_value());
    EXPECT_EQ(cls.witness->up[2].matrix, (QMatrix{{-c / Rat(2)}, {Rat(1)}}));
  }
}

TEST(Classify, DistinctParametersAreNonTrivialWithCertificate) {
  for (const auto& [a, b] : std::vector<std::pair<Rat, Rat>>{{Rat(1), Rat(2)}, {Rat(0), Rat(7)}, {Rat(-3, 2), Rat(1)}}) {
    const auto cls = classify_example33({a, b});
    EXPECT_EQ(cls.verdict, Verdict::NonTrivial);
    EXPECT_FALSE(cls.witness.has_value());
    ASSERT_TRUE(cls.certificate.has_value());
    EXPECT_TRUE(check_certificate(*cls.certificate));
    EXPECT_EQ(cls.certificate->candidates_refuted, 30u);
    const std::string text = render_certificate(*cls.certificate);
    EXPECT_NE(text.find("no roof among 30 candidate middle sequences"), std::string::npos);
    EXPECT_EQ(text.find("NOT VERIFIED"), std::string::npos);
    EXPECT_NE(text.find("det [[" + a.str() + ",2],[" + b.str() + ",2]] = " + (Rat(2) * (a - b)).str()),
              std::string::npos);
  }
}

TEST(Certificate, ChainShapeAndTampering) {
  const ObstructionCertificate cert = build_certificate(kDistinct);
  ASSERT_TRUE(check_certificate(cert));
  std::vector<std::string> eqs;
  for (const auto& st : cert.steps) eqs.push_back(st.equation);
  const std::vector<std::string> expected{"T′ = S ⊕ T″",
                                          "(R′_i − E)p⃗ = 0", "(R′_i − E)p⃗ = 0",
                                          "(R′_i − E)t⃗ = −p⃗", "(R′_i − E)t⃗ = −p⃗",
                                          "(R′_i+E)(R′_i−E) = 0", "(R′_i+E)(R′_i−E) = 0",
                                          "p⃗ = 0",
                                          "a₀ = −1", "q·c(D_i) = −2p", "a₀ = −1", "q·c(D_i) = −2p",
                                          "c(D_i) = −2p/q"};
  EXPECT_EQ(eqs, expected);

  ObstructionCertificate dropped = cert;
  dropped.steps.erase(dropped.steps.begin() + 7);
  EXPECT_FALSE(check_certificate(dropped));
  ObstructionCertificate edited = cert;
  edited.steps[9].instantiation = "q·1 = −2p, trust me";
  EXPECT_FALSE(check_certificate(edited));
  ObstructionCertificate moved = cert;
  moved.params = {Rat(1), Rat(3)};
  EXPECT_FALSE(check_certificate(moved));
  ObstructionCertificate equal = build_certificate({Rat(2), Rat(2)});
  EXPECT_FALSE(check_certificate(equal));
}
