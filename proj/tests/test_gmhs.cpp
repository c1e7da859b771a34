#include <gmhs/example33.hpp>

#include <gtest/gtest.h>

using namespace gmhs;

namespace {

SiteDescriptor small_site() { return {{"V1", "V2"}, {"D1"}}; }

GMHSMorphism scalar(const GMHSObject& a, const GMHSObject& b, long s, LabelCorrespondence c) {
  return {a, b, QMatrix{{Rat(s)}}, std::move(c)};
}

}  // namespace

TEST(Site, LabelsMustBeDisjoint) {
  EXPECT_TRUE(small_site().validate().ok());
  const SiteDescriptor bad{{"A"}, {"A"}};
  EXPECT_FALSE(bad.validate().ok());
}

TEST(QM, SignsFollowMembership) {
  const auto q = make_QM(small_site(), {"V1"});
  EXPECT_EQ(q.op("V1"), CMatrix{{GaussRat(-1)}});
  EXPECT_EQ(q.op("V2"), CMatrix{{GaussRat(1)}});
  EXPECT_EQ(q.op("D1"), CMatrix{{GaussRat(1)}});
  EXPECT_TRUE(check_gmhs(q).ok());
  EXPECT_EQ(forgetful(q), trivial_mhs());
  EXPECT_THROW(make_QM(small_site(), {"nope"}), InputError);
  EXPECT_EQ(make_QM(small_site(), {"V1"}), make_QM(small_site(), {"V1"}));
  EXPECT_FALSE(make_QM(small_site(), {"V1"}) == make_QM(small_site(), {"V2"}));

  const auto m = ex33::object_QM();
  EXPECT_EQ(m.op("zD1"), CMatrix{{GaussRat(-1)}});
  EXPECT_EQ(m.op("zD2"), CMatrix{{GaussRat(-1)}});
  EXPECT_EQ(m.op("wD1"), CMatrix{{GaussRat(1)}});
}

TEST(Objects, ExampleFixturesAreValid) {
  EXPECT_TRUE(check_gmhs(ex33::object_S()).ok());
  const auto t = ex33::object_T();
  const CMatrix w = t.op("wD1");
  EXPECT_FALSE(w * w == CMatrix::identity(3));  // unipotent, not an involution
  EXPECT_TRUE(check_gmhs(t).ok());
  for (const Rat& c : {Rat(0), Rat(1), Rat(-3, 2), Rat(7)}) {
    const auto v = ex33::object_V({c, c + Rat(1)});
    EXPECT_TRUE(check_gmhs(v).ok());
    EXPECT_EQ(v.op("zD1") * v.op("zD1"), CMatrix::identity(2));
  }
}

TEST(Objects, WNotPreservingWeightFails) {
  auto t = ex33::object_T();
  t.w_ops["wD1"] = CMatrix{{GaussRat(1), GaussRat(1), GaussRat(0)},
                           {GaussRat(0), GaussRat(1), GaussRat(0)},
                           {GaussRat(0), GaussRat(0), GaussRat(1)}};  // s1 -> e + s1 leaves W_0
  const auto rep = check_gmhs(t);
  EXPECT_FALSE(rep.ok());
  bool named = false;
  for (const auto& f : rep.failures()) named = named || (f.name.find("wD1") != std::string::npos && f.detail == "Gr action undefined");
  EXPECT_TRUE(named);
}

TEST(Objects, NonInvolutiveZFails) {
  auto v = ex33::object_V({Rat(1), Rat(2)});
  v.z_ops["zD2"] = CMatrix{{GaussRat(2), GaussRat(0)}, {GaussRat(0), GaussRat(1)}};
  EXPECT_TRUE(check_gmhs(v).fails_with("z_zD2"));
}

TEST(Morphisms, IdentityAndSignMismatch) {
  const auto site = small_site();
  const auto qm = make_QM(site, {"V1"});
  const auto q0 = make_QM(site, {});
  EXPECT_TRUE(is_gmhs_morphism(identity_morphism(qm)));
  EXPECT_FALSE(is_gmhs_morphism(scalar(qm, q0, 3, {{{"V1", "V1", PairCase::ZZ}}})));
  EXPECT_TRUE(is_gmhs_morphism(scalar(qm, q0, 0, {{{"V1", "V1", PairCase::ZZ}}})));
  EXPECT_TRUE(is_gmhs_morphism(scalar(qm, q0, 3, {{{"V2", "V2", PairCase::ZZ}}})));
  EXPECT_THROW(check_gmhs_morphism(scalar(qm, q0, 1, {{{"X", "V1", PairCase::ZZ}}})), InputError);
  EXPECT_THROW(check_gmhs_morphism(scalar(qm, q0, 1, {{{"V1", "D1", PairCase::ZZ}}})), InputError);
}

TEST(Morphisms, ExampleMapJPairsWWithZ) {
  const auto e = build_example33({Rat(1), Rat(2)});
  const auto& j = e.maps[1];
  EXPECT_TRUE(is_gmhs_morphism(j));
  // The same matrix fails if z_{D_1} on V is replaced by one not fixing alpha.
  auto broken = j;
  broken.target.z_ops["zD1"] = CMatrix{{GaussRat(-1), GaussRat(0)}, {GaussRat(0), GaussRat(1)}};
  EXPECT_FALSE(is_gmhs_morphism(broken));
}

TEST(Morphisms, CompositionOfCorrespondences) {
  const auto site = small_site();
  const auto a = make_QM(site, {"V1"}), b = make_QM(site, {"V2"}), c = make_QM(site, {"V1", "D1"});
  const auto f = scalar(a, b, 2, {{{"V1", "V2", PairCase::ZZ}}});
  const auto g = scalar(b, c, 3, {{{"V2", "V1", PairCase::ZZ}, {"V1", "V2", PairCase::ZZ}}});
  ASSERT_TRUE(is_gmhs_morphism(f));
  ASSERT_TRUE(is_gmhs_morphism(g));
  const auto gf = compose(g, f);
  EXPECT_EQ(gf.corr.pairings, (std::vector<Pairing>{{"V1", "V1", PairCase::ZZ}}));
  EXPECT_EQ(gf.matrix, QMatrix{{Rat(6)}});
  EXPECT_TRUE(is_gmhs_morphism(gf));
}

TEST(Sums, BlockDiagonalOperators) {
  const auto site = small_site();
  const auto s = direct_sum(make_QM(site, {"V1"}), make_QM(site, {"V2"}));
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.op("V1"), (CMatrix{{GaussRat(-1), GaussRat(0)}, {GaussRat(0), GaussRat(1)}}));
  EXPECT_EQ(s.op("V2"), (CMatrix{{GaussRat(1), GaussRat(0)}, {GaussRat(0), GaussRat(-1)}}));
  EXPECT_TRUE(check_gmhs(s).ok());
  EXPECT_EQ(forgetful(s), direct_sum_mhs(trivial_mhs(), trivial_mhs()));
  EXPECT_THROW(direct_sum(make_QM(site, {}), ex33::object_QM()), InputError);
}

TEST(KernelCokernel, ExampleShapes) {
  const auto e = build_example33({Rat(1), Rat(2)});
  const auto [ker_k, incl] = kernel_gmhs(e.maps[2]);
  EXPECT_EQ(ker_k.dim(), 1u);
  EXPECT_EQ(image(incl.matrix), image(e.maps[1].matrix));
  EXPECT_TRUE(check_gmhs(ker_k).ok());
  EXPECT_EQ(ker_k.op("zD1"), CMatrix{{GaussRat(1)}});
  EXPECT_EQ(ker_k.mhs, kernel_mhs(e.maps[2].mhs()).first);

  const auto [cok_i, proj] = cokernel_gmhs(e.maps[0]);
  EXPECT_EQ(cok_i.dim(), 1u);
  EXPECT_TRUE(check_gmhs(cok_i).ok());
  EXPECT_EQ(cok_i.op("wD1"), CMatrix{{GaussRat(1)}});
  EXPECT_TRUE(is_gmhs_morphism(proj));

  EXPECT_EQ(kernel_gmhs(identity_morphism(e.objects[1])).first.dim(), 0u);
}

TEST(KernelCokernel, StabilityViolationNamesLabel) {
  const auto v = ex33::object_V({Rat(1), Rat(2)});
  // Killing alpha + beta: z_{D_1} does not preserve that line.
  const GMHSMorphism f{v, v, QMatrix{{Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}}, {}};
  try {
    kernel_gmhs(f);
    FAIL() << "expected a stability error";
  } catch (const InputError& err) {
    EXPECT_NE(std::string(err.what()).find("zD"), std::string::npos);
  }
}
