#include <gmhs/example33.hpp>

#include "support/oracles.hpp"
#include "support/random_objects.hpp"

#include <gtest/gtest.h>

using namespace gmhs;
using gmhs::testing::Gen;

namespace {

const GaussRat I = GaussRat::i();

PureHS pure(std::size_t dim, int weight, std::map<int, CSubspace> steps) { return {dim, weight, {dim, std::move(steps)}}; }

/// Purity oracle: for each p, the rows of F^p and conj F^{k-p+1} form a square
/// matrix with nonzero Leibniz determinant.
bool pure_by_determinants(const PureHS& h) {
  for (int p = h.F.lo() - 2; p <= h.F.hi() + 2; ++p) {
    std::vector<CVec> rows = h.F.at(p).vectors();
    for (const auto& v : h.F.at(h.weight - p + 1).vectors()) rows.push_back(conj_vec(v));
    if (rows.size() != h.dim) return false;
    if (h.dim && is_zero(gmhs::testing::leibniz_det(CMatrix::from_rows(rows, h.dim)))) return false;
  }
  return true;
}

}  // namespace

TEST(Pure, TrivialStructurePasses) {
  const PureHS q0 = pure(1, 0, {{0, CSubspace::full(1)}});
  EXPECT_TRUE(check_pure(q0).ok());
  EXPECT_EQ(hodge_piece(q0, 0), CSubspace::full(1));
  EXPECT_TRUE(hodge_piece(q0, 1).is_zero());
  EXPECT_TRUE(hodge_piece(q0, -1).is_zero());
}

TEST(Pure, WeightOneLineThroughOneI) {
  const PureHS h = pure(2, 1, {{1, CSubspace::span({{GaussRat(1), I}}, 2)}, {0, CSubspace::full(2)}});
  EXPECT_TRUE(pure_by_determinants(h));
  EXPECT_TRUE(check_pure(h).ok());
  EXPECT_EQ(hodge_piece(h, 1), CSubspace::span({{GaussRat(1), I}}, 2));
  EXPECT_EQ(hodge_piece(h, 0), CSubspace::span({{GaussRat(1), -I}}, 2));
  EXPECT_TRUE(hodge_piece(h, 2).is_zero());
  EXPECT_TRUE(hodge_piece(h, -1).is_zero());
}

TEST(Pure, RealLineFailsAtOne) {
  const PureHS h = pure(2, 1, {{1, CSubspace::span({{GaussRat(1), GaussRat(0)}}, 2)}, {0, CSubspace::full(2)}});
  EXPECT_FALSE(pure_by_determinants(h));
  const auto rep = check_pure(h);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.fails_with("purity at p=1"));
  EXPECT_THROW(hodge_piece(h, 1), InputError);
}

TEST(Pure, RandomStructuresAgreeWithDeterminantOracle) {
  Gen gen(11);
  for (int t = 0; t < 60; ++t) {
    const int k = gen.integer(-3, 3);
    const std::size_t d = k % 2 ? 2 * static_cast<std::size_t>(gen.integer(1, 2)) : static_cast<std::size_t>(gen.integer(1, 4));
    PureHS h{d, k, gen.pure_filtration(k, d)};
    ASSERT_TRUE(pure_by_determinants(h));
    ASSERT_TRUE(check_pure(h).ok());
    // Pieces span, and H^{p,q} = conj H^{q,p}.
    std::vector<CVec> all;
    for (int p = h.F.lo() - 1; p <= h.F.hi() + 1; ++p) {
      const CSubspace piece = hodge_piece(h, p);
      EXPECT_EQ(piece, conj_subspace(hodge_piece(h, k - p)));
      for (const auto& v : piece.vectors()) all.push_back(v);
    }
    EXPECT_EQ(all.size(), d);
    EXPECT_EQ(gmhs::testing::rank_of_rows(all, d), d);

    // A random rational perturbation of F^p typically breaks purity; the two checks must agree.
    PureHS bent = h;
    auto& step = bent.F.steps.rbegin()->second;
    if (!step.is_zero() && !step.is_full()) {
      std::vector<CVec> rows = step.vectors();
      rows[0] = to_complex(gen.qmatrix(1, d).row(0));
      step = CSubspace::span(rows, d);
      if (bent.F.validate().ok()) {
        EXPECT_EQ(check_pure(bent).ok(), pure_by_determinants(bent));
      }
    }
  }
}

TEST(Mixed, GradedPiecesOfT) {
  const MHSObject t = ex33::object_T().mhs;
  EXPECT_TRUE(check_mhs(t).ok());
  const PureHS g0 = gr_weight(t, 0), g1 = gr_weight(t, 1);
  EXPECT_EQ(g0.weight, -1);
  EXPECT_EQ(g0.dim, 2u);
  EXPECT_EQ(g1.weight, 0);
  EXPECT_EQ(g1.dim, 1u);
  EXPECT_EQ(gr_weight(t, -1).dim, 0u);
  EXPECT_EQ(gr_weight(t, 2).dim, 0u);
}

TEST(Mixed, PureObjectIsItsOnlyGradedPiece) {
  const MHSObject s = ex33::object_S().mhs;
  const PureHS g = gr_weight(s, 0);
  EXPECT_EQ(g.dim, 2u);
  EXPECT_EQ(g.weight, -1);
  EXPECT_EQ(g.F.at(0), s.F.at(0));
  EXPECT_EQ(gr_weight(s, 1).dim, 0u);
  EXPECT_TRUE(check_mhs(trivial_mhs()).ok());
}

TEST(Mixed, BrokenPurityNamesTheGradedPiece) {
  MHSObject t = ex33::object_T().mhs;
  t.F.steps[0] = CSubspace::span({{GaussRat(1), GaussRat(0), GaussRat(0)}, {GaussRat(0), GaussRat(1), GaussRat(0)}}, 3);
  const auto rep = check_mhs(t);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.fails_with("Gr^W_0"));
  EXPECT_FALSE(rep.fails_with("Gr^W_1"));
}

TEST(Morphisms, IdentityAndZeroAreStrict) {
  const MHSObject t = ex33::object_T().mhs;
  EXPECT_TRUE(is_strict(identity_morphism(t)));
  EXPECT_TRUE(is_strict({t, t, QMatrix::zero(3, 3)}));
}

TEST(Morphisms, KernelAndCokernelOnExampleShapes) {
  const MHSObject s = ex33::object_S().mhs, t = ex33::object_T().mhs;
  const MHSMorphism i{s, t, ex33::matrix_i()};
  ASSERT_TRUE(check_morphism(i).ok());
  const auto [coker, proj] = cokernel_mhs(i);
  EXPECT_EQ(coker.dim, 1u);
  EXPECT_TRUE(check_mhs(coker).ok());
  EXPECT_EQ(gr_weight(coker, 1).dim, 1u);  // pure of weight 0
  EXPECT_EQ(gr_weight(coker, 1).weight, 0);

  const auto [ker, incl] = kernel_mhs(proj);
  EXPECT_EQ(ker.dim, 2u);
  EXPECT_TRUE(check_mhs(ker).ok());
  EXPECT_EQ(image(incl.matrix), image(ex33::matrix_i()));
  EXPECT_EQ(gr_weight(ker, 0).weight, -1);
  EXPECT_EQ(gr_weight(ker, 0).dim, 2u);

  EXPECT_EQ(kernel_mhs(identity_morphism(t)).first.dim, 0u);
  EXPECT_EQ(kernel_mhs(MHSMorphism{t, t, QMatrix::zero(3, 3)}).first, t);
  EXPECT_EQ(cokernel_mhs(identity_morphism(t)).first.dim, 0u);
  EXPECT_EQ(cokernel_mhs(MHSMorphism{t, t, QMatrix::zero(3, 3)}).first.dim, 3u);
}

TEST(Morphisms, BaseWeightMismatchRejected) {
  const MHSObject a = trivial_mhs(0), b = trivial_mhs(-1);
  EXPECT_THROW(kernel_mhs({a, b, QMatrix::zero(1, 1)}), InputError);
  EXPECT_THROW(cokernel_mhs({a, b, QMatrix::zero(1, 1)}), InputError);
}

TEST(Morphisms, RandomAbelianProperties) {
  Gen gen(23);
  int nonzero = 0;
  for (int t = 0; t < 40; ++t) {
    const MHSObject a = gen.mhs(3, 2), b = gen.mhs(3, 2), c = gen.mhs(3, 2);
    ASSERT_TRUE(check_mhs(a).ok());
    const MHSObject src = direct_sum_mhs(a, b), dst = direct_sum_mhs(b, c);
    const QMatrix m = gen.morphism(src, dst);
    const MHSMorphism f{src, dst, m};
    ASSERT_TRUE(check_morphism(f).ok());
    if (!m.is_zero()) ++nonzero;
    EXPECT_TRUE(is_strict(f));
    const auto [ker, incl] = kernel_mhs(f);
    const auto [cok, proj] = cokernel_mhs(f);
    EXPECT_TRUE(check_mhs(ker).ok());
    EXPECT_TRUE(check_mhs(cok).ok());
    EXPECT_TRUE((m * incl.matrix).is_zero());
    EXPECT_TRUE((proj.matrix * m).is_zero());
    EXPECT_EQ(ker.dim + rank(m), src.dim);
    EXPECT_EQ(cok.dim + rank(m), dst.dim);
    EXPECT_TRUE(check_image_coimage(f).ok());

    // Universal property: f∘g = 0 forces g to factor uniquely through the kernel.
    const QSubspace killed = kernel(m);
    const QMatrix g = killed.basis().transpose() * gen.qmatrix(killed.dim(), 2);
    ASSERT_TRUE((m * g).is_zero());
    EXPECT_EQ(kernel(incl.matrix).dim(), 0u);
    for (std::size_t col = 0; col < g.cols(); ++col) EXPECT_TRUE(solve(incl.matrix, g.col(col)).has_value());
  }
  EXPECT_GT(nonzero, 10);
}
