#include <gtest/gtest.h>

#include <random>

#include "flagflux/errors.hpp"
#include "flagflux/gcs.hpp"

using namespace flagflux;

namespace {

// Linear expression c_a a + c_x x + c_y y, enough to push symbolic entries
// through a signed permutation.
struct Linear {
  int a = 0, x = 0, y = 0;
  friend Linear operator-(Linear v) { return {-v.a, -v.x, -v.y}; }
  friend bool operator==(const Linear&, const Linear&) = default;
};

using Symbolic = std::array<std::array<Linear, 4>, 4>;

const Linear A{1, 0, 0}, X{0, 1, 0}, Y{0, 0, 1}, O{};

Matrix sandwich(const Matrix& j) {
  const Matrix phi = phi_matrix(1, 1);
  return phi * j * phi;
}

}  // namespace

TEST(Blocks, ComplexBlockBothSigns) {
  const GcsBlock plus = make_complex_block(1);
  EXPECT_EQ(plus.type, BlockType::complex);
  EXPECT_EQ(plus.matrix.str(), "[[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]]");
  EXPECT_EQ(make_complex_block(-1).matrix, -plus.matrix);
  EXPECT_THROW(make_complex_block(0), DomainError);
}

TEST(Blocks, NoncomplexConstraint) {
  EXPECT_EQ(make_noncomplex_block(0, -1, -1).type, BlockType::symplectic);
  EXPECT_EQ(make_noncomplex_block(1, 2, 1).type, BlockType::b_symplectic);
  EXPECT_THROW(make_noncomplex_block(1, 1, 1), DomainError);
  EXPECT_THROW(make_noncomplex_block(0, 1, 2), DomainError);
}

TEST(Blocks, ClassifyRejectsNonStructures) {
  EXPECT_THROW(classify_block(Matrix::identity(4)), DomainError);
  EXPECT_THROW(classify_block(Matrix::identity(2)), DomainError);
  EXPECT_EQ(to_string(BlockType::b_symplectic), "B-symplectic");
  EXPECT_FALSE(is_complex_type(BlockType::symplectic));
}

TEST(Phi, SmallMatrix) {
  EXPECT_EQ(phi_matrix(1, 1).str(), "[[1,0,0,0],[0,0,0,-1],[0,0,1,0],[0,-1,0,0]]");
}

TEST(Phi, InvolutiveAndIsometricForAllSmallShapes) {
  for (int t = 0; t <= 6; ++t)
    for (int m = 0; m <= 6; ++m) {
      const Matrix phi = phi_matrix(t, m);
      EXPECT_EQ(phi * phi, Matrix::identity(2 * (t + m))) << t << m;
      const Matrix g = pairing_matrix(t + m);
      EXPECT_EQ(phi.transpose() * g * phi, g) << t << m;
    }
  EXPECT_THROW(phi_matrix(-1, 1), DomainError);
}

TEST(Conjugation, ComplexBecomesSymplectic) {
  const Matrix expected{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
  const Matrix got = sandwich(make_complex_block(1).matrix);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(classify_block(got), BlockType::symplectic);
  const GcsBlock via_api = phi_conjugate(make_complex_block(1));
  EXPECT_EQ(via_api.matrix, expected);
  EXPECT_EQ(via_api.type, BlockType::symplectic);
}

TEST(Conjugation, NoncomplexBecomesComplexSymbolically) {
  const Symbolic b{{{A, O, O, -X}, {O, A, X, O}, {O, -Y, -A, O}, {Y, O, O, -A}}};
  const Symbolic expected{{{A, X, O, O}, {-Y, -A, O, O}, {O, O, -A, Y}, {O, O, -X, A}}};
  EXPECT_EQ(conjugate_by_phi(b), expected);
  EXPECT_EQ(conjugate_by_phi(conjugate_by_phi(b)), b);
}

TEST(Conjugation, TemplateAgreesWithMatrixProduct) {
  std::array<std::array<Rational, 4>, 4> j{};
  const Matrix m = make_noncomplex_block(Rational(3, 2), Rational(13, 4), 1).matrix;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) j[r][c] = m(r, c);
  const auto out = conjugate_by_phi(j);
  const Matrix s = sandwich(m);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_EQ(out[r][c], s(r, c));
}

TEST(Conjugation, RandomConstrainedParameters) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  int done = 0;
  while (done < 500) {
    const Rational a = Rational(num(rng)) / den(rng);
    const Rational x = Rational(num(rng)) / den(rng);
    if (x == 0) continue;
    const Rational y = (a * a + 1) / x;  // a^2 - x y = -1
    const GcsBlock block = make_noncomplex_block(a, x, y);
    EXPECT_TRUE(block.type == BlockType::symplectic ||
                block.type == BlockType::b_symplectic);
    const GcsBlock there = phi_conjugate(block);
    EXPECT_EQ(there.type, BlockType::complex);
    EXPECT_EQ(there.matrix * there.matrix, -Matrix::identity(4));
    const GcsBlock back = phi_conjugate(there);
    EXPECT_EQ(back.matrix, block.matrix);
    EXPECT_EQ(back.type, block.type);
    // a, x and -y sit at (0,0), (1,2) and (2,1)
    const Rational& ba = back.matrix(0, 0);
    EXPECT_EQ(ba * ba + back.matrix(1, 2) * back.matrix(2, 1), -1);
    ++done;
  }
}

TEST(Conjugation, ComplexBlocksBecomeNoncomplex) {
  for (int sign : {1, -1}) {
    const GcsBlock there = phi_conjugate(make_complex_block(sign));
    EXPECT_FALSE(is_complex_type(there.type));
    EXPECT_EQ(phi_conjugate(there).matrix, make_complex_block(sign).matrix);
  }
}

TEST(Integrability, Sl3AssignmentAndItsTransport) {
  const auto source = isotropy_summands(build_root_system("A", 2), {});
  const std::vector<GcsBlock> blocks{make_noncomplex_block(0, -1, -1),
                                     make_complex_block(1), make_complex_block(1)};
  const auto here = integrability_necessary(blocks, source);
  EXPECT_TRUE(here.passed);
  EXPECT_TRUE(here.mixed.empty());

  std::vector<GcsBlock> moved;
  for (const auto& b : blocks) moved.push_back(phi_conjugate(b));
  EXPECT_TRUE(is_complex_type(moved[0].type));
  EXPECT_FALSE(is_complex_type(moved[1].type));

  const auto target = isotropy_summands(build_root_system("A", 3), {1, 2});
  ASSERT_EQ(target.size(), 1u);
  ASSERT_EQ(target[0].dim(), 3);
  const auto there = integrability_necessary(moved, target);
  EXPECT_FALSE(there.passed);
  EXPECT_EQ(there.mixed, (std::vector<int>{1}));
}

TEST(Integrability, SizeMismatch) {
  const auto source = isotropy_summands(build_root_system("A", 2), {});
  EXPECT_THROW(integrability_necessary({make_complex_block(1)}, source), DomainError);
}
