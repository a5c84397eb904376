#pragma once

// Invariant generalized complex structures on one root space: the 4x4 blocks
// on (y, x, y*, x*), their types, and transport by the T-duality map phi.

#include <array>
#include <string>
#include <vector>

#include "flagflux/exterior.hpp"
#include "flagflux/rootsys.hpp"

namespace flagflux {

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_.at(i * cols_ + j); }
  const Rational& operator()(int i, int j) const {
    return data_.at(i * cols_ + j);
  }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// "[[0,-1,0,0],[1,0,0,0],...]"
  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

enum class BlockType { complex, symplectic, b_symplectic, other };

std::string to_string(BlockType type);

/// Complex and noncomplex types; symplectic and B-symplectic blocks are
/// both noncomplex.
inline bool is_complex_type(BlockType type) {
  return type == BlockType::complex;
}

struct GcsBlock {
  Matrix matrix{4, 4};
  BlockType type = BlockType::other;
};

/// +/- the standard complex block.
GcsBlock make_complex_block(int sign);
/// The B-transformed symplectic block; throws DomainError unless
/// a^2 - x y = -1.
GcsBlock make_noncomplex_block(const Rational& a, const Rational& x,
                               const Rational& y);

/// Throws DomainError unless m is 4x4 with m^2 = -1.
BlockType classify_block(const Matrix& m);

/// The duality map on T + T* in coordinates (y_1..y_t, x_1..x_m,
/// y^1..y^t, x^1..x^m) -> (y_1..y_t, z_1..z_m, y^1..y^t, z^1..z^m).
Matrix phi_matrix(int t, int m);

/// Gram matrix of <X + xi, Y + eta> = (xi(Y) + eta(X)) / 2 on T + T*.
Matrix pairing_matrix(int n);

/// phi J phi^{-1} for the t = m = 1 map, classified.
GcsBlock phi_conjugate(const GcsBlock& block);

/// phi J phi^{-1} on a 4x4 array over any ring-like entry type; phi has
/// entries 0 and +/-1 and is its own inverse, so only negation and addition
/// of entries are needed.
template <class T>
std::array<std::array<T, 4>, 4> conjugate_by_phi(
    const std::array<std::array<T, 4>, 4>& j) {
  // phi sends coordinate k to sign[k] * coordinate perm[k].
  constexpr std::array<int, 4> perm{0, 3, 2, 1};
  constexpr std::array<int, 4> sign{1, -1, 1, -1};
  std::array<std::array<T, 4>, 4> out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const T& entry = j[perm[r]][perm[c]];
      out[r][c] = sign[r] * sign[c] > 0 ? entry : -entry;
    }
  }
  return out;
}

struct IntegrabilityReport {
  bool passed = true;
  /// Per summand: the block types found, in root order.
  std::vector<std::vector<BlockType>> types;
  /// 1-based summands mixing complex and noncomplex blocks.
  std::vector<int> mixed;
};

/// Necessary condition for integrability: inside each isotropy summand all
/// blocks are of complex type or all are noncomplex. `blocks` follows the
/// order of the roots across `summands`. Throws DomainError on a size
/// mismatch.
IntegrabilityReport integrability_necessary(
    const std::vector<GcsBlock>& blocks,
    const std::vector<IsotropySummand>& summands);

}  // namespace flagflux
