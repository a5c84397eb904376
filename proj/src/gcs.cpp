#include "flagflux/gcs.hpp"

#include "flagflux/errors.hpp"

namespace flagflux {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix n = a;
  for (auto& value : n.data_) value = -value;
  return n;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += (*this)(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

std::string to_string(BlockType type) {
  switch (type) {
    case BlockType::complex: return "complex";
    case BlockType::symplectic: return "symplectic";
    case BlockType::b_symplectic: return "B-symplectic";
    case BlockType::other: break;
  }
  return "other";
}

GcsBlock make_complex_block(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("complex block sign must be +1 or -1");
  const Rational s = sign;
  GcsBlock block;
  block.matrix = Matrix{{0, -s, 0, 0}, {s, 0, 0, 0}, {0, 0, 0, -s}, {0, 0, s, 0}};
  block.type = classify_block(block.matrix);
  return block;
}

GcsBlock make_noncomplex_block(const Rational& a, const Rational& x,
                               const Rational& y) {
  if (a * a - x * y != -1) {
    throw DomainError("noncomplex block needs a^2 - x y = -1, got " +
                      Rational(a * a - x * y).get_str());
  }
  GcsBlock block;
  block.matrix = Matrix{{a, 0, 0, -x}, {0, a, x, 0}, {0, -y, -a, 0}, {y, 0, 0, -a}};
  block.type = classify_block(block.matrix);
  return block;
}

BlockType classify_block(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DomainError("blocks are 4x4");
  if (m * m != -Matrix::identity(4)) throw DomainError("block does not square to -1");

  auto zero = [&](int r0, int c0) {
    return m(r0, c0) == 0 && m(r0, c0 + 1) == 0 && m(r0 + 1, c0) == 0 &&
           m(r0 + 1, c0 + 1) == 0;
  };
  if (zero(0, 2) && zero(2, 0)) {
    bool neg_transpose = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        neg_transpose = neg_transpose && m(2 + i, 2 + j) == -m(j, i);
    return neg_transpose ? BlockType::complex : BlockType::other;
  }
  if (zero(0, 0) && zero(2, 2)) return BlockType::symplectic;

  const Rational& a = m(0, 0);
  const bool shape = a != 0 && m(1, 1) == a && m(2, 2) == -a && m(3, 3) == -a &&
                     m(0, 1) == 0 && m(1, 0) == 0 && m(2, 3) == 0 &&
                     m(3, 2) == 0 && m(0, 2) == 0 && m(1, 3) == 0 &&
                     m(2, 0) == 0 && m(3, 1) == 0 && m(0, 3) == -m(1, 2) &&
                     m(3, 0) == -m(2, 1);
  return shape ? BlockType::b_symplectic : BlockType::other;
}

Matrix phi_matrix(int t, int m) {
  if (t < 0 || m < 0) throw DomainError("phi needs t, m >= 0");
  const int n = t + m;
  Matrix phi(2 * n, 2 * n);
  for (int i = 0; i < t; ++i) {
    phi(i, i) = 1;
    phi(n + i, n + i) = 1;
  }
  for (int k = 0; k < m; ++k) {
    phi(t + k, n + t + k) = -1;
    phi(n + t + k, t + k) = -1;
  }
  return phi;
}

Matrix pairing_matrix(int n) {
  Matrix g(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    g(i, n + i) = Rational(1, 2);
    g(n + i, i) = Rational(1, 2);
  }
  return g;
}

GcsBlock phi_conjugate(const GcsBlock& block) {
  const Matrix phi = phi_matrix(1, 1);
  GcsBlock out;
  out.matrix = phi * block.matrix * phi;  // phi is an involution
  out.type = classify_block(out.matrix);
  return out;
}

IntegrabilityReport integrability_necessary(
    const std::vector<GcsBlock>& blocks,
    const std::vector<IsotropySummand>& summands) {
  std::size_t roots = 0;
  for (const auto& s : summands) roots += s.roots.size();
  if (roots != blocks.size()) {
    throw DomainError("got " + std::to_string(blocks.size()) +
                      " blocks for " + std::to_string(roots) + " roots");
  }
  IntegrabilityReport report;
  std::size_t next = 0;
  for (std::size_t s = 0; s < summands.size(); ++s) {
    auto& types = report.types.emplace_back();
    bool complex = false, noncomplex = false;
    for (std::size_t r = 0; r < summands[s].roots.size(); ++r) {
      const BlockType type = blocks[next++].type;
      types.push_back(type);
      (is_complex_type(type) ? complex : noncomplex) = true;
    }
    if (complex && noncomplex) {
      report.passed = false;
      report.mixed.push_back(static_cast<int>(s) + 1);
    }
  }
  return report;
}

}  // namespace flagflux
