#pragma once

// Root data for series A: positive roots as coefficient vectors over the
// simple roots, the complementary roots of a parabolic p_Theta and the
// isotropy summands of the corresponding flag manifold.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagflux {

struct Root {
  /// Coefficient of each simple root alpha_1..alpha_l.
  std::vector<int> coeffs;

  int height() const;
  /// Coefficient of alpha_p, 1-based.
  int height_at(int p) const { return coeffs.at(p - 1); }
  /// Matrix unit E_{ij} (1-based, i<j) spanning this root space in sl(l+1).
  std::pair<int, int> matrix_unit() const;

  friend bool operator==(const Root&, const Root&) = default;
};

/// alpha_i + ... + alpha_{j-1}, the root of the matrix unit E_{ij}.
Root root_of_matrix_unit(int rank, int i, int j);

struct RootSystem {
  std::string series;
  int rank = 0;
  /// Ordered by height, then by the starting simple root.
  std::vector<Root> positive_roots;
};

RootSystem build_root_system(std::string_view series, int rank);

/// A flag manifold G/P_Theta: the series, rank and the 1-based indices of
/// the simple roots in Theta.
struct FlagSpec {
  std::string series = "A";
  int rank = 1;
  std::vector<int> theta;

  /// Throws DomainError for unsupported series, rank < 1, or bad theta.
  /// Sorts and deduplicates theta.
  FlagSpec& validate();
  /// Simple roots not in Theta, ascending.
  std::vector<int> complement() const;

  friend bool operator==(const FlagSpec&, const FlagSpec&) = default;
};

std::vector<Root> complementary_positive_roots(const RootSystem& roots,
                                               const std::vector<int>& theta);

struct IsotropySummand {
  /// Coefficients of a root on the simple roots outside Theta.
  std::vector<int> signature;
  std::vector<Root> roots;

  int dim() const { return static_cast<int>(roots.size()); }
};

/// Partition of the complementary positive roots by signature. Summands are
/// ordered by total signature height, ties broken by descending lexicographic
/// signature (so (1,0) precedes (0,1)); roots keep the root-system order.
std::vector<IsotropySummand> isotropy_summands(const RootSystem& roots,
                                               const std::vector<int>& theta);

struct SummandDims {
  int d1 = 0, d2 = 0, d3 = 0;
  friend bool operator==(const SummandDims&, const SummandDims&) = default;
};

/// Complex dimensions of the three summands of
/// SU(l+m+n)/S(U(l)xU(m)xU(n)), found by counting roots.
SummandDims three_summand_dims(int l, int m, int n);

/// The Theta of the three-summand flag SU(l+m+n)/S(U(l)xU(m)xU(n)).
FlagSpec three_summand_spec(int l, int m, int n);

/// Sizes of the diagonal blocks of the Levi factor: the flag
/// SL(N)/P_Theta is SU(N)/S(U(n1) x ... x U(nk)).
std::vector<int> block_sizes(const FlagSpec& spec);
/// Complex dimension |Pi_M^+| of the flag.
int flag_dimension(const FlagSpec& spec);
/// "SU(7)/S(U(6)×U(1)) ≅ CP^6" style name.
std::string pretty_name(const FlagSpec& spec);
/// FlagSpec with the given Levi block sizes (a composition of rank+1).
FlagSpec spec_from_blocks(const std::vector<int>& blocks);

}  // namespace flagflux
