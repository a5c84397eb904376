#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flagflux/exterior.hpp"
#include "flagflux/rootsys.hpp"

namespace flagflux {

/// Structure constants of the strictly upper-triangular matrices of size
/// rank+1 in the matrix-unit basis: [E_ij, E_kl] = d_jk E_il - d_li E_kj.
class WeylConstants {
 public:
  struct Term {
    int coefficient;
    std::pair<int, int> unit;
  };

  explicit WeylConstants(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  /// Bracket of two upper-triangular matrix units; empty when zero.
  std::optional<Term> bracket(std::pair<int, int> a,
                              std::pair<int, int> b) const;

 private:
  int rank_;
};

struct BasisEntry {
  int index;           // 1-based slot in the presentation
  Root root;
  int summand;         // 1-based isotropy summand
  std::pair<int, int> unit;
};

struct Nilradical {
  FlagSpec spec;
  MalcevPresentation presentation;
  std::vector<BasisEntry> legend;
  std::vector<IsotropySummand> summands;

  /// Slots (1-based) spanned by summand `s` (1-based).
  std::vector<int> summand_slots(int s) const;
};

/// Malcev presentation of the nilradical of p_Theta. The basis lists the
/// complementary positive roots summand by summand; de^k(X,Y) = -e^k([X,Y]).
Nilradical nilradical_presentation(const FlagSpec& spec);

struct JacobiReport {
  bool passed = true;
  std::optional<int> first_failure;  // smallest k with d(de^k) != 0
  Form residual{3};                  // d(de^k) at that k
};

JacobiReport jacobi_check(const MalcevPresentation& algebra);

}  // namespace flagflux
