#pragma once

// The flowing-flags pipeline: nilradical, dualization along a chosen
// abelian ideal, and the search for type-A parabolics whose nilradical is
// the dual algebra. Also the special families (self-dual flux, three
// isotropy summands) and the dimension count ruling out type D.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagflux/exterior.hpp"
#include "flagflux/isomorphism.hpp"
#include "flagflux/nilradical.hpp"
#include "flagflux/rootsys.hpp"
#include "flagflux/tduality.hpp"

namespace flagflux {

inline constexpr int kDefaultRankBound = 13;

struct FlowingFlag {
  FlagSpec spec;
  Form flux{3};  // over the nilradical basis
};

struct TargetCandidate {
  FlagSpec spec;
  /// Carries the candidate's nilradical onto the dual algebra.
  BasisChange witness;
  std::string pretty_name;
  int flag_dim = 0;
};

struct TargetSearch {
  std::vector<TargetCandidate> targets;
  int candidates = 0;          // flags of the right dimension, up to symmetry
  int fingerprint_matches = 0;
  int inconclusive = 0;        // fingerprint matched, search ran out of budget
};

/// All type-A flags SL(N)/P with N-1 <= rank_bound whose nilradical is
/// isomorphic to `algebra`. Flags related by the diagram automorphism are
/// listed once (the one with the larger leading block).
TargetSearch find_targets(const MalcevPresentation& algebra, int rank_bound);

struct CorrespondenceResult {
  FlowingFlag source;
  Nilradical nilradical;
  std::vector<int> ideal;
  DualizationResult dual;
  CertificateReport certificate;
  int rank_bound = kDefaultRankBound;
  TargetSearch search;
  /// Why the target list is empty; blank otherwise.
  std::string reason;
};

/// Throws DomainError for a bad rank bound, an ideal that is not admissible,
/// or a flux outside the nilradical.
CorrespondenceResult correspond(const FlowingFlag& flag,
                                const std::vector<int>& ideal,
                                int rank_bound = kDefaultRankBound);

struct SelfDualReport {
  FlagSpec spec;
  std::vector<int> ideal;  // the highest-root slot
  Form flux{3};
  AdmissibilityReport admissibility;
  std::optional<DualizationResult> dual;
  /// Unset when the triple is not admissible and the question is moot.
  std::optional<bool> selfdual;
  std::optional<BasisChange> witness;
  std::string note;
};

/// H = -(de^l) ^ e^l on the maximal flag, with e_l spanning the highest
/// root. Throws DomainError unless Theta is empty.
SelfDualReport selfdual_flux(const FlagSpec& spec);

struct ThreeSummandReport {
  int l = 0, m = 0, n = 0;
  SummandDims dims;
  CorrespondenceResult result;
  bool dual_abelian = false;
  bool flux_nonzero = false;
  /// CP^{d1+d2+d3} among the targets.
  bool projective_target = false;

  bool holds() const { return dual_abelian && flux_nonzero && projective_target; }
};

/// Runs correspond on SU(l+m+n)/S(U(l)xU(m)xU(n)) with H = 0 and the third
/// summand as ideal.
ThreeSummandReport three_summand_correspond(int l, int m, int n,
                                            int rank_bound);

/// Complex dimension of the D_n flag with two height-one roots removed.
std::int64_t d_flag_dimension(std::int64_t n);
/// Complex dimension of SO(2l)/U(1)xU(l-1).
std::int64_t d_hermitian_dimension(std::int64_t l);

struct ObstructionReport {
  std::int64_t max = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> dl_solutions;  // (n, l)
  int e6_flag_dim = 0;
  int e6_hermitian_dim = 0;
  bool e6_check = false;  // the two dimensions differ
};

/// Throws DomainError when max < 4.
ObstructionReport dimension_obstruction_scan(std::int64_t max);

}  // namespace flagflux
