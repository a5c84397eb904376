#pragma once

// Infinitesimal T-duality of admissible triples (g, a, H): the dual triple,
// the correspondence-space certificate p*H - p'*H' = dF, and the
// equivalence test used for involution and self-duality checks.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagflux/exterior.hpp"
#include "flagflux/isomorphism.hpp"

namespace flagflux {

struct AdmissibleTriple {
  MalcevPresentation algebra;
  std::vector<int> ideal;  // 1-based slots spanning the abelian ideal a
  Form flux{3};            // H
};

struct AdmissibilityReport {
  bool ideal = true;
  bool abelian = true;
  bool central = true;
  bool closed = true;
  bool degenerate = true;
  std::vector<std::string> messages;  // one per failed flag
  Form flux_differential{4};          // dH

  /// The flags dualize() needs; centrality is reported but not required.
  bool admissible() const { return ideal && abelian && closed && degenerate; }
};

/// Evaluates every flag independently. Throws DomainError when the ideal
/// indices are out of range or the flux is not a 3-form on the algebra.
AdmissibilityReport check_admissible(const AdmissibleTriple& triple);

struct DualizationResult {
  /// The input with its ideal moved to the trailing slots.
  AdmissibleTriple source;
  AdmissibleTriple dual;
  int ideal_dim = 0;
  /// reorder[k-1] = slot of original basis vector k in `source`.
  std::vector<int> reorder;
  /// (x slot, z slot) pairs; slot-stable, so both coincide.
  std::vector<std::pair<int, int>> slot_map;
  /// Terms of H without ideal legs.
  Form basic_part{3};
};

/// Throws DomainError naming the failed flag when the triple is not
/// admissible.
DualizationResult dualize(const AdmissibleTriple& triple);

/// Sign s in F = s * sum_k x^k ^ z^k, fixed by the SL(3) example.
inline constexpr int kCorrespondenceFormSign = -1;

struct CertificateReport {
  bool passed = false;
  /// The correspondence algebra c on slots (y_1..y_q, x_1..x_m, z_1..z_m).
  MalcevPresentation correspondence;
  int quotient_dim = 0;
  int ideal_dim = 0;
  Form lhs{3};       // p*H - p'*H'
  Form form{2};      // F
  Form residual{3};  // lhs - dF
  /// True when the standard F left a residual and a correction G with
  /// dG = residual had to be solved for.
  bool corrected = false;
  bool fibre_nondegenerate = false;
  std::string message;
};

CertificateReport duality_certificate(const DualizationResult& dual);

/// Witness that two triples agree up to a signed permutation carrying
/// algebra onto algebra, ideal into ideal and flux onto flux.
IsoResult triple_equivalence(const AdmissibleTriple& from,
                             const AdmissibleTriple& to,
                             std::size_t budget = 1'000'000);

}  // namespace flagflux
