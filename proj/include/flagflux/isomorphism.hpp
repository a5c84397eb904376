#pragma once

// Bounded isomorphism search between small nilpotent Lie algebras, and the
// invariants used to rule isomorphisms out.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagflux/exterior.hpp"

namespace flagflux {

/// Signed permutation of a basis: e_k -> sign[k] * f_{target[k]}. On dual
/// covectors it acts the same way, e^k -> sign[k] * f^{target[k]}.
class BasisChange {
 public:
  BasisChange() = default;
  BasisChange(std::vector<int> targets, std::vector<int> signs);
  static BasisChange identity(int dim);

  int dim() const { return static_cast<int>(targets_.size()); }
  int target(int k) const { return targets_.at(k - 1); }
  int sign(int k) const { return signs_.at(k - 1); }
  bool is_identity() const;

  Form apply(const Form& form) const;
  /// Differentials of the image algebra, indexed by target slot. The result
  /// need not respect the slot filtration, hence a plain vector.
  std::vector<Form> apply(const MalcevPresentation& algebra) const;
  BasisChange inverse() const;

  /// Dense matrix: column k has sign(k) in row target(k).
  std::vector<std::vector<int>> matrix() const;
  /// "e3 ↦ -e3" for every non-identity entry; "identity" otherwise.
  std::string describe() const;

  friend bool operator==(const BasisChange&, const BasisChange&) = default;

 private:
  std::vector<int> targets_;
  std::vector<int> signs_;
};

struct Fingerprint {
  int dim = 0;
  std::vector<int> lower_central;  // dims of g, [g,g], [g,[g,g]], ... to 0
  std::vector<int> derived;        // dims of g, g', g'', ... to 0
  int center = 0;
  std::vector<int> d_ranks;        // rank of d on degree 1 and 2 forms

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const MalcevPresentation& algebra);

struct IsoSearchOptions {
  std::size_t budget = 1'000'000;  // search nodes
  /// Pairs (f, g) that the witness must also carry onto each other.
  std::vector<std::pair<Form, Form>> forms;
  /// Slots of the source that must land inside `target_set`.
  std::vector<int> source_set;
  std::vector<int> target_set;
};

struct IsoResult {
  std::optional<BasisChange> witness;
  bool exhausted = false;  // search completed within budget
  std::size_t nodes = 0;
  bool fingerprints_differ = false;  // proves non-isomorphism
};

/// Searches signed permutations (respecting the differential-depth
/// filtration) mapping `from` onto `to`. A missing witness with
/// fingerprints_differ == false is inconclusive.
IsoResult iso_small(const MalcevPresentation& from,
                    const MalcevPresentation& to,
                    const IsoSearchOptions& options = {});

}  // namespace flagflux
