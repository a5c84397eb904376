#include "flagflux/correspond.hpp"

#include <algorithm>
#include <cmath>

#include "flagflux/errors.hpp"

namespace flagflux {
namespace {

// Compositions of `total` whose pairwise block products sum to `pairs`;
// exactly the block structures of flags of complex dimension `pairs`.
void compositions(int total, int pairs, std::vector<int>& prefix, int used,
                  int prefix_pairs, std::vector<std::vector<int>>& out) {
  if (used == total) {
    if (prefix_pairs == pairs) out.push_back(prefix);
    return;
  }
  for (int part = 1; used + part <= total; ++part) {
    const int next = prefix_pairs + used * part;
    if (next > pairs) break;
    prefix.push_back(part);
    compositions(total, pairs, prefix, used + part, next, out);
    prefix.pop_back();
  }
}

bool canonical_under_flip(const std::vector<int>& blocks) {
  return !std::lexicographical_compare(blocks.begin(), blocks.end(),
                                       blocks.rbegin(), blocks.rend());
}

std::string empty_reason(const TargetSearch& search, int dim,
                         int rank_bound) {
  const std::string bound = " up to rank " + std::to_string(rank_bound);
  if (search.candidates == 0) {
    return "no type-A flag of complex dimension " + std::to_string(dim) +
           bound;
  }
  if (search.inconclusive > 0) {
    return std::to_string(search.inconclusive) +
           " candidate(s) share every invariant with the dual algebra but no "
           "signed-permutation isomorphism was found within budget";
  }
  std::string reason = "no target" + bound + ": all " +
                       std::to_string(search.candidates) +
                       " type-A flags of complex dimension " +
                       std::to_string(dim) + " have nilradicals ";
  if (search.fingerprint_matches == 0) {
    reason += "whose invariants (lower central series, derived series, "
              "center, ranks of d) differ from those of the dual algebra";
  } else {
    reason += "not isomorphic to the dual algebra (exhaustive search)";
  }
  return reason;
}

}  // namespace

TargetSearch find_targets(const MalcevPresentation& algebra, int rank_bound) {
  if (rank_bound < 1) throw DomainError("rank bound must be at least 1");
  TargetSearch search;
  const int dim = algebra.dim();
  if (dim == 0) return search;
  const Fingerprint wanted = fingerprint(algebra);

  for (int n = 2; n <= rank_bound + 1; ++n) {
    std::vector<std::vector<int>> found;
    std::vector<int> prefix;
    compositions(n, dim, prefix, 0, 0, found);
    // Reverse lexicographic order lists the larger leading block first.
    std::sort(found.rbegin(), found.rend());
    for (const auto& blocks : found) {
      if (!canonical_under_flip(blocks)) continue;
      ++search.candidates;
      const FlagSpec spec = spec_from_blocks(blocks);
      const Nilradical nil = nilradical_presentation(spec);
      if (fingerprint(nil.presentation) != wanted) continue;
      ++search.fingerprint_matches;
      const IsoResult iso = iso_small(nil.presentation, algebra);
      if (!iso.witness) {
        if (!iso.exhausted) ++search.inconclusive;
        continue;
      }
      search.targets.push_back(
          {spec, *iso.witness, pretty_name(spec), flag_dimension(spec)});
    }
  }
  return search;
}

CorrespondenceResult correspond(const FlowingFlag& flag,
                                const std::vector<int>& ideal,
                                int rank_bound) {
  if (rank_bound < 1) throw DomainError("rank bound must be at least 1");
  CorrespondenceResult result;
  result.source = flag;
  result.source.spec.validate();
  result.nilradical = nilradical_presentation(result.source.spec);
  result.ideal = ideal;
  std::sort(result.ideal.begin(), result.ideal.end());
  result.rank_bound = rank_bound;

  AdmissibleTriple triple{result.nilradical.presentation, result.ideal,
                          flag.flux};
  result.dual = dualize(triple);
  result.certificate = duality_certificate(result.dual);
  result.search = find_targets(result.dual.dual.algebra, rank_bound);
  if (result.search.targets.empty()) {
    result.reason = empty_reason(result.search,
                                 result.dual.dual.algebra.dim(), rank_bound);
  }
  return result;
}

SelfDualReport selfdual_flux(const FlagSpec& input) {
  SelfDualReport report;
  report.spec = input;
  report.spec.validate();
  if (!report.spec.theta.empty()) {
    throw DomainError("the self-dual flux is defined on the maximal flag "
                      "(empty theta) only");
  }
  const Nilradical nil = nilradical_presentation(report.spec);
  const int top = nil.presentation.dim();
  report.ideal = {top};
  report.flux =
      -wedge(nil.presentation.differential(top), Form::covector(top));

  const AdmissibleTriple triple{nil.presentation, report.ideal, report.flux};
  report.admissibility = check_admissible(triple);
  if (!report.admissibility.admissible()) {
    report.note = report.admissibility.closed
                      ? "(n, a, H) is not admissible; self-duality is undecided"
                      : "dH = " +
                            print_form(report.admissibility.flux_differential) +
                            " is nonzero, so (n, a, H) is not admissible and "
                            "self-duality is undecided";
    return report;
  }
  report.dual = dualize(triple);
  const IsoResult iso = triple_equivalence(report.dual->source,
                                           report.dual->dual);
  if (iso.witness) {
    report.selfdual = true;
    report.witness = iso.witness;
  } else if (iso.exhausted) {
    report.selfdual = false;
  } else {
    report.note = "search budget exhausted before a witness was found";
  }
  return report;
}

ThreeSummandReport three_summand_correspond(int l, int m, int n,
                                            int rank_bound) {
  if (l < 1 || m < 1 || n < 1) {
    throw DomainError("block sizes l, m, n must be positive");
  }
  ThreeSummandReport report;
  report.l = l;
  report.m = m;
  report.n = n;
  report.dims = three_summand_dims(l, m, n);

  FlowingFlag flag{three_summand_spec(l, m, n), Form(3)};
  const Nilradical nil = nilradical_presentation(flag.spec);
  report.result = correspond(flag, nil.summand_slots(3), rank_bound);

  const int total = report.dims.d1 + report.dims.d2 + report.dims.d3;
  report.dual_abelian = report.result.dual.dual.algebra.is_abelian() &&
                        report.result.dual.dual.algebra.dim() == total;
  report.flux_nonzero = !report.result.dual.dual.flux.is_zero();
  const FlagSpec projective = spec_from_blocks({total, 1});
  report.projective_target = std::any_of(
      report.result.search.targets.begin(), report.result.search.targets.end(),
      [&](const TargetCandidate& t) { return t.spec == projective; });
  return report;
}

std::int64_t d_flag_dimension(std::int64_t n) { return (n * n + n - 2) / 2; }

std::int64_t d_hermitian_dimension(std::int64_t l) { return (l * l - l) / 2; }

ObstructionReport dimension_obstruction_scan(std::int64_t max) {
  if (max < 4) throw DomainError("scan bound must be at least 4");
  ObstructionReport report;
  report.max = max;
  // n^2 + n - 2 = l^2 - l  <=>  (2l - 1)^2 = (2n + 1)^2 - 8
  for (std::int64_t n = 4; n <= max; ++n) {
    const std::int64_t target = (2 * n + 1) * (2 * n + 1) - 8;
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(target)));
    while (root * root > target) --root;
    while ((root + 1) * (root + 1) <= target) ++root;
    if (root * root != target || root % 2 == 0) continue;
    const std::int64_t l = (root + 1) / 2;
    if (l >= 2 && l <= max) report.dl_solutions.emplace_back(n, l);
  }
  // E6 / SO(8)xU(1)xU(1): isotropy summands of real dims 16, 16, 16.
  // E6 / SO(10)xSO(2): dim E6 - dim SO(10) - dim SO(2), halved.
  report.e6_flag_dim = (16 + 16 + 16) / 2;
  report.e6_hermitian_dim = (78 - 45 - 1) / 2;
  report.e6_check = report.e6_flag_dim != report.e6_hermitian_dim;
  return report;
}

}  // namespace flagflux
