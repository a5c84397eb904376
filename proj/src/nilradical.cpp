#include "flagflux/nilradical.hpp"

#include <map>

namespace flagflux {

std::optional<WeylConstants::Term> WeylConstants::bracket(
    std::pair<int, int> a, std::pair<int, int> b) const {
  const auto [i, j] = a;
  const auto [k, l] = b;
  if (j == k) return Term{1, {i, l}};
  if (l == i) return Term{-1, {k, j}};
  return std::nullopt;
}

std::vector<int> Nilradical::summand_slots(int s) const {
  std::vector<int> slots;
  for (const BasisEntry& entry : legend) {
    if (entry.summand == s) slots.push_back(entry.index);
  }
  return slots;
}

Nilradical nilradical_presentation(const FlagSpec& input) {
  FlagSpec spec = input;
  spec.validate();
  const RootSystem roots = build_root_system(spec.series, spec.rank);

  Nilradical result{spec, {}, {}, isotropy_summands(roots, spec.theta)};
  std::map<std::pair<int, int>, int> slot_of_unit;
  int slot = 0;
  for (std::size_t s = 0; s < result.summands.size(); ++s) {
    for (const Root& root : result.summands[s].roots) {
      ++slot;
      result.legend.push_back(
          {slot, root, static_cast<int>(s) + 1, root.matrix_unit()});
      slot_of_unit[root.matrix_unit()] = slot;
    }
  }

  const WeylConstants constants(spec.rank);
  std::vector<Form> differentials(slot, Form(2));
  for (int a = 1; a <= slot; ++a) {
    for (int b = a + 1; b <= slot; ++b) {
      auto term = constants.bracket(result.legend[a - 1].unit,
                                    result.legend[b - 1].unit);
      if (!term) continue;
      // [e_a, e_b] = c e_k  =>  de^k gets -c e^{ab}
      const int k = slot_of_unit.at(term->unit);
      differentials[k - 1].add_term({a, b}, -term->coefficient);
    }
  }
  result.presentation = MalcevPresentation(std::move(differentials));
  return result;
}

JacobiReport jacobi_check(const MalcevPresentation& algebra) {
  JacobiReport report;
  for (int k = 1; k <= algebra.dim(); ++k) {
    Form dd = ce_diff(algebra, algebra.differential(k));
    if (!dd.is_zero()) {
      report.passed = false;
      report.first_failure = k;
      report.residual = std::move(dd);
      return report;
    }
  }
  return report;
}

}  // namespace flagflux
