#include "flagflux/tduality.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagflux/errors.hpp"
#include "flagflux/linalg.hpp"

namespace flagflux {
namespace {

std::vector<bool> membership(int dim, const std::vector<int>& ideal) {
  std::vector<bool> in(dim + 1, false);
  for (int k : ideal) {
    if (k < 1 || k > dim) {
      throw DomainError("ideal index " + std::to_string(k) + " outside 1.." +
                        std::to_string(dim));
    }
    if (in[k]) {
      throw DomainError("ideal index " + std::to_string(k) + " repeated");
    }
    in[k] = true;
  }
  return in;
}

int ideal_legs(const IndexTuple& indices, const std::vector<bool>& in) {
  return static_cast<int>(
      std::count_if(indices.begin(), indices.end(), [&](int i) { return in[i]; }));
}

std::string slot(int k) { return "de^" + std::to_string(k); }

}  // namespace

AdmissibilityReport check_admissible(const AdmissibleTriple& triple) {
  const MalcevPresentation& g = triple.algebra;
  const auto in = membership(g.dim(), triple.ideal);
  if (triple.flux.degree() != 3) throw DomainError("flux must be a 3-form");
  if (triple.flux.max_index() > g.dim()) {
    throw DomainError("flux references e^" +
                      std::to_string(triple.flux.max_index()) +
                      " beyond the algebra dimension " +
                      std::to_string(g.dim()));
  }

  AdmissibilityReport report;
  for (int k = 1; k <= g.dim(); ++k) {
    for (const auto& [indices, c] : g.differential(k).terms()) {
      const int legs = ideal_legs(indices, in);
      if (legs > 0) report.central = false;
      if (legs > 0 && !in[k] && report.ideal) {
        report.ideal = false;
        report.messages.push_back("ideal: quotient differential " + slot(k) +
                                  " contains ideal legs");
      }
      if (legs == 2 && report.abelian) {
        report.abelian = false;
        report.messages.push_back("abelian: " + slot(k) +
                                  " has a term with both legs in the ideal");
      }
    }
  }
  if (!report.central) {
    report.messages.push_back("central: some differential has an ideal leg");
  }

  report.flux_differential = ce_diff(g, triple.flux);
  if (!report.flux_differential.is_zero()) {
    report.closed = false;
    report.messages.push_back("closed: dH = " +
                              print_form(report.flux_differential));
  }
  for (const auto& [indices, c] : triple.flux.terms()) {
    if (ideal_legs(indices, in) > 1) {
      report.degenerate = false;
      report.messages.push_back(
          "degenerate: H has a term with two ideal legs (" +
          print_form(Form::monomial(indices, c)) + ")");
      break;
    }
  }
  return report;
}

DualizationResult dualize(const AdmissibleTriple& triple) {
  const AdmissibilityReport report = check_admissible(triple);
  if (!report.admissible()) {
    std::string failed;
    for (const auto& message : report.messages) {
      if (message.rfind("central", 0) == 0) continue;
      if (!failed.empty()) failed += "; ";
      failed += message;
    }
    throw DomainError("triple is not admissible: " + failed);
  }

  const int n = triple.algebra.dim();
  const auto in = membership(n, triple.ideal);
  const int m = static_cast<int>(triple.ideal.size());
  const int q = n - m;

  DualizationResult result;
  result.ideal_dim = m;
  result.reorder.assign(n, 0);
  int next_quotient = 0, next_ideal = q;
  for (int k = 1; k <= n; ++k) {
    result.reorder[k - 1] = in[k] ? ++next_ideal : ++next_quotient;
  }
  const BasisChange relabel(result.reorder, std::vector<int>(n, 1));
  try {
    result.source.algebra = MalcevPresentation(relabel.apply(triple.algebra));
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("cannot move the ideal to trailing slots: ") +
                      e.what());
  }
  for (int k = q + 1; k <= n; ++k) result.source.ideal.push_back(k);
  result.source.flux = relabel.apply(triple.flux);

  const Form& flux = result.source.flux;
  for (const auto& [indices, c] : flux.terms()) {
    if (indices.back() <= q) result.basic_part.add_term(indices, c);
  }

  // Quotient slots keep their differentials; the slot of x_k now carries z_k
  // with dz_k = i_{x_k} H. Slot-stable, so ideal legs inside dx_k read as z.
  std::vector<Form> dual_differentials;
  Form dual_flux = result.basic_part;
  for (int k = 1; k <= n; ++k) {
    if (k <= q) {
      dual_differentials.push_back(result.source.algebra.differential(k));
      continue;
    }
    dual_differentials.push_back(interior(k, flux));
    dual_flux +=
        wedge(Form::covector(k), result.source.algebra.differential(k));
    result.slot_map.emplace_back(k, k);
  }
  result.dual.algebra = MalcevPresentation(std::move(dual_differentials));
  result.dual.ideal = result.source.ideal;
  result.dual.flux = std::move(dual_flux);
  return result;
}

CertificateReport duality_certificate(const DualizationResult& dual) {
  const AdmissibleTriple& source = dual.source;
  const int n = source.algebra.dim();
  const int m = dual.ideal_dim;
  const int q = n - m;
  const int c_dim = q + 2 * m;

  CertificateReport report;
  report.quotient_dim = q;
  report.ideal_dim = m;

  // y and x keep their source slots; z_k moves from slot q+k to q+m+k.
  std::vector<int> dual_to_c(n);
  for (int k = 1; k <= n; ++k) dual_to_c[k - 1] = k <= q ? k : k + m;
  auto lift_dual = [&](const Form& form) {
    Form out(form.degree());
    for (const auto& [indices, c] : form.terms()) {
      IndexTuple mapped;
      for (int i : indices) mapped.push_back(dual_to_c[i - 1]);
      out.add_term(std::move(mapped), c);
    }
    return out;
  };

  std::vector<Form> differentials;
  for (int k = 1; k <= n; ++k) {
    differentials.push_back(source.algebra.differential(k));
  }
  for (int k = q + 1; k <= n; ++k) {
    differentials.push_back(lift_dual(dual.dual.algebra.differential(k)));
  }
  report.correspondence = MalcevPresentation(std::move(differentials));
  const MalcevPresentation& c = report.correspondence;

  report.lhs = source.flux - lift_dual(dual.dual.flux);
  Form f0(2);
  for (int k = 1; k <= m; ++k) {
    f0.add_term({q + k, q + m + k}, kCorrespondenceFormSign);
  }
  report.form = f0;
  report.residual = report.lhs - ce_diff(c, f0);

  if (!report.residual.is_zero()) {
    report.corrected = true;
    Eliminator<IndexTuple> elim;
    std::vector<IndexTuple> pairs;
    for (int i = 1; i <= c_dim; ++i) {
      for (int j = i + 1; j <= c_dim; ++j) {
        elim.insert(ce_diff(c, Form::monomial({i, j})).terms(),
                    static_cast<int>(pairs.size()));
        pairs.push_back({i, j});
      }
    }
    auto solution = elim.solve(report.residual.terms());
    if (!solution) {
      report.message = "p*H - p'*H' - dF is not exact on the correspondence "
                       "algebra: " + print_form(report.residual);
      return report;
    }
    for (const auto& [id, coefficient] : *solution) {
      report.form.add_term(pairs[id], coefficient);
    }
    report.residual = report.lhs - ce_diff(c, report.form);
  }

  // F restricted to the fibre directions x, z must be non-degenerate.
  std::vector<SparseVector<int>> rows;
  for (int a = q + 1; a <= c_dim; ++a) {
    SparseVector<int> row;
    for (int b = q + 1; b <= c_dim; ++b) {
      if (a == b) continue;
      IndexTuple key{a, b};
      const int sign = sort_with_sign(key);
      const Rational value = report.form.coefficient(key);
      if (value != 0) row[b] = sign * value;
    }
    rows.push_back(std::move(row));
  }
  report.fibre_nondegenerate =
      rank_of(rows) == static_cast<std::size_t>(2 * m);
  report.passed = report.residual.is_zero() && report.fibre_nondegenerate;
  if (!report.passed) {
    report.message = report.fibre_nondegenerate
                         ? "residual " + print_form(report.residual)
                         : "F is degenerate on the fibres";
  }
  return report;
}

IsoResult triple_equivalence(const AdmissibleTriple& from,
                             const AdmissibleTriple& to, std::size_t budget) {
  if (from.ideal.size() != to.ideal.size() ||
      from.algebra.dim() != to.algebra.dim()) {
    IsoResult result;
    result.exhausted = true;
    result.fingerprints_differ = from.algebra.dim() != to.algebra.dim();
    return result;
  }
  IsoSearchOptions options;
  options.budget = budget;
  options.forms.emplace_back(from.flux, to.flux);
  options.source_set = from.ideal;
  options.target_set = to.ideal;
  return iso_small(from.algebra, to.algebra, options);
}

}  // namespace flagflux
