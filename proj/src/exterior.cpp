#include "flagflux/exterior.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace flagflux {

int sort_with_sign(IndexTuple& indices) {
  int sign = 1;
  // insertion sort; tuples are short
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] == indices[i - 1]) return 0;
  }
  return sign;
}

Form::Form(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
}

Form Form::monomial(IndexTuple indices, const Rational& coefficient) {
  Form form(static_cast<int>(indices.size()));
  form.add_term(std::move(indices), coefficient);
  return form;
}

Form Form::covector(int index) { return monomial({index}); }

Form Form::scalar(const Rational& value) { return monomial({}, value); }

int Form::max_index() const {
  int result = 0;
  for (const auto& [indices, coefficient] : terms_) {
    if (!indices.empty()) result = std::max(result, indices.back());
  }
  return result;
}

Rational Form::coefficient(const IndexTuple& sorted_indices) const {
  auto it = terms_.find(sorted_indices);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(IndexTuple indices, const Rational& coefficient) {
  if (static_cast<int>(indices.size()) != degree_) {
    throw std::invalid_argument("term of degree " +
                                std::to_string(indices.size()) +
                                " added to a " + std::to_string(degree_) +
                                "-form");
  }
  for (int index : indices) {
    if (index < 1) throw std::invalid_argument("basis indices are 1-based");
  }
  if (coefficient == 0) return;
  const int sign = sort_with_sign(indices);
  if (sign == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(indices), 0);
  it->second += sign * coefficient;
  if (it->second == 0) terms_.erase(it);
}

void Form::require_same_degree(const Form& other) const {
  if (degree_ != other.degree_) {
    throw std::invalid_argument("cannot add a " + std::to_string(degree_) +
                                "-form and a " +
                                std::to_string(other.degree_) + "-form");
  }
}

Form& Form::operator+=(const Form& other) {
  require_same_degree(other);
  for (const auto& [indices, coefficient] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(indices, 0);
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Form& Form::operator-=(const Form& other) {
  require_same_degree(other);
  for (const auto& [indices, coefficient] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(indices, 0);
    it->second -= coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Form& Form::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [indices, coefficient] : terms_) coefficient *= factor;
  return *this;
}

Form wedge(const Form& lhs, const Form& rhs) {
  Form result(lhs.degree() + rhs.degree());
  IndexTuple merged;
  for (const auto& [left, a] : lhs.terms()) {
    for (const auto& [right, b] : rhs.terms()) {
      merged = left;
      merged.insert(merged.end(), right.begin(), right.end());
      result.add_term(merged, a * b);
    }
  }
  return result;
}

Form interior(int index, const Form& form) {
  if (form.degree() == 0) return Form(0);
  Form result(form.degree() - 1);
  for (const auto& [indices, coefficient] : form.terms()) {
    auto it = std::find(indices.begin(), indices.end(), index);
    if (it == indices.end()) continue;
    const auto position = it - indices.begin();
    IndexTuple rest(indices.begin(), it);
    rest.insert(rest.end(), it + 1, indices.end());
    result.add_term(std::move(rest),
                    position % 2 == 0 ? coefficient : Rational(-coefficient));
  }
  return result;
}

MalcevPresentation::MalcevPresentation(std::vector<Form> differentials)
    : differentials_(std::move(differentials)) {
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    const Form& d = differentials_[k];
    if (d.degree() != 2) {
      throw std::invalid_argument("de^" + std::to_string(k + 1) +
                                  " is not a 2-form");
    }
    if (d.max_index() > static_cast<int>(k)) {
      throw std::invalid_argument(
          "de^" + std::to_string(k + 1) + " references e^" +
          std::to_string(d.max_index()) +
          "; differentials may only use earlier indices");
    }
  }
}

MalcevPresentation MalcevPresentation::abelian(int dim) {
  return MalcevPresentation(std::vector<Form>(dim, Form(2)));
}

bool MalcevPresentation::is_abelian() const {
  return std::all_of(differentials_.begin(), differentials_.end(),
                     [](const Form& d) { return d.is_zero(); });
}

Form ce_diff(const MalcevPresentation& algebra, const Form& form) {
  Form result(form.degree() + 1);
  for (const auto& [indices, coefficient] : form.terms()) {
    // d(e^{i1}...e^{ik}) = sum_j (-1)^j e^{i1..i(j-1)} de^{ij} e^{i(j+1)..ik}
    for (std::size_t j = 0; j < indices.size(); ++j) {
      if (indices[j] > algebra.dim()) {
        throw std::invalid_argument("form references e^" +
                                    std::to_string(indices[j]) +
                                    " beyond the algebra dimension");
      }
      const Form& d = algebra.differential(indices[j]);
      if (d.is_zero()) continue;
      Form before = Form::monomial(
          IndexTuple(indices.begin(), indices.begin() + j), coefficient);
      Form after =
          Form::monomial(IndexTuple(indices.begin() + j + 1, indices.end()));
      Form piece = wedge(wedge(before, d), after);
      if (j % 2 == 1) piece *= Rational(-1);
      result += piece;
    }
  }
  return result;
}

std::map<int, Rational> bracket(const MalcevPresentation& algebra, int i,
                                int j) {
  std::map<int, Rational> result;
  if (i == j) return result;
  IndexTuple key{i, j};
  const int sign = sort_with_sign(key);
  for (int k = 1; k <= algebra.dim(); ++k) {
    Rational c = algebra.differential(k).coefficient(key);
    if (c != 0) result[k] = -sign * c;
  }
  return result;
}

}  // namespace flagflux
