#pragma once

// Exact exterior algebra over a finite 1-based basis e^1..e^n, the
// Chevalley-Eilenberg differential of a nilpotent Lie algebra given in
// Malcev notation, and the text format for both.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flagflux {

using Rational = mpq_class;

/// Strictly increasing list of 1-based basis indices, e.g. {1,4,6} = e^{146}.
using IndexTuple = std::vector<int>;

/// Sorts `indices` in place and returns the sign of the sorting permutation,
/// or 0 when an index repeats.
int sort_with_sign(IndexTuple& indices);

/// Sparse exterior form of fixed degree with exact rational coefficients.
/// Stored keys are always strictly increasing and no coefficient is zero.
class Form {
 public:
  using TermMap = std::map<IndexTuple, Rational>;

  explicit Form(int degree = 0);

  /// coefficient * e^{indices}; unsorted indices pick up the permutation sign.
  static Form monomial(IndexTuple indices, const Rational& coefficient = 1);
  /// The covector e^index.
  static Form covector(int index);
  static Form scalar(const Rational& value);

  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Largest basis index referenced by any term (0 for the zero form).
  int max_index() const;
  Rational coefficient(const IndexTuple& sorted_indices) const;

  /// Adds coefficient * e^{indices}, normalizing unsorted input.
  void add_term(IndexTuple indices, const Rational& coefficient);

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Rational& factor);

  friend Form operator+(Form lhs, const Form& rhs) { return lhs += rhs; }
  friend Form operator-(Form lhs, const Form& rhs) { return lhs -= rhs; }
  friend Form operator*(const Rational& factor, Form form) {
    return form *= factor;
  }
  friend Form operator-(Form form) { return form *= Rational(-1); }
  friend bool operator==(const Form& lhs, const Form& rhs) {
    return lhs.degree_ == rhs.degree_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void require_same_degree(const Form& other) const;

  int degree_;
  TermMap terms_;
};

Form wedge(const Form& lhs, const Form& rhs);

/// Contraction with the basis vector e_index in the first slot.
Form interior(int index, const Form& form);

/// A nilpotent Lie algebra given by the differentials de^1..de^n of its dual
/// basis. Each de^k is a 2-form in e^1..e^{k-1}.
class MalcevPresentation {
 public:
  MalcevPresentation() = default;
  /// Throws std::invalid_argument when a differential is not a 2-form or
  /// references an index >= its own slot.
  explicit MalcevPresentation(std::vector<Form> differentials);

  static MalcevPresentation abelian(int dim);

  int dim() const noexcept { return static_cast<int>(differentials_.size()); }
  /// de^k for 1-based k.
  const Form& differential(int k) const { return differentials_.at(k - 1); }
  const std::vector<Form>& differentials() const noexcept {
    return differentials_;
  }
  bool is_abelian() const;

  friend bool operator==(const MalcevPresentation& lhs,
                         const MalcevPresentation& rhs) {
    return lhs.differentials_ == rhs.differentials_;
  }

 private:
  std::vector<Form> differentials_;
};

/// Chevalley-Eilenberg differential, extended from de^k to all degrees as an
/// antiderivation.
Form ce_diff(const MalcevPresentation& algebra, const Form& form);

/// Bracket coefficients read off the differentials:
/// [e_i, e_j] = sum_k c_k e_k with c_k = -(coefficient of e^{ij} in de^k).
std::map<int, Rational> bracket(const MalcevPresentation& algebra, int i,
                                int j);

// --- text format ----------------------------------------------------------

/// Parses "(0,0,-e^{12})". When `declared_dim` exceeds the number of listed
/// entries, the listed entries are taken as the trailing ones and the rest
/// are zero. Throws ParseError.
MalcevPresentation parse_malcev(std::string_view text,
                                std::optional<int> declared_dim = {});

/// Parses a signed sum of terms such as "-e^{146}+e^{356}" or "0".
/// `degree` is required so that "0" has a well-defined degree; when
/// `max_index` is given, larger indices are rejected.
Form parse_form(std::string_view text, int degree,
                std::optional<int> max_index = {});

std::string print_form(const Form& form);
std::string print_malcev(const MalcevPresentation& algebra);

}  // namespace flagflux
