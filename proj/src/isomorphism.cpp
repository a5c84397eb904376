#include "flagflux/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "flagflux/linalg.hpp"

namespace flagflux {

BasisChange::BasisChange(std::vector<int> targets, std::vector<int> signs)
    : targets_(std::move(targets)), signs_(std::move(signs)) {
  if (targets_.size() != signs_.size()) {
    throw std::invalid_argument("basis change: size mismatch");
  }
  std::vector<int> sorted = targets_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument("basis change: targets are not a permutation");
    }
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("basis change: signs must be +1 or -1");
    }
  }
}

BasisChange BasisChange::identity(int dim) {
  std::vector<int> targets(dim);
  for (int k = 0; k < dim; ++k) targets[k] = k + 1;
  return BasisChange(std::move(targets), std::vector<int>(dim, 1));
}

bool BasisChange::is_identity() const { return *this == identity(dim()); }

Form BasisChange::apply(const Form& form) const {
  Form image(form.degree());
  for (const auto& [indices, coefficient] : form.terms()) {
    IndexTuple mapped;
    mapped.reserve(indices.size());
    int sign = 1;
    for (int index : indices) {
      mapped.push_back(target(index));
      sign *= this->sign(index);
    }
    image.add_term(std::move(mapped), sign * coefficient);
  }
  return image;
}

std::vector<Form> BasisChange::apply(const MalcevPresentation& algebra) const {
  if (algebra.dim() != dim()) {
    throw std::invalid_argument("basis change: dimension mismatch");
  }
  std::vector<Form> image(dim(), Form(2));
  for (int k = 1; k <= dim(); ++k) {
    // d(s_k f^{t(k)}) = T(de^k)
    image[target(k) - 1] = Rational(sign(k)) * apply(algebra.differential(k));
  }
  return image;
}

BasisChange BasisChange::inverse() const {
  std::vector<int> targets(dim()), signs(dim());
  for (int k = 1; k <= dim(); ++k) {
    targets[target(k) - 1] = k;
    signs[target(k) - 1] = sign(k);
  }
  return BasisChange(std::move(targets), std::move(signs));
}

std::vector<std::vector<int>> BasisChange::matrix() const {
  std::vector<std::vector<int>> m(dim(), std::vector<int>(dim(), 0));
  for (int k = 1; k <= dim(); ++k) m[target(k) - 1][k - 1] = sign(k);
  return m;
}

std::string BasisChange::describe() const {
  std::string out;
  for (int k = 1; k <= dim(); ++k) {
    if (target(k) == k && sign(k) == 1) continue;
    if (!out.empty()) out += ", ";
    out += "e" + std::to_string(k) + " ↦ " + (sign(k) < 0 ? "-" : "") + "e" +
           std::to_string(target(k));
  }
  return out.empty() ? "identity" : out;
}

// --- invariants -----------------------------------------------------------

namespace {

using Vec = SparseVector<int>;

class BracketTable {
 public:
  explicit BracketTable(const MalcevPresentation& algebra)
      : n_(algebra.dim()), table_(n_ * n_) {
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        for (const auto& [k, c] : bracket(algebra, i, j)) at(i, j)[k] = c;
      }
    }
  }

  Vec bracket_vectors(const Vec& u, const Vec& v) const {
    Vec out;
    for (const auto& [i, a] : u) {
      for (const auto& [j, b] : v) axpy(out, a * b, at(i, j));
    }
    return out;
  }

  const Vec& at(int i, int j) const { return table_[(i - 1) * n_ + j - 1]; }
  int dim() const { return n_; }

 private:
  Vec& at(int i, int j) { return table_[(i - 1) * n_ + j - 1]; }

  int n_;
  std::vector<Vec> table_;
};

std::vector<Vec> span_basis(const std::vector<Vec>& generators) {
  Eliminator<int> elim;
  std::vector<Vec> basis;
  int id = 0;
  for (const Vec& g : generators) {
    if (g.empty()) continue;
    if (!elim.insert(g, id++)) basis.push_back(g);
  }
  return basis;
}

std::vector<Vec> unit_basis(int n) {
  std::vector<Vec> out;
  for (int k = 1; k <= n; ++k) out.push_back({{k, 1}});
  return out;
}

}  // namespace

Fingerprint fingerprint(const MalcevPresentation& algebra) {
  const int n = algebra.dim();
  const BracketTable table(algebra);
  Fingerprint fp;
  fp.dim = n;

  std::vector<Vec> current = unit_basis(n);
  fp.lower_central.push_back(n);
  while (!current.empty()) {
    std::vector<Vec> generators;
    for (int a = 1; a <= n; ++a) {
      for (const Vec& v : current) {
        generators.push_back(table.bracket_vectors({{a, 1}}, v));
      }
    }
    auto next = span_basis(generators);
    if (next.size() == current.size()) break;  // not nilpotent
    current = std::move(next);
    fp.lower_central.push_back(static_cast<int>(current.size()));
  }

  current = unit_basis(n);
  fp.derived.push_back(n);
  while (!current.empty()) {
    std::vector<Vec> generators;
    for (std::size_t a = 0; a < current.size(); ++a) {
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        generators.push_back(table.bracket_vectors(current[a], current[b]));
      }
    }
    auto next = span_basis(generators);
    if (next.size() == current.size()) break;
    current = std::move(next);
    fp.derived.push_back(static_cast<int>(current.size()));
  }

  std::vector<Vec> ad_images;
  for (int i = 1; i <= n; ++i) {
    Vec image;
    for (int j = 1; j <= n; ++j) {
      for (const auto& [k, c] : table.at(i, j)) image[j * (n + 1) + k] = c;
    }
    ad_images.push_back(std::move(image));
  }
  fp.center = static_cast<int>(kernel_of(ad_images).size());

  std::vector<Form::TermMap> degree1, degree2;
  for (int k = 1; k <= n; ++k) {
    degree1.push_back(algebra.differential(k).terms());
    for (int l = k + 1; l <= n; ++l) {
      degree2.push_back(ce_diff(algebra, Form::monomial({k, l})).terms());
    }
  }
  fp.d_ranks = {static_cast<int>(rank_of(degree1)),
                static_cast<int>(rank_of(degree2))};
  return fp;
}

// --- search ---------------------------------------------------------------

namespace {

/// A form that must be carried onto another: either a differential pair
/// (source slot k, carried with the extra sign s_k) or a plain form pair.
struct Constraint {
  const Form* source;
  const Form* target;  // null for differentials: resolved through the map
  int slot;            // 0 for plain forms
};

struct SignEquation {
  std::vector<int> vars;  // source slots whose signs multiply
  int parity;             // product of signs must be (-1)^parity
};

bool solve_signs(int n, const std::vector<SignEquation>& equations,
                 std::vector<int>& signs) {
  // Gaussian elimination over GF(2); columns 0..n-1 are variables, n is rhs.
  // Pivots are taken from the last column down, so forced sign flips land
  // on the latest slots and earlier (free) slots stay positive.
  std::vector<std::vector<unsigned char>> rows;
  for (const SignEquation& eq : equations) {
    std::vector<unsigned char> row(n + 1, 0);
    for (int v : eq.vars) row[v - 1] ^= 1;
    row[n] = static_cast<unsigned char>(eq.parity & 1);
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = n - 1; c >= 0 && r < rows.size(); --c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q != r && rows[q][c]) {
        for (int j = 0; j <= n; ++j) rows[q][j] ^= rows[r][j];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < rows.size(); ++q) {
    if (rows[q][n]) return false;
  }
  signs.assign(n, 1);  // free variables positive
  for (std::size_t q = 0; q < r; ++q) {
    if (rows[q][n]) signs[pivot_col[q]] = -1;
  }
  return true;
}

class Search {
 public:
  Search(const MalcevPresentation& from, const MalcevPresentation& to,
         const IsoSearchOptions& options)
      : from_(from), to_(to), options_(options), n_(from.dim()) {
    from_key_ = keys(from_);
    to_key_ = keys(to_);
    for (const auto& [f, g] : options_.forms) {
      if (f.degree() != g.degree() || f.size() != g.size()) impossible_ = true;
    }
    order_ = assignment_order();
    map_.assign(n_ + 1, 0);
    used_.assign(n_ + 1, false);
    in_source_set_.assign(n_ + 1, false);
    in_target_set_.assign(n_ + 1, false);
    for (int s : options_.source_set) in_source_set_.at(s) = true;
    for (int t : options_.target_set) in_target_set_.at(t) = true;
  }

  IsoResult run() {
    IsoResult result;
    if (!impossible_ && from_key_multiset() == to_key_multiset()) {
      aborted_ = false;
      recurse(0, result);
      result.exhausted = !aborted_ || result.witness.has_value();
    } else {
      result.exhausted = true;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  using Key = std::tuple<int, std::size_t, int>;

  static std::vector<Key> keys(const MalcevPresentation& algebra) {
    const int n = algebra.dim();
    std::vector<int> depth(n + 1, 0), occurrences(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
      for (const auto& [indices, c] : algebra.differential(k).terms()) {
        for (int leg : indices) {
          depth[k] = std::max(depth[k], depth[leg] + 1);
          ++occurrences[leg];
        }
      }
    }
    std::vector<Key> out(n + 1);
    for (int k = 1; k <= n; ++k) {
      out[k] = {depth[k], algebra.differential(k).size(), occurrences[k]};
    }
    return out;
  }

  std::vector<Key> from_key_multiset() const {
    std::vector<Key> v(from_key_.begin() + 1, from_key_.end());
    std::sort(v.begin(), v.end());
    return v;
  }
  std::vector<Key> to_key_multiset() const {
    std::vector<Key> v(to_key_.begin() + 1, to_key_.end());
    std::sort(v.begin(), v.end());
    return v;
  }

  /// Visit slots so that each new slot shares a term with assigned ones
  /// whenever possible; isolated slots come last in natural order.
  std::vector<int> assignment_order() const {
    std::vector<std::vector<int>> neighbours(n_ + 1);
    auto link = [&](const Form& form, int extra) {
      for (const auto& [indices, c] : form.terms()) {
        std::vector<int> all(indices.begin(), indices.end());
        if (extra) all.push_back(extra);
        for (int a : all) {
          for (int b : all) {
            if (a != b) neighbours[a].push_back(b);
          }
        }
      }
    };
    for (int k = 1; k <= n_; ++k) link(from_.differential(k), k);
    for (const auto& [f, g] : options_.forms) link(f, 0);

    std::vector<int> order;
    std::vector<bool> seen(n_ + 1, false);
    std::vector<int> starts;
    for (int k = n_; k >= 1; --k) {
      if (!neighbours[k].empty()) starts.push_back(k);
    }
    for (int k = 1; k <= n_; ++k) {
      if (neighbours[k].empty()) starts.push_back(k);
    }
    for (int start : starts) {
      if (seen[start]) continue;
      std::vector<int> queue{start};
      seen[start] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        order.push_back(queue[q]);
        std::vector<int> next = neighbours[queue[q]];
        std::sort(next.begin(), next.end());
        for (int v : next) {
          if (!seen[v]) {
            seen[v] = true;
            queue.push_back(v);
          }
        }
      }
    }
    return order;
  }

  bool assigned(const IndexTuple& indices) const {
    return std::all_of(indices.begin(), indices.end(),
                       [&](int i) { return map_[i] != 0; });
  }

  /// Support and magnitude compatibility of one constraint under the
  /// current partial map, in both directions.
  bool compatible(const Form& source, const Form& target,
                  const std::vector<int>& inverse) const {
    for (const auto& [indices, c] : source.terms()) {
      if (!assigned(indices)) continue;
      IndexTuple mapped;
      for (int i : indices) mapped.push_back(map_[i]);
      std::sort(mapped.begin(), mapped.end());
      auto it = target.terms().find(mapped);
      if (it == target.terms().end() || abs(it->second) != abs(c)) {
        return false;
      }
    }
    for (const auto& [indices, c] : target.terms()) {
      IndexTuple pre;
      for (int i : indices) {
        if (inverse[i] == 0) break;
        pre.push_back(inverse[i]);
      }
      if (pre.size() != indices.size()) continue;
      std::sort(pre.begin(), pre.end());
      if (!source.terms().count(pre)) return false;
    }
    return true;
  }

  bool consistent() const {
    std::vector<int> inverse(n_ + 1, 0);
    for (int k = 1; k <= n_; ++k) {
      if (map_[k]) inverse[map_[k]] = k;
    }
    for (int k = 1; k <= n_; ++k) {
      if (!map_[k]) continue;
      if (!compatible(from_.differential(k), to_.differential(map_[k]),
                      inverse)) {
        return false;
      }
    }
    for (const auto& [f, g] : options_.forms) {
      if (!compatible(f, g, inverse)) return false;
    }
    return true;
  }

  std::optional<BasisChange> finish() const {
    std::vector<SignEquation> equations;
    auto add = [&](const Form& source, const Form& target, int slot) {
      for (const auto& [indices, c] : source.terms()) {
        IndexTuple mapped;
        for (int i : indices) mapped.push_back(map_[i]);
        const int order_sign = sort_with_sign(mapped);
        const Rational ratio = target.coefficient(mapped) / (order_sign * c);
        SignEquation eq{indices, ratio < 0 ? 1 : 0};
        if (slot) eq.vars.push_back(slot);
        equations.push_back(std::move(eq));
      }
    };
    for (int k = 1; k <= n_; ++k) {
      add(from_.differential(k), to_.differential(map_[k]), k);
    }
    for (const auto& [f, g] : options_.forms) add(f, g, 0);
    std::vector<int> signs;
    if (!solve_signs(n_, equations, signs)) return std::nullopt;
    BasisChange candidate(std::vector<int>(map_.begin() + 1, map_.end()),
                          signs);
    if (candidate.apply(from_) != to_.differentials()) return std::nullopt;
    for (const auto& [f, g] : options_.forms) {
      if (candidate.apply(f) != g) return std::nullopt;
    }
    return candidate;
  }

  bool recurse(std::size_t depth, IsoResult& result) {
    if (depth == order_.size()) {
      result.witness = finish();
      return result.witness.has_value();
    }
    const int k = order_[depth];
    for (int j = 1; j <= n_; ++j) {
      if (used_[j] || from_key_[k] != to_key_[j]) continue;
      if (in_source_set_[k] && !in_target_set_[j]) continue;
      if (++nodes_ > options_.budget) {
        aborted_ = true;
        return false;
      }
      map_[k] = j;
      used_[j] = true;
      if (consistent() && recurse(depth + 1, result)) return true;
      map_[k] = 0;
      used_[j] = false;
      if (aborted_) return false;
    }
    return false;
  }

  const MalcevPresentation& from_;
  const MalcevPresentation& to_;
  const IsoSearchOptions& options_;
  int n_;
  bool impossible_ = false;
  bool aborted_ = false;
  std::size_t nodes_ = 0;
  std::vector<Key> from_key_, to_key_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<bool> in_source_set_, in_target_set_;
};

}  // namespace

IsoResult iso_small(const MalcevPresentation& from,
                    const MalcevPresentation& to,
                    const IsoSearchOptions& options) {
  IsoResult result;
  if (from.dim() != to.dim()) {
    result.exhausted = true;
    result.fingerprints_differ = true;
    return result;
  }
  if (fingerprint(from) != fingerprint(to)) {
    result.exhausted = true;
    result.fingerprints_differ = true;
    return result;
  }
  for (int s : options.source_set) {
    if (s < 1 || s > from.dim()) {
      throw std::invalid_argument("iso_small: source_set index out of range");
    }
  }
  for (int t : options.target_set) {
    if (t < 1 || t > to.dim()) {
      throw std::invalid_argument("iso_small: target_set index out of range");
    }
  }
  return Search(from, to, options).run();
}

}  // namespace flagflux
