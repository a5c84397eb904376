#pragma once

// Exact Gaussian elimination over the rationals on sparse vectors.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace flagflux {

template <class Key>
using SparseVector = std::map<Key, mpq_class>;

template <class Key>
void axpy(SparseVector<Key>& y, const mpq_class& a, const SparseVector<Key>& x) {
  for (const auto& [key, value] : x) {
    auto [it, inserted] = y.try_emplace(key, 0);
    it->second += a * value;
    if (it->second == 0) y.erase(it);
  }
}

/// Incremental row echelon form. Every inserted vector carries a tag vector
/// recording which combination of the original generators produced it, so
/// the same object answers rank, membership, solve and kernel queries.
template <class Key>
class Eliminator {
 public:
  struct Row {
    SparseVector<Key> vector;
    SparseVector<int> combination;
  };

  /// Inserts generator number `id`. Returns the kernel relation (combination
  /// of generators summing to zero) when `v` is dependent on earlier rows.
  std::optional<SparseVector<int>> insert(const SparseVector<Key>& v, int id) {
    Row row{v, {{id, 1}}};
    reduce(row);
    if (row.vector.empty()) return row.combination;
    const Key pivot = row.vector.begin()->first;
    const mpq_class scale = 1 / row.vector.begin()->second;
    for (auto& [key, value] : row.vector) value *= scale;
    for (auto& [key, value] : row.combination) value *= scale;
    rows_.emplace(pivot, std::move(row));
    return std::nullopt;
  }

  std::size_t rank() const { return rows_.size(); }

  /// Expresses `v` through the generators: returns c with sum c_id g_id = v,
  /// or nothing when v is outside the span.
  std::optional<SparseVector<int>> solve(const SparseVector<Key>& v) const {
    Row row{v, {}};
    reduce(row);
    if (!row.vector.empty()) return std::nullopt;
    SparseVector<int> result;
    axpy(result, mpq_class(-1), row.combination);
    return result;
  }

  bool contains(const SparseVector<Key>& v) const {
    Row row{v, {}};
    reduce(row);
    return row.vector.empty();
  }

  /// Pivot keys of the echelon rows.
  std::vector<Key> pivots() const {
    std::vector<Key> out;
    for (const auto& [key, row] : rows_) out.push_back(key);
    return out;
  }

 private:
  void reduce(Row& row) const {
    // rows_ is keyed by pivot; each pivot is the smallest key of its row, so
    // a single ascending sweep clears every pivot position.
    auto it = row.vector.begin();
    while (it != row.vector.end()) {
      auto found = rows_.find(it->first);
      if (found == rows_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const mpq_class factor = -it->second;
      axpy(row.vector, factor, found->second.vector);
      axpy(row.combination, factor, found->second.combination);
      it = row.vector.upper_bound(key);
    }
  }

  std::map<Key, Row> rows_;
};

template <class Key>
std::size_t rank_of(const std::vector<SparseVector<Key>>& vectors) {
  Eliminator<Key> elim;
  int id = 0;
  for (const auto& v : vectors) elim.insert(v, id++);
  return elim.rank();
}

/// Basis of {c : sum c_i v_i = 0}.
template <class Key>
std::vector<SparseVector<int>> kernel_of(
    const std::vector<SparseVector<Key>>& vectors) {
  Eliminator<Key> elim;
  std::vector<SparseVector<int>> kernel;
  int id = 0;
  for (const auto& v : vectors) {
    if (auto relation = elim.insert(v, id++)) kernel.push_back(*relation);
  }
  return kernel;
}

}  // namespace flagflux
