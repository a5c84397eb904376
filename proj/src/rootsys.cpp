#include "flagflux/rootsys.hpp"

#include <algorithm>
#include <numeric>

#include "flagflux/errors.hpp"

namespace flagflux {

int Root::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

std::pair<int, int> Root::matrix_unit() const {
  auto first = std::find_if(coeffs.begin(), coeffs.end(),
                            [](int c) { return c != 0; });
  auto last = std::find_if(coeffs.rbegin(), coeffs.rend(),
                           [](int c) { return c != 0; });
  const int i = static_cast<int>(first - coeffs.begin()) + 1;
  const int j = static_cast<int>(coeffs.rend() - last) + 1;
  return {i, j};
}

Root root_of_matrix_unit(int rank, int i, int j) {
  Root root{std::vector<int>(rank, 0)};
  for (int p = i; p < j; ++p) root.coeffs[p - 1] = 1;
  return root;
}

RootSystem build_root_system(std::string_view series, int rank) {
  if (series != "A") {
    throw DomainError("unsupported root system series '" +
                      std::string(series) + "' (only A is implemented)");
  }
  if (rank < 1) throw DomainError("rank must be at least 1");
  RootSystem system{std::string(series), rank, {}};
  system.positive_roots.reserve(rank * (rank + 1) / 2);
  for (int height = 1; height <= rank; ++height) {
    for (int i = 1; i + height <= rank + 1; ++i) {
      system.positive_roots.push_back(root_of_matrix_unit(rank, i, i + height));
    }
  }
  return system;
}

FlagSpec& FlagSpec::validate() {
  if (series != "A") {
    throw DomainError("unsupported root system series '" + series +
                      "' (only A is implemented)");
  }
  if (rank < 1) throw DomainError("rank must be at least 1");
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  for (int index : theta) {
    if (index < 1 || index > rank) {
      throw DomainError("theta index " + std::to_string(index) +
                        " outside 1.." + std::to_string(rank));
    }
  }
  return *this;
}

std::vector<int> FlagSpec::complement() const {
  std::vector<int> out;
  for (int p = 1; p <= rank; ++p) {
    if (!std::binary_search(theta.begin(), theta.end(), p)) out.push_back(p);
  }
  return out;
}

namespace {

std::vector<int> signature_of(const Root& root,
                              const std::vector<int>& outside) {
  std::vector<int> signature;
  signature.reserve(outside.size());
  for (int p : outside) signature.push_back(root.height_at(p));
  return signature;
}

std::vector<int> outside_of(int rank, const std::vector<int>& theta) {
  FlagSpec spec{"A", rank, theta};
  spec.validate();
  return spec.complement();
}

}  // namespace

std::vector<Root> complementary_positive_roots(const RootSystem& roots,
                                               const std::vector<int>& theta) {
  const std::vector<int> outside = outside_of(roots.rank, theta);
  std::vector<Root> out;
  for (const Root& root : roots.positive_roots) {
    const auto signature = signature_of(root, outside);
    if (std::any_of(signature.begin(), signature.end(),
                    [](int c) { return c != 0; })) {
      out.push_back(root);
    }
  }
  return out;
}

std::vector<IsotropySummand> isotropy_summands(const RootSystem& roots,
                                               const std::vector<int>& theta) {
  const std::vector<int> outside = outside_of(roots.rank, theta);
  std::vector<IsotropySummand> summands;
  for (const Root& root : complementary_positive_roots(roots, theta)) {
    auto signature = signature_of(root, outside);
    auto it = std::find_if(summands.begin(), summands.end(),
                           [&](const IsotropySummand& s) {
                             return s.signature == signature;
                           });
    if (it == summands.end()) {
      summands.push_back({std::move(signature), {root}});
    } else {
      it->roots.push_back(root);
    }
  }
  std::stable_sort(summands.begin(), summands.end(),
                   [](const IsotropySummand& a, const IsotropySummand& b) {
                     const int ha = std::accumulate(a.signature.begin(),
                                                    a.signature.end(), 0);
                     const int hb = std::accumulate(b.signature.begin(),
                                                    b.signature.end(), 0);
                     if (ha != hb) return ha < hb;
                     return a.signature > b.signature;
                   });
  return summands;
}

FlagSpec three_summand_spec(int l, int m, int n) {
  if (l < 1 || m < 1 || n < 1) {
    throw DomainError("three-summand block sizes must be positive");
  }
  return spec_from_blocks({l, m, n});
}

SummandDims three_summand_dims(int l, int m, int n) {
  const FlagSpec spec = three_summand_spec(l, m, n);
  const auto summands =
      isotropy_summands(build_root_system("A", spec.rank), spec.theta);
  if (summands.size() != 3) {
    throw DomainError("expected exactly three isotropy summands");
  }
  return {summands[0].dim(), summands[1].dim(), summands[2].dim()};
}

std::vector<int> block_sizes(const FlagSpec& spec) {
  std::vector<int> sizes;
  int previous = 0;
  for (int p : spec.complement()) {
    sizes.push_back(p - previous);
    previous = p;
  }
  sizes.push_back(spec.rank + 1 - previous);
  return sizes;
}

int flag_dimension(const FlagSpec& spec) {
  const int n = spec.rank + 1;
  int squares = 0;
  for (int size : block_sizes(spec)) squares += size * size;
  return (n * n - squares) / 2;
}

std::string pretty_name(const FlagSpec& spec) {
  const auto sizes = block_sizes(spec);
  const int n = spec.rank + 1;
  std::string name = "SU(" + std::to_string(n) + ")/S(";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) name += "×";
    name += "U(" + std::to_string(sizes[i]) + ")";
  }
  name += ")";
  if (sizes.size() == 2 && (sizes[0] == 1 || sizes[1] == 1)) {
    name += " ≅ CP^" + std::to_string(n - 1);
  }
  return name;
}

FlagSpec spec_from_blocks(const std::vector<int>& blocks) {
  const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  if (n < 2) throw DomainError("a flag of sl(N) needs N >= 2");
  FlagSpec spec{"A", n - 1, {}};
  std::vector<int> cuts;
  int running = 0;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (blocks[i] < 1) throw DomainError("block sizes must be positive");
    running += blocks[i];
    cuts.push_back(running);
  }
  for (int p = 1; p <= spec.rank; ++p) {
    if (!std::binary_search(cuts.begin(), cuts.end(), p)) {
      spec.theta.push_back(p);
    }
  }
  return spec;
}

}  // namespace flagflux
