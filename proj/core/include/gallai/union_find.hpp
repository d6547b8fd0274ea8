#pragma once

#include <numeric>
#include <vector>

namespace gallai {

// Plain disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

  // Groups of elements, each sorted, ordered by smallest element.
  std::vector<std::vector<int>> groups() {
    int n = static_cast<int>(parent_.size());
    std::vector<std::vector<int>> by_root(n);
    for (int x = 0; x < n; ++x) by_root[find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& g : by_root)
      if (!g.empty()) out.push_back(std::move(g));
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace gallai
