#pragma once

#include <numeric>
#include <vector>

namespace qbracket {

// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  // Returns true if a union was performed.
  bool unite(int i, int j) {
    i = find(i);
    j = find(j);
    if (i == j)
      return false;
    if (size_[i] < size_[j])
      std::swap(i, j);
    parent_[j] = i;
    size_[i] += size_[j];
    --classes_;
    return true;
  }

  int classes() const { return classes_; }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int classes_;
};

} // namespace qbracket
