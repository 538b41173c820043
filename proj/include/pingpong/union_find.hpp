#pragma once

#include <numeric>
#include <vector>

namespace pingpong {

/// Disjoint sets over {0, ..., n-1} with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  /// Returns true if a union was performed.
  bool unite(int i, int j) {
    i = find(i);
    j = find(j);
    if (i == j) return false;
    if (size_[i] < size_[j]) std::swap(i, j);
    parent_[j] = i;
    size_[i] += size_[j];
    --classes_;
    return true;
  }

  int classes() const { return classes_; }

  /// Class label per element, numbered by first appearance.
  std::vector<int> labels() {
    std::vector<int> root_label(parent_.size(), -1);
    std::vector<int> out(parent_.size());
    int next = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      int& l = root_label[find(i)];
      if (l < 0) l = next++;
      out[i] = l;
    }
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int classes_;
};

}  // namespace pingpong
