#pragma once

#include <vector>

#include "rat.hpp"

namespace tric {

// Dense symmetric matrix with exact rational entries. Full square storage;
// symmetry is by construction of the writers.
class SymRatMatrix {
 public:
  SymRatMatrix() : n_(0) {}
  explicit SymRatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  int order() const { return n_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  // M <- M + c * N
  void add_scaled(const SymRatMatrix& o, const Rat& c) {
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += c * o.a_[k];
  }

  bool operator==(const SymRatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_;
  std::vector<Rat> a_;
};

}  // namespace tric
