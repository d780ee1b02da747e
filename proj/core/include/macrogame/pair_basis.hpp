#pragma once

#include <vector>

#include "macrogame/common.hpp"

namespace macrogame {

// Sum/difference decomposition over (home, foreign) variable pairs.
//
// Swapping the two countries in a symmetric model permutes paired entries and
// flips the sign of odd singletons (the exchange rate, the real exchange
// rate). In the pair basis that swap becomes a pure sign flip of the
// difference components, which floating point preserves exactly; all solver
// linear algebra therefore runs in this basis so that country-swapped
// scenarios produce bit-identical mirrored output.
//
// Convention: a pair occupies two indices (i, j); slot i carries the
// half-sum, slot j the half-difference. Singletons keep their slot and carry
// a parity: +1 for swap-invariant variables, -1 for variables that change
// sign under the swap.
class PairBasis {
 public:
  PairBasis() = default;

  // partner[i] == j and partner[j] == i for a pair (i < j marks the sum
  // slot); partner[i] == i for singletons. parity is read for singletons
  // only.
  PairBasis(std::vector<int> partner, std::vector<int> parity);

  int size() const { return static_cast<int>(partner_.size()); }

  // Half-sum/half-difference of each pair; used both for right-hand sides
  // and for solution/state vectors.
  Vector to_pair(const Vector& country) const;
  // Inverse: first + second, first - second.
  Vector to_country(const Vector& pair) const;

  // Structural matrix transform: rows combined with factor 1/2 (this object
  // describes the rows), columns expanded with unit combinations (col_basis
  // describes the columns). For a system G v = r this yields the pair-basis
  // system (R G T)(T^-1 v) = (R r).
  Matrix mat_to_pair(const Matrix& m, const PairBasis& col_basis) const;

  // Country-basis mirror: swap pair legs, multiply singletons by parity.
  Vector mirror_country(const Vector& country) const;

  // Signature of the swap in the pair basis: +1 on sum slots and even
  // singletons, -1 on difference slots and odd singletons.
  const std::vector<int>& pair_signs() const { return signs_; }

  bool is_sum_slot(int i) const { return partner_[i] >= i; }
  int partner(int i) const { return partner_[i]; }

 private:
  std::vector<int> partner_;
  std::vector<int> parity_;
  std::vector<int> signs_;
};

// Builder helper: grow a layout by appending pairs and singletons.
class PairLayoutBuilder {
 public:
  // Returns (sum_index, diff_index) == (first, second).
  std::pair<int, int> add_pair() {
    const int i = next();
    const int j = i + 1;
    partner_.push_back(j);
    partner_.push_back(i);
    parity_.push_back(1);
    parity_.push_back(1);
    return {i, j};
  }
  int add_singleton(int parity) {
    const int i = next();
    partner_.push_back(i);
    parity_.push_back(parity);
    return i;
  }
  PairBasis build() const { return PairBasis(partner_, parity_); }
  int size() const { return static_cast<int>(partner_.size()); }

 private:
  int next() const { return static_cast<int>(partner_.size()); }
  std::vector<int> partner_;
  std::vector<int> parity_;
};

}  // namespace macrogame
