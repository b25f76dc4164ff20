#pragma once

#include <cstddef>
#include <vector>

#include "frob/prime.hpp"

namespace frob {

/// Incrementally built row-echelon basis of a subspace of F_p^cols.
class RowEchelon {
 public:
  RowEchelon(PrimeModulus p, std::size_t cols) : p_(p), cols_(cols) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == cols_; }

  /// Adds v to the spanning set; returns true if the rank grew.
  bool insert(std::vector<Coeff> v);
  bool inSpan(std::vector<Coeff> v) const;

 private:
  void eliminate(std::vector<Coeff>& v) const;

  PrimeModulus p_;
  std::size_t cols_;
  std::vector<std::vector<Coeff>> rows_;  // each normalized to 1 at its pivot
  std::vector<std::size_t> pivots_;
};

/// Rank over F_p of the given rows (all of equal length).
std::size_t rankOver(PrimeModulus p, const std::vector<std::vector<Coeff>>& rows);

}  // namespace frob
