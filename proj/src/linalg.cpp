#include "frob/linalg.hpp"

#include "frob/error.hpp"

namespace frob {

void RowEchelon::eliminate(std::vector<Coeff>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Coeff c = v[pivots_[r]];
    if (c == 0) continue;
    Coeff negc = p_.neg(c);
    const auto& row = rows_[r];
    for (std::size_t k = pivots_[r]; k < cols_; ++k) {
      if (row[k] != 0) v[k] = p_.add(v[k], p_.mul(negc, row[k]));
    }
  }
}

bool RowEchelon::insert(std::vector<Coeff> v) {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row length differs from column count");
  if (full()) return false;
  eliminate(v);
  std::size_t pivot = 0;
  while (pivot < cols_ && v[pivot] == 0) ++pivot;
  if (pivot == cols_) return false;
  Coeff inv = p_.inv(v[pivot]);
  for (std::size_t k = pivot; k < cols_; ++k) v[k] = p_.mul(v[k], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowEchelon::inSpan(std::vector<Coeff> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row length differs from column count");
  eliminate(v);
  for (Coeff c : v) {
    if (c != 0) return false;
  }
  return true;
}

std::size_t rankOver(PrimeModulus p, const std::vector<std::vector<Coeff>>& rows) {
  if (rows.empty()) return 0;
  RowEchelon e(p, rows.front().size());
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace frob
