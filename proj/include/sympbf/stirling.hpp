#pragma once

#include <stdexcept>
#include <vector>

#include "sympbf/rational.hpp"

namespace sympbf {

/// Stirling number of the second kind: partitions of a j-set into i
/// nonempty blocks. Recurrence S(j,i) = i*S(j-1,i) + S(j-1,i-1).
inline Integer stirling2(unsigned j, unsigned i) {
  if (i > j) return 0;
  if (j == 0) return 1;  // S(0,0) = 1
  if (i == 0) return 0;
  std::vector<Integer> row(j + 1, 0);
  row[0] = 1;
  for (unsigned jj = 1; jj <= j; ++jj) {
    const unsigned hi = std::min(jj, i);
    for (unsigned ii = hi; ii >= 1; --ii) row[ii] = Integer(ii) * row[ii] + row[ii - 1];
    row[0] = 0;
  }
  return row[i];
}

/// The upper-triangular change-of-basis matrix between the
/// elementary-symmetric coefficients and the power-sum series
/// coefficients: entry (i,j) = i! * S(j,i) for 1 <= i <= j <= n.
class StirlingMatrix {
 public:
  static StirlingMatrix build(int n) {
    if (n < 1) throw std::invalid_argument("StirlingMatrix: dimension must be >= 1");
    StirlingMatrix m;
    m.n_ = n;
    m.entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    // Fill S(j,i) row by row, then scale row i by i!.
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n) + 1,
                                        std::vector<Integer>(static_cast<std::size_t>(n) + 1, 0));
    s[0][0] = 1;
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= j; ++i)
        s[j][i] = Integer(i) * s[j - 1][i] + s[j - 1][i - 1];
    Integer fact = 1;
    for (int i = 1; i <= n; ++i) {
      fact *= i;
      for (int j = i; j <= n; ++j) m.entry_ref(i, j) = fact * s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return m;
  }

  int n() const { return n_; }

  /// 1-based access; zero above the diagonal's mirror (i > j).
  const Integer& at(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("StirlingMatrix::at");
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)];
  }

 private:
  Integer& entry_ref(int i, int j) {
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)];
  }

  int n_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace sympbf
