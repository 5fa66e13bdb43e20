// Copyright 2026 The gcep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCEP_INTMAT_HPP
#define GCEP_INTMAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace gcep {

using BigInt = mpz_class;
using BigVector = std::vector<BigInt>;

/// Dense integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt &at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const BigInt &at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  BigVector column(int j) const;
  BigVector multiply(const BigVector &x) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// One elementary operation of a Smith reduction.
struct ElementaryOp {
  enum Kind : std::uint8_t { swap, add_multiple, negate } kind;
  int i;
  int j;
  BigInt factor; // add_multiple: line i += factor * line j
};

/// U A V = D with D diagonal, d_1 | d_2 | ... | d_rank all positive. U and V
/// are kept as logs of elementary operations and applied to vectors.
struct SmithForm {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> diagonal; // the rank nonzero entries
  std::vector<ElementaryOp> row_ops;
  std::vector<ElementaryOp> col_ops;

  int rank() const { return static_cast<int>(diagonal.size()); }
  void left(BigVector &x) const;          // x <- U x
  void left_inverse(BigVector &x) const;  // x <- U^-1 x
  void right(BigVector &x) const;         // x <- V x
  void right_inverse(BigVector &x) const; // x <- V^-1 x
};

SmithForm smith_normal_form(IntMatrix a);

/// Some x with A x = b, where `s` is the Smith form of A.
std::optional<BigVector> solve(const SmithForm &s, const BigVector &b);

/// The group L / M for lattices M <= L <= Z^dim given by generators.
struct SubquotientResult {
  /// Invariant factors greater than 1, then a 0 for each free summand.
  std::vector<BigInt> invariants;
  /// One element of L per invariant, generating that summand.
  std::vector<BigVector> generators;
};
SubquotientResult subquotient(int dim, const std::vector<BigVector> &l_generators,
                              const std::vector<BigVector> &m_generators);

} // namespace gcep

#endif // GCEP_INTMAT_HPP
