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

#include "gcep/intmat.hpp"

#include <algorithm>
#include <utility>

#include "gcep/error.hpp"

namespace gcep {

BigVector IntMatrix::column(int j) const {
  BigVector out(rows_);
  for (int i = 0; i < rows_; ++i)
    out[i] = at(i, j);
  return out;
}

BigVector IntMatrix::multiply(const BigVector &x) const {
  BigVector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (sgn(at(i, j)) != 0 && sgn(x[j]) != 0)
        out[i] += at(i, j) * x[j];
  return out;
}

// Row operation on a vector: the same as on a one-column matrix.
namespace {

void apply_op(const ElementaryOp &op, BigVector &x) {
  switch (op.kind) {
  case ElementaryOp::swap:
    std::swap(x[op.i], x[op.j]);
    break;
  case ElementaryOp::add_multiple:
    x[op.i] += op.factor * x[op.j];
    break;
  case ElementaryOp::negate:
    x[op.i] = -x[op.i];
    break;
  }
}

void apply_inverse_op(const ElementaryOp &op, BigVector &x) {
  if (op.kind == ElementaryOp::add_multiple)
    x[op.i] -= op.factor * x[op.j];
  else
    apply_op(op, x);
}

// Transpose action: column op "col i += f col j" is A -> A E with
// E = I + f e_j e_i^T, so E x adds f x_i to x_j.
void apply_col_op(const ElementaryOp &op, BigVector &x) {
  if (op.kind == ElementaryOp::add_multiple)
    x[op.j] += op.factor * x[op.i];
  else
    apply_op(op, x);
}

void apply_inverse_col_op(const ElementaryOp &op, BigVector &x) {
  if (op.kind == ElementaryOp::add_multiple)
    x[op.j] -= op.factor * x[op.i];
  else
    apply_op(op, x);
}

class Reducer {
public:
  explicit Reducer(IntMatrix a) : a_(std::move(a)) {}

  SmithForm run() {
    SmithForm s;
    s.rows = a_.rows();
    s.cols = a_.cols();
    const int limit = std::min(a_.rows(), a_.cols());
    for (int t = 0; t < limit; ++t) {
      t_ = t;
      if (!select_pivot(t))
        break;
      while (true) {
        clear_pivot(t);
        if (abs(a_.at(t, t)) == 1)
          break;
        auto bad = non_divisible(t);
        if (!bad)
          break;
        // row t += row i brings the offending entry into row t
        row_add(t, bad->first, 1);
      }
      if (sgn(a_.at(t, t)) < 0) {
        for (int j = t; j < a_.cols(); ++j)
          a_.at(t, j) = -a_.at(t, j);
        row_ops_.push_back({ElementaryOp::negate, t, t, 0});
      }
      s.diagonal.push_back(a_.at(t, t));
    }
    s.row_ops = std::move(row_ops_);
    s.col_ops = std::move(col_ops_);
    return s;
  }

private:
  // Moves a pivot of least absolute value (a unit when one exists) to (t, t).
  bool select_pivot(int t) {
    int best_i = -1, best_j = -1;
    BigInt best;
    for (int i = t; i < a_.rows(); ++i) {
      for (int j = t; j < a_.cols(); ++j) {
        const BigInt &v = a_.at(i, j);
        if (sgn(v) == 0)
          continue;
        if (best_i < 0 || abs(v) < best) {
          best = abs(v);
          best_i = i;
          best_j = j;
          if (best == 1)
            break;
        }
      }
      if (best_i >= 0 && best == 1)
        break;
    }
    if (best_i < 0)
      return false;
    swap_rows(t, best_i);
    swap_cols(t, best_j);
    return true;
  }

  // Eliminates row t and column t outside the pivot, shrinking the pivot by
  // remainders until it divides everything in its row and column.
  void clear_pivot(int t) {
    while (true) {
      bool changed = false;
      for (int i = t + 1; i < a_.rows(); ++i) {
        if (sgn(a_.at(i, t)) == 0)
          continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a_.at(i, t).get_mpz_t(), a_.at(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (sgn(a_.at(i, t)) != 0) {
          swap_rows(t, i);
          changed = true;
        }
      }
      for (int j = t + 1; j < a_.cols(); ++j) {
        if (sgn(a_.at(t, j)) == 0)
          continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a_.at(t, j).get_mpz_t(), a_.at(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (sgn(a_.at(t, j)) != 0) {
          swap_cols(t, j);
          changed = true;
        }
      }
      if (!changed)
        return;
    }
  }

  std::optional<std::pair<int, int>> non_divisible(int t) const {
    const BigInt &p = a_.at(t, t);
    for (int i = t + 1; i < a_.rows(); ++i)
      for (int j = t + 1; j < a_.cols(); ++j)
        if (sgn(a_.at(i, j)) != 0 && !mpz_divisible_p(a_.at(i, j).get_mpz_t(), p.get_mpz_t()))
          return std::make_pair(i, j);
    return std::nullopt;
  }

  void swap_rows(int i, int j) {
    if (i == j)
      return;
    for (int c = t_; c < a_.cols(); ++c)
      mpz_swap(a_.at(i, c).get_mpz_t(), a_.at(j, c).get_mpz_t());
    row_ops_.push_back({ElementaryOp::swap, i, j, 0});
  }

  void swap_cols(int i, int j) {
    if (i == j)
      return;
    for (int r = t_; r < a_.rows(); ++r)
      mpz_swap(a_.at(r, i).get_mpz_t(), a_.at(r, j).get_mpz_t());
    col_ops_.push_back({ElementaryOp::swap, i, j, 0});
  }

  // row i += f * row j
  void row_add(int i, int j, const BigInt &f) {
    if (sgn(f) == 0)
      return;
    for (int c = t_; c < a_.cols(); ++c)
      if (sgn(a_.at(j, c)) != 0)
        mpz_addmul(a_.at(i, c).get_mpz_t(), f.get_mpz_t(), a_.at(j, c).get_mpz_t());
    row_ops_.push_back({ElementaryOp::add_multiple, i, j, f});
  }

  // col i += f * col j
  void col_add(int i, int j, const BigInt &f) {
    if (sgn(f) == 0)
      return;
    for (int r = t_; r < a_.rows(); ++r)
      if (sgn(a_.at(r, j)) != 0)
        mpz_addmul(a_.at(r, i).get_mpz_t(), f.get_mpz_t(), a_.at(r, j).get_mpz_t());
    col_ops_.push_back({ElementaryOp::add_multiple, i, j, f});
  }

  IntMatrix a_;
  int t_ = 0; // rows and columns before t_ are already reduced
  std::vector<ElementaryOp> row_ops_;
  std::vector<ElementaryOp> col_ops_;
};

} // namespace

void SmithForm::left(BigVector &x) const {
  for (const ElementaryOp &op : row_ops)
    apply_op(op, x);
}

void SmithForm::left_inverse(BigVector &x) const {
  for (auto it = row_ops.rbegin(); it != row_ops.rend(); ++it)
    apply_inverse_op(*it, x);
}

void SmithForm::right(BigVector &x) const {
  for (auto it = col_ops.rbegin(); it != col_ops.rend(); ++it)
    apply_col_op(*it, x);
}

void SmithForm::right_inverse(BigVector &x) const {
  for (const ElementaryOp &op : col_ops)
    apply_inverse_col_op(op, x);
}

SmithForm smith_normal_form(IntMatrix a) { return Reducer(std::move(a)).run(); }

std::optional<BigVector> solve(const SmithForm &s, const BigVector &b) {
  require(static_cast<int>(b.size()) == s.rows, ErrorKind::invalid_input,
          "right-hand side has the wrong length");
  BigVector ub = b;
  s.left(ub);
  BigVector y(s.cols);
  for (int i = 0; i < s.rows; ++i) {
    if (i < s.rank()) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.diagonal[i].get_mpz_t()))
        return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), s.diagonal[i].get_mpz_t());
    } else if (sgn(ub[i]) != 0) {
      return std::nullopt;
    }
  }
  s.right(y);
  return y;
}

SubquotientResult subquotient(int dim, const std::vector<BigVector> &l_generators,
                              const std::vector<BigVector> &m_generators) {
  IntMatrix l(dim, static_cast<int>(l_generators.size()));
  for (int j = 0; j < l.cols(); ++j)
    for (int i = 0; i < dim; ++i)
      l.at(i, j) = l_generators[j][i];
  const SmithForm sl = smith_normal_form(std::move(l));
  const int r = sl.rank();
  // L has basis U^-1 (d_i e_i); coordinates of m are (U m)_i / d_i.
  IntMatrix coords(r, static_cast<int>(m_generators.size()));
  for (int j = 0; j < coords.cols(); ++j) {
    BigVector um = m_generators[j];
    sl.left(um);
    for (int i = 0; i < dim; ++i) {
      if (i < r) {
        require(mpz_divisible_p(um[i].get_mpz_t(), sl.diagonal[i].get_mpz_t()),
                ErrorKind::invalid_input, "sublattice is not contained in the lattice");
        mpz_divexact(coords.at(i, j).get_mpz_t(), um[i].get_mpz_t(),
                     sl.diagonal[i].get_mpz_t());
      } else {
        require(sgn(um[i]) == 0, ErrorKind::invalid_input,
                "sublattice is not contained in the lattice");
      }
    }
  }
  const SmithForm sk = smith_normal_form(std::move(coords));
  SubquotientResult out;
  auto element = [&](int i) {
    BigVector c(r);
    c[i] = 1;
    sk.left_inverse(c);
    BigVector v(dim);
    for (int k = 0; k < r; ++k)
      v[k] = c[k] * sl.diagonal[k];
    sl.left_inverse(v);
    return v;
  };
  for (int i = 0; i < r; ++i) {
    if (i < sk.rank()) {
      if (sk.diagonal[i] == 1)
        continue;
      out.invariants.push_back(sk.diagonal[i]);
    } else {
      out.invariants.push_back(0);
    }
    out.generators.push_back(element(i));
  }
  return out;
}

} // namespace gcep
