#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fplab/field.hpp"

namespace fplab {

// Dense matrix of residues mod p with exact elimination. Small enough that
// every query just runs the elimination it needs.
class FpMatrix {
 public:
  FpMatrix(std::int32_t p, int rows, int cols);
  static FpMatrix from_rows(std::int32_t p,
                            std::vector<std::vector<std::int32_t>> rows);

  std::int32_t p() const { return mod_.p(); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int32_t at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  void set(int i, int j, std::int64_t v) {
    data_[static_cast<std::size_t>(i) * cols_ + j] = mod_.reduce(v);
  }
  std::vector<std::int32_t> row(int i) const;
  std::vector<std::int32_t> col(int j) const;
  FpMatrix transposed() const;

  // y = M x over F_p.
  std::vector<std::int32_t> apply(const std::vector<std::int32_t>& x) const;

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  PrimeModulus mod_;
  int rows_;
  int cols_;
  std::vector<std::int32_t> data_;
};

// Everything Gaussian elimination yields in one pass: the rank, a basis of
// the right nullspace (M v = 0), and a basis of the row relations
// (lambda^T M = 0). rank + nullspace.size() == cols and
// rank + row_relations.size() == rows, both exact.
struct EliminationSummary {
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<std::vector<std::int32_t>> nullspace;
  std::vector<std::vector<std::int32_t>> row_relations;
};

EliminationSummary eliminate(const FpMatrix& m);

// One solution of M x = b with free coordinates zero, or nothing when the
// system is inconsistent. The support of the solution lies in the pivot
// columns, so at most min(rows, cols) entries are nonzero.
std::optional<std::vector<std::int32_t>> solve(
    const FpMatrix& m, const std::vector<std::int32_t>& b);

// Whether row i lies outside the span of the other rows. If it does, the
// certificate c satisfies M c = e_i (solvable exactly in that case, since a
// row relation hitting i would obstruct it); otherwise `combination` holds
// coefficients expressing row i as a combination of the other rows, with
// combination[i] = 0.
struct RowCertificate {
  bool independent = false;
  std::vector<std::int32_t> combination;
};

RowCertificate row_independence_certificate(const FpMatrix& m, int i);

}  // namespace fplab
