#include "fplab/fp_matrix.hpp"

#include "fplab/errors.hpp"

namespace fplab {

FpMatrix::FpMatrix(std::int32_t p, int rows, int cols)
    : mod_(p), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw ContractError("negative matrix shape");
}

FpMatrix FpMatrix::from_rows(std::int32_t p,
                             std::vector<std::vector<std::int32_t>> rows) {
  if (rows.empty()) throw ContractError("matrix needs at least one row");
  FpMatrix m(p, static_cast<int>(rows.size()),
             static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[static_cast<std::size_t>(i)].size() !=
        static_cast<std::size_t>(m.cols())) {
      throw ContractError("ragged matrix rows");
    }
    for (int j = 0; j < m.cols(); ++j) {
      m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

std::vector<std::int32_t> FpMatrix::row(int i) const {
  std::vector<std::int32_t> out(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(j)] = at(i, j);
  return out;
}

std::vector<std::int32_t> FpMatrix::col(int j) const {
  std::vector<std::int32_t> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = at(i, j);
  return out;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(p(), cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

std::vector<std::int32_t> FpMatrix::apply(
    const std::vector<std::int32_t>& x) const {
  if (x.size() != static_cast<std::size_t>(cols_)) {
    throw ContractError("vector length does not match column count");
  }
  std::vector<std::int32_t> y(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < cols_; ++j) {
      acc += std::int64_t(at(i, j)) * x[static_cast<std::size_t>(j)];
    }
    y[static_cast<std::size_t>(i)] = mod_.reduce(acc);
  }
  return y;
}

namespace {

// Row reduction of [M | I] to reduced echelon form. The identity block tracks
// the row operations, so zero rows of the reduced M part read off the row
// relations directly.
struct Reduction {
  std::vector<std::vector<std::int32_t>> work;  // rows of length cols + rows
  std::vector<int> pivot_cols;                  // one per pivot row
  int cols;
};

Reduction reduce(const FpMatrix& m) {
  const PrimeModulus mod(m.p());
  const int rows = m.rows();
  const int cols = m.cols();
  Reduction red;
  red.cols = cols;
  red.work.assign(static_cast<std::size_t>(rows),
                  std::vector<std::int32_t>(static_cast<std::size_t>(cols + rows), 0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      red.work[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    }
    red.work[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols + i)] = 1;
  }

  int pivot_row = 0;
  for (int j = 0; j < cols && pivot_row < rows; ++j) {
    int found = -1;
    for (int i = pivot_row; i < rows; ++i) {
      if (red.work[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(red.work[static_cast<std::size_t>(pivot_row)],
              red.work[static_cast<std::size_t>(found)]);
    auto& prow = red.work[static_cast<std::size_t>(pivot_row)];
    const std::int32_t inv = mod.inv(prow[static_cast<std::size_t>(j)]);
    for (auto& v : prow) v = mod.mul(v, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == pivot_row) continue;
      auto& irow = red.work[static_cast<std::size_t>(i)];
      const std::int32_t factor = irow[static_cast<std::size_t>(j)];
      if (factor == 0) continue;
      for (std::size_t t = 0; t < irow.size(); ++t) {
        irow[t] = mod.sub(irow[t], mod.mul(factor, prow[t]));
      }
    }
    red.pivot_cols.push_back(j);
    ++pivot_row;
  }
  return red;
}

}  // namespace

EliminationSummary eliminate(const FpMatrix& m) {
  const PrimeModulus mod(m.p());
  const Reduction red = reduce(m);
  const int rows = m.rows();
  const int cols = m.cols();

  EliminationSummary out;
  out.pivot_cols = red.pivot_cols;
  out.rank = static_cast<int>(red.pivot_cols.size());

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (const int j : red.pivot_cols) is_pivot[static_cast<std::size_t>(j)] = true;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    std::vector<std::int32_t> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(j)] = 1;
    for (int r = 0; r < out.rank; ++r) {
      const std::int32_t coeff =
          red.work[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      v[static_cast<std::size_t>(red.pivot_cols[static_cast<std::size_t>(r)])] =
          mod.neg(coeff);
    }
    out.nullspace.push_back(std::move(v));
  }

  for (int i = out.rank; i < rows; ++i) {
    std::vector<std::int32_t> lambda(static_cast<std::size_t>(rows));
    for (int t = 0; t < rows; ++t) {
      lambda[static_cast<std::size_t>(t)] =
          red.work[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols + t)];
    }
    out.row_relations.push_back(std::move(lambda));
  }
  return out;
}

std::optional<std::vector<std::int32_t>> solve(
    const FpMatrix& m, const std::vector<std::int32_t>& b) {
  if (b.size() != static_cast<std::size_t>(m.rows())) {
    throw ContractError("right-hand side length does not match row count");
  }
  const PrimeModulus mod(m.p());
  const Reduction red = reduce(m);
  const int rank = static_cast<int>(red.pivot_cols.size());

  // Apply the tracked row operations to b, then read the reduced system.
  std::vector<std::int32_t> rb(static_cast<std::size_t>(m.rows()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    std::int64_t acc = 0;
    for (int t = 0; t < m.rows(); ++t) {
      acc += std::int64_t(red.work[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(red.cols + t)]) *
             b[static_cast<std::size_t>(t)];
    }
    rb[static_cast<std::size_t>(i)] = mod.reduce(acc);
  }
  for (int i = rank; i < m.rows(); ++i) {
    if (rb[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  std::vector<std::int32_t> x(static_cast<std::size_t>(m.cols()), 0);
  for (int r = 0; r < rank; ++r) {
    x[static_cast<std::size_t>(red.pivot_cols[static_cast<std::size_t>(r)])] =
        rb[static_cast<std::size_t>(r)];
  }
  return x;
}

RowCertificate row_independence_certificate(const FpMatrix& m, int i) {
  if (i < 0 || i >= m.rows()) throw ContractError("row index out of range");
  std::vector<std::int32_t> ei(static_cast<std::size_t>(m.rows()), 0);
  ei[static_cast<std::size_t>(i)] = 1;

  RowCertificate cert;
  if (auto c = solve(m, ei)) {
    cert.independent = true;
    cert.combination = std::move(*c);
    return cert;
  }

  // Row i depends on the others; solve for the combination on the transpose
  // restricted to the other rows.
  FpMatrix others(m.p(), m.cols(), m.rows() - 1);
  std::vector<int> owner;
  owner.reserve(static_cast<std::size_t>(m.rows()) - 1);
  for (int r = 0; r < m.rows(); ++r) {
    if (r == i) continue;
    const int jcol = static_cast<int>(owner.size());
    for (int j = 0; j < m.cols(); ++j) others.set(j, jcol, m.at(r, j));
    owner.push_back(r);
  }
  const auto target = m.row(i);
  auto mu = solve(others, target);
  if (!mu) throw ContractError("dependent row admits no combination");
  cert.independent = false;
  cert.combination.assign(static_cast<std::size_t>(m.rows()), 0);
  for (std::size_t t = 0; t < owner.size(); ++t) {
    cert.combination[static_cast<std::size_t>(owner[t])] = (*mu)[t];
  }
  return cert;
}

}  // namespace fplab
