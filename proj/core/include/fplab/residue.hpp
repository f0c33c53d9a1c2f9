#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "fplab/errors.hpp"
#include "fplab/field.hpp"
#include "fplab/rational.hpp"

namespace fplab {

// Histogram of residues mod p. The workhorse of all exact expectations:
// enumerations record which residue a polynomial or form takes, and the mean
// of the corresponding root-of-unity phase is recovered from the counts.
class ResidueCounter {
 public:
  explicit ResidueCounter(std::int32_t p)
      : counts_(static_cast<std::size_t>(p), 0) {}

  void add(std::int32_t residue, std::uint64_t weight = 1) {
    counts_[static_cast<std::size_t>(residue)] += weight;
  }

  std::int32_t p() const { return static_cast<std::int32_t>(counts_.size()); }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto c : counts_) t += c;
    return t;
  }

  ResidueCounter& merge(const ResidueCounter& o) {
    if (o.counts_.size() != counts_.size()) {
      throw ContractError("residue counter modulus mismatch");
    }
    for (std::size_t j = 0; j < counts_.size(); ++j) counts_[j] += o.counts_[j];
    return *this;
  }

  // (1/total) * sum_j counts[j] * omega^j.
  std::complex<double> mean(const RootTable& roots) const {
    std::complex<double> sum = 0.0;
    for (std::size_t j = 0; j < counts_.size(); ++j) {
      sum += static_cast<double>(counts_[j]) *
             roots[static_cast<std::int32_t>(j)];
    }
    return sum / static_cast<double>(total());
  }

  // Exact real mean, available when the nonzero residues occur equally often
  // (then sum_{j!=0} omega^j = -1 collapses the phase sum to a rational).
  std::optional<Rational> exact_real_mean() const {
    for (std::size_t j = 2; j < counts_.size(); ++j) {
      if (counts_[j] != counts_[1]) return std::nullopt;
    }
    const std::int64_t num = static_cast<std::int64_t>(counts_[0]) -
                             static_cast<std::int64_t>(counts_[1]);
    return Rational(num, total());
  }

  // Exact |mean|^2 via the cyclic autocorrelation of the counts; available
  // when the off-zero autocorrelations agree.
  std::optional<Rational> exact_mean_abs_squared() const {
    const std::size_t p = counts_.size();
    std::vector<std::uint64_t> auto_corr(p, 0);
    for (std::size_t m = 0; m < p; ++m) {
      for (std::size_t j = 0; j < p; ++j) {
        auto_corr[m] += counts_[j] * counts_[(j + m) % p];
      }
    }
    for (std::size_t m = 2; m < p; ++m) {
      if (auto_corr[m] != auto_corr[1]) return std::nullopt;
    }
    const std::uint64_t t = total();
    const std::int64_t num = static_cast<std::int64_t>(auto_corr[0]) -
                             static_cast<std::int64_t>(auto_corr[1]);
    return Rational(num, t * t);
  }

 private:
  std::vector<std::uint64_t> counts_;
};

}  // namespace fplab
