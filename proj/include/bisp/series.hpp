#pragma once

#include "bisp/divisor.hpp"
#include "bisp/kbar.hpp"
#include "bisp/vacuum.hpp"

#include <string>
#include <vector>

namespace bisp {

/// Power-series basis f_1..f_r of ker(L0 - shift) around x = 0, truncated at
/// degree `truncation`, with f_j^(i)(0) = delta_ij (unit Wronskian at 0).
/// With shift = lambda these are the local expansions of functions f(x + lambda).
struct SeriesBasis {
  int truncation = 0;
  Rational shift;
  std::vector<std::vector<Rational>> f;  ///< f[j][k] = coefficient of x^k in f_{j+1}
};

/// Solves f^(r) = (x + shift) f + sum a_i f^(i) coefficient by coefficient.
/// Throws std::invalid_argument when truncation < r.
SeriesBasis kernel_series_basis(const AiryVacuum& l0, int truncation, const Rational& shift = Rational());

/// Kbar rebuilt from the Wronskian of truncated series. Coefficient k of
/// `kbar` is exact for powers of x below precision[k].
struct SeriesOracleResult {
  DiffOp kbar;
  std::vector<int> precision;
  /// Leading x^n coefficient of the raw Wronskian's D^N cofactor (the
  /// normalizer, expected to be +-V^r).
  Rational scale;
  int guaranteed_degree() const;
};

/// Each cusp uses the unit basis of ker(L0 - lambda_i) at x = 0, so every
/// series is exact up to its truncation; the change to a common global basis
/// has determinant one and does not alter the Wronskian.
/// Throws std::invalid_argument if truncation < N + 2 and std::domain_error
/// if the tracked precision cannot determine the normalization.
SeriesOracleResult kbar_series_oracle(const AiryVacuum& l0, const CuspDivisor& c, int truncation);

struct OracleComparison {
  bool match = false;         ///< all compared coefficients agree
  bool fully_covered = false; ///< every coefficient of kbar lies below the oracle's precision
  std::string detail;
};

OracleComparison compare_with_oracle(const DiffOp& kbar, const SeriesOracleResult& oracle);

}  // namespace bisp
