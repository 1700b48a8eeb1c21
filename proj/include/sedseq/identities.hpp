#pragma once

// Catalog of verifiable identities about generalized Tribonacci sedenions.
// Exact identities are checked with rational arithmetic and must have
// residual exactly zero on their domain; float identities are root-based
// and compare componentwise with relative tolerance (absolute floor equal
// to the tolerance).

#include <complex>
#include <string>
#include <vector>

#include "triseq/params.hpp"

namespace sedseq {

struct IdentityInfo {
  std::string id;           // "I1".."I15"
  std::string description;  // human-readable statement
  bool exact;               // exact rational check vs float root-based check
  bool uses_m;              // identity has a second index
  bool fixed_sequences;     // stated for tribonacci / tribonacci-lucas only
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(const std::string& id);

struct IdentityReport {
  std::string identity_id;
  long n = 0;
  long m = 0;
  bool exact = false;
  // Exact identities: the max componentwise |lhs - rhs| (exactly zero when
  // passed).  Float identities: max componentwise |lhs - rhs| / max(1, |lhs|, |rhs|).
  double residual = 0.0;
  bool passed = false;
};

/// Evaluates one catalog identity at the given indices.  params selects the
/// sequence for the generic identities and is ignored by the fixed
/// tribonacci/tribonacci-lucas ones.  Indices outside the identity's stated
/// domain throw std::domain_error naming the domain.
IdentityReport check_identity(const std::string& id, const triseq::TriParams& params,
                              long n, long m, double tolerance = 1e-8);

/// Max componentwise relative residual with absolute floor 1,
/// i.e. |l - r| / max(1, |l|, |r|).
double relative_residual(const std::vector<std::complex<double>>& lhs,
                         const std::vector<std::complex<double>>& rhs);

}  // namespace sedseq
