#ifndef GUP1D_VERIFY_HPP
#define GUP1D_VERIFY_HPP

#include <string>
#include <vector>

#include "gup1d/report.hpp"

namespace gup1d::verify {

using CheckResult = report::CheckRow;

// Each group re-derives its module's invariants numerically and reports
// (measured, tolerance) pairs; a check passes iff measured <= tolerance.
// tol_scale multiplies every default tolerance. All randomness is seeded,
// so repeated runs produce identical reports.
std::vector<CheckResult> specfun_checks(double tol_scale = 1.0);
std::vector<CheckResult> analytic_checks(double tol_scale = 1.0);
std::vector<CheckResult> scattering_checks(double tol_scale = 1.0);
std::vector<CheckResult> stark_checks(double tol_scale = 1.0);
std::vector<CheckResult> oracle_checks(double tol_scale = 1.0);
std::vector<CheckResult> report_checks(double tol_scale = 1.0);

/// All groups, optionally restricted to checks whose name contains filter.
std::vector<CheckResult> run_all(const std::string& filter = "",
                                 double tol_scale = 1.0);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace gup1d::verify

#endif
