#pragma once

#include <iosfwd>
#include <vector>

#include "ellint_tools/approximation.hpp"

namespace ellint::tools {

struct AuditSpec {
  double step = 0.02;  // grid lambda, k = i * step inside (0, 1)
  std::vector<Approximation> methods{Approximation::series_one,
                                     Approximation::series_two};
  unsigned order_min = 1;
  unsigned order_max = 3;
  // Allowance for rounding in F and in the bounds: tol * max(1, F).
  double tol = 1e-14;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct AuditCounts {
  Approximation method = Approximation::series_one;
  unsigned order = 1;
  long total = 0;
  long sound = 0;
  long violated = 0;
  long skipped = 0;  // outside the method's region or unbounded enclosure
  long positive_remainder = 0;  // F - value > allowance
  // Smallest distance from the realized error to the nearer end of its
  // interval; negative when violated.
  double worst_margin = 0.0;
  double worst_lambda = 0.0;
  double worst_k = 0.0;
};

struct AuditReport {
  AuditSpec spec;
  long grid_points = 0;
  std::vector<AuditCounts> counts;  // methods x orders, in spec order

  long total_violations() const noexcept;
};

/// Checks every interior grid point. Throws std::invalid_argument unless
/// 0 < step <= 0.5 and order_min <= order_max.
AuditReport run_audit(const AuditSpec& spec);

void write_audit_text(std::ostream& os, const AuditReport& r);
void write_audit_csv(std::ostream& os, const AuditReport& r);
void write_audit_json(std::ostream& os, const AuditReport& r);

}  // namespace ellint::tools
