#pragma once

#include <string>
#include <vector>

// Invariant audit suite behind the `verify` command: every structural
// identity the library relies on, checked on deterministic pseudo-random
// inputs.  `full` adds the slower finite-difference and integration-order
// audits.

namespace procaflow {

struct AuditCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // worst metric observed, as text
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool all_pass() const;
};

AuditReport run_audit(bool full);

std::string to_json(const AuditReport& report);

}  // namespace procaflow
