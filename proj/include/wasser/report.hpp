#ifndef WASSER_REPORT_HPP
#define WASSER_REPORT_HPP

#include <limits>
#include <string>

namespace wasser {

/// Outcome of checking one law/inequality over a batch of instances.
/// worst_slack is the smallest RHS - LHS seen; negative means a
/// violation of that magnitude. witness describes the worst instance.
struct LawReport {
  std::string law;
  long trials = 0;
  long failures = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  std::string witness;

  bool passed() const { return failures == 0; }
};

/// One trial's result inside a law batch.
struct TrialOutcome {
  double slack = std::numeric_limits<double>::infinity();
  bool violated = false;
  std::string witness;
};

}  // namespace wasser

#endif
