#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dycktab {

/// Outcome of one exhaustive proposition check.
struct VerificationReport {
  std::string id;
  std::string description;
  int max_n = 0;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;  // serialized counterexamples
  std::string notes;

  bool passed() const { return failures.empty(); }
  /// One summary line, plus the first few counterexamples on failure.
  std::string to_text() const;
};

/// Registered proposition ids, in report order.
const std::vector<std::string>& proposition_ids();

/// Default exhaustive bound of a proposition: 7 for counting-only checks,
/// 6 for everything else.
int default_max_n(const std::string& id);

/// Runs one exhaustive check. max_n <= 0 selects the default bound.
/// Throws UnknownProposition for unregistered ids.
VerificationReport verify(const std::string& id, int max_n = 0);

/// Runs every registered check, optionally sharded over worker threads.
std::vector<VerificationReport> verify_all(int max_n = 0, int workers = 1);

}  // namespace dycktab
