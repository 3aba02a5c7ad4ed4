#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specat {

struct LawVerdict {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
  // First failing instance, as serialized arrows ("label = value").
  std::vector<std::string> counterexample;
};

// Ordered collection of per-law verdicts. Merging is associative: counts add,
// residuals take the max, and the first recorded counterexample wins.
class LawReport {
 public:
  LawVerdict& entry(std::string_view name);

  // Records one check of `name`. `witness` is only invoked on the first failure.
  template <class WitnessFn>
  void record(std::string_view name, bool ok, double residual, WitnessFn&& witness) {
    auto& v = entry(name);
    ++v.checks;
    if (residual > v.max_residual) v.max_residual = residual;
    if (!ok) {
      ++v.failures;
      if (v.passed) v.counterexample = witness();
      v.passed = false;
    }
  }

  void record(std::string_view name, bool ok, double residual = 0.0) {
    record(name, ok, residual, [] { return std::vector<std::string>{}; });
  }

  void merge(const LawReport& other);

  bool passed() const;
  const LawVerdict* find(std::string_view name) const;
  const std::vector<LawVerdict>& verdicts() const { return verdicts_; }
  std::vector<std::string> failed_laws() const;

  // Informational key/value notes (thresholds used, instance names, ...).
  void note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }
  const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }

 private:
  std::vector<LawVerdict> verdicts_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

}  // namespace specat
