#include "specat/law_report.hpp"

#include <algorithm>

namespace specat {

LawVerdict& LawReport::entry(std::string_view name) {
  for (auto& v : verdicts_)
    if (v.name == name) return v;
  LawVerdict v;
  v.name = std::string(name);
  verdicts_.push_back(std::move(v));
  return verdicts_.back();
}

void LawReport::merge(const LawReport& other) {
  for (const auto& v : other.verdicts_) {
    auto& mine = entry(v.name);
    mine.checks += v.checks;
    mine.failures += v.failures;
    mine.max_residual = std::max(mine.max_residual, v.max_residual);
    if (mine.passed && !v.passed) mine.counterexample = v.counterexample;
    mine.passed = mine.passed && v.passed;
  }
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool LawReport::passed() const {
  return std::all_of(verdicts_.begin(), verdicts_.end(), [](const auto& v) { return v.passed; });
}

const LawVerdict* LawReport::find(std::string_view name) const {
  for (const auto& v : verdicts_)
    if (v.name == name) return &v;
  return nullptr;
}

std::vector<std::string> LawReport::failed_laws() const {
  std::vector<std::string> out;
  for (const auto& v : verdicts_)
    if (!v.passed) out.push_back(v.name);
  return out;
}

}  // namespace specat
