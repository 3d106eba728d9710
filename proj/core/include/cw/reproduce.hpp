#ifndef CW_REPRODUCE_HPP
#define CW_REPRODUCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace cw::rep {

struct CriterionResult {
  int id = 0;
  std::string tag;      // coarse filter group (codes, group, molien, ...)
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

using Progress = std::function<void(const CriterionResult&)>;

// Runs the reproduction suite. Criterion 14 (the f=3 Molien check) only
// runs when big is set; otherwise it is reported as skipped. When only
// is nonempty, criteria whose tag is not listed are skipped. The
// callback, if given, fires after each criterion.
std::vector<CriterionResult> run_criteria(bool big,
                                          const std::vector<std::string>& only = {},
                                          const Progress& progress = nullptr);

// True iff nothing failed (skipped criteria do not fail the run).
bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace cw::rep

#endif
