#pragma once

#include <functional>
#include <string>
#include <vector>

#include "toposcalc/checks/corpus.hpp"
#include "toposcalc/json_io.hpp"

namespace toposcalc {

struct CheckReport {
  std::string id;
  int criterion = 0;
  std::string title;
  int cases = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
  /// Records one case; keeps at most a handful of failure messages.
  void expect(bool ok, const std::string& what);
};

/// A property checked across the corpus. `criterion` links it to a numbered
/// acceptance criterion, or is 0.
struct Check {
  std::string id;
  int criterion = 0;
  std::string title;
  std::function<void(const Corpus&, CheckReport&)> run;
};

const std::vector<Check>& all_checks();

/// Runs one check, turning exceptions into failures.
CheckReport run_check(const Check& check, const Corpus& corpus);

/// JSON results of the main constructions over the whole corpus, used to
/// compare repeated runs.
Json corpus_snapshot(const Corpus& corpus);

}  // namespace toposcalc
