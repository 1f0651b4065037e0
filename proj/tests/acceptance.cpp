// Prints one PASS/FAIL line per acceptance criterion.
//
//   acceptance <corpus-dir> [<toposcalc-binary>]

#include <array>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "toposcalc/checks/properties.hpp"

namespace {

const std::map<int, std::string> kCriteria = {
    {1, "topology laws and minimal saturation"},
    {2, "Ore categories get the non-empty sieves; V is degenerate"},
    {3, "dense-subsite pipeline postconditions"},
    {4, "sheafification"},
    {5, "three atom characterizations agree"},
    {6, "local connectedness biconditional"},
    {7, "atom transport along finer topologies"},
    {8, "completions count"},
    {9, "back-and-forth soundness"},
    {10, "cardinality sequents"},
    {11, "homogeneity and orbit coherence"},
    {12, "G-set atom counts 1, 2, 2, 5, 4"},
    {13, "determinism"},
};

// Files the reference expectations are pinned to; a criterion fails if any is
// missing, so a thinned corpus cannot pass vacuously.
const std::map<int, std::vector<std::string>> kFixtures = {
    {2, {"categories/v.json"}},
    {9, {"structures/c3.json", "structures/p3.json"}},
    {11, {"structures/lin2.json", "structures/lin3.json", "structures/lin4.json"}},
    {12,
     {"groups/trivial.json", "groups/z2.json", "groups/z3.json", "groups/z2xz2.json",
      "groups/s3.json"}},
};

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

// Runs a handful of CLI commands twice and compares their output bytes.
std::vector<std::string> cli_determinism(const std::string& exe, const std::string& corpus) {
  const std::vector<std::string> commands = {
      "atomic " + corpus + "/categories/diamond.json",
      "reduce " + corpus + "/categories/v_plus_terminal.json",
      "sheafify " + corpus + "/sites/arrow_atomic.json " + corpus + "/presheaves/arrow_pq.json",
      "subsheaves " + corpus + "/sites/z2_atomic.json " + corpus + "/presheaves/z2_two_points.json",
      "atoms " + corpus + "/sites/s3_atomic.json",
      "iso " + corpus + "/structures/c3.json " + corpus + "/structures/c3_relabeled.json",
      "aut " + corpus + "/structures/k3.json",
      "gset-atoms " + corpus + "/groups/s3.json",
  };
  std::vector<std::string> problems;
  for (const auto& c : commands) {
    std::string line = exe + " --json " + c + " 2>&1";
    int s1 = 0;
    int s2 = 0;
    std::string a = capture(line, s1);
    std::string b = capture(line, s2);
    if (s1 != 0 || s2 != 0) problems.push_back("'" + c + "' failed");
    if (a != b) problems.push_back("'" + c + "' output differs between runs");
  }
  return problems;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <corpus-dir> [<toposcalc-binary>]\n";
    return 1;
  }
  toposcalc::Corpus corpus = toposcalc::load_corpus(argv[1]);
  std::map<int, std::vector<std::string>> failures;
  std::map<int, double> seconds;
  for (const auto& check : toposcalc::all_checks()) {
    if (check.criterion == 0) continue;
    auto report = toposcalc::run_check(check, corpus);
    seconds[check.criterion] += report.seconds;
    for (const auto& f : report.failures) failures[check.criterion].push_back(check.id + ": " + f);
    if (report.cases == 0) failures[check.criterion].push_back(check.id + ": no cases");
  }
  for (const auto& [n, files] : kFixtures) {
    for (const auto& f : files) {
      if (!std::filesystem::is_regular_file(corpus.root / f)) {
        failures[n].push_back("missing fixture " + f);
      }
    }
  }
  for (const auto& f : corpus.failures) {
    failures[1].push_back("corpus: " + f.file.filename().string() + ": " + f.message);
  }
  if (argc >= 3) {
    for (const auto& p : cli_determinism(argv[2], argv[1])) failures[13].push_back("cli: " + p);
  }
  bool all = true;
  for (const auto& [n, title] : kCriteria) {
    bool ok = failures[n].empty();
    all = all && ok;
    std::printf("criterion %2d: %s  %s (%.2fs)\n", n, ok ? "PASS" : "FAIL", title.c_str(),
                seconds[n]);
    for (const auto& f : failures[n]) std::printf("    %s\n", f.c_str());
  }
  return all ? 0 : 1;
}
