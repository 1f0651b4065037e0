#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "toposcalc/category.hpp"
#include "toposcalc/gset.hpp"
#include "toposcalc/perm_group.hpp"
#include "toposcalc/presheaf.hpp"
#include "toposcalc/site.hpp"
#include "toposcalc/structure.hpp"

namespace toposcalc {

struct CorpusCategory {
  std::string name;
  std::filesystem::path file;
  CategoryPtr category;
};

struct CorpusSite {
  std::string name;
  std::filesystem::path file;
  Site site;
};

/// Presheaf files name their site under the extra key "site".
struct CorpusPresheaf {
  std::string name;
  std::filesystem::path file;
  Site site;
  std::shared_ptr<const Presheaf> presheaf;
};

struct CorpusStructure {
  std::string name;
  std::filesystem::path file;
  Structure structure;
};

struct CorpusGroup {
  std::string name;
  std::filesystem::path file;
  std::shared_ptr<const PermGroup> group;
};

struct CorpusGSet {
  std::string name;
  std::filesystem::path file;
  GSet gset;
};

struct LoadFailure {
  std::filesystem::path file;
  std::string message;
};

/// Everything under categories/, sites/, presheaves/, structures/, groups/
/// and gsets/, in file name order. Files that fail to load are recorded
/// rather than thrown.
struct Corpus {
  std::filesystem::path root;
  std::vector<CorpusCategory> categories;
  std::vector<CorpusSite> sites;
  std::vector<CorpusPresheaf> presheaves;
  std::vector<CorpusStructure> structures;
  std::vector<CorpusGroup> groups;
  std::vector<CorpusGSet> gsets;
  std::vector<LoadFailure> failures;

  std::size_t file_count() const;
};

/// Throws CorpusMissing if `root` is not a directory.
Corpus load_corpus(const std::filesystem::path& root);

}  // namespace toposcalc
