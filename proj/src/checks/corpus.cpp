#include "toposcalc/checks/corpus.hpp"

#include <algorithm>

#include "toposcalc/json_io.hpp"

namespace toposcalc {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Load>
void load_each(Corpus& corpus, const char* sub, Load&& load) {
  for (const auto& file : json_files(corpus.root / sub)) {
    try {
      load(file, file.stem().string());
    } catch (const Error& e) {
      corpus.failures.push_back({file, e.what()});
    }
  }
}

}  // namespace

std::size_t Corpus::file_count() const {
  return categories.size() + sites.size() + presheaves.size() + structures.size() +
         groups.size() + gsets.size() + failures.size();
}

Corpus load_corpus(const fs::path& root) {
  if (!fs::is_directory(root)) {
    throw Error(ErrorKind::CorpusMissing, "no corpus directory at '" + root.string() + "'");
  }
  Corpus corpus;
  corpus.root = root;
  load_each(corpus, "categories", [&](const fs::path& file, const std::string& name) {
    auto cat = std::make_shared<const Category>(parse_category(read_json_file(file)));
    corpus.categories.push_back({name, file, cat});
  });
  load_each(corpus, "sites", [&](const fs::path& file, const std::string& name) {
    corpus.sites.push_back({name, file, load_site(file)});
  });
  load_each(corpus, "presheaves", [&](const fs::path& file, const std::string& name) {
    Json j = read_json_file(file);
    if (!j.contains("site") || !j.at("site").is_string()) {
      throw Error(ErrorKind::MalformedInput, "corpus presheaf needs a \"site\" path");
    }
    Site site = load_site(file.parent_path() / j.at("site").get<std::string>());
    auto f = std::make_shared<const Presheaf>(parse_presheaf(site.category, j));
    corpus.presheaves.push_back({name, file, site, f});
  });
  load_each(corpus, "structures", [&](const fs::path& file, const std::string& name) {
    corpus.structures.push_back({name, file, parse_structure(read_json_file(file))});
  });
  load_each(corpus, "groups", [&](const fs::path& file, const std::string& name) {
    auto g = std::make_shared<const PermGroup>(parse_group(read_json_file(file)));
    corpus.groups.push_back({name, file, g});
  });
  load_each(corpus, "gsets", [&](const fs::path& file, const std::string& name) {
    corpus.gsets.push_back({name, file, parse_gset(read_json_file(file), file.parent_path())});
  });
  return corpus;
}

}  // namespace toposcalc
