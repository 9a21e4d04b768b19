#pragma once

#include <string>
#include <vector>

#include "softtop/instance.hpp"

namespace softtop {

/// One fixture of the reference catalog: its contract name (e.g. "FIX-3.8")
/// and parsed contents.
struct CatalogEntry {
  std::string name;
  InstanceFile file;
};

/// Loads every FIX-*.json file in `dir`, ordered by fixture number. Throws
/// InstanceError when a file does not parse and Error(kInvalidArgument) when
/// `dir` is not a readable directory.
std::vector<CatalogEntry> load_catalog(const std::string& dir);

struct CorpusCheck {
  std::string description;
  bool passed = false;
  std::string detail;  // observed values, useful on failure
};

struct FixtureResult {
  std::string name;
  std::vector<CorpusCheck> checks;
  /// Set when the fixture could not be resolved at all.
  std::string error;
  bool passed() const;
};

struct CorpusReport {
  std::vector<FixtureResult> fixtures;
  bool all_passed() const;
};

/// Runs the expectations registered for each fixture name. A fixture with no
/// registered expectations fails with a "no checks registered" error; an empty
/// catalog yields an empty report. Never throws for fixture content problems.
CorpusReport verify_corpus(const std::vector<CatalogEntry>& catalog);

}  // namespace softtop
