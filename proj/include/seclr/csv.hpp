#pragma once

#include <map>
#include <string>
#include <vector>

#include "seclr/dataset.hpp"

namespace seclr {

// CSV ingestion source. Header row required; RFC-4180 quoting honored.
// An empty covariates list means "every column except the response".
// Responses must parse to exactly 0 or 1 unless an explicit mapping is
// given (e.g. {"no": 0, "yes": 1}) — nothing is coerced silently.
struct TabularSource {
  std::string path;
  std::string response = "y";
  std::vector<std::string> covariates;
  char delimiter = ',';
  std::map<std::string, int> response_mapping;
};

// Loads the file into a pooled dataset with a prepended intercept column;
// row order preserved.
LocalDataset load_csv(const TabularSource& src);

// Writes a dataset (without the intercept column) as CSV with header
// "y,x1,...". Used by the data-generation command; load_csv round-trips it.
void write_csv(const LocalDataset& ds, const std::string& path);

}  // namespace seclr
