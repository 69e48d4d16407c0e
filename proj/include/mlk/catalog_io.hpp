#ifndef MLK_CATALOG_IO_HPP
#define MLK_CATALOG_IO_HPP

#include <string>
#include <vector>

#include "mlk/families.hpp"

namespace mlk {

// Serialize catalog entries (edges materialized at their p) to JSON.
std::string catalog_to_json(const std::vector<FamilySpec>& entries, int indent = 2);

// Parse a dumped catalog; entries are re-validated on use by
// family_lattice.
std::vector<FamilySpec> catalog_from_json(const std::string& text);

// Find an ingested entry matching series and p, if present.
const FamilySpec* catalog_find(const std::vector<FamilySpec>& entries, Series s, long p);

// Plain matrix schema {"rank": n, "rows": [[...], ...]} shared with the CLI.
std::string matrix_to_json(const IntMat& m, int indent = 2);
IntMat matrix_from_json(const std::string& text);

}  // namespace mlk

#endif
