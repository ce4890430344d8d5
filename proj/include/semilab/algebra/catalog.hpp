#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semilab/algebra/instance.hpp"

namespace semilab {

struct CatalogEntry {
  InstancePtr instance;
  std::string summary;
};

// Named built-in instances. Besides the listed entries, lookup understands
// "euclideanD" (1 <= D <= 4) and "cyclicM" (1 <= M <= 1000000).
class Catalog {
 public:
  static const Catalog& builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  // Throws UnknownName.
  InstancePtr find(std::string_view name) const;
  const CatalogEntry* entry(std::string_view name) const;

 private:
  Catalog();
  std::vector<CatalogEntry> entries_;
};

InstancePtr find_instance(std::string_view name);

// "{left: yes, right: no, ...}" for listings.
std::string describe_annotations(const Annotations& annotations);

}  // namespace semilab
