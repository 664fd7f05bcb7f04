#include "motive/structure.hpp"

#include <algorithm>

namespace motive {

std::vector<StructureConstants::Term> collect_terms(const std::vector<int> &indices) {
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<StructureConstants::Term> out;
  for (int k : sorted) {
    if (!out.empty() && out.back().first == k)
      ++out.back().second;
    else
      out.emplace_back(k, 1);
  }
  return out;
}

} // namespace motive
