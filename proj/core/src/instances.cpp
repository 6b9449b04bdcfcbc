#include "openpack/instances.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "openpack/errors.hpp"

namespace openpack {

void HittingSetInstance::validate() {
  if (r == 0) throw InvalidInput("hitting set arity must be at least 1");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto& W = sets[i];
    std::sort(W.begin(), W.end());
    if (std::adjacent_find(W.begin(), W.end()) != W.end()) {
      throw InvalidInput("set " + std::to_string(i) + " repeats an element");
    }
    if (W.size() != r) {
      throw InvalidInput("set " + std::to_string(i) + " has " + std::to_string(W.size()) +
                         " elements, expected " + std::to_string(r));
    }
    if (!W.empty() && W.back() >= universe_size) {
      throw InvalidInput("set " + std::to_string(i) + " has an element outside the universe");
    }
  }
}

void RdmInstance::validate() const {
  if (r == 0 || q == 0) throw InvalidInput("r and q must be positive");
  if (tuples.empty()) throw InvalidInput("tuple family M is empty");
  std::set<Tuple> seen;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const auto& t = tuples[i];
    if (t.size() != r) {
      throw InvalidInput("tuple " + std::to_string(i) + " has arity " + std::to_string(t.size()) +
                         ", expected " + std::to_string(r));
    }
    for (auto value : t) {
      if (value >= q) {
        throw InvalidInput("tuple " + std::to_string(i) + " has coordinate value " +
                           std::to_string(value) + " >= q");
      }
    }
    if (!seen.insert(t).second) throw InvalidInput("tuple " + std::to_string(i) + " repeats");
  }
}

}  // namespace openpack
