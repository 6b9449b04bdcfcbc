#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace openpack {

using Element = std::uint32_t;
using ElementSet = std::vector<Element>;

/// r-Hitting Set: a family of r-subsets of the universe {0..universe_size-1}.
struct HittingSetInstance {
  std::size_t universe_size = 0;
  std::size_t r = 0;
  std::vector<ElementSet> sets;  // each sorted, size exactly r

  /// Throws InvalidInput unless every set has r distinct in-range elements.
  /// Sets are normalised to sorted order.
  void validate();
};

using Tuple = std::vector<std::uint32_t>;
using TupleIndex = std::uint32_t;

/// r-Dimensional Matching over coordinate domains {0..q-1}.
struct RdmInstance {
  std::size_t r = 0;
  std::size_t q = 0;
  std::vector<Tuple> tuples;

  /// Throws InvalidInput unless M is non-empty, tuples have arity r, values
  /// are below q and no tuple repeats.
  void validate() const;
};

}  // namespace openpack
