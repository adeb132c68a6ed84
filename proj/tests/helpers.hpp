#pragma once

#include <stdexcept>
#include <vector>

#include "clustertilt/cluster.hpp"

namespace testing {

inline int object_with_dims(const clustertilt::ClusterCategory& cc, const std::vector<int>& dims) {
  for (int c = 0; c < cc.size(); ++c)
    if (cc.dim_vector(c) == dims) return c;
  throw std::runtime_error("no object with that dimension vector");
}

inline const clustertilt::ClusterCategory& category(clustertilt::Family f, int n) {
  static std::vector<std::unique_ptr<clustertilt::ClusterCategory>> cache(32);
  auto& slot = cache[static_cast<std::size_t>((f == clustertilt::Family::A ? 0 : 16) + n)];
  if (!slot) slot = clustertilt::build_category({f, n}, clustertilt::Orientation::default_for(f));
  return *slot;
}

}  // namespace testing
