#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clustertilt/cluster.hpp"

namespace clustertilt {

/// A cluster-tilting object; summand k carries label k + 1.
struct TiltingObject {
  std::vector<int> summands;  // cids

  int rank() const { return static_cast<int>(summands.size()); }
  int at(int label) const { return summands.at(static_cast<std::size_t>(label - 1)); }
  std::vector<int> sorted() const;
  friend bool operator==(const TiltingObject&, const TiltingObject&) = default;
};

struct TiltingCheck {
  bool ok = false;
  std::string reason;
  std::optional<std::pair<int, int>> ext_witness;  // (X, Y) with Ext^1(X, Y) != 0
  std::optional<int> maximality_witness;           // object compatible with all of S
};

TiltingCheck check_cluster_tilting(const ClusterCategory& cc, std::span<const int> objects);
bool is_cluster_tilting(const ClusterCategory& cc, std::span<const int> objects);

/// All cluster-tilting objects, each as a sorted cid list, in lexicographic order.
std::vector<TiltingObject> enumerate_tilting(const ClusterCategory& cc);

/// Replaces summand `label` by the unique other complement.
TiltingObject mutate(const ClusterCategory& cc, const TiltingObject& t, int label);

/// The lift of the projectives P_1, ..., P_n.
TiltingObject projective_tilting(const ClusterCategory& cc);

/// Mutation along a word of labels, starting from the given object.
TiltingObject mutate_along(const ClusterCategory& cc, TiltingObject t, std::span<const int> labels);

/// Index of t (as a set) in an enumeration, or nullopt.
std::optional<std::size_t> find_tilting(std::span<const TiltingObject> all, const TiltingObject& t);

}  // namespace clustertilt
