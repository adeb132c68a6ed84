#include "clustertilt/tilting.hpp"

#include <algorithm>

namespace clustertilt {

namespace {

bool compatible(const ClusterCategory& cc, int x, int y) {
  return cc.ext_dim(x, y) == 0 && cc.ext_dim(y, x) == 0;
}

void extend_cliques(const ClusterCategory& cc, std::vector<int>& current, int next,
                    std::vector<TiltingObject>& out) {
  if (static_cast<int>(current.size()) == cc.rank()) {
    out.push_back({current});
    return;
  }
  for (int c = next; c < cc.size(); ++c) {
    if (cc.ext_dim(c, c) != 0) continue;
    if (!std::all_of(current.begin(), current.end(), [&](int s) { return compatible(cc, s, c); })) continue;
    current.push_back(c);
    extend_cliques(cc, current, c + 1, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<int> TiltingObject::sorted() const {
  auto s = summands;
  std::sort(s.begin(), s.end());
  return s;
}

TiltingCheck check_cluster_tilting(const ClusterCategory& cc, std::span<const int> objects) {
  TiltingCheck check;
  std::vector<int> s(objects.begin(), objects.end());
  for (int c : s)
    if (c < 0 || c >= cc.size()) {
      check.reason = "object id " + std::to_string(c) + " out of range";
      return check;
    }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    check.reason = "repeated summand";
    return check;
  }
  if (static_cast<int>(s.size()) != cc.rank()) {
    check.reason = "expected " + std::to_string(cc.rank()) + " summands, got " + std::to_string(s.size());
    return check;
  }
  for (int x : objects) {
    for (int y : objects) {
      if (cc.ext_dim(x, y) != 0) {
        check.ext_witness = std::make_pair(x, y);
        check.reason = "Ext^1(" + cc.label(x) + ", " + cc.label(y) + ") != 0";
        return check;
      }
    }
  }
  for (int c = 0; c < cc.size(); ++c) {
    if (std::binary_search(s.begin(), s.end(), c)) continue;
    if (std::all_of(s.begin(), s.end(), [&](int t) { return compatible(cc, t, c); })) {
      check.maximality_witness = c;
      check.reason = "not maximal: " + cc.label(c) + " is Ext-orthogonal to every summand";
      return check;
    }
  }
  check.ok = true;
  return check;
}

bool is_cluster_tilting(const ClusterCategory& cc, std::span<const int> objects) {
  return check_cluster_tilting(cc, objects).ok;
}

std::vector<TiltingObject> enumerate_tilting(const ClusterCategory& cc) {
  std::vector<TiltingObject> out;
  std::vector<int> current;
  extend_cliques(cc, current, 0, out);
  return out;
}

TiltingObject mutate(const ClusterCategory& cc, const TiltingObject& t, int label) {
  if (label < 1 || label > t.rank()) throw std::invalid_argument("mutation label out of range");
  const auto k = static_cast<std::size_t>(label - 1);
  std::optional<int> found;
  for (int c = 0; c < cc.size(); ++c) {
    if (c == t.summands[k] || std::find(t.summands.begin(), t.summands.end(), c) != t.summands.end()) continue;
    if (cc.ext_dim(c, c) != 0) continue;
    bool ok = true;
    for (std::size_t j = 0; j < t.summands.size() && ok; ++j)
      if (j != k) ok = compatible(cc, t.summands[j], c);
    if (!ok) continue;
    if (found) throw EngineError("mutation has more than one complement");
    found = c;
  }
  if (!found) throw EngineError("mutation has no complement");
  TiltingObject out = t;
  out.summands[k] = *found;
  return out;
}

TiltingObject projective_tilting(const ClusterCategory& cc) {
  TiltingObject t;
  for (int i = 0; i < cc.rank(); ++i) t.summands.push_back(cc.projective(i));
  return t;
}

TiltingObject mutate_along(const ClusterCategory& cc, TiltingObject t, std::span<const int> labels) {
  for (int k : labels) t = mutate(cc, t, k);
  return t;
}

std::optional<std::size_t> find_tilting(std::span<const TiltingObject> all, const TiltingObject& t) {
  const auto key = t.sorted();
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k].sorted() == key) return k;
  return std::nullopt;
}

}  // namespace clustertilt
