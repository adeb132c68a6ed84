#include "clustertilt/presets.hpp"

#include <charconv>

#include "clustertilt/algebra.hpp"

namespace clustertilt {

InvalidTilting::InvalidTilting(TiltingCheck check)
    : std::invalid_argument("not cluster-tilting: " + check.reason), check_(std::move(check)) {}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    int value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
      throw std::invalid_argument("expected a comma-separated list of integers, got '" + text + "'");
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

TiltingObject resolve_tilting(const ClusterCategory& cc, const std::string& text) {
  if (text.empty() || text == "@projectives") return projective_tilting(cc);
  const std::string mutations = "@mutations:";
  const std::string find_quiver = "@find-quiver:";
  if (text.rfind(mutations, 0) == 0) {
    const auto word = parse_int_list(text.substr(mutations.size()));
    for (int k : word)
      if (k < 1 || k > cc.rank()) throw std::invalid_argument("mutation label " + std::to_string(k) + " out of range");
    return mutate_along(cc, projective_tilting(cc), word);
  }
  if (text.rfind(find_quiver, 0) == 0) {
    auto name = text.substr(find_quiver.size());
    if (name == "paper-d6") name = "d6-cycle";
    const auto q = named_quiver(name);
    if (!q) throw std::invalid_argument("unknown quiver preset '" + name + "'");
    const auto all = enumerate_tilting(cc);
    auto t = find_tilting_with_quiver(cc, all, *q);
    if (!t) throw std::invalid_argument("no tilting object has the quiver '" + name + "'");
    return *t;
  }
  TiltingObject t{parse_int_list(text)};
  for (int c : t.summands)
    if (c < 0 || c >= cc.size()) throw std::invalid_argument("cid " + std::to_string(c) + " out of range");
  auto check = check_cluster_tilting(cc, t.summands);
  if (!check.ok) throw InvalidTilting(std::move(check));
  return t;
}

}  // namespace clustertilt
