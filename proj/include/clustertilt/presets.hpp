#pragma once

#include <stdexcept>
#include <string>

#include "clustertilt/cluster.hpp"
#include "clustertilt/tilting.hpp"

namespace clustertilt {

/// Raised for a cid list that is not cluster-tilting; carries the failed check.
class InvalidTilting : public std::invalid_argument {
 public:
  explicit InvalidTilting(TiltingCheck check);
  const TiltingCheck& check() const { return check_; }

 private:
  TiltingCheck check_;
};

/// Resolves a tilting description:
///   "3,0,7"                comma-separated cids, summand k gets label k
///   "@projectives"         the lift of the projectives
///   "@mutations:1,3,2"     mutation word applied to the projectives
///   "@find-quiver:NAME"    first tilting whose Gabriel quiver matches a named quiver
/// Empty text means "@projectives".
TiltingObject resolve_tilting(const ClusterCategory& cc, const std::string& text);

/// Comma-separated integers; throws std::invalid_argument on anything else.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace clustertilt
