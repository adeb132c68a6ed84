#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clustertilt/algebra.hpp"
#include "clustertilt/cluster.hpp"
#include "clustertilt/tilting.hpp"

namespace clustertilt {

enum class HammockKind { Left, Right, Hij };
enum class Shape { Empty, SectionalPath, Swing, FullIntersection };

std::string to_string(Shape s);
Shape parse_shape(const std::string& s);

/// A set of vertices of Gamma(C) attached to summands of T (labels are 1-based).
struct HammockSet {
  HammockKind kind = HammockKind::Hij;
  int i = 0;
  int j = 0;
  std::vector<int> vertices;  // sorted cids
  Shape shape = Shape::Empty;

  bool contains(int cid) const;
  friend bool operator==(const HammockSet&, const HammockSet&) = default;
};

/// H_i = supp Hom_C(T_i[1], -).
HammockSet left_hammock(const ClusterCategory& cc, const TiltingObject& t, int i);
/// _jH = supp Hom_C(-, T_j[1]).
HammockSet right_hammock(const ClusterCategory& cc, const TiltingObject& t, int j);

/// Objects X such that a nonzero map a -> b factors through X (exact rank test).
std::vector<int> factoring_objects(const ClusterCategory& cc, int a, int b);

/// H(i, j) with the shape predicted by the closed form attached.
HammockSet hij(const ClusterCategory& cc, const TiltingObject& t, int i, int j);

struct Factorization {
  int i = 0;
  int j = 0;
  HomElement g;  // T_i[1] -> M
  HomElement h;  // M -> T_j[1]
};

/// A witness for I_M != 0, or nullopt when I_M = 0.
std::optional<Factorization> factorization_witness(const ClusterCategory& cc, const TiltingObject& t, int m);
bool factorization_ideal_nonzero(const ClusterCategory& cc, const TiltingObject& t, int m);

/// All sectional paths of the cover from the lift of x to any lift of y, as object lists.
std::vector<std::vector<int>> sectional_paths(const ClusterCategory& cc, int x, int y);
/// The sectional path from x to y when there is exactly one.
std::optional<std::vector<int>> sectional_path(const ClusterCategory& cc, int x, int y);

/// Objects on sectional routes T_i[1] -> X -> T_j[1] through middle terms X of meshes with
/// three middle terms (type D).
std::vector<int> swing(const ClusterCategory& cc, const TiltingObject& t, int i, int j);

/// H_i and _jH intersected on the universal cover, between the lift of T_i[1] and each lift of
/// T_j[1] it maps to nonzero; the category-level intersection can be larger when supports wrap.
std::vector<int> cover_hammock_intersection(const ClusterCategory& cc, const TiltingObject& t, int i, int j);

class Unclassifiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClosedForm {
  Shape shape = Shape::Empty;
  std::vector<int> predicted;
  /// Which hypothesis held: "sectional", "Hom(T_i[1],T_i)!=0", "Hom(T_i[1],T_i)=0", ...
  std::string hypothesis;
};

/// Closed-form prediction of H(i, j) for types A and D; throws Unclassifiable otherwise.
ClosedForm hij_closed_form(const ClusterCategory& cc, const TiltingObject& t, int i, int j);
Shape classify_shape(const ClusterCategory& cc, const TiltingObject& t, int i, int j);

struct ModuleRow {
  int cid = 0;
  std::vector<int> dim_vector;  // dim Hom_C(T_i, M) per label
  bool ideal_nonzero = false;
  PdClass pd = PdClass::Zero;
  std::vector<std::pair<int, int>> in_hij;  // (i, j) with M in H(i, j), 1-based

  friend bool operator==(const ModuleRow&, const ModuleRow&) = default;
};

struct TheoremReport {
  TiltingObject tilting;
  std::vector<ModuleRow> rows;
  bool agreement = true;
  bool union_matches = true;  // union of H(i,j) minus T[1] equals the infinite-pd set
  std::array<int, 3> counts{};  // Zero, One, Infinite
  std::vector<HammockSet> hammocks;  // nonempty H(i, j), i != j

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

TheoremReport verify_main_theorem(const ClusterCategory& cc, const TiltingObject& t);
/// Union over (i, j) of H(i, j) minus add T[1].
std::vector<int> infinite_pd_set(const ClusterCategory& cc, const TiltingObject& t);

}  // namespace clustertilt
