#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clustertilt/cluster.hpp"
#include "clustertilt/tilting.hpp"

namespace clustertilt {

/// Basis element of End_C(T) living in Hom_C(T_from, T_to); labels are 0-based here.
struct AlgebraBasisElement {
  int from = 0;
  int to = 0;
  bool identity = false;
  HomElement element;
};

/// The cluster-tilted algebra End_C(T) with exact structure constants.
class ClusterTiltedAlgebra {
 public:
  ClusterTiltedAlgebra(const ClusterCategory& cc, TiltingObject tilting);

  const ClusterCategory& category() const { return *cc_; }
  const TiltingObject& tilting() const { return tilting_; }
  int labels() const { return tilting_.rank(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::span<const AlgebraBasisElement> basis() const { return basis_; }
  const AlgebraBasisElement& element(int index) const { return basis_.at(static_cast<std::size_t>(index)); }

  int block_start(int from, int to) const { return block_start_[index(from, to)]; }
  int block_dim(int from, int to) const { return block_dim_[index(from, to)]; }
  int identity_index(int label) const { return identity_.at(static_cast<std::size_t>(label)); }
  bool is_radical(int index) const { return !element(index).identity; }

  /// "first, then second" as coordinates over the whole basis.
  const Vector& product(int first, int second) const;
  Vector multiply(const Vector& first, const Vector& second) const;
  bool is_associative() const;

 private:
  std::size_t index(int from, int to) const { return static_cast<std::size_t>(from * labels() + to); }

  const ClusterCategory* cc_;
  TiltingObject tilting_;
  std::vector<AlgebraBasisElement> basis_;
  std::vector<int> block_start_;
  std::vector<int> block_dim_;
  std::vector<int> identity_;
  std::vector<Vector> products_;  // dim x dim
};

ClusterTiltedAlgebra build_algebra(const ClusterCategory& cc, const TiltingObject& tilting);

/// A right module over the algebra: V_i at each label, and for every basis element
/// b in Hom(T_j, T_i) the map V_i -> V_j given by precomposition with b.
struct CModule {
  std::vector<int> dims;
  std::vector<Matrix> action;

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

/// Hom_C(T, M) for M not in add T[1].
CModule module_of(const ClusterTiltedAlgebra& algebra, int object);
/// The indecomposable projective Hom_C(T, T_label) (0-based label).
CModule projective_module(const ClusterTiltedAlgebra& algebra, int label);
bool satisfies_module_axioms(const ClusterTiltedAlgebra& algebra, const CModule& m);

/// dim of top(m) = m / rad m at each label.
std::vector<int> top_dims(const ClusterTiltedAlgebra& algebra, const CModule& m);

struct ProjectiveCover {
  std::vector<int> multiplicity;  // copies of P_k in the cover
  CModule cover;
  std::vector<Matrix> map;        // per label, cover -> module
};

/// Minimal projective cover built on generators lifting a basis of the top.
ProjectiveCover projective_cover(const ClusterTiltedAlgebra& algebra, const CModule& m);
CModule syzygy(const ClusterTiltedAlgebra& algebra, const CModule& m);
bool is_projective(const ClusterTiltedAlgebra& algebra, const CModule& m);

enum class PdClass { Zero, One, Infinite };
std::string to_string(PdClass pd);

/// Projective dimension in {0, 1, inf}. Throws EngineError if a module of projective
/// dimension exactly 2 appears.
PdClass pd_class(const ClusterTiltedAlgebra& algebra, const CModule& m);

struct AlgebraArrow {
  int source = 0;  // Gabriel quiver arrow source -> target, 0-based labels
  int target = 0;
  Vector element;  // representative in rad \ rad^2, lives in Hom(T_target, T_source)
};

/// Arrows i -> j count dim (rad / rad^2) inside Hom_C(T_j, T_i).
std::vector<AlgebraArrow> algebra_arrows(const ClusterTiltedAlgebra& algebra);
Quiver gabriel_quiver(const ClusterTiltedAlgebra& algebra);

/// The algebra element of a path of Gabriel quiver arrows a_1 a_2 ... a_r (consecutive arrows).
Vector path_product(const ClusterTiltedAlgebra& algebra, std::span<const AlgebraArrow> path);

/// A vertex bijection p with arrow_count(i, j) = other.arrow_count(p[i], p[j]), if any.
std::optional<std::vector<int>> quiver_isomorphism(const Quiver& from, const Quiver& to);

/// A tilting object from the list whose Gabriel quiver is isomorphic to `target`, with its
/// summands reordered so that label k matches vertex k of `target`.
std::optional<TiltingObject> find_tilting_with_quiver(const ClusterCategory& cc,
                                                      std::span<const TiltingObject> tiltings,
                                                      const Quiver& target);

/// Named quivers usable as search targets: "d6-cycle" is the rank 6 quiver
/// 5->4, 6->4, 4->1, 1->2, 2->3, 3->1 with arrows b, a, c, e, f, d.
std::optional<Quiver> named_quiver(const std::string& name);

}  // namespace clustertilt
