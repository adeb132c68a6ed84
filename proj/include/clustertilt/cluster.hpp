#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clustertilt/dynkin.hpp"
#include "clustertilt/linalg.hpp"

namespace clustertilt {

enum class IndecKind { Module, ShiftedProjective };

/// An indecomposable of the cluster category: a module or a shifted projective P_i[1].
struct ClusterIndec {
  int cid = 0;
  IndecKind kind = IndecKind::Module;
  int module_id = -1;  // set for modules
  int vertex = -1;     // set for shifted projectives
  CoverVertex cover;   // lift inside the fundamental domain
};

/// A morphism X -> Y of the cluster category, as coordinates over hom_basis(X, Y).
struct HomElement {
  int source = 0;
  int target = 0;
  Vector coords;

  bool is_zero() const { return clustertilt::is_zero(coords); }
  HomElement operator+(const HomElement& other) const;
  HomElement scaled(const Rational& c) const;

  friend bool operator==(const HomElement&, const HomElement&) = default;
};

/// Where a basis element of Hom_C(X, Y) lives on the universal cover.
struct HomBasisEntry {
  int lift = 0;                   // the component Hom(X~, F^lift Y~)
  std::vector<CoverVertex> path;  // representative path in the mesh category
};

struct HomBasis {
  int source = 0;
  int target = 0;
  int dim = 0;
  std::vector<HomElement> elements;
  std::vector<HomBasisEntry> entries;
};

namespace detail {

/// Hom(s, -) on a window of the cover, knitted through the mesh relations.
struct FunctorNode {
  int dim = 0;
  std::vector<std::pair<int, int>> parents;       // basis element -> (predecessor node, its basis index)
  std::vector<std::pair<int, Matrix>> incoming;   // (predecessor node, dim x dim_pred)
};

struct HomFunctor {
  CoverVertex source;
  int slices = 0;
  int orbits = 0;
  std::vector<FunctorNode> nodes;

  std::optional<int> index(CoverVertex v) const;
  CoverVertex vertex(int index) const;
};

struct LiftBlock {
  int lift = 0;
  int node = 0;   // node of the target lift in the source functor
  int start = 0;  // first coordinate of this block
  int dim = 0;
};

struct HomLayout {
  int dim = 0;
  std::vector<LiftBlock> blocks;
};

}  // namespace detail

/// The cluster category C_Q = D^b(mod kQ) / tau^{-1}[1] of a Dynkin quiver, with its AR quiver
/// and the mesh category computed on the repetition quiver.
class ClusterCategory {
 public:
  explicit ClusterCategory(ModARQuiver ar);

  ClusterCategory(const ClusterCategory&) = delete;
  ClusterCategory& operator=(const ClusterCategory&) = delete;
  ClusterCategory(ClusterCategory&&) = delete;

  const ModARQuiver& modules() const { return ar_; }
  const RepetitionQuiver& cover() const { return ar_.cover(); }
  const Quiver& quiver() const { return ar_.quiver(); }
  Family family() const { return family_; }
  int rank() const { return quiver().num_vertices; }
  int coxeter_number() const { return coxeter_; }
  int window() const { return 2 * coxeter_; }
  int size() const { return static_cast<int>(indecs_.size()); }

  std::span<const ClusterIndec> indecs() const { return indecs_; }
  const ClusterIndec& indec(int cid) const { return indecs_.at(static_cast<std::size_t>(cid)); }
  int module_cid(int module_id) const { return module_id; }
  int shifted_projective(int vertex) const { return ar_.size() + vertex; }
  int projective(int vertex) const { return ar_.projective(vertex); }
  std::string label(int cid) const;
  std::vector<int> dim_vector(int cid) const;

  /// Arrows of Gamma(C), repeated by multiplicity.
  const std::vector<int>& successors(int cid) const { return succ_.at(static_cast<std::size_t>(cid)); }
  const std::vector<int>& predecessors(int cid) const { return pred_.at(static_cast<std::size_t>(cid)); }
  int arrow_count() const;

  int tau(int cid) const { return tau_.at(static_cast<std::size_t>(cid)); }
  int tau_inverse(int cid) const { return tau_inv_.at(static_cast<std::size_t>(cid)); }
  /// [1] coincides with tau on objects of C.
  int shift(int cid) const { return tau(cid); }

  /// Dimension from the module category: Hom_C(X,Y) = Hom_D(X,Y) + Hom_D(X, F Y).
  int hom_dim(int x, int y) const { return hom_[static_cast<std::size_t>(x * size() + y)]; }
  int ext_dim(int x, int y) const { return hom_dim(x, shift(y)); }

  /// Basis of Hom_C(X, Y) computed independently on the universal cover.
  HomBasis hom_basis(int x, int y) const;
  int hom_basis_dim(int x, int y) const { return layout(x, y).dim; }
  HomElement identity(int x) const;
  HomElement zero(int x, int y) const;
  /// The composite "first, then second".
  HomElement compose(const HomElement& first, const HomElement& second) const;
  /// The class of a path of the cover starting at the lift of an object.
  HomElement path_element(std::span<const CoverVertex> path) const;
  /// The irreducible map along the k-th arrow source -> target of Gamma(C).
  HomElement arrow_element(int source, int target, int which = 0) const;

  /// Cover coordinates of the lift of cid inside the fundamental domain.
  CoverVertex lift(int cid) const { return indec(cid).cover; }
  /// The object of C represented by a cover vertex.
  int object_at(CoverVertex v) const;
  CoverVertex apply_orbit_functor(CoverVertex v, int times = 1) const;
  /// dim Hom(u, v) in the mesh category of the cover.
  int cover_hom_dim(CoverVertex u, CoverVertex v) const;
  /// Structure constants: entry a * dim(y,z) + b is basis(x,y)[a] then basis(y,z)[b].
  const std::vector<Vector>& composition_table(int x, int y, int z) const;

 private:
  CoverVertex orbit_functor(CoverVertex v) const;
  CoverVertex orbit_functor_inverse(CoverVertex v) const;
  CoverVertex reduce(CoverVertex v) const;
  detail::HomFunctor knit_functor(CoverVertex source) const;
  const detail::HomLayout& layout(int x, int y) const {
    return layouts_[static_cast<std::size_t>(x * size() + y)];
  }
  std::vector<CoverVertex> basis_path(int x, const detail::FunctorNode& node, int node_index, int b) const;
  Vector evaluate_path(int x, int start_node, Vector value, std::span<const CoverVertex> path) const;
  std::vector<Vector> build_composition_table(int x, int y, int z) const;
  void validate_translation_quiver() const;
  int hom_dim_from_modules(const ClusterIndec& x, const ClusterIndec& y) const;

  ModARQuiver ar_;
  Family family_ = Family::A;
  int coxeter_ = 0;
  std::vector<int> functor_orbit_;   // F(i, k) = (functor_orbit_[i], k + functor_offset_[i])
  std::vector<int> functor_offset_;
  std::vector<int> inverse_orbit_;
  std::vector<ClusterIndec> indecs_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<int> tau_;
  std::vector<int> tau_inv_;
  std::vector<int> hom_;
  std::vector<detail::HomFunctor> functors_;
  std::vector<detail::HomLayout> layouts_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<std::shared_ptr<const std::vector<Vector>>> composition_cache_;
};

/// Convenience: quiver, knitting and cluster category in one step.
std::unique_ptr<ClusterCategory> build_category(const DynkinSpec& spec, const Orientation& orientation);

}  // namespace clustertilt
