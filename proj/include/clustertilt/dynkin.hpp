#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clustertilt/linalg.hpp"

namespace clustertilt {

/// Raised when an internal consistency check fails. Never caused by valid input.
class EngineError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Family { A, D };

struct DynkinSpec {
  Family family = Family::A;
  int rank = 1;

  void validate() const;
  /// Undirected edges of the diagram, 0-based vertex ids.
  std::vector<std::pair<int, int>> diagram_edges() const;
  int coxeter_number() const;
  int positive_root_count() const;
  std::string name() const;
};

std::string to_string(Family f);
Family parse_family(const std::string& s);

struct Arrow {
  int source = 0;  // 0-based
  int target = 0;
  std::string label;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quiver on vertices 0..n-1. Vertex i is shown as i+1 to users.
struct Quiver {
  int num_vertices = 0;
  std::vector<Arrow> arrows;

  bool is_acyclic() const;
  bool has_loops() const;
  /// Vertices ordered so every arrow target precedes its source (sinks first).
  std::vector<int> sinks_first_order() const;
  int arrow_count(int source, int target) const;
};

enum class OrientationKind { Linear, Fork, Custom };

struct Orientation {
  OrientationKind kind = OrientationKind::Linear;
  std::vector<std::pair<int, int>> arrows;  // 1-based, only for Custom

  static Orientation linear() { return {OrientationKind::Linear, {}}; }
  static Orientation fork() { return {OrientationKind::Fork, {}}; }
  static Orientation custom(std::vector<std::pair<int, int>> arrows) {
    return {OrientationKind::Custom, std::move(arrows)};
  }
  static Orientation default_for(Family f) { return f == Family::A ? linear() : fork(); }
  /// Parses "linear", "fork" or "custom:1>2,3>2".
  static Orientation parse(const std::string& text);
  std::string to_string() const;
};

/// Linear for A is 1->2->...->n. Fork for D has the two short arms n-1, n pointing into
/// the branch vertex n-2, and the long arm pointing down to 1.
Quiver build_quiver(const DynkinSpec& spec, const Orientation& orientation);

/// A vertex (orbit, offset) of the repetition quiver ZQ^op; (i, k) stands for tau^{-k} P_i.
struct CoverVertex {
  int orbit = 0;
  int offset = 0;

  friend auto operator<=>(const CoverVertex&, const CoverVertex&) = default;
};

/// The stable translation quiver ZQ^op carrying the derived category of a Dynkin quiver.
class RepetitionQuiver {
 public:
  explicit RepetitionQuiver(Quiver q);

  const Quiver& quiver() const { return quiver_; }
  int orbits() const { return quiver_.num_vertices; }
  std::vector<CoverVertex> successors(CoverVertex v) const;
  std::vector<CoverVertex> predecessors(CoverVertex v) const;
  static CoverVertex tau(CoverVertex v) { return {v.orbit, v.offset - 1}; }
  static CoverVertex tau_inverse(CoverVertex v) { return {v.orbit, v.offset + 1}; }
  /// Order in which the orbits of one slice are visited so same-slice arrows go forward.
  const std::vector<int>& slice_order() const { return slice_order_; }
  int slice_rank(int orbit) const { return slice_rank_[static_cast<std::size_t>(orbit)]; }
  /// Number of mesh middle terms ending at any vertex of the orbit.
  int mesh_width(int orbit) const;

 private:
  Quiver quiver_;
  std::vector<int> slice_order_;
  std::vector<int> slice_rank_;
};

struct ModIndec {
  int id = 0;
  std::vector<int> dim_vector;
  int orbit = 0;
  int offset = 0;
};

/// Auslander-Reiten quiver of mod kQ, knitted from the projectives.
class ModARQuiver {
 public:
  const Quiver& quiver() const { return cover_.quiver(); }
  const RepetitionQuiver& cover() const { return cover_; }
  std::span<const ModIndec> indecs() const { return indecs_; }
  const ModIndec& indec(int id) const { return indecs_.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(indecs_.size()); }

  std::optional<int> find(CoverVertex v) const;
  std::optional<int> tau(int id) const;
  std::optional<int> tau_inverse(int id) const;
  const std::vector<int>& successors(int id) const { return succ_.at(static_cast<std::size_t>(id)); }
  const std::vector<int>& predecessors(int id) const { return pred_.at(static_cast<std::size_t>(id)); }
  bool is_projective(int id) const { return indec(id).offset == 0; }
  bool is_injective(int id) const;
  int projective(int vertex) const;
  int injective(int vertex) const;
  /// Largest offset of a module in the given orbit.
  int last_offset(int orbit) const { return last_offset_.at(static_cast<std::size_t>(orbit)); }
  /// Class in K_0 of the cover vertex, valid for offsets in [0, last_offset + 1].
  std::vector<int> cover_class(CoverVertex v) const;

  int hom_dim(int x, int y) const { return hom_[static_cast<std::size_t>(x * size() + y)]; }
  int ext_dim(int x, int y) const;
  int euler_form(std::span<const int> x, std::span<const int> y) const;

  friend ModARQuiver knit(const Quiver& q);

 private:
  explicit ModARQuiver(RepetitionQuiver cover) : cover_(std::move(cover)) {}

  RepetitionQuiver cover_;
  std::vector<ModIndec> indecs_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<int> last_offset_;
  std::vector<std::vector<std::vector<int>>> classes_;  // [orbit][offset]
  std::vector<int> hom_;
};

/// Knits the AR quiver of mod kQ for an acyclic Dynkin quiver.
ModARQuiver knit(const Quiver& q);

/// A representation with explicit rational matrices; arrow a: i->j acts V_i -> V_j.
struct Representation {
  std::vector<int> dims;
  std::vector<Matrix> maps;  // maps[a] is dims[target] x dims[source]
};

/// Dimension of the space of intertwiners X -> Y.
int hom_space_dim(const Quiver& q, const Representation& x, const Representation& y);

/// An indecomposable with the given root as dimension vector: random integer matrices
/// retried until the endomorphism ring is one-dimensional.
Representation indecomposable_representation(const Quiver& q, std::span<const int> dim_vector,
                                             std::uint32_t seed = 1);

/// Hom dimension obtained from explicit representations, independent of knitting.
int brute_force_hom_dim(const Quiver& q, const ModIndec& x, const ModIndec& y);

}  // namespace clustertilt
