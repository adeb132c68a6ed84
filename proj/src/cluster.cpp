#include "clustertilt/cluster.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace clustertilt {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

Family infer_family(const Quiver& q) {
  std::vector<int> degree(sz(q.num_vertices), 0);
  for (const auto& a : q.arrows) {
    ++degree[sz(a.source)];
    ++degree[sz(a.target)];
  }
  return std::any_of(degree.begin(), degree.end(), [](int d) { return d >= 3; }) ? Family::D : Family::A;
}

}  // namespace

HomElement HomElement::operator+(const HomElement& other) const {
  if (source != other.source || target != other.target || coords.size() != other.coords.size())
    throw std::invalid_argument("HomElement: adding morphisms of different Hom spaces");
  HomElement out = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) out.coords[k] += other.coords[k];
  return out;
}

HomElement HomElement::scaled(const Rational& c) const {
  HomElement out = *this;
  for (auto& x : out.coords) x *= c;
  return out;
}

namespace detail {

std::optional<int> HomFunctor::index(CoverVertex v) const {
  const int r = v.offset - source.offset;
  if (r < 0 || r >= slices || v.orbit < 0 || v.orbit >= orbits) return std::nullopt;
  return r * orbits + v.orbit;
}

CoverVertex HomFunctor::vertex(int index) const {
  return {index % orbits, source.offset + index / orbits};
}

}  // namespace detail

ClusterCategory::ClusterCategory(ModARQuiver ar) : ar_(std::move(ar)) {
  const int n = ar_.quiver().num_vertices;
  family_ = infer_family(ar_.quiver());
  coxeter_ = 2 * ar_.size() / n;

  // P_j[1] sits right after the last module of some orbit; its class is -dim P_j
  functor_orbit_.assign(sz(n), -1);
  functor_offset_.assign(sz(n), 0);
  inverse_orbit_.assign(sz(n), -1);
  for (int o = 0; o < n; ++o) {
    auto cls = ar_.cover_class({o, ar_.last_offset(o) + 1});
    for (auto& c : cls) c = -c;
    int found = -1;
    for (int j = 0; j < n; ++j)
      if (ar_.indec(ar_.projective(j)).dim_vector == cls) found = j;
    if (found < 0 || functor_orbit_[sz(found)] >= 0)
      throw EngineError("could not place shifted projectives on the cover");
    functor_orbit_[sz(found)] = o;
    functor_offset_[sz(found)] = ar_.last_offset(o) + 2;
    inverse_orbit_[sz(o)] = found;
  }

  // F must be an automorphism of the translation quiver ZQ^op
  for (int k = -2; k <= coxeter_ + 2; ++k) {
    for (int o = 0; o < n; ++o) {
      const CoverVertex v{o, k};
      std::vector<CoverVertex> mapped;
      for (auto s : cover().successors(v)) mapped.push_back(orbit_functor(s));
      std::sort(mapped.begin(), mapped.end());
      if (mapped != cover().successors(orbit_functor(v)))
        throw EngineError("orbit functor does not preserve arrows");
    }
  }

  for (const auto& m : ar_.indecs()) {
    ClusterIndec c;
    c.cid = static_cast<int>(indecs_.size());
    c.kind = IndecKind::Module;
    c.module_id = m.id;
    c.cover = {m.orbit, m.offset};
    indecs_.push_back(c);
  }
  for (int j = 0; j < n; ++j) {
    ClusterIndec c;
    c.cid = static_cast<int>(indecs_.size());
    c.kind = IndecKind::ShiftedProjective;
    c.vertex = j;
    c.cover = {functor_orbit_[sz(j)], functor_offset_[sz(j)] - 1};
    indecs_.push_back(c);
  }

  const int size = this->size();
  succ_.assign(sz(size), {});
  pred_.assign(sz(size), {});
  tau_.assign(sz(size), -1);
  tau_inv_.assign(sz(size), -1);
  for (const auto& c : indecs_) {
    for (auto s : cover().successors(c.cover)) {
      const int t = object_at(s);
      succ_[sz(c.cid)].push_back(t);
      pred_[sz(t)].push_back(c.cid);
    }
    const int t = object_at(RepetitionQuiver::tau(c.cover));
    tau_[sz(c.cid)] = t;
    tau_inv_[sz(t)] = c.cid;
  }
  for (auto& p : pred_) std::sort(p.begin(), p.end());
  for (auto& s : succ_) std::sort(s.begin(), s.end());
  validate_translation_quiver();

  hom_.assign(sz(size * size), 0);
  for (const auto& x : indecs_)
    for (const auto& y : indecs_) hom_[sz(x.cid * size + y.cid)] = hom_dim_from_modules(x, y);

  functors_.reserve(sz(size));
  for (const auto& c : indecs_) functors_.push_back(knit_functor(c.cover));

  layouts_.assign(sz(size * size), {});
  for (const auto& x : indecs_) {
    const auto& f = functors_[sz(x.cid)];
    for (const auto& y : indecs_) {
      auto& lay = layouts_[sz(x.cid * size + y.cid)];
      CoverVertex target = y.cover;
      for (int m = 0; target.offset < x.cover.offset + f.slices; ++m, target = orbit_functor(target)) {
        const auto idx = f.index(target);
        if (!idx) continue;
        const int d = f.nodes[sz(*idx)].dim;
        if (d == 0) continue;
        lay.blocks.push_back({m, *idx, lay.dim, d});
        lay.dim += d;
      }
      if (lay.dim != hom_dim(x.cid, y.cid))
        throw EngineError("Hom dimension mismatch between module formula and mesh category for " +
                          label(x.cid) + " -> " + label(y.cid));
    }
  }
  composition_cache_.assign(sz(size) * sz(size) * sz(size), nullptr);
}

CoverVertex ClusterCategory::orbit_functor(CoverVertex v) const {
  return {functor_orbit_[sz(v.orbit)], v.offset + functor_offset_[sz(v.orbit)]};
}

CoverVertex ClusterCategory::orbit_functor_inverse(CoverVertex v) const {
  const int o = inverse_orbit_[sz(v.orbit)];
  return {o, v.offset - functor_offset_[sz(o)]};
}

CoverVertex ClusterCategory::apply_orbit_functor(CoverVertex v, int times) const {
  for (; times > 0; --times) v = orbit_functor(v);
  for (; times < 0; ++times) v = orbit_functor_inverse(v);
  return v;
}

CoverVertex ClusterCategory::reduce(CoverVertex v) const {
  while (v.offset < 0) v = orbit_functor(v);
  while (v.offset > ar_.last_offset(v.orbit) + 1) v = orbit_functor_inverse(v);
  if (v.offset < 0) throw EngineError("fundamental domain is not a domain for F");
  return v;
}

int ClusterCategory::cover_hom_dim(CoverVertex u, CoverVertex v) const {
  int times = 0;
  while (u.offset < 0) {
    u = orbit_functor(u);
    ++times;
  }
  while (u.offset > ar_.last_offset(u.orbit) + 1) {
    u = orbit_functor_inverse(u);
    --times;
  }
  v = apply_orbit_functor(v, times);
  const auto& f = functors_[sz(object_at(u))];
  const auto idx = f.index(v);
  return idx ? f.nodes[sz(*idx)].dim : 0;
}

int ClusterCategory::object_at(CoverVertex v) const {
  v = reduce(v);
  if (v.offset <= ar_.last_offset(v.orbit)) return *ar_.find(v);
  return shifted_projective(inverse_orbit_[sz(v.orbit)]);
}

void ClusterCategory::validate_translation_quiver() const {
  std::vector<bool> hit(sz(size()), false);
  for (int c = 0; c < size(); ++c) {
    if (tau_[sz(c)] < 0 || hit[sz(tau_[sz(c)])]) throw EngineError("tau_C is not a permutation");
    hit[sz(tau_[sz(c)])] = true;
    // mesh: predecessors of Z are the successors of tau Z
    if (pred_[sz(c)] != succ_[sz(tau_[sz(c)])]) throw EngineError("invalid mesh at " + label(c));
  }
}

int ClusterCategory::hom_dim_from_modules(const ClusterIndec& x, const ClusterIndec& y) const {
  const auto& ar = ar_;
  if (x.kind == IndecKind::Module && y.kind == IndecKind::Module) {
    int d = ar.hom_dim(x.module_id, y.module_id);
    // Hom_D(X, tau^{-1} Y[1]) = Ext^1(tau X, Y) = D Hom(Y, tau^2 X)
    if (auto t = ar.tau(x.module_id))
      if (auto t2 = ar.tau(*t)) d += ar.hom_dim(y.module_id, *t2);
    return d;
  }
  if (x.kind == IndecKind::Module) return ar.ext_dim(x.module_id, ar.projective(y.vertex));
  if (y.kind == IndecKind::Module) {
    const auto up = ar.tau_inverse(y.module_id);
    return up ? ar.indec(*up).dim_vector[sz(x.vertex)] : 0;
  }
  return ar.hom_dim(ar.projective(x.vertex), ar.projective(y.vertex));
}

detail::HomFunctor ClusterCategory::knit_functor(CoverVertex source) const {
  detail::HomFunctor f;
  f.source = source;
  f.orbits = rank();
  f.slices = window() + 1;
  f.nodes.assign(sz(f.slices * f.orbits), {});
  for (int r = 0; r < f.slices; ++r) {
    for (int orbit : cover().slice_order()) {
      const CoverVertex z{orbit, source.offset + r};
      auto& node = f.nodes[sz(*f.index(z))];
      if (z == source) {
        node.dim = 1;
        node.parents = {{-1, -1}};
        continue;
      }
      // stacked standard basis of the direct sum over incoming arrows
      std::vector<std::pair<int, int>> stacked;
      std::vector<int> preds;
      for (auto p : cover().predecessors(z)) {
        const auto idx = f.index(p);
        if (!idx || f.nodes[sz(*idx)].dim == 0) continue;
        preds.push_back(*idx);
        for (int b = 0; b < f.nodes[sz(*idx)].dim; ++b) stacked.emplace_back(*idx, b);
      }
      if (stacked.empty()) continue;
      auto column_of = [&](int pred, int b) {
        for (std::size_t c = 0; c < stacked.size(); ++c)
          if (stacked[c] == std::make_pair(pred, b)) return c;
        throw EngineError("missing stacked column");
      };

      // mesh relations: image of Hom(s, tau z) in the direct sum
      Matrix relations(0, stacked.size());
      const auto tz = f.index(RepetitionQuiver::tau(z));
      if (tz && f.nodes[sz(*tz)].dim > 0) {
        const int dim_tz = f.nodes[sz(*tz)].dim;
        Matrix rel(sz(dim_tz), stacked.size());
        for (int pred : preds) {
          for (const auto& [from, m] : f.nodes[sz(pred)].incoming) {
            if (from != *tz) continue;
            for (std::size_t b = 0; b < m.rows(); ++b)
              for (std::size_t a = 0; a < m.cols(); ++a)
                rel(a, column_of(pred, static_cast<int>(b))) += m(b, a);
          }
        }
        relations = std::move(rel);
      }
      const auto ech = row_reduce(relations);
      std::vector<int> pivot_row(stacked.size(), -1);
      for (std::size_t r2 = 0; r2 < ech.pivots.size(); ++r2) pivot_row[ech.pivots[r2]] = static_cast<int>(r2);
      std::vector<int> position(stacked.size(), -1);
      for (std::size_t c = 0; c < stacked.size(); ++c) {
        if (pivot_row[c] >= 0) continue;
        position[c] = node.dim++;
        node.parents.push_back(stacked[c]);
      }
      if (node.dim == 0) continue;
      for (int pred : preds) {
        Matrix m(sz(node.dim), sz(f.nodes[sz(pred)].dim));
        for (int b = 0; b < f.nodes[sz(pred)].dim; ++b) {
          const auto c = column_of(pred, b);
          if (position[c] >= 0) {
            m(sz(position[c]), sz(b)) = 1;
          } else {
            const auto row = sz(pivot_row[c]);
            for (std::size_t c2 = 0; c2 < stacked.size(); ++c2)
              if (position[c2] >= 0 && sgn(ech.reduced(row, c2)) != 0)
                m(sz(position[c2]), sz(b)) = -ech.reduced(row, c2);
          }
        }
        node.incoming.emplace_back(pred, std::move(m));
      }
    }
  }
  for (int o = 0; o < f.orbits; ++o)
    if (f.nodes[sz((f.slices - 1) * f.orbits + o)].dim != 0)
      throw EngineError("Hom window exhausted; enlarge the window");
  return f;
}

std::vector<CoverVertex> ClusterCategory::basis_path(int x, const detail::FunctorNode& node, int node_index,
                                                     int b) const {
  const auto& f = functors_[sz(x)];
  std::vector<CoverVertex> path{f.vertex(node_index)};
  const detail::FunctorNode* cur = &node;
  for (;;) {
    const auto [parent, pb] = cur->parents[sz(b)];
    if (parent < 0) break;
    path.push_back(f.vertex(parent));
    cur = &f.nodes[sz(parent)];
    b = pb;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Vector ClusterCategory::evaluate_path(int x, int start_node, Vector value, std::span<const CoverVertex> path) const {
  const auto& f = functors_[sz(x)];
  int cur = start_node;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const auto next = f.index(path[k]);
    if (!next) return {};
    const auto& node = f.nodes[sz(*next)];
    if (node.dim == 0) return {};
    const Matrix* m = nullptr;
    for (const auto& [from, mat] : node.incoming)
      if (from == cur) m = &mat;
    if (!m) return {};  // the previous value space was zero
    value = m->apply(value);
    cur = *next;
  }
  return value;
}

HomBasis ClusterCategory::hom_basis(int x, int y) const {
  const auto& lay = layout(x, y);
  HomBasis basis;
  basis.source = x;
  basis.target = y;
  basis.dim = lay.dim;
  for (const auto& block : lay.blocks) {
    const auto& node = functors_[sz(x)].nodes[sz(block.node)];
    for (int b = 0; b < block.dim; ++b) {
      HomElement e = zero(x, y);
      e.coords[sz(block.start + b)] = 1;
      basis.elements.push_back(std::move(e));
      basis.entries.push_back({block.lift, basis_path(x, node, block.node, b)});
    }
  }
  return basis;
}

HomElement ClusterCategory::zero(int x, int y) const { return {x, y, Vector(sz(layout(x, y).dim))}; }

HomElement ClusterCategory::identity(int x) const {
  const auto& lay = layout(x, x);
  for (const auto& block : lay.blocks) {
    if (block.lift != 0) continue;
    HomElement e = zero(x, x);
    e.coords[sz(block.start)] = 1;
    return e;
  }
  throw EngineError("object without identity");
}

std::vector<Vector> ClusterCategory::build_composition_table(int x, int y, int z) const {
  const auto& lxy = layout(x, y);
  const auto& lyz = layout(y, z);
  const auto& lxz = layout(x, z);
  std::vector<Vector> table(sz(lxy.dim * lyz.dim), Vector(sz(lxz.dim)));
  if (lxy.dim == 0 || lyz.dim == 0) return table;
  const auto second = hom_basis(y, z);
  for (const auto& a_block : lxy.blocks) {
    for (int a = 0; a < a_block.dim; ++a) {
      Vector start(sz(a_block.dim));
      start[sz(a)] = 1;
      for (int b = 0; b < lyz.dim; ++b) {
        const auto& entry = second.entries[sz(b)];
        std::vector<CoverVertex> moved;
        moved.reserve(entry.path.size());
        for (auto v : entry.path) moved.push_back(apply_orbit_functor(v, a_block.lift));
        Vector value = evaluate_path(x, a_block.node, start, moved);
        if (is_zero(value)) continue;
        const int lift = a_block.lift + entry.lift;
        const detail::LiftBlock* target = nullptr;
        for (const auto& blk : lxz.blocks)
          if (blk.lift == lift) target = &blk;
        if (!target) throw EngineError("composite lands outside the Hom window");
        auto& out = table[sz((a_block.start + a) * lyz.dim + b)];
        for (int k = 0; k < target->dim; ++k) out[sz(target->start + k)] = value[sz(k)];
      }
    }
  }
  return table;
}

const std::vector<Vector>& ClusterCategory::composition_table(int x, int y, int z) const {
  const auto key = (sz(x) * sz(size()) + sz(y)) * sz(size()) + sz(z);
  {
    std::lock_guard lock(cache_mutex_);
    if (composition_cache_[key]) return *composition_cache_[key];
  }
  auto table = std::make_shared<const std::vector<Vector>>(build_composition_table(x, y, z));
  std::lock_guard lock(cache_mutex_);
  if (!composition_cache_[key]) composition_cache_[key] = std::move(table);
  return *composition_cache_[key];
}

HomElement ClusterCategory::compose(const HomElement& first, const HomElement& second) const {
  if (first.target != second.source) throw std::invalid_argument("compose: morphisms are not composable");
  const int x = first.source;
  const int y = first.target;
  const int z = second.target;
  HomElement out = zero(x, z);
  const auto& table = composition_table(x, y, z);
  const auto dyz = second.coords.size();
  for (std::size_t a = 0; a < first.coords.size(); ++a) {
    if (sgn(first.coords[a]) == 0) continue;
    for (std::size_t b = 0; b < dyz; ++b) {
      if (sgn(second.coords[b]) == 0) continue;
      const Rational c = first.coords[a] * second.coords[b];
      const auto& v = table[a * dyz + b];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(v[k]) != 0) out.coords[k] += c * v[k];
    }
  }
  return out;
}

HomElement ClusterCategory::path_element(std::span<const CoverVertex> path) const {
  if (path.empty()) throw std::invalid_argument("path_element: empty path");
  const int x = object_at(path.front());
  if (lift(x) != path.front()) throw std::invalid_argument("path must start at the lift of its source");
  for (std::size_t k = 1; k < path.size(); ++k) {
    const auto succ = cover().successors(path[k - 1]);
    if (std::find(succ.begin(), succ.end(), path[k]) == succ.end())
      throw std::invalid_argument("path_element: not a path of the cover");
  }
  const int y = object_at(path.back());
  HomElement out = zero(x, y);
  const auto& f = functors_[sz(x)];
  Vector value = evaluate_path(x, *f.index(path.front()), Vector{Rational(1)}, path);
  if (is_zero(value)) return out;
  for (const auto& block : layout(x, y).blocks) {
    if (f.vertex(block.node) != path.back()) continue;
    for (int k = 0; k < block.dim; ++k) out.coords[sz(block.start + k)] = value[sz(k)];
    return out;
  }
  throw EngineError("path_element: nonzero value outside the Hom window");
}

HomElement ClusterCategory::arrow_element(int source, int target, int which) const {
  const auto s = lift(source);
  for (auto t : cover().successors(s)) {
    if (object_at(t) != target) continue;
    if (which-- > 0) continue;
    const std::vector<CoverVertex> path{s, t};
    return path_element(path);
  }
  throw std::invalid_argument("no such arrow in Gamma(C)");
}

int ClusterCategory::arrow_count() const {
  int count = 0;
  for (const auto& s : succ_) count += static_cast<int>(s.size());
  return count;
}

std::vector<int> ClusterCategory::dim_vector(int cid) const {
  const auto& c = indec(cid);
  if (c.kind == IndecKind::Module) return ar_.indec(c.module_id).dim_vector;
  auto v = ar_.indec(projective(c.vertex)).dim_vector;
  for (auto& x : v) x = -x;
  return v;
}

std::string ClusterCategory::label(int cid) const {
  const auto& c = indec(cid);
  if (c.kind == IndecKind::ShiftedProjective) return "P" + std::to_string(c.vertex + 1) + "[1]";
  std::string s;
  const auto& dim = ar_.indec(c.module_id).dim_vector;
  const bool compact = std::all_of(dim.begin(), dim.end(), [](int d) { return d < 10; });
  for (std::size_t k = 0; k < dim.size(); ++k) {
    if (!compact && k) s += '.';
    s += std::to_string(dim[k]);
  }
  return s;
}

std::unique_ptr<ClusterCategory> build_category(const DynkinSpec& spec, const Orientation& orientation) {
  return std::make_unique<ClusterCategory>(knit(build_quiver(spec, orientation)));
}

}  // namespace clustertilt
