#include "clustertilt/dynkin.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace clustertilt {

namespace {

int checked_index(int v, int n) {
  if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
  return v;
}

std::string arrow_label(std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k /= 26;
  } while (k-- > 0);
  return s;
}

bool positive(const std::vector<int>& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    nonzero |= x != 0;
  }
  return nonzero;
}

}  // namespace

void DynkinSpec::validate() const {
  if (family == Family::A && rank < 1) throw std::invalid_argument("type A needs rank >= 1");
  if (family == Family::D && rank < 4) throw std::invalid_argument("type D needs rank >= 4");
}

std::vector<std::pair<int, int>> DynkinSpec::diagram_edges() const {
  validate();
  std::vector<std::pair<int, int>> edges;
  if (family == Family::A) {
    for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
  } else {
    for (int i = 0; i + 1 < rank - 2; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(rank - 3, rank - 2);
    edges.emplace_back(rank - 3, rank - 1);
  }
  return edges;
}

int DynkinSpec::coxeter_number() const { return family == Family::A ? rank + 1 : 2 * rank - 2; }

int DynkinSpec::positive_root_count() const {
  return family == Family::A ? rank * (rank + 1) / 2 : rank * (rank - 1);
}

std::string DynkinSpec::name() const { return to_string(family) + std::to_string(rank); }

std::string to_string(Family f) { return f == Family::A ? "A" : "D"; }

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown Dynkin family '" + s + "'");
}

bool Quiver::has_loops() const {
  return std::any_of(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.source == a.target; });
}

bool Quiver::is_acyclic() const {
  std::vector<int> indeg(static_cast<std::size_t>(num_vertices), 0);
  for (const auto& a : arrows) ++indeg[static_cast<std::size_t>(a.target)];
  std::vector<int> ready;
  for (int v = 0; v < num_vertices; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows)
      if (a.source == v && --indeg[static_cast<std::size_t>(a.target)] == 0) ready.push_back(a.target);
  }
  return seen == num_vertices;
}

std::vector<int> Quiver::sinks_first_order() const {
  std::vector<int> outdeg(static_cast<std::size_t>(num_vertices), 0);
  for (const auto& a : arrows) ++outdeg[static_cast<std::size_t>(a.source)];
  std::vector<int> order;
  std::vector<bool> done(static_cast<std::size_t>(num_vertices), false);
  while (static_cast<int>(order.size()) < num_vertices) {
    int pick = -1;
    for (int v = 0; v < num_vertices && pick < 0; ++v)
      if (!done[static_cast<std::size_t>(v)] && outdeg[static_cast<std::size_t>(v)] == 0) pick = v;
    if (pick < 0) throw std::invalid_argument("quiver has an oriented cycle");
    done[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (const auto& a : arrows)
      if (a.target == pick) --outdeg[static_cast<std::size_t>(a.source)];
  }
  return order;
}

int Quiver::arrow_count(int source, int target) const {
  return static_cast<int>(std::count_if(arrows.begin(), arrows.end(), [&](const Arrow& a) {
    return a.source == source && a.target == target;
  }));
}

Orientation Orientation::parse(const std::string& text) {
  if (text == "linear") return linear();
  if (text == "fork") return fork();
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) != 0)
    throw std::invalid_argument("orientation must be linear, fork or custom:<arrows>");
  std::vector<std::pair<int, int>> arrows;
  std::stringstream ss(text.substr(prefix.size()));
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto pos = item.find("->");
    std::size_t width = 2;
    if (pos == std::string::npos) {
      pos = item.find('>');
      width = 1;
    }
    if (pos == std::string::npos) throw std::invalid_argument("bad arrow '" + item + "'");
    try {
      arrows.emplace_back(std::stoi(item.substr(0, pos)), std::stoi(item.substr(pos + width)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad arrow '" + item + "'");
    }
  }
  return custom(std::move(arrows));
}

std::string Orientation::to_string() const {
  switch (kind) {
    case OrientationKind::Linear:
      return "linear";
    case OrientationKind::Fork:
      return "fork";
    case OrientationKind::Custom:
      break;
  }
  std::string s = "custom:";
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(arrows[k].first) + ">" + std::to_string(arrows[k].second);
  }
  return s;
}

Quiver build_quiver(const DynkinSpec& spec, const Orientation& orientation) {
  spec.validate();
  const int n = spec.rank;
  std::vector<std::pair<int, int>> directed;
  switch (orientation.kind) {
    case OrientationKind::Linear:
      if (spec.family != Family::A) throw std::invalid_argument("linear orientation is for type A");
      for (int i = 0; i + 1 < n; ++i) directed.emplace_back(i, i + 1);
      break;
    case OrientationKind::Fork:
      if (spec.family != Family::D) throw std::invalid_argument("fork orientation is for type D");
      directed.emplace_back(n - 2, n - 3);
      directed.emplace_back(n - 1, n - 3);
      for (int i = n - 3; i > 0; --i) directed.emplace_back(i, i - 1);
      break;
    case OrientationKind::Custom:
      for (auto [s, t] : orientation.arrows) {
        if (s < 1 || s > n || t < 1 || t > n)
          throw std::invalid_argument("arrow endpoint outside 1.." + std::to_string(n));
        directed.emplace_back(s - 1, t - 1);
      }
      break;
  }

  Quiver q;
  q.num_vertices = n;
  for (std::size_t k = 0; k < directed.size(); ++k)
    q.arrows.push_back({directed[k].first, directed[k].second, arrow_label(k)});
  if (q.has_loops()) throw std::invalid_argument("orientation contains a loop");
  if (!q.is_acyclic()) throw std::invalid_argument("orientation contains an oriented cycle");

  std::multiset<std::pair<int, int>> want;
  for (auto [a, b] : spec.diagram_edges()) want.insert(std::minmax(a, b));
  std::multiset<std::pair<int, int>> got;
  for (const auto& a : q.arrows) got.insert(std::minmax(a.source, a.target));
  if (want != got)
    throw std::invalid_argument("orientation does not match the " + spec.name() + " diagram");
  return q;
}

RepetitionQuiver::RepetitionQuiver(Quiver q) : quiver_(std::move(q)) {
  slice_order_ = quiver_.sinks_first_order();
  slice_rank_.assign(static_cast<std::size_t>(quiver_.num_vertices), 0);
  for (std::size_t k = 0; k < slice_order_.size(); ++k)
    slice_rank_[static_cast<std::size_t>(slice_order_[k])] = static_cast<int>(k);
}

std::vector<CoverVertex> RepetitionQuiver::successors(CoverVertex v) const {
  checked_index(v.orbit, orbits());
  std::vector<CoverVertex> out;
  // arrow i'->i in Q gives P_i -> P_i'; arrow i->l gives P_i -> tau^{-1} P_l
  for (const auto& a : quiver_.arrows) {
    if (a.target == v.orbit) out.push_back({a.source, v.offset});
    if (a.source == v.orbit) out.push_back({a.target, v.offset + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoverVertex> RepetitionQuiver::predecessors(CoverVertex v) const {
  checked_index(v.orbit, orbits());
  std::vector<CoverVertex> out;
  for (const auto& a : quiver_.arrows) {
    if (a.source == v.orbit) out.push_back({a.target, v.offset});
    if (a.target == v.orbit) out.push_back({a.source, v.offset - 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int RepetitionQuiver::mesh_width(int orbit) const {
  return static_cast<int>(predecessors({orbit, 0}).size());
}

ModARQuiver knit(const Quiver& q) {
  if (q.has_loops() || !q.is_acyclic()) throw std::invalid_argument("knit: quiver must be acyclic");
  ModARQuiver ar{RepetitionQuiver(q)};
  const int n = q.num_vertices;
  const auto& order = ar.cover_.slice_order();

  // dim P_i counts paths starting at i
  std::vector<std::vector<int>> proj(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int v : order) {
    auto& row = proj[static_cast<std::size_t>(v)];
    row[static_cast<std::size_t>(v)] = 1;
    for (const auto& a : q.arrows) {
      if (a.source != v) continue;
      const auto& tgt = proj[static_cast<std::size_t>(a.target)];
      for (int w = 0; w < n; ++w) row[static_cast<std::size_t>(w)] += tgt[static_cast<std::size_t>(w)];
    }
  }

  // additive class function on ZQ^op, continued until every orbit has left the module range
  ar.classes_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) ar.classes_[static_cast<std::size_t>(i)].push_back(proj[static_cast<std::size_t>(i)]);
  ar.last_offset_.assign(static_cast<std::size_t>(n), -1);
  const int max_slices = 4 * (n + 2) + 4;
  std::vector<bool> open(static_cast<std::size_t>(n), true);
  for (int k = 0;; ++k) {
    for (int i = 0; i < n; ++i) {
      const auto& c = ar.classes_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (open[static_cast<std::size_t>(i)] && !positive(c)) {
        open[static_cast<std::size_t>(i)] = false;
        ar.last_offset_[static_cast<std::size_t>(i)] = k - 1;
      }
    }
    if (std::none_of(open.begin(), open.end(), [](bool b) { return b; })) break;
    if (k > max_slices) throw EngineError("knitting did not terminate");
    for (int i : order) {
      std::vector<int> next(static_cast<std::size_t>(n), 0);
      for (auto s : ar.cover_.successors({i, k})) {
        const auto& c = ar.classes_[static_cast<std::size_t>(s.orbit)][static_cast<std::size_t>(s.offset)];
        for (int w = 0; w < n; ++w) next[static_cast<std::size_t>(w)] += c[static_cast<std::size_t>(w)];
      }
      const auto& self = ar.classes_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      for (int w = 0; w < n; ++w) next[static_cast<std::size_t>(w)] -= self[static_cast<std::size_t>(w)];
      ar.classes_[static_cast<std::size_t>(i)].push_back(std::move(next));
    }
  }

  int max_offset = 0;
  for (int m : ar.last_offset_) {
    if (m < 0) throw EngineError("orbit without modules");
    max_offset = std::max(max_offset, m);
  }
  for (int k = 0; k <= max_offset; ++k) {
    for (int i : order) {
      if (k > ar.last_offset_[static_cast<std::size_t>(i)]) continue;
      ModIndec m;
      m.id = static_cast<int>(ar.indecs_.size());
      m.dim_vector = ar.classes_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      m.orbit = i;
      m.offset = k;
      ar.indecs_.push_back(std::move(m));
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto& after = ar.classes_[static_cast<std::size_t>(i)][static_cast<std::size_t>(ar.last_offset_[static_cast<std::size_t>(i)] + 1)];
    if (std::any_of(after.begin(), after.end(), [](int x) { return x > 0; }))
      throw EngineError("knitting produced a mixed-sign class");
  }

  const int size = ar.size();
  ar.succ_.assign(static_cast<std::size_t>(size), {});
  ar.pred_.assign(static_cast<std::size_t>(size), {});
  std::set<std::vector<int>> seen;
  for (const auto& m : ar.indecs_) {
    // each dimension vector is a positive root: Tits form equals one
    if (ar.euler_form(m.dim_vector, m.dim_vector) != 1 || !seen.insert(m.dim_vector).second)
      throw EngineError("knitting produced a dimension vector that is not a new positive root");
    for (auto s : ar.cover_.successors({m.orbit, m.offset})) {
      if (auto t = ar.find(s)) {
        ar.succ_[static_cast<std::size_t>(m.id)].push_back(*t);
        ar.pred_[static_cast<std::size_t>(*t)].push_back(m.id);
      }
    }
  }

  // hom rows: for fixed Y, dim Hom(X, Y) along the knitting order
  ar.hom_.assign(static_cast<std::size_t>(size * size), 0);
  for (int y = 0; y < size; ++y) {
    const auto& dy = ar.indec(y).dim_vector;
    for (const auto& x : ar.indecs_) {
      int value = 0;
      if (x.offset == 0) {
        value = dy[static_cast<std::size_t>(x.orbit)];
      } else {
        const int z = *ar.find({x.orbit, x.offset - 1});
        for (int e : ar.succ_[static_cast<std::size_t>(z)]) value += ar.hom_dim(e, y);
        value -= ar.hom_dim(z, y);
        if (z == y) value += 1;
      }
      if (value < 0) throw EngineError("negative Hom dimension while knitting");
      ar.hom_[static_cast<std::size_t>(x.id * size + y)] = value;
    }
  }
  return ar;
}

std::optional<int> ModARQuiver::find(CoverVertex v) const {
  if (v.orbit < 0 || v.orbit >= quiver().num_vertices) return std::nullopt;
  if (v.offset < 0 || v.offset > last_offset_[static_cast<std::size_t>(v.orbit)]) return std::nullopt;
  // ids are assigned slice by slice
  for (const auto& m : indecs_)
    if (m.orbit == v.orbit && m.offset == v.offset) return m.id;
  return std::nullopt;
}

std::optional<int> ModARQuiver::tau(int id) const {
  const auto& m = indec(id);
  return find({m.orbit, m.offset - 1});
}

std::optional<int> ModARQuiver::tau_inverse(int id) const {
  const auto& m = indec(id);
  return find({m.orbit, m.offset + 1});
}

bool ModARQuiver::is_injective(int id) const {
  const auto& m = indec(id);
  return m.offset == last_offset(m.orbit);
}

int ModARQuiver::projective(int vertex) const { return *find({vertex, 0}); }

int ModARQuiver::injective(int vertex) const {
  // I_v is the module whose socle is S_v: Hom(P_w, I_v) = delta_{wv} on the socle side,
  // recognised by dim Hom(M, I_v) = (dim M)_v for all M
  for (const auto& m : indecs_) {
    if (!is_injective(m.id)) continue;
    bool match = true;
    for (const auto& x : indecs_) {
      if (hom_dim(x.id, m.id) != x.dim_vector[static_cast<std::size_t>(vertex)]) {
        match = false;
        break;
      }
    }
    if (match) return m.id;
  }
  throw EngineError("no injective envelope found for vertex " + std::to_string(vertex + 1));
}

std::vector<int> ModARQuiver::cover_class(CoverVertex v) const {
  const auto& row = classes_.at(static_cast<std::size_t>(v.orbit));
  return row.at(static_cast<std::size_t>(v.offset));
}

int ModARQuiver::ext_dim(int x, int y) const {
  const auto t = tau(x);
  return t ? hom_dim(y, *t) : 0;
}

int ModARQuiver::euler_form(std::span<const int> x, std::span<const int> y) const {
  int value = 0;
  for (std::size_t i = 0; i < x.size(); ++i) value += x[i] * y[i];
  for (const auto& a : quiver().arrows)
    value -= x[static_cast<std::size_t>(a.source)] * y[static_cast<std::size_t>(a.target)];
  return value;
}

int hom_space_dim(const Quiver& q, const Representation& x, const Representation& y) {
  const auto n = static_cast<std::size_t>(q.num_vertices);
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    offset[i + 1] = offset[i] + static_cast<std::size_t>(y.dims[i] * x.dims[i]);
  const std::size_t unknowns = offset[n];
  if (unknowns == 0) return 0;
  // phi_i is dims_y[i] x dims_x[i], stored row-major at offset[i]
  auto var = [&](std::size_t vertex, int r, int c) {
    return offset[vertex] + static_cast<std::size_t>(r * x.dims[vertex] + c);
  };
  std::vector<Vector> equations;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrows[a].source);
    const auto t = static_cast<std::size_t>(q.arrows[a].target);
    const Matrix& xa = x.maps[a];
    const Matrix& ya = y.maps[a];
    // phi_t X_a - Y_a phi_s = 0, one equation per entry of a dims_y[t] x dims_x[s] matrix
    for (int r = 0; r < y.dims[t]; ++r) {
      for (int c = 0; c < x.dims[s]; ++c) {
        Vector eq(unknowns);
        for (int k = 0; k < x.dims[t]; ++k) eq[var(t, r, k)] += xa(static_cast<std::size_t>(k), static_cast<std::size_t>(c));
        for (int k = 0; k < y.dims[s]; ++k) eq[var(s, k, c)] -= ya(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
        equations.push_back(std::move(eq));
      }
    }
  }
  if (equations.empty()) return static_cast<int>(unknowns);
  Matrix m(equations.size(), unknowns);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) m(r, c) = equations[r][c];
  return static_cast<int>(unknowns - rank(m));
}

Representation indecomposable_representation(const Quiver& q, std::span<const int> dim_vector,
                                             std::uint32_t seed) {
  Representation rep;
  rep.dims.assign(dim_vector.begin(), dim_vector.end());
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    rep.maps.clear();
    for (const auto& a : q.arrows) {
      Matrix m(static_cast<std::size_t>(rep.dims[static_cast<std::size_t>(a.target)]),
               static_cast<std::size_t>(rep.dims[static_cast<std::size_t>(a.source)]));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
      rep.maps.push_back(std::move(m));
    }
    if (hom_space_dim(q, rep, rep) == 1) return rep;
  }
  throw EngineError("no brick found for the requested dimension vector");
}

int brute_force_hom_dim(const Quiver& q, const ModIndec& x, const ModIndec& y) {
  const auto rx = indecomposable_representation(q, x.dim_vector, 7919u * static_cast<std::uint32_t>(x.id + 1));
  const auto ry = indecomposable_representation(q, y.dim_vector, 104729u * static_cast<std::uint32_t>(y.id + 1));
  return hom_space_dim(q, rx, ry);
}

}  // namespace clustertilt
