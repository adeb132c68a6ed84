#include "clustertilt/hammocks.hpp"

#include <algorithm>
#include <set>

namespace clustertilt {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool in_add_shift(const ClusterCategory& cc, const TiltingObject& t, int cid) {
  return std::any_of(t.summands.begin(), t.summands.end(), [&](int s) { return cc.shift(s) == cid; });
}

void check_label(const TiltingObject& t, int label) {
  if (label < 1 || label > t.rank()) throw std::invalid_argument("summand label out of range");
}

/// Sectional paths of the cover from s whose end satisfies `accept`; at most rank - 1 arrows.
template <typename Accept>
void sectional_walk(const ClusterCategory& cc, std::vector<CoverVertex>& path, Accept&& accept,
                    std::vector<std::vector<CoverVertex>>& out) {
  if (accept(path.back())) out.push_back(path);
  if (static_cast<int>(path.size()) >= cc.rank()) return;
  for (auto next : cc.cover().successors(path.back())) {
    if (path.size() >= 2 && RepetitionQuiver::tau(next) == path[path.size() - 2]) continue;
    path.push_back(next);
    sectional_walk(cc, path, accept, out);
    path.pop_back();
  }
}

std::vector<std::vector<CoverVertex>> cover_sectional_paths(const ClusterCategory& cc, CoverVertex s, CoverVertex t) {
  std::vector<CoverVertex> path{s};
  std::vector<std::vector<CoverVertex>> out;
  sectional_walk(cc, path, [&](CoverVertex v) { return v == t; }, out);
  return out;
}

/// Lifts of b reachable from the lift of a with nonzero Hom in the cover.
std::vector<CoverVertex> nonzero_lifts(const ClusterCategory& cc, int a, int b) {
  std::vector<CoverVertex> out;
  const auto s = cc.lift(a);
  auto v = cc.lift(b);
  for (int m = 0; v.offset <= s.offset + cc.window(); ++m, v = cc.apply_orbit_functor(v, 1))
    if (cc.cover_hom_dim(s, v) > 0) out.push_back(v);
  return out;
}

/// Cover vertices in the window of s lying in both supports Hom(s, -) and Hom(-, t).
std::vector<CoverVertex> cover_intersection(const ClusterCategory& cc, CoverVertex s, CoverVertex t) {
  std::vector<CoverVertex> out;
  for (int k = s.offset; k <= t.offset; ++k)
    for (int o = 0; o < cc.rank(); ++o) {
      const CoverVertex v{o, k};
      if (cc.cover_hom_dim(s, v) > 0 && cc.cover_hom_dim(v, t) > 0) out.push_back(v);
    }
  return out;
}

bool is_wide_middle(const ClusterCategory& cc, CoverVertex v) {
  for (auto w : cc.cover().successors(v))
    if (cc.cover().predecessors(w).size() == 3) return true;
  return false;
}

std::vector<CoverVertex> cover_swing(const ClusterCategory& cc, CoverVertex s, CoverVertex t) {
  std::set<CoverVertex> out;
  for (int k = s.offset; k <= t.offset; ++k) {
    for (int o = 0; o < cc.rank(); ++o) {
      const CoverVertex v{o, k};
      if (v == s || v == t || !is_wide_middle(cc, v)) continue;
      const auto in = cover_sectional_paths(cc, s, v);
      const auto outp = cover_sectional_paths(cc, v, t);
      if (in.empty() || outp.empty()) continue;
      for (const auto& p : in) out.insert(p.begin(), p.end());
      for (const auto& p : outp) out.insert(p.begin(), p.end());
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> objects_of(const ClusterCategory& cc, const std::vector<CoverVertex>& vs) {
  std::vector<int> out;
  for (auto v : vs) out.push_back(cc.object_at(v));
  return sorted_unique(std::move(out));
}

}  // namespace

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Empty:
      return "empty";
    case Shape::SectionalPath:
      return "sectional";
    case Shape::Swing:
      return "swing";
    case Shape::FullIntersection:
      return "intersection";
  }
  return "?";
}

Shape parse_shape(const std::string& s) {
  if (s == "empty") return Shape::Empty;
  if (s == "sectional") return Shape::SectionalPath;
  if (s == "swing") return Shape::Swing;
  if (s == "intersection") return Shape::FullIntersection;
  throw std::invalid_argument("unknown shape '" + s + "'");
}

bool HammockSet::contains(int cid) const { return std::binary_search(vertices.begin(), vertices.end(), cid); }

HammockSet left_hammock(const ClusterCategory& cc, const TiltingObject& t, int i) {
  check_label(t, i);
  HammockSet h{HammockKind::Left, i, 0, {}, Shape::Empty};
  const int a = cc.shift(t.at(i));
  for (int x = 0; x < cc.size(); ++x)
    if (cc.hom_dim(a, x) > 0) h.vertices.push_back(x);
  return h;
}

HammockSet right_hammock(const ClusterCategory& cc, const TiltingObject& t, int j) {
  check_label(t, j);
  HammockSet h{HammockKind::Right, 0, j, {}, Shape::Empty};
  const int b = cc.shift(t.at(j));
  for (int x = 0; x < cc.size(); ++x)
    if (cc.hom_dim(x, b) > 0) h.vertices.push_back(x);
  return h;
}

std::vector<int> factoring_objects(const ClusterCategory& cc, int a, int b) {
  std::vector<int> out;
  if (cc.hom_dim(a, b) == 0) return out;
  for (int x = 0; x < cc.size(); ++x) {
    if (cc.hom_dim(a, x) == 0 || cc.hom_dim(x, b) == 0) continue;
    const auto& table = cc.composition_table(a, x, b);
    if (std::any_of(table.begin(), table.end(), [](const Vector& v) { return !is_zero(v); })) out.push_back(x);
  }
  return out;
}

HammockSet hij(const ClusterCategory& cc, const TiltingObject& t, int i, int j) {
  check_label(t, i);
  check_label(t, j);
  HammockSet h{HammockKind::Hij, i, j, factoring_objects(cc, cc.shift(t.at(i)), cc.shift(t.at(j))), Shape::Empty};
  if (!h.vertices.empty()) {
    try {
      h.shape = hij_closed_form(cc, t, i, j).shape;
    } catch (const Unclassifiable&) {
      h.shape = Shape::Empty;
    }
  }
  return h;
}

std::optional<Factorization> factorization_witness(const ClusterCategory& cc, const TiltingObject& t, int m) {
  if (in_add_shift(cc, t, m)) throw std::invalid_argument("object lies in add T[1]");
  for (int i = 1; i <= t.rank(); ++i) {
    const int a = cc.shift(t.at(i));
    if (cc.hom_dim(a, m) == 0) continue;
    const auto gs = cc.hom_basis(a, m);
    for (int j = 1; j <= t.rank(); ++j) {
      const int b = cc.shift(t.at(j));
      if (cc.hom_dim(m, b) == 0) continue;
      const auto hs = cc.hom_basis(m, b);
      for (const auto& g : gs.elements)
        for (const auto& h : hs.elements)
          if (!cc.compose(g, h).is_zero()) return Factorization{i, j, g, h};
    }
  }
  return std::nullopt;
}

bool factorization_ideal_nonzero(const ClusterCategory& cc, const TiltingObject& t, int m) {
  return factorization_witness(cc, t, m).has_value();
}

std::vector<std::vector<int>> sectional_paths(const ClusterCategory& cc, int x, int y) {
  std::vector<CoverVertex> path{cc.lift(x)};
  std::vector<std::vector<CoverVertex>> found;
  sectional_walk(cc, path, [&](CoverVertex v) { return cc.object_at(v) == y; }, found);
  std::vector<std::vector<int>> out;
  for (const auto& p : found) {
    std::vector<int> objects;
    for (auto v : p) objects.push_back(cc.object_at(v));
    out.push_back(std::move(objects));
  }
  return out;
}

std::optional<std::vector<int>> sectional_path(const ClusterCategory& cc, int x, int y) {
  auto all = sectional_paths(cc, x, y);
  if (all.size() != 1) return std::nullopt;
  return all.front();
}

std::vector<int> swing(const ClusterCategory& cc, const TiltingObject& t, int i, int j) {
  check_label(t, i);
  check_label(t, j);
  const int a = cc.shift(t.at(i));
  std::vector<CoverVertex> all;
  for (auto target : nonzero_lifts(cc, a, cc.shift(t.at(j)))) {
    auto part = cover_swing(cc, cc.lift(a), target);
    all.insert(all.end(), part.begin(), part.end());
  }
  return objects_of(cc, all);
}

std::vector<int> cover_hammock_intersection(const ClusterCategory& cc, const TiltingObject& t, int i, int j) {
  check_label(t, i);
  check_label(t, j);
  const int a = cc.shift(t.at(i));
  std::vector<CoverVertex> all;
  for (auto target : nonzero_lifts(cc, a, cc.shift(t.at(j)))) {
    auto part = cover_intersection(cc, cc.lift(a), target);
    all.insert(all.end(), part.begin(), part.end());
  }
  return objects_of(cc, all);
}

ClosedForm hij_closed_form(const ClusterCategory& cc, const TiltingObject& t, int i, int j) {
  check_label(t, i);
  check_label(t, j);
  const int a = cc.shift(t.at(i));
  const int b = cc.shift(t.at(j));
  ClosedForm form;
  const auto lifts = nonzero_lifts(cc, a, b);
  if (lifts.empty()) return form;

  const auto s = cc.lift(a);
  std::vector<CoverVertex> predicted;
  std::set<Shape> shapes;
  std::vector<std::string> hypotheses;
  for (auto target : lifts) {
    const auto paths = cover_sectional_paths(cc, s, target);
    if (paths.size() == 1) {
      predicted.insert(predicted.end(), paths.front().begin(), paths.front().end());
      shapes.insert(Shape::SectionalPath);
      hypotheses.push_back("sectional");
      continue;
    }
    if (paths.size() > 1) throw Unclassifiable("more than one sectional path between T_i[1] and T_j[1]");
    if (cc.family() != Family::D) throw Unclassifiable("no sectional path in type A");
    // boundary orbits are the ones whose meshes have a single middle term
    const bool inner_i = cc.cover().mesh_width(s.orbit) >= 2;
    const bool inner_j = cc.cover().mesh_width(target.orbit) >= 2;
    const std::string textual = cc.hom_dim(a, t.at(i)) != 0 ? "Hom(T_i[1],T_i)!=0" : "Hom(T_i[1],T_i)=0";
    if (inner_i || inner_j) {
      auto part = cover_swing(cc, s, target);
      if (part.empty()) throw Unclassifiable("no swing through a mesh with three middle terms");
      predicted.insert(predicted.end(), part.begin(), part.end());
      shapes.insert(Shape::Swing);
      hypotheses.push_back("swing;" + textual);
    } else {
      auto part = cover_intersection(cc, s, target);
      predicted.insert(predicted.end(), part.begin(), part.end());
      shapes.insert(Shape::FullIntersection);
      hypotheses.push_back("boundary;" + textual);
    }
  }
  // a swing dominates when several lifts contribute
  form.shape = shapes.count(Shape::Swing)              ? Shape::Swing
               : shapes.count(Shape::FullIntersection) ? Shape::FullIntersection
                                                       : Shape::SectionalPath;
  form.predicted = objects_of(cc, predicted);
  for (std::size_t k = 0; k < hypotheses.size(); ++k) form.hypothesis += (k ? "|" : "") + hypotheses[k];
  return form;
}

Shape classify_shape(const ClusterCategory& cc, const TiltingObject& t, int i, int j) {
  if (factoring_objects(cc, cc.shift(t.at(i)), cc.shift(t.at(j))).empty()) return Shape::Empty;
  return hij_closed_form(cc, t, i, j).shape;
}

std::vector<int> infinite_pd_set(const ClusterCategory& cc, const TiltingObject& t) {
  std::vector<int> out;
  for (int i = 1; i <= t.rank(); ++i)
    for (int j = 1; j <= t.rank(); ++j)
      for (int x : factoring_objects(cc, cc.shift(t.at(i)), cc.shift(t.at(j))))
        if (!in_add_shift(cc, t, x)) out.push_back(x);
  return sorted_unique(std::move(out));
}

TheoremReport verify_main_theorem(const ClusterCategory& cc, const TiltingObject& t) {
  TheoremReport report;
  report.tilting = t;
  const ClusterTiltedAlgebra algebra(cc, t);

  std::vector<std::vector<std::pair<int, int>>> membership(sz(cc.size()));
  for (int i = 1; i <= t.rank(); ++i) {
    for (int j = 1; j <= t.rank(); ++j) {
      auto h = hij(cc, t, i, j);
      for (int x : h.vertices) membership[sz(x)].emplace_back(i, j);
      if (i != j && !h.vertices.empty()) report.hammocks.push_back(std::move(h));
    }
  }

  std::vector<int> infinite;
  for (int m = 0; m < cc.size(); ++m) {
    if (in_add_shift(cc, t, m)) continue;
    ModuleRow row;
    row.cid = m;
    const auto module = module_of(algebra, m);
    row.dim_vector = module.dims;
    row.pd = pd_class(algebra, module);
    row.ideal_nonzero = factorization_ideal_nonzero(cc, t, m);
    row.in_hij = membership[sz(m)];
    ++report.counts[static_cast<std::size_t>(row.pd)];
    if (row.ideal_nonzero != (row.pd == PdClass::Infinite)) report.agreement = false;
    if (row.pd == PdClass::Infinite) infinite.push_back(m);
    report.rows.push_back(std::move(row));
  }
  report.union_matches = infinite_pd_set(cc, t) == infinite;
  if (!report.union_matches) report.agreement = false;
  return report;
}

}  // namespace clustertilt
