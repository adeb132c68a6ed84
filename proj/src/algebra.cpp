#include "clustertilt/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace clustertilt {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

Vector unit(std::size_t dim, std::size_t k) {
  Vector v(dim);
  v[k] = 1;
  return v;
}

}  // namespace

ClusterTiltedAlgebra::ClusterTiltedAlgebra(const ClusterCategory& cc, TiltingObject tilting)
    : cc_(&cc), tilting_(std::move(tilting)) {
  const int n = labels();
  if (!is_cluster_tilting(cc, tilting_.summands)) throw std::invalid_argument("not a cluster-tilting object");
  block_start_.assign(sz(n * n), 0);
  block_dim_.assign(sz(n * n), 0);
  identity_.assign(sz(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto basis = cc.hom_basis(tilting_.at(i + 1), tilting_.at(j + 1));
      block_start_[index(i, j)] = dim();
      block_dim_[index(i, j)] = basis.dim;
      for (int b = 0; b < basis.dim; ++b) {
        const bool id = i == j && basis.entries[sz(b)].lift == 0;
        if (id) identity_[sz(i)] = dim();
        basis_.push_back({i, j, id, basis.elements[sz(b)]});
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (identity_[sz(i)] < 0 || block_dim_[index(i, i)] < 1) throw EngineError("summand without identity");

  const auto d = sz(dim());
  products_.assign(d * d, Vector(d));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const auto& table = cc.composition_table(tilting_.at(i + 1), tilting_.at(j + 1), tilting_.at(k + 1));
        const int dij = block_dim(i, j);
        const int djk = block_dim(j, k);
        for (int a = 0; a < dij; ++a) {
          for (int b = 0; b < djk; ++b) {
            auto& out = products_[sz(block_start(i, j) + a) * d + sz(block_start(j, k) + b)];
            const auto& v = table[sz(a * djk + b)];
            for (std::size_t c = 0; c < v.size(); ++c) out[sz(block_start(i, k)) + c] = v[c];
          }
        }
      }
    }
  }
  if (!is_associative()) throw EngineError("cluster-tilted algebra is not associative");
}

const Vector& ClusterTiltedAlgebra::product(int first, int second) const {
  return products_[sz(first) * sz(dim()) + sz(second)];
}

Vector ClusterTiltedAlgebra::multiply(const Vector& first, const Vector& second) const {
  Vector out(sz(dim()));
  for (int a = 0; a < dim(); ++a) {
    if (sgn(first[sz(a)]) == 0) continue;
    for (int b = 0; b < dim(); ++b) {
      if (sgn(second[sz(b)]) == 0) continue;
      const Rational c = first[sz(a)] * second[sz(b)];
      const auto& p = product(a, b);
      for (int k = 0; k < dim(); ++k)
        if (sgn(p[sz(k)]) != 0) out[sz(k)] += c * p[sz(k)];
    }
  }
  return out;
}

bool ClusterTiltedAlgebra::is_associative() const {
  const auto d = sz(dim());
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (basis_[a].to != basis_[b].from) continue;
      const auto& ab = product(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t c = 0; c < d; ++c) {
        if (basis_[b].to != basis_[c].from) continue;
        if (multiply(ab, unit(d, c)) != multiply(unit(d, a), product(static_cast<int>(b), static_cast<int>(c))))
          return false;
      }
    }
  }
  return true;
}

ClusterTiltedAlgebra build_algebra(const ClusterCategory& cc, const TiltingObject& tilting) {
  return ClusterTiltedAlgebra(cc, tilting);
}

int CModule::total_dim() const {
  int total = 0;
  for (int d : dims) total += d;
  return total;
}

CModule module_of(const ClusterTiltedAlgebra& algebra, int object) {
  const auto& cc = algebra.category();
  const auto& t = algebra.tilting();
  for (int s : t.summands)
    if (cc.shift(s) == object) throw std::invalid_argument("object lies in add T[1]; its module is zero");
  CModule m;
  for (int i = 0; i < algebra.labels(); ++i) m.dims.push_back(cc.hom_dim(t.at(i + 1), object));
  for (const auto& b : algebra.basis()) {
    const int src = m.dims[sz(b.to)];
    const int dst = m.dims[sz(b.from)];
    Matrix action(sz(dst), sz(src));
    const auto& table = cc.composition_table(t.at(b.from + 1), t.at(b.to + 1), object);
    const int local = static_cast<int>(&b - algebra.basis().data()) - algebra.block_start(b.from, b.to);
    for (int r = 0; r < src; ++r) {
      const auto& v = table[sz(local * src + r)];
      for (int k = 0; k < dst; ++k) action(sz(k), sz(r)) = v[sz(k)];
    }
    m.action.push_back(std::move(action));
  }
  return m;
}

CModule projective_module(const ClusterTiltedAlgebra& algebra, int label) {
  CModule m;
  for (int i = 0; i < algebra.labels(); ++i) m.dims.push_back(algebra.block_dim(i, label));
  for (int bi = 0; bi < algebra.dim(); ++bi) {
    const auto& b = algebra.element(bi);
    const int src = m.dims[sz(b.to)];
    const int dst = m.dims[sz(b.from)];
    Matrix action(sz(dst), sz(src));
    for (int r = 0; r < src; ++r) {
      const auto& p = algebra.product(bi, algebra.block_start(b.to, label) + r);
      for (int k = 0; k < dst; ++k) action(sz(k), sz(r)) = p[sz(algebra.block_start(b.from, label) + k)];
    }
    m.action.push_back(std::move(action));
  }
  return m;
}

bool satisfies_module_axioms(const ClusterTiltedAlgebra& algebra, const CModule& m) {
  const int d = algebra.dim();
  for (int i = 0; i < algebra.labels(); ++i)
    if (m.action[sz(algebra.identity_index(i))] != Matrix::identity(sz(m.dims[sz(i)]))) return false;
  // acting by "b then a" equals acting by a, then by b
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const auto& ea = algebra.element(a);
      const auto& eb = algebra.element(b);
      if (eb.to != ea.from) continue;
      Matrix combined(sz(m.dims[sz(eb.from)]), sz(m.dims[sz(ea.to)]));
      const auto& p = algebra.product(b, a);
      for (int k = 0; k < d; ++k) {
        if (sgn(p[sz(k)]) == 0) continue;
        const auto& act = m.action[sz(k)];
        for (std::size_t r = 0; r < act.rows(); ++r)
          for (std::size_t c = 0; c < act.cols(); ++c) combined(r, c) += p[sz(k)] * act(r, c);
      }
      if (combined != m.action[sz(b)] * m.action[sz(a)]) return false;
    }
  }
  return true;
}

namespace {

/// Span of rad(m) at each label.
std::vector<SpanBuilder> radical_spans(const ClusterTiltedAlgebra& algebra, const CModule& m) {
  std::vector<SpanBuilder> spans;
  for (int d : m.dims) spans.emplace_back(sz(d));
  for (int bi = 0; bi < algebra.dim(); ++bi) {
    if (!algebra.is_radical(bi)) continue;
    const auto& b = algebra.element(bi);
    const auto& act = m.action[sz(bi)];
    for (std::size_t c = 0; c < act.cols(); ++c) spans[sz(b.from)].add(act.column(c));
  }
  return spans;
}

}  // namespace

std::vector<int> top_dims(const ClusterTiltedAlgebra& algebra, const CModule& m) {
  const auto spans = radical_spans(algebra, m);
  std::vector<int> out;
  for (std::size_t i = 0; i < m.dims.size(); ++i) out.push_back(m.dims[i] - static_cast<int>(spans[i].dim()));
  return out;
}

ProjectiveCover projective_cover(const ClusterTiltedAlgebra& algebra, const CModule& m) {
  const int n = algebra.labels();
  auto spans = radical_spans(algebra, m);

  // generators: standard basis vectors completing rad(m) at each label
  std::vector<std::pair<int, Vector>> generators;
  ProjectiveCover pc;
  pc.multiplicity.assign(sz(n), 0);
  for (int k = 0; k < n; ++k) {
    for (int e = 0; e < m.dims[sz(k)]; ++e) {
      auto v = unit(sz(m.dims[sz(k)]), sz(e));
      if (spans[sz(k)].add(v)) {
        generators.emplace_back(k, std::move(v));
        ++pc.multiplicity[sz(k)];
      }
    }
  }

  // cover at label i is the sum over generators g (label k) of Hom(T_i, T_k)
  auto& cover = pc.cover;
  cover.dims.assign(sz(n), 0);
  for (const auto& [k, g] : generators)
    for (int i = 0; i < n; ++i) cover.dims[sz(i)] += algebra.block_dim(i, k);
  for (int i = 0; i < n; ++i) {
    Matrix map(sz(m.dims[sz(i)]), sz(cover.dims[sz(i)]));
    std::size_t col = 0;
    for (const auto& [k, g] : generators) {
      for (int x = 0; x < algebra.block_dim(i, k); ++x, ++col) {
        const auto image = m.action[sz(algebra.block_start(i, k) + x)].apply(g);
        for (std::size_t r = 0; r < image.size(); ++r) map(r, col) = image[r];
      }
    }
    if (rank(map) != map.rows()) throw EngineError("projective cover is not surjective");
    pc.map.push_back(std::move(map));
  }
  for (int bi = 0; bi < algebra.dim(); ++bi) {
    const auto& b = algebra.element(bi);
    Matrix action(sz(cover.dims[sz(b.from)]), sz(cover.dims[sz(b.to)]));
    std::size_t row0 = 0;
    std::size_t col0 = 0;
    for (const auto& gen : generators) {
      const int k = gen.first;
      const int src = algebra.block_dim(b.to, k);
      const int dst = algebra.block_dim(b.from, k);
      for (int x = 0; x < src; ++x) {
        const auto& p = algebra.product(bi, algebra.block_start(b.to, k) + x);
        for (int y = 0; y < dst; ++y) action(row0 + sz(y), col0 + sz(x)) = p[sz(algebra.block_start(b.from, k) + y)];
      }
      row0 += sz(dst);
      col0 += sz(src);
    }
    cover.action.push_back(std::move(action));
  }
  return pc;
}

CModule syzygy(const ClusterTiltedAlgebra& algebra, const CModule& m) {
  const auto pc = projective_cover(algebra, m);
  const int n = algebra.labels();
  std::vector<std::vector<Vector>> kernels;
  CModule out;
  for (int i = 0; i < n; ++i) {
    kernels.push_back(nullspace(pc.map[sz(i)]));
    out.dims.push_back(static_cast<int>(kernels.back().size()));
  }
  for (int bi = 0; bi < algebra.dim(); ++bi) {
    const auto& b = algebra.element(bi);
    const auto& src = kernels[sz(b.to)];
    const auto& dst = kernels[sz(b.from)];
    Matrix action(dst.size(), src.size());
    if (!src.empty() && !dst.empty()) {
      const auto basis = Matrix::from_columns(sz(pc.cover.dims[sz(b.from)]), dst);
      for (std::size_t c = 0; c < src.size(); ++c) {
        const auto image = pc.cover.action[sz(bi)].apply(src[c]);
        const auto coords = solve(basis, image);
        if (!coords) throw EngineError("kernel of the projective cover is not a submodule");
        for (std::size_t r = 0; r < dst.size(); ++r) action(r, c) = (*coords)[r];
      }
    }
    out.action.push_back(std::move(action));
  }
  return out;
}

bool is_projective(const ClusterTiltedAlgebra& algebra, const CModule& m) {
  return syzygy(algebra, m).is_zero();
}

std::string to_string(PdClass pd) {
  switch (pd) {
    case PdClass::Zero:
      return "0";
    case PdClass::One:
      return "1";
    case PdClass::Infinite:
      return "inf";
  }
  return "?";
}

PdClass pd_class(const ClusterTiltedAlgebra& algebra, const CModule& m) {
  const auto first = syzygy(algebra, m);
  if (first.is_zero()) return PdClass::Zero;
  const auto second = syzygy(algebra, first);
  if (second.is_zero()) return PdClass::One;
  if (syzygy(algebra, second).is_zero())
    throw EngineError("module of projective dimension 2 over a cluster-tilted algebra");
  return PdClass::Infinite;
}

std::vector<AlgebraArrow> algebra_arrows(const ClusterTiltedAlgebra& algebra) {
  const int n = algebra.labels();
  const auto d = sz(algebra.dim());
  std::vector<AlgebraArrow> arrows;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // rad^2 inside Hom(T_j, T_i)
      SpanBuilder square(d);
      for (int l = 0; l < n; ++l) {
        for (int a = 0; a < algebra.block_dim(j, l); ++a) {
          const int ia = algebra.block_start(j, l) + a;
          if (!algebra.is_radical(ia)) continue;
          for (int b = 0; b < algebra.block_dim(l, i); ++b) {
            const int ib = algebra.block_start(l, i) + b;
            if (algebra.is_radical(ib)) square.add(algebra.product(ia, ib));
          }
        }
      }
      for (int a = 0; a < algebra.block_dim(j, i); ++a) {
        const int ia = algebra.block_start(j, i) + a;
        if (!algebra.is_radical(ia)) continue;
        auto v = unit(d, sz(ia));
        if (square.add(v)) arrows.push_back({i, j, std::move(v)});
      }
    }
  }
  std::sort(arrows.begin(), arrows.end(), [](const AlgebraArrow& x, const AlgebraArrow& y) {
    return std::tie(x.source, x.target) < std::tie(y.source, y.target);
  });
  return arrows;
}

Quiver gabriel_quiver(const ClusterTiltedAlgebra& algebra) {
  Quiver q;
  q.num_vertices = algebra.labels();
  const auto arrows = algebra_arrows(algebra);
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    std::string name(1, static_cast<char>('a' + k % 26));
    q.arrows.push_back({arrows[k].source, arrows[k].target, name});
  }
  return q;
}

Vector path_product(const ClusterTiltedAlgebra& algebra, std::span<const AlgebraArrow> path) {
  if (path.empty()) throw std::invalid_argument("path_product: empty path");
  // arrow i -> j lives in Hom(T_j, T_i), so the path is composed from its end
  Vector result = path.back().element;
  for (std::size_t k = path.size() - 1; k-- > 0;) {
    if (path[k].target != path[k + 1].source) throw std::invalid_argument("path_product: arrows are not consecutive");
    result = algebra.multiply(result, path[k].element);
  }
  return result;
}

std::optional<std::vector<int>> quiver_isomorphism(const Quiver& from, const Quiver& to) {
  const int n = from.num_vertices;
  if (n != to.num_vertices || from.arrows.size() != to.arrows.size()) return std::nullopt;
  std::vector<int> p(sz(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int i = 0; i < n && same; ++i)
      for (int j = 0; j < n && same; ++j) same = from.arrow_count(i, j) == to.arrow_count(p[sz(i)], p[sz(j)]);
    if (same) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

std::optional<TiltingObject> find_tilting_with_quiver(const ClusterCategory& cc,
                                                      std::span<const TiltingObject> tiltings,
                                                      const Quiver& target) {
  for (const auto& t : tiltings) {
    if (t.rank() != target.num_vertices) continue;
    const ClusterTiltedAlgebra algebra(cc, t);
    const auto p = quiver_isomorphism(gabriel_quiver(algebra), target);
    if (!p) continue;
    TiltingObject relabeled{std::vector<int>(t.summands.size())};
    for (std::size_t k = 0; k < p->size(); ++k) relabeled.summands[sz((*p)[k])] = t.summands[k];
    return relabeled;
  }
  return std::nullopt;
}

std::optional<Quiver> named_quiver(const std::string& name) {
  if (name != "d6-cycle") return std::nullopt;
  Quiver q;
  q.num_vertices = 6;
  q.arrows = {{5, 3, "a"}, {4, 3, "b"}, {3, 0, "c"}, {2, 0, "d"}, {0, 1, "e"}, {1, 2, "f"}};
  return q;
}

}  // namespace clustertilt
