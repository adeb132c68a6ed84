#include "clustertilt/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace clustertilt {

namespace {

using nlohmann::json;

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

/// Column offsets inside a slice: the source of every quiver arrow sits one column right of its target.
std::vector<int> slice_levels(const Quiver& q) {
  const int n = q.num_vertices;
  std::vector<int> level(sz(n), 0);
  std::vector<bool> seen(sz(n), false);
  for (int root = 0; root < n; ++root) {
    if (seen[sz(root)]) continue;
    seen[sz(root)] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& a : q.arrows) {
        if (a.source == v && !seen[sz(a.target)]) {
          level[sz(a.target)] = level[sz(v)] - 1;
          seen[sz(a.target)] = true;
          stack.push_back(a.target);
        } else if (a.target == v && !seen[sz(a.source)]) {
          level[sz(a.source)] = level[sz(v)] + 1;
          seen[sz(a.source)] = true;
          stack.push_back(a.source);
        }
      }
    }
  }
  return level;
}

std::vector<std::string> vertex_colors(const ClusterCategory& cc, const RenderSpec& spec) {
  std::vector<std::string> color(sz(cc.size()));
  for (const auto& h : spec.highlights) {
    for (int v : h.vertices) {
      if (v < 0 || v >= cc.size()) throw std::invalid_argument("highlight names an unknown vertex");
      color[sz(v)] = h.color;
    }
  }
  return color;
}

std::string render_dot(const ClusterCategory& cc, const RenderSpec& spec) {
  const auto pos = layout(cc);
  const auto color = vertex_colors(cc, spec);
  std::ostringstream out;
  out << "digraph cluster_category {\n  node [shape=plaintext];\n";
  for (int v = 0; v < cc.size(); ++v) {
    out << "  n" << v << " [label=\"" << display_label(cc, spec.tilting, v) << "\", pos=\"" << pos[sz(v)].x << ','
        << pos[sz(v)].y << "!\"";
    if (!color[sz(v)].empty()) out << ", fontcolor=\"" << color[sz(v)] << '"';
    out << "];\n";
  }
  for (int v = 0; v < cc.size(); ++v)
    for (int w : cc.successors(v)) out << "  n" << v << " -> n" << w << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_tikz(const ClusterCategory& cc, const RenderSpec& spec) {
  const auto pos = layout(cc);
  const auto color = vertex_colors(cc, spec);
  std::ostringstream out;
  out << "\\begin{tikzpicture}[x=0.9cm, y=0.9cm]\n";
  for (int v = 0; v < cc.size(); ++v) {
    out << "  \\node";
    if (!color[sz(v)].empty()) out << '[' << color[sz(v)] << ']';
    out << " (n" << v << ") at (" << pos[sz(v)].x << ',' << pos[sz(v)].y << ") {\\texttt{"
        << display_label(cc, spec.tilting, v) << "}};\n";
  }
  for (int v = 0; v < cc.size(); ++v)
    for (int w : cc.successors(v)) out << "  \\draw[->] (n" << v << ") -- (n" << w << ");\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string render_ascii(const ClusterCategory& cc, const RenderSpec& spec) {
  const auto pos = layout(cc);
  const auto color = vertex_colors(cc, spec);
  int width = 0, columns = 0, rows = 0;
  std::vector<std::string> text(sz(cc.size()));
  for (int v = 0; v < cc.size(); ++v) {
    text[sz(v)] = display_label(cc, spec.tilting, v);
    if (color[sz(v)] == "blue") text[sz(v)] += '*';
    if (color[sz(v)] == "red") text[sz(v)] += '+';
    width = std::max(width, static_cast<int>(text[sz(v)].size()));
    columns = std::max(columns, pos[sz(v)].x + 1);
    rows = std::max(rows, pos[sz(v)].y + 1);
  }
  ++width;
  std::vector<std::string> grid(sz(rows), std::string(sz(columns * width), ' '));
  for (int v = 0; v < cc.size(); ++v) grid[sz(pos[sz(v)].y)].replace(sz(pos[sz(v)].x * width), text[sz(v)].size(), text[sz(v)]);
  std::ostringstream out;
  for (int r = rows - 1; r >= 0; --r) {
    auto line = grid[sz(r)];
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  if (!spec.highlights.empty()) out << "* blue hammock, + red hammock\n";
  return out.str();
}

std::string render_json(const ClusterCategory& cc, const RenderSpec& spec) {
  const auto pos = layout(cc);
  const auto color = vertex_colors(cc, spec);
  json vertices = json::array(), arrows = json::array();
  for (int v = 0; v < cc.size(); ++v) {
    vertices.push_back({{"cid", v},
                        {"label", display_label(cc, spec.tilting, v)},
                        {"x", pos[sz(v)].x},
                        {"y", pos[sz(v)].y},
                        {"color", color[sz(v)]}});
    for (int w : cc.successors(v)) arrows.push_back({v, w});
  }
  return json{{"vertices", vertices}, {"arrows", arrows}}.dump(2) + "\n";
}

}  // namespace

std::string to_string(Format f) {
  switch (f) {
    case Format::Dot:
      return "dot";
    case Format::Tikz:
      return "tikz";
    case Format::Json:
      return "json";
    case Format::Ascii:
      return "ascii";
  }
  return "?";
}

Format parse_format(const std::string& s) {
  if (s == "dot") return Format::Dot;
  if (s == "tikz") return Format::Tikz;
  if (s == "json") return Format::Json;
  if (s == "ascii") return Format::Ascii;
  throw std::invalid_argument("unknown format '" + s + "'");
}

std::vector<Position> layout(const ClusterCategory& cc) {
  const auto level = slice_levels(cc.quiver());
  const int low = *std::min_element(level.begin(), level.end());
  int first = 0;
  for (int v = 0; v < cc.size(); ++v) first = std::min(first, cc.lift(v).offset);
  std::vector<Position> out;
  for (int v = 0; v < cc.size(); ++v) {
    const auto c = cc.lift(v);
    out.push_back({2 * (c.offset - first) + level[sz(c.orbit)] - low, c.orbit});
  }
  return out;
}

std::vector<Highlight> hammock_highlights(const ClusterCategory& cc, const TiltingObject& t) {
  std::vector<Highlight> out;
  for (int i = 1; i <= t.rank(); ++i) {
    for (int j = 1; j <= t.rank(); ++j) {
      if (i == j) continue;
      auto h = hij(cc, t, i, j);
      if (h.vertices.empty()) continue;
      out.push_back({i, j, h.shape == Shape::SectionalPath ? "red" : "blue", std::move(h.vertices)});
    }
  }
  // blue drawn last so it wins on shared endpoints
  std::stable_partition(out.begin(), out.end(), [](const Highlight& h) { return h.color == "red"; });
  return out;
}

std::string display_label(const ClusterCategory& cc, const std::optional<TiltingObject>& t, int cid) {
  if (t) {
    for (int k = 1; k <= t->rank(); ++k) {
      if (t->at(k) == cid) return "T" + std::to_string(k);
      if (cc.shift(t->at(k)) == cid) return "T" + std::to_string(k) + "[1]";
    }
  }
  return cc.label(cid);
}

std::string render(const ClusterCategory& cc, const RenderSpec& spec) {
  switch (spec.format) {
    case Format::Dot:
      return render_dot(cc, spec);
    case Format::Tikz:
      return render_tikz(cc, spec);
    case Format::Ascii:
      return render_ascii(cc, spec);
    case Format::Json:
      return render_json(cc, spec);
  }
  throw std::invalid_argument("unknown format");
}

std::string export_json(const ReportDocument& doc) {
  const auto& r = doc.report;
  json modules = json::array();
  for (const auto& row : r.rows) {
    json pairs = json::array();
    for (auto [i, j] : row.in_hij) pairs.push_back({i, j});
    modules.push_back({{"cid", row.cid},
                       {"dim_vector", row.dim_vector},
                       {"ideal_nonzero", row.ideal_nonzero},
                       {"pd", to_string(row.pd)},
                       {"in_hij", pairs}});
  }
  json hammocks = json::array();
  for (const auto& h : r.hammocks)
    hammocks.push_back({{"i", h.i}, {"j", h.j}, {"shape", to_string(h.shape)}, {"vertices", h.vertices}});
  const json meta = {{"family", to_string(doc.family)},
                     {"rank", doc.rank},
                     {"orientation", doc.orientation},
                     {"tilting", r.tilting.summands}};
  return json{{"meta", meta}, {"modules", modules}, {"hammocks", hammocks}, {"agreement", r.agreement}}.dump(2) + "\n";
}

ReportDocument import_json(const std::string& text) {
  const auto j = json::parse(text);
  ReportDocument doc;
  const auto& meta = j.at("meta");
  doc.family = parse_family(meta.at("family").get<std::string>());
  doc.rank = meta.at("rank").get<int>();
  doc.orientation = meta.at("orientation").get<std::string>();
  auto& r = doc.report;
  r.tilting.summands = meta.at("tilting").get<std::vector<int>>();
  r.agreement = j.at("agreement").get<bool>();
  for (const auto& m : j.at("modules")) {
    ModuleRow row;
    row.cid = m.at("cid").get<int>();
    row.dim_vector = m.at("dim_vector").get<std::vector<int>>();
    row.ideal_nonzero = m.at("ideal_nonzero").get<bool>();
    const auto pd = m.at("pd").get<std::string>();
    row.pd = pd == "0" ? PdClass::Zero : pd == "1" ? PdClass::One : pd == "inf" ? PdClass::Infinite
                                                                                : throw std::invalid_argument("bad pd '" + pd + "'");
    for (const auto& p : m.at("in_hij")) row.in_hij.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    ++r.counts[static_cast<std::size_t>(row.pd)];
    if (row.in_hij.empty() == (row.pd == PdClass::Infinite)) r.union_matches = false;
    r.rows.push_back(std::move(row));
  }
  for (const auto& h : j.at("hammocks")) {
    HammockSet set;
    set.kind = HammockKind::Hij;
    set.i = h.at("i").get<int>();
    set.j = h.at("j").get<int>();
    set.shape = parse_shape(h.at("shape").get<std::string>());
    set.vertices = h.at("vertices").get<std::vector<int>>();
    r.hammocks.push_back(std::move(set));
  }
  return doc;
}

}  // namespace clustertilt
