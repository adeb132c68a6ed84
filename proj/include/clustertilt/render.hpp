#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clustertilt/cluster.hpp"
#include "clustertilt/hammocks.hpp"
#include "clustertilt/tilting.hpp"

namespace clustertilt {

enum class Format { Dot, Tikz, Json, Ascii };

std::string to_string(Format f);
Format parse_format(const std::string& s);

struct Highlight {
  int i = 0;
  int j = 0;
  std::string color;
  std::vector<int> vertices;
};

struct RenderSpec {
  Format format = Format::Dot;
  std::vector<Highlight> highlights;
  std::optional<TiltingObject> tilting;  // marks T_k and T_k[1]
};

/// Grid position of a vertex of Gamma(C); every arrow moves one column to the right.
struct Position {
  int x = 0;
  int y = 0;
};

std::vector<Position> layout(const ClusterCategory& cc);

/// Nonempty H(i, j), i != j: red when the shape is a sectional path, blue otherwise.
std::vector<Highlight> hammock_highlights(const ClusterCategory& cc, const TiltingObject& t);

/// Label shown for a vertex: T3, T3[1] or the category label.
std::string display_label(const ClusterCategory& cc, const std::optional<TiltingObject>& t, int cid);

/// Draws Gamma(C). Throws std::invalid_argument if a highlight names an unknown vertex.
std::string render(const ClusterCategory& cc, const RenderSpec& spec);

struct ReportDocument {
  Family family = Family::A;
  int rank = 0;
  std::string orientation;
  TheoremReport report;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Sorted keys, two-space indent, trailing newline.
std::string export_json(const ReportDocument& doc);
/// Inverse of export_json. Counts and the union flag are rebuilt from the module rows.
ReportDocument import_json(const std::string& text);

}  // namespace clustertilt
