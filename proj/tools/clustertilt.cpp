#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "clustertilt/algebra.hpp"
#include "clustertilt/hammocks.hpp"
#include "clustertilt/presets.hpp"
#include "clustertilt/render.hpp"

using namespace clustertilt;

namespace {

struct Options {
  std::string family = "A";
  int rank = 3;
  std::string orientation;
  std::string tilting;
  std::string format;
  std::string out;
  unsigned seed = 1;
  std::string mutate_word;
  bool all_tiltings = false;
  int sample = 0;
};

struct Context {
  DynkinSpec spec;
  Orientation orientation;
  std::unique_ptr<ClusterCategory> cc;
};

Context make_context(const Options& o) {
  Context ctx;
  ctx.spec = {parse_family(o.family), o.rank};
  ctx.spec.validate();
  ctx.orientation = o.orientation.empty() ? Orientation::default_for(ctx.spec.family) : Orientation::parse(o.orientation);
  ctx.cc = build_category(ctx.spec, ctx.orientation);
  return ctx;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

std::string labels(const ClusterCategory& cc, const std::vector<int>& cids) {
  std::string s;
  for (std::size_t k = 0; k < cids.size(); ++k) s += (k ? " " : "") + cc.label(cids[k]);
  return s;
}

std::string digits(const std::vector<int>& v) {
  std::string s;
  for (int d : v) s += d < 10 ? std::to_string(d) : "(" + std::to_string(d) + ")";
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + o.out + "'");
  f << text;
}

int cmd_build(const Options& o) {
  auto ctx = make_context(o);
  const auto& cc = *ctx.cc;
  std::ostringstream out;
  out << ctx.spec.name() << " orientation=" << ctx.orientation.to_string() << "\n"
      << "modules: " << cc.modules().size() << "\nobjects: " << cc.size() << "\narrows: " << cc.arrow_count()
      << "\ncoxeter number: " << cc.coxeter_number() << "\n";
  out << "cid  object  tau  cover\n";
  for (int c = 0; c < cc.size(); ++c) {
    const auto v = cc.lift(c);
    out << c << "  " << cc.label(c) << "  " << cc.tau(c) << "  (" << v.orbit + 1 << "," << v.offset << ")\n";
  }
  emit(o, out.str());
  return 0;
}

int cmd_tiltings(const Options& o) {
  auto ctx = make_context(o);
  const auto& cc = *ctx.cc;
  std::ostringstream out;
  if (!o.mutate_word.empty()) {
    auto t = resolve_tilting(cc, o.tilting);
    out << "start: " << join(t.summands) << "  [" << labels(cc, t.summands) << "]\n";
    for (int k : parse_int_list(o.mutate_word)) {
      if (k < 1 || k > cc.rank()) throw std::invalid_argument("mutation label out of range");
      t = mutate(cc, t, k);
      out << "mu" << k << ": " << join(t.summands) << "  [" << labels(cc, t.summands) << "]\n";
    }
    emit(o, out.str());
    return 0;
  }
  const auto all = enumerate_tilting(cc);
  for (std::size_t k = 0; k < all.size(); ++k)
    out << k << ": " << join(all[k].summands) << "  [" << labels(cc, all[k].summands) << "]\n";
  out << all.size() << " cluster-tilting objects\n";
  emit(o, out.str());
  return 0;
}

std::string pair_list(const std::vector<std::pair<int, int>>& pairs) {
  std::string s;
  for (auto [i, j] : pairs) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(i) + "," + std::to_string(j) + ")";
  return s.empty() ? "-" : s;
}

ReportDocument document(const Context& ctx, TheoremReport report) {
  return {ctx.spec.family, ctx.spec.rank, ctx.orientation.to_string(), std::move(report)};
}

int cmd_classify(const Options& o) {
  auto ctx = make_context(o);
  const auto& cc = *ctx.cc;
  const auto t = resolve_tilting(cc, o.tilting);
  const auto report = verify_main_theorem(cc, t);
  if (o.format == "json") {
    emit(o, export_json(document(ctx, report)));
    return report.agreement ? 0 : 1;
  }
  std::ostringstream out;
  out << "tilting: " << join(t.summands) << "\n";
  for (int k = 1; k <= t.rank(); ++k) out << "  T" << k << " = " << cc.label(t.at(k)) << "\n";
  out << "cid  object  module  pd  I_M  H(i,j)\n";
  for (const auto& row : report.rows)
    out << row.cid << "  " << display_label(cc, t, row.cid) << "  " << digits(row.dim_vector) << "  " << to_string(row.pd)
        << "  " << (row.ideal_nonzero ? "nonzero" : "zero") << "  " << pair_list(row.in_hij) << "\n";
  out << "pd 0: " << report.counts[0] << "  pd 1: " << report.counts[1] << "  pd inf: " << report.counts[2] << "\n";
  out << "infinite:";
  for (const auto& row : report.rows)
    if (row.pd == PdClass::Infinite) out << " " << digits(row.dim_vector);
  out << "\n" << (report.agreement ? "agreement: yes" : "agreement: NO") << "\n";
  emit(o, out.str());
  return report.agreement ? 0 : 1;
}

int cmd_hammocks(const Options& o) {
  auto ctx = make_context(o);
  const auto& cc = *ctx.cc;
  const auto t = resolve_tilting(cc, o.tilting);
  std::ostringstream out;
  auto names = [&](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += " " + display_label(cc, t, x);
    return s;
  };
  for (int i = 1; i <= t.rank(); ++i) out << "H_" << i << ":" << names(left_hammock(cc, t, i).vertices) << "\n";
  for (int j = 1; j <= t.rank(); ++j) out << j << "_H:" << names(right_hammock(cc, t, j).vertices) << "\n";
  for (int i = 1; i <= t.rank(); ++i) {
    for (int j = 1; j <= t.rank(); ++j) {
      if (i == j) continue;
      const auto h = hij(cc, t, i, j);
      if (h.vertices.empty()) continue;
      out << "H(" << i << "," << j << ") " << to_string(h.shape) << ":" << names(h.vertices) << "\n";
      try {
        const auto form = hij_closed_form(cc, t, i, j);
        out << "  closed form " << (form.predicted == h.vertices ? "matches" : "DIFFERS") << " [" << form.hypothesis << "]\n";
      } catch (const Unclassifiable& e) {
        out << "  closed form unavailable: " << e.what() << "\n";
      }
    }
  }
  emit(o, out.str());
  return 0;
}

int cmd_verify(const Options& o) {
  auto ctx = make_context(o);
  const auto& cc = *ctx.cc;
  std::vector<TiltingObject> targets;
  if (o.all_tiltings) {
    targets = enumerate_tilting(cc);
  } else if (o.sample > 0) {
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> pick(1, cc.rank());
    auto t = resolve_tilting(cc, o.tilting);
    for (int k = 0; k < o.sample; ++k) {
      t = mutate(cc, t, pick(rng));
      targets.push_back(t);
    }
  } else {
    targets.push_back(resolve_tilting(cc, o.tilting));
  }
  int agree = 0;
  std::ostringstream out;
  for (const auto& t : targets) {
    const auto report = verify_main_theorem(cc, t);
    if (report.agreement)
      ++agree;
    else
      out << "disagreement at tilting " << join(t.summands) << "\n";
    if (targets.size() == 1 && o.format == "json") {
      emit(o, export_json(document(ctx, report)));
      return report.agreement ? 0 : 1;
    }
  }
  out << agree << "/" << targets.size() << " agree\n";
  emit(o, out.str());
  return agree == static_cast<int>(targets.size()) ? 0 : 1;
}

int cmd_render(const Options& o) {
  auto ctx = make_context(o);
  const auto& cc = *ctx.cc;
  RenderSpec spec;
  spec.format = parse_format(o.format.empty() ? "dot" : o.format);
  if (!o.tilting.empty()) {
    spec.tilting = resolve_tilting(cc, o.tilting);
    spec.highlights = hammock_highlights(cc, *spec.tilting);
  }
  emit(o, render(cc, spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster categories of Dynkin type, cluster-tilted algebras and hammocks"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* sub) {
    sub->add_option("--family", o.family, "A or D")->check(CLI::IsMember({"A", "D", "a", "d"}));
    sub->add_option("--rank", o.rank, "rank n");
    sub->add_option("--orientation", o.orientation, "linear | fork | custom:1>2,3>2");
    sub->add_option("--tilting", o.tilting, "cids | @mutations:k1,k2 | @find-quiver:NAME");
    sub->add_option("--format", o.format, "dot | tikz | json | ascii");
    sub->add_option("--out", o.out, "write output to a file");
    sub->add_option("--seed", o.seed, "seed for sampling");
  };
  auto* build = app.add_subcommand("build", "category statistics and objects");
  auto* tiltings = app.add_subcommand("tiltings", "enumerate cluster-tilting objects");
  tiltings->add_option("--mutate-from", o.mutate_word, "mutation word applied to --tilting");
  auto* classify = app.add_subcommand("classify", "projective dimension table");
  auto* hammocks = app.add_subcommand("hammocks", "H_i, jH and H(i,j) with shapes");
  auto* verify = app.add_subcommand("verify", "check (I_M != 0) <=> (pd = inf)");
  verify->add_flag("--all-tiltings", o.all_tiltings, "every cluster-tilting object");
  verify->add_option("--sample", o.sample, "random mutation walk of this length");
  auto* render_cmd = app.add_subcommand("render", "draw the AR quiver");
  for (auto* sub : {build, tiltings, classify, hammocks, verify, render_cmd}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*build) return cmd_build(o);
    if (*tiltings) return cmd_tiltings(o);
    if (*classify) return cmd_classify(o);
    if (*hammocks) return cmd_hammocks(o);
    if (*verify) return cmd_verify(o);
    if (*render_cmd) return cmd_render(o);
  } catch (const InvalidTilting& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (const auto& w = e.check().ext_witness)
      std::cerr << "first violated pair: Ext^1(" << w->first << ", " << w->second << ") != 0\n";
    return 2;
  } catch (const EngineError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
