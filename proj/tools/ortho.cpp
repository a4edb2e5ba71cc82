#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ortho/analysis.hpp"
#include "ortho/binary.hpp"
#include "ortho/generators.hpp"
#include "ortho/oracle.hpp"
#include "ortho/path_caterpillar.hpp"
#include "ortho/ternary.hpp"

using namespace ortho;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// tree files: "(...)" parenthesis text, ordered-tree JSON, or a caterpillar
// shape {"leaves_per_spine": [...]}
bool looks_like_shape(const std::string& text) {
  return text.find("leaves_per_spine") != std::string::npos;
}

CaterpillarShape shape_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  CaterpillarShape s;
  s.leaves_per_spine = j.at("leaves_per_spine").get<std::vector<int>>();
  return s;
}

RootedTree load_tree(const std::string& path) {
  std::string text = slurp(path);
  std::size_t c = text.find_first_not_of(" \t\r\n");
  if (c != std::string::npos && text[c] == '(') return parse_tree(text);
  if (looks_like_shape(text)) {
    CaterpillarShape s = shape_from_json(text);
    return build_top_view_caterpillar(
               s, std::vector<SpineOrdering>(s.spine_len(), SpineOrdering::TV))
        .to_rooted();
  }
  return ordered_tree_from_json(text).to_rooted();
}

std::vector<Pt> load_points(const std::string& path) {
  return load_points_text(slurp(path)).pts;
}

const char* feas_name(Feas f) {
  switch (f) {
    case Feas::Feasible: return "Feasible";
    case Feas::Infeasible: return "Infeasible";
    default: return "Unknown";
  }
}

int cmd_embed(int degree, const std::string& tree_path,
              const std::string& points_path, const std::string& out,
              const std::string& svg) {
  RootedTree t = load_tree(tree_path);
  std::vector<Pt> pts = load_points(points_path);
  Drawing d;
  try {
    d = degree == 3 ? embed_binary(t, pts) : embed_ternary(t, pts);
  } catch (const BudgetError& e) {
    std::cerr << "embedding failed: " << e.what() << "\n";
    return 1;
  }
  ValidationReport rep = validate(d);
  if (!rep.ok) {
    std::cerr << "produced drawing failed validation\n";
    for (const std::string& m : rep.violations) std::cerr << "  " << m << "\n";
    return 1;
  }
  if (!out.empty()) spit(out, drawing_to_json(d));
  if (!svg.empty()) spit(svg, render_svg(d));
  std::cerr << "embedded " << t.n() << " nodes on " << pts.size()
            << " points\n";
  return 0;
}

int cmd_validate(const std::string& drawing_path,
                 const std::string& ordered_path) {
  Drawing d = drawing_from_json(slurp(drawing_path));
  ValidationReport rep;
  if (!ordered_path.empty()) {
    OrderedTree ot = ordered_tree_from_json(slurp(ordered_path));
    rep = validate(d, &ot);
  } else {
    rep = validate(d);
  }
  if (rep.ok) {
    std::cerr << "valid\n";
    return 0;
  }
  for (const std::string& m : rep.violations) std::cerr << m << "\n";
  return 1;
}

int cmd_oracle(const std::string& tree_path, const std::string& points_path,
               bool ordered, bool enumerate, long long cap) {
  std::vector<Pt> pts = load_points(points_path);
  std::string text = slurp(tree_path);
  if (enumerate) {
    if (!looks_like_shape(text))
      throw InputError("--enumerate-orderings needs a caterpillar shape file");
    auto table = enumerate_orderings_and_test(shape_from_json(text), pts, cap);
    bool any_unknown = false;
    for (const auto& row : table) {
      for (SpineOrdering o : row.ordering)
        std::cout << (o == SpineOrdering::TV ? "TV " : "NTV ");
      std::cout << "-> " << feas_name(row.stats.result) << " ("
                << row.stats.nodes_expanded << " nodes)\n";
      any_unknown |= row.stats.result == Feas::Unknown;
    }
    return any_unknown ? 1 : 0;
  }
  SearchStats st;
  if (ordered) {
    OrderedTree ot;
    if (looks_like_shape(text)) {
      CaterpillarShape s = shape_from_json(text);
      ot = build_top_view_caterpillar(
          s, std::vector<SpineOrdering>(s.spine_len(), SpineOrdering::TV));
    } else {
      ot = ordered_tree_from_json(text);
    }
    st = exists_drawing_ordered(ot, pts, cap);
  } else {
    st = exists_drawing(load_tree(tree_path), pts, cap);
  }
  std::cerr << feas_name(st.result) << " after " << st.nodes_expanded
            << " nodes\n";
  if (st.result == Feas::Feasible) {
    std::cout << drawing_to_json(st.witness) << "\n";
    return 0;
  }
  return 1;
}

int cmd_verify(const std::string& family, const std::string& spec_path) {
  std::vector<RecurrenceSpec> specs;
  if (!spec_path.empty()) {
    specs.push_back(recurrence_spec_from_json(slurp(spec_path)));
  } else {
    for (RecurrenceSpec& s : builtin_recurrence_specs())
      if (family == "all" || family == s.name) specs.push_back(std::move(s));
  }
  if (specs.empty()) throw InputError("unknown family: " + family);
  bool all_ok = true;
  for (const RecurrenceSpec& s : specs) {
    for (const PointReport& r : verify_induction(s)) {
      std::cout << s.name << " | " << r.check << " | (";
      for (std::size_t i = 0; i < r.x.size(); ++i)
        std::cout << (i ? ", " : "") << r.x[i];
      std::cout << ") value in [" << r.value_lo << ", " << r.value_hi
                << "] vs " << r.paper_constant << " -> "
                << (r.pass ? "PASS" : "FAIL") << "\n";
      all_ok &= r.pass;
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_gen_points(int n, u64 seed, const std::string& style,
                   const std::string& out) {
  std::vector<Pt> pts = gen_points(point_style_from_name(style), n, seed);
  PointSet ps;
  ps.pts = pts;
  spit(out, save_points_text(ps));
  return 0;
}

int cmd_gen_tree(int n, int degree, u64 seed, const std::string& shape,
                 const std::string& out) {
  TreeShapeKind kind = tree_shape_from_name(shape);
  if (kind == TreeShapeKind::C14Shape) {
    nlohmann::json j;
    j["leaves_per_spine"] = c14_shape().leaves_per_spine;
    spit(out, j.dump() + "\n");
    return 0;
  }
  spit(out, serialize_tree(gen_tree(kind, n, degree, seed)) + "\n");
  return 0;
}

int cmd_bench(const std::string& family, const std::string& sizes_csv,
              int seeds, const std::string& csv) {
  std::vector<int> sizes;
  std::stringstream ss(sizes_csv);
  for (std::string tok; std::getline(ss, tok, ',');)
    sizes.push_back(std::stoi(tok));
  auto gen = [](int m, unsigned long long seed) {
    return gen_points(PointStyle::Uniform, m, seed);
  };
  std::function<bool(int, const std::vector<Pt>&)> attempt;
  if (family == "binary") {
    attempt = [](int n, const std::vector<Pt>& pts) {
      try {
        validate(embed_binary(gen_tree(TreeShapeKind::Random, n, 3, 7), pts));
        return true;
      } catch (const std::exception&) {
        return false;
      }
    };
  } else if (family == "ternary") {
    attempt = [](int n, const std::vector<Pt>& pts) {
      try {
        validate(embed_ternary(gen_tree(TreeShapeKind::Random, n, 4, 7), pts));
        return true;
      } catch (const std::exception&) {
        return false;
      }
    };
  } else if (family == "path") {
    attempt = [](int n, const std::vector<Pt>& pts) {
      try {
        embed_monotone_path(n, pts);
        return true;
      } catch (const std::exception&) {
        return false;
      }
    };
  } else {
    throw InputError("unknown family: " + family);
  }
  BenchTable table = bench_point_budget(attempt, sizes, seeds, gen);
  std::ostringstream outcsv;
  outcsv << "n,min_points\n";
  for (const BenchRow& r : table.rows)
    outcsv << r.n << "," << r.min_points << "\n";
  spit(csv, outcsv.str());
  std::cerr << "fitted exponent " << table.fitted_exponent << "\n";
  return 0;
}

int cmd_mono_path(const std::string& points_path) {
  MonoPathResult res = longest_monotone_straight_through(load_points(points_path));
  std::cout << res.length << "\n";
  for (const Pt& p : res.witness) std::cout << p.x << " " << p.y << "\n";
  return 0;
}

int cmd_three_good(const std::string& seq_csv) {
  std::vector<int> seq;
  std::stringstream ss(seq_csv);
  for (std::string tok; std::getline(ss, tok, ',');)
    seq.push_back(std::stoi(tok));
  ThreeGoodResult res = longest_three_good_subsequence(seq);
  std::cout << res.length << "\n";
  for (std::size_t i = 0; i < res.witness.size(); ++i)
    std::cout << (i ? "," : "") << res.witness[i];
  if (!res.witness.empty()) std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar one-bend tree drawing on point sets"};
  app.require_subcommand(1);

  int degree = 3, n = 0, seeds = 20;
  u64 seed = 0;
  long long cap = -1;
  std::string tree_path, points_path, out = "-", svg, drawing_path,
              ordered_path, family = "all", spec_path, style = "uniform",
              shape = "random", sizes_csv = "15,31,63,127", csv = "-",
              seq_cssv;
  bool ordered = false, enumerate = false;

  auto* embed = app.add_subcommand("embed", "draw a tree on a point set");
  embed->add_option("--degree", degree)->check(CLI::IsMember({3, 4}));
  embed->add_option("--tree", tree_path)->required();
  embed->add_option("--points", points_path)->required();
  embed->add_option("--out", out);
  embed->add_option("--svg", svg);

  auto* val = app.add_subcommand("validate", "check a drawing");
  val->add_option("--drawing", drawing_path)->required();
  val->add_option("--ordered-tree", ordered_path);

  auto* orc = app.add_subcommand("oracle", "exhaustive feasibility search");
  orc->add_option("--tree", tree_path)->required();
  orc->add_option("--points", points_path)->required();
  orc->add_flag("--ordered", ordered);
  orc->add_flag("--enumerate-orderings", enumerate);
  orc->add_option("--cap", cap);

  auto* ver = app.add_subcommand("verify-recurrences",
                                 "numeric induction-step verification");
  ver->add_option("--family", family);
  ver->add_option("--spec", spec_path);

  auto* gen = app.add_subcommand("gen", "generators");
  auto* gp = gen->add_subcommand("points", "generate a point set");
  gp->add_option("--n", n)->required();
  gp->add_option("--seed", seed);
  gp->add_option("--style", style);
  gp->add_option("--out", out);
  auto* gt = gen->add_subcommand("tree", "generate a tree");
  gt->add_option("--n", n)->required();
  gt->add_option("--degree", degree);
  gt->add_option("--seed", seed);
  gt->add_option("--shape", shape);
  gt->add_option("--out", out);

  auto* bench = app.add_subcommand("bench", "empirical point budgets");
  bench->add_option("--family", family);
  bench->add_option("--sizes", sizes_csv);
  bench->add_option("--seeds", seeds);
  bench->add_option("--csv", csv);

  auto* mono = app.add_subcommand("longest-mono-path",
                                  "longest x-monotone straight-through path");
  mono->add_option("--points", points_path)->required();

  auto* tg = app.add_subcommand("three-good", "longest 3-good subsequence");
  tg->add_option("--sequence", seq_cssv)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*embed) return cmd_embed(degree, tree_path, points_path, out, svg);
    if (*val) return cmd_validate(drawing_path, ordered_path);
    if (*orc) return cmd_oracle(tree_path, points_path, ordered, enumerate, cap);
    if (*ver) return cmd_verify(family == "all" ? "all" : family, spec_path);
    if (*gen) {
      if (*gen->get_subcommand("points"))
        return cmd_gen_points(n, seed, style, out);
      return cmd_gen_tree(n, degree, seed, shape, out);
    }
    if (*bench) return cmd_bench(family, sizes_csv, seeds, csv);
    if (*mono) return cmd_mono_path(points_path);
    if (*tg) return cmd_three_good(seq_cssv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
