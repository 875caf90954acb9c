// stabber: solve, check, gen and render from the command line.
//
// Exit codes: 0 ok, 1 parse or parameter error, 2 degenerate input or oracle
// cap exceeded, 3 solver/oracle mismatch.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stabber/gen.hpp"
#include "stabber/io.hpp"
#include "stabber/oracle.hpp"
#include "stabber/solvers.hpp"
#include "stabber/svg.hpp"

using namespace stabber;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DegenerateInput:
      return 2;
    default:
      return 1;
  }
}

std::string describe(const StabberClass& cls) {
  std::string s = "{";
  for (std::size_t i = 0; i < cls.reds.size(); ++i) {
    if (i) s += ", ";
    s += "[" + std::to_string(cls.reds[i].seg) + "," + std::to_string(static_cast<int>(cls.reds[i].end)) + "]";
  }
  return s + "}";
}

// Halfplane with an axis (or no orientation, meaning horizontal) solves both directions.
std::optional<Axis> halfplane_axis(const std::string& shape, const std::string& orientation) {
  if (shape != "halfplane") return std::nullopt;
  if (orientation.empty() || orientation == "horizontal") return Axis::Horizontal;
  if (orientation == "vertical") return Axis::Vertical;
  return std::nullopt;
}

int cmd_solve(const std::string& shape_name, const std::string& orientation, const std::string& input,
              bool include_trivial) {
  const Instance inst = parse_instance(read_file(input));
  SolutionSet set;
  if (auto axis = halfplane_axis(shape_name, orientation)) {
    set.halfplane_axis = axis;
    set.shape = Shape::halfplane(*axis == Axis::Horizontal ? HalfplaneDir::Up : HalfplaneDir::Left);
    set.solutions = solve_halfplane_axis(inst, *axis);
  } else {
    set.shape = parse_shape(shape_name, orientation);
    set.solutions = solve(inst, set.shape);
  }
  if (!include_trivial && set.shape.kind != Shape::Kind::Halfplane) {
    std::erase_if(set.solutions, [](const Solution& s) { return s.trivial; });
  }
  std::cout << dump_solutions(set);
  return 0;
}

std::vector<Shape> shapes_to_check(const std::string& shape_name, const std::string& orientation) {
  if (auto axis = halfplane_axis(shape_name, orientation)) {
    if (*axis == Axis::Horizontal && !orientation.empty()) {
      return {Shape::halfplane(HalfplaneDir::Up), Shape::halfplane(HalfplaneDir::Down)};
    }
    if (*axis == Axis::Vertical) return {Shape::halfplane(HalfplaneDir::Left), Shape::halfplane(HalfplaneDir::Right)};
  }
  if (!orientation.empty()) return {parse_shape(shape_name, orientation)};
  const std::string type = shape_name == "3rect" ? "threerect" : shape_name;
  std::vector<Shape> out;
  for (const Shape& s : all_shapes()) {
    if (s.name() == type) out.push_back(s);
  }
  if (out.empty()) throw Error(ErrorKind::BadParameter, "unknown shape \"" + shape_name + "\"");
  return out;
}

int cmd_check(const std::string& shape_name, const std::string& orientation, const std::string& input) {
  const Instance inst = parse_instance(read_file(input));
  const auto shapes = shapes_to_check(shape_name, orientation);
  if (inst.size() > oracle_cap()) {
    std::cerr << "oracle cap exceeded: n=" << inst.size() << " > " << oracle_cap() << "\n";
    return 2;
  }
  bool all_match = true;
  for (const Shape& shape : shapes) {
    std::vector<StabberClass> solved;
    for (const auto& s : solve(inst, shape)) solved.push_back(s.cls);
    std::sort(solved.begin(), solved.end());
    const auto expected = oracle_classes(inst, shape);
    std::vector<StabberClass> missing, extra;
    std::set_difference(expected.begin(), expected.end(), solved.begin(), solved.end(), std::back_inserter(missing));
    std::set_difference(solved.begin(), solved.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    const std::string label = shape.name() + " " + shape.orientation();
    if (missing.empty() && extra.empty()) {
      std::cout << "MATCH " << label << " (" << expected.size() << " classes)\n";
      continue;
    }
    all_match = false;
    std::cout << "MISMATCH " << label << "\n";
    for (const auto& c : missing) std::cout << "  - oracle only: " << describe(c) << "\n";
    for (const auto& c : extra) std::cout << "  + solver only: " << describe(c) << "\n";
  }
  return all_match ? 0 : 3;
}

std::vector<Coord> parse_values(const std::string& text) {
  std::vector<Coord> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto c = Coord::parse(item);
    if (!c) throw Error(ErrorKind::BadParameter, "bad value \"" + item + "\"");
    out.push_back(*c);
  }
  return out;
}

struct GenArgs {
  std::string family;
  std::string values;
  std::string delta;
  std::size_t n = 8;
  std::uint64_t seed = 1;
  std::int64_t range = 100;
  bool rotated = false;
};

int cmd_gen(const GenArgs& a) {
  Instance inst;
  if (a.family == "maxgap") {
    std::optional<Coord> delta;
    if (!a.delta.empty()) {
      delta = Coord::parse(a.delta);
      if (!delta) throw Error(ErrorKind::BadParameter, "bad delta \"" + a.delta + "\"");
    }
    const auto xs = parse_values(a.values);
    inst = a.rotated ? gen_maxgap_rotated(xs, delta) : gen_maxgap(xs, delta);
  } else if (a.family == "qrect") {
    inst = gen_quadratic_rect(a.n);
  } else if (a.family == "chain") {
    inst = gen_cascade_chain(a.n);
  } else if (a.family == "random") {
    inst = gen_random(GenConfig{a.seed, a.n, a.range});
  } else {
    throw Error(ErrorKind::BadParameter, "unknown family \"" + a.family + "\"");
  }
  std::cout << dump_instance(inst);
  return 0;
}

int cmd_render(const std::string& input, const std::string& solutions, const std::string& out_path) {
  const Instance inst = parse_instance(read_file(input));
  std::vector<Solution> sols;
  if (!solutions.empty()) sols = parse_solutions(read_file(solutions), inst).solutions;
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + out_path);
  out << render_svg(inst, sols);
  return out ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate axis-parallel stabbers of segments"};
  app.require_subcommand(1);

  std::string shape, orientation, input, solutions, out;
  bool include_trivial = false;

  auto* solve_cmd = app.add_subcommand("solve", "Print every stabber class of a shape as JSON");
  solve_cmd->add_option("--shape", shape, "halfplane, strip, quadrant, threerect (3rect) or rect")->required();
  solve_cmd->add_option("--orientation", orientation, "e.g. up, horizontal, br, down; omit for rect");
  solve_cmd->add_option("--input", input, "instance JSON")->required();
  solve_cmd->add_flag("--include-trivial", include_trivial, "keep stabbers equivalent to a simpler shape");

  auto* check_cmd = app.add_subcommand("check", "Compare solver and brute-force class sets");
  check_cmd->add_option("--shape", shape)->required();
  check_cmd->add_option("--orientation", orientation, "omit to check every orientation");
  check_cmd->add_option("--input", input)->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print a generated instance as JSON");
  gen_cmd->add_option("--family", gen.family, "maxgap, qrect, chain or random")->required();
  gen_cmd->add_option("--values", gen.values, "maxgap values, comma separated");
  gen_cmd->add_option("--delta", gen.delta, "maxgap perturbation");
  gen_cmd->add_flag("--rotated", gen.rotated, "maxgap laid on y = x (quadrant version)");
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--range", gen.range);

  auto* render_cmd = app.add_subcommand("render", "Draw an instance and solutions as SVG");
  render_cmd->add_option("--input", input)->required();
  render_cmd->add_option("--solutions", solutions);
  render_cmd->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) return cmd_solve(shape, orientation, input, include_trivial);
    if (*check_cmd) return cmd_check(shape, orientation, input);
    if (*gen_cmd) return cmd_gen(gen);
    if (*render_cmd) return cmd_render(input, solutions, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
