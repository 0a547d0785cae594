#include "toricq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "toricq/error.hpp"
#include "toricq/json_io.hpp"
#include "toricq/lattice_geometry.hpp"
#include "toricq/monoid.hpp"
#include "toricq/qubit_toric.hpp"
#include "toricq/segre.hpp"
#include "toricq/toric_ideal.hpp"

namespace toricq::cli {

namespace {

using json_io::json;

// A path, "-" for standard input, or inline JSON.
json load(const std::string& source, std::istream& in) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (source == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return json_io::parse(text);
  }
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    return json_io::parse(source);
  }
  std::ifstream file(source);
  if (!file) throw ValidationError("cannot read input file: " + source);
  std::stringstream buf;
  buf << file.rdbuf();
  return json_io::parse(buf.str());
}

ComplexRational complex_from_json(const json& j) {
  if (j.is_object()) {
    const Rational re = j.contains("re") ? json_io::rational_from_json(j.at("re")) : Rational(0);
    const Rational im = j.contains("im") ? json_io::rational_from_json(j.at("im")) : Rational(0);
    return ComplexRational(re, im);
  }
  return ComplexRational(json_io::rational_from_json(j));
}

json faces_json(const std::vector<Face>& faces) {
  json out = json::array();
  for (const auto& f : faces) out.push_back(json_io::to_json(f));
  return out;
}

json printed_list_json() {
  const auto g = three_qubit_generators();
  json printed = json::array();
  for (const auto& p : g.printed) {
    json entry{{"label", p.label},
               {"printed", p.printed[0][0] + "*" + p.printed[0][1] + " - " + p.printed[1][0] + "*" + p.printed[1][1]},
               {"status", to_string(p.status)}};
    entry["minor"] = p.minor ? json_io::to_json(*p.minor) : json(nullptr);
    printed.push_back(std::move(entry));
  }
  json unlisted = json::array();
  for (const auto& m : g.unlisted) unlisted.push_back(json_io::to_json(m));
  return json{{"printed", std::move(printed)}, {"unlisted", std::move(unlisted)}, {"canonicalCount", g.canonical.size()}};
}

struct Runner {
  std::istream& in;
  json result;
  std::function<void()> action;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in) {
  CLI::App app{"Exact toric geometry and Segre-variety tools for multipartite pure states", "toricq"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  Runner r{in, json(), {}};
  auto load_in = [&](const std::string& s) { return load(s, r.in); };

  std::string input;
  std::string cone_src, polytope_src, fan_src, map_src, shape_src, weights_src, z_src;
  std::size_t degree = 2, m = 0, projective = 0;
  double tol = 1e-10;
  bool affine = false, text = false, cross = false, printed = false;

  auto* dual = app.add_subcommand("dual", "Dual cone of a cone");
  dual->add_option("input,--cone", cone_src, "cone JSON (path, '-' or inline)")->required();
  dual->callback([&] { r.action = [&] { r.result = json_io::to_json(dual_cone(json_io::cone_from_json(load_in(cone_src)))); }; });

  auto* polar_cmd = app.add_subcommand("polar", "Polar of a polytope with the origin in its interior");
  polar_cmd->add_option("input,--polytope", polytope_src, "polytope JSON")->required();
  polar_cmd->callback([&] {
    r.action = [&] { r.result = json_io::to_json(polar(json_io::polytope_from_json(load_in(polytope_src)))); };
  });

  auto* faces_cmd = app.add_subcommand("faces", "Face lattice of a cone or polytope");
  auto* faces_cone = faces_cmd->add_option("--cone", cone_src, "cone JSON");
  auto* faces_poly = faces_cmd->add_option("--polytope", polytope_src, "polytope JSON");
  faces_cone->excludes(faces_poly);
  faces_cmd->require_option(1);
  faces_cmd->callback([&] {
    r.action = [&] {
      if (!cone_src.empty()) {
        const auto c = json_io::cone_from_json(load_in(cone_src));
        json fs = faces_json(faces(c));
        r.result = json{{"cone", json_io::to_json(c)}, {"faces", std::move(fs)}};
      } else {
        const auto p = json_io::polytope_from_json(load_in(polytope_src));
        json fs = faces_json(faces(p));
        r.result = json{{"polytope", json_io::to_json(p)}, {"faces", std::move(fs)}};
      }
    };
  });

  auto* nf = app.add_subcommand("normal-fan", "Normal fan of a full-dimensional polytope");
  nf->add_option("input,--polytope", polytope_src, "polytope JSON")->required();
  nf->callback([&] {
    r.action = [&] { r.result = json_io::to_json(normal_fan(json_io::polytope_from_json(load_in(polytope_src)))); };
  });

  auto* hb = app.add_subcommand("hilbert-basis", "Minimal generators of the lattice points of a strongly convex cone");
  hb->add_option("input,--cone", cone_src, "cone JSON")->required();
  hb->callback([&] {
    r.action = [&] { r.result = json_io::to_json(hilbert_basis(json_io::cone_from_json(load_in(cone_src)))); };
  });

  auto* ti = app.add_subcommand("toric-ideal", "Binomials of the toric ideal of a monomial map up to a degree");
  ti->add_option("--map", map_src, "exponent rows [[...],...] (path, '-' or inline)")->required();
  ti->add_option("--degree", degree, "degree bound")->capture_default_str();
  ti->add_flag("--affine", affine, "include relations of unequal degree");
  ti->add_flag("--text", text, "also list the binomials as text");
  ti->callback([&] {
    r.action = [&] {
      const auto ideal = toric_ideal_binomials(json_io::map_from_json(load_in(map_src)), degree,
                                               affine ? Grading::kAffine : Grading::kHomogeneous);
      r.result = json_io::to_json(ideal);
      if (text) {
        json lines = json::array();
        for (const auto& b : ideal.generators) lines.push_back(to_string(b));
        r.result["text"] = std::move(lines);
      }
    };
  });

  auto* pr = app.add_subcommand("projective-relations", "Equal-degree relations among the monomials [z^m0 : ... : z^mr]");
  pr->add_option("--map,--exponents", map_src, "exponent rows")->required();
  pr->add_option("--degree", degree, "degree bound")->capture_default_str();
  pr->add_flag("--text", text, "also list the binomials as text");
  pr->callback([&] {
    r.action = [&] {
      const auto map = json_io::map_from_json(load_in(map_src));
      const auto ideal = projective_relations(map.ambient_dim(), map.exponents(), degree);
      r.result = json_io::to_json(ideal);
      if (text) {
        json lines = json::array();
        for (const auto& b : ideal.generators) lines.push_back(to_string(b));
        r.result["text"] = std::move(lines);
      }
    };
  });

  auto* sm = app.add_subcommand("segre-minors", "Canonical 2x2 minors cutting out the Segre variety");
  sm->add_option("--shape", shape_src, "local dimensions, e.g. [2,2,2]")->required();
  sm->add_flag("--compare-printed", printed, "check the printed three-qubit list g1..g12 (shape [2,2,2] only)");
  sm->callback([&] {
    r.action = [&] {
      const json sj = load_in(shape_src);
      if (!sj.is_array()) throw ValidationError("--shape must be an array of local dimensions");
      std::vector<std::size_t> levels;
      for (const auto& n : sj) {
        if (!n.is_number_unsigned()) throw ValidationError("shape entries must be positive integers");
        levels.push_back(n.get<std::size_t>());
      }
      const SystemShape shape(levels);
      const auto minors = segre_minors(shape);
      json list = json::array();
      for (const auto& mi : minors) list.push_back(json_io::to_json(mi));
      const std::size_t raw = raw_minor_count(shape);
      r.result = json{{"shape", levels}, {"count", minors.size()}, {"rawCount", raw}, {"minors", std::move(list)}};
      if (printed) {
        if (levels != std::vector<std::size_t>{2, 2, 2}) throw ValidationError("--compare-printed needs shape [2,2,2]");
        r.result["printedList"] = printed_list_json();
      }
    };
  });

  auto* cs = app.add_subcommand("check-separable", "Test a pure state for full separability");
  cs->add_option("input,--state", input, "state JSON")->required();
  cs->add_option("--tol", tol, "relative tolerance: |minor| <= tol * max|a|^2")->capture_default_str()->check(CLI::NonNegativeNumber);
  cs->callback([&] {
    r.action = [&] {
      const auto s = to_floating(json_io::state_from_json(load_in(input)));
      r.result = json_io::to_json(is_separable(s, tol));
    };
  });

  auto* cc = app.add_subcommand("concurrence", "Minor-norm entanglement measure of a normalized state");
  cc->add_option("input,--state", input, "state JSON")->required();
  cc->add_option("--weights", weights_src, "one weight per canonical minor (default all 1)");
  cc->callback([&] {
    r.action = [&] {
      const auto s = to_floating(json_io::state_from_json(load_in(input)));
      std::vector<double> w;
      if (!weights_src.empty()) {
        const json wj = load_in(weights_src);
        if (!wj.is_array()) throw ValidationError("--weights must be an array");
        for (const auto& x : wj) {
          if (!x.is_number()) throw ValidationError("weights must be numbers");
          w.push_back(x.get<double>());
        }
      }
      const double c = concurrence(s, w);
      r.result = json{{"concurrence", c}};
    };
  });

  auto* qf = app.add_subcommand("qubit-fan", "Orthant fan of (CP^1)^m");
  qf->add_option("--m", m, "number of qubits (1..10)")->required();
  qf->callback([&] { r.action = [&] { r.result = json_io::to_json(multiqubit_fan(m)); }; });

  auto* qp = app.add_subcommand("qubit-polytope", "Cube [-1,1]^m (or its polar cross-polytope)");
  qp->add_option("--m", m, "number of qubits (1..10)")->required();
  qp->add_flag("--cross", cross, "emit the cross-polytope instead");
  qp->callback([&] {
    r.action = [&] { r.result = json_io::to_json(cross ? cross_polytope(m) : multiqubit_polytope(m)); };
  });

  auto* at = app.add_subcommand("atlas", "Affine charts and monomial gluing maps of a smooth complete fan");
  auto* at_fan = at->add_option("input,--fan", fan_src, "fan JSON");
  auto* at_proj = at->add_option("--projective", projective, "use the fan of CP^n");
  auto* at_qubits = at->add_option("--qubits", m, "use the fan of (CP^1)^m");
  at_fan->excludes(at_proj)->excludes(at_qubits);
  at_proj->excludes(at_qubits);
  at->require_option(1);
  at->callback([&] {
    r.action = [&] {
      Fan f;
      if (!fan_src.empty()) {
        f = json_io::fan_from_json(load_in(fan_src));
      } else if (projective) {
        f = projective_space_fan(projective);
      } else {
        f = multiqubit_fan(m);
      }
      r.result = json_io::to_json(chart_atlas(f));
    };
  });

  auto* pa = app.add_subcommand("param", "Subset-product parameterization of m qubits");
  pa->add_option("--m", m, "number of qubits (1..10)")->required();
  pa->callback([&] { r.action = [&] { r.result = json_io::to_json(parameterization(m)); }; });

  auto* vp = app.add_subcommand("verify-param", "Check that the image of z satisfies every Segre minor exactly");
  vp->add_option("--z", z_src, "nonzero coordinates: numbers, \"p/q\" or {\"re\",\"im\"}")->required();
  vp->callback([&] {
    r.action = [&] {
      const json zj = load_in(z_src);
      if (!zj.is_array()) throw ValidationError("--z must be an array");
      std::vector<ComplexRational> z;
      for (const auto& x : zj) z.push_back(complex_from_json(x));
      const auto map = parameterization(z.size());
      json amps = json::array();
      for (const auto& a : parameterize(map, z)) amps.push_back(json_io::to_json(a));
      const bool ok = verify_parameterization(z.size(), z);
      r.result = json{{"m", z.size()}, {"amplitudes", std::move(amps)}, {"satisfiesMinors", ok}};
    };
  });

  if (!args.empty() && args.front().rfind("-", 0) != 0) {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->get_name() == args.front(); });
    if (!known) {
      out << json{{"error", "unknown verb: " + args.front()}}.dump() << '\n';
      return 2;
    }
  }

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << json{{"error", e.what()}}.dump() << '\n';
    return 2;
  }

  try {
    r.action();
  } catch (const ValidationError& e) {
    out << json{{"error", e.what()}}.dump() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    out << json{{"error", e.what()}, {"kind", "invariant"}}.dump() << '\n';
    return 3;
  } catch (const std::exception& e) {
    out << json{{"error", e.what()}, {"kind", "internal"}}.dump() << '\n';
    return 3;
  }
  out << r.result.dump() << '\n';
  return 0;
}

}  // namespace toricq::cli
