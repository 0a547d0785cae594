// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "oracles.hpp"
#include "toricq/lattice_geometry.hpp"
#include "toricq/monoid.hpp"
#include "toricq/qubit_toric.hpp"
#include "toricq/segre.hpp"
#include "toricq/toric_ideal.hpp"

using namespace toricq;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

#define CHECK(cond, msg)                  \
  do {                                    \
    if (!(cond)) return Verdict{false, msg}; \
  } while (0)

IntVector v(std::initializer_list<long> xs) { return make_int_vector(xs); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- AC1 ----
Verdict cube_octahedron() {
  const auto t0 = std::chrono::steady_clock::now();
  IntMatrix cube;
  for (long a : {-1, 1})
    for (long b : {-1, 1})
      for (long c : {-1, 1}) cube.push_back(v({a, b, c}));
  const auto p = polar(LatticePolytope(3, cube));
  const double t = seconds_since(t0);
  const IntMatrix octa{v({-1, 0, 0}), v({0, -1, 0}), v({0, 0, -1}), v({0, 0, 1}), v({0, 1, 0}), v({1, 0, 0})};
  CHECK(p.vertices() == octa, "polar vertices differ from {+-e_i}");
  CHECK(t < 1.0, "runtime " + std::to_string(t) + " s");
  return {true, "polar = conv{+-e1,+-e2,+-e3}, " + std::to_string(t * 1e3) + " ms"};
}

// ---- AC2 ----
Verdict orthant_normal_fans() {
  for (std::size_t m = 1; m <= 5; ++m) {
    IntMatrix verts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      IntVector x(m);
      for (std::size_t i = 0; i < m; ++i) x[i] = (mask >> i & 1) ? 1 : -1;
      verts.push_back(x);
    }
    const auto maxes = maximal_cones(normal_fan(LatticePolytope(m, verts)));
    CHECK(maxes.size() == (std::size_t{1} << m), "m=" + std::to_string(m) + ": " + std::to_string(maxes.size()) + " maximal cones");
    std::set<IntMatrix> got, want;
    for (const auto& c : maxes) got.insert(canonical_form(c).generators());
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      IntMatrix gens;
      for (std::size_t i = 0; i < m; ++i) gens.push_back(unit_vector(m, i, (mask >> i & 1) ? 1 : -1));
      want.insert(canonical_form(LatticeCone(m, gens)).generators());
    }
    CHECK(got == want, "m=" + std::to_string(m) + ": maximal cones are not the orthants");
  }
  return {true, "m=1..5: 2^m maximal cones, canonical forms equal the orthants"};
}

// ---- AC3 ----
Verdict two_qubit_ideal() {
  const auto ideal = toric_ideal_binomials(MonomialMap(2, {v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})}), 2);
  CHECK(ideal.generators.size() == 1, std::to_string(ideal.generators.size()) + " binomials");
  CHECK(ideal.generators[0].nu == v({1, 0, 0, 1}) && ideal.generators[0].mu == v({0, 1, 1, 0}),
        "got " + to_string(ideal.generators[0]));
  return {true, "single binomial " + to_string(ideal.generators[0], "xi")};
}

// ---- AC4 ----
Verdict three_qubit_span() {
  const auto p = parameterization(3);
  const MonomialMap map(3, p.exponents);
  const auto ideal = toric_ideal_binomials(map, 2);
  std::map<IntVector, std::size_t> column;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& b : ideal.generators) {
    CHECK(b.degree() == 2, "non-quadric binomial " + to_string(b));
    column.emplace(b.nu, column.size());
    column.emplace(b.mu, column.size());
  }
  for (const auto& b : ideal.generators) {
    std::vector<mpq_class> row(column.size(), 0);
    row[column[b.nu]] = 1;
    row[column[b.mu]] = -1;
    rows.push_back(row);
  }
  const std::size_t r = oracle::rank(rows);
  std::set<IntVector> images;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i; j < 8; ++j) {
      IntVector e(8, 0);
      e[i] += 1;
      e[j] += 1;
      images.insert(map.image(e));
    }
  CHECK(images.size() == 27, std::to_string(images.size()) + " image monomials");
  CHECK(r == 9, "rank " + std::to_string(r));
  return {true, "rank 9 = 36 - 27 over " + std::to_string(ideal.generators.size()) + " binomials"};
}

// ---- AC5 ----
// Printed a_p a_q - a_r a_s as bit strings -> canonical key of flat indices.
std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> printed_key(
    const std::array<std::array<std::string, 2>, 2>& t) {
  auto idx = [](const std::string& bits) { return static_cast<std::size_t>(std::stoul(bits, nullptr, 2)); };
  std::pair<std::size_t, std::size_t> a{std::min(idx(t[0][0]), idx(t[0][1])), std::max(idx(t[0][0]), idx(t[0][1]))};
  std::pair<std::size_t, std::size_t> b{std::min(idx(t[1][0]), idx(t[1][1])), std::max(idx(t[1][0]), idx(t[1][1]))};
  return {std::min(a, b), std::max(a, b)};
}

Verdict printed_generators() {
  const SystemShape s({2, 2, 2});
  const auto g = three_qubit_generators();
  CHECK(g.printed.size() == 12, "printed list has " + std::to_string(g.printed.size()) + " entries");
  std::size_t matches = 0;
  for (const auto& p : g.printed) {
    if (p.status != PrintedStatus::kMatchesMinor) continue;
    CHECK(p.minor.has_value(), p.label + " matches but carries no minor");
    const auto& m = *p.minor;
    std::pair<std::size_t, std::size_t> a{s.flat_index(m.k), s.flat_index(m.l)};
    const std::size_t c = s.flat_index(m.k_swapped()), d = s.flat_index(m.l_swapped());
    std::pair<std::size_t, std::size_t> b{std::min(c, d), std::max(c, d)};
    if (a.first > a.second) std::swap(a.first, a.second);
    CHECK(printed_key(p.printed) == std::make_pair(std::min(a, b), std::max(a, b)), p.label + " does not equal its minor");
    CHECK(std::count(g.canonical.begin(), g.canonical.end(), m) == 1, p.label + " minor is not canonical");
    ++matches;
  }
  CHECK(matches >= 10, std::to_string(matches) + " matches");
  CHECK(g.printed[2].status == PrintedStatus::kNotAMinor, "g3 not flagged");
  CHECK(g.printed[11].status == PrintedStatus::kDuplicate, "g12 not flagged");
  return {true, std::to_string(matches) + "/12 match; g3 " + to_string(g.printed[2].status) + ", g12 " +
                    to_string(g.printed[11].status) + "; " + std::to_string(g.unlisted.size()) + " canonical minors unlisted"};
}

// ---- AC6 ----
Verdict segre_soundness() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(6);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  auto nonzero = [&] {
    while (true) {
      const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
      const ComplexRational z(Rational(a, b), Rational(c, d));
      if (!z.is_zero()) return z;
    }
  };
  std::size_t states = 0, perturbations = 0;
  for (const auto& levels : std::vector<std::vector<std::size_t>>{{2, 2}, {2, 2, 2}, {2, 2, 2, 2}, {2, 3}, {3, 3}}) {
    const SystemShape s(levels);
    const auto minors = segre_minors(s);
    for (int trial = 0; trial < 100; ++trial) {
      ProductState<ComplexRational> p;
      for (auto n : levels) {
        std::vector<ComplexRational> local;
        for (std::size_t i = 0; i < n; ++i) local.push_back(nonzero());
        p.locals.push_back(local);
      }
      const auto state = segre_map(p);
      for (const auto& m : minors) CHECK(evaluate_minor(m, state).is_zero(), "nonzero minor on a product state");
      ++states;
      for (std::size_t f = 0; f < s.size(); ++f) {
        auto amps = state.amplitudes();
        amps[f] += ComplexRational(1);
        const PureState<ComplexRational> bumped(s, amps);
        bool any = false;
        for (const auto& m : minors) {
          if (!evaluate_minor(m, bumped).is_zero()) {
            any = true;
            break;
          }
        }
        CHECK(any, "perturbed state satisfies every minor");
        ++perturbations;
      }
    }
  }
  const double t = seconds_since(t0);
  CHECK(t < 10.0, "runtime " + std::to_string(t) + " s");
  return {true, std::to_string(states) + " product states, " + std::to_string(perturbations) + " perturbations, " +
                    std::to_string(t) + " s"};
}

// ---- AC7 ----
Verdict concurrence_values() {
  const double h = std::sqrt(0.5);
  const double bell = concurrence(PureState<Amplitude>(SystemShape({2, 2}), {h, 0, 0, h}));
  std::vector<Amplitude> g(8, 0);
  g[0] = g[7] = h;
  const double ghz = concurrence(PureState<Amplitude>(SystemShape({2, 2, 2}), g));
  std::mt19937 rng(7);
  std::normal_distribution<double> n;
  double worst_product = 0;
  for (const auto& levels : std::vector<std::vector<std::size_t>>{{2, 2}, {2, 2, 2}, {2, 3}, {3, 3}, {2, 2, 2, 2}}) {
    for (int trial = 0; trial < 20; ++trial) {
      ProductState<Amplitude> p;
      for (auto k : levels) {
        std::vector<Amplitude> local;
        double norm = 0;
        for (std::size_t i = 0; i < k; ++i) {
          local.emplace_back(n(rng), n(rng));
          norm += std::norm(local.back());
        }
        for (auto& x : local) x /= std::sqrt(norm);
        p.locals.push_back(local);
      }
      worst_product = std::max(worst_product, concurrence(segre_map(p)));
    }
  }
  std::ostringstream os;
  os.precision(17);
  os << "Bell " << bell << ", GHZ " << ghz << " (sqrt 3, unit weights), max product " << worst_product;
  CHECK(std::abs(bell - 1.0) <= 1e-12, os.str());
  CHECK(std::abs(ghz - std::sqrt(3.0)) <= 1e-12, os.str());
  CHECK(worst_product <= 1e-12, os.str());
  return {true, os.str()};
}

// ---- AC8 ----
Verdict hilbert_basis_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> entry(-5, 5);
  std::size_t cones = 0, points = 0, basis_total = 0;
  for (std::size_t d : {2u, 3u}) {
    int made = 0;
    while (made < 20) {
      std::uniform_int_distribution<int> count(static_cast<int>(d), static_cast<int>(d) + 2);
      IntMatrix gens;
      const int k = count(rng);
      for (int i = 0; i < k; ++i) {
        IntVector x;
        for (std::size_t j = 0; j < d; ++j) x.emplace_back(entry(rng));
        gens.push_back(x);
      }
      const LatticeCone c(d, gens);
      if (c.generators().empty() || rank(c.generators()) != d || !is_strongly_convex(c)) continue;
      ++made;
      const auto ineq = oracle::facet_candidates(c.generators());
      const auto hb = hilbert_basis(c);
      basis_total += hb.generators.size();
      for (const auto& b : hb.generators) CHECK(oracle::in_cone(ineq, b), "basis element outside the cone");
      for (const auto& x : oracle::ball_points(ineq, d, 6)) {
        CHECK(oracle::reachable(ineq, hb.generators, x), "unreachable lattice point " + to_string(x));
        ++points;
      }
      for (std::size_t i = 0; i < hb.generators.size(); ++i) {
        CHECK(!oracle::reachable(ineq, hb.generators, hb.generators[i], i),
              "redundant basis element " + to_string(hb.generators[i]));
      }
      ++cones;
    }
  }
  const double t = seconds_since(t0);
  CHECK(t < 30.0, "runtime " + std::to_string(t) + " s");
  return {true, std::to_string(cones) + " cones, " + std::to_string(points) + " ball points, " +
                    std::to_string(basis_total) + " basis elements, " + std::to_string(t) + " s"};
}

// ---- AC9 ----
Verdict atlases() {
  const auto cp1 = chart_atlas(projective_space_fan(1));
  CHECK(cp1.charts.size() == 2, "CP1 has " + std::to_string(cp1.charts.size()) + " charts");
  CHECK(cp1.transitions.size() == 2, "CP1 transitions");
  for (const auto& t : cp1.transitions) CHECK(t.exponents == IntMatrix{v({-1})}, "CP1 transition is not z -> z^-1");
  CHECK(compose(cp1.transitions[0].exponents, cp1.transitions[1].exponents) == IntMatrix{v({1})}, "CP1 round trip");
  const auto sq = chart_atlas(multiqubit_fan(2));
  CHECK(sq.charts.size() == 4, "CP1xCP1 has " + std::to_string(sq.charts.size()) + " charts");
  std::set<IntMatrix> coords;
  for (const auto& c : sq.charts) coords.insert(c.coordinates);
  const std::set<IntMatrix> want{{v({1, 0}), v({0, 1})}, {v({-1, 0}), v({0, 1})}, {v({1, 0}), v({0, -1})}, {v({-1, 0}), v({0, -1})}};
  CHECK(coords == want, "CP1xCP1 chart coordinates");
  for (const auto& t : sq.transitions) {
    bool found = false;
    for (const auto& u : sq.transitions) {
      if (u.from == t.to && u.to == t.from) {
        CHECK(compose(t.exponents, u.exponents) == (IntMatrix{v({1, 0}), v({0, 1})}), "CP1xCP1 round trip");
        found = true;
      }
    }
    CHECK(found, "missing reverse transition");
  }
  return {true, "CP1: 2 charts, z -> z^-1, round trip identity; CP1xCP1: 4 charts (z1^+-1, z2^+-1), " +
                    std::to_string(sq.transitions.size()) + " transitions"};
}

// ---- AC10 ----
std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + TORICQ_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Verdict cli_determinism() {
  const std::string fx = TORICQ_FIXTURES_DIR;
  const std::vector<std::string> commands{
      "dual " + fx + "/cone3.json",
      "polar --polytope " + fx + "/cube3.json",
      "faces --polytope " + fx + "/cube3.json",
      "faces --cone " + fx + "/cone3.json",
      "normal-fan " + fx + "/cube3.json",
      "hilbert-basis " + fx + "/cone3.json",
      "toric-ideal --map " + fx + "/two_qubit_map.json --degree 2 --text",
      "projective-relations --exponents " + fx + "/twisted_cubic.json --degree 3 --text",
      "segre-minors --shape '[2,2,2]' --compare-printed",
      "check-separable " + fx + "/bell.json --tol 1e-10",
      "check-separable " + fx + "/product3.json",
      "concurrence " + fx + "/ghz3.json --weights " + fx + "/weights_ghz.json",
      "qubit-fan --m 3",
      "qubit-polytope --m 3",
      "atlas " + fx + "/p1xp1_fan.json",
      "param --m 3",
      "verify-param --z " + fx + "/z3.json",
  };
  for (const auto& c : commands) {
    const auto a = run_cli(c);
    const auto b = run_cli(c);
    CHECK(a.first == 0, "exit " + std::to_string(a.first) + " for: " + c + " -> " + a.second);
    CHECK(!a.second.empty() && a.second.front() == '{', "no JSON for: " + c);
    CHECK(a == b, "output differs between runs: " + c);
  }
  return {true, std::to_string(commands.size()) + " commands (all 15 verbs) byte-identical across two runs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1 cube/octahedron polarity", cube_octahedron},
      {"AC2 orthant normal fans", orthant_normal_fans},
      {"AC3 two-qubit ideal", two_qubit_ideal},
      {"AC4 three-qubit quadric span", three_qubit_span},
      {"AC5 printed g-list vs canonical minors", printed_generators},
      {"AC6 Segre soundness", segre_soundness},
      {"AC7 concurrence values", concurrence_values},
      {"AC8 Hilbert-basis oracle", hilbert_basis_oracle},
      {"AC9 CP1 and CP1xCP1 atlases", atlases},
      {"AC10 CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << " -- " << v.detail << std::endl;
    if (!v.pass) ++failures;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << (criteria.size() - failures) << "/" << criteria.size() << std::endl;
  return failures ? 1 : 0;
}
