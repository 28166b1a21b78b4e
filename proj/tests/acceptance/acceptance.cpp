// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "orbispec/cli.hpp"
#include "orbispec/errors.hpp"
#include "orbispec/lambda_power.hpp"
#include "orbispec/macdonald.hpp"
#include "orbispec/workspace.hpp"
#include "support.hpp"

using namespace orbispec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<std::size_t> kDropQ{0, 1};

std::vector<std::string> workspace_files() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(testing::source_path("fixtures")))
    if (entry.path().extension() == ".ws") out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Workspace> all_workspaces() {
  std::vector<Workspace> out;
  for (const auto& f : workspace_files()) out.push_back(Workspace::load(f));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string run_with_exit(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return out.str() + "# exit: " + std::to_string(code) + "\n";
}

// ---- AC1 ---------------------------------------------------------------------

Outcome power_axioms() {
  const Signature s = testing::sig("c,q");
  testing::Gen gen(1001);
  std::size_t inputs = 0, failures = 0;
  for (PowerMode mode : {PowerMode::Substitution, PowerMode::Geometric}) {
    for (int i = 0; i < 120; ++i) {
      std::size_t order = static_cast<std::size_t>(gen.integer(1, 5));
      auto a = gen.series(s, order, 2, 0, 2, 6);
      auto b = gen.series(s, order, 2, 0, 2, 6);
      auto m = gen.effective(s, 2, 2, 6);
      auto m2 = gen.effective(s, 2, 2, 6);
      ++inputs;
      bool ok = power_expand(a, m + m2, mode) == power_expand(a, m, mode) * power_expand(a, m2, mode) &&
                power_expand(a * b, m, mode) == power_expand(a, m, mode) * power_expand(b, m, mode) &&
                power_expand(a, GroupRingElement(s), mode).is_one() &&
                power_expand(a, GroupRingElement::unit(s), mode) == a &&
                power_expand(TruncatedSeries(s, order), m, mode).is_one() &&
                power_expand(a, m, mode).coeff(1) == a.coeff(1) * m;
      if (!ok) ++failures;
    }
  }
  return {failures == 0, std::to_string(inputs) + " random inputs over both modes, " + std::to_string(failures) +
                             " violations"};
}

// ---- AC2 ---------------------------------------------------------------------

// Every multiset of size <= max_size drawn from the pool.
std::vector<EffectiveMapClass> multisets(const Signature& s, const std::vector<GroupElement>& pool,
                                         std::size_t max_size) {
  std::vector<EffectiveMapClass> out;
  std::vector<GroupElement> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back({s, current});
    if (current.size() == max_size) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

Outcome direct_formula_oracle() {
  const Signature s = testing::sig("c,q");
  auto m_pool = multisets(s, {s.element({0, 0}), s.element({Rational(1, 2), 0}), s.element({Rational(1, 3), 1})}, 3);
  auto x_pool = multisets(s, {s.element({0, 0}), s.element({Rational(1, 2), 1})}, 2);
  std::size_t cases = 0, failures = 0;
  for (const auto& m : m_pool) {
    auto m_elt = m.to_element();
    for (std::size_t code = 0; code < x_pool.size() * x_pool.size() * x_pool.size() * x_pool.size(); ++code) {
      std::vector<EffectiveMapClass> xs;
      std::vector<GroupRingElement> higher;
      std::size_t c = code;
      for (int level = 0; level < 4; ++level) {
        xs.push_back(x_pool[c % x_pool.size()]);
        higher.push_back(xs.back().to_element());
        c /= x_pool.size();
      }
      ++cases;
      auto direct = power_direct_formula(xs, m, 4);
      auto expanded = power_expand(TruncatedSeries(s, 4, higher), m_elt, PowerMode::Geometric);
      if (!(direct == expanded)) ++failures;
    }
  }
  return {failures == 0, std::to_string(cases) + " inputs (|X_i| <= 2, |M| <= 3, N = 4), " +
                             std::to_string(failures) + " disagreements"};
}

// ---- AC3, AC4 ----------------------------------------------------------------

struct HodgeFixture {
  std::string name;
  std::vector<MixedHodgeEigenDatum> rows;
};

std::vector<HodgeFixture> hodge_fixtures() {
  std::vector<HodgeFixture> out;
  for (const auto& ws : all_workspaces())
    for (const auto& h : ws.hodge_decls()) out.push_back({h.name, h.rows});
  return out;
}

Outcome theorem1(bool reduced) {
  auto fixtures = hodge_fixtures();
  bool odd = false, torsion = false;
  std::size_t equal = 0;
  std::string failed;
  for (const auto& f : fixtures) {
    for (const auto& r : f.rows) {
      if (r.k % 2 == 1) odd = true;
      if (!r.alpha.value().is_zero()) torsion = true;
    }
    auto rep = reduced ? verify_corollary1(f.name, f.rows, 5) : verify_theorem1(f.name, f.rows, 5);
    if (rep.verdict == Verdict::Equal) ++equal;
    else failed += " " + f.name;
  }
  bool pass = equal == fixtures.size() && fixtures.size() >= 4 && odd && torsion;
  std::string detail = std::to_string(equal) + "/" + std::to_string(fixtures.size()) + " fixtures equal through T^5";
  if (!odd) detail += ", no odd-degree fixture";
  if (!torsion) detail += ", no torsion fixture";
  if (!failed.empty()) detail += ", failing:" + failed;
  return {pass, detail};
}

// ---- AC5 ---------------------------------------------------------------------

Outcome theorem2_zero_dim() {
  std::size_t runs = 0, equal = 0;
  for (std::size_t a : {2, 3}) {
    ExplicitFixture f{"z" + std::to_string(a), brieskorn_zero_dim(a, a)};
    for (std::size_t k = 1; k <= 2; ++k) {
      auto reports = verify_theorem2(f, k, 3, ShiftChoice::Audit, PowerMode::Substitution);
      ++runs;
      if (reports[0].verdict == Verdict::Equal && reports[0].rows.size() == 3) ++equal;
    }
  }
  auto point = verify_theorem2(ExplicitFixture{"pt", brieskorn_zero_dim(1, 1)}, 2, 3, ShiftChoice::Audit,
                               PowerMode::Substitution)[0];
  GroupRingElement four = GroupRingElement::monomial(ehd_signature(), {0, 0, 0}, 4);
  bool counting = point.rows.size() >= 2 && point.rows[1].lhs == four && point.rows[1].rhs == four;
  return {equal == runs && counting, std::to_string(equal) + "/" + std::to_string(runs) +
                                         " (fixture, k) runs equal through T^3; point T^2 at k=2 " +
                                         (counting ? "= 4" : "!= 4")};
}

// ---- AC6 ---------------------------------------------------------------------

Outcome hand_fixture() {
  auto ws = Workspace::load(testing::source_path("fixtures/c2-wreath.ws"));
  auto model = ws.model();
  std::size_t w = *ws.node("W");
  std::size_t c = *ws.node("C");
  EquivariantHD hand = model->e_k(w, 1);
  EquivariantHD derived = wreath_lhs_k1_positive_d(*model, c, 2);
  EquivariantHD base = model->e_k(c, 1);
  auto literal = rhs_expand_theorem2(base, 1, 1, 2, ShiftConvention::Literal, PowerMode::Substitution).coeff(2);
  auto shifted = rhs_expand_theorem2(base, 1, 1, 2, ShiftConvention::Shifted, PowerMode::Substitution).coeff(2);
  bool literal_ok = literal == hand;
  bool shifted_ok = shifted == hand;
  auto audit = normalization_audit(NodeFixture{"C", model, c}, 1);
  std::string expected_winner = literal_ok ? "literal" : "shifted";
  bool pass = hand == derived && (literal_ok != shifted_ok) && audit.winner() == expected_winner;
  return {pass, std::string("hand e1 = ") + hand.str() + (hand == derived ? " = derived rule" : " != derived rule") +
                    "; T^2 matches " + (literal_ok ? "literal " : "") + (shifted_ok ? "shifted " : "") +
                    "convention; audit names " + audit.winner()};
}

// ---- AC7 ---------------------------------------------------------------------

Outcome audit_all() {
  std::size_t positive = 0, positive_ok = 0, zero = 0, zero_ok = 0;
  std::string failed;
  for (const auto& ws : all_workspaces()) {
    for (const auto& f : ws.theorem2_fixtures()) {
      std::size_t k = 1;
      if (const auto* node = std::get_if<NodeFixture>(&f)) {
        if (node->model->depth(node->node) < 1) continue;
        if (!node->model->node(node->node).dim) continue;
      }
      auto a = normalization_audit(f, k);
      if (!a.supported) continue;
      std::string winner = a.winner();
      if (a.dim.is_zero()) {
        ++zero;
        if (winner == "both") ++zero_ok;
        else failed += " " + a.fixture;
      } else {
        ++positive;
        if (winner == "literal" || winner == "shifted") ++positive_ok;
        else failed += " " + a.fixture;
      }
    }
  }
  std::string golden = read_file(testing::source_path("tests/golden/audit.txt"));
  std::string first = run_with_exit({"audit", testing::source_path("fixtures/line-mu2.ws")});
  std::string second = run_with_exit({"audit", testing::source_path("fixtures/line-mu2.ws")});
  bool golden_ok = first == second && first == golden;
  bool pass = positive > 0 && positive == positive_ok && zero == zero_ok && golden_ok;
  std::string detail = std::to_string(positive_ok) + "/" + std::to_string(positive) + " d>0 fixtures single winner, " +
                       std::to_string(zero_ok) + "/" + std::to_string(zero) + " d=0 fixtures both; golden " +
                       (golden_ok ? "matches" : "differs");
  if (!failed.empty()) detail += ", failing:" + failed;
  return {pass, detail};
}

// ---- AC8 ---------------------------------------------------------------------

Outcome reduction_coherence() {
  std::size_t checks = 0, failures = 0;
  auto check_model = [&](const TripleModel& m) {
    for (std::size_t node = 0; node < m.size(); ++node) {
      std::size_t top = std::min<std::size_t>(2, m.depth(node));
      for (std::size_t k = 0; k <= top; ++k) {
        ++checks;
        if (!(project(m.hsp3_k(node, k), kDropQ) == m.hsp2_k(node, k)) || !(ehd_to_hsp(m.e_k(node, k)) == m.hsp_k(node, k)))
          ++failures;
      }
    }
  };
  for (const auto& ws : all_workspaces()) {
    check_model(*ws.model());
    for (const auto& f : ws.theorem2_fixtures())
      if (const auto* ex = std::get_if<ExplicitFixture>(&f)) check_model(node_from_explicit(ex->set, 2, ex->name));
  }
  auto x = GroupRingElement::monomial(ehd_signature(), {Rational(1, 2), 0, 0});
  bool witness = ehd_to_hsp(x * x) == GroupRingElement::monomial(hsp_signature(), {0}) &&
                 ehd_to_hsp(x) * ehd_to_hsp(x) == GroupRingElement::monomial(hsp_signature(), {1});
  return {failures == 0 && witness, std::to_string(checks - failures) + "/" + std::to_string(checks) +
                                        " (node, k) checks hold; witness hsp(x^2) = {0}, hsp(x)^2 = {1} " +
                                        (witness ? "asserted" : "FAILED")};
}

// ---- AC9 ---------------------------------------------------------------------

Outcome trivial_collapse() {
  testing::Gen gen(1009);
  auto trivial = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  std::size_t nodes = 0, failures = 0;
  for (int i = 0; i < 200; ++i) {
    TripleModel m;
    std::size_t n = m.add_node({"v", std::nullopt, trivial, ehd_from_data(gen.hodge_data(6)), {}});
    m.add_child(n, 0, Rational(0), std::nullopt);
    m.finalize();
    ++nodes;
    for (std::size_t k = 1; k <= 3; ++k)
      if (!(m.hsp_k(n, k) == m.hsp_k(n, 0)) || !(m.e_k(n, k) == m.e_k(n, 0))) {
        ++failures;
        break;
      }
  }
  return {failures == 0, std::to_string(nodes) + " random nodes, k <= 3, " + std::to_string(failures) + " failures"};
}

// ---- AC10 --------------------------------------------------------------------

Outcome cli_determinism() {
  std::size_t files = 0, ok = 0;
  std::string failed;
  for (const auto& path : workspace_files()) {
    ++files;
    std::string name = std::filesystem::path(path).stem().string();
    std::string first = run_with_exit({"run", path});
    std::string second = run_with_exit({"run", path});
    std::string golden = read_file(testing::source_path("tests/golden/" + name + ".txt"));
    if (first == second && first == golden) ++ok;
    else failed += " " + name;
  }
  std::string detail = std::to_string(ok) + "/" + std::to_string(files) + " workspace files match their golden output";
  if (!failed.empty()) detail += ", differing:" + failed;
  return {ok == files && files > 0, detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "power structure axioms", 10, power_axioms},
      {"AC2", "combinatorial formula oracle", 30, direct_formula_oracle},
      {"AC3", "symmetric power identity", 5, [] { return theorem1(false); }},
      {"AC4", "reduced symmetric power identity", 0, [] { return theorem1(true); }},
      {"AC5", "wreath power identity, d = 0", 60, theorem2_zero_dim},
      {"AC6", "wreath power identity, d = 1 hand fixture", 0, hand_fixture},
      {"AC7", "normalization audit", 0, audit_all},
      {"AC8", "reduction coherence", 0, reduction_coherence},
      {"AC9", "trivial group collapse", 0, trivial_collapse},
      {"AC10", "CLI determinism", 0, cli_determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    bool pass = o.pass && in_time;
    all = all && pass;
    char timing[64];
    if (c.limit_seconds > 0) std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", seconds, c.limit_seconds);
    else std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << c.id << ' ' << (pass ? "PASS" : "FAIL") << "  " << c.title << ": " << o.detail << " (" << timing
              << ")\n";
  }
  return all ? 0 : 1;
}
