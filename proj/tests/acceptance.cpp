// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "specat/components.hpp"
#include "specat/equitable.hpp"
#include "specat/functors.hpp"
#include "specat/io.hpp"
#include "specat/jobs.hpp"
#include "specat/matcat.hpp"
#include "specat/relcat.hpp"
#include "specat/spectral.hpp"

using namespace specat;

namespace {

using Clock = std::chrono::steady_clock;
using RelDec = SpectralDecomposition<RelCategory>;
using MatDec = SpectralDecomposition<MatR>;

// Pinned tolerances.
constexpr Tolerance kExact = Tolerance::exact();
constexpr Tolerance kFixtureFloat{1e-12, 1e-12};
constexpr Tolerance kLawFloat{1e-9, 1e-9};
constexpr double kRowSumTol = 1e-12;
constexpr double kIntertwineTol = 1e-9;
constexpr double kResidualTol = 1e-9;

std::string fixture(const std::string& name) { return std::string(SPECAT_FIXTURE_DIR) + "/" + name; }

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail = why;
    pass = pass && ok;
  }
};

struct RelFixture {
  RelCategory cat;
  LRelation f;
  RelDec dec;
};

RelFixture load_rel(const std::string& name) {
  const auto j = io::parse_json(io::read_file(fixture(name)), name);
  RelCategory cat(io::resolve_lattice(j.at("lattice").get<std::string>()));
  auto dec = io::decomposition_from_json(cat, j);
  auto f = io::arrow_from_json(cat, j.at("f"), dec.carrier, dec.carrier, "f");
  return {std::move(cat), std::move(f), std::move(dec)};
}

std::pair<RealMatrix, MatDec> load_mat(const std::string& name) {
  const auto j = io::parse_json(io::read_file(fixture(name)), name);
  const MatR cat;
  auto dec = io::decomposition_from_json(cat, j);
  auto f = io::arrow_from_json(cat, j.at("f"), dec.carrier, dec.carrier, "f");
  return {std::move(f), std::move(dec)};
}

double max_residual(const LawReport& r) {
  double m = 0.0;
  for (const auto& v : r.verdicts()) m = std::max(m, v.max_residual);
  return m;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checks = 0;
  for (const char* name : {"b4_diag.json", "b4_f1.json", "b4_f2.json"}) {
    const auto fx = load_rel(name);
    const auto r = verify_decomposition(fx.cat, fx.f, fx.dec, kExact);
    o.require(r.passed(), std::string(name) + " fails " + (r.passed() ? "" : r.failed_laws().front()));
    o.require(max_residual(r) == 0.0, std::string(name) + " has nonzero residual");
    for (const auto& v : r.verdicts()) checks += v.checks;
  }
  const double s = seconds_since(start);
  o.require(s < 1.0, "runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail = "3 fixtures, " + std::to_string(checks) + " checks, residual 0, " + std::to_string(s) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto [f, dec] = load_mat("real3.json");
  const auto r = verify_decomposition(MatR{}, f, dec, kFixtureFloat);
  o.require(r.passed(), r.passed() ? "" : "fails " + r.failed_laws().front());
  o.require(dec.blocks.size() == 2 && dec.blocks[0].lambda == RealMatrix::from_rows({{0, 1}, {1, 0}}) &&
                dec.blocks[1].lambda == RealMatrix::from_rows({{1}}),
            "fixture eigenvalue blocks differ from [[0,1],[1,0]] and [1]");
  if (o.pass) o.detail = "tol 1e-12, max residual " + std::to_string(max_residual(r));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::string> required{std::string(kBiproductA),   std::string(kBiproductB),
                                          std::string(kBiproductC),   std::string(kBiproductD),
                                          std::string(kBiproductE),   std::string(laws::kCopairPair),
                                          std::string(laws::kSumViaBiproduct)};
  std::size_t total_checks = 0;
  auto judge = [&](const std::string& label, const LawReport& r) {
    o.require(r.passed(), label + ": " + (r.passed() ? "" : r.failed_laws().front()));
    for (const auto& name : required) {
      const auto* v = r.find(name);
      o.require(v != nullptr && v->checks >= 100, label + ": law '" + name + "' not exercised 100 times");
    }
    for (const auto& v : r.verdicts()) total_checks += v.checks;
  };
  {
    Rng rng(1);
    MatSampler<RealDomain> s{5};
    judge("Mat(R)", run_law_suite(MatR{}, s, 100, kLawFloat, rng));
  }
  {
    Rng rng(2);
    MatSampler<NonNegativeRealDomain> s{5};
    judge("Mat(R>=0)", run_law_suite(MatNN{}, s, 100, kLawFloat, rng));
  }
  std::uint64_t seed = 3;
  for (const auto& [label, algebra] : std::vector<std::pair<std::string, AlgebraPtr>>{
           {"Rel", share(HeytingTable::boolean())},
           {"Rel(B4)", share(HeytingTable::b4())},
           {"Rel(chain-3)", share(HeytingTable::chain(3))}}) {
    Rng rng(seed++);
    RelSampler s{algebra, 6};
    judge(label, run_law_suite(RelCategory(algebra), s, 100, kExact, rng));
  }
  const double secs = seconds_since(start);
  o.require(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass)
    o.detail = "5 instances x 100 trials, " + std::to_string(total_checks) + " checks, 0 failures, " +
               std::to_string(secs) + " s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto f1 = load_rel("b4_f1.json");
  const auto f2 = load_rel("b4_f2.json");
  const auto expected = load_rel("b4_sum.json");
  const auto& cat = f1.cat;

  const auto sum = sum_decompositions(cat, f1.dec, f2.dec, kExact);
  const auto sum_f = cat.add(f2.f, f1.f);
  o.require(sum_f == expected.f, "f2 + f1 differs from the fixture arrow");
  for (std::size_t i = 0; i < sum.blocks.size(); ++i)
    o.require(sum.blocks[i].lambda == expected.dec.blocks[i].lambda,
              "lambda_" + std::to_string(i + 1) + " of the sum differs from the fixture");
  o.require(verify_decomposition(cat, sum_f, sum, kExact).passed(), "sum decomposition does not verify");

  const auto composed = compose_decompositions(cat, f1.dec, f2.dec, kExact);
  const auto composed_f = cat.compose(f2.f, f1.f);
  o.require(verify_decomposition(cat, composed_f, composed, kExact).passed(),
            "composite decomposition does not verify against f2.f1");
  if (o.pass) o.detail = "sum matches fixture lambdas; f2.f1 = " + cat.describe(composed_f) + " verifies";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto b4 = share(HeytingTable::b4());
  const RelCategory src(b4);
  const auto h = LatticeHom::threshold(b4, b4->index_of("a"));
  const RelCategory dst(h.target());
  const auto F = induced_functor(h);
  Rng rng(5);
  RelSampler sampler{b4, 6, 0.6};
  std::size_t blocks = 0;
  for (int t = 0; t < 200; ++t) {
    const auto c = sampler.object(rng);
    const auto f = sampler.arrow(rng, c, c);
    const auto sep = separate_components(src, f);
    const auto verdict = verify_decomposition(src, f, sep.decomposition, kExact);
    o.require(verdict.passed(), "trial " + std::to_string(t) + ": source decomposition fails");
    if (!verdict.passed()) continue;
    const auto [image, dec] = map_decomposition(src, dst, F, f, sep.decomposition, kExact);
    const auto r = verify_decomposition(dst, image, dec, kExact);
    o.require(r.passed(), "trial " + std::to_string(t) + ": image fails " + (r.passed() ? "" : r.failed_laws().front()));
    blocks += dec.blocks.size();
  }

  // Threshold image of f2 + f1 from the worked example.
  const auto sum = load_rel("b4_sum.json");
  const auto [image, dec] = map_decomposition(sum.cat, dst, F, sum.f, sum.dec, kExact);
  const auto grid = LRelation::from_labels(h.target(), sum.dec.carrier, sum.dec.carrier,
                                           {{"1", "1", "0"}, {"0", "1", "0"}, {"0", "0", "0"}});
  o.require(image == grid, "image grid is " + dst.describe(image));
  o.require(verify_decomposition(dst, image, dec, kExact).passed(), "image decomposition does not verify");
  // Pairs read as (source, target), 1-based.
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t t = 0; t < image.target().size(); ++t)
    for (std::size_t s = 0; s < image.source().size(); ++s)
      if (image.at(t, s) != h.target()->bottom()) pairs.insert({s + 1, t + 1});
  const std::set<std::pair<std::size_t, std::size_t>> want{{1, 1}, {2, 1}, {2, 2}};
  o.require(pairs == want, "support differs from {(1,1),(2,1),(2,2)}");
  if (o.pass)
    o.detail = "200 relations, " + std::to_string(blocks) +
               " image blocks verified; f2+f1 image support {(1,1),(2,1),(2,2)} as (source,target)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto b4 = share(HeytingTable::b4());
  const RelCategory cat(b4);
  Rng rng(6);
  RelSampler sampler{b4, 8, 0.85};
  std::size_t cells = 0, largest = 0;
  for (int t = 0; t < 200; ++t) {
    const auto c = sampler.object(rng);
    largest = std::max(largest, c.size());
    const auto f = sampler.arrow(rng, c, c);
    const auto expected =
        oracle::bfs_components(c.size(), [&](std::size_t i, std::size_t j) { return f.at(i, j) != b4->bottom(); });
    const auto sep = separate_components(cat, f);
    o.require(oracle::canonical(sep.partition.cells()) == expected,
              "trial " + std::to_string(t) + ": partition " + describe_partition(sep.partition));
    o.require(reconstruct(cat, sep.decomposition) == f, "trial " + std::to_string(t) + ": reconstruction differs");
    cells += sep.partition.cell_count();
  }
  if (o.pass)
    o.detail = "200 relations (largest carrier " + std::to_string(largest) + "), " + std::to_string(cells) +
               " components match BFS, exact reconstruction";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t graphs = 0;
  double worst_row = 0, worst_intertwine = 0, worst_residual = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : oracle::connected_graphs(n)) {
      ++graphs;
      const std::string tag = "graph #" + std::to_string(graphs) + " (n=" + std::to_string(n) + ")";
      RealMatrix adj(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj.set(i, j, g[i][j]);

      const auto search = oracle::exhaustive_coarsest_equitable(g);
      o.require(search.candidates == 1 && search.all_refine, tag + ": oracle found no unique coarsest partition");
      const auto p = coarsest_equitable_partition(adj);
      o.require(oracle::canonical(p.cells()) == search.coarsest, tag + ": partition " + describe_partition(p));
      if (n == 1) continue;  // a lone vertex has no walk

      const auto q = reduced_transition_matrix(adj, p);
      const std::size_t k = p.cell_count();
      // Conservation in integers, with d(J,K) recounted from the adjacency.
      for (std::size_t J = 0; J < k; ++J)
        for (std::size_t K = 0; K < k; ++K) {
          std::size_t dJK = 0, dKJ = 0;
          for (auto v : p.cell(K)) dJK += static_cast<std::size_t>(g[p.cell(J).front()][v]);
          for (auto v : p.cell(J)) dKJ += static_cast<std::size_t>(g[p.cell(K).front()][v]);
          o.require(q.degrees[J][K] == dJK, tag + ": d(J,K) differs from recount");
          o.require(p.cell(J).size() * dJK == p.cell(K).size() * dKJ, tag + ": conservation fails");
        }
      for (std::size_t J = 0; J < k; ++J) {
        double sum = 0;
        for (std::size_t K = 0; K < k; ++K) sum += q.reduced(J, K);
        worst_row = std::max(worst_row, std::abs(sum - 1.0));
      }
      const auto f = walk_matrix(adj);
      worst_intertwine = std::max(worst_intertwine, max_abs_diff(multiply(q.rho, f), multiply(q.reduced, q.rho)));
      const auto r = multiply(q.rho, residual_part(f, q));
      worst_residual = std::max(worst_residual, max_abs_diff(r, RealMatrix(k, n)));
    }
  }
  o.require(graphs == 27476, "enumerated " + std::to_string(graphs) + " connected graphs, expected 27476");
  o.require(worst_row <= kRowSumTol, "row sum error " + std::to_string(worst_row));
  o.require(worst_intertwine <= kIntertwineTol, "intertwining error " + std::to_string(worst_intertwine));
  o.require(worst_residual <= kResidualTol, "residual error " + std::to_string(worst_residual));

  const auto star = adjacency_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto sq = reduced_transition_matrix(star, coarsest_equitable_partition(star));
  o.require(sq.partition.cell_count() == 2 && sq.reduced == RealMatrix::from_rows({{0, 1}, {1, 0}}),
            "K1,3 quotient is " + describe_matrix(sq.reduced));
  if (o.pass) {
    std::ostringstream os;
    os << graphs << " graphs match the exhaustive oracle; max row-sum err " << worst_row << ", intertwining "
       << worst_intertwine << ", residual " << worst_residual << "; K1,3 -> [[0,1],[1,0]]";
    o.detail = os.str();
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  // Frozen expectations: mutated fixture -> violated conditions among (a)-(d).
  const std::map<std::string, std::string> expected{
      {"b4_diag_a.json", "ac"}, {"b4_diag_b.json", "bc"}, {"b4_diag_c.json", "ac"},
      {"b4_diag_d.json", "d"},  {"b4_f1_a.json", "ac"},   {"b4_f1_b.json", "bc"},
      {"b4_f1_c.json", "ac"},   {"b4_f1_d.json", "d"},    {"b4_f2_a.json", "ac"},
      {"b4_f2_b.json", "bc"},   {"b4_f2_c.json", "ac"},   {"b4_f2_d.json", "d"},
      {"real3_a.json", "acd"},     {"real3_b.json", "bcd"},     {"real3_c.json", "acd"},
      {"real3_d.json", "d"},
  };
  const std::map<char, std::string_view> names{{'a', conditions::kRetraction},
                                               {'b', conditions::kOrthogonal},
                                               {'c', conditions::kPartitionOfIdentity},
                                               {'d', conditions::kReconstruction}};
  auto render = [](const JobConfig& cfg) {
    const auto r = run_job(cfg);
    return std::pair{r.status, render_report(r, "json")};
  };
  for (const auto& [file, conds] : expected) {
    JobConfig cfg;
    cfg.command = "verify";
    cfg.inputs = {fixture("mutated/" + file)};
    cfg.seed = 7;
    const auto [status, first] = render(cfg);
    const auto [status2, second] = render(cfg);
    o.require(status == ExitStatus::verification_failed, file + ": exit " + std::to_string(static_cast<int>(status)));
    o.require(first == second && status == status2, file + ": reports differ across runs");
    const auto body = io::parse_json(first, file);
    std::string got;
    for (const auto& [c, law] : names)
      for (const auto& v : body.at("verdicts"))
        if (v.at("law") == law && !v.at("passed").get<bool>()) got += c;
    o.require(got == conds, file + ": violated '" + got + "', expected '" + conds + "'");
    const char target = file[file.size() - 6];
    o.require(got.find(target) != std::string::npos, file + ": targeted condition not reported");
  }
  for (const char* command : {"laws", "functor"}) {
    JobConfig cfg;
    cfg.command = command;
    cfg.seed = 7;
    cfg.trials = 20;
    cfg.lattice = "builtin:b4";
    if (std::string(command) == "functor") {
      cfg.hom = "builtin:threshold:a";
      cfg.inputs = {fixture("mutated/b4_f1_d.json")};
    }
    const auto a = render(cfg);
    const auto b = render(cfg);
    o.require(a.second == b.second, std::string(command) + ": seeded reports differ across runs");
    o.require(a.first != ExitStatus::internal, std::string(command) + ": internal error");
  }
  if (o.pass) o.detail = std::to_string(expected.size()) + " mutated fixtures report their condition; seeded reports byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"worked B4 decompositions verify exactly", criterion1},
      {"real 3x3 decomposition verifies at 1e-12", criterion2},
      {"law suites on five instances", criterion3},
      {"sum and composite of shared decompositions", criterion4},
      {"threshold functor preserves decompositions", criterion5},
      {"components match BFS oracle", criterion6},
      {"coarsest equitable partitions match exhaustive oracle", criterion7},
      {"mutated fixtures name their condition deterministically", criterion8},
  };
  const auto start = Clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s  [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("acceptance: %zu/%zu passed in %.2f s\n", criteria.size() - failed, criteria.size(),
              seconds_since(start));
  return failed == 0 ? 0 : 1;
}
