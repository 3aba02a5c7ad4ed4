#include "specat/jobs.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>
#include <type_traits>

#include "specat/components.hpp"
#include "specat/equitable.hpp"
#include "specat/functors.hpp"
#include "specat/random.hpp"

namespace specat {

using io::Json;

namespace {

bool is_rel(std::string_view instance) { return instance == "rel" || instance == "rel-l"; }

bool ends_with(std::string_view s, std::string_view suffix) { return s.ends_with(suffix); }

Json lattice_ref(const HeytingTable& t) {
  if (t == HeytingTable::boolean()) return "builtin:bool";
  if (t == HeytingTable::b4()) return "builtin:b4";
  if (t.size() >= 2 && t == HeytingTable::chain(t.size())) return "builtin:chain:" + std::to_string(t.size());
  return io::lattice_to_json(t);
}

AlgebraPtr lattice_from_ref(const Json& j) {
  if (j.is_string()) return io::resolve_lattice(j.get<std::string>());
  return share(io::lattice_from_json(j));
}

// Resolved instance, lattice and tolerance for one job.
struct Context {
  const JobConfig& cfg;
  Json& body;
  std::string instance;
  AlgebraPtr algebra;
  Tolerance tol;
};

void resolve_instance(Context& ctx, const Json* doc, std::string_view default_instance) {
  const auto& cfg = ctx.cfg;
  std::string instance = cfg.instance;
  if (instance.empty() && doc && doc->is_object() && doc->contains("instance") && (*doc)["instance"].is_string())
    instance = (*doc)["instance"].get<std::string>();
  const bool has_lattice = !cfg.lattice.empty() || (doc && doc->is_object() && doc->contains("lattice"));
  if (instance.empty()) instance = default_instance == "rel" && has_lattice ? "rel-l" : std::string(default_instance);
  if (instance != "mat-r" && instance != "mat-c" && instance != "mat-nn" && !is_rel(instance))
    throw ParseError("unknown instance '" + instance + "' (expected mat-r, mat-c, mat-nn, rel or rel-l)");

  if (is_rel(instance)) {
    if (!cfg.lattice.empty())
      ctx.algebra = io::resolve_lattice(cfg.lattice);
    else if (instance == "rel-l" && doc && doc->is_object() && doc->contains("lattice"))
      ctx.algebra = lattice_from_ref((*doc)["lattice"]);
    else
      ctx.algebra = share(HeytingTable::boolean());
    if (instance == "rel" && !(*ctx.algebra == HeytingTable::boolean()))
      throw ParseError("instance 'rel' is Rel over bool; use rel-l for lattice '" + ctx.algebra->name() + "'");
    ctx.body["job"]["lattice"] = lattice_ref(*ctx.algebra);
  } else if (!cfg.lattice.empty()) {
    throw ParseError("--lattice applies to rel-l only, not to instance '" + instance + "'");
  }
  ctx.instance = instance;
  ctx.body["job"]["instance"] = instance;
}

template <class Fn>
void dispatch(const Context& ctx, Fn&& fn) {
  if (ctx.instance == "mat-r") return fn(MatR{});
  if (ctx.instance == "mat-c") return fn(MatC{});
  if (ctx.instance == "mat-nn") return fn(MatNN{});
  return fn(RelCategory(ctx.algebra));
}

template <class C>
constexpr bool kIsRel = std::is_same_v<C, RelCategory>;

Json load_json(const std::string& path) { return io::parse_json(io::read_file(path), path); }

// Endo-arrow from a standalone file: relation JSON, CSV or a JSON grid.
template <CMonCategory C>
typename C::Arrow load_arrow(const C& cat, const std::string& path) {
  if constexpr (kIsRel<C>) {
    return io::relation_from_json(load_json(path), cat.algebra());
  } else {
    using D = typename C::Domain;
    if (ends_with(path, ".csv")) return io::matrix_from_csv<D>(io::read_file(path));
    Json j = load_json(path);
    if (j.is_object() && j.contains("values")) j = j["values"];
    return io::matrix_from_json<D>(j, path);
  }
}

template <CMonCategory C>
Json decomposition_doc(const Context& ctx, const C& cat, const typename C::Arrow& f,
                       const SpectralDecomposition<C>& dec) {
  Json out;
  out["schema"] = kDecompositionSchema;
  out["instance"] = ctx.instance;
  if constexpr (kIsRel<C>) out["lattice"] = lattice_ref(*cat.algebra());
  const Json parts = io::decomposition_to_json(cat, dec);
  out["carrier"] = parts["carrier"];
  out["f"] = io::arrow_to_json(cat, f);
  out["blocks"] = parts["blocks"];
  return out;
}

void set_verdicts(Json& body, const char* key, const LawReport& report) {
  body[key] = io::law_report_to_json(report);
  if (!report.notes().empty()) {
    Json notes;
    for (const auto& [k, v] : report.notes()) notes[k] = v;
    body[std::string(key) + "_notes"] = std::move(notes);
  }
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// ---- verify -----------------------------------------------------------------

// Accepts a decomposition document or a report carrying one.
Json unwrap_decomposition(Json doc) {
  if (doc.is_object() && doc.contains("decomposition")) return doc["decomposition"];
  if (doc.is_object() && doc.contains("image")) return doc["image"];
  return doc;
}

ExitStatus cmd_verify(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (cfg.inputs.empty() || cfg.inputs.size() > 2)
    throw ParseError("verify: expected DECOMPOSITION or F DECOMPOSITION");
  const std::string dec_path = cfg.inputs.back();
  const Json doc = unwrap_decomposition(load_json(dec_path));
  std::string fallback = "rel";
  if (cfg.inputs.size() == 2 && ends_with(cfg.inputs[0], ".csv")) fallback = "mat-r";
  resolve_instance(ctx, &doc, fallback);

  bool passed = false;
  dispatch(ctx, [&](const auto& cat) {
    using C = std::decay_t<decltype(cat)>;
    const auto dec = io::decomposition_from_json(cat, doc);
    typename C::Arrow f;
    if (cfg.inputs.size() == 2) {
      f = load_arrow(cat, cfg.inputs[0]);
    } else {
      if (!doc.contains("f")) throw ParseError(dec_path + ": missing 'f' (or pass F as a separate input)");
      f = io::arrow_from_json(cat, doc["f"], dec.carrier, dec.carrier, "f");
    }
    const auto report = verify_decomposition(cat, f, dec, ctx.tol);
    ctx.body["blocks"] = dec.blocks.size();
    set_verdicts(ctx.body, "verdicts", report);
    if (!report.passed()) ctx.body["failed"] = report.failed_laws();
    passed = report.passed();
  });
  return passed ? ExitStatus::pass : ExitStatus::verification_failed;
}

// ---- separate ---------------------------------------------------------------

template <CMonCategory C>
std::string separation_dot(const C& cat, const typename C::Arrow& f, const Partition& partition) {
  std::vector<std::string> names;
  if constexpr (kIsRel<C>) {
    names = f.source().labels();
  } else {
    for (std::size_t i = 0; i < f.rows(); ++i) names.push_back(std::to_string(i));
  }
  std::ostringstream os;
  os << "digraph separation {\n";
  for (std::size_t k = 0; k < partition.cell_count(); ++k) {
    os << "  subgraph cluster_" << k << " {\n    label=\"cell " << k << "\";\n";
    for (auto v : partition.cell(k)) os << "    " << quote(names[v]) << ";\n";
    os << "  }\n";
  }
  for (std::size_t t = 0; t < names.size(); ++t)
    for (std::size_t s = 0; s < names.size(); ++s) {
      std::string label;
      if constexpr (kIsRel<C>) {
        if (f.at(t, s) == cat.algebra()->bottom()) continue;
        label = cat.algebra()->label(f.at(t, s));
      } else {
        if (f(t, s) == typename C::Domain::Scalar(0)) continue;
        label = format_scalar(f(t, s));
      }
      os << "  " << quote(names[s]) << " -> " << quote(names[t]) << " [label=" << quote(label) << "];\n";
    }
  os << "}\n";
  return os.str();
}

ExitStatus cmd_separate(Context& ctx, std::string& dot) {
  const auto& cfg = ctx.cfg;
  if (cfg.inputs.size() != 1) throw ParseError("separate: expected exactly one input");
  const std::string path = cfg.inputs[0];
  std::optional<Json> doc;
  if (!ends_with(path, ".csv")) doc = load_json(path);
  resolve_instance(ctx, doc ? &*doc : nullptr, doc ? "rel" : "mat-r");

  bool passed = false;
  dispatch(ctx, [&](const auto& cat) {
    using C = std::decay_t<decltype(cat)>;
    typename C::Arrow f;
    Separation<C> sep;
    Json cells = Json::array();
    if constexpr (kIsRel<C>) {
      f = io::relation_from_json(*doc, cat.algebra());
      if (!(f.source() == f.target()))
        throw PreconditionError("separate: relation is not an endo-relation (source and target carriers differ)");
      sep = separate_components(cat, f);
      ctx.body["zero_threshold"] = "exact (bottom)";
      for (const auto& cell : sep.partition.cells()) cells.push_back(sub_carrier(f.source(), cell).labels());
    } else {
      using D = typename C::Domain;
      f = doc ? io::matrix_from_json<D>(doc->is_object() && doc->contains("values") ? (*doc)["values"] : *doc, path)
              : io::matrix_from_csv<D>(io::read_file(path));
      sep = detect_blocks(cat, f, ctx.tol.abs);
      ctx.body["zero_threshold"] = ctx.tol.abs;
      cells = io::partition_to_json(sep.partition);
    }
    const auto report = verify_decomposition(cat, f, sep.decomposition, ctx.tol);
    ctx.body["cells"] = sep.partition.cell_count();
    ctx.body["partition"] = std::move(cells);
    ctx.body["connected"] = sep.partition.cell_count() <= 1;
    set_verdicts(ctx.body, "verdicts", report);
    ctx.body["decomposition"] = decomposition_doc(ctx, cat, f, sep.decomposition);
    dot = separation_dot(cat, f, sep.partition);
    passed = report.passed();
  });
  return passed ? ExitStatus::pass : ExitStatus::verification_failed;
}

// ---- equitable --------------------------------------------------------------

ExitStatus cmd_equitable(Context& ctx, std::string& dot) {
  const auto& cfg = ctx.cfg;
  if (cfg.inputs.size() != 1) throw ParseError("equitable: expected exactly one edge-list input");
  if (!cfg.instance.empty() && cfg.instance != "mat-r")
    throw ParseError("equitable: the walk matrix lives in mat-r, not '" + cfg.instance + "'");
  ctx.instance = "mat-r";
  ctx.body["job"]["instance"] = "mat-r";

  const auto graph = io::edges_from_text(io::read_file(cfg.inputs[0]));
  const auto adj = adjacency_from_edges(graph.vertices, graph.edges);
  validate_adjacency(adj, true);
  const bool user_partition = !cfg.partition.empty();
  const Partition partition = user_partition ? io::partition_from_json(load_json(cfg.partition), graph.vertices)
                                             : coarsest_equitable_partition(adj);
  const auto q = reduced_transition_matrix(adj, partition);
  const auto f = walk_matrix(adj);
  const auto report = check_quotient(adj, q, ctx.tol);

  auto& body = ctx.body;
  body["vertices"] = graph.vertices;
  body["edges"] = graph.edges.size();
  body["partition_source"] = user_partition ? "user" : "coarsest";
  body["cells"] = partition.cell_count();
  body["partition"] = io::partition_to_json(partition);
  body["degrees"] = q.degrees;
  body["lambda_1"] = io::matrix_to_json(q.reduced);
  body["rho_1"] = io::matrix_to_json(q.rho);
  body["kappa_1"] = io::matrix_to_json(q.kappa);
  body["f"] = io::matrix_to_json(f);
  body["residual"] = io::matrix_to_json(residual_part(f, q));
  set_verdicts(body, "verdicts", report);

  std::ostringstream os;
  os << "graph equitable {\n";
  for (std::size_t k = 0; k < partition.cell_count(); ++k) {
    os << "  subgraph cluster_" << k << " {\n    label=\"cell " << k << "\";\n";
    for (auto v : partition.cell(k)) os << "    " << v << ";\n";
    os << "  }\n";
  }
  for (const auto& [u, v] : graph.edges) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  dot = os.str();
  return report.passed() ? ExitStatus::pass : ExitStatus::verification_failed;
}

// ---- laws -------------------------------------------------------------------

Json hom_json(const LatticeHom& h) {
  Json out;
  out["source"] = lattice_ref(*h.source());
  out["target"] = lattice_ref(*h.target());
  Json map;
  for (LatticeHom::Element x = 0; x < h.source()->size(); ++x) map[h.source()->label(x)] = h.target()->label(h(x));
  out["map"] = std::move(map);
  return out;
}

ExitStatus cmd_laws(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (!cfg.inputs.empty()) throw ParseError("laws: takes no input files");
  resolve_instance(ctx, nullptr, cfg.lattice.empty() ? "mat-r" : "rel-l");
  const std::size_t trials = cfg.trials.value_or(100);
  Rng rng(resolve_seed(cfg.seed));

  bool passed = false;
  dispatch(ctx, [&](const auto& cat) {
    using C = std::decay_t<decltype(cat)>;
    if constexpr (kIsRel<C>) {
      RelSampler sampler{cat.algebra(), cfg.max_carrier};
      ctx.body["sampler"] = {{"max_carrier", cfg.max_carrier}, {"sparsity", sampler.sparsity}};
      const auto report = run_law_suite(cat, sampler, trials, ctx.tol, rng);
      set_verdicts(ctx.body, "verdicts", report);
      passed = report.passed();
      if (!cfg.hom.empty()) {
        const auto h = io::hom_from_spec(cfg.hom, cat.algebra());
        const RelCategory tgt(h.target());
        const auto functor = check_cmon_functor(cat, tgt, induced_functor(h), sampler, trials, ctx.tol, rng);
        ctx.body["hom"] = hom_json(h);
        set_verdicts(ctx.body, "functor_verdicts", functor);
        passed = passed && functor.passed();
      }
    } else {
      if (!cfg.hom.empty()) throw ParseError("laws: --hom applies to relation instances only");
      MatSampler<typename C::Domain> sampler{cfg.max_dim};
      ctx.body["sampler"] = {{"max_dim", cfg.max_dim}};
      const auto report = run_law_suite(cat, sampler, trials, ctx.tol, rng);
      set_verdicts(ctx.body, "verdicts", report);
      passed = report.passed();
    }
  });
  return passed ? ExitStatus::pass : ExitStatus::verification_failed;
}

// ---- functor ----------------------------------------------------------------

ExitStatus cmd_functor(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (cfg.inputs.size() > 1) throw ParseError("functor: expected at most one decomposition input");
  if (cfg.hom.empty()) throw ParseError("functor: --hom is required");
  if (!cfg.instance.empty() && !is_rel(cfg.instance))
    throw ParseError("functor: lattice-hom functors act on relation instances, not '" + cfg.instance + "'");
  std::optional<Json> doc;
  if (!cfg.inputs.empty()) doc = unwrap_decomposition(load_json(cfg.inputs[0]));
  resolve_instance(ctx, doc ? &*doc : nullptr, "rel-l");

  const RelCategory src(ctx.algebra);
  const auto h = io::hom_from_spec(cfg.hom, ctx.algebra);
  const auto F = induced_functor(h);
  const RelCategory tgt(h.target());
  ctx.body["hom"] = hom_json(h);

  Rng rng(resolve_seed(cfg.seed));
  RelSampler sampler{ctx.algebra, std::min<std::size_t>(cfg.max_carrier, 4)};
  const auto functor = check_cmon_functor(src, tgt, F, sampler, cfg.trials.value_or(50), ctx.tol, rng);
  set_verdicts(ctx.body, "functor_verdicts", functor);
  bool passed = functor.passed();

  if (doc) {
    const auto dec = io::decomposition_from_json(src, *doc);
    if (!doc->contains("f")) throw ParseError(cfg.inputs[0] + ": missing 'f'");
    const auto f = io::arrow_from_json(src, (*doc)["f"], dec.carrier, dec.carrier, "f");
    const auto [image_f, image] = map_decomposition(src, tgt, F, f, dec, ctx.tol);
    const auto report = verify_decomposition(tgt, image_f, image, ctx.tol);
    Context image_ctx{cfg, ctx.body, "rel-l", h.target(), ctx.tol};
    if (*h.target() == HeytingTable::boolean()) image_ctx.instance = "rel";
    Json support = Json::array();
    for (const auto& [t, s] : image_f.support()) support.push_back({t, s});
    ctx.body["image_support"] = std::move(support);
    ctx.body["image"] = decomposition_doc(image_ctx, tgt, image_f, image);
    set_verdicts(ctx.body, "verdicts", report);
    passed = passed && report.passed();
  }
  return passed ? ExitStatus::pass : ExitStatus::verification_failed;
}

std::string_view error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::type_mismatch: return "type_mismatch";
    case ErrorKind::domain: return "domain";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::parse: return "parse";
    case ErrorKind::unknown_element: return "unknown_element";
    case ErrorKind::invalid_structure: return "invalid_structure";
  }
  return "unknown";
}

}  // namespace

ExitStatus exit_status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::type_mismatch: return ExitStatus::type_mismatch;
    case ErrorKind::unknown_element: return ExitStatus::unknown_element;
    case ErrorKind::precondition: return ExitStatus::precondition;
    case ErrorKind::parse:
    case ErrorKind::domain:
    case ErrorKind::invalid_structure: return ExitStatus::input_error;
  }
  return ExitStatus::internal;
}

std::string_view exit_status_name(ExitStatus s) {
  switch (s) {
    case ExitStatus::pass: return "pass";
    case ExitStatus::verification_failed: return "verification_failed";
    case ExitStatus::input_error: return "input_error";
    case ExitStatus::precondition: return "precondition";
    case ExitStatus::type_mismatch: return "type_mismatch";
    case ExitStatus::unknown_element: return "unknown_element";
    case ExitStatus::internal: return "internal";
  }
  return "internal";
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  if (const char* env = std::getenv("SPECAT_SEED"); env && *env) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw ParseError(std::string("SPECAT_SEED='") + env + "' is not an unsigned integer");
  }
  return 0;
}

Report run_job(const JobConfig& cfg) {
  Report report;
  auto& body = report.body;
  body["schema"] = kReportSchema;
  body["job"] = {{"command", cfg.command}, {"inputs", cfg.inputs}, {"instance", cfg.instance}};
  const auto start = std::chrono::steady_clock::now();
  try {
    Tolerance tol;
    if (cfg.tol_abs) tol.abs = *cfg.tol_abs;
    if (cfg.tol_rel) tol.rel = *cfg.tol_rel;
    if (!(tol.abs >= 0.0) || !(tol.rel >= 0.0)) throw ParseError("tolerances must be non-negative");
    body["job"]["tol_abs"] = tol.abs;
    body["job"]["tol_rel"] = tol.rel;
    const bool sampled = cfg.command == "laws" || cfg.command == "functor";
    if (sampled) {
      body["job"]["trials"] = cfg.trials.value_or(cfg.command == "laws" ? 100 : 50);
      body["job"]["seed"] = resolve_seed(cfg.seed);
    }
    if (!cfg.hom.empty()) body["job"]["hom"] = cfg.hom;
    if (!cfg.partition.empty()) body["job"]["partition"] = cfg.partition;
    body["status"] = nullptr;
    body["exit_code"] = nullptr;

    Context ctx{cfg, body, {}, nullptr, tol};
    if (cfg.command == "verify")
      report.status = cmd_verify(ctx);
    else if (cfg.command == "separate")
      report.status = cmd_separate(ctx, report.dot);
    else if (cfg.command == "equitable")
      report.status = cmd_equitable(ctx, report.dot);
    else if (cfg.command == "laws")
      report.status = cmd_laws(ctx);
    else if (cfg.command == "functor")
      report.status = cmd_functor(ctx);
    else
      throw ParseError("unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    report.status = exit_status_for(e.kind());
    report.dot.clear();
    body["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
  } catch (const nlohmann::json::exception& e) {
    report.status = ExitStatus::input_error;
    report.dot.clear();
    body["error"] = {{"kind", "parse"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    report.status = ExitStatus::internal;
    report.dot.clear();
    body["error"] = {{"kind", "internal"}, {"message", e.what()}};
  }
  body["status"] = exit_status_name(report.status);
  body["exit_code"] = static_cast<int>(report.status);
  if (cfg.timing) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    body["timing"] = {{"elapsed_ms", elapsed.count()}};
  }
  return report;
}

namespace {

void render_verdicts(std::ostringstream& os, const Json& verdicts) {
  for (const auto& v : verdicts) {
    os << (v["passed"].get<bool>() ? "  PASS  " : "  FAIL  ") << v["law"].get<std::string>()
       << "  checks=" << v["checks"].dump() << " max_residual=" << v["max_residual"].dump() << '\n';
    if (v.contains("counterexample"))
      for (const auto& line : v["counterexample"]) os << "          " << line.get<std::string>() << '\n';
  }
}

}  // namespace

std::string render_report(const Report& report, std::string_view format) {
  if (format == "json") return report.body.dump(2) + "\n";
  if (format == "dot") {
    if (report.dot.empty())
      throw PreconditionError("dot export is available for successful separate and equitable jobs only");
    return report.dot;
  }
  if (format != "text") throw ParseError("unknown format '" + std::string(format) + "' (expected json, text or dot)");

  const auto& b = report.body;
  std::ostringstream os;
  os << "specat " << b["job"]["command"].get<std::string>() << ": " << b["status"].get<std::string>()
     << " (exit " << b["exit_code"].dump() << ")\n";
  if (b.contains("error")) os << "error: " << b["error"]["message"].get<std::string>() << '\n';
  for (const char* key : {"partition", "lambda_1", "image_support"})
    if (b.contains(key)) os << key << ": " << b[key].dump() << '\n';
  if (b.contains("verdicts")) {
    os << "verdicts:\n";
    render_verdicts(os, b["verdicts"]);
  }
  if (b.contains("functor_verdicts")) {
    os << "functor verdicts:\n";
    render_verdicts(os, b["functor_verdicts"]);
  }
  return os.str();
}

}  // namespace specat
