#include "specat/specat.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "specat/jobs.hpp"

struct specat_lattice {
  specat::AlgebraPtr algebra;
};
struct specat_relation {
  specat::LRelation value;
};
struct specat_matrix {
  specat::ScalarMatrix<specat::RealDomain> value;
};
struct specat_job {
  specat::JobConfig config;
};
struct specat_report {
  specat::Report value;
};

namespace {

thread_local std::string last_error;

class InvalidArgument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Fn>
specat_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return SPECAT_OK;
  } catch (const specat::Error& e) {
    last_error = e.what();
    return static_cast<specat_status>(specat::exit_status_for(e.kind()));
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return SPECAT_INVALID_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return SPECAT_INPUT_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPECAT_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPECAT_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return SPECAT_INTERNAL;
  }
}

template <class T>
const T& need(const T* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " is NULL");
  return *p;
}

template <class T>
T** need_out(T** out) {
  if (!out) throw InvalidArgument("output pointer is NULL");
  *out = nullptr;
  return out;
}

const char* need_str(const char* s, const char* what) {
  if (!s) throw InvalidArgument(std::string(what) + " is NULL");
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

specat::HeytingTable::Element element(const specat_lattice& l, std::size_t i) {
  if (i >= l.algebra->size())
    throw InvalidArgument("element index " + std::to_string(i) + " outside lattice of size " +
                          std::to_string(l.algebra->size()));
  return static_cast<specat::HeytingTable::Element>(i);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || p != value.data() + value.size())
    throw InvalidArgument("option '" + key + "': '" + value + "' is not a valid number");
  return out;
}

double parse_tolerance(const std::string& key, const std::string& value) {
  const double t = parse_number<double>(key, value);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("option '" + key + "': tolerance must be >= 0");
  return t;
}

template <class Op>
specat_status lattice_op(const specat_lattice* lattice, size_t a, size_t b, size_t* out, Op op) {
  return guarded([&] {
    const auto& l = need(lattice, "lattice");
    if (!out) throw InvalidArgument("output pointer is NULL");
    *out = op(*l.algebra, element(l, a), element(l, b));
  });
}

}  // namespace

extern "C" {

const char* specat_version(void) { return "0.1.0"; }

const char* specat_status_name(specat_status status) {
  switch (status) {
    case SPECAT_OK: return "ok";
    case SPECAT_VERIFY_FAILED: return "verification_failed";
    case SPECAT_INPUT_ERROR: return "input_error";
    case SPECAT_PRECONDITION: return "precondition";
    case SPECAT_TYPE_MISMATCH: return "type_mismatch";
    case SPECAT_UNKNOWN_ELEMENT: return "unknown_element";
    case SPECAT_INVALID_ARGUMENT: return "invalid_argument";
    case SPECAT_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* specat_last_error(void) { return last_error.c_str(); }

void specat_string_free(char* s) { std::free(s); }

// ---- lattices ----

specat_status specat_lattice_open(const char* spec, specat_lattice** out) {
  return guarded([&] {
    need_out(out);
    *out = new specat_lattice{specat::io::resolve_lattice(need_str(spec, "spec"))};
  });
}

specat_status specat_lattice_from_json(const char* json, specat_lattice** out) {
  return guarded([&] {
    need_out(out);
    const auto j = specat::io::parse_json(need_str(json, "json"), "lattice");
    *out = new specat_lattice{specat::share(specat::io::lattice_from_json(j))};
  });
}

void specat_lattice_free(specat_lattice* lattice) { delete lattice; }

size_t specat_lattice_size(const specat_lattice* lattice) { return lattice ? lattice->algebra->size() : 0; }

specat_status specat_lattice_label(const specat_lattice* lattice, size_t index, const char** label) {
  return guarded([&] {
    const auto& l = need(lattice, "lattice");
    if (!label) throw InvalidArgument("output pointer is NULL");
    *label = l.algebra->label(element(l, index)).c_str();
  });
}

specat_status specat_lattice_index(const specat_lattice* lattice, const char* label, size_t* index) {
  return guarded([&] {
    const auto& l = need(lattice, "lattice");
    if (!index) throw InvalidArgument("output pointer is NULL");
    *index = l.algebra->index_of(need_str(label, "label"));
  });
}

specat_status specat_lattice_meet(const specat_lattice* lattice, size_t a, size_t b, size_t* out) {
  return lattice_op(lattice, a, b, out, [](const auto& t, auto x, auto y) { return t.meet(x, y); });
}

specat_status specat_lattice_join(const specat_lattice* lattice, size_t a, size_t b, size_t* out) {
  return lattice_op(lattice, a, b, out, [](const auto& t, auto x, auto y) { return t.join(x, y); });
}

specat_status specat_lattice_implies(const specat_lattice* lattice, size_t a, size_t b, size_t* out) {
  return lattice_op(lattice, a, b, out, [](const auto& t, auto x, auto y) { return t.implies(x, y); });
}

// ---- relations ----

specat_status specat_relation_from_json(const specat_lattice* lattice, const char* json, specat_relation** out) {
  return guarded([&] {
    const auto& l = need(lattice, "lattice");
    need_out(out);
    const auto j = specat::io::parse_json(need_str(json, "json"), "relation");
    *out = new specat_relation{specat::io::relation_from_json(j, l.algebra)};
  });
}

specat_status specat_relation_to_json(const specat_relation* f, char** json) {
  return guarded([&] {
    const auto& r = need(f, "relation");
    need_out(json);
    *json = dup(specat::io::relation_to_json(r.value).dump());
  });
}

void specat_relation_free(specat_relation* f) { delete f; }

specat_status specat_relation_shape(const specat_relation* f, size_t* target_size, size_t* source_size) {
  return guarded([&] {
    const auto& r = need(f, "relation");
    if (!target_size || !source_size) throw InvalidArgument("output pointer is NULL");
    *target_size = r.value.target().size();
    *source_size = r.value.source().size();
  });
}

specat_status specat_relation_compose(const specat_relation* g, const specat_relation* f, specat_relation** out) {
  return guarded([&] {
    const auto& gg = need(g, "g");
    const auto& ff = need(f, "f");
    need_out(out);
    *out = new specat_relation{specat::RelCategory(ff.value.algebra()).compose(gg.value, ff.value)};
  });
}

specat_status specat_relation_join(const specat_relation* a, const specat_relation* b, specat_relation** out) {
  return guarded([&] {
    const auto& aa = need(a, "a");
    const auto& bb = need(b, "b");
    need_out(out);
    *out = new specat_relation{specat::RelCategory(aa.value.algebra()).add(aa.value, bb.value)};
  });
}

specat_status specat_relation_converse(const specat_relation* f, specat_relation** out) {
  return guarded([&] {
    const auto& ff = need(f, "f");
    need_out(out);
    *out = new specat_relation{specat::lrel_converse(ff.value)};
  });
}

int specat_relation_equal(const specat_relation* a, const specat_relation* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

// ---- matrices ----

specat_status specat_matrix_create(size_t rows, size_t cols, const double* row_major, specat_matrix** out) {
  return guarded([&] {
    need_out(out);
    if (!row_major && rows * cols != 0) throw InvalidArgument("entries are NULL");
    std::vector<double> data(row_major, row_major + rows * cols);
    *out = new specat_matrix{specat::ScalarMatrix<specat::RealDomain>(rows, cols, std::move(data))};
  });
}

specat_status specat_matrix_from_csv(const char* csv, specat_matrix** out) {
  return guarded([&] {
    need_out(out);
    *out = new specat_matrix{specat::io::matrix_from_csv<specat::RealDomain>(need_str(csv, "csv"))};
  });
}

specat_status specat_matrix_to_csv(const specat_matrix* m, char** csv) {
  return guarded([&] {
    const auto& mm = need(m, "matrix");
    need_out(csv);
    *csv = dup(specat::io::matrix_to_csv(mm.value));
  });
}

void specat_matrix_free(specat_matrix* m) { delete m; }

size_t specat_matrix_rows(const specat_matrix* m) { return m ? m->value.rows() : 0; }

size_t specat_matrix_cols(const specat_matrix* m) { return m ? m->value.cols() : 0; }

specat_status specat_matrix_get(const specat_matrix* m, size_t row, size_t col, double* value) {
  return guarded([&] {
    const auto& mm = need(m, "matrix");
    if (!value) throw InvalidArgument("output pointer is NULL");
    if (row >= mm.value.rows() || col >= mm.value.cols())
      throw InvalidArgument("index (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
    *value = mm.value(row, col);
  });
}

specat_status specat_matrix_compose(const specat_matrix* g, const specat_matrix* f, specat_matrix** out) {
  return guarded([&] {
    const auto& gg = need(g, "g");
    const auto& ff = need(f, "f");
    need_out(out);
    *out = new specat_matrix{specat::MatR{}.compose(gg.value, ff.value)};
  });
}

specat_status specat_matrix_add(const specat_matrix* a, const specat_matrix* b, specat_matrix** out) {
  return guarded([&] {
    const auto& aa = need(a, "a");
    const auto& bb = need(b, "b");
    need_out(out);
    *out = new specat_matrix{specat::MatR{}.add(aa.value, bb.value)};
  });
}

// ---- jobs ----

specat_status specat_job_create(const char* command, specat_job** out) {
  return guarded([&] {
    need_out(out);
    const std::string c = need_str(command, "command");
    if (c != "verify" && c != "separate" && c != "equitable" && c != "laws" && c != "functor")
      throw InvalidArgument("unknown command '" + c + "'");
    auto* job = new specat_job{};
    job->config.command = c;
    *out = job;
  });
}

void specat_job_free(specat_job* job) { delete job; }

specat_status specat_job_add_input(specat_job* job, const char* path) {
  return guarded([&] {
    if (!job) throw InvalidArgument("job is NULL");
    job->config.inputs.emplace_back(need_str(path, "path"));
  });
}

specat_status specat_job_set_option(specat_job* job, const char* key, const char* value) {
  return guarded([&] {
    if (!job) throw InvalidArgument("job is NULL");
    const std::string k = need_str(key, "key");
    const std::string v = need_str(value, "value");
    auto& c = job->config;
    if (k == "instance")
      c.instance = v;
    else if (k == "lattice")
      c.lattice = v;
    else if (k == "tol-abs")
      c.tol_abs = parse_tolerance(k, v);
    else if (k == "tol-rel")
      c.tol_rel = parse_tolerance(k, v);
    else if (k == "trials")
      c.trials = parse_number<std::size_t>(k, v);
    else if (k == "seed")
      c.seed = parse_number<std::uint64_t>(k, v);
    else if (k == "partition")
      c.partition = v;
    else if (k == "hom")
      c.hom = v;
    else if (k == "max-dim")
      c.max_dim = parse_number<std::size_t>(k, v);
    else if (k == "max-carrier")
      c.max_carrier = parse_number<std::size_t>(k, v);
    else if (k == "timing")
      c.timing = v == "1" || v == "true";
    else
      throw InvalidArgument("unknown option '" + k + "'");
  });
}

specat_status specat_job_run(const specat_job* job, specat_report** out) {
  return guarded([&] {
    const auto& j = need(job, "job");
    need_out(out);
    *out = new specat_report{specat::run_job(j.config)};
  });
}

void specat_report_free(specat_report* report) { delete report; }

int specat_report_exit_code(const specat_report* report) {
  return report ? static_cast<int>(report->value.status) : SPECAT_INVALID_ARGUMENT;
}

specat_status specat_report_render(const specat_report* report, const char* format, char** out) {
  return guarded([&] {
    const auto& r = need(report, "report");
    need_out(out);
    *out = dup(specat::render_report(r.value, need_str(format, "format")));
  });
}

}  // extern "C"
