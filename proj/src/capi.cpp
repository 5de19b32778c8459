#include "berge/berge_c.h"

#include <cstring>

#include "berge/berge_oracle.hpp"
#include "berge/bounds.hpp"
#include "berge/json_io.hpp"

struct berge_hypergraph {
  berge::Hypergraph h;
};

struct berge_graph {
  berge::Graph g;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

berge_status map(berge::ErrorCode code) {
  using berge::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return BERGE_ERR_PARSE;
    case ErrorCode::invalid_vertex: return BERGE_ERR_INVALID_VERTEX;
    case ErrorCode::invalid_argument: return BERGE_ERR_INVALID_ARGUMENT;
    case ErrorCode::precondition: return BERGE_ERR_PRECONDITION;
    case ErrorCode::guardrail: return BERGE_ERR_GUARDRAIL;
    case ErrorCode::theorem_violation: return BERGE_ERR_THEOREM_VIOLATION;
  }
  return BERGE_ERR_INTERNAL;
}

template <class F>
berge_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const berge::Error& e) {
    last_error = e.what();
    return map(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("json: ") + e.what();
    return BERGE_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BERGE_ERR_INTERNAL;
  }
}

berge_status null_arg() {
  last_error = "null argument";
  return BERGE_ERR_INVALID_ARGUMENT;
}

berge::json parse_json(const char* text) {
  if (!text || !*text) return berge::json::object();
  try {
    return berge::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    berge::fail(berge::ErrorCode::parse, std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
std::optional<T> opt(const berge::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

extern "C" {

const char* berge_version(void) { return "1.0.0"; }

const char* berge_last_error(void) { return last_error.c_str(); }

const char* berge_status_name(berge_status status) {
  switch (status) {
    case BERGE_OK: return "ok";
    case BERGE_NOT_FOUND: return "not found";
    case BERGE_ERR_PARSE: return "parse error";
    case BERGE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BERGE_ERR_INVALID_VERTEX: return "invalid vertex";
    case BERGE_ERR_PRECONDITION: return "precondition violated";
    case BERGE_ERR_GUARDRAIL: return "guardrail";
    case BERGE_ERR_THEOREM_VIOLATION: return "theorem violation";
    case BERGE_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void berge_string_free(char* s) { std::free(s); }

berge_status berge_hypergraph_parse(const char* text, berge_hypergraph** out) {
  if (!text || !out) return null_arg();
  return guarded([&] {
    *out = new berge_hypergraph{berge::parse_hypergraph(text)};
    return BERGE_OK;
  });
}

berge_status berge_hypergraph_serialize(const berge_hypergraph* h, char** out) {
  if (!h || !out) return null_arg();
  return guarded([&] {
    *out = dup(berge::serialize_hypergraph(h->h));
    return BERGE_OK;
  });
}

void berge_hypergraph_free(berge_hypergraph* h) { delete h; }

int berge_hypergraph_vertex_count(const berge_hypergraph* h) { return h ? h->h.vertex_count() : 0; }

size_t berge_hypergraph_edge_count(const berge_hypergraph* h) { return h ? h->h.edge_count() : 0; }

berge_status berge_hypergraph_degree(const berge_hypergraph* h, int v, size_t* out) {
  if (!h || !out) return null_arg();
  return guarded([&] {
    *out = berge::degree(h->h, v);
    return BERGE_OK;
  });
}

size_t berge_hypergraph_min_degree(const berge_hypergraph* h) { return h ? berge::min_degree(h->h) : 0; }

berge_status berge_shadow(const berge_hypergraph* h, berge_graph** out) {
  if (!h || !out) return null_arg();
  return guarded([&] {
    *out = new berge_graph{berge::shadow2(h->h)};
    return BERGE_OK;
  });
}

berge_status berge_graph_parse(const char* text, berge_graph** out) {
  if (!text || !out) return null_arg();
  return guarded([&] {
    *out = new berge_graph{berge::parse_graph(text)};
    return BERGE_OK;
  });
}

berge_status berge_graph_serialize(const berge_graph* g, char** out) {
  if (!g || !out) return null_arg();
  return guarded([&] {
    *out = dup(berge::serialize_graph(g->g));
    return BERGE_OK;
  });
}

void berge_graph_free(berge_graph* g) { delete g; }

int berge_graph_vertex_count(const berge_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t berge_graph_edge_count(const berge_graph* g) { return g ? g->g.edge_count() : 0; }

berge_status berge_graph_hamiltonian(const berge_graph* g, char** cycle_json) {
  if (!g || !cycle_json) return null_arg();
  return guarded([&] {
    auto cycle = berge::hamiltonian_cycle(g->g);
    if (!cycle) return BERGE_NOT_FOUND;
    *cycle_json = dup(berge::json(*cycle).dump());
    return BERGE_OK;
  });
}

berge_status berge_oracle(const berge_hypergraph* h, berge_oracle_kind kind, int allow_large,
                          char** certificate_json) {
  if (!h || !certificate_json) return null_arg();
  return guarded([&] {
    berge::OracleOptions opts{allow_large != 0};
    std::optional<berge::BergeCertificate> cert;
    switch (kind) {
      case BERGE_ORACLE_CYCLE: cert = berge::longest_berge_cycle(h->h, opts); break;
      case BERGE_ORACLE_PATH: cert = berge::longest_berge_path(h->h, opts); break;
      case BERGE_ORACLE_BEST_PATH: cert = berge::best_berge_path(h->h, opts); break;
      case BERGE_ORACLE_HAMILTONIAN: cert = berge::hamiltonian_berge_cycle(h->h, opts); break;
      default: berge::fail(berge::ErrorCode::invalid_argument, "unknown oracle kind");
    }
    if (!cert) return BERGE_NOT_FOUND;
    *certificate_json = dup(berge::to_json(*cert).dump());
    return BERGE_OK;
  });
}

berge_status berge_check_certificate(const berge_hypergraph* h, const char* certificate_json,
                                     char** result_json) {
  if (!h || !certificate_json || !result_json) return null_arg();
  return guarded([&] {
    berge::json j = parse_json(certificate_json);
    if (j.is_object() && j.contains("certificate")) j = j.at("certificate");
    berge::BergeCertificate cert = berge::certificate_from_json(j);
    berge::CertificateCheck check = berge::verify_certificate(h->h, cert);
    berge::json out = {{"accepted", check.accepted()},
                       {"fault", berge::to_string(check.fault)},
                       {"position", check.position},
                       {"kind", cert.kind == berge::CertificateKind::cycle ? "cycle" : "path"},
                       {"length", cert.length()},
                       {"vertices", cert.vertices.size()}};
    *result_json = dup(out.dump());
    return BERGE_OK;
  });
}

berge_status berge_generate(const char* family, int n, int k, int variant, berge_hypergraph** out,
                            char** sidecar_json) {
  if (!family || !out) return null_arg();
  return guarded([&] {
    const std::string f = family;
    berge::Construction c;
    berge::json claims;
    if (f == "dirac-sharp") {
      c = berge::dirac_sharpness(n, variant);
      std::uint64_t d = (n % 2 == 1) ? (1ULL << ((n - 1) / 2)) : (1ULL << (n / 2 - 1)) + 1;
      claims = {{"min_degree", d}, {"hamiltonian_berge_cycle", false}};
    } else if (f == "path-sharp") {
      c = berge::path_sharpness(n, k);
      claims = {{"min_degree", 1ULL << (k - 2)}, {"max_base_vertices", k - 1}};
    } else if (f == "cycle-sharp") {
      c = berge::cycle_sharpness(n, k, variant);
      claims = {{"min_degree", (1ULL << (k - 2)) + 1}, {"max_cycle_length_below", k}};
    } else if (f == "eg-sharp") {
      c = berge::eg_sharpness(n, k);
      claims = {{"edge_count", berge::eg_hypergraph_bound(n, k).to_string()},
                {"downset", true},
                {"max_cycle_length_below", k}};
    } else {
      berge::fail(berge::ErrorCode::invalid_argument, "unknown family " + f);
    }
    berge::json side = {{"family", f},
                        {"n", n},
                        {"vertex_count", c.h.vertex_count()},
                        {"edge_count", c.h.edge_count()},
                        {"min_degree", berge::min_degree(c.h)},
                        {"downset", berge::is_downset(c.h)},
                        {"claims", claims}};
    if (f != "dirac-sharp") side["k"] = k;
    if (f == "dirac-sharp" || f == "cycle-sharp") side["variant"] = variant;
    if (c.obstruction) {
      side["obstruction"] = berge::to_json(*c.obstruction);
      side["obstruction_holds"] = berge::check_obstruction(c.h, *c.obstruction).empty();
    }
    *out = new berge_hypergraph{std::move(c.h)};
    if (sidecar_json) *sidecar_json = dup(side.dump(2));
    return BERGE_OK;
  });
}

berge_status berge_generate_fnk(int n, int k, const char* shape, berge_graph** out, char** sidecar_json) {
  if (!out) return null_arg();
  return guarded([&] {
    std::string s = shape ? shape : "path";
    berge::BlockShape bs;
    if (s == "path") bs = berge::BlockShape::path;
    else if (s == "star") bs = berge::BlockShape::star;
    else berge::fail(berge::ErrorCode::invalid_argument, "shape must be path or star");
    berge::Graph g = berge::fnk(n, k, bs);
    berge::json cliques = berge::json::object();
    for (int r = 2; r <= k - 1; ++r)
      cliques[std::to_string(r)] = berge::luo_bound(n, k, r).to_string();
    berge::json side = {{"family", "fnk"},
                        {"n", n},
                        {"k", k},
                        {"shape", s},
                        {"edge_count", g.edge_count()},
                        {"claims",
                         {{"edge_count", berge::eg_graph_bound(n, k).to_string()},
                          {"circumference", k - 1},
                          {"clique_counts", cliques}}}};
    *out = new berge_graph{std::move(g)};
    if (sidecar_json) *sidecar_json = dup(side.dump(2));
    return BERGE_OK;
  });
}

berge_status berge_pipeline(const berge_hypergraph* h, const char* options_json, char** trace_json) {
  if (!h || !trace_json) return null_arg();
  return guarded([&] {
    berge::json j = parse_json(options_json);
    berge::PipelineOptions opts;
    opts.allow_small = opt<bool>(j, "allow_small").value_or(false);
    opts.choice_seed = opt<std::uint64_t>(j, "choice_seed");
    berge::PipelineTrace trace = berge::constructive_hamiltonian_berge_cycle(h->h, opts);
    *trace_json = dup(berge::to_json(trace).dump());
    return BERGE_OK;
  });
}

berge_status berge_degree_certificate(const berge_hypergraph* h, int k, char** result_json) {
  if (!h || !result_json) return null_arg();
  return guarded([&] {
    berge::DegreeCertificateOutcome res = berge::best_path_degree_certificate(h->h, k);
    berge::json out = berge::json::object();
    if (res.certificate) out["certificate"] = berge::to_json(*res.certificate);
    if (res.long_cycle) out["long_cycle"] = berge::to_json(*res.long_cycle);
    *result_json = dup(out.dump());
    return BERGE_OK;
  });
}

berge_status berge_classify(const berge_graph* g, int k, int report_all, int g3_second_side,
                            char** result_json) {
  if (!g || !result_json) return null_arg();
  return guarded([&] {
    if (k <= 0) k = (g->g.vertex_count() - 1) / 2;
    auto scope = g3_second_side ? berge::DegreeScope::second_side : berge::DegreeScope::whole_graph;
    berge::ClassifyResult res = berge::classify_dense_nonhamiltonian(g->g, k, report_all != 0, scope);
    if (!res.applicable()) berge::fail(berge::ErrorCode::precondition, res.not_applicable);
    berge::json ws = berge::json::array();
    for (const auto& w : res.witnesses) ws.push_back(berge::to_json(w));
    *result_json = dup(berge::json{{"k", k}, {"witnesses", ws}}.dump());
    return res.classified() ? BERGE_OK : BERGE_NOT_FOUND;
  });
}

berge_status berge_apply_swap(const berge_graph* g, const char* witness_json, const char* plan_json,
                              berge_graph** out, char** result_json) {
  if (!g || !witness_json || !plan_json) return null_arg();
  return guarded([&] {
    berge::ClassWitness w = berge::witness_from_json(parse_json(witness_json));
    berge::SwapPlan plan = berge::swap_plan_from_json(parse_json(plan_json));
    berge::SwapResult res = berge::apply_swap(g->g, w, plan);
    if (result_json) {
      berge::json j = {{"guarantee", res.guarantee == berge::SwapGuarantee::hamiltonian ? "hamiltonian"
                                                                                      : "exceptional"},
                       {"hamiltonian", berge::is_hamiltonian(res.graph)}};
      *result_json = dup(j.dump());
    }
    if (out) *out = new berge_graph{std::move(res.graph)};
    return BERGE_OK;
  });
}

berge_status berge_verify(const char* theorem, const char* params_json, char** report_json) {
  if (!theorem || !report_json) return null_arg();
  return guarded([&] {
    auto id = berge::theorem_from_string(theorem);
    if (!id) berge::fail(berge::ErrorCode::invalid_argument, std::string("unknown theorem ") + theorem);
    berge::json j = parse_json(params_json);
    berge::VerifyParams p;
    p.n = opt<int>(j, "n").value_or(0);
    p.k = opt<int>(j, "k").value_or(0);
    p.d = opt<int>(j, "d");
    p.r = opt<int>(j, "r");
    std::string mode = opt<std::string>(j, "mode").value_or("exhaustive");
    if (mode == "exhaustive") p.mode = berge::VerifyMode::exhaustive;
    else if (mode == "random") p.mode = berge::VerifyMode::random;
    else berge::fail(berge::ErrorCode::invalid_argument, "mode must be exhaustive or random");
    p.trials = opt<std::uint64_t>(j, "trials").value_or(p.trials);
    p.seed = opt<std::uint64_t>(j, "seed").value_or(p.seed);
    p.p = opt<double>(j, "p").value_or(p.p);
    p.jobs = opt<int>(j, "jobs").value_or(1);
    p.allow_large = opt<bool>(j, "allow_large").value_or(false);
    berge::VerifyReport report = berge::verify_theorem(*id, p);
    *report_json = dup(berge::to_json(report).dump());
    return BERGE_OK;
  });
}

berge_status berge_bounds(const char* params_json, char** result_json) {
  if (!result_json) return null_arg();
  return guarded([&] {
    berge::json j = parse_json(params_json);
    auto n = opt<int>(j, "n");
    if (!n) berge::fail(berge::ErrorCode::invalid_argument, "n is required");
    auto d = opt<int>(j, "d");
    auto k = opt<int>(j, "k");
    auto r = opt<int>(j, "r");
    berge::json out = {{"n", *n}};
    if (d) {
      out["d"] = *d;
      out["erdos_h"] = berge::erdos_h(*n, *d);
      out["erdos_e"] = berge::erdos_bound(*n, *d);
      out["degree_count_rhs"] = berge::degree_count_rhs(*n, *d);
      const int kk = (*n - 1) / 2;
      if (kk < 62) out["dirac_lower"] = (std::int64_t{1} << kk) + 1;
    }
    if (k) {
      out["k"] = *k;
      out["eg_hypergraph"] = berge::eg_hypergraph_bound(*n, *k).to_string();
      out["eg_graph"] = berge::eg_graph_bound(*n, *k).to_string();
      if (r) {
        out["r"] = *r;
        out["luo"] = berge::luo_bound(*n, *k, *r).to_string();
      }
    }
    *result_json = dup(out.dump());
    return BERGE_OK;
  });
}

}  // extern "C"
