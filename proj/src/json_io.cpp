#include "berge/json_io.hpp"

namespace berge {

json to_json(VertexSet s) { return s.members(); }

json to_json(const VertexPair& p) { return json::array({p.u, p.v}); }

json to_json(const BergeCertificate& c) {
  json edges = json::array();
  for (VertexSet e : c.edges) edges.push_back(to_json(e));
  return {{"kind", c.kind == CertificateKind::cycle ? "cycle" : "path"},
          {"vertices", c.vertices},
          {"edges", edges}};
}

json to_json(const ClassWitness& w) {
  json j = {{"class", to_string(w.cls)}, {"V1", to_json(w.v1)}, {"V2", to_json(w.v2)}, {"k", w.k}};
  j["x0"] = w.x0 ? json(*w.x0) : json(nullptr);
  j["e0"] = w.e0 ? to_json(*w.e0) : json(nullptr);
  return j;
}

json to_json(const SwapPlan& plan) {
  json removed = json::array(), added = json::array();
  for (const auto& p : plan.removed) removed.push_back(to_json(p));
  for (const auto& p : plan.added) added.push_back(to_json(p));
  return {{"removed", removed}, {"added", added}};
}

json to_json(const MatchingMap& phi) {
  json out = json::array();
  for (const auto& e : phi.entries()) out.push_back({{"edge", to_json(e.edge)}, {"pair", to_json(e.pair)}});
  return out;
}

json to_json(const PipelineTrace& trace) {
  json g = json::array();
  for (const auto& p : trace.g.edges()) g.push_back(to_json(p));
  json j = {{"branch", to_string(trace.branch)},
            {"matching", to_json(trace.matching)},
            {"G", g},
            {"certificate", to_json(trace.lifted_cycle)}};
  j["witness"] = trace.witness ? to_json(*trace.witness) : json(nullptr);
  j["plan"] = trace.plan ? to_json(*trace.plan) : json(nullptr);
  return j;
}

json to_json(const DegreeCertificate& cert) {
  json varphi = json::array();
  for (const auto& e : cert.varphi) varphi.push_back({{"edge", to_json(e.edge)}, {"image", to_json(e.image)}});
  json j = {{"k", cert.k},
            {"path", to_json(cert.path)},
            {"W", to_json(cert.w)},
            {"varphi", varphi},
            {"degree_v1", cert.degree_v1},
            {"v1_in_excluded", cert.v1_in_excluded}};
  j["excluded"] = cert.excluded ? to_json(*cert.excluded) : json(nullptr);
  return j;
}

json to_json(const ObstructionCert& cert) {
  json j = {{"kind", to_string(cert.kind)}};
  switch (cert.kind) {
    case ObstructionKind::cut_vertex: j["vertex"] = cert.vertex ? json(*cert.vertex) : json(nullptr); break;
    case ObstructionKind::cut_edge: j["edge"] = cert.edge ? to_json(*cert.edge) : json(nullptr); break;
    case ObstructionKind::cross_pair_scarcity:
      j["set"] = to_json(cert.set);
      j["bound"] = cert.bound;
      break;
    case ObstructionKind::component_size:
    case ObstructionKind::shadow_block_structure: j["bound"] = cert.bound; break;
  }
  return j;
}

json to_json(const VerifyReport& r) {
  json params = {{"n", r.params.n}};
  if (r.params.k) params["k"] = r.params.k;
  if (r.params.d) params["d"] = *r.params.d;
  if (r.params.r) params["r"] = *r.params.r;
  json j = {{"theorem", to_string(r.theorem)},
            {"parameters", params},
            {"mode", to_string(r.params.mode)},
            {"reduction", r.reduction},
            {"instances_scanned", r.instances_scanned},
            {"instances_checked", r.instances_checked},
            {"passed", r.passed()}};
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  j["seed"] = r.params.mode == VerifyMode::random ? json(r.params.seed) : json(nullptr);
  if (r.params.mode == VerifyMode::random) {
    j["trials"] = r.params.trials;
    j["p"] = r.params.p;
  }
  if (r.bound) j["bound"] = *r.bound;
  if (r.extremum) {
    j["extremum"] = *r.extremum;
    j["attained"] = r.attained;
  }
  return j;
}

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::parse, what); }

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

VertexSet set_from(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  VertexSet s;
  for (const auto& v : j) {
    int x = as_int(v, what);
    if (x < 0 || x >= kMaxVertices) bad(std::string(what) + " has an out-of-range vertex");
    if (s.contains(x)) bad(std::string(what) + " repeats a vertex");
    s = s.with(x);
  }
  return s;
}

VertexPair pair_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) bad(std::string(what) + " must be a pair");
  int a = as_int(j[0], what), b = as_int(j[1], what);
  if (a < 0 || b < 0 || a >= kMaxVertices || b >= kMaxVertices || a == b)
    bad(std::string(what) + " must be two distinct vertices");
  return VertexPair(a, b);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

BergeCertificate certificate_from_json(const json& j) {
  BergeCertificate c;
  const json& kind = field(j, "kind");
  if (kind == "cycle") c.kind = CertificateKind::cycle;
  else if (kind == "path") c.kind = CertificateKind::path;
  else bad("kind must be \"cycle\" or \"path\"");
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("vertices must be an array");
  for (const auto& v : vs) c.vertices.push_back(as_int(v, "vertices"));
  const json& es = field(j, "edges");
  if (!es.is_array()) bad("edges must be an array");
  for (const auto& e : es) c.edges.push_back(set_from(e, "edge"));
  return c;
}

ClassWitness witness_from_json(const json& j) {
  ClassWitness w;
  const json& cls = field(j, "class");
  if (!cls.is_string()) bad("class must be a string");
  auto parsed = graph_class_from_string(cls.get<std::string>());
  if (!parsed) bad("unknown class");
  w.cls = *parsed;
  w.v1 = set_from(field(j, "V1"), "V1");
  w.v2 = set_from(field(j, "V2"), "V2");
  w.k = as_int(field(j, "k"), "k");
  if (j.contains("x0") && !j.at("x0").is_null()) w.x0 = as_int(j.at("x0"), "x0");
  if (j.contains("e0") && !j.at("e0").is_null()) w.e0 = pair_from(j.at("e0"), "e0");
  return w;
}

SwapPlan swap_plan_from_json(const json& j) {
  SwapPlan plan;
  for (const auto& p : field(j, "removed")) plan.removed.push_back(pair_from(p, "removed"));
  for (const auto& p : field(j, "added")) plan.added.push_back(pair_from(p, "added"));
  return plan;
}

}  // namespace berge
