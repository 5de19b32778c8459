// berge: command-line front end over the libberge C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "berge/berge_c.h"

using nlohmann::json;

namespace {

constexpr const char* kVersionLine = "berge 1.0.0 (interface revision 1)";

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(berge_status s) {
  switch (s) {
    case BERGE_OK: return 0;
    case BERGE_NOT_FOUND: return 3;
    case BERGE_ERR_PARSE:
    case BERGE_ERR_INVALID_ARGUMENT:
    case BERGE_ERR_INVALID_VERTEX:
    case BERGE_ERR_PRECONDITION:
    case BERGE_ERR_GUARDRAIL: return 2;
    default: return 1;
  }
}

void check(berge_status s) {
  if (s == BERGE_OK || s == BERGE_NOT_FOUND) return;
  throw Failure{exit_code_for(s), std::string(berge_status_name(s)) + ": " + berge_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  berge_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{2, "cannot write " + path};
  out << text;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

struct Hyper {
  berge_hypergraph* h = nullptr;
  explicit Hyper(const std::string& path) { check(berge_hypergraph_parse(read_file(path).c_str(), &h)); }
  Hyper() = default;
  ~Hyper() { berge_hypergraph_free(h); }
  Hyper(const Hyper&) = delete;
  Hyper& operator=(const Hyper&) = delete;
};

struct GraphHandle {
  berge_graph* g = nullptr;
  explicit GraphHandle(const std::string& path) { check(berge_graph_parse(read_file(path).c_str(), &g)); }
  GraphHandle() = default;
  ~GraphHandle() { berge_graph_free(g); }
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
};

std::string join(const json& arr, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].dump();
  }
  return out;
}

std::string set_text(const json& arr) { return "{" + join(arr, ",") + "}"; }

void print_certificate(const json& cert) {
  const auto& vs = cert.at("vertices");
  std::cout << "vertices: " << join(vs) << "\n";
  std::cout << "edges:";
  for (const auto& e : cert.at("edges")) std::cout << " " << set_text(e);
  std::cout << "\n";
}

// ---------------------------------------------------------------------------

struct GenArgs {
  int n = 0;
  int k = 0;
  int variant = 1;
  std::string shape = "path";
  std::string out;
};

int run_gen(const std::string& family, const GenArgs& a) {
  char* side = nullptr;
  std::string text;
  if (family == "fnk") {
    GraphHandle g;
    check(berge_generate_fnk(a.n, a.k, a.shape.c_str(), &g.g, &side));
    char* s = nullptr;
    check(berge_graph_serialize(g.g, &s));
    text = take(s);
  } else {
    Hyper h;
    check(berge_generate(family.c_str(), a.n, a.k, a.variant, &h.h, &side));
    char* s = nullptr;
    check(berge_hypergraph_serialize(h.h, &s));
    text = take(s);
  }
  std::string sidecar = take(side) + "\n";
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
    std::cerr << sidecar;
  } else {
    write_file(a.out, text);
    write_file(a.out + ".json", sidecar);
  }
  return 0;
}

int run_shadow(const std::string& path, const std::string& out) {
  Hyper h(path);
  GraphHandle g;
  check(berge_shadow(h.h, &g.g));
  char* s = nullptr;
  check(berge_graph_serialize(g.g, &s));
  emit(out, take(s));
  return 0;
}

int run_oracle(const std::string& kind_name, const std::string& path, bool as_json, bool allow_large,
               int degree_cert_k) {
  Hyper h(path);
  if (degree_cert_k > 0) {
    char* out = nullptr;
    check(berge_degree_certificate(h.h, degree_cert_k, &out));
    json j = json::parse(take(out));
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else if (j.contains("long_cycle")) {
      std::cout << "Berge cycle of length " << j["long_cycle"]["edges"].size() << " through v1\n";
      print_certificate(j["long_cycle"]);
    } else {
      const auto& c = j["certificate"];
      std::cout << "best path:\n";
      print_certificate(c["path"]);
      std::cout << "W: " << set_text(c["W"]) << "\n";
      std::cout << "deg(v1) = " << c["degree_v1"] << ", varphi entries = " << c["varphi"].size()
                << ", v1 in e_{k-1}: " << (c["v1_in_excluded"].get<bool>() ? "yes" : "no") << "\n";
    }
    return 0;
  }
  berge_oracle_kind kind;
  std::string label;
  if (kind_name == "cycle") kind = BERGE_ORACLE_CYCLE, label = "longest Berge cycle";
  else if (kind_name == "path") kind = BERGE_ORACLE_PATH, label = "longest Berge path";
  else if (kind_name == "best-path") kind = BERGE_ORACLE_BEST_PATH, label = "best Berge path";
  else kind = BERGE_ORACLE_HAMILTONIAN, label = "hamiltonian Berge cycle";
  char* out = nullptr;
  berge_status s = berge_oracle(h.h, kind, allow_large ? 1 : 0, &out);
  check(s);
  if (s == BERGE_NOT_FOUND) {
    if (as_json) std::cout << "null\n";
    else std::cout << (kind == BERGE_ORACLE_HAMILTONIAN ? "no hamiltonian Berge cycle\n" : "no Berge cycle\n");
    return 3;
  }
  json cert = json::parse(take(out));
  if (as_json) {
    std::cout << cert.dump() << "\n";
  } else {
    std::cout << label << " length " << cert["edges"].size() << "\n";
    print_certificate(cert);
  }
  return 0;
}

int run_pipeline(const std::string& path, bool as_json, bool trace, bool allow_small,
                 std::optional<std::uint64_t> seed) {
  Hyper h(path);
  json opts = {{"allow_small", allow_small}};
  if (seed) opts["choice_seed"] = *seed;
  char* out = nullptr;
  check(berge_pipeline(h.h, opts.dump().c_str(), &out));
  json t = json::parse(take(out));
  if (trace) {
    std::cout << t.dump(2) << "\n";
  } else if (as_json) {
    std::cout << t["certificate"].dump() << "\n";
  } else {
    std::cout << "branch: " << t["branch"].get<std::string>() << "\n";
    std::cout << "hamiltonian Berge cycle length " << t["certificate"]["edges"].size() << "\n";
    print_certificate(t["certificate"]);
  }
  return 0;
}

int run_classify(const std::string& path, int k, bool all, bool second_side, bool as_json) {
  GraphHandle g(path);
  char* out = nullptr;
  berge_status s = berge_classify(g.g, k, all ? 1 : 0, second_side ? 1 : 0, &out);
  check(s);
  json j = json::parse(take(out));
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else if (j["witnesses"].empty()) {
    std::cout << "unclassified\n";
  } else {
    for (const auto& w : j["witnesses"]) {
      std::cout << w["class"].get<std::string>() << " V1=" << set_text(w["V1"]) << " V2=" << set_text(w["V2"]);
      if (w.contains("x0")) std::cout << " x0=" << w["x0"];
      if (w.contains("e0")) std::cout << " e0=" << set_text(w["e0"]);
      std::cout << "\n";
    }
  }
  return s == BERGE_NOT_FOUND ? 3 : 0;
}

int run_swap(const std::string& path, const std::string& witness, const std::string& plan,
             const std::string& out_path) {
  GraphHandle g(path);
  std::string wtext = read_file(witness);
  json wj = json::parse(wtext, nullptr, false);
  if (!wj.is_discarded() && wj.is_object() && wj.contains("witnesses") && !wj["witnesses"].empty())
    wtext = wj["witnesses"][0].dump();
  GraphHandle out;
  char* res = nullptr;
  check(berge_apply_swap(g.g, wtext.c_str(), read_file(plan).c_str(), &out.g, &res));
  json r = json::parse(take(res));
  char* s = nullptr;
  check(berge_graph_serialize(out.g, &s));
  std::string text = take(s);
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);
  std::cerr << "guarantee: " << r["guarantee"].get<std::string>()
            << ", hamiltonian: " << (r["hamiltonian"].get<bool>() ? "yes" : "no") << "\n";
  return 0;
}

struct VerifyArgs {
  std::optional<int> n, k, d, r;
  std::string mode = "exhaustive";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  double p = 0.5;
  int jobs = 1;
  bool allow_large = false;
  bool as_json = false;
};

int run_verify(const std::string& theorem, const VerifyArgs& a) {
  json params = {{"mode", a.mode}, {"trials", a.trials}, {"seed", a.seed},
                 {"p", a.p},       {"jobs", a.jobs},     {"allow_large", a.allow_large}};
  if (a.n) params["n"] = *a.n;
  if (a.k) params["k"] = *a.k;
  if (a.d) params["d"] = *a.d;
  if (a.r) params["r"] = *a.r;
  char* out = nullptr;
  check(berge_verify(theorem.c_str(), params.dump().c_str(), &out));
  json rep = json::parse(take(out));
  if (a.as_json) {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << rep["theorem"].get<std::string>() << " " << rep["mode"].get<std::string>() << ": "
              << rep["instances_scanned"] << " scanned, " << rep["instances_checked"] << " checked\n";
    if (rep.contains("extremum"))
      std::cout << "extremum " << rep["extremum"] << " vs bound " << rep["bound"]
                << (rep["attained"].get<bool>() ? " (attained)" : "") << "\n";
    if (!rep["counterexample"].is_null())
      std::cout << "counterexample:\n" << rep["counterexample"].get<std::string>() << "\n";
    std::cout << (rep["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  return rep["passed"].get<bool>() ? 0 : 3;
}

int run_bounds(int n, std::optional<int> d, std::optional<int> k, std::optional<int> r, bool thm2_rhs,
               bool as_json) {
  json params = {{"n", n}};
  if (d) params["d"] = *d;
  if (k) params["k"] = *k;
  if (r) params["r"] = *r;
  char* out = nullptr;
  check(berge_bounds(params.dump().c_str(), &out));
  json j = json::parse(take(out));
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (d) {
    std::cout << "h(" << n << "," << *d << ") = " << j["erdos_h"] << "\n";
    std::cout << "e(" << n << "," << *d << ") = " << j["erdos_e"] << "\n";
    if (thm2_rhs) {
      long long binom = static_cast<long long>(*d + 1) * *d / 2;
      std::cout << "2^" << *d << " - C(" << *d + 1 << ",2) + e(" << n << "," << *d << ") = " << (1LL << *d)
                << " - " << binom << " + " << j["erdos_e"] << " = " << j["degree_count_rhs"] << "\n";
    }
  }
  if (k) {
    std::cout << "EG hypergraph bound (" << n << "," << *k << ") = " << j["eg_hypergraph"].get<std::string>() << "\n";
    std::cout << "EG graph bound (" << n << "," << *k << ") = " << j["eg_graph"].get<std::string>() << "\n";
    if (r) std::cout << "clique bound (" << n << "," << *k << "," << *r << ") = " << j["luo"].get<std::string>() << "\n";
  }
  if (!d && !k) throw Failure{2, "bounds needs --d or --k"};
  return 0;
}

int run_check_cert(const std::string& hpath, const std::string& cpath, bool as_json) {
  Hyper h(hpath);
  char* out = nullptr;
  check(berge_check_certificate(h.h, read_file(cpath).c_str(), &out));
  json j = json::parse(take(out));
  if (as_json) {
    std::cout << j.dump() << "\n";
  } else if (j["accepted"].get<bool>()) {
    std::cout << "accepted: Berge " << j["kind"].get<std::string>() << " of length " << j["length"] << " on "
              << j["vertices"] << " vertices\n";
  } else {
    std::cout << "rejected: " << j["fault"].get<std::string>() << " at position " << j["position"] << "\n";
  }
  return j["accepted"].get<bool>() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge cycles in non-uniform hypergraphs: oracles, constructions and checks", "berge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersionLine);

  int result = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "generate an extremal construction");
  gen->require_subcommand(1);
  GenArgs gen_args;
  for (const char* fam : {"dirac-sharp", "path-sharp", "cycle-sharp", "eg-sharp", "fnk"}) {
    auto* sub = gen->add_subcommand(fam, std::string("generate ") + fam);
    sub->add_option("--n", gen_args.n, "vertex count")->required();
    if (std::string(fam) != "dirac-sharp") sub->add_option("--k", gen_args.k, "cycle/path length")->required();
    if (std::string(fam) == "dirac-sharp" || std::string(fam) == "cycle-sharp")
      sub->add_option("--variant", gen_args.variant, "construction variant")->capture_default_str();
    if (std::string(fam) == "fnk")
      sub->add_option("--shape", gen_args.shape, "block tree shape")
          ->check(CLI::IsMember({"path", "star"}))
          ->capture_default_str();
    sub->add_option("-o,--output", gen_args.out, "output file; the sidecar goes to <output>.json");
    std::string family = fam;
    sub->callback([&result, &gen_args, family] { result = run_gen(family, gen_args); });
  }

  // shadow
  auto* shadow = app.add_subcommand("shadow", "2-shadow of a hypergraph");
  std::string shadow_in, shadow_out;
  shadow->add_option("hypergraph", shadow_in)->required()->check(CLI::ExistingFile);
  shadow->add_option("-o,--output", shadow_out);
  shadow->callback([&] { result = run_shadow(shadow_in, shadow_out); });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact Berge path/cycle oracles");
  std::string oracle_kind, oracle_in;
  bool oracle_json = false, oracle_large = false;
  int oracle_degree_k = 0;
  oracle->add_option("kind", oracle_kind)->required()->check(CLI::IsMember({"cycle", "path", "best-path", "ham"}));
  oracle->add_option("hypergraph", oracle_in)->required()->check(CLI::ExistingFile);
  oracle->add_flag("--json", oracle_json);
  oracle->add_flag("--allow-large", oracle_large, "lift the vertex guardrail");
  oracle->add_option("--degree-cert", oracle_degree_k, "with best-path: build the degree certificate for this k");
  oracle->callback([&] {
    if (oracle_degree_k > 0 && oracle_kind != "best-path")
      throw Failure{2, "--degree-cert requires the best-path oracle"};
    result = run_oracle(oracle_kind, oracle_in, oracle_json, oracle_large, oracle_degree_k);
  });

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "constructive hamiltonian Berge cycle");
  std::string pipe_in;
  bool pipe_json = false, pipe_trace = false, pipe_small = false;
  std::optional<std::uint64_t> pipe_seed;
  pipeline->add_option("hypergraph", pipe_in)->required()->check(CLI::ExistingFile);
  pipeline->add_flag("--json", pipe_json, "print the certificate as JSON");
  pipeline->add_flag("--trace", pipe_trace, "print the full trace as JSON");
  pipeline->add_flag("--allow-small", pipe_small, "accept 13 <= n < 15");
  pipeline->add_option("--seed", pipe_seed, "randomize repair choices");
  pipeline->callback([&] { result = run_pipeline(pipe_in, pipe_json, pipe_trace, pipe_small, pipe_seed); });

  // classify
  auto* classify = app.add_subcommand("classify", "match a dense nonhamiltonian graph to its class");
  std::string cls_in;
  int cls_k = 0;
  bool cls_all = false, cls_second = false, cls_json = false;
  classify->add_option("graph", cls_in)->required()->check(CLI::ExistingFile);
  classify->add_option("--k", cls_k, "defaults to floor((n-1)/2)");
  classify->add_flag("--all", cls_all, "report every matching witness");
  classify->add_flag("--g3-second-side", cls_second, "G3 degree condition over V2 only");
  classify->add_flag("--json", cls_json);
  classify->callback([&] { result = run_classify(cls_in, cls_k, cls_all, cls_second, cls_json); });

  // swap
  auto* swap = app.add_subcommand("swap", "apply an edge swap to a classified graph");
  std::string swap_in, swap_witness, swap_plan, swap_out;
  swap->add_option("graph", swap_in)->required()->check(CLI::ExistingFile);
  swap->add_option("--witness", swap_witness)->required()->check(CLI::ExistingFile);
  swap->add_option("--plan", swap_plan)->required()->check(CLI::ExistingFile);
  swap->add_option("-o,--output", swap_out);
  swap->callback([&] { result = run_swap(swap_in, swap_witness, swap_plan, swap_out); });

  // verify
  auto* verify = app.add_subcommand("verify", "check a theorem over small instances");
  std::string theorem;
  VerifyArgs va;
  verify->add_option("theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"thm4", "thm5", "thm6", "lemma5G", "erdosBound", "egGraph", "luoCliques", "dirac"}));
  verify->add_option("--n", va.n)->required();
  verify->add_option("--k", va.k);
  verify->add_option("--d", va.d);
  verify->add_option("--r", va.r);
  verify->add_option("--mode", va.mode)->check(CLI::IsMember({"exhaustive", "random"}))->capture_default_str();
  verify->add_option("--trials", va.trials)->capture_default_str();
  verify->add_option("--seed", va.seed)->capture_default_str();
  verify->add_option("--p", va.p, "edge probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  verify->add_option("--jobs", va.jobs)->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_flag("--allow-large", va.allow_large);
  verify->add_flag("--json", va.as_json);
  verify->callback([&] { result = run_verify(theorem, va); });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate the extremal bounds exactly");
  int bn = 0;
  std::optional<int> bd, bk, br;
  bool thm2 = false, bjson = false;
  bounds->add_option("--n", bn)->required();
  bounds->add_option("--d", bd);
  bounds->add_option("--k", bk);
  bounds->add_option("--r", br);
  bounds->add_flag("--thm2-rhs", thm2, "also print 2^d - C(d+1,2) + e(n,d)");
  bounds->add_flag("--json", bjson);
  bounds->callback([&] { result = run_bounds(bn, bd, bk, br, thm2, bjson); });

  // check-cert
  auto* cc = app.add_subcommand("check-cert", "verify a Berge path/cycle certificate");
  std::string cc_h, cc_c;
  bool cc_json = false;
  cc->add_option("hypergraph", cc_h)->required()->check(CLI::ExistingFile);
  cc->add_option("certificate", cc_c)->required()->check(CLI::ExistingFile);
  cc->add_flag("--json", cc_json);
  cc->callback([&] { result = run_check_cert(cc_h, cc_c, cc_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Failure& f) {
    std::cerr << "berge: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "berge: " << e.what() << "\n";
    return 1;
  }
  return result;
}
