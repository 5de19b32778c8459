#include "berge/pipeline.hpp"

#include <algorithm>
#include <random>

#include "berge/berge_oracle.hpp"

namespace berge {

std::uint64_t dirac_threshold(int n) {
  if (n < 3 || n > 63) fail(ErrorCode::invalid_argument, "threshold defined for 3 <= n <= 63");
  if (n % 2 == 1) return (1ULL << ((n - 1) / 2)) + 1;
  return (1ULL << (n / 2 - 1)) + 2;
}

const char* to_string(PipelineBranch b) noexcept {
  return b == PipelineBranch::g_hamiltonian ? "G-hamiltonian" : "classified-repair";
}

namespace {

struct Move {
  VertexSet edge;
  VertexPair old_pair;
  VertexPair new_pair;
};

bool move_fits_class(const ClassWitness& w, const VertexPair& p) {
  auto joins = [&](VertexSet a, VertexSet b) {
    return (a.contains(p.u) && b.contains(p.v)) || (a.contains(p.v) && b.contains(p.u));
  };
  const VertexSet both = p.as_set();
  switch (w.cls) {
    case GraphClass::G1:
      return joins(w.v1, w.v2);
    case GraphClass::G2:
    case GraphClass::G3: {
      VertexSet x0 = w.x0 ? VertexSet::single(*w.x0) : VertexSet{};
      return joins(w.v1 - x0, w.v2 - x0);
    }
    case GraphClass::G4:
    case GraphClass::G5:
      return w.v2.contains_all(both);
  }
  return false;
}

}  // namespace

RepairPlan repair_plan_for(const Hypergraph& h, const MatchingMap& phi, const Graph& g,
                           const ClassWitness& w, std::optional<std::uint64_t> choice_seed) {
  (void)h;
  std::vector<Move> moves;
  for (const auto& entry : phi.entries()) {
    std::vector<int> members = entry.edge.members();
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        VertexPair p(members[a], members[b]);
        if (g.has_edge(p) || !move_fits_class(w, p)) continue;
        moves.push_back({entry.edge, entry.pair, p});
      }
  }
  if (choice_seed) {
    std::mt19937_64 rng(*choice_seed);
    std::shuffle(moves.begin(), moves.end(), rng);
  }

  auto accept = [&](const SwapPlan& plan) {
    return swap_plan_shape_error(g, w, plan).empty() && !is_exceptional_swap(g, w, plan);
  };

  const bool two_moves = w.cls == GraphClass::G1 || w.cls == GraphClass::G5;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& a = moves[i];
    if (!two_moves) {
      SwapPlan plan{{a.old_pair}, {a.new_pair}};
      if (accept(plan)) return {plan, {{a.edge, a.old_pair, a.new_pair}}};
      continue;
    }
    for (std::size_t j = i + 1; j < moves.size(); ++j) {
      const Move& b = moves[j];
      if (a.edge == b.edge) continue;
      SwapPlan plan{{a.old_pair, b.old_pair}, {a.new_pair, b.new_pair}};
      if (accept(plan))
        return {plan, {{a.edge, a.old_pair, a.new_pair}, {b.edge, b.old_pair, b.new_pair}}};
    }
  }
  fail(ErrorCode::theorem_violation,
       std::string("no qualifying hyperedge for a repair of class ") + to_string(w.cls));
}

PipelineTrace complete_from_matching(const Hypergraph& h, const MatchingMap& phi,
                                     PipelineOptions opts) {
  const int n = h.vertex_count();
  if (n < 13) fail(ErrorCode::precondition, "the repair step needs n >= 13");
  if (!is_valid_matching_map(h, phi))
    fail(ErrorCode::invalid_argument, "phi is not a matching of the incidence graph");
  const int k = (n - 1) / 2;

  PipelineTrace trace;
  trace.matching = phi;
  trace.g = extract_berge_subgraph(h, phi);
  if (trace.g.min_degree() < k)
    fail(ErrorCode::precondition, "extracted graph has minimum degree " +
                                      std::to_string(trace.g.min_degree()) + " < " +
                                      std::to_string(k));
  trace.final_matching = phi;

  std::optional<std::vector<int>> cycle = hamiltonian_cycle(trace.g);
  if (cycle) {
    trace.branch = PipelineBranch::g_hamiltonian;
  } else {
    trace.branch = PipelineBranch::classified_repair;
    ClassifyResult cls = classify_dense_nonhamiltonian(trace.g, k);
    if (!cls.applicable())
      fail(ErrorCode::theorem_violation, "classification not applicable: " + cls.not_applicable);
    if (!cls.classified())
      fail(ErrorCode::theorem_violation, "dense nonhamiltonian graph matched no class");
    trace.witness = cls.witnesses.front();
    RepairPlan repair = repair_plan_for(h, phi, trace.g, *trace.witness, opts.choice_seed);
    trace.plan = repair.swap;
    SwapResult swapped = apply_swap(trace.g, *trace.witness, repair.swap);
    if (swapped.guarantee != SwapGuarantee::hamiltonian)
      fail(ErrorCode::theorem_violation, "repair plan hit the exceptional configuration");
    cycle = hamiltonian_cycle(swapped.graph);
    if (!cycle) fail(ErrorCode::theorem_violation, "swapped graph is not hamiltonian");
    for (const auto& r : repair.reassignments) trace.final_matching.reassign(r.edge, r.to);
  }

  trace.lifted_cycle = lift_cycle(trace.final_matching, *cycle);
  CertificateCheck check = verify_certificate(h, trace.lifted_cycle);
  if (!check || trace.lifted_cycle.vertices.size() != static_cast<std::size_t>(n))
    fail(ErrorCode::theorem_violation,
         std::string("lifted cycle rejected: ") + to_string(check.fault));
  return trace;
}

PipelineTrace constructive_hamiltonian_berge_cycle(const Hypergraph& h, PipelineOptions opts) {
  const int n = h.vertex_count();
  const int min_n = opts.allow_small ? 13 : 15;
  if (n < min_n)
    fail(ErrorCode::precondition,
         "pipeline needs n >= " + std::to_string(min_n) + " (got " + std::to_string(n) + ")");
  const std::uint64_t need = dirac_threshold(n);
  if (min_degree(h) < need)
    fail(ErrorCode::precondition, "minimum degree " + std::to_string(min_degree(h)) +
                                      " is below the threshold " + std::to_string(need));
  ReductionResult red = reduce(h);
  Graph g = extract_berge_subgraph(h, red.phi);
  const int k = (n - 1) / 2;
  if (g.min_degree() < k)
    fail(ErrorCode::theorem_violation, "extracted graph has minimum degree " +
                                           std::to_string(g.min_degree()) + " < " +
                                           std::to_string(k));
  return complete_from_matching(h, red.phi, opts);
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void violated(const std::string& what) {
  fail(ErrorCode::theorem_violation, "degree certificate: " + what);
}

}  // namespace

DegreeCertificateOutcome best_path_degree_certificate(const Hypergraph& h, int k) {
  if (k < 3) fail(ErrorCode::precondition, "k must be >= 3");
  if (k > 40) fail(ErrorCode::precondition, "k is too large");
  const std::size_t bound = (std::size_t{1} << (k - 2));
  if (min_degree(h) < bound + 1)
    fail(ErrorCode::precondition, "minimum degree must be at least 2^(k-2)+1 = " +
                                      std::to_string(bound + 1));

  auto best = best_berge_path(h);
  if (!best) violated("no Berge path");
  const BergeCertificate& path = *best;
  const auto& v = path.vertices;  // v[0] is v_1
  const auto& e = path.edges;     // e[0] is e_1
  const int p = static_cast<int>(v.size());
  if (p < k - 1) violated("best path has only " + std::to_string(p) + " base vertices");

  VertexSet w;
  for (int i = 0; i < k - 1; ++i) w = w.with(v[i]);
  VertexSet beyond;
  for (int i = k - 1; i < p; ++i) beyond = beyond.with(v[i]);
  VertexSet base = w | beyond;

  std::optional<VertexSet> excluded;
  if (p - 1 >= k - 1) excluded = e[k - 2];
  const std::size_t p1_count = std::min<std::size_t>(e.size(), static_cast<std::size_t>(k - 1));
  auto in_p1 = [&](VertexSet f) { return std::find(e.begin(), e.begin() + p1_count, f) != e.begin() + p1_count; };

  const int v1 = v[0];
  std::vector<VertexSet> h1;
  for (VertexSet f : h.edges())
    if (f.contains(v1)) h1.push_back(f);

  // Edges at v1 outside the first k-1 path edges must stay inside W.
  for (VertexSet f : h1) {
    if (in_p1(f)) continue;
    if (f.intersects(beyond)) {
      int i = k - 1;
      while (!f.contains(v[i])) ++i;
      BergeCertificate cycle{CertificateKind::cycle, {v.begin(), v.begin() + i + 1},
                             {e.begin(), e.begin() + i}};
      cycle.edges.push_back(f);
      if (!verify_certificate(h, cycle)) violated("long cycle witness is invalid");
      return {std::nullopt, cycle};
    }
    if (!base.contains_all(f)) violated("an edge at v1 leaves the path, so the path is not best");
    if (!w.contains_all(f)) violated("edge at v1 outside W");
  }

  DegreeCertificate cert;
  cert.k = k;
  cert.path = path;
  cert.w = w;
  cert.excluded = excluded;
  cert.degree_v1 = h1.size();
  cert.v1_in_excluded = excluded && excluded->contains(v1);

  auto vs = [&](std::initializer_list<int> idx) {
    VertexSet s;
    for (int i : idx) s = s.with(v[i - 1]);
    return s;
  };
  for (VertexSet f : h1) {
    if (excluded && f == *excluded) continue;
    if (w.contains_all(f)) {
      cert.varphi.push_back({f, f});
      continue;
    }
    auto pos = std::find(e.begin(), e.begin() + p1_count, f);
    if (pos == e.begin() + p1_count) violated("edge outside W is not a path edge");
    const int i = static_cast<int>(pos - e.begin()) + 1;  // f = e_i
    VertexSet image;
    if (i >= 3) {
      image = vs({1, i, i + 1});
    } else if (i == 2) {
      image = vs({1, 2, 3});
      if (h.contains_edge(image)) {
        if (e[0] != image) violated("{v1,v2,v3} is an edge but not e_1");
        image = vs({1, 3});
      }
    } else {
      image = vs({1, 2});
    }
    if (h.contains_edge(image)) violated("image of a path edge is an edge of H");
    cert.varphi.push_back({f, image});
  }

  if (auto err = check_degree_certificate(h, cert); !err.empty()) violated(err);
  return {cert, std::nullopt};
}

std::string check_degree_certificate(const Hypergraph& h, const DegreeCertificate& cert) {
  const auto& v = cert.path.vertices;
  if (cert.k < 3 || static_cast<int>(v.size()) < cert.k - 1) return "path too short";
  if (!verify_certificate(h, cert.path) || cert.path.kind != CertificateKind::path)
    return "path certificate is invalid";
  VertexSet w;
  for (int i = 0; i < cert.k - 1; ++i) w = w.with(v[i]);
  if (w != cert.w) return "W is not the first k-1 base vertices";
  const int v1 = v[0];

  std::vector<VertexSet> domain;
  for (VertexSet f : h.edges())
    if (f.contains(v1) && !(cert.excluded && f == *cert.excluded)) domain.push_back(f);
  if (domain.size() != cert.varphi.size()) return "domain size differs from edges at v1";
  std::vector<VertexSet> images;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto& entry = cert.varphi[i];
    if (entry.edge != domain[i]) return "domain is not the edges at v1 minus e_{k-1}";
    if (!entry.image.contains(v1) || !w.contains_all(entry.image)) return "image outside the family";
    if (w.contains_all(entry.edge)) {
      if (entry.image != entry.edge) return "edge inside W is not mapped to itself";
    } else if (h.contains_edge(entry.image)) {
      return "image of an edge leaving W is an edge of H";
    }
    images.push_back(entry.image);
  }
  std::sort(images.begin(), images.end(), CanonicalLess{});
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return "varphi is not injective";

  std::size_t degree_v1 = degree(h, v1);
  if (degree_v1 != cert.degree_v1) return "recorded degree of v1 is wrong";
  const std::size_t bound = std::size_t{1} << (cert.k - 2);
  if (domain.size() > bound) return "domain larger than 2^(k-2)";
  if (degree_v1 > bound + 1) return "degree of v1 exceeds 2^(k-2)+1";
  const bool in_last = cert.excluded && cert.excluded->contains(v1);
  if (in_last != cert.v1_in_excluded) return "recorded membership of v1 in e_{k-1} is wrong";
  if (degree_v1 == bound + 1 && !in_last) return "degree 2^(k-2)+1 without v1 in e_{k-1}";
  return {};
}

}  // namespace berge
