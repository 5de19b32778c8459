// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "berge/berge_oracle.hpp"
#include "berge/bounds.hpp"
#include "berge/constructions.hpp"
#include "berge/graph_ham.hpp"
#include "berge/pipeline.hpp"
#include "berge/verify.hpp"
#include "class_gen.hpp"
#include "degree_gen.hpp"

using namespace berge;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= budget_seconds) {
    out.ok = false;
    out.detail = "over the time budget";
  }
  if (!out.ok) ++failures;
  std::printf("[%s] %2d %s (%.3fs, budget %gs)%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, budget_seconds,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

VerifyReport verify(TheoremId id, int n, int k, std::optional<int> d = {}) {
  VerifyParams p;
  p.n = n;
  p.k = k;
  p.d = d;
  p.mode = VerifyMode::exhaustive;
  p.jobs = jobs();
  return verify_theorem(id, p);
}

}  // namespace

int main() {
  criterion(1, "edge bound arithmetic: h(16,6)=81, e(16,6)=85, 2^6-21+85=128", 0.001, [] {
    Outcome o;
    o.require(erdos_h(16, 6) == 81, "h(16,6)");
    o.require(erdos_bound(16, 6) == 85, "e(16,6)");
    o.require(degree_count_rhs(16, 6) == 128, "2^6 - C(7,2) + e(16,6)");
    o.require(64 - 21 + 85 == degree_count_rhs(16, 6), "quoted arithmetic");
    return o;
  });

  criterion(2, "circumference bound sharp at (3,3),(5,3),(5,4),(7,4),(7,5)", 10, [] {
    Outcome o;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 3}, {5, 3}, {5, 4}, {7, 4}, {7, 5}}) {
      Construction c = eg_sharpness(n, k);
      std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      o.require(Rational(static_cast<std::int64_t>(c.h.edge_count())) == eg_hypergraph_bound(n, k),
                "edge count differs from the bound at " + at);
      o.require(is_downset(c.h), "not a downset at " + at);
      o.require(!berge_cycle_at_least(c.h, k).has_value(), "Berge cycle of length >= k at " + at);
    }
    return o;
  });

  criterion(3, "circumference edge bound exhaustive over downsets on 5 vertices, k=4: max 14, attained", 600, [] {
    Outcome o;
    VerifyReport r = verify(TheoremId::thm6, 5, 4);
    o.require(r.passed(), "counterexample found");
    o.require(r.extremum == 14, "extremum is not 14");
    o.require(r.bound == "14", "bound is not 14");
    o.require(r.attained, "bound not attained");
    o.require(r.instances_scanned == 7581, "not every downset was scanned");
    return o;
  });

  criterion(4, "degree thresholds for long paths and cycles exhaustive at k=3, n=4 over all 2^15 hypergraphs", 300, [] {
    Outcome o;
    VerifyReport c = verify(TheoremId::thm5, 4, 3);
    VerifyReport p = verify(TheoremId::thm4, 4, 3);
    o.require(c.instances_scanned == 32768 && p.instances_scanned == 32768, "scan size is not 2^15");
    o.require(c.passed(), "hypergraph with min degree >= 4 and no Berge cycle of length >= 3");
    o.require(p.passed(), "hypergraph with min degree >= 3 and no Berge path on 3 base vertices");
    o.require(c.instances_checked > 0 && p.instances_checked > 0, "no instance met the hypothesis");
    return o;
  });

  criterion(5, "cycle sharpness (7,3, variant 2): min degree 3, circumference 2", 1, [] {
    Outcome o;
    Construction c = cycle_sharpness(7, 3, 2);
    o.require(min_degree(c.h) == 3, "min degree is not 3");
    auto cyc = longest_berge_cycle(c.h);
    o.require(cyc && cyc->length() == 2, "longest Berge cycle is not 2");
    return o;
  });

  criterion(6, "dense nonhamiltonian classification exhaustive on all 2^21 graphs with n=7", 1800, [] {
    Outcome o;
    VerifyReport r = verify(TheoremId::lemma5G, 7, 3);
    o.require(r.instances_scanned == (1ULL << 21), "scan size is not 2^21");
    o.require(r.passed(), "unclassified graph found");
    o.require(r.instances_checked > 0, "no dense nonhamiltonian graph seen");
    return o;
  });

  criterion(7, "nonhamiltonian edge bound exhaustive on n=7 for d=1,2,3", 1800, [] {
    Outcome o;
    for (int d = 1; d <= 3; ++d) {
      VerifyReport r = verify(TheoremId::erdosBound, 7, 0, d);
      o.require(r.instances_scanned == (1ULL << 21), "scan size is not 2^21");
      o.require(r.passed(), "counterexample at d=" + std::to_string(d));
      o.require(r.bound == std::to_string(erdos_bound(7, d)), "wrong bound at d=" + std::to_string(d));
      o.require(r.attained, "bound not attained at d=" + std::to_string(d));
    }
    return o;
  });

  criterion(8, "edge swaps at k=6: 500 per class hamiltonian, exceptional G3 not", 300, [] {
    Outcome o;
    std::mt19937_64 rng(20240608);
    for (auto cls : {GraphClass::G1, GraphClass::G2, GraphClass::G3, GraphClass::G4, GraphClass::G5}) {
      int done = 0;
      while (done < 500) {
        auto inst = testing_util::random_class_instance(cls, 6, rng);
        SwapResult r = apply_swap(inst.g, inst.w, inst.plan);
        if (r.guarantee == SwapGuarantee::exceptional) continue;
        o.require(is_hamiltonian(r.graph), std::string("swapped ") + to_string(cls) + " graph is not hamiltonian");
        ++done;
      }
    }
    auto ex = testing_util::exceptional_g3(6);
    SwapResult r = apply_swap(ex.g, ex.w, ex.plan);
    o.require(r.guarantee == SwapGuarantee::exceptional, "carve-out not reported as exceptional");
    o.require(!is_hamiltonian(r.graph), "exceptional result is hamiltonian");
    return o;
  });

  criterion(9, "constructive hamiltonian Berge cycles: 100 seeded instances at n=15,16,17", 600, [] {
    Outcome o;
    for (int n : {15, 16, 17}) {
      for (std::uint64_t i = 0; i < 100; ++i) {
        Hypergraph h = random_hypergraph(n, 0.05, dirac_threshold(n), instance_seed(static_cast<std::uint64_t>(n), i));
        PipelineTrace t = constructive_hamiltonian_berge_cycle(h);
        o.require(t.g.min_degree() >= (n - 1) / 2, "matched graph below floor((n-1)/2)");
        o.require(verify_certificate(h, t.lifted_cycle).accepted(), "certificate rejected");
        o.require(t.lifted_cycle.vertices.size() == static_cast<std::size_t>(n), "cycle misses vertices");
      }
    }
    return o;
  });

  criterion(10, "Dirac sharpness: (15,1) min degree 128, (16,2) 129, (7,1) not hamiltonian", 60, [] {
    Outcome o;
    Construction a = dirac_sharpness(15, 1);
    Construction b = dirac_sharpness(16, 2);
    o.require(min_degree(a.h) == 128, "(15,1) min degree");
    o.require(min_degree(b.h) == 129, "(16,2) min degree");
    o.require(a.obstruction && check_obstruction(a.h, *a.obstruction).empty(), "(15,1) obstruction");
    o.require(b.obstruction && check_obstruction(b.h, *b.obstruction).empty(), "(16,2) obstruction");
    o.require(!hamiltonian_berge_cycle(dirac_sharpness(7, 1).h).has_value(), "(7,1) has a hamiltonian Berge cycle");
    return o;
  });

  criterion(11, "F(5,4), F(7,4) attain the EG and clique bounds, circumference k-1", 1, [] {
    Outcome o;
    for (int n : {5, 7}) {
      Graph g = fnk(n, 4);
      o.require(Rational(static_cast<std::int64_t>(g.edge_count())) == eg_graph_bound(n, 4), "edge count");
      for (int r = 2; r <= 3; ++r)
        o.require(Rational(static_cast<std::int64_t>(count_cliques(g, r))) == luo_bound(n, 4, r), "clique count");
      o.require(circumference(g) == 3, "circumference");
    }
    return o;
  });

  criterion(12, "degree certificate on 1000 seeded hypergraphs, k=3,4,5, n<=10", 600, [] {
    Outcome o;
    std::mt19937_64 rng(12);
    int tight = 0;
    for (int i = 0; i < 1000; ++i) {
      const int k = 3 + i % 3;
      Hypergraph h = testing_util::no_long_cycle_instance(k, 10, rng);
      const std::size_t bound = std::size_t{1} << (k - 2);
      o.require(h.vertex_count() <= 10 && min_degree(h) >= bound + 1, "instance misses the hypothesis");
      DegreeCertificateOutcome out = best_path_degree_certificate(h, k);
      if (!out.certificate) {
        o.require(false, "no certificate on instance " + std::to_string(i));
        continue;
      }
      const DegreeCertificate& c = *out.certificate;
      o.require(check_degree_certificate(h, c).empty(), "certificate check failed");
      // independent restatement: injective, domain = edges at v1 minus e_{k-1}
      const int v1 = c.path.vertices.front();
      std::vector<VertexSet> domain;
      for (auto e : h.edges())
        if (e.contains(v1) && !(c.excluded && e == *c.excluded)) domain.push_back(e);
      o.require(domain.size() == c.varphi.size(), "domain size");
      for (std::size_t a = 0; a < c.varphi.size(); ++a) {
        o.require(c.varphi[a].edge == domain[a], "domain mismatch");
        for (std::size_t b = a + 1; b < c.varphi.size(); ++b)
          o.require(c.varphi[a].image != c.varphi[b].image, "varphi not injective");
      }
      if (c.degree_v1 == bound + 1) {
        ++tight;
        o.require(c.excluded && c.excluded->contains(v1), "v1 not in e_{k-1} at tight degree");
      }
    }
    o.require(tight > 0, "no tight instance");
    return o;
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
