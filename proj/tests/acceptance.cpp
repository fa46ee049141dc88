/* Copyright (C) 2026 The lmkit Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
// Acceptance suite: one PASS/FAIL line per criterion, plus supplementary
// lines. Known discrepancies are computed honestly and reported as FAIL
// with their witness; the process exits 0 once every line is printed.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lmkit/longmoody.hpp"
#include "lmkit/polyfun.hpp"

using nlohmann::json;
using namespace lmkit;

namespace {

int passed = 0, failed = 0;

void line(const std::string& id, bool ok, const std::string& what, const std::string& detail = "") {
  (ok ? passed : failed)++;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << what;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
}

std::string witness(const Report& r) { return r.pass ? "" : "witness " + r.witness.dump(); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json fixtures() {
  std::ifstream in(LMKIT_FIXTURES "/displays.json");
  if (!in) throw std::runtime_error("missing fixture file displays.json");
  return json::parse(in);
}

// Column-convention block of a display, honoring its orientation flag.
PolyMatrix display_block(const json& entry) {
  std::vector<std::vector<std::string>> rows = entry["block"];
  PolyMatrix m = PolyMatrix::from_strings(rows);
  std::string o = entry["orientation"];
  if (o == "transposed") return m.transpose();
  if (o != "as-displayed") throw std::runtime_error("unknown orientation flag " + o);
  return m;
}

std::string orientation(const json& entry) { return "orientation " + entry["orientation"].get<std::string>(); }

// ------------------------------------------------------------ criteria

void braid_relation_suite() {
  auto t0 = std::chrono::steady_clock::now();
  std::string bad;
  struct Rep {
    std::string name;
    std::function<PolyMatrix(int, int)> gen;
  };
  FunctorPtr tym = tym_functor();
  std::vector<Rep> reps = {{"burau", [](int n, int i) { return burau_matrix(n, i); }},
                           {"reduced-burau", [](int n, int i) { return reduced_burau_matrix(n, i); }},
                           {"tym", [tym](int n, int i) { return tym->gen(n, i); }},
                           {"lk", [](int n, int i) { return lk_matrix(n, i); }}};
  for (const auto& rep : reps)
    for (int n = 2; n <= 7; ++n)
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          PolyMatrix a = rep.gen(n, i), b = rep.gen(n, j);
          bool ok = j == i + 1 ? a * b * a == b * a * b : a * b == b * a;
          if (!ok && bad.empty()) bad = rep.name + " n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
        }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << "n<=7, " << s << " s" << (bad.empty() ? "" : ", first violation " + bad);
  line("C1", bad.empty() && s < 10, "braid and commutation relations of Bur, redBur, TYM, LK", d.str());
}

void functor_criteria() {
  std::string bad;
  for (std::string name : {"constant", "zero", "burau", "reduced-burau", "tym", "lk", "t1", "atomic0", "atomic1",
                           "atomic2", "atomic3", "e1", "e2", "e3"}) {
    Report r = check_functor_criterion(builtin(name), 5, 3);
    if (!r.pass) bad += name + " " + r.witness.dump() + "; ";
  }
  line("C2.1", bad.empty(), "functor criterion for all built-ins, N=5, L=3", bad);
  Report c = check_functor_criterion(corrupt(burau_functor(), 3, 1, 0, 1, LaurentPoly::parse("t^2")), 5, 3);
  bool located = !c.pass && c.witness.contains("n") && c.witness.contains("relation");
  line("C2.2", located, "one-entry corruption of Bur(s1) at n=3 detected with a located witness",
       c.witness.dump());
}

FreeWord random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, rank), sign(0, 1);
  std::vector<int> l;
  int m = len(rng);
  for (int k = 0; k < m; ++k) l.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return FreeWord::from_letters(rank, l);
}

void fox_oracle() {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> rank(1, 5);
  int bad = 0;
  std::string first;
  for (int k = 0; k < 1000; ++k) {
    FreeWord w = random_word(rng, rank(rng), 8);
    GroupRingElement lhs = fox_derivatives(w).expand() + GroupRingElement(FreeWord(w.rank()));
    if (!(lhs == GroupRingElement(w))) {
      if (!bad) first = w.str();
      ++bad;
    }
  }
  line("C3", bad == 0, "sum_i (g_i - 1) d_i(w) + 1 = w for 1000 seeded words, rank<=5, length<=8",
       bad ? std::to_string(bad) + " failures, first " + first : "seed 0");
}

void coherence() {
  auto t0 = std::chrono::steady_clock::now();
  LMConfig cfg = LMConfig::make("artin", "pure_braid");
  CoherenceReport coh = check_coherence(cfg, 5, 4, 0, 3);
  CoherenceReport rel = check_reliability(cfg, 5, 4);
  std::string d;
  for (const auto* r : {&coh, &rel})
    for (const auto& c : r->conditions) d += c.condition + (c.pass ? " ok, " : " FAILED, ");
  std::ostringstream tail;
  tail << "3 LK points + symbolic Burau, " << seconds_since(t0) << " s";
  line("C4.1", coh.pass() && rel.pass(), "(artin, pure_braid) coherent and reliable, N=5, L=4", d + tail.str());
  std::string bad;
  for (std::string a : {"wada:1:1", "wada:1:-1", "wada:2", "wada:3", "wada:4", "wada:5", "wada:6", "wada:7"}) {
    LMConfig w{action_family(a, false), sigma_family("trivial"), std::nullopt, std::nullopt};
    CoherenceReport r = check_coherence(w, 5, 4, 0, 3);
    if (!r.pass()) bad += a + " ";
  }
  line("C4.2", bad.empty(), "(wada:K, trivial) for every kind passes the coherence conditions, N=5, L=4",
       bad.empty() ? "" : "failing: " + bad);
  Report k4 = check_action_relations(action_family("wada:4", false), 3);
  line("C4.3", !k4.pass, "the printed Wada kind 4 pair is rejected as a braid action", witness(k4));
}

void lm1_display(const json& fx) {
  const json& e = fx["lm1_twisted_constant"];
  Report blocks = check_block_pattern(twisted_constant_lm(e["action"], e["sigma"]), display_block(e), 6);
  line("C5.1", blocks.pass, "t^-1 LM_1(t X) generator blocks equal the display, n<=6", orientation(e) + (blocks.pass ? "" : ", " + witness(blocks)));
  Report literal = check_reversal_conjugation(6, false);
  line("C5.2", literal.pass, "r_n M(s_i) r_n^-1 = Bur_{t^2}(s_i) on all generators, n<=6",
       literal.pass ? "" : std::to_string(literal.violations()) + " violations (holds for n=2 only), " + witness(literal));
  Report reflected = check_reversal_conjugation(6, true);
  line("C5.3", reflected.pass, "r_n M(s_i) r_n^-1 = Bur_{t^2}(s_{n-i}), n<=6", witness(reflected));
  Report eta = check_natural(burau_equivalence(), 6);
  line("C5.4", eta.pass, "eta_n = t^n L_n is a natural isomorphism t^-1 LM_1(t X) -> Bur_{t^2}, n<=6",
       "det eta_n = t^(n^2)" + (eta.pass ? std::string() : ", " + witness(eta)));
}

void lm2_lm3_displays(const json& fx) {
  LMConfig cfg = LMConfig::make("wada:2", "trivial");
  std::string bad;
  for (FunctorPtr f : {constant_functor(), burau_functor()}) {
    FunctorPtr l = lm_apply(cfg, f);
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i < n; ++i) {
        PolyMatrix s = f->gen(n + 1, i + 1);
        PolyMatrix want(n * s.rows(), n * s.cols());
        for (int k = 0; k < n; ++k) want.set_block(k * s.rows(), k * s.cols(), s);
        if (l->gen(n, i) != want && bad.empty()) bad = f->name() + " n=" + std::to_string(n) + " i=" + std::to_string(i);
      }
  }
  line("C6.1", bad.empty(), "LM_2(F)(s_i) = F(id_1 # s_i)^{+n} for F in {X, Bur}, n<=5", bad);
  const json& e = fx["lm3_twisted_constant"];
  Report blocks = check_block_pattern(twisted_constant_lm(e["action"], e["sigma"]), display_block(e), 5);
  line("C6.2", blocks.pass, "t^-1 LM_3(t X) generator blocks equal [[0,-1],[1,0]], n<=5", orientation(e) + (blocks.pass ? "" : ", " + witness(blocks)));
}

std::string degree_detail(const DegreeReport& r) {
  std::string d = "degree " + (r.degree ? std::to_string(*r.degree) : std::string("none"));
  d += r.very_strong ? ", very strong" : ", not very strong";
  if (!r.error.empty()) d += ", " + r.error;
  return d;
}

void degree_table(const json& fx) {
  auto t0 = std::chrono::steady_clock::now();
  const int N = 8;
  auto expect = [&](const std::string& id, const FunctorPtr& f, int d, bool vs, const std::string& what) {
    DegreeReport r = estimate_strong_degree(f, N, 4);
    bool ok = r.degree && *r.degree == d && r.very_strong == vs;
    line(id, ok, what, degree_detail(r));
  };
  expect("C7.1", burau_functor(), 1, true, "Bur: degree 1, very strong (N=8)");
  expect("C7.2", tym_functor(), 1, true, "TYM: degree 1, very strong (N=8)");
  expect("C7.3", reduced_burau_functor(), 2, false, "redBur: degree 2, not very strong (N=8)");
  FunctorPtr d1 = delta(reduced_burau_functor());
  auto eta1 = rank_one_iso(d1, t1_functor(), N - 1);
  Report n1 = eta1 ? check_natural(*eta1, N - 1) : Report{};
  line("C7.4", eta1 && n1.pass, "delta_1 redBur = T_1 by an explicit natural map (n<=7)", eta1 ? witness(n1) : "no rank-one map");
  auto eta2 = rank_one_iso(delta(d1), atomic_functor(0), N - 2);
  Report n2 = eta2 ? check_natural(*eta2, N - 2) : Report{};
  line("C7.5", eta2 && n2.pass, "delta_1^2 redBur = A_0 by an explicit natural map (n<=6)", eta2 ? witness(n2) : "no rank-one map");
  expect("C7.6", lk_functor(), 2, true, "LK: degree 2, very strong (N=8)");
  const json& e = fx["delta_lk"];
  Report dlk = check_block_pattern(delta(lk_functor()), display_block(e), 6);
  line("C7.7", dlk.pass, "delta_1 LK generator blocks equal Id + [[0,t],[1,1-t]] + Id, n<=6", orientation(e) + (dlk.pass ? "" : ", " + witness(dlk)));
  for (int k = 0; k <= 3; ++k)
    expect("C7.8." + std::to_string(k), atomic_functor(k), k, false,
           "A_" + std::to_string(k) + ": degree " + std::to_string(k) + ", not very strong (N=8)");
  for (int l = 1; l <= 3; ++l) {
    DegreeReport r = estimate_strong_degree(e_functor(l), N, 4);
    bool ok = r.degree && *r.degree == l && r.very_strong;
    std::string d = degree_detail(r);
    if (!ok && r.evidence.size() > 1)
      d += "; delta_1 E_l has zero stabilizations, kappa_1 delta_1 E_l != 0, max dim of delta_1^" +
           std::to_string(r.evidence.back().d) + " is " + std::to_string(r.evidence.back().max_nonzero_dim);
    line("C7.9." + std::to_string(l), ok, "E_" + std::to_string(l) + ": degree " + std::to_string(l) + ", very strong (N=8)", d);
  }
  std::cout << "      degree table computed in " << seconds_since(t0) << " s" << std::endl;
}

void splitting() {
  LMConfig cfg = LMConfig::make("artin", "pure_braid");
  for (FunctorPtr f : {constant_functor(), burau_functor(), tym_functor(), atomic_functor(2)}) {
    Report r = verify_splitting_theorem(cfg, f, 4);
    line("C8." + f->name(), r.pass,
         "[upsilon|xi'] unimodular and natural, xi' lemma, delta_1 LM(F) = tau_2 F + LM(delta_1 F), kappa_1 commutation; F=" + f->name() + ", n<=4",
         witness(r));
  }
  FunctorPtr a2 = atomic_functor(2);
  FunctorPtr left = kappa(lm_apply(cfg, a2)), right = lm_apply(cfg, kappa(a2));
  int nonzero = 0;
  bool same = true;
  for (int n = 0; n <= 4; ++n) {
    same = same && left->dim(n) == right->dim(n);
    if (left->dim(n)) ++nonzero;
  }
  line("C8.kappa", same && nonzero > 0, "kappa_1 LM(A_2) and LM(kappa_1 A_2) agree and are nonzero, n<=4",
       std::to_string(nonzero) + " nonzero levels");
  Report neg = check_xi_lemma(cfg, burau_functor(), 4, true);
  line("C8.control", !neg.pass, "dropping the braiding factor from xi' breaks the xi' lemma (negative control)", "");
}

void degree_growth() {
  LMConfig cfg = LMConfig::make("artin", "pure_braid");
  for (FunctorPtr f : {constant_functor(), burau_functor(), tym_functor()}) {
    Report r = verify_degree_theorems(cfg, f, 5, 4);
    line("C9." + f->name(), r.pass, "degree(LM_1 F) = degree(F) + 1, very-strong preserved; F=" + f->name() + ", N=5", witness(r));
  }
  DegreeReport r = estimate_strong_degree(lm_apply(cfg, lm_apply(cfg, constant_functor())), 6, 4);
  line("C9.iterated", r.degree && *r.degree == 2 && r.very_strong, "LM_1^2(X): degree 2, very strong (N=6)", degree_detail(r));
}

void additivity() {
  LMConfig cfg = LMConfig::make("artin", "pure_braid");
  Report a1 = check_additivity(cfg, burau_functor(), tym_functor(), 4);
  Report a2 = check_additivity(cfg, constant_functor(), lk_functor(), 4);
  line("C10.1", a1.pass && a2.pass, "LM(F+G) = LM(F) + LM(G) for (Bur, TYM) and (X, LK), n<=4", witness(a1.pass ? a2 : a1));
  std::string bad;
  for (std::string a : {"wada:3", "wada:7"})
    for (FunctorPtr f : {burau_functor(), tym_functor()}) {
      Report r = trivial_sigma_factorization(action_family(a), f, 4);
      if (!r.pass) bad += a + "/" + f->name() + " ";
    }
  line("C10.2", bad.empty(), "trivial sigma: LM(F) = LM(X) (x) tau_1 F for wada:3 and wada:7, F in {Bur, TYM}, n<=4", bad);
}

void prebraided() {
  UBetaMorphism iota1 = UBetaMorphism::stabilization(0, 1);
  UBetaMorphism left = ubeta_compose(UBetaMorphism::automorphism(braiding(1, 2)),
                                     ubeta_monoidal(iota1, UBetaMorphism::identity(2)));
  UBetaMorphism right = ubeta_monoidal(UBetaMorphism::identity(2), iota1);
  BraidComparison c = ubeta_equal(left, right);
  line("C11", !c.equal, "b_{1,2} o (iota_1 # id_2) != id_2 # iota_1 in U(beta)", c.witness);
}

void supplementary() {
  bool ok = check_translated_atomic(3, 1, 6).pass && check_translated_atomic(3, 2, 6).pass &&
            check_translated_atomic(4, 3, 6).pass;
  line("S1", ok, "tau_k(A_n) = A_{n-k} (no multiplicity) for (n,k) = (3,1), (3,2), (4,3)");
  std::string bad;
  for (std::string name : {"burau", "tym", "lk", "reduced-burau", "atomic2", "t1"})
    if (!check_commutations(builtin(name), 4).pass) bad += name + " ";
  line("S2", bad.empty(), "tau_1 delta_1 = delta_1 tau_1 and tau_1 kappa_1 = kappa_1 tau_1 on built-ins, n<=4", bad);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  json fx = fixtures();
  braid_relation_suite();
  functor_criteria();
  fox_oracle();
  coherence();
  lm1_display(fx);
  lm2_lm3_displays(fx);
  degree_table(fx);
  splitting();
  degree_growth();
  additivity();
  prebraided();
  supplementary();
  std::cout << "summary: " << passed << " passed, " << failed << " failed, " << seconds_since(t0) << " s" << std::endl;
  return 0;
}
