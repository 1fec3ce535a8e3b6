//  Copyright 2026 the mpcalc authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "mpcalc/acceptance.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mpcalc/gen.hpp"
#include "mpcalc/grothendieck.hpp"
#include "mpcalc/homology.hpp"
#include "mpcalc/semantics.hpp"

namespace mpcalc::acceptance {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail << msg;
    }
  }
};

using Clock = std::chrono::steady_clock;

CriterionResult run_one(int id, const std::string& name, double time_budget_s,
                        const std::function<void(Check&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  Check c;
  auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (time_budget_s > 0 && r.seconds >= time_budget_s) {
    c.ok = false;
    c.detail << " exceeded time budget of " << time_budget_s << "s";
  }
  r.passed = c.ok;
  r.detail = c.detail.str();
  return r;
}

// --- criterion bodies -------------------------------------------------------

void h1_orders(Check& c) {
  const unsigned long qs[] = {2, 3, 5, 7, 11, 13};
  for (unsigned long q : qs) {
    unsigned long order = (q - 1) / std::gcd(2ul, q - 1);
    HomologyResult expect;
    if (order > 1) expect.torsion.push_back(mpz_class(order));
    HomologyResult got = homology(q, 1);
    c.require(got == expect, "H1(F" + std::to_string(q) + ") = " + got.to_string() +
                                 ", expected " + expect.to_string());
  }
}

void h0_free(Check& c) {
  for (unsigned long q : {2ul, 3ul, 5ul}) {
    HomologyResult got = homology(q, 0);
    HomologyResult expect;
    expect.free_rank = 1;
    c.require(got == expect, "H0(F" + std::to_string(q) + ") = " + got.to_string());
  }
}

void presentation_crosscheck(Check& c) {
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    c.require(presentation_h1(q) == homology(q, 1),
              "presentation vs boundary homology differ at q=" + std::to_string(q));
  }
}

void boundary_formulas(Check& c) {
  const unsigned long q = 5;
  Ring f = Ring::prime_field(q);
  std::vector<ClassKey> c2 = chain_basis(q, 2);
  std::vector<ClassKey> c1 = chain_basis(q, 1);
  Matrix d2 = boundary_matrix(q, 2);
  auto c1_index = [&](unsigned long r) {
    Matrix m = Matrix::from_ints(f, {{1, static_cast<long>(r)}});
    for (std::size_t j = 0; j < c1.size(); ++j) {
      if (c1[j].rref == m) return j;
    }
    throw Error("[1," + std::to_string(r) + "] missing from the binary basis");
  };
  for (unsigned long s = 1; s < q; ++s) {
    for (unsigned long r = 1; r < q; ++r) {
      Matrix row = Matrix::from_ints(f, {{1, static_cast<long>(s), static_cast<long>(r)}});
      std::size_t row_idx = c2.size();
      for (std::size_t i = 0; i < c2.size(); ++i) {
        if (c2[i].rref == row) {
          row_idx = i;
          break;
        }
      }
      c.require(row_idx < c2.size(), "[1,s,r] not in nondegenerate basis");
      if (row_idx == c2.size()) return;
      // Expected boundary: [1,r] - [1,s] - [1, s^-1 r], with coincidences merged.
      std::vector<long> expect(c1.size(), 0);
      Scalar sv = f.from_int(static_cast<long>(s)), rv = f.from_int(static_cast<long>(r));
      unsigned long sinv_r = f.mul(*f.inv(sv), rv).get_num().get_ui();
      expect[c1_index(r)] += 1;
      expect[c1_index(s)] -= 1;
      expect[c1_index(sinv_r)] -= 1;
      for (std::size_t j = 0; j < c1.size(); ++j) {
        c.require(d2.at(row_idx, j) == expect[j],
                  "boundary row of [1," + std::to_string(s) + "," + std::to_string(r) +
                      "] differs at column " + std::to_string(j));
      }
    }
  }
  c.require(boundary_matrix(q, 1).is_zero(), "the binary boundary map is not zero over F5");
}

void chain_sanity(Check& c) {
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul}) {
    Matrix eps = boundary_matrix(q, 0);
    Matrix d1 = boundary_matrix(q, 1);
    Matrix d2 = boundary_matrix(q, 2);
    c.require((d1 * eps).is_zero(), "eps after d1 is nonzero at q=" + std::to_string(q));
    c.require((d2 * d1).is_zero(), "d1 after d2 is nonzero at q=" + std::to_string(q));
  }
  for (unsigned long q : {2ul, 3ul}) {
    for (const ClassKey& key : enumerate_classes(q, 3)) {
      for (std::size_t j = 1; j <= 2; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          bool all =
              face_bottom(face_bottom(key, j), i) == face_bottom(face_bottom(key, i), j - 1) &&
              face_top(face_top(key, j), i) == face_top(face_top(key, i), j - 1) &&
              face_bottom(face_top(key, j), i) == face_top(face_bottom(key, i), j - 1) &&
              face_top(face_bottom(key, j), i) == face_bottom(face_top(key, i), j - 1);
          c.require(all, "face relation fails at q=" + std::to_string(q) + " on " +
                             key.to_text() + " (i=" + std::to_string(i) +
                             ", j=" + std::to_string(j) + ")");
        }
      }
    }
  }
}

void triangle(Check& c, Gen& gen, int samples) {
  Ring f5 = Ring::prime_field(5);
  for (int t = 0; t < samples; ++t) {
    Matrix m = gen.matrix(f5, 1 + gen.index(3), 1 + gen.index(4));
    c.require(triangle_check(m), "triangle fails over F5 on " + m.to_text());
  }
  Ring z = Ring::integers();
  for (int t = 0; t < samples; ++t) {
    Matrix m = gen.matrix(z, 1 + gen.index(3), 1 + gen.index(4));
    c.require(triangle_check(m), "triangle fails over Z on " + m.to_text());
  }
}

void lattice_laws(Check& c, Gen& gen, int samples) {
  for (unsigned long q : {2ul, 3ul, 5ul}) {
    Ring f = Ring::prime_field(q);
    for (int t = 0; t < samples; ++t) {
      std::size_t arity = 1 + gen.index(3);
      MatrixPair p = gen.pair(f, arity);
      MatrixPair r = gen.pair(f, arity);
      // idempotence
      c.require(canonical_form(meet(p, p).pair) == canonical_form(p), "meet idempotence");
      c.require(canonical_form(join(p, p)) == canonical_form(p), "join idempotence");
      // absorption
      c.require(canonical_form(meet(p, join(p, r)).pair) == canonical_form(p),
                "meet absorption");
      c.require(canonical_form(join(p, meet(p, r).pair)) == canonical_form(p),
                "join absorption");
      // duality involution
      c.require(canonical_form(dual(dual(p))) == canonical_form(p), "dual involution");
      // order reversal under duality
      bool fwd = decide_leq(p, r).status == LeqStatus::Proved;
      bool rev = decide_leq(dual(r), dual(p)).status == LeqStatus::Proved;
      c.require(fwd == rev, "duality does not reverse the order");
      // modular law on a <= b
      MatrixPair a = gen.pair(f, arity);
      MatrixPair b = join(a, gen.pair(f, arity));
      MatrixPair cc = gen.pair(f, arity);
      c.require(canonical_form(meet(join(a, cc), b).pair) ==
                    canonical_form(join(a, meet(b, cc).pair)),
                "modular law");
      if (!c.ok) return;
    }
  }
}

void certificates(Check& c, Gen& gen, int samples) {
  struct Setup {
    Ring ring;
    std::vector<FiniteModule> battery;
  };
  std::vector<Setup> setups;
  Ring f3 = Ring::prime_field(3);
  setups.push_back({f3, {FiniteModule(f3, {3}), FiniteModule(f3, {3, 3}),
                         FiniteModule(f3, {3, 3, 3})}});
  setups.push_back({Ring::integers(), {}});
  Ring z6 = Ring::mod_ring(6);
  setups.push_back({z6, {FiniteModule(z6, {2}), FiniteModule(z6, {6}),
                         FiniteModule(z6, {2, 6})}});
  for (const auto& setup : setups) {
    for (int t = 0; t < samples; ++t) {
      MatrixPair p = gen.pair(setup.ring, 1 + gen.index(2), 2, 2);
      CertifiedRelation rel = gen.chain(p, 1 + gen.index(3), 1, 3);
      c.require(verify(rel.cert, rel.source, rel.target),
                "chain certificate fails over " + setup.ring.to_string());
      if (!setup.battery.empty()) {
        c.require(check_presta_soundness(rel, setup.battery),
                  "semantic inclusion fails over " + setup.ring.to_string());
      }
      if (!c.ok) return;
    }
  }
}

void ev_structure(Check& c, Gen& gen, int samples) {
  Ring z6 = Ring::mod_ring(6);
  FiniteModule m(z6, {6});
  for (int t = 0; t < samples; ++t) {
    std::size_t arity = 1 + gen.index(2);
    MatrixPair p = gen.pair(z6, arity, 2, 1);
    MatrixPair q = gen.pair(z6, arity, 2, 1);
    c.require(ev_lattice_laws(p, q, m), "meet/join evaluation law fails");
    if (!c.ok) return;
  }
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    SubgroupOfPower top_eval = eval_pair(MatrixPair::top(z6, n), m);
    SubgroupOfPower bottom_eval = eval_pair(MatrixPair::bottom(z6, n), m);
    std::size_t full = 1;
    for (std::size_t i = 0; i < n; ++i) full *= m.size();
    c.require(top_eval.order() == full, "top does not evaluate to the full power");
    c.require(bottom_eval.order() == 1 && bottom_eval.contains(PowerElement(n, 0)),
              "bottom does not evaluate to zero");
  }
}

void tensor(Check& c, Gen& gen, int samples) {
  Ring z4 = Ring::mod_ring(4);
  std::vector<FiniteModule> mods = {FiniteModule(z4, {2}), FiniteModule(z4, {4})};
  for (int t = 0; t < samples; ++t) {
    MatrixPair p = gen.pair(z4, 1 + gen.index(2), 2, 2);
    CertifiedRelation rel = gen.chain(p, 1 + gen.index(3), 2, 4);
    const FiniteModule& k = mods[gen.index(2)];
    const FiniteModule& m = mods[gen.index(2)];
    c.require(tensor_annihilation(rel, k, m),
              "pure tensors do not annihilate for a certified relation");
    if (!c.ok) return;
  }
}

void census(Check& c) {
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul}) {
    Ring f = Ring::prime_field(q);
    std::vector<ClassKey> basis = chain_basis(q, 1);
    c.require(basis.size() == q - 1, "expected " + std::to_string(q - 1) +
                                         " nondegenerate binary classes over F" +
                                         std::to_string(q) + ", got " +
                                         std::to_string(basis.size()));
    for (unsigned long r = 1; r < q; ++r) {
      Matrix m = Matrix::from_ints(f, {{1, static_cast<long>(r)}});
      bool found = false;
      for (const auto& key : basis) found = found || key.rref == m;
      c.require(found, "[1," + std::to_string(r) + "] missing over F" + std::to_string(q));
    }
  }
}

}  // namespace

std::vector<CriterionResult> run_battery(std::uint64_t seed, bool quick) {
  Gen gen(seed);
  int n100 = quick ? 25 : 100;
  int n200 = quick ? 40 : 200;
  int n1000 = quick ? 100 : 1000;
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "h1-orders-by-enumeration", 30.0, h1_orders));
  out.push_back(run_one(2, "h0-is-free-of-rank-one", 1.0, h0_free));
  out.push_back(run_one(3, "h1-presentation-crosscheck", 0, presentation_crosscheck));
  out.push_back(run_one(4, "ternary-boundary-formula-f5", 0, boundary_formulas));
  out.push_back(run_one(5, "chain-complex-sanity", 0, chain_sanity));
  out.push_back(run_one(6, "triangle-isomorphism", 10.0,
                        [&](Check& c) { triangle(c, gen, n100); }));
  out.push_back(run_one(7, "lattice-laws", 30.0,
                        [&](Check& c) { lattice_laws(c, gen, n200); }));
  out.push_back(run_one(8, "certificate-soundness", 0,
                        [&](Check& c) { certificates(c, gen, n1000); }));
  out.push_back(run_one(9, "evaluation-structure", 0,
                        [&](Check& c) { ev_structure(c, gen, n100); }));
  out.push_back(run_one(10, "tensor-annihilation", 0,
                        [&](Check& c) { tensor(c, gen, n200); }));
  out.push_back(run_one(11, "nondegenerate-binary-census", 0, census));
  return out;
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
    out << buf;
    if (!r.passed && !r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
    all = all && r.passed;
  }
  out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all;
}

}  // namespace mpcalc::acceptance
