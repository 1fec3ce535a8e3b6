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

#ifndef MPCALC_SEMANTICS_HPP_
#define MPCALC_SEMANTICS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mpcalc/caps.hpp"
#include "mpcalc/pair.hpp"

namespace mpcalc {

/// Finite module over a finite ring, as a product of cyclic groups Z/d_i
/// with componentwise scalar action; each d_i divides the ring modulus.
class FiniteModule {
 public:
  FiniteModule(Ring ring, std::vector<unsigned long> cyclic_orders);

  /// Comma-separated cyclic orders, e.g. "2,4".
  static FiniteModule parse(const Ring& ring, std::string_view spec);

  const Ring& ring() const { return ring_; }
  const std::vector<unsigned long>& cyclic_orders() const { return orders_; }
  std::size_t components() const { return orders_.size(); }
  unsigned long long size() const { return size_; }
  std::string to_string() const;

  bool operator==(const FiniteModule& o) const {
    return ring_ == o.ring_ && orders_ == o.orders_;
  }

  /// Concatenation of the cyclic summands (same ring).
  friend FiniteModule direct_sum(const FiniteModule& m, const FiniteModule& n);

 private:
  Ring ring_;
  std::vector<unsigned long> orders_;
  unsigned long long size_;
};

/// A module element is a tuple of residues (one per cyclic component); an
/// element of M^n is the concatenation of n such tuples.
using PowerElement = std::vector<unsigned long>;

/// Explicitly enumerated subgroup of M^power, elements sorted.
struct SubgroupOfPower {
  FiniteModule module;
  std::size_t power;
  std::vector<PowerElement> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const PowerElement& e) const;
  bool operator==(const SubgroupOfPower& o) const {
    return module == o.module && power == o.power && elements == o.elements;
  }
};

/// { a in M^n : exists c in M^k with B c = A a } by exhaustive enumeration.
/// Requires |M|^max(n,k) within the cap.
SubgroupOfPower eval_pair(const MatrixPair& p, const FiniteModule& m, const Caps& caps = {});

/// { a in K^n : exists row vector w with w A = a and w B = 0 }. This is the
/// evaluation of the dual pair, computed by the direct formula.
SubgroupOfPower dual_eval(const MatrixPair& p, const FiniteModule& k, const Caps& caps = {});

/// Sound direction of the semantic ordering: a verified certificate forces
/// eval(source) within eval(target) on every supplied module. Rejects
/// relations whose certificate does not verify.
bool check_presta_soundness(const CertifiedRelation& rel,
                            const std::vector<FiniteModule>& modules, const Caps& caps = {});

/// eval(meet) = intersection and eval(join) = subgroup sum, on the nose.
bool ev_lattice_laws(const MatrixPair& p, const MatrixPair& q, const FiniteModule& m,
                     const Caps& caps = {});

/// True iff every pure tensor from dual_eval(dst, k) x eval_pair(src, m)
/// vanishes in K (x) M (componentwise Z/gcd(a_i, b_j)).
bool tensor_pairing_annihilates(const MatrixPair& src, const MatrixPair& dst,
                                const FiniteModule& k, const FiniteModule& m,
                                const Caps& caps = {});

/// Gate + check: the relation must verify, then its endpoints must
/// annihilate under the tensor pairing.
bool tensor_annihilation(const CertifiedRelation& rel, const FiniteModule& k,
                         const FiniteModule& m, const Caps& caps = {});

/// Subgroup axioms for an enumerated set: 0, closure under + and -.
bool is_subgroup(const SubgroupOfPower& s);

}  // namespace mpcalc

#endif  // MPCALC_SEMANTICS_HPP_
