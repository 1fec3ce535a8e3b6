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

#include "mpcalc/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "mpcalc/errors.hpp"

namespace mpcalc {

FiniteModule::FiniteModule(Ring ring, std::vector<unsigned long> cyclic_orders)
    : ring_(std::move(ring)), orders_(std::move(cyclic_orders)), size_(1) {
  if (!ring_.is_finite()) {
    throw UnsupportedRing("finite modules require a finite ring, got " + ring_.to_string());
  }
  for (unsigned long d : orders_) {
    if (d == 0 || ring_.modulus() % d != 0) {
      throw Error("cyclic order " + std::to_string(d) + " does not divide the modulus of " +
                  ring_.to_string());
    }
    size_ *= d;
  }
}

FiniteModule FiniteModule::parse(const Ring& ring, std::string_view spec) {
  std::vector<unsigned long> orders;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    orders.push_back(std::stoul(std::string(spec.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  if (orders.empty()) throw ParseError("module spec needs at least one cyclic order", 0);
  return FiniteModule(ring, std::move(orders));
}

std::string FiniteModule::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out << "(+)";
    out << "Z/" << orders_[i];
  }
  return out.str();
}

FiniteModule direct_sum(const FiniteModule& m, const FiniteModule& n) {
  if (m.ring_ != n.ring_) throw RingMismatch("direct sum over different rings");
  std::vector<unsigned long> orders = m.orders_;
  orders.insert(orders.end(), n.orders_.begin(), n.orders_.end());
  return FiniteModule(m.ring_, std::move(orders));
}

bool SubgroupOfPower::contains(const PowerElement& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

namespace {

// Raw residue view of a matrix over a finite ring.
std::vector<std::vector<unsigned long>> residues(const Matrix& m) {
  std::vector<std::vector<unsigned long>> out(m.rows(), std::vector<unsigned long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).get_num().get_ui();
  return out;
}

void check_cap(unsigned long long base, std::size_t exponent, const Caps& caps) {
  unsigned long long total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && total > caps.eval_cap / base) {
      throw ScaleCapExceeded("enumeration of " + std::to_string(base) + "^" +
                             std::to_string(exponent) + " tuples exceeds the cap");
    }
    total *= base;
  }
  if (total > caps.eval_cap) {
    throw ScaleCapExceeded("enumeration exceeds the cap");
  }
}

// Decodes tuple index `idx` into `count` module elements appended to `out`.
void decode(unsigned long long idx, const std::vector<unsigned long>& orders, std::size_t count,
            PowerElement& out) {
  out.clear();
  out.resize(count * orders.size());
  for (std::size_t e = 0; e < count; ++e) {
    for (std::size_t c = 0; c < orders.size(); ++c) {
      out[e * orders.size() + c] = idx % orders[c];
      idx /= orders[c];
    }
  }
}

unsigned long long power(unsigned long long base, std::size_t exp) {
  unsigned long long r = 1;
  while (exp--) r *= base;
  return r;
}

// rows x cols residue matrix applied to a vector of `cols` module elements.
PowerElement apply(const std::vector<std::vector<unsigned long>>& mat, std::size_t rows,
                   std::size_t cols, const PowerElement& vec,
                   const std::vector<unsigned long>& orders) {
  std::size_t t = orders.size();
  PowerElement out(rows * t, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      unsigned long long e = mat[i][j];
      for (std::size_t c = 0; c < t; ++c) {
        out[i * t + c] = (out[i * t + c] + (e % orders[c]) * vec[j * t + c]) % orders[c];
      }
    }
  }
  return out;
}

void check_pair_module(const MatrixPair& p, const FiniteModule& m) {
  if (!p.ring().is_finite()) {
    throw UnsupportedRing("evaluation requires a finite ring, got " + p.ring().to_string());
  }
  if (p.ring() != m.ring()) {
    throw RingMismatch("pair over " + p.ring().to_string() + " evaluated in a module over " +
                       m.ring().to_string());
  }
}

}  // namespace

namespace {

// Mixed-radix code of a tuple of `count` module elements; fits in 64 bits
// whenever |M|^count does, which the caps guarantee at desk scale.
unsigned long long encode(const PowerElement& tuple, const std::vector<unsigned long>& orders,
                          std::size_t count) {
  unsigned long long code = 0, radix = 1;
  std::size_t t = orders.size();
  for (std::size_t e = 0; e < count; ++e) {
    for (std::size_t c = 0; c < t; ++c) {
      code += tuple[e * t + c] * radix;
      radix *= orders[c];
    }
  }
  return code;
}

void check_encodable(unsigned long long size, std::size_t count) {
  unsigned long long bound = 1;
  for (std::size_t i = 0; i < count; ++i) {
    if (size != 0 && bound > (1ull << 62) / size) {
      throw ScaleCapExceeded("tuple space too large to index");
    }
    bound *= size;
  }
}

}  // namespace

SubgroupOfPower eval_pair(const MatrixPair& p, const FiniteModule& m, const Caps& caps) {
  check_pair_module(p, m);
  std::size_t n = p.arity(), k = p.b_width(), rows = p.rows();
  check_cap(m.size(), std::max(n, k), caps);
  check_encodable(m.size(), rows);
  const auto& orders = m.cyclic_orders();
  auto b = residues(p.b());
  auto a = residues(p.a());

  std::vector<unsigned long long> reachable;  // codes of { B c : c in M^k }
  reachable.reserve(power(m.size(), k));
  PowerElement c;
  for (unsigned long long idx = 0; idx < power(m.size(), k); ++idx) {
    decode(idx, orders, k, c);
    reachable.push_back(encode(apply(b, rows, k, c, orders), orders, rows));
  }
  std::sort(reachable.begin(), reachable.end());
  reachable.erase(std::unique(reachable.begin(), reachable.end()), reachable.end());
  SubgroupOfPower out{m, n, {}};
  PowerElement v;
  for (unsigned long long idx = 0; idx < power(m.size(), n); ++idx) {
    decode(idx, orders, n, v);
    unsigned long long code = encode(apply(a, rows, n, v, orders), orders, rows);
    if (std::binary_search(reachable.begin(), reachable.end(), code)) out.elements.push_back(v);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

SubgroupOfPower dual_eval(const MatrixPair& p, const FiniteModule& k, const Caps& caps) {
  check_pair_module(p, k);
  std::size_t n = p.arity(), rows = p.rows();
  check_cap(k.size(), rows, caps);
  const auto& orders = k.cyclic_orders();
  // Row-vector action: w A and w B are computed through transposes.
  auto at = residues(p.a().transpose());
  auto bt = residues(p.b().transpose());
  std::set<PowerElement> image;
  PowerElement w;
  for (unsigned long long idx = 0; idx < power(k.size(), rows); ++idx) {
    decode(idx, orders, rows, w);
    PowerElement wb = apply(bt, p.b_width(), rows, w, orders);
    if (!std::all_of(wb.begin(), wb.end(), [](unsigned long x) { return x == 0; })) continue;
    image.insert(apply(at, n, rows, w, orders));
  }
  SubgroupOfPower out{k, n, {image.begin(), image.end()}};
  return out;
}

bool check_presta_soundness(const CertifiedRelation& rel,
                            const std::vector<FiniteModule>& modules, const Caps& caps) {
  if (!verify(rel.cert, rel.source, rel.target)) {
    throw UnverifiedCertificate("refusing to evaluate an unverified relation");
  }
  for (const auto& m : modules) {
    SubgroupOfPower lo = eval_pair(rel.source, m, caps);
    SubgroupOfPower hi = eval_pair(rel.target, m, caps);
    if (!std::includes(hi.elements.begin(), hi.elements.end(), lo.elements.begin(),
                       lo.elements.end())) {
      return false;
    }
  }
  return true;
}

bool ev_lattice_laws(const MatrixPair& p, const MatrixPair& q, const FiniteModule& m,
                     const Caps& caps) {
  SubgroupOfPower ep = eval_pair(p, m, caps);
  SubgroupOfPower eq = eval_pair(q, m, caps);
  SubgroupOfPower emeet = eval_pair(meet(p, q).pair, m, caps);
  SubgroupOfPower ejoin = eval_pair(join(p, q), m, caps);

  std::vector<PowerElement> inter;
  std::set_intersection(ep.elements.begin(), ep.elements.end(), eq.elements.begin(),
                        eq.elements.end(), std::back_inserter(inter));
  if (inter != emeet.elements) return false;

  const auto& orders = m.cyclic_orders();
  std::size_t t = orders.size();
  std::set<PowerElement> sum;
  for (const auto& x : ep.elements) {
    for (const auto& y : eq.elements) {
      PowerElement z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % orders[i % t];
      sum.insert(std::move(z));
    }
  }
  return std::vector<PowerElement>(sum.begin(), sum.end()) == ejoin.elements;
}

bool tensor_pairing_annihilates(const MatrixPair& src, const MatrixPair& dst,
                                const FiniteModule& k, const FiniteModule& m,
                                const Caps& caps) {
  if (src.arity() != dst.arity()) throw DimensionMismatch("tensor pairing across arities");
  SubgroupOfPower left = dual_eval(dst, k, caps);
  SubgroupOfPower right = eval_pair(src, m, caps);
  std::size_t n = src.arity();
  std::size_t tk = k.components(), tm = m.components();
  // K (x) M has components Z/gcd(a_i, b_j).
  std::vector<std::vector<unsigned long>> g(tk, std::vector<unsigned long>(tm));
  for (std::size_t i = 0; i < tk; ++i)
    for (std::size_t j = 0; j < tm; ++j)
      g[i][j] = std::gcd(k.cyclic_orders()[i], m.cyclic_orders()[j]);
  for (const auto& a : left.elements) {
    for (const auto& b : right.elements) {
      for (std::size_t i = 0; i < tk; ++i) {
        for (std::size_t j = 0; j < tm; ++j) {
          unsigned long long acc = 0;
          for (std::size_t l = 0; l < n; ++l) acc += a[l * tk + i] * b[l * tm + j];
          if (acc % g[i][j] != 0) return false;
        }
      }
    }
  }
  return true;
}

bool tensor_annihilation(const CertifiedRelation& rel, const FiniteModule& k,
                         const FiniteModule& m, const Caps& caps) {
  if (!verify(rel.cert, rel.source, rel.target)) {
    throw UnverifiedCertificate("refusing to evaluate an unverified relation");
  }
  return tensor_pairing_annihilates(rel.source, rel.target, k, m, caps);
}

bool is_subgroup(const SubgroupOfPower& s) {
  const auto& orders = s.module.cyclic_orders();
  std::size_t t = orders.size();
  PowerElement zero(s.power * t, 0);
  if (!s.contains(zero)) return false;
  for (const auto& x : s.elements) {
    PowerElement neg(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      unsigned long d = orders[i % t];
      neg[i] = (d - x[i]) % d;
    }
    if (!s.contains(neg)) return false;
    for (const auto& y : s.elements) {
      PowerElement z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % orders[i % t];
      if (!s.contains(z)) return false;
    }
  }
  return true;
}

}  // namespace mpcalc
