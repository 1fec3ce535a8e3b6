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

#include "mpcalc/pair.hpp"

#include <cctype>
#include <utility>

#include "mpcalc/errors.hpp"

namespace mpcalc {

MatrixPair::MatrixPair(Matrix b, Matrix a) : b_(std::move(b)), a_(std::move(a)) {
  if (b_.ring() != a_.ring()) throw RingMismatch("pair matrices over different rings");
  if (b_.rows() != a_.rows()) {
    throw DimensionMismatch("pair needs equal row counts, got " + std::to_string(b_.rows()) +
                            " and " + std::to_string(a_.rows()));
  }
}

MatrixPair MatrixPair::system(Matrix a) {
  Matrix b(a.ring(), a.rows(), 0);
  return MatrixPair(std::move(b), std::move(a));
}

MatrixPair MatrixPair::top(const Ring& ring, std::size_t arity) {
  return system(Matrix(ring, 0, arity));
}

MatrixPair MatrixPair::bottom(const Ring& ring, std::size_t arity) {
  return system(Matrix::identity(ring, arity));
}

MatrixPair MatrixPair::normalized_b() const {
  Matrix b(ring(), rows(), 0);
  for (std::size_t j = 0; j < b_.cols(); ++j) {
    if (!b_.col(j).is_zero()) b = hstack(b, b_.col(j));
  }
  return MatrixPair(std::move(b), a_);
}

std::string MatrixPair::to_text() const {
  if (is_system()) return "[|" + a_.to_text() + "]";
  return "[" + b_.to_text() + "|" + a_.to_text() + "]";
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

MatrixPair MatrixPair::parse(const Ring& ring, std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '[' to open pair", pos);
  ++pos;
  skip_ws(text, pos);
  std::optional<Matrix> b;
  if (pos < text.size() && text[pos] != '|') b = Matrix::parse_prefix(ring, text, pos);
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '|') throw ParseError("expected '|' in pair", pos);
  ++pos;
  skip_ws(text, pos);
  Matrix a = Matrix::parse_prefix(ring, text, pos);
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']' to close pair", pos);
  ++pos;
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after pair", pos);
  if (!b) b = Matrix(ring, a.rows(), 0);
  return MatrixPair(std::move(*b), std::move(a));
}

std::string Certificate::to_text() const {
  return u.to_text() + ";" + v.to_text() + ";" + g.to_text();
}

Certificate Certificate::parse(const Ring& ring, std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
    if (text[i] == ';' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  if (parts.size() != 3) {
    throw ParseError("certificate needs three ';'-separated matrices", text.size());
  }
  return Certificate{Matrix::parse(ring, parts[0]), Matrix::parse(ring, parts[1]),
                     Matrix::parse(ring, parts[2])};
}

bool verify(const Certificate& cert, const MatrixPair& src, const MatrixPair& dst) {
  if (src.ring() != dst.ring() || cert.u.ring() != src.ring() || cert.v.ring() != src.ring() ||
      cert.g.ring() != src.ring()) {
    throw RingMismatch("certificate and pairs must share a ring");
  }
  if (src.arity() != dst.arity()) throw DimensionMismatch("certificate across different arities");
  if (cert.u.rows() != dst.rows() || cert.u.cols() != src.rows()) {
    throw DimensionMismatch("U must be " + std::to_string(dst.rows()) + "x" +
                            std::to_string(src.rows()));
  }
  if (cert.v.rows() != dst.b_width() || cert.v.cols() != src.b_width()) {
    throw DimensionMismatch("V must be " + std::to_string(dst.b_width()) + "x" +
                            std::to_string(src.b_width()));
  }
  if (cert.g.rows() != dst.b_width() || cert.g.cols() != src.arity()) {
    throw DimensionMismatch("G must be " + std::to_string(dst.b_width()) + "x" +
                            std::to_string(src.arity()));
  }
  return cert.u * src.b() == dst.b() * cert.v &&
         cert.u * src.a() == dst.a() + dst.b() * cert.g;
}

namespace {

CertifiedRelation checked(MatrixPair src, MatrixPair dst, Certificate cert) {
  CertifiedRelation rel{std::move(src), std::move(dst), std::move(cert)};
  if (!verify(rel.cert, rel.source, rel.target)) {
    throw Error("internal: constructed certificate failed verification");
  }
  return rel;
}

}  // namespace

CertifiedRelation identity_relation(const MatrixPair& p) {
  const Ring& ring = p.ring();
  return checked(p, p,
                 Certificate{Matrix::identity(ring, p.rows()),
                             Matrix::identity(ring, p.b_width()),
                             Matrix::zero(ring, p.b_width(), p.arity())});
}

CertifiedRelation rod_left_multiply(const MatrixPair& p, const Matrix& u) {
  if (u.cols() != p.rows()) throw DimensionMismatch("U needs " + std::to_string(p.rows()) + " columns");
  MatrixPair target(u * p.b(), u * p.a());
  const Ring& ring = p.ring();
  return checked(p, std::move(target),
                 Certificate{u, Matrix::identity(ring, p.b_width()),
                             Matrix::zero(ring, p.b_width(), p.arity())});
}

CertifiedRelation rod_right_multiply(const MatrixPair& p, const Matrix& v) {
  if (v.rows() != p.b_width()) throw DimensionMismatch("V needs " + std::to_string(p.b_width()) + " rows");
  MatrixPair source(p.b() * v, p.a());
  const Ring& ring = p.ring();
  return checked(std::move(source), p,
                 Certificate{Matrix::identity(ring, p.rows()), v,
                             Matrix::zero(ring, p.b_width(), p.arity())});
}

CertifiedRelation rod_translate(const MatrixPair& p, const Matrix& g) {
  if (g.rows() != p.b_width() || g.cols() != p.arity()) {
    throw DimensionMismatch("G must be " + std::to_string(p.b_width()) + "x" +
                            std::to_string(p.arity()));
  }
  MatrixPair source(p.b(), p.a() + p.b() * g);
  const Ring& ring = p.ring();
  return checked(std::move(source), p,
                 Certificate{Matrix::identity(ring, p.rows()),
                             Matrix::identity(ring, p.b_width()), g});
}

CertifiedRelation compose(const CertifiedRelation& first, const CertifiedRelation& second) {
  if (first.target != second.source) {
    throw ChainMismatch("compose: first.target differs from second.source");
  }
  Certificate cert{second.cert.u * first.cert.u, second.cert.v * first.cert.v,
                   second.cert.g + second.cert.v * first.cert.g};
  return checked(first.source, second.target, std::move(cert));
}

std::array<CertifiedRelation, 3> decompose(const CertifiedRelation& rel) {
  if (!verify(rel.cert, rel.source, rel.target)) {
    throw UnverifiedCertificate("decompose: relation does not verify");
  }
  CertifiedRelation step1 = rod_left_multiply(rel.source, rel.cert.u);
  MatrixPair translated(rel.target.b(), rel.target.a() + rel.target.b() * rel.cert.g);
  CertifiedRelation step2 = rod_right_multiply(translated, rel.cert.v);
  if (step2.source != step1.target) {
    throw Error("internal: decompose chain does not connect");
  }
  CertifiedRelation step3 = rod_translate(rel.target, rel.cert.g);
  return {std::move(step1), std::move(step2), std::move(step3)};
}

MeetResult meet(const MatrixPair& p, const MatrixPair& q) {
  if (p.ring() != q.ring()) throw RingMismatch("meet over different rings");
  if (p.arity() != q.arity()) throw DimensionMismatch("meet across arities");
  const Ring& ring = p.ring();
  std::size_t m = p.rows(), k = p.b_width();
  std::size_t m2 = q.rows(), k2 = q.b_width();
  std::size_t n = p.arity();
  Matrix b = block2x2(p.b(), Matrix::zero(ring, m, k2), Matrix::zero(ring, m2, k), q.b());
  Matrix a = vstack(p.a(), q.a());
  MatrixPair inf(std::move(b), std::move(a));
  CertifiedRelation left =
      checked(inf, p,
              Certificate{hstack(Matrix::identity(ring, m), Matrix::zero(ring, m, m2)),
                          hstack(Matrix::identity(ring, k), Matrix::zero(ring, k, k2)),
                          Matrix::zero(ring, k, n)});
  CertifiedRelation right =
      checked(inf, q,
              Certificate{hstack(Matrix::zero(ring, m2, m), Matrix::identity(ring, m2)),
                          hstack(Matrix::zero(ring, k2, k), Matrix::identity(ring, k2)),
                          Matrix::zero(ring, k2, n)});
  return MeetResult{std::move(inf), std::move(left), std::move(right)};
}

MatrixPair join(const MatrixPair& p, const MatrixPair& q) {
  if (p.ring() != q.ring()) throw RingMismatch("join over different rings");
  if (p.arity() != q.arity()) throw DimensionMismatch("join across arities");
  const Ring& ring = p.ring();
  std::size_t m = p.rows(), k = p.b_width();
  std::size_t m2 = q.rows(), k2 = q.b_width();
  std::size_t n = p.arity();
  Matrix id = Matrix::identity(ring, n);
  Matrix row1 = hstack(hstack(p.b(), p.a()), Matrix::zero(ring, m, k2 + n));
  Matrix row2 = hstack(Matrix::zero(ring, m2, k + n), hstack(q.b(), q.a()));
  Matrix row3 = hstack(hstack(Matrix::zero(ring, n, k), id),
                       hstack(Matrix::zero(ring, n, k2), id));
  Matrix b = vstack(vstack(row1, row2), row3);
  Matrix a = vstack(Matrix::zero(ring, m + m2, n), id);
  return MatrixPair(std::move(b), std::move(a));
}

MatrixPair dual(const MatrixPair& p) {
  const Ring& ring = p.ring();
  Matrix b = vstack(p.b().transpose(), p.a().transpose());
  Matrix a = vstack(Matrix::zero(ring, p.b_width(), p.arity()),
                    Matrix::identity(ring, p.arity()));
  return MatrixPair(std::move(b), std::move(a));
}

std::optional<Matrix> is_top(const MatrixPair& p) { return solve_left(p.b(), p.a()); }

std::optional<Matrix> is_bottom(const MatrixPair& p) {
  const Ring& ring = p.ring();
  std::size_t n = p.arity();
  Matrix c = hstack(p.b(), p.a());
  Matrix d = hstack(Matrix::zero(ring, n, p.b_width()), Matrix::identity(ring, n));
  auto x = solve_left(c.transpose(), d.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

SystemForm to_system(const MatrixPair& p) {
  if (!p.ring().is_field()) {
    throw NotAField("system reduction requires a field, got " + p.ring().to_string());
  }
  const Ring& ring = p.ring();
  std::size_t m = p.rows(), k = p.b_width(), n = p.arity();
  Matrix c = generalized_inverse(p.b());
  Matrix e = p.b() * c;
  Matrix id_m = Matrix::identity(ring, m);
  Matrix a_prime = (id_m - e) * p.a();
  RrefResult rr = rref(a_prime);

  // Upward: p <= (0 | A') <= (| A') <= (| R).
  CertifiedRelation u1 = rod_left_multiply(p, id_m - e);
  CertifiedRelation u2 = rod_right_multiply(MatrixPair::system(a_prime), Matrix(ring, 0, k));
  CertifiedRelation u3 =
      checked(MatrixPair::system(a_prime), MatrixPair::system(rr.r),
              Certificate{rr.p, Matrix(ring, 0, 0), Matrix::zero(ring, 0, n)});
  CertifiedRelation into = compose(compose(u1, u2), u3);

  // Downward: (| R) <= (| A') <= (0_mxm | A') <= (E | A') <= (E | A) <= p.
  auto x = solve_left(rr.r.transpose(), a_prime.transpose());
  if (!x) throw Error("internal: row space lost during reduction");
  CertifiedRelation d0 =
      checked(MatrixPair::system(rr.r), MatrixPair::system(a_prime),
              Certificate{x->transpose(), Matrix(ring, 0, 0), Matrix::zero(ring, 0, n)});
  CertifiedRelation d1 =
      rod_right_multiply(MatrixPair(Matrix::zero(ring, m, m), a_prime), Matrix(ring, m, 0));
  CertifiedRelation d2 = rod_right_multiply(MatrixPair(e, a_prime), Matrix::zero(ring, m, m));
  CertifiedRelation d3 = rod_translate(MatrixPair(e, p.a()), -p.a());
  CertifiedRelation d4 = rod_right_multiply(p, c);
  CertifiedRelation from = compose(compose(compose(d0, d1), d2), compose(d3, d4));

  return SystemForm{rr.r, std::move(into), std::move(from)};
}

Matrix canonical_form(const MatrixPair& p) { return to_system(p).coeffs; }

namespace {

// The defining equations U B = B' V, U A = A' + B' G, read as one linear
// system over the ring in the entries of U, V, G.
LeqResult decide_leq_linear(const MatrixPair& p, const MatrixPair& q) {
  const Ring& ring = p.ring();
  std::size_t m = p.rows(), k = p.b_width(), n = p.arity();
  std::size_t m2 = q.rows(), k2 = q.b_width();
  std::size_t nu = m2 * m, nv = k2 * k, ng = k2 * n;
  std::size_t unknowns = nu + nv + ng;
  std::size_t equations = m2 * k + m2 * n;
  Matrix coeff(ring, equations, unknowns);
  Matrix rhs(ring, equations, 1);
  auto u_idx = [&](std::size_t i, std::size_t t) { return i * m + t; };
  auto v_idx = [&](std::size_t s, std::size_t j) { return nu + s * k + j; };
  auto g_idx = [&](std::size_t s, std::size_t j) { return nu + nv + s * n + j; };
  std::size_t eq = 0;
  for (std::size_t i = 0; i < m2; ++i) {
    for (std::size_t j = 0; j < k; ++j, ++eq) {
      for (std::size_t t = 0; t < m; ++t) coeff.set(eq, u_idx(i, t), p.b().at(t, j));
      for (std::size_t s = 0; s < k2; ++s)
        coeff.set(eq, v_idx(s, j), ring.neg(q.b().at(i, s)));
    }
  }
  for (std::size_t i = 0; i < m2; ++i) {
    for (std::size_t j = 0; j < n; ++j, ++eq) {
      for (std::size_t t = 0; t < m; ++t) coeff.set(eq, u_idx(i, t), p.a().at(t, j));
      for (std::size_t s = 0; s < k2; ++s)
        coeff.set(eq, g_idx(s, j), ring.neg(q.b().at(i, s)));
      rhs.set(eq, 0, q.a().at(i, j));
    }
  }
  auto sol = solve_left(coeff, rhs);
  if (!sol) return LeqResult{LeqStatus::Disproved, std::nullopt};
  Matrix u(ring, m2, m), v(ring, k2, k), g(ring, k2, n);
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t t = 0; t < m; ++t) u.set(i, t, sol->at(u_idx(i, t), 0));
  for (std::size_t s = 0; s < k2; ++s)
    for (std::size_t j = 0; j < k; ++j) v.set(s, j, sol->at(v_idx(s, j), 0));
  for (std::size_t s = 0; s < k2; ++s)
    for (std::size_t j = 0; j < n; ++j) g.set(s, j, sol->at(g_idx(s, j), 0));
  Certificate cert{std::move(u), std::move(v), std::move(g)};
  if (!verify(cert, p, q)) throw Error("internal: solved certificate failed verification");
  return LeqResult{LeqStatus::Proved, std::move(cert)};
}

LeqResult decide_leq_field(const MatrixPair& p, const MatrixPair& q) {
  const Ring& ring = p.ring();
  SystemForm sp = to_system(p);
  SystemForm sq = to_system(q);
  // [p] <= [q] iff the solution sets nest, i.e. the row space of q's
  // coefficients sits inside that of p's.
  auto x = solve_left(sp.coeffs.transpose(), sq.coeffs.transpose());
  if (!x) return LeqResult{LeqStatus::Disproved, std::nullopt};
  CertifiedRelation mid = CertifiedRelation{
      MatrixPair::system(sp.coeffs), MatrixPair::system(sq.coeffs),
      Certificate{x->transpose(), Matrix(ring, 0, 0), Matrix::zero(ring, 0, p.arity())}};
  if (!verify(mid.cert, mid.source, mid.target)) {
    throw Error("internal: system containment certificate failed");
  }
  CertifiedRelation full = compose(compose(sp.into_system, mid), sq.from_system);
  return LeqResult{LeqStatus::Proved, full.cert};
}

}  // namespace

LeqResult decide_leq(const MatrixPair& p, const MatrixPair& q) {
  if (p.ring() != q.ring()) throw RingMismatch("decide_leq over different rings");
  if (p.arity() != q.arity()) throw DimensionMismatch("decide_leq across arities");
  if (p.ring().is_field()) return decide_leq_field(p, q);
  return decide_leq_linear(p, q);
}

namespace {

bool is_diagonal(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m.ring().is_zero(m.at(i, j))) return false;
  return true;
}

}  // namespace

std::vector<std::pair<Scalar, Matrix>> pid_reduce(const MatrixPair& p) {
  if (!p.ring().is_euclidean()) {
    throw NotEuclidean("pid_reduce requires a Euclidean ring, got " + p.ring().to_string());
  }
  // An already-diagonal left matrix splits as it stands; otherwise
  // diagonalize through the Smith form.
  SnfResult snf = is_diagonal(p.b())
                      ? SnfResult{p.b(), Matrix::identity(p.ring(), p.rows()),
                                  Matrix::identity(p.ring(), p.b_width())}
                      : smith_normal_form(p.b());
  Matrix pa = snf.p * p.a();
  std::size_t bound = std::min(p.rows(), p.b_width());
  std::vector<std::pair<Scalar, Matrix>> out;
  out.reserve(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    Scalar d = i < bound ? snf.d.at(i, i) : p.ring().zero();
    out.emplace_back(d, pa.row(i));
  }
  return out;
}

RingHom RingHom::make(const Ring& from, const Ring& to) {
  if (from == to) return RingHom(from, to);
  if (from.kind() == RingKind::Integers &&
      (to.kind() == RingKind::ModRing || to.kind() == RingKind::PrimeField)) {
    return RingHom(from, to);
  }
  if (from.kind() == RingKind::ModRing &&
      (to.kind() == RingKind::ModRing || to.kind() == RingKind::PrimeField) &&
      from.modulus() % to.modulus() == 0) {
    return RingHom(from, to);
  }
  throw UnsupportedHom("no supported morphism " + from.to_string() + " -> " + to.to_string());
}

Matrix RingHom::map(const Matrix& m) const {
  if (m.ring() != from_) throw RingMismatch("matrix not over the morphism's source ring");
  return m.map_entries(to_, [&](const Scalar& v) { return to_.canonical(v); });
}

MatrixPair map_pair(const RingHom& f, const MatrixPair& p) {
  return MatrixPair(f.map(p.b()), f.map(p.a()));
}

Certificate map_certificate(const RingHom& f, const Certificate& c) {
  return Certificate{f.map(c.u), f.map(c.v), f.map(c.g)};
}

CertifiedRelation map_relation(const RingHom& f, const CertifiedRelation& rel) {
  return checked(map_pair(f, rel.source), map_pair(f, rel.target),
                 map_certificate(f, rel.cert));
}

CertifiedRelation system_split(const CertifiedRelation& rel, std::size_t lead_cols) {
  if (!verify(rel.cert, rel.source, rel.target)) {
    throw UnverifiedCertificate("system_split: relation does not verify");
  }
  if (!rel.source.is_system()) throw Error("system_split: source must be a system");
  std::size_t n = lead_cols;
  std::size_t total = rel.source.arity();
  if (n > total) throw DimensionMismatch("system_split: lead column count exceeds arity");
  std::size_t k = total - n;
  const Ring& ring = rel.source.ring();
  const Matrix& full_a = rel.source.a();
  Matrix a(full_a.prefix_cols(n));
  Matrix a2(ring, full_a.rows(), k);
  for (std::size_t i = 0; i < full_a.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) a2.set(i, j, full_a.at(i, n + j));
  const Matrix& c_full = rel.target.a();
  Matrix c1(c_full.prefix_cols(n));
  Matrix c2(ring, c_full.rows(), k);
  for (std::size_t i = 0; i < c_full.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) c2.set(i, j, c_full.at(i, n + j));
  Matrix g1(rel.cert.g.prefix_cols(n));
  Matrix g2(ring, rel.cert.g.rows(), k);
  for (std::size_t i = 0; i < rel.cert.g.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) g2.set(i, j, rel.cert.g.at(i, n + j));

  MatrixPair src(a, a2);
  MatrixPair dst(hstack(rel.target.b(), c1), c2);
  Certificate cert{rel.cert.u, vstack(g1, Matrix::identity(ring, n)),
                   vstack(g2, Matrix::zero(ring, n, k))};
  return checked(std::move(src), std::move(dst), std::move(cert));
}

}  // namespace mpcalc
