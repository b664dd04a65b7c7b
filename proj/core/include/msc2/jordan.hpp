#pragma once

#include <array>

#include "msc2/algebra.hpp"

namespace msc2 {

template <Field F>
bool is_commutative(const F& f, const Msc<F>& A) {
  return f.eq(A[1], A[2]) && f.eq(A[5], A[6]);
}

// The 12-polynomial residual system characterising the Jordan identity
// (u*v)*u^2 = u*(v*u^2) for a 2x4 structure matrix, in the standard
// printed order; entry k of the result is equation k+1. Identical as
// polynomials in the eight entries to the direct expansion below, so the
// equivalence holds in every characteristic; commutativity is a separate
// predicate, not assumed here.
template <Field F>
std::array<typename F::Elem, 12> jordan_residuals(const F& f, const Msc<F>& A) {
  using E = typename F::Elem;
  const E &a1 = A[0], &a2 = A[1], &a3 = A[2], &a4 = A[3];
  const E &b1 = A[4], &b2 = A[5], &b3 = A[6], &b4 = A[7];
  auto m3 = [&](const E& x, const E& y, const E& z) { return f.mul(f.mul(x, y), z); };
  auto n = [&](const E& x) { return f.neg(x); };
  auto dbl = [&](const E& x) { return f.add(x, x); };
  auto s = [&](std::initializer_list<E> terms) {
    E t = f.zero();
    for (const E& u : terms) t = f.add(t, u);
    return t;
  };
  return {
      s({m3(a1, a2, b1), n(m3(a1, a3, b1)), n(m3(a4, b1, b1)), m3(a2, b1, b2)}),
      s({m3(a2, a2, b1), n(m3(a3, a3, b1)), m3(a1, a4, b1), m3(a2, b2, b2),
         n(m3(a1, a3, b3)), n(dbl(m3(a4, b1, b3))), m3(a2, b2, b3)}),
      s({dbl(m3(a2, a4, b1)), m3(a4, b2, b2), n(m3(a2, a3, b3)), n(m3(a3, a3, b3)),
         n(m3(a4, b3, b3)), n(m3(a4, b1, b4)), m3(a2, b2, b4)}),
      s({m3(a4, a4, b1), n(m3(a3, a4, b3)), m3(a4, b2, b4), n(m3(a4, b3, b4))}),
      s({m3(a2, b1, b1), m3(b1, b2, b2), n(m3(a1, b1, b3)), n(m3(b1, b1, b4))}),
      s({n(m3(a1, a3, b1)), dbl(m3(a2, b1, b2)), n(m3(a1, b2, b2)), m3(b2, b2, b2),
         m3(a1, a1, b3), m3(a2, b1, b3), n(m3(a3, b1, b3)), n(m3(a1, b2, b3)),
         m3(b2, b2, b3), n(m3(a1, b3, b3)), m3(a1, b1, b4), n(dbl(m3(b1, b3, b4)))}),
      s({n(m3(a2, a3, b1)), n(m3(a3, a3, b1)), m3(a4, b1, b2), n(m3(a3, b2, b2)),
         m3(a1, a2, b3), m3(a1, a3, b3), n(m3(a4, b1, b3)), m3(a2, b2, b3),
         n(m3(a3, b2, b3)), n(m3(a3, b3, b3)), dbl(m3(a2, b1, b4)), m3(a3, b1, b4),
         n(m3(a1, b2, b4)), dbl(m3(b2, b2, b4)), n(m3(b3, b3, b4)), n(m3(b1, b4, b4))}),
      s({n(m3(a3, a4, b1)), m3(a1, a4, b3), n(m3(a4, b3, b3)), m3(a4, b1, b4),
         n(m3(a3, b2, b4)), m3(a2, b3, b4), m3(b2, b4, b4), n(m3(b3, b4, b4))}),
      s({n(m3(a1, a1, a2)), m3(a1, a1, a3), n(m3(a2, a2, b1)), m3(a1, a4, b1),
         n(m3(a1, a3, b2)), n(m3(a4, b1, b2)), m3(a1, a2, b3), m3(a2, b1, b4)}),
      s({n(m3(a1, a2, a2)), dbl(m3(a1, a3, a3)), n(m3(a1, a1, a4)), n(m3(a2, a4, b1)),
         m3(a3, a4, b1), n(m3(a2, a2, b2)), n(m3(a2, a3, b2)), n(m3(a3, a3, b2)),
         m3(a1, a4, b2), n(m3(a4, b2, b2)), m3(a2, a3, b3), dbl(m3(a1, a4, b3)),
         n(m3(a4, b2, b3)), n(m3(a1, a3, b4)), m3(a2, b2, b4), m3(a2, b3, b4)}),
      s({m3(a2, a3, a3), m3(a3, a3, a3), n(dbl(m3(a1, a2, a4))), n(m3(a2, a4, b2)),
         m3(a2, a4, b3), dbl(m3(a3, a4, b3)), n(m3(a2, a2, b4)), n(m3(a2, a3, b4)),
         n(m3(a3, a3, b4)), m3(a1, a4, b4), n(m3(a4, b2, b4)), m3(a2, b4, b4)}),
      s({m3(a3, a3, a4), n(m3(a1, a4, a4)), m3(a4, a4, b3), n(m3(a2, a4, b4))}),
  };
}

template <Field F>
bool is_jordan(const F& f, const Msc<F>& A) {
  for (const auto& r : jordan_residuals(f, A))
    if (!f.is_zero(r)) return false;
  return true;
}

// 1-based index of the first nonzero residual; 0 if all vanish.
// Commutativity is reported separately; this indexes the residual system only.
template <Field F>
int first_violated(const F& f, const Msc<F>& A) {
  auto rs = jordan_residuals(f, A);
  for (int i = 0; i < 12; ++i)
    if (!f.is_zero(rs[i])) return i + 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Formal bivariate polynomials, dense up to degree 4 in each variable.
// Enough for the fourth-power identities of a bilinear product; products
// beyond that degree are a logic error and throw.
// ---------------------------------------------------------------------------

template <Field F>
struct Poly2 {
  std::array<typename F::Elem, 25> c;  // index 5*i + j  <->  x^i y^j
};

template <Field F>
Poly2<F> poly_zero(const F& f) {
  Poly2<F> p;
  p.c.fill(f.zero());
  return p;
}

template <Field F>
Poly2<F> poly_mono(const F& f, int i, int j) {
  Poly2<F> p = poly_zero(f);
  p.c[5 * i + j] = f.one();
  return p;
}

template <Field F>
Poly2<F> poly_add(const F& f, const Poly2<F>& p, const Poly2<F>& q) {
  Poly2<F> r = p;
  for (int i = 0; i < 25; ++i) r.c[i] = f.add(p.c[i], q.c[i]);
  return r;
}

template <Field F>
Poly2<F> poly_sub(const F& f, const Poly2<F>& p, const Poly2<F>& q) {
  Poly2<F> r = p;
  for (int i = 0; i < 25; ++i) r.c[i] = f.sub(p.c[i], q.c[i]);
  return r;
}

template <Field F>
Poly2<F> poly_scale(const F& f, const typename F::Elem& s, const Poly2<F>& p) {
  Poly2<F> r = p;
  for (int i = 0; i < 25; ++i) r.c[i] = f.mul(s, p.c[i]);
  return r;
}

template <Field F>
Poly2<F> poly_mul(const F& f, const Poly2<F>& p, const Poly2<F>& q) {
  Poly2<F> r = poly_zero(f);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (f.is_zero(p.c[5 * i + j])) continue;
      for (int k = 0; k < 5; ++k)
        for (int l = 0; l < 5; ++l) {
          if (f.is_zero(q.c[5 * k + l])) continue;
          if (i + k > 4 || j + l > 4) throw error("formal degree overflow");
          int idx = 5 * (i + k) + (j + l);
          r.c[idx] = f.add(r.c[idx], f.mul(p.c[5 * i + j], q.c[5 * k + l]));
        }
    }
  return r;
}

template <Field F>
bool poly_is_zero(const F& f, const Poly2<F>& p) {
  for (int i = 0; i < 25; ++i)
    if (!f.is_zero(p.c[i])) return false;
  return true;
}

template <Field F>
using PVec2 = std::array<Poly2<F>, 2>;

template <Field F>
PVec2<F> poly_mul_vec(const F& f, const Msc<F>& A, const PVec2<F>& u, const PVec2<F>& v) {
  std::array<Poly2<F>, 4> t = {poly_mul(f, u[0], v[0]), poly_mul(f, u[0], v[1]),
                               poly_mul(f, u[1], v[0]), poly_mul(f, u[1], v[1])};
  PVec2<F> w = {poly_zero(f), poly_zero(f)};
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 4; ++k)
      w[r] = poly_add(f, w[r], poly_scale(f, A[4 * r + k], t[k]));
  return w;
}

// Independent Jordan check: expand (u*e_i)*u^2 - u*(e_i*u^2) with u formal;
// by bilinearity, v = e1 and v = e2 suffice. Valid in every characteristic.
template <Field F>
bool jordan_direct(const F& f, const Msc<F>& A) {
  PVec2<F> u = {poly_mono(f, 1, 0), poly_mono(f, 0, 1)};
  PVec2<F> u2 = poly_mul_vec(f, A, u, u);
  Poly2<F> one = poly_mono(f, 0, 0), zero = poly_zero(f);
  for (PVec2<F> e : {PVec2<F>{one, zero}, PVec2<F>{zero, one}}) {
    PVec2<F> lhs = poly_mul_vec(f, A, poly_mul_vec(f, A, u, e), u2);
    PVec2<F> rhs = poly_mul_vec(f, A, u, poly_mul_vec(f, A, e, u2));
    for (int r = 0; r < 2; ++r)
      if (!poly_is_zero(f, poly_sub(f, lhs[r], rhs[r]))) return false;
  }
  return true;
}

// Third- and fourth-power identities with u formal:
//   u^2*u = u*u^2  and  (u^2*u)*u = u^2*u^2.
// Commutative members imply these except in characteristic 2, 3 or 5,
// where they are an independent criterion.
template <Field F>
bool is_power_associative(const F& f, const Msc<F>& A) {
  PVec2<F> u = {poly_mono(f, 1, 0), poly_mono(f, 0, 1)};
  PVec2<F> u2 = poly_mul_vec(f, A, u, u);
  PVec2<F> u2u = poly_mul_vec(f, A, u2, u);
  PVec2<F> uu2 = poly_mul_vec(f, A, u, u2);
  for (int r = 0; r < 2; ++r)
    if (!poly_is_zero(f, poly_sub(f, u2u[r], uu2[r]))) return false;
  PVec2<F> lhs = poly_mul_vec(f, A, u2u, u);
  PVec2<F> rhs = poly_mul_vec(f, A, u2, u2);
  for (int r = 0; r < 2; ++r)
    if (!poly_is_zero(f, poly_sub(f, lhs[r], rhs[r]))) return false;
  return true;
}

// The power identities above characterise power-associativity only away
// from characteristics 2, 3 and 5.
template <Field F>
bool pa_criterion_only(const F& f) {
  unsigned c = f.characteristic();
  return c == 2 || c == 3 || c == 5;
}

}  // namespace msc2
