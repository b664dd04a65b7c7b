#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msc2/scalar.hpp"

namespace msc2 {

// A two-dimensional algebra is the 2x4 matrix of structure constants
//   (a1 a2 a3 a4; b1 b2 b3 b4)
// acting on u (x) v with Kronecker coordinate order (1,1),(1,2),(2,1),(2,2):
//   (u*v)_1 = a1*u1v1 + a2*u1v2 + a3*u2v1 + a4*u2v2, likewise row 2.

template <Field F>
using Vec2 = std::array<typename F::Elem, 2>;

template <Field F>
using Mat2 = std::array<typename F::Elem, 4>;  // row-major (g11,g12,g21,g22)

template <Field F>
using Msc = std::array<typename F::Elem, 8>;

template <Field F>
using Mat4 = std::array<typename F::Elem, 16>;

template <Field F>
bool elem_eq(const F& f, const typename F::Elem& x, const typename F::Elem& y) {
  return f.eq(x, y);
}

template <Field F>
bool msc_eq(const F& f, const Msc<F>& x, const Msc<F>& y) {
  for (int i = 0; i < 8; ++i)
    if (!f.eq(x[i], y[i])) return false;
  return true;
}

template <Field F>
bool msc_is_zero(const F& f, const Msc<F>& a) {
  for (int i = 0; i < 8; ++i)
    if (!f.is_zero(a[i])) return false;
  return true;
}

template <Field F>
Msc<F> msc_zero(const F& f) {
  Msc<F> z;
  z.fill(f.zero());
  return z;
}

// Dense code of an MSC over a finite field: first entry most significant, so
// code order equals lexicographic order on the matrix entries.
template <Field F>
std::uint64_t msc_code(const F& f, const Msc<F>& a) {
  std::uint64_t c = 0;
  for (int i = 0; i < 8; ++i) c = c * f.size() + f.index(a[i]);
  return c;
}

template <Field F>
Msc<F> msc_from_code(const F& f, std::uint64_t code) {
  Msc<F> a = msc_zero(f);
  for (int i = 7; i >= 0; --i) {
    a[i] = f.element(code % f.size());
    code /= f.size();
  }
  return a;
}

template <Field F>
Vec2<F> multiply(const F& f, const Msc<F>& a, const Vec2<F>& u, const Vec2<F>& v) {
  std::array<typename F::Elem, 4> t = {f.mul(u[0], v[0]), f.mul(u[0], v[1]),
                                       f.mul(u[1], v[0]), f.mul(u[1], v[1])};
  Vec2<F> w = {f.zero(), f.zero()};
  for (int k = 0; k < 4; ++k) {
    w[0] = f.add(w[0], f.mul(a[k], t[k]));
    w[1] = f.add(w[1], f.mul(a[4 + k], t[k]));
  }
  return w;
}

template <Field F>
Mat4<F> kron(const F& f, const Mat2<F>& g, const Mat2<F>& h) {
  Mat4<F> k;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2)
          k[(2 * i1 + i2) * 4 + (2 * j1 + j2)] = f.mul(g[2 * i1 + j1], h[2 * i2 + j2]);
  return k;
}

template <Field F>
typename F::Elem det2(const F& f, const Mat2<F>& g) {
  return f.sub(f.mul(g[0], g[3]), f.mul(g[1], g[2]));
}

template <Field F>
Mat2<F> inv2(const F& f, const Mat2<F>& g) {
  typename F::Elem d = det2(f, g);
  if (f.is_zero(d)) throw error("singular 2x2 matrix");
  return {f.div(g[3], d), f.neg(f.div(g[1], d)), f.neg(f.div(g[2], d)), f.div(g[0], d)};
}

// A' = g A (g^-1 (x) g^-1); the new structure constants after the basis
// change e' = g e. Throws if g is singular.
template <Field F>
Msc<F> basis_change(const F& f, const Msc<F>& a, const Mat2<F>& g) {
  Mat2<F> gi = inv2(f, g);
  Mat4<F> k = kron(f, gi, gi);
  std::array<std::array<typename F::Elem, 4>, 2> ak;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) {
      typename F::Elem s = f.zero();
      for (int t = 0; t < 4; ++t) s = f.add(s, f.mul(a[4 * r + t], k[4 * t + c]));
      ak[r][c] = s;
    }
  Msc<F> out;
  for (int c = 0; c < 4; ++c) {
    out[c] = f.add(f.mul(g[0], ak[0][c]), f.mul(g[1], ak[1][c]));
    out[4 + c] = f.add(f.mul(g[2], ak[0][c]), f.mul(g[3], ak[1][c]));
  }
  return out;
}

// Inversion-free orbit test: b = g . a  iff  b (g (x) g) = g a  with det g != 0.
template <Field F>
bool act_check(const F& f, const Msc<F>& a, const Msc<F>& b, const Mat2<F>& g) {
  if (f.is_zero(det2(f, g))) return false;
  Mat4<F> k = kron(f, g, g);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) {
      typename F::Elem lhs = f.zero();
      for (int t = 0; t < 4; ++t) lhs = f.add(lhs, f.mul(b[4 * r + t], k[4 * t + c]));
      typename F::Elem rhs =
          r == 0 ? f.add(f.mul(g[0], a[c]), f.mul(g[1], a[4 + c]))
                 : f.add(f.mul(g[2], a[c]), f.mul(g[3], a[4 + c]));
      if (!f.eq(lhs, rhs)) return false;
    }
  return true;
}

// Rank of the 2x4 coefficient matrix (0, 1, or 2).
template <Field F>
int msc_rank(const F& f, const Msc<F>& a) {
  bool top = false, bot = false;
  for (int c = 0; c < 4; ++c) {
    if (!f.is_zero(a[c])) top = true;
    if (!f.is_zero(a[4 + c])) bot = true;
  }
  if (!top && !bot) return 0;
  if (!top || !bot) return 1;
  for (int c = 0; c < 4; ++c)
    for (int d = c + 1; d < 4; ++d) {
      typename F::Elem m = f.sub(f.mul(a[c], a[4 + d]), f.mul(a[d], a[4 + c]));
      if (!f.is_zero(m)) return 2;
    }
  return 1;
}

template <Field F>
std::string msc_str(const F& f, const Msc<F>& a) {
  std::string s;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (c) s += ",";
      s += f.str(a[4 * r + c]);
    }
    if (r == 0) s += ";";
  }
  return s;
}

template <Field F>
std::optional<Msc<F>> parse_msc(const F& f, std::string_view sv) {
  std::string s;
  for (char c : sv)
    if (c != ' ') s.push_back(c);
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else
      cur.push_back(c);
  }
  parts.push_back(cur);
  if (parts.size() != 8) return std::nullopt;
  std::size_t semi = s.find(';');
  if (std::count(s.begin(), s.end(), ';') != 1) return std::nullopt;
  if (std::count(s.begin(), s.begin() + semi, ',') != 3) return std::nullopt;
  Msc<F> out = msc_zero(f);
  for (int i = 0; i < 8; ++i) {
    auto e = f.parse(parts[i]);
    if (!e) return std::nullopt;
    out[i] = *e;
  }
  return out;
}

template <Field Base, Field Ext>
Msc<Ext> lift_msc(const Base& bf, const Ext& ef, const Msc<Base>& a) {
  Msc<Ext> out = msc_zero(ef);
  for (int i = 0; i < 8; ++i) out[i] = lift(bf, ef, a[i]);
  return out;
}

}  // namespace msc2
