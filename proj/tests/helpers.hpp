#pragma once

#include <random>

#include "msc2/census.hpp"
#include "msc2/iso.hpp"

namespace testutil {

using namespace msc2;

template <Field F>
typename F::Elem rand_elem(const F& f, std::mt19937_64& rng) {
  if (f.finite()) return f.element(rng() % f.size());
  long n = static_cast<long>(rng() % 13) - 6;
  long d = 1 + static_cast<long>(rng() % 4);
  return f.from_ratio(n, d);
}

inline QuadExt::Elem rand_elem(const QuadExt& f, std::mt19937_64& rng) {
  auto part = [&] {
    long n = static_cast<long>(rng() % 9) - 4;
    long d = 1 + static_cast<long>(rng() % 3);
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  };
  return {part(), part()};
}

template <Field F>
Msc<F> rand_msc(const F& f, std::mt19937_64& rng) {
  Msc<F> a = msc_zero(f);
  for (auto& x : a) x = rand_elem(f, rng);
  return a;
}

template <Field F>
Mat2<F> rand_invertible(const F& f, std::mt19937_64& rng) {
  for (;;) {
    Mat2<F> g = {rand_elem(f, rng), rand_elem(f, rng), rand_elem(f, rng), rand_elem(f, rng)};
    if (!f.is_zero(det2(f, g))) return g;
  }
}

template <Field F>
Mat2<F> mat_mul(const F& f, const Mat2<F>& g, const Mat2<F>& h) {
  return {f.add(f.mul(g[0], h[0]), f.mul(g[1], h[2])),
          f.add(f.mul(g[0], h[1]), f.mul(g[1], h[3])),
          f.add(f.mul(g[2], h[0]), f.mul(g[3], h[2])),
          f.add(f.mul(g[2], h[1]), f.mul(g[3], h[3]))};
}

template <Field F>
Mat2<F> mat_identity(const F& f) {
  return {f.one(), f.zero(), f.zero(), f.one()};
}

}  // namespace testutil
