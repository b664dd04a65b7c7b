#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "msc2/catalog.hpp"
#include "msc2/jordan.hpp"

namespace msc2 {

template <Field F>
Mat2<F> mat_from_index(const F& f, std::uint64_t idx) {
  Mat2<F> g = {f.zero(), f.zero(), f.zero(), f.zero()};
  for (int i = 3; i >= 0; --i) {
    g[i] = f.element(idx % f.size());
    idx /= f.size();
  }
  return g;
}

// First witness g (in matrix-index order, first entry most significant) with
// B(g (x) g) = gA and det g != 0; nullopt when no element of GL(2,q) works.
template <Field F>
std::optional<Mat2<F>> iso_exhaustive(const F& f, const Msc<F>& A, const Msc<F>& B,
                                      int workers = 1) {
  if (!f.finite()) throw error("iso_exhaustive needs a finite field");
  std::uint64_t q = f.size(), total = q * q * q * q;
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> best{kNone};
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      if ((i & 1023) == 0 && best.load(std::memory_order_relaxed) < i) return;
      Mat2<F> g = mat_from_index(f, i);
      if (!act_check(f, A, B, g)) continue;
      std::uint64_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
      return;
    }
  };
  if (workers <= 1 || total < 4096) {
    scan(0, total);
  } else {
    std::uint64_t n = static_cast<std::uint64_t>(workers);
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < n; ++w)
      pool.emplace_back(scan, total * w / n, total * (w + 1) / n);
    for (auto& t : pool) t.join();
  }
  std::uint64_t i = best.load();
  if (i == kNone) return std::nullopt;
  return mat_from_index(f, i);
}

// Full orbit { g . A : g in GL(2,q) } as sorted MSC codes.
template <Field F>
std::vector<std::uint64_t> orbit_codes(const F& f, const Msc<F>& A) {
  if (!f.finite()) throw error("orbit needs a finite field");
  std::uint64_t q = f.size(), total = q * q * q * q;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < total; ++i) {
    Mat2<F> g = mat_from_index(f, i);
    if (f.is_zero(det2(f, g))) continue;
    seen.insert(msc_code(f, basis_change(f, A, g)));
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

template <Field F>
std::vector<Msc<F>> orbit(const F& f, const Msc<F>& A) {
  std::vector<Msc<F>> out;
  for (std::uint64_t c : orbit_codes(f, A)) out.push_back(msc_from_code(f, c));
  return out;
}

// ---------------------------------------------------------------------------
// Bounded search over characteristic 0: candidate coordinates are 0 and the
// reduced fractions +-p/q with p, q <= h, ordered by (max(p,q), p, q, sign);
// quadratic-extension coordinates take x + y*w with x, y from the same box.
// ---------------------------------------------------------------------------

std::vector<mpq_class> height_box(int h);

inline std::vector<Rational::Elem> box_values(const Rational&, int h) {
  return height_box(h);
}

inline std::vector<QuadExt::Elem> box_values(const QuadExt&, int h) {
  std::vector<mpq_class> base = height_box(h);
  std::vector<QElem> out;
  out.reserve(base.size() * base.size());
  for (const mpq_class& x : base)
    for (const mpq_class& y : base) out.push_back({x, y});
  return out;
}

inline std::vector<AnyField::Elem> box_values(const AnyField& f, int h) {
  if (const auto* q = std::get_if<Rational>(&f.impl())) {
    std::vector<AnyField::Elem> out;
    for (auto& v : box_values(*q, h)) out.push_back(v);
    return out;
  }
  if (const auto* e = std::get_if<QuadExt>(&f.impl())) {
    std::vector<AnyField::Elem> out;
    for (auto& v : box_values(*e, h)) out.push_back(v);
    return out;
  }
  throw error("height box needs characteristic 0");
}

// First witness in the height-h box (tuple order lexicographic over the box
// value order); absence means "none found at this height", never a proof.
template <Field F>
std::optional<Mat2<F>> iso_char0(const F& f, const Msc<F>& A, const Msc<F>& B, int height) {
  if (f.characteristic() != 0) throw error("iso_char0 needs characteristic 0");
  auto vals = box_values(f, height);
  std::size_t n = vals.size();
  Mat2<F> g = {f.zero(), f.zero(), f.zero(), f.zero()};
  for (std::size_t ia = 0; ia < n; ++ia) {
    g[0] = vals[ia];
    for (std::size_t ib = 0; ib < n; ++ib) {
      g[1] = vals[ib];
      for (std::size_t ic = 0; ic < n; ++ic) {
        g[2] = vals[ic];
        for (std::size_t id = 0; id < n; ++id) {
          g[3] = vals[id];
          if (act_check(f, A, B, g)) return g;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism-invariant fingerprints: commutativity, coefficient rank, and
// over finite fields the sorted multiset of (trace, det) of left
// multiplication by each nonzero idempotent.
// ---------------------------------------------------------------------------

struct Fingerprint {
  bool commutative = false;
  int rank = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> idempotent_sig;
  bool operator==(const Fingerprint&) const = default;
};

template <Field F>
Fingerprint fingerprint(const F& f, const Msc<F>& A) {
  Fingerprint fp;
  fp.commutative = is_commutative(f, A);
  fp.rank = msc_rank(f, A);
  if (f.finite()) {
    std::uint64_t q = f.size();
    for (std::uint64_t i = 1; i < q * q; ++i) {
      Vec2<F> u = {f.element(i / q), f.element(i % q)};
      Vec2<F> uu = multiply(f, A, u, u);
      if (!f.eq(uu[0], u[0]) || !f.eq(uu[1], u[1])) continue;
      Vec2<F> c1 = multiply(f, A, u, {f.one(), f.zero()});
      Vec2<F> c2 = multiply(f, A, u, {f.zero(), f.one()});
      typename F::Elem tr = f.add(c1[0], c2[1]);
      typename F::Elem det = f.sub(f.mul(c1[0], c2[1]), f.mul(c2[0], c1[1]));
      fp.idempotent_sig.emplace_back(f.index(tr), f.index(det));
    }
    std::sort(fp.idempotent_sig.begin(), fp.idempotent_sig.end());
  }
  return fp;
}

// ---------------------------------------------------------------------------
// Classification against the Jordan tables
// ---------------------------------------------------------------------------

struct ClassifyOptions {
  int height = 4;   // characteristic-0 box escalation limit
  int workers = 1;  // finite-field scan parallelism
  int max_ext = 2;  // 1 forbids quadratic-extension escalation
};

struct Classification {
  bool resolved = false;
  std::string family;               // catalog entry id
  std::vector<std::string> params;  // printed in `field`
  std::vector<std::string> witness; // 4 entries of g, printed in `field`
  std::string field;                // descriptor of the field holding the witness
  int ext_degree = 1;               // 2 when a quadratic extension was needed
  int height = 0;                   // char 0: box height of the witness (or last tried)
};

// The quadratic extension this engine can escalate to, if any.
std::optional<AnyField> quadratic_extension(const AnyField& f, long d);

AnyField::Elem lift_any(const AnyField& base, const AnyField& ext, const AnyField::Elem& e);
Msc<AnyField> lift_any_msc(const AnyField& base, const AnyField& ext, const Msc<AnyField>& a);

Classification classify(const AnyField& f, const Msc<AnyField>& A,
                        const ClassifyOptions& opts = {});

}  // namespace msc2
