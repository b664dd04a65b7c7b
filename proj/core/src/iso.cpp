#include "msc2/iso.hpp"

#include <algorithm>
#include <numeric>

namespace msc2 {

std::vector<mpq_class> height_box(int h) {
  if (h < 1) throw error("height must be positive");
  std::vector<std::array<long, 2>> pq;
  for (long p = 1; p <= h; ++p)
    for (long q = 1; q <= h; ++q)
      if (std::gcd(p, q) == 1) pq.push_back({p, q});
  std::sort(pq.begin(), pq.end(), [](const auto& x, const auto& y) {
    long mx = std::max(x[0], x[1]), my = std::max(y[0], y[1]);
    if (mx != my) return mx < my;
    return x < y;
  });
  std::vector<mpq_class> out;
  out.reserve(1 + 2 * pq.size());
  out.emplace_back(0);
  for (const auto& [p, q] : pq) {
    out.emplace_back(mpq_class(p, q));
    out.emplace_back(mpq_class(-p, q));
  }
  return out;
}

std::optional<AnyField> quadratic_extension(const AnyField& f, long d) {
  if (std::holds_alternative<Rational>(f.impl())) return AnyField(QuadExt(d));
  if (const auto* p = std::get_if<PrimeField>(&f.impl()))
    return AnyField(PrimeQuadField(static_cast<long>(p->characteristic())));
  return std::nullopt;
}

AnyField::Elem lift_any(const AnyField& base, const AnyField& ext, const AnyField::Elem& e) {
  if (const auto* b = std::get_if<Rational>(&base.impl())) {
    const auto* x = std::get_if<QuadExt>(&ext.impl());
    if (!x) throw error("lift: field mismatch");
    return lift(*b, *x, std::get<mpq_class>(e));
  }
  if (const auto* b = std::get_if<PrimeField>(&base.impl())) {
    const auto* x = std::get_if<PrimeQuadField>(&ext.impl());
    if (!x) throw error("lift: field mismatch");
    return lift(*b, *x, std::get<std::uint32_t>(e));
  }
  throw error("lift: no quadratic extension for this field");
}

Msc<AnyField> lift_any_msc(const AnyField& base, const AnyField& ext, const Msc<AnyField>& a) {
  Msc<AnyField> out = msc_zero(ext);
  for (int i = 0; i < 8; ++i) out[i] = lift_any(base, ext, a[i]);
  return out;
}

namespace {

// Squarefree part of a nonzero rational, sign included.
long squarefree_part(const mpq_class& r) {
  mpz_class m = r.get_num() * r.get_den();
  bool neg = m < 0;
  if (neg) m = -m;
  long s = 1;
  for (long p = 2; mpz_class(p) * p <= m; ++p) {
    int c = 0;
    while (m % p == 0) {
      m /= p;
      ++c;
    }
    if (c & 1) s *= p;
  }
  if (!m.fits_slong_p()) throw error("discriminant out of range");
  s *= m.get_si();
  return neg ? -s : s;
}

void fill_result(Classification& out, const AnyField& f, const Instantiation<AnyField>& inst,
                 const Mat2<AnyField>& w, int deg) {
  out.resolved = true;
  out.family = inst.entry->id;
  out.params.clear();
  for (const auto& p : inst.params) out.params.push_back(f.str(p));
  out.witness = {f.str(w[0]), f.str(w[1]), f.str(w[2]), f.str(w[3])};
  out.field = f.desc_str();
  out.ext_degree = deg;
}

bool finite_stage(const AnyField& f, const Msc<AnyField>& A, const ClassifyOptions& opts,
                  int deg, Classification& out) {
  Fingerprint target = fingerprint(f, A);
  for (const auto& inst : sweep(f, Group::JordanClosed)) {
    if (!(fingerprint(f, inst.msc) == target)) continue;
    auto w = iso_exhaustive(f, inst.msc, A, opts.workers);
    if (!w) continue;
    fill_result(out, f, inst, *w, deg);
    return true;
  }
  return false;
}

// One classification pass over a characteristic-0 field. With base == nullptr
// every catalog candidate in the height box is tried. With base set (quadratic
// extension pass) only candidates the base field cannot instantiate are tried:
// parameters stay in the base box and extension scans are capped at height 2,
// since the extension exists to supply missing square roots, not to widen the
// witness search; deeper extension searches go through iso directly.
bool char0_stage(const AnyField& f, const Msc<AnyField>& A, const ClassifyOptions& opts,
                 int deg, Classification& out, const AnyField* base = nullptr) {
  Fingerprint target = fingerprint(f, A);
  auto entries =
      list_entries(Group::JordanClosed, regime_for(Group::JordanClosed, f.characteristic()));
  int hmax = base ? std::min(opts.height, 2) : opts.height;
  for (int h = 1; h <= hmax; ++h) {
    auto box = base ? box_values(*base, h) : box_values(f, h);
    for (const CatalogEntry* e : entries) {
      std::vector<std::vector<AnyField::Elem>> tuples;
      if (e->arity() == 0)
        tuples.push_back({});
      else
        for (const auto& v : box) tuples.push_back({v});
      for (const auto& ps : tuples) {
        std::vector<AnyField::Elem> here = ps;
        if (base) {
          if (try_instantiate(*base, *e, ps)) continue;
          for (auto& v : here) v = lift_any(*base, f, v);
        }
        auto msc = try_instantiate(f, *e, here);
        if (!msc) continue;
        Instantiation<AnyField> inst{e, here, *msc};
        if (!(fingerprint(f, inst.msc) == target)) continue;
        auto w = iso_char0(f, inst.msc, A, h);
        if (!w) continue;
        fill_result(out, f, inst, *w, deg);
        out.height = h;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Classification classify(const AnyField& f, const Msc<AnyField>& A, const ClassifyOptions& opts) {
  if (msc_is_zero(f, A)) throw error("classify: trivial algebra");
  if (!is_jordan(f, A)) throw error("classify: input is not a Jordan algebra");
  Classification res;
  res.field = f.desc_str();

  if (f.finite()) {
    if (finite_stage(f, A, opts, 1, res)) return res;
    if (opts.max_ext >= 2) {
      if (auto ext = quadratic_extension(f, 0)) {
        double q = static_cast<double>(ext->size());
        if (q * q * q * q <= 1.1e12) {
          Msc<AnyField> lifted = lift_any_msc(f, *ext, A);
          if (finite_stage(*ext, lifted, opts, 2, res)) return res;
        }
      }
    }
    return res;
  }

  if (char0_stage(f, A, opts, 1, res)) return res;
  res.height = opts.height;
  if (opts.max_ext >= 2 && std::holds_alternative<Rational>(f.impl())) {
    // Discriminants that parameter solving can demand: the fixed surds of the
    // catalog plus sqrt(a - a^2) over the extension-stage parameter box.
    std::vector<long> ds = {-1, 5};
    Rational qf;
    for (const auto& v : box_values(f, std::min(opts.height, 2))) {
      const mpq_class& a = std::get<mpq_class>(v);
      mpq_class t = a - a * a;
      if (t == 0 || qf.sqrt(t)) continue;
      ds.push_back(squarefree_part(t));
    }
    std::sort(ds.begin(), ds.end(), [](long x, long y) {
      long ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
      if (ax != ay) return ax < ay;
      return x > y;
    });
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    for (long d : ds) {
      AnyField ext{QuadExt(d)};
      Msc<AnyField> lifted = lift_any_msc(f, ext, A);
      if (char0_stage(ext, lifted, opts, 2, res, &f)) return res;
    }
  }
  return res;
}

}  // namespace msc2
