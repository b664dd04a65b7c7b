#pragma once

#include <gmpxx.h>

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace msc2 {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Field concept: a field is a small context object; elements are plain values
// that only make sense relative to their field. All operations are pure.
// ---------------------------------------------------------------------------

template <class F>
concept Field = std::copy_constructible<F> && requires(const F f, const typename F::Elem& a,
                                                       const typename F::Elem& b) {
  typename F::Elem;
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.div(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.eq(a, b) } -> std::convertible_to<bool>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_int(long{}) } -> std::convertible_to<typename F::Elem>;
  { f.from_ratio(long{}, long{}) } -> std::convertible_to<typename F::Elem>;
  { f.sqrt(a) } -> std::convertible_to<std::optional<typename F::Elem>>;
  { f.characteristic() } -> std::convertible_to<unsigned>;
  { f.finite() } -> std::convertible_to<bool>;
  { f.size() } -> std::convertible_to<std::uint64_t>;
  { f.element(std::uint64_t{}) } -> std::convertible_to<typename F::Elem>;
  { f.index(a) } -> std::convertible_to<std::uint64_t>;
  { f.ordered() } -> std::convertible_to<bool>;
  { f.is_nonnegative(a) } -> std::convertible_to<bool>;
  { f.str(a) } -> std::convertible_to<std::string>;
  { f.parse(std::string_view{}) } -> std::convertible_to<std::optional<typename F::Elem>>;
  { f.desc_str() } -> std::convertible_to<std::string>;
};

namespace detail {

inline std::optional<mpq_class> rational_sqrt(const mpq_class& a) {
  int s = sgn(a);
  if (s < 0) return std::nullopt;
  if (s == 0) return mpq_class(0);
  const mpz_class& num = a.get_num();
  const mpz_class& den = a.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

inline std::optional<mpq_class> parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) return std::nullopt;
  if (t.front() == '+') t.erase(t.begin());
  std::size_t slash = t.find('/');
  auto digits_ok = [](std::string_view v) {
    if (v.empty()) return false;
    std::size_t i = (v[0] == '-') ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(t)) return std::nullopt;
    return mpq_class(t);
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den == "0" || den[0] == '-') return std::nullopt;
  mpq_class q(t);
  q.canonicalize();
  return q;
}

inline bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline bool is_squarefree(long d) {
  if (d == 0) return false;
  long m = d < 0 ? -d : d;
  for (long f = 2; f * f <= m; ++f)
    if (m % (f * f) == 0) return false;
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

class Rational {
 public:
  using Elem = mpq_class;

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const {
    if (sgn(b) == 0) throw error("division by zero in Q");
    return a / b;
  }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return div(one(), a); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem from_int(long n) const { return mpq_class(n); }
  Elem from_ratio(long n, long d) const {
    if (d == 0) throw error("zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
  std::optional<Elem> sqrt(const Elem& a) const { return detail::rational_sqrt(a); }
  unsigned characteristic() const { return 0; }
  bool finite() const { return false; }
  std::uint64_t size() const { return 0; }
  Elem element(std::uint64_t) const { throw error("Q is not enumerable"); }
  std::uint64_t index(const Elem&) const { throw error("Q is not enumerable"); }
  bool ordered() const { return true; }
  bool is_nonnegative(const Elem& a) const { return sgn(a) >= 0; }
  std::string str(const Elem& a) const { return a.get_str(); }
  std::optional<Elem> parse(std::string_view s) const { return detail::parse_rational(s); }
  std::string desc_str() const { return "Q"; }
};

// ---------------------------------------------------------------------------
// Q(sqrt(d)): elements a + b*w with w*w = d, d squarefree, not 0 or 1.
// Ordered iff d > 0, via the real embedding w -> +sqrt(d).
// ---------------------------------------------------------------------------

struct QElem {
  mpq_class a, b;
  bool operator==(const QElem& o) const { return a == o.a && b == o.b; }
};

class QuadExt {
 public:
  using Elem = QElem;

  explicit QuadExt(long d) : d_(d) {
    if (d == 0 || d == 1 || !detail::is_squarefree(d))
      throw error("QuadExt discriminant must be squarefree and not 0 or 1");
  }

  long d() const { return d_; }

  Elem zero() const { return {mpq_class(0), mpq_class(0)}; }
  Elem one() const { return {mpq_class(1), mpq_class(0)}; }
  Elem gen() const { return {mpq_class(0), mpq_class(1)}; }
  Elem add(const Elem& x, const Elem& y) const { return {x.a + y.a, x.b + y.b}; }
  Elem sub(const Elem& x, const Elem& y) const { return {x.a - y.a, x.b - y.b}; }
  Elem mul(const Elem& x, const Elem& y) const {
    return {x.a * y.a + mpq_class(d_) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  Elem neg(const Elem& x) const { return {-x.a, -x.b}; }
  Elem inv(const Elem& x) const {
    mpq_class n = x.a * x.a - mpq_class(d_) * x.b * x.b;
    if (sgn(n) == 0) {
      if (is_zero(x)) throw error("division by zero in QuadExt");
      throw error("QuadExt norm vanished on nonzero element");
    }
    return {x.a / n, -x.b / n};
  }
  Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }
  bool eq(const Elem& x, const Elem& y) const { return x == y; }
  bool is_zero(const Elem& x) const { return sgn(x.a) == 0 && sgn(x.b) == 0; }
  Elem from_int(long n) const { return {mpq_class(n), mpq_class(0)}; }
  Elem from_ratio(long n, long d) const {
    if (d == 0) throw error("zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return {q, mpq_class(0)};
  }

  std::optional<Elem> sqrt(const Elem& t) const {
    std::vector<Elem> roots;
    auto push_pair = [&](const Elem& r) {
      roots.push_back(r);
      roots.push_back(neg(r));
    };
    if (sgn(t.b) == 0) {
      if (sgn(t.a) == 0) return zero();
      if (auto r = detail::rational_sqrt(t.a)) push_pair({*r, mpq_class(0)});
      if (auto s = detail::rational_sqrt(t.a / mpq_class(d_))) push_pair({mpq_class(0), *s});
    } else {
      // (x + y*w)^2 = t: x^2 solves z^2 - t.a*z + d*t.b^2/4 = 0.
      mpq_class disc = t.a * t.a - mpq_class(d_) * t.b * t.b;
      if (auto n = detail::rational_sqrt(disc)) {
        for (int sign : {+1, -1}) {
          mpq_class x2 = (t.a + mpq_class(sign) * (*n)) / 2;
          if (auto x = detail::rational_sqrt(x2)) {
            if (sgn(*x) == 0) continue;
            mpq_class y = t.b / (2 * (*x));
            push_pair({*x, y});
          }
        }
      }
    }
    if (roots.empty()) return std::nullopt;
    const Elem* best = nullptr;
    for (const Elem& r : roots) {
      if (!mul(r, r).operator==(t)) continue;
      if (!best) {
        best = &r;
        continue;
      }
      if (canon_before(r, *best)) best = &r;
    }
    if (!best) return std::nullopt;
    return *best;
  }

  unsigned characteristic() const { return 0; }
  bool finite() const { return false; }
  std::uint64_t size() const { return 0; }
  Elem element(std::uint64_t) const { throw error("QuadExt is not enumerable"); }
  std::uint64_t index(const Elem&) const { throw error("QuadExt is not enumerable"); }
  bool ordered() const { return d_ > 0; }

  // Sign in the real embedding w -> +sqrt(d); only defined for d > 0.
  bool is_nonnegative(const Elem& x) const {
    if (d_ < 0) throw error("QuadExt(d<0) is unordered");
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sa >= 0 && sb >= 0) return true;
    if (sa <= 0 && sb <= 0) return !(sa < 0 || sb < 0);
    // Mixed signs: compare |a|^2 against d*|b|^2.
    mpq_class lhs = x.a * x.a, rhs = mpq_class(d_) * x.b * x.b;
    return sa > 0 ? lhs >= rhs : rhs >= lhs;
  }

  std::string str(const Elem& x) const {
    if (sgn(x.b) == 0) return x.a.get_str();
    std::string wpart;
    mpq_class babs = abs(x.b);
    if (babs == 1)
      wpart = "w";
    else
      wpart = babs.get_str() + "*w";
    std::string sign = sgn(x.b) < 0 ? "-" : "+";
    if (sgn(x.a) == 0) return (sgn(x.b) < 0 ? "-" : "") + wpart;
    return x.a.get_str() + sign + wpart;
  }

  std::optional<Elem> parse(std::string_view sv) const {
    std::string s;
    for (char c : sv)
      if (c != ' ') s.push_back(c);
    if (s.empty()) return std::nullopt;
    if (s.find('w') == std::string::npos) {
      auto r = detail::parse_rational(s);
      if (!r) return std::nullopt;
      return Elem{*r, mpq_class(0)};
    }
    // Split at the last top-level +/- (not the leading sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
      if (s[i] == '+' || s[i] == '-') {
        split = i;
        break;
      }
    std::string apart, bpart;
    if (split == std::string::npos || s.find('w') < split) {
      apart = "0";
      bpart = s;
    } else {
      apart = s.substr(0, split);
      bpart = s.substr(split);
    }
    auto parse_coeff = [&](std::string t) -> std::optional<mpq_class> {
      int sign = 1;
      if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        if (t[0] == '-') sign = -1;
        t.erase(t.begin());
      }
      if (t == "w") return mpq_class(sign);
      if (t.size() < 2 || t.substr(t.size() - 2) != "*w") return std::nullopt;
      auto r = detail::parse_rational(t.substr(0, t.size() - 2));
      if (!r) return std::nullopt;
      return mpq_class(sign) * (*r);
    };
    auto a = detail::parse_rational(apart);
    auto b = parse_coeff(bpart);
    if (!a || !b) return std::nullopt;
    return Elem{*a, *b};
  }

  std::string desc_str() const { return "Q(sqrt:" + std::to_string(d_) + ")"; }

 private:
  bool canon_before(const Elem& r, const Elem& s) const {
    if (d_ > 0) return is_nonnegative(r) && !is_nonnegative(s);
    // Unordered: prefer positive w-coefficient, then nonnegative a.
    auto key = [](const Elem& e) { return std::pair(sgn(e.b) <= 0, sgn(e.a) < 0); };
    return key(r) < key(s);
  }

  long d_;
};

// ---------------------------------------------------------------------------
// GF(p), elements as residues 0..p-1.
// ---------------------------------------------------------------------------

class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(long p) : p_(static_cast<std::uint32_t>(p)) {
    if (p < 2 || p > (1L << 20) || !detail::is_small_prime(p))
      throw error("PrimeField needs a small prime");
  }

  std::uint32_t p() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw error("division by zero in GF(p)");
    return pow_(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem from_int(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem from_ratio(long n, long d) const { return div(from_int(n), from_int(d)); }
  std::optional<Elem> sqrt(Elem a) const {
    for (Elem x = 0; x < p_; ++x)
      if (mul(x, x) == a) return x;  // ascending scan returns the smaller root
    return std::nullopt;
  }
  unsigned characteristic() const { return p_; }
  bool finite() const { return true; }
  std::uint64_t size() const { return p_; }
  Elem element(std::uint64_t i) const {
    if (i >= p_) throw error("element index out of range");
    return static_cast<Elem>(i);
  }
  std::uint64_t index(Elem a) const { return a; }
  bool ordered() const { return false; }
  bool is_nonnegative(Elem) const { throw error("GF(p) is unordered"); }
  std::string str(Elem a) const { return std::to_string(a); }
  std::optional<Elem> parse(std::string_view sv) const {
    auto r = detail::parse_rational(sv);
    if (!r || r->get_den() != 1) return std::nullopt;
    mpz_class m = r->get_num() % p_;
    if (m < 0) m += p_;
    return static_cast<Elem>(m.get_ui());
  }
  std::string desc_str() const { return "GF:" + std::to_string(p_); }

 private:
  Elem pow_(Elem base, std::uint32_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// GF(p^2), elements a + b*w coded as a + b*p.
// Modulus: w^2 = n (least quadratic non-residue) for odd p; w^2 = w + 1 for
// p = 2, where x^2 - n has no root and x^2 + x + 1 is the unique irreducible.
// ---------------------------------------------------------------------------

class PrimeQuadField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeQuadField(long p) : base_(p) {
    std::uint32_t pp = base_.p();
    if (pp > 1024) throw error("PrimeQuadField needs p <= 1024");
    q_ = pp * pp;
    if (pp == 2) {
      r0_ = 1;
      r1_ = 1;
    } else {
      r1_ = 0;
      for (std::uint32_t n = 2; n < pp; ++n) {
        if (!base_.sqrt(n)) {
          r0_ = n;
          break;
        }
      }
    }
  }

  std::uint32_t p() const { return base_.p(); }
  std::uint32_t modulus_c0() const { return r0_; }
  std::uint32_t modulus_c1() const { return r1_; }
  const PrimeField& base() const { return base_; }

  Elem make(std::uint32_t a, std::uint32_t b) const { return a + b * base_.p(); }
  std::uint32_t re(Elem x) const { return x % base_.p(); }
  std::uint32_t im(Elem x) const { return x / base_.p(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem gen() const { return make(0, 1); }
  Elem add(Elem x, Elem y) const {
    return make(base_.add(re(x), re(y)), base_.add(im(x), im(y)));
  }
  Elem sub(Elem x, Elem y) const {
    return make(base_.sub(re(x), re(y)), base_.sub(im(x), im(y)));
  }
  Elem mul(Elem x, Elem y) const {
    std::uint32_t a1 = re(x), b1 = im(x), a2 = re(y), b2 = im(y);
    std::uint32_t bb = base_.mul(b1, b2);
    std::uint32_t a = base_.add(base_.mul(a1, a2), base_.mul(r0_, bb));
    std::uint32_t b = base_.add(base_.add(base_.mul(a1, b2), base_.mul(b1, a2)),
                                base_.mul(r1_, bb));
    return make(a, b);
  }
  Elem neg(Elem x) const { return make(base_.neg(re(x)), base_.neg(im(x))); }
  Elem inv(Elem x) const {
    if (x == 0) throw error("division by zero in GF(p^2)");
    return pow_(x, q_ - 2);
  }
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  bool eq(Elem x, Elem y) const { return x == y; }
  bool is_zero(Elem x) const { return x == 0; }
  Elem from_int(long n) const { return base_.from_int(n); }
  Elem from_ratio(long n, long d) const { return base_.from_ratio(n, d); }
  std::optional<Elem> sqrt(Elem t) const {
    std::optional<Elem> best;
    for (Elem x = 0; x < q_; ++x) {
      if (mul(x, x) != t) continue;
      if (!best || std::pair(re(x), im(x)) < std::pair(re(*best), im(*best))) best = x;
    }
    return best;
  }
  unsigned characteristic() const { return base_.p(); }
  bool finite() const { return true; }
  std::uint64_t size() const { return q_; }
  Elem element(std::uint64_t i) const {
    if (i >= q_) throw error("element index out of range");
    return static_cast<Elem>(i);
  }
  std::uint64_t index(Elem x) const { return x; }
  bool ordered() const { return false; }
  bool is_nonnegative(Elem) const { throw error("GF(p^2) is unordered"); }

  std::string str(Elem x) const {
    std::uint32_t a = re(x), b = im(x);
    if (b == 0) return std::to_string(a);
    std::string wpart = (b == 1) ? "w" : std::to_string(b) + "*w";
    if (a == 0) return wpart;
    return std::to_string(a) + "+" + wpart;
  }
  std::optional<Elem> parse(std::string_view sv) const {
    std::string s;
    for (char c : sv)
      if (c != ' ') s.push_back(c);
    if (s.empty()) return std::nullopt;
    if (s.find('w') == std::string::npos) {
      auto r = base_.parse(s);
      if (!r) return std::nullopt;
      return make(*r, 0);
    }
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
      if (s[i] == '+' || s[i] == '-') {
        split = i;
        break;
      }
    std::string apart, bpart;
    if (split == std::string::npos || s.find('w') < split) {
      apart = "0";
      bpart = s;
    } else {
      apart = s.substr(0, split);
      bpart = s.substr(split);
    }
    int bsign = 1;
    if (!bpart.empty() && (bpart[0] == '+' || bpart[0] == '-')) {
      if (bpart[0] == '-') bsign = -1;
      bpart.erase(bpart.begin());
    }
    std::optional<std::uint32_t> b;
    if (bpart == "w")
      b = 1u;
    else if (bpart.size() > 2 && bpart.substr(bpart.size() - 2) == "*w")
      b = base_.parse(bpart.substr(0, bpart.size() - 2));
    if (!b) return std::nullopt;
    auto a = base_.parse(apart);
    if (!a) return std::nullopt;
    std::uint32_t bb = bsign < 0 ? base_.neg(*b) : *b;
    return make(*a, bb);
  }
  std::string desc_str() const { return "GF:" + std::to_string(base_.p()) + "^2"; }

 private:
  Elem pow_(Elem base, std::uint64_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  PrimeField base_;
  std::uint32_t q_ = 0, r0_ = 0, r1_ = 0;
};

static_assert(Field<Rational>);
static_assert(Field<QuadExt>);
static_assert(Field<PrimeField>);
static_assert(Field<PrimeQuadField>);

// Embeddings into the quadratic extension.
inline PrimeQuadField::Elem lift(const PrimeField& base, const PrimeQuadField& ext,
                                 PrimeField::Elem a) {
  if (ext.p() != base.p()) throw error("extension/base mismatch");
  return a;
}
inline QuadExt::Elem lift(const Rational&, const QuadExt&, const mpq_class& a) {
  return {a, mpq_class(0)};
}

// ---------------------------------------------------------------------------
// AnyField: runtime-dispatched wrapper satisfying the same concept, so the
// CLI can hold "some field" while generic code stays monomorphic.
// ---------------------------------------------------------------------------

class AnyField {
 public:
  using Impl = std::variant<Rational, QuadExt, PrimeField, PrimeQuadField>;
  using Elem = std::variant<mpq_class, QElem, std::uint32_t>;

  explicit AnyField(Impl impl) : impl_(std::move(impl)) {}
  AnyField(const Rational& f) : impl_(f) {}
  AnyField(const QuadExt& f) : impl_(f) {}
  AnyField(const PrimeField& f) : impl_(f) {}
  AnyField(const PrimeQuadField& f) : impl_(f) {}

  const Impl& impl() const { return impl_; }

 private:
  template <class T>
  static const T& get_(const Elem& e) {
    const T* p = std::get_if<T>(&e);
    if (!p) throw error("element does not belong to this field");
    return *p;
  }
  template <class Fn>
  auto visit_(Fn&& fn) const {
    return std::visit(fn, impl_);
  }
  template <class Fn>
  Elem un_(const Elem& a, Fn&& fn) const {
    return visit_([&](const auto& f) { return Elem(fn(f, get_<typename std::decay_t<decltype(f)>::Elem>(a))); });
  }
  template <class Fn>
  Elem bin_(const Elem& a, const Elem& b, Fn&& fn) const {
    return visit_([&](const auto& f) {
      using E = typename std::decay_t<decltype(f)>::Elem;
      return Elem(fn(f, get_<E>(a), get_<E>(b)));
    });
  }

 public:

  Elem zero() const {
    return visit_([](const auto& f) { return Elem(f.zero()); });
  }
  Elem one() const {
    return visit_([](const auto& f) { return Elem(f.one()); });
  }
  Elem add(const Elem& a, const Elem& b) const { return bin_(a, b, [](const auto& f, auto x, auto y) { return f.add(x, y); }); }
  Elem sub(const Elem& a, const Elem& b) const { return bin_(a, b, [](const auto& f, auto x, auto y) { return f.sub(x, y); }); }
  Elem mul(const Elem& a, const Elem& b) const { return bin_(a, b, [](const auto& f, auto x, auto y) { return f.mul(x, y); }); }
  Elem div(const Elem& a, const Elem& b) const { return bin_(a, b, [](const auto& f, auto x, auto y) { return f.div(x, y); }); }
  Elem neg(const Elem& a) const { return un_(a, [](const auto& f, auto x) { return f.neg(x); }); }
  Elem inv(const Elem& a) const { return un_(a, [](const auto& f, auto x) { return f.inv(x); }); }
  bool eq(const Elem& a, const Elem& b) const {
    return visit_([&](const auto& f) { return f.eq(get_<typename std::decay_t<decltype(f)>::Elem>(a), get_<typename std::decay_t<decltype(f)>::Elem>(b)); });
  }
  bool is_zero(const Elem& a) const {
    return visit_([&](const auto& f) { return f.is_zero(get_<typename std::decay_t<decltype(f)>::Elem>(a)); });
  }
  Elem from_int(long n) const {
    return visit_([&](const auto& f) { return Elem(f.from_int(n)); });
  }
  Elem from_ratio(long n, long d) const {
    return visit_([&](const auto& f) { return Elem(f.from_ratio(n, d)); });
  }
  std::optional<Elem> sqrt(const Elem& a) const {
    return visit_([&](const auto& f) -> std::optional<Elem> {
      auto r = f.sqrt(get_<typename std::decay_t<decltype(f)>::Elem>(a));
      if (!r) return std::nullopt;
      return Elem(*r);
    });
  }
  unsigned characteristic() const {
    return visit_([](const auto& f) { return f.characteristic(); });
  }
  bool finite() const {
    return visit_([](const auto& f) { return f.finite(); });
  }
  std::uint64_t size() const {
    return visit_([](const auto& f) { return f.size(); });
  }
  Elem element(std::uint64_t i) const {
    return visit_([&](const auto& f) { return Elem(f.element(i)); });
  }
  std::uint64_t index(const Elem& a) const {
    return visit_([&](const auto& f) { return f.index(get_<typename std::decay_t<decltype(f)>::Elem>(a)); });
  }
  bool ordered() const {
    return visit_([](const auto& f) { return f.ordered(); });
  }
  bool is_nonnegative(const Elem& a) const {
    return visit_([&](const auto& f) { return f.is_nonnegative(get_<typename std::decay_t<decltype(f)>::Elem>(a)); });
  }
  std::string str(const Elem& a) const {
    return visit_([&](const auto& f) { return f.str(get_<typename std::decay_t<decltype(f)>::Elem>(a)); });
  }
  std::optional<Elem> parse(std::string_view s) const {
    return visit_([&](const auto& f) -> std::optional<Elem> {
      auto r = f.parse(s);
      if (!r) return std::nullopt;
      return Elem(*r);
    });
  }
  std::string desc_str() const {
    return visit_([](const auto& f) { return f.desc_str(); });
  }

 private:
  Impl impl_;
};

static_assert(Field<AnyField>);

// Descriptor strings: "Q" | "Q(sqrt:D)" | "GF:P" | "GF:P^2".
AnyField parse_field(std::string_view desc);

}  // namespace msc2
