#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msc2/algebra.hpp"

namespace msc2 {

// Classification tables, one entry per isomorphism-class family. Groups:
//   general-closed     all algebras, characteristic regimes not235/2/3
//   jordan-closed      Jordan identity, regimes not235/2/3/5
//   commutative-closed commutative Jordan, regimes not235/2/3
//   real-general, real-jordan, commutative-real   over the reals (ordered
//                      exact subfields of R in this engine)
//   wallace            the historical crosswalk list with known targets

enum class Group {
  GeneralClosed,
  JordanClosed,
  CommutativeClosed,
  RealGeneral,
  RealJordan,
  CommutativeReal,
  Wallace,
};

enum class Regime { Not235, Char2, Char3, Char5, Real };

std::string group_str(Group g);
std::string regime_str(Regime r);
std::optional<Group> parse_group(std::string_view s);
std::optional<Regime> parse_regime(std::string_view s);

// Which regime's table covers algebras over a field of the given
// characteristic. Real groups always use the real table (char 0, ordered).
Regime regime_for(Group g, unsigned characteristic);

// ---------------------------------------------------------------------------
// Parameter expressions: rationals, p0..p3, + - * / ^ and sqrt(.).
// ---------------------------------------------------------------------------

struct Expr {
  enum Kind { Num, Param, Neg, Add, Sub, Mul, Div, Sqrt, Pow } kind;
  long num = 0, den = 1;  // Num
  int param = 0;          // Param
  long exp = 0;           // Pow
  std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(std::string_view s);  // throws msc2::error on bad syntax
std::string expr_str(const Expr& e);

// nullopt when a sqrt has no value in the field.
template <Field F>
std::optional<typename F::Elem> eval_expr(const F& f, const Expr& e,
                                          const std::vector<typename F::Elem>& params) {
  using E = typename F::Elem;
  auto ev = [&](const Expr& sub) { return eval_expr(f, sub, params); };
  switch (e.kind) {
    case Expr::Num:
      return f.from_ratio(e.num, e.den);
    case Expr::Param:
      if (e.param < 0 || e.param >= static_cast<int>(params.size()))
        throw error("parameter index out of range");
      return params[e.param];
    case Expr::Neg: {
      auto x = ev(*e.lhs);
      if (!x) return std::nullopt;
      return f.neg(*x);
    }
    case Expr::Sqrt: {
      auto x = ev(*e.lhs);
      if (!x) return std::nullopt;
      return f.sqrt(*x);
    }
    case Expr::Pow: {
      auto x = ev(*e.lhs);
      if (!x) return std::nullopt;
      E r = f.one();
      for (long i = 0; i < e.exp; ++i) r = f.mul(r, *x);
      return r;
    }
    default: {
      auto x = ev(*e.lhs), y = ev(*e.rhs);
      if (!x || !y) return std::nullopt;
      switch (e.kind) {
        case Expr::Add: return f.add(*x, *y);
        case Expr::Sub: return f.sub(*x, *y);
        case Expr::Mul: return f.mul(*x, *y);
        case Expr::Div: return f.div(*x, *y);
        default: throw error("bad expression node");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Catalog entries
// ---------------------------------------------------------------------------

enum class ConstraintKind { NonZero, Zero, NonNeg, Pos };

struct CatalogEntry {
  std::string id;
  Group group;
  Regime regime;
  std::vector<std::string> param_names;
  std::array<ExprPtr, 8> tmpl;
  struct Constraint {
    ConstraintKind kind;
    ExprPtr expr;
    std::string text;
  };
  std::vector<Constraint> constraints;
  std::string identification;  // parameter symmetry yielding the same class
  std::string crosswalk;       // known isomorphic target, wallace group only

  int arity() const { return static_cast<int>(param_names.size()); }
};

const std::vector<CatalogEntry>& all_entries();
std::vector<const CatalogEntry*> list_entries(Group g, Regime r);
const CatalogEntry* find_entry(std::string_view id);  // nullptr when absent

// True when the entry's table covers algebras over this field. Real tables
// require characteristic 0; the wallace list instantiates anywhere.
template <Field F>
bool entry_applicable(const F& f, const CatalogEntry& e) {
  switch (e.group) {
    case Group::RealGeneral:
    case Group::RealJordan:
    case Group::CommutativeReal:
      return f.characteristic() == 0;
    case Group::Wallace:
      return true;
    default:
      return regime_for(e.group, f.characteristic()) == e.regime;
  }
}

namespace detail {

// Checks one constraint; throws when an ordering constraint meets an
// unordered field (the comparison is meaningless, not merely false).
template <Field F>
bool constraint_holds(const F& f, const CatalogEntry::Constraint& c,
                      const std::vector<typename F::Elem>& params) {
  auto v = eval_expr(f, *c.expr, params);
  if (!v) return false;
  switch (c.kind) {
    case ConstraintKind::NonZero:
      return !f.is_zero(*v);
    case ConstraintKind::Zero:
      return f.is_zero(*v);
    case ConstraintKind::NonNeg:
      if (!f.ordered()) throw error("ordering constraint over an unordered field");
      return f.is_nonnegative(*v);
    case ConstraintKind::Pos:
      if (!f.ordered()) throw error("ordering constraint over an unordered field");
      return f.is_nonnegative(*v) && !f.is_zero(*v);
  }
  throw error("bad constraint kind");
}

}  // namespace detail

// nullopt when a constraint fails or a needed square root is absent;
// throws on arity mismatch or an inapplicable characteristic regime.
template <Field F>
std::optional<Msc<F>> try_instantiate(const F& f, const CatalogEntry& e,
                                      const std::vector<typename F::Elem>& params) {
  if (static_cast<int>(params.size()) != e.arity())
    throw error("entry " + e.id + " takes " + std::to_string(e.arity()) + " parameter(s)");
  if (!entry_applicable(f, e))
    throw error("entry " + e.id + " is not applicable over " + f.desc_str());
  for (const auto& c : e.constraints)
    if (!detail::constraint_holds(f, c, params)) return std::nullopt;
  Msc<F> out = msc_zero(f);
  for (int i = 0; i < 8; ++i) {
    auto v = eval_expr(f, *e.tmpl[i], params);
    if (!v) return std::nullopt;
    out[i] = *v;
  }
  return out;
}

template <Field F>
bool valid_params(const F& f, const CatalogEntry& e,
                  const std::vector<typename F::Elem>& params) {
  return try_instantiate(f, e, params).has_value();
}

template <Field F>
Msc<F> instantiate(const F& f, const CatalogEntry& e,
                   const std::vector<typename F::Elem>& params) {
  auto m = try_instantiate(f, e, params);
  if (!m) throw error("entry " + e.id + " has no member at these parameters over " + f.desc_str());
  return *m;
}

template <Field F>
struct Instantiation {
  const CatalogEntry* entry;
  std::vector<typename F::Elem> params;
  Msc<F> msc;
};

// Every instantiation of the group's table over a finite field, parameters
// enumerated lexicographically in element order, deduplicated by exact
// structure matrix (first entry in catalog-then-parameter order wins).
template <Field F>
std::vector<Instantiation<F>> sweep(const F& f, Group g) {
  if (!f.finite()) throw error("sweep needs a finite field");
  Regime r = regime_for(g, f.characteristic());
  std::vector<Instantiation<F>> out;
  std::vector<std::uint64_t> seen;
  auto consider = [&](const CatalogEntry* e, const std::vector<typename F::Elem>& params) {
    auto m = try_instantiate(f, *e, params);
    if (!m) return;
    std::uint64_t code = msc_code(f, *m);
    for (std::uint64_t s : seen)
      if (s == code) return;
    seen.push_back(code);
    out.push_back({e, params, *m});
  };
  for (const CatalogEntry* e : list_entries(g, r)) {
    int k = e->arity();
    if (k == 0) {
      consider(e, {});
      continue;
    }
    std::vector<std::uint64_t> idx(k, 0);
    std::vector<typename F::Elem> params(k, f.zero());
    for (;;) {
      for (int i = 0; i < k; ++i) params[i] = f.element(idx[i]);
      consider(e, params);
      int pos = k - 1;
      while (pos >= 0 && ++idx[pos] == f.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

}  // namespace msc2
