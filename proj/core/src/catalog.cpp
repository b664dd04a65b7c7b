#include "msc2/catalog.hpp"

#include <cctype>
#include <map>

namespace msc2 {

std::string group_str(Group g) {
  switch (g) {
    case Group::GeneralClosed: return "general-closed";
    case Group::JordanClosed: return "jordan-closed";
    case Group::CommutativeClosed: return "commutative-closed";
    case Group::RealGeneral: return "real-general";
    case Group::RealJordan: return "real-jordan";
    case Group::CommutativeReal: return "commutative-real";
    case Group::Wallace: return "wallace";
  }
  return "?";
}

std::string regime_str(Regime r) {
  switch (r) {
    case Regime::Not235: return "not235";
    case Regime::Char2: return "char2";
    case Regime::Char3: return "char3";
    case Regime::Char5: return "char5";
    case Regime::Real: return "real";
  }
  return "?";
}

std::optional<Group> parse_group(std::string_view s) {
  for (Group g : {Group::GeneralClosed, Group::JordanClosed, Group::CommutativeClosed,
                  Group::RealGeneral, Group::RealJordan, Group::CommutativeReal,
                  Group::Wallace})
    if (group_str(g) == s) return g;
  return std::nullopt;
}

std::optional<Regime> parse_regime(std::string_view s) {
  for (Regime r : {Regime::Not235, Regime::Char2, Regime::Char3, Regime::Char5, Regime::Real})
    if (regime_str(r) == s) return r;
  return std::nullopt;
}

Regime regime_for(Group g, unsigned c) {
  switch (g) {
    case Group::RealGeneral:
    case Group::RealJordan:
    case Group::CommutativeReal:
    case Group::Wallace:
      return Regime::Real;
    case Group::JordanClosed:
      if (c == 2) return Regime::Char2;
      if (c == 3) return Regime::Char3;
      if (c == 5) return Regime::Char5;
      return Regime::Not235;
    default:  // the general and commutative tables cover every char not 2, 3
      if (c == 2) return Regime::Char2;
      if (c == 3) return Regime::Char3;
      return Regime::Not235;
  }
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }
  ExprPtr num(long n) {
    Expr e;
    e.kind = Expr::Num;
    e.num = n;
    return make(std::move(e));
  }
  ExprPtr bin(Expr::Kind k, ExprPtr l, ExprPtr r) {
    Expr e;
    e.kind = k;
    e.lhs = std::move(l);
    e.rhs = std::move(r);
    return make(std::move(e));
  }

  long integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw error("expected number in expression: " + std::string(s));
    return std::stol(std::string(s.substr(start, pos - start)));
  }

  ExprPtr primary() {
    skip();
    if (eat('(')) {
      ExprPtr e = expr();
      if (!eat(')')) throw error("missing ')' in expression: " + std::string(s));
      return e;
    }
    if (pos + 1 < s.size() && s[pos] == 'p' &&
        std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
      pos += 1;
      long idx = integer();
      Expr e;
      e.kind = Expr::Param;
      e.param = static_cast<int>(idx);
      return make(std::move(e));
    }
    if (s.substr(pos, 5) == "sqrt(") {
      pos += 4;
      eat('(');
      ExprPtr a = expr();
      if (!eat(')')) throw error("missing ')' after sqrt: " + std::string(s));
      Expr e;
      e.kind = Expr::Sqrt;
      e.lhs = std::move(a);
      return make(std::move(e));
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return num(integer());
    throw error("bad expression: " + std::string(s));
  }

  ExprPtr factor() {
    if (eat('-')) {
      Expr e;
      e.kind = Expr::Neg;
      e.lhs = factor();
      return make(std::move(e));
    }
    ExprPtr base = primary();
    if (eat('^')) {
      Expr e;
      e.kind = Expr::Pow;
      e.lhs = std::move(base);
      e.exp = integer();
      return make(std::move(e));
    }
    return base;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (eat('*'))
        e = bin(Expr::Mul, std::move(e), factor());
      else if (eat('/'))
        e = bin(Expr::Div, std::move(e), factor());
      else
        return e;
    }
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (eat('+'))
        e = bin(Expr::Add, std::move(e), term());
      else if (eat('-'))
        e = bin(Expr::Sub, std::move(e), term());
      else
        return e;
    }
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view s) {
  Parser p{s};
  ExprPtr e = p.expr();
  p.skip();
  if (p.pos != s.size()) throw error("trailing input in expression: " + std::string(s));
  return e;
}

std::string expr_str(const Expr& e) {
  switch (e.kind) {
    case Expr::Num:
      return e.den == 1 ? std::to_string(e.num)
                        : std::to_string(e.num) + "/" + std::to_string(e.den);
    case Expr::Param:
      return "p" + std::to_string(e.param);
    case Expr::Neg:
      return "-(" + expr_str(*e.lhs) + ")";
    case Expr::Sqrt:
      return "sqrt(" + expr_str(*e.lhs) + ")";
    case Expr::Pow:
      return "(" + expr_str(*e.lhs) + ")^" + std::to_string(e.exp);
    case Expr::Add:
      return "(" + expr_str(*e.lhs) + "+" + expr_str(*e.rhs) + ")";
    case Expr::Sub:
      return "(" + expr_str(*e.lhs) + "-" + expr_str(*e.rhs) + ")";
    case Expr::Mul:
      return "(" + expr_str(*e.lhs) + "*" + expr_str(*e.rhs) + ")";
    case Expr::Div:
      return "(" + expr_str(*e.lhs) + "/" + expr_str(*e.rhs) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Entry table
// ---------------------------------------------------------------------------

namespace {

struct Def {
  const char* id;
  Group group;
  Regime regime;
  const char* params;       // comma-separated display names, "" for arity 0
  const char* tmpl;         // "a1,a2,a3,a4;b1,b2,b3,b4" over p0..p3
  const char* constraints;  // ';'-separated "nz:e" | "z:e" | "nn:e" | "pos:e"
  const char* ident;        // parameter symmetry note
  const char* crosswalk;    // known isomorphic target(s)
};

constexpr Group GG = Group::GeneralClosed;
constexpr Group GJ = Group::JordanClosed;
constexpr Group GC = Group::CommutativeClosed;
constexpr Group RG = Group::RealGeneral;
constexpr Group RJ = Group::RealJordan;
constexpr Group RC = Group::CommutativeReal;
constexpr Group GW = Group::Wallace;
constexpr Regime N0 = Regime::Not235;
constexpr Regime R2 = Regime::Char2;
constexpr Regime R3 = Regime::Char3;
constexpr Regime R5 = Regime::Char5;
constexpr Regime RR = Regime::Real;

const Def kDefs[] = {
    // ----- general, characteristic not 2 or 3 -----
    {"A1", GG, N0, "a1,a2,a4,b1", "p0,p1,p1+1,p2;p3,-p0,1-p0,-p1", "", "", ""},
    {"A2", GG, N0, "a1,b1,b2", "p0,0,0,1;p1,p2,1-p0,0", "", "b1 -> -b1", ""},
    {"A3", GG, N0, "b1,b2", "0,1,1,0;p0,p1,1,-1", "", "", ""},
    {"A4", GG, N0, "a1,b2", "p0,0,0,0;0,p1,1-p0,0", "", "", ""},
    {"A5", GG, N0, "a1", "p0,0,0,0;1,2*p0-1,1-p0,0", "", "", ""},
    {"A6", GG, N0, "a1,b1", "p0,0,0,1;p1,1-p0,-p0,0", "", "b1 -> -b1", ""},
    {"A7", GG, N0, "b1", "0,1,1,0;p0,1,0,-1", "", "", ""},
    {"A8", GG, N0, "a1", "p0,0,0,0;0,1-p0,-p0,0", "", "", ""},
    {"A9", GG, N0, "", "1/3,0,0,0;1,2/3,-1/3,0", "", "", ""},
    {"A10", GG, N0, "", "0,1,1,0;0,0,0,-1", "", "", ""},
    {"A11", GG, N0, "", "0,1,1,0;1,0,0,-1", "", "", ""},
    {"A12", GG, N0, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- general, characteristic 2 -----
    {"A1_2", GG, R2, "a1,a2,a4,b1", "p0,p1,p1+1,p2;p3,-p0,1-p0,-p1", "", "", ""},
    {"A2_2", GG, R2, "a1,b1,b2", "p0,0,0,1;p1,p2,1-p0,0", "", "", ""},
    {"A3_2", GG, R2, "a1,b2", "p0,1,1,0;0,p1,1-p0,1", "", "", ""},
    {"A4_2", GG, R2, "a1,b2", "p0,0,0,0;0,p1,1-p0,0", "", "", ""},
    {"A5_2", GG, R2, "a1", "p0,0,0,0;1,1,1-p0,0", "", "", ""},
    {"A6_2", GG, R2, "a1,b1", "p0,0,0,1;p1,1-p0,-p0,0", "", "", ""},
    {"A7_2", GG, R2, "a1", "p0,1,1,0;0,1-p0,-p0,-1", "", "", ""},
    {"A8_2", GG, R2, "a1", "p0,0,0,0;0,1-p0,-p0,0", "", "", ""},
    {"A9_2", GG, R2, "", "1,0,0,0;1,0,1,0", "", "", ""},
    {"A10_2", GG, R2, "", "0,1,1,0;0,0,0,-1", "", "", ""},
    {"A11_2", GG, R2, "", "1,1,1,0;0,-1,-1,-1", "", "", ""},
    {"A12_2", GG, R2, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- general, characteristic 3 -----
    {"A1_3", GG, R3, "a1,a2,a4,b1", "p0,p1,p1+1,p2;p3,-p0,1-p0,-p1", "", "", ""},
    {"A2_3", GG, R3, "a1,b1,b2", "p0,0,0,1;p1,p2,1-p0,0", "", "b1 -> -b1", ""},
    {"A3_3", GG, R3, "b1,b2", "0,1,1,0;p0,p1,1,-1", "", "", ""},
    {"A4_3", GG, R3, "a1,b2", "p0,0,0,0;0,p1,1-p0,0", "", "", ""},
    {"A5_3", GG, R3, "a1", "p0,0,0,0;1,-1-p0,1-p0,0", "", "", ""},
    {"A6_3", GG, R3, "a1,b1", "p0,0,0,1;p1,1-p0,-p0,0", "", "b1 -> -b1", ""},
    {"A7_3", GG, R3, "b1", "0,1,1,0;p0,1,0,-1", "", "", ""},
    {"A8_3", GG, R3, "a1", "p0,0,0,0;0,1-p0,-p0,0", "", "", ""},
    {"A9_3", GG, R3, "", "0,1,1,0;1,0,0,-1", "", "", ""},
    {"A10_3", GG, R3, "", "0,1,1,0;0,0,0,-1", "", "", ""},
    {"A11_3", GG, R3, "", "1,0,0,0;1,-1,-1,0", "", "", ""},
    {"A12_3", GG, R3, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- Jordan, characteristic not 2, 3 or 5 -----
    {"J1", GJ, N0, "", "1/2,0,0,1;0,1/2,1/2,0", "", "", ""},
    {"J2", GJ, N0, "", "1/2,0,0,1;0,-1/2,1/2,0", "", "", ""},
    {"J3", GJ, N0, "a1", "p0,0,0,0;0,2*p0-1,1-p0,0", "nz:1-5*p0+5*p0^2", "", ""},
    {"J4", GJ, N0, "a1", "p0,0,0,0;0,sqrt(p0-p0^2),1-p0,0", "", "", ""},
    {"J5", GJ, N0, "a1", "p0,0,0,0;0,-sqrt(p0-p0^2),1-p0,0", "nz:p0;nz:1-p0", "", ""},
    {"J6", GJ, N0, "", "(5-sqrt(5))/10,0,0,0;1,-sqrt(5)/5,(5+sqrt(5))/10,0", "", "", ""},
    {"J7", GJ, N0, "", "(5+sqrt(5))/10,0,0,0;1,sqrt(5)/5,(5-sqrt(5))/10,0", "", "", ""},
    {"J8", GJ, N0, "", "1/3,0,0,0;0,2/3,-1/3,0", "", "", ""},
    {"J9", GJ, N0, "", "(1-sqrt(-1))/2,0,0,0;0,(1+sqrt(-1))/2,(-1+sqrt(-1))/2,0", "", "", ""},
    {"J10", GJ, N0, "", "(1+sqrt(-1))/2,0,0,0;0,(1-sqrt(-1))/2,(-1-sqrt(-1))/2,0", "", "", ""},
    {"J11", GJ, N0, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- Jordan, characteristic 2 -----
    {"J1_2", GJ, R2, "", "0,1,1,0;0,0,1,1", "", "", ""},
    {"J2_2", GJ, R2, "", "1,1,1,0;0,0,0,1", "", "", ""},
    {"J3_2", GJ, R2, "a1", "p0,0,0,0;0,1,1-p0,0", "", "", ""},
    {"J4_2", GJ, R2, "a1", "p0,0,0,0;0,sqrt(p0+p0^2),1-p0,0", "nz:p0^2+p0+1", "", ""},
    {"J5_2", GJ, R2, "a1", "p0,0,0,0;1,1,1-p0,0", "z:p0^2+p0+1", "", ""},
    {"J6_2", GJ, R2, "", "1,0,0,0;0,0,1,0", "", "", ""},
    {"J7_2", GJ, R2, "", "0,1,1,0;0,0,0,-1", "", "", ""},
    {"J8_2", GJ, R2, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- Jordan, characteristic 3 -----
    {"J1_3", GJ, R3, "", "-1,0,0,1;0,1,2,0", "", "", ""},
    {"J2_3", GJ, R3, "", "-1,0,0,1;0,-1,2,0", "", "", ""},
    {"J3_3", GJ, R3, "a1", "p0,0,0,0;0,-1-p0,1-p0,0", "nz:p0^2+2*p0+2", "", ""},
    {"J4_3", GJ, R3, "a1", "p0,0,0,0;0,sqrt(p0-p0^2),1-p0,0", "", "", ""},
    {"J5_3", GJ, R3, "a1", "p0,0,0,0;0,-sqrt(p0-p0^2),1-p0,0", "nz:p0;nz:1-p0", "", ""},
    {"J6_3", GJ, R3, "", "-1+sqrt(-1),0,0,0;1,-sqrt(-1),2-sqrt(-1),0", "", "", ""},
    {"J7_3", GJ, R3, "", "-1-sqrt(-1),0,0,0;1,sqrt(-1),2+sqrt(-1),0", "", "", ""},
    {"J8_3", GJ, R3, "", "-1+sqrt(-1),0,0,0;0,2-sqrt(-1),1-sqrt(-1),0", "", "", ""},
    {"J9_3", GJ, R3, "", "-1-sqrt(-1),0,0,0;0,2+sqrt(-1),1+sqrt(-1),0", "", "", ""},
    {"J10_3", GJ, R3, "", "0,1,1,0;0,0,0,-1", "", "", ""},
    {"J11_3", GJ, R3, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- Jordan, characteristic 5 -----
    {"J1_5", GJ, R5, "", "1/2,0,0,1;0,1/2,1/2,0", "", "", ""},
    {"J2_5", GJ, R5, "", "1/2,0,0,1;0,-1/2,1/2,0", "", "", ""},
    {"J3_5", GJ, R5, "a1", "p0,0,0,0;0,2*p0-1,1-p0,0", "", "", ""},
    {"J4_5", GJ, R5, "a1", "p0,0,0,0;0,sqrt(p0-p0^2),1-p0,0", "", "", ""},
    {"J5_5", GJ, R5, "a1", "p0,0,0,0;0,-sqrt(p0-p0^2),1-p0,0", "nz:p0;nz:1-p0", "", ""},
    {"J6_5", GJ, R5, "", "1/3,0,0,0;0,2/3,-1/3,0", "", "", ""},
    {"J7_5", GJ, R5, "", "(1-sqrt(-1))/2,0,0,0;0,(1+sqrt(-1))/2,(-1+sqrt(-1))/2,0", "", "", ""},
    {"J8_5", GJ, R5, "", "(1+sqrt(-1))/2,0,0,0;0,(1-sqrt(-1))/2,(-1-sqrt(-1))/2,0", "", "", ""},
    {"J9_5", GJ, R5, "", "1/3,0,0,0;1,2/3,-1/3,0", "", "", ""},
    {"J10_5", GJ, R5, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- commutative Jordan, characteristic not 2 or 3 -----
    {"Jc1", GC, N0, "", "1/2,0,0,1;0,1/2,1/2,0", "", "", ""},
    {"Jc2", GC, N0, "", "2/3,0,0,0;0,1/3,1/3,0", "", "", ""},
    {"Jc3", GC, N0, "", "1,0,0,0;0,0,0,0", "", "", ""},
    {"Jc4", GC, N0, "", "1/2,0,0,0;0,1/2,1/2,0", "", "", ""},
    {"Jc5", GC, N0, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- commutative Jordan, characteristic 2 -----
    {"Jc1_2", GC, R2, "", "1,1,1,0;0,0,0,1", "", "", ""},
    {"Jc2_2", GC, R2, "", "1,0,0,0;0,0,0,0", "", "", ""},
    {"Jc3_2", GC, R2, "", "0,0,0,0;0,1,1,0", "", "", ""},
    {"Jc4_2", GC, R2, "", "0,1,1,0;0,0,0,1", "", "", ""},
    {"Jc5_2", GC, R2, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- commutative Jordan, characteristic 3 -----
    {"Jc1_3", GC, R3, "", "-1,0,0,1;0,-1,-1,0", "", "", ""},
    {"Jc2_3", GC, R3, "", "1,0,0,0;0,0,0,0", "", "", ""},
    {"Jc3_3", GC, R3, "", "-1,0,0,0;0,-1,-1,0", "", "", ""},
    {"Jc4_3", GC, R3, "", "0,1,1,0;0,0,0,-1", "", "", ""},
    {"Jc5_3", GC, R3, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- general over the reals -----
    {"A1r", RG, RR, "a1,a2,a4,b1", "p0,p1,p1+1,p2;p3,-p0,1-p0,-p1", "", "", ""},
    {"A2r", RG, RR, "a1,b1,b2", "p0,0,0,1;p1,p2,1-p0,0", "nn:p1", "", ""},
    {"A3r", RG, RR, "a1,b1,b2", "p0,0,0,-1;p1,p2,1-p0,0", "nn:p1", "", ""},
    {"A4r", RG, RR, "b1,b2", "0,1,1,0;p0,p1,1,-1", "", "", ""},
    {"A5r", RG, RR, "a1,b2", "p0,0,0,0;0,p1,1-p0,0", "", "", ""},
    {"A6r", RG, RR, "a1", "p0,0,0,0;1,2*p0-1,1-p0,0", "", "", ""},
    {"A7r", RG, RR, "a1,b1", "p0,0,0,1;p1,1-p0,-p0,0", "nn:p1", "", ""},
    {"A8r", RG, RR, "a1,b1", "p0,0,0,-1;p1,1-p0,-p0,0", "nn:p1", "", ""},
    {"A9r", RG, RR, "b1", "0,1,1,0;p0,1,0,-1", "", "", ""},
    {"A10r", RG, RR, "a1", "p0,0,0,0;0,1-p0,-p0,0", "", "", ""},
    {"A11r", RG, RR, "", "1/3,0,0,0;1,2/3,-1/3,0", "", "", ""},
    {"A12r", RG, RR, "", "0,1,1,0;1,0,0,-1", "", "", ""},
    {"A13r", RG, RR, "", "0,1,1,0;-1,0,0,-1", "", "", ""},
    {"A14r", RG, RR, "", "0,1,1,0;0,0,0,-1", "", "", ""},
    {"A15r", RG, RR, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- Jordan over the reals -----
    {"J1r", RJ, RR, "", "1/2,0,0,1;0,1/2,1/2,0", "", "", ""},
    {"J2r", RJ, RR, "", "1/2,0,0,1;0,-1/2,1/2,0", "", "", ""},
    {"J3r", RJ, RR, "", "1/2,0,0,-1;0,1/2,1/2,0", "", "", ""},
    {"J4r", RJ, RR, "", "1/2,0,0,-1;0,-1/2,1/2,0", "", "", ""},
    {"J5r", RJ, RR, "a1", "p0,0,0,0;0,2*p0-1,1-p0,0", "nz:1-5*p0+5*p0^2", "", ""},
    {"J6r", RJ, RR, "a1", "p0,0,0,0;0,sqrt(p0-p0^2),1-p0,0", "nn:p0;nn:1-p0", "", ""},
    {"J7r", RJ, RR, "a1", "p0,0,0,0;0,-sqrt(p0-p0^2),1-p0,0", "pos:p0;pos:1-p0", "", ""},
    {"J8r", RJ, RR, "", "(5-sqrt(5))/10,0,0,0;1,-sqrt(5)/5,(5+sqrt(5))/10,0", "", "", ""},
    {"J9r", RJ, RR, "", "(5+sqrt(5))/10,0,0,0;1,sqrt(5)/5,(5-sqrt(5))/10,0", "", "", ""},
    {"J10r", RJ, RR, "", "1/3,0,0,0;0,2/3,-1/3,0", "", "", ""},
    {"J11r", RJ, RR, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- commutative Jordan over the reals -----
    {"Jc1r", RC, RR, "", "1/2,0,0,1;0,1/2,1/2,0", "", "", ""},
    {"Jc2r", RC, RR, "", "1/2,0,0,-1;0,1/2,1/2,0", "", "", ""},
    {"Jc3r", RC, RR, "", "2/3,0,0,0;0,1/3,1/3,0", "", "", ""},
    {"Jc4r", RC, RR, "", "1,0,0,0;0,0,0,0", "", "", ""},
    {"Jc5r", RC, RR, "", "1/2,0,0,0;0,1/2,1/2,0", "", "", ""},
    {"Jc6r", RC, RR, "", "0,0,0,0;1,0,0,0", "", "", ""},
    // ----- the historical crosswalk list -----
    {"W-A1", GW, RR, "", "0,0,0,0;0,0,0,0", "", "", "trivial (zero product)"},
    {"W-A3", GW, RR, "", "1,0,0,0;0,0,1,0", "", "", "J5r(1/2)"},
    {"W-Asigma", GW, RR, "s", "1+p0,0,0,0;0,1,p0,0", "", "",
     "J5r((1+s)/(1+2s)) when 1+2s and s^2+s-1 are nonzero; J10r at s=-1/2; "
     "J6r((5+sqrt(5))/10), J7r((5-sqrt(5))/10) at s=(-1+sqrt(5))/2, (-1-sqrt(5))/2; "
     "commutative class of A(1) is Jc3r"},
    {"W-B1", GW, RR, "", "0,0,0,0;1,0,0,0", "", "", "J11r; commutative class Jc6r"},
    {"W-B2", GW, RR, "", "0,0,0,0;1,1,1,1", "", "", "J6r(1); commutative class Jc4r"},
    {"W-B3", GW, RR, "", "0,1,1,0;1,0,0,1", "", "", "J1r; commutative class Jc1r"},
    {"W-B4", GW, RR, "", "0,1,1,0;-1,0,0,1", "", "", "J3r; commutative class Jc2r"},
    {"W-B5", GW, RR, "", "0,1,1,0;0,0,0,1", "", "", "J6r(1/2); commutative class Jc5r"},
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else
      cur.push_back(c);
  }
  out.push_back(cur);
  return out;
}

std::string display_text(std::string expr, const std::vector<std::string>& names) {
  for (int i = static_cast<int>(names.size()) - 1; i >= 0; --i) {
    std::string tok = "p" + std::to_string(i);
    std::size_t at = 0;
    while ((at = expr.find(tok, at)) != std::string::npos) {
      expr.replace(at, tok.size(), names[i]);
      at += names[i].size();
    }
  }
  return expr;
}

CatalogEntry build(const Def& d) {
  CatalogEntry e;
  e.id = d.id;
  e.group = d.group;
  e.regime = d.regime;
  if (*d.params) e.param_names = split(d.params, ',');
  std::vector<std::string> rows = split(d.tmpl, ';');
  if (rows.size() != 2) throw error("bad template for " + e.id);
  std::vector<std::string> cells = split(rows[0], ',');
  std::vector<std::string> cells2 = split(rows[1], ',');
  if (cells.size() != 4 || cells2.size() != 4) throw error("bad template for " + e.id);
  cells.insert(cells.end(), cells2.begin(), cells2.end());
  for (int i = 0; i < 8; ++i) e.tmpl[i] = parse_expr(cells[i]);
  if (*d.constraints) {
    for (const std::string& item : split(d.constraints, ';')) {
      std::size_t colon = item.find(':');
      std::string kind = item.substr(0, colon), body = item.substr(colon + 1);
      CatalogEntry::Constraint c;
      if (kind == "nz") {
        c.kind = ConstraintKind::NonZero;
        c.text = display_text(body, e.param_names) + " != 0";
      } else if (kind == "z") {
        c.kind = ConstraintKind::Zero;
        c.text = display_text(body, e.param_names) + " == 0";
      } else if (kind == "nn") {
        c.kind = ConstraintKind::NonNeg;
        c.text = display_text(body, e.param_names) + " >= 0";
      } else if (kind == "pos") {
        c.kind = ConstraintKind::Pos;
        c.text = display_text(body, e.param_names) + " > 0";
      } else
        throw error("bad constraint kind for " + e.id);
      c.expr = parse_expr(body);
      e.constraints.push_back(std::move(c));
    }
  }
  e.identification = d.ident;
  e.crosswalk = d.crosswalk;
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& all_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const Def& d : kDefs) out.push_back(build(d));
    return out;
  }();
  return entries;
}

std::vector<const CatalogEntry*> list_entries(Group g, Regime r) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : all_entries())
    if (e.group == g && e.regime == r) out.push_back(&e);
  return out;
}

const CatalogEntry* find_entry(std::string_view id) {
  for (const CatalogEntry& e : all_entries())
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace msc2
