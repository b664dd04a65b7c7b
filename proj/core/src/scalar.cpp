#include "msc2/scalar.hpp"

#include <charconv>

namespace msc2 {

namespace {

std::optional<long> parse_long(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

AnyField parse_field(std::string_view desc) {
  std::string s;
  for (char c : desc)
    if (c != ' ') s.push_back(c);
  if (s == "Q") return AnyField(Rational{});
  if (s.rfind("Q(sqrt:", 0) == 0 && s.back() == ')') {
    auto d = parse_long(std::string_view(s).substr(7, s.size() - 8));
    if (!d) throw error("bad field descriptor: " + s);
    return AnyField(QuadExt(*d));
  }
  if (s.rfind("GF:", 0) == 0) {
    std::string_view body = std::string_view(s).substr(3);
    bool squared = false;
    if (body.size() > 2 && body.substr(body.size() - 2) == "^2") {
      squared = true;
      body = body.substr(0, body.size() - 2);
    }
    auto p = parse_long(body);
    if (!p) throw error("bad field descriptor: " + s);
    if (squared) return AnyField(PrimeQuadField(*p));
    return AnyField(PrimeField(*p));
  }
  throw error("bad field descriptor: " + s);
}

}  // namespace msc2
