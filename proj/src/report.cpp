#include "locdom/report.hpp"

#include <numeric>
#include <stdexcept>

namespace locdom {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

std::string_view to_string(SkipReason reason) {
  switch (reason) {
    case SkipReason::isolated_edge: return "isolated_edge";
    case SkipReason::isolated_vertex: return "isolated_vertex";
    case SkipReason::not_edge_twin_free: return "not_edge_twin_free";
    case SkipReason::disconnected: return "disconnected";
    case SkipReason::size_mismatch: return "size_mismatch";
  }
  return "unknown";
}

Check make_check(std::string parameter, std::size_t value, Rational bound, Relation relation) {
  Check c{std::move(parameter), value, bound, relation, false};
  Rational v(static_cast<std::int64_t>(value));
  c.holds = relation == Relation::equal ? v == bound : v <= bound;
  return c;
}

bool BoundReport::violated() const {
  if (!asserted()) return false;
  for (const auto& c : checks)
    if (!c.holds) return true;
  return false;
}

}  // namespace locdom
