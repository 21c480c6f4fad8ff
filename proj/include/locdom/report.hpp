#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locdom {

/// Exact non-negative rational used for the m/2 and 2m/3 style bounds.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// "7" or "14/3".
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend Rational operator-(const Rational& a, const Rational& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

enum class SkipReason { isolated_edge, isolated_vertex, not_edge_twin_free, disconnected, size_mismatch };

std::string_view to_string(SkipReason reason);

enum class Relation { at_most, equal };

struct Check {
  std::string parameter;
  std::size_t value = 0;
  Rational bound;
  Relation relation = Relation::at_most;
  bool holds = false;
};

Check make_check(std::string parameter, std::size_t value, Rational bound, Relation relation = Relation::at_most);

/// Per-graph verification record. A record may carry a skip reason and still
/// hold evaluated checks; such checks are reported but not asserted.
struct BoundReport {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string parameter;  // primary parameter of the theorem, used for skip lines
  std::vector<Check> checks;
  std::optional<SkipReason> skipped_reason;

  bool asserted() const { return !skipped_reason.has_value(); }
  bool violated() const;
};

}  // namespace locdom
