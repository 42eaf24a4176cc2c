#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coarse_menger {

/// Integer pair (a, b) with 0 <= a <= b.
struct Interval {
  int a = 0;
  int b = 0;

  int length() const { return b - a; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

inline bool captures(const Interval& outer, const Interval& inner) { return outer.a <= inner.a && inner.b <= outer.b; }

class IntervalError : public std::invalid_argument {
 public:
  enum class Kind { kBadInterval, kBadEll, kNotPowerful, kStuckProgress, kOrderViolation };

  IntervalError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Intervals inside the horizon (0, n). Construction validates 0 <= a <= b <= n.
class IntervalFamily {
 public:
  IntervalFamily() = default;
  IntervalFamily(int horizon, std::vector<Interval> items);

  int horizon() const { return horizon_; }
  const std::vector<Interval>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Interval& operator[](std::size_t i) const { return items_[i]; }

  /// Stored order has strictly increasing a's and b's (so no member captures another).
  bool is_standard_form() const;

  friend bool operator==(const IntervalFamily&, const IntervalFamily&) = default;

 private:
  int horizon_ = 0;
  std::vector<Interval> items_;
};

/// Drops captured members and duplicates; sorts ascending.
IntervalFamily to_standard_form(const IntervalFamily& family);

/// True iff every (h, h+ell) with 0 <= h <= n-ell is captured.
/// Throws IntervalError(kBadEll) unless 0 < ell <= n.
bool is_powerful(const IntervalFamily& family, int ell);

/// Offsets h whose (h, h+ell) no member captures, ascending.
std::vector<int> uncovered_offsets(const IntervalFamily& family, int ell);

/// Inclusion-minimal ell-powerful subfamily, in standard form: a left to
/// right sweep drops a member whenever the rest stays ell-powerful.
IntervalFamily prune_minimal(const IntervalFamily& family, int ell);

/// Greedy selection from a 2ell-powerful family; the result is minimally
/// ell-powerful. Requires 0 < 2*ell <= n.
IntervalFamily int2_select(const IntervalFamily& family, int ell);

/// (a, b) -> (n-b, n-a), in standard order.
IntervalFamily reverse_family(const IntervalFamily& family);

/// From a 4ell-powerful family, a minimally ell-powerful subfamily whose
/// endpoints interleave and are pairwise >= ell apart (three exception
/// classes). Requires 0 < 4*ell <= n. Order and gaps are asserted in the
/// non-strict form, with the (a_{i+1},b_i) gaps at ell-1.
IntervalFamily mainint_select(const IntervalFamily& family, int ell);

// Property checks over a standard-form family. Each returns a description
// of the first violation, or nullopt.

/// a_j >= b_i - ell + 2 whenever j >= i+2.
std::optional<std::string> check_far_ends(const IntervalFamily& family, int ell);

/// b_i - b_{i-1} >= ell for 1 < i < t.
std::optional<std::string> check_right_end_gaps(const IntervalFamily& family, int ell);

/// b_{i-1} - a_i >= ell for 1 < i <= t.
std::optional<std::string> check_overlap_gaps(const IntervalFamily& family, int ell);

/// The interleaving chain 0 = a_1 < a_2 < min(a_3,b_1) < max(a_3,b_1) < ... < b_{t-1} < b_t = n.
/// With strict off, a_i == b_{i-2} and a_{i+1} == b_i are accepted.
std::optional<std::string> check_interleaving(const IntervalFamily& family, bool strict = true);

/// All endpoint pairs differ by >= ell except (a_1,a_2), (b_{t-1},b_t) and
/// (a_i,b_{i-2}). Pairs (a_{i+1},b_i) need only ell - consecutive_slack.
std::optional<std::string> check_endpoint_gaps(const IntervalFamily& family, int ell, int consecutive_slack = 0);

}  // namespace coarse_menger
