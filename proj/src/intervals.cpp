#include "coarse_menger/intervals.hpp"

#include <algorithm>
#include <sstream>

namespace coarse_menger {
namespace {

std::string show(const Interval& iv) {
  return "(" + std::to_string(iv.a) + "," + std::to_string(iv.b) + ")";
}

void require_ell(int ell, int n, const char* op) {
  if (ell <= 0 || ell > n) {
    throw IntervalError(IntervalError::Kind::kBadEll,
                        std::string(op) + ": need 0 < ell <= n, got ell=" + std::to_string(ell) + " n=" + std::to_string(n));
  }
}

// best_right[h] = max b over members with a <= h (or -1).
std::vector<int> best_right_by_left(const IntervalFamily& family) {
  std::vector<int> best(static_cast<std::size_t>(family.horizon()) + 1, -1);
  for (const Interval& iv : family.items()) best[iv.a] = std::max(best[iv.a], iv.b);
  for (std::size_t h = 1; h < best.size(); ++h) best[h] = std::max(best[h], best[h - 1]);
  return best;
}

bool powerful_unchecked(const IntervalFamily& family, int ell) {
  auto best = best_right_by_left(family);
  for (int h = 0; h + ell <= family.horizon(); ++h) {
    if (best[h] < h + ell) return false;
  }
  return true;
}

// Member capturing `target` with the largest b, ties broken by largest a.
std::optional<Interval> widest_right_capturer(const IntervalFamily& family, const Interval& target) {
  std::optional<Interval> pick;
  for (const Interval& iv : family.items()) {
    if (!captures(iv, target)) continue;
    if (!pick || iv.b > pick->b || (iv.b == pick->b && iv.a > pick->a)) pick = iv;
  }
  return pick;
}

}  // namespace

IntervalFamily::IntervalFamily(int horizon, std::vector<Interval> items) : horizon_(horizon), items_(std::move(items)) {
  if (horizon_ < 0) throw IntervalError(IntervalError::Kind::kBadInterval, "negative horizon");
  for (const Interval& iv : items_) {
    if (iv.a < 0 || iv.a > iv.b || iv.b > horizon_) {
      throw IntervalError(IntervalError::Kind::kBadInterval,
                          "interval " + show(iv) + " not inside (0," + std::to_string(horizon_) + ")");
    }
  }
}

bool IntervalFamily::is_standard_form() const {
  for (std::size_t i = 1; i < items_.size(); ++i) {
    if (items_[i].a <= items_[i - 1].a || items_[i].b <= items_[i - 1].b) return false;
  }
  return true;
}

IntervalFamily to_standard_form(const IntervalFamily& family) {
  std::vector<Interval> sorted = family.items();
  // Ascending a, and for equal a descending b, so that the first of each
  // left endpoint is the widest.
  std::sort(sorted.begin(), sorted.end(), [](const Interval& x, const Interval& y) {
    return x.a != y.a ? x.a < y.a : x.b > y.b;
  });
  std::vector<Interval> kept;
  for (const Interval& iv : sorted) {
    // A member is captured by an earlier one iff some earlier b reaches it;
    // earlier b's on the stack are increasing, so the last one decides.
    if (!kept.empty() && kept.back().b >= iv.b) continue;
    kept.push_back(iv);
  }
  return IntervalFamily(family.horizon(), std::move(kept));
}

bool is_powerful(const IntervalFamily& family, int ell) {
  require_ell(ell, family.horizon(), "is_powerful");
  return powerful_unchecked(family, ell);
}

std::vector<int> uncovered_offsets(const IntervalFamily& family, int ell) {
  require_ell(ell, family.horizon(), "uncovered_offsets");
  auto best = best_right_by_left(family);
  std::vector<int> out;
  for (int h = 0; h + ell <= family.horizon(); ++h) {
    if (best[h] < h + ell) out.push_back(h);
  }
  return out;
}

IntervalFamily prune_minimal(const IntervalFamily& family, int ell) {
  require_ell(ell, family.horizon(), "prune_minimal");
  IntervalFamily current = to_standard_form(family);
  if (!powerful_unchecked(current, ell)) {
    throw IntervalError(IntervalError::Kind::kNotPowerful, "prune_minimal: family is not " + std::to_string(ell) + "-powerful");
  }
  std::vector<Interval> items = current.items();
  std::size_t i = 0;
  while (i < items.size()) {
    std::vector<Interval> rest;
    rest.reserve(items.size() - 1);
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (j != i) rest.push_back(items[j]);
    }
    if (powerful_unchecked(IntervalFamily(family.horizon(), rest), ell)) {
      items = std::move(rest);
    } else {
      ++i;
    }
  }
  return IntervalFamily(family.horizon(), std::move(items));
}

IntervalFamily int2_select(const IntervalFamily& family, int ell) {
  const int n = family.horizon();
  if (ell <= 0 || 2 * ell > n) {
    throw IntervalError(IntervalError::Kind::kBadEll,
                        "int2_select: need 0 < 2*ell <= n, got ell=" + std::to_string(ell) + " n=" + std::to_string(n));
  }
  if (!powerful_unchecked(family, 2 * ell)) {
    throw IntervalError(IntervalError::Kind::kNotPowerful, "int2_select: family is not " + std::to_string(2 * ell) + "-powerful");
  }
  const IntervalFamily pool = prune_minimal(family, 2 * ell);

  auto first = widest_right_capturer(pool, {0, 2 * ell});
  if (!first) throw IntervalError(IntervalError::Kind::kStuckProgress, "int2_select: nothing captures (0,2ell)");
  std::vector<Interval> chosen{*first};
  while (chosen.back().b != n) {
    const int b = chosen.back().b;
    const Interval target = b < n - ell ? Interval{b - ell, b + ell} : Interval{n - 2 * ell, n};
    auto next = widest_right_capturer(pool, target);
    if (!next || next->b <= b) {
      throw IntervalError(IntervalError::Kind::kStuckProgress,
                          "int2_select: no progress past b=" + std::to_string(b) + " while capturing " + show(target));
    }
    chosen.push_back(*next);
  }
  return prune_minimal(IntervalFamily(n, std::move(chosen)), ell);
}

IntervalFamily reverse_family(const IntervalFamily& family) {
  const int n = family.horizon();
  std::vector<Interval> out;
  out.reserve(family.size());
  for (const Interval& iv : family.items()) out.push_back({n - iv.b, n - iv.a});
  std::sort(out.begin(), out.end());
  return IntervalFamily(n, std::move(out));
}

IntervalFamily mainint_select(const IntervalFamily& family, int ell) {
  const int n = family.horizon();
  if (ell <= 0 || 4 * ell > n) {
    throw IntervalError(IntervalError::Kind::kBadEll,
                        "mainint_select: need 0 < 4*ell <= n, got ell=" + std::to_string(ell) + " n=" + std::to_string(n));
  }
  if (!powerful_unchecked(family, 4 * ell)) {
    throw IntervalError(IntervalError::Kind::kNotPowerful,
                        "mainint_select: family is not " + std::to_string(4 * ell) + "-powerful");
  }
  IntervalFamily wide = int2_select(family, 2 * ell);
  IntervalFamily result = reverse_family(int2_select(reverse_family(wide), ell));

  // Only what powerfulness gives is asserted: b_i - a_{i+1} >= ell-1 (so
  // a_{i+1} == b_i when ell = 1), and a_i == b_{i-2} is possible.
  if (auto bad = check_interleaving(result, false)) {
    throw IntervalError(IntervalError::Kind::kOrderViolation, "mainint_select: " + *bad);
  }
  if (auto bad = check_endpoint_gaps(result, ell, 1)) {
    throw IntervalError(IntervalError::Kind::kOrderViolation, "mainint_select: " + *bad);
  }
  return result;
}

std::optional<std::string> check_far_ends(const IntervalFamily& family, int ell) {
  const auto& h = family.items();
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 2; j < h.size(); ++j) {
      if (h[j].a < h[i].b - ell + 2) {
        return "a_" + std::to_string(j + 1) + "=" + std::to_string(h[j].a) + " < b_" + std::to_string(i + 1) + "-ell+2=" +
               std::to_string(h[i].b - ell + 2);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_right_end_gaps(const IntervalFamily& family, int ell) {
  const auto& h = family.items();
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i].b - h[i - 1].b < ell) {
      return "b_" + std::to_string(i + 1) + "-b_" + std::to_string(i) + "=" + std::to_string(h[i].b - h[i - 1].b) + " < " +
             std::to_string(ell);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_overlap_gaps(const IntervalFamily& family, int ell) {
  const auto& h = family.items();
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i - 1].b - h[i].a < ell) {
      return "b_" + std::to_string(i) + "-a_" + std::to_string(i + 1) + "=" + std::to_string(h[i - 1].b - h[i].a) + " < " +
             std::to_string(ell);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_interleaving(const IntervalFamily& family, bool strict) {
  const auto& h = family.items();
  const int n = family.horizon();
  const std::size_t t = h.size();
  if (t == 0) return "empty family";
  if (h.front().a != 0) return "a_1 != 0";
  if (h.back().b != n) return "b_t != n";
  if (t == 1) return std::nullopt;

  // Chain positions in order. Position g >= 2 holds a_{g+1} and b_{g-1}
  // (1-based), so consecutive positions meet a_{i+1} against b_i.
  struct Entry {
    char kind;
    std::size_t index;  // 0-based
    int value;
  };
  std::vector<std::vector<Entry>> groups;
  groups.push_back({{'a', 0, h[0].a}});
  groups.push_back({{'a', 1, h[1].a}});
  for (std::size_t i = 2; i < t; ++i) {
    if (strict && h[i].a == h[i - 2].b) {
      return "a_" + std::to_string(i + 1) + " == b_" + std::to_string(i - 1) + " = " + std::to_string(h[i].a);
    }
    groups.push_back({{'a', i, h[i].a}, {'b', i - 2, h[i - 2].b}});
  }
  groups.push_back({{'b', t - 2, h[t - 2].b}});
  groups.push_back({{'b', t - 1, h[t - 1].b}});
  for (std::size_t g = 1; g < groups.size(); ++g) {
    for (const Entry& lo : groups[g - 1]) {
      for (const Entry& hi : groups[g]) {
        const bool overlap_pair = lo.kind == 'a' && hi.kind == 'b' && lo.index == hi.index + 1;
        if (lo.value < hi.value || (!strict && overlap_pair && lo.value == hi.value)) continue;
        std::ostringstream os;
        os << lo.kind << "_" << lo.index + 1 << "=" << lo.value << " not below " << hi.kind << "_" << hi.index + 1 << "="
           << hi.value;
        return os.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_endpoint_gaps(const IntervalFamily& family, int ell, int consecutive_slack) {
  const auto& h = family.items();
  const std::size_t t = h.size();
  auto fail = [&](const std::string& x, std::size_t i, const std::string& y, std::size_t j, int diff) {
    return x + "_" + std::to_string(i + 1) + " vs " + y + "_" + std::to_string(j + 1) + " differ by " + std::to_string(diff) +
           " < " + std::to_string(ell);
  };
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (!(i == 0 && j == 1) && std::abs(h[j].a - h[i].a) < ell) return fail("a", i, "a", j, std::abs(h[j].a - h[i].a));
      if (!(i + 2 == t && j + 1 == t) && std::abs(h[j].b - h[i].b) < ell) return fail("b", i, "b", j, std::abs(h[j].b - h[i].b));
    }
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (i >= 2 && j == i - 2) continue;
      const int floor = j + 1 == i ? ell - consecutive_slack : ell;
      if (std::abs(h[i].a - h[j].b) < floor) return fail("a", i, "b", j, std::abs(h[i].a - h[j].b));
    }
  }
  return std::nullopt;
}

}  // namespace coarse_menger
