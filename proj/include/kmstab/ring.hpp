#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kmstab/diagram.hpp"
#include "kmstab/path.hpp"
#include "kmstab/weight.hpp"

namespace kmstab {

/// Bounds under which a product table is complete: depth of lambda + mu - gamma,
/// tail length and head length of gamma. A zero max_head means
/// max(d, l(x_lambda) + l(x_mu)).
struct Cutoff {
  std::int64_t max_depth = 0;
  std::size_t max_tail = 0;
  std::size_t max_head = 0;

  friend bool operator==(const Cutoff&, const Cutoff&) = default;
};

/// A truncated element of the stable representation ring. Terms are kept in
/// the canonical order (head lexicographic, then tail lexicographic); every
/// term has the same grade.
struct MultTable {
  std::int64_t grade = 0;
  Cutoff cutoff;
  std::map<DoubleWeight, std::int64_t> terms;

  friend bool operator==(const MultTable&, const MultTable&) = default;
};

/// Level and root-coefficient budget used for one product evaluation.
struct ProductPlan {
  std::size_t level = 0;
  std::size_t head_window = 0;
  std::size_t tail_window = 0;
  std::vector<std::int64_t> budget;
};

ProductPlan plan_product(const DoubleWeight& lambda, const DoubleWeight& mu, const MarkedDiagram& x,
                         const Cutoff& cutoff);

/// v_lambda * v_mu restricted to the cutoff; exactly the gamma with
/// c(infinity) > 0 inside it.
MultTable stable_product(const DoubleWeight& lambda, const DoubleWeight& mu, const MarkedDiagram& x,
                         const Cutoff& cutoff, const ExploreOptions& opts = {});

struct AssociativityReport {
  bool associative = true;
  /// Both bracketings restricted to the compared window.
  MultTable left;
  MultTable right;
  std::vector<std::string> discrepancies;
};

/// Compares (v_lambda * v_mu) * v_nu with v_lambda * (v_mu * v_nu) on the
/// terms inside `cutoff`; inner products are widened so that both sides are
/// complete there.
AssociativityReport check_associativity(const DoubleWeight& lambda, const DoubleWeight& mu, const DoubleWeight& nu,
                                        const MarkedDiagram& x, const Cutoff& cutoff,
                                        const ExploreOptions& opts = {});

}  // namespace kmstab
