#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "powertree/reference_solvers.hpp"
#include "powertree/tree.hpp"

namespace powertree {

// Harmonic numbers outgrow 64-bit fractions around n = 46, hence big rationals.
using BigRational = boost::multiprecision::cpp_rational;

BigRational harmonic(int n);

// m * H_i. Throws kInvalidArgument for i < 1.
BigRational delta_spanning(const BigRational& m, int i);

// m * (H_i / 2^i + (1 - 2^-i) * sum_{q>=1} H_{q+i} / 2^q), summed until the
// tail bound (H_{q+i} + 2) / 2^q drops below 1e-12.
double delta_steiner(double m, int i);

enum class DeltaKind { kSpanning, kSteiner };

struct DeltaPropertyReport {
  std::vector<double> values;  // values[i] for i = 1..i_max+1, values[0] unused
  bool increasing = true;      // delta_i <= delta_{i+1}, i = 1..i_max
  bool diminishing = true;     // delta_i - delta_{i-1} >= delta_{i+1} - delta_i, i = 2..i_max
  int first_violation = 0;     // 0 when both hold
};

// Tolerance 1e-9 * m. Throws kInvalidArgument unless 1 <= i_max <= 50.
DeltaPropertyReport check_delta_properties(DeltaKind kind, int i_max, double m = 1.0);

struct EdgeClassification {
  std::vector<int> heavy, middle, light;  // edge indices, ascending
  Rational gamma_heavy, gamma_middle, alpha;
};

// Each node designates its most expensive incident tree edge (smallest index
// on ties). Heavy edges are designated by both endpoints, middle by one,
// light by none; p = (2 gamma_heavy + gamma_middle) c. A zero-cost tree gets
// gamma_heavy = 1/2, gamma_middle = 0, alpha = 1.
EdgeClassification classify_edges(const Tree& tree);
// Same over instance edges; indices in the result are instance edge ids.
EdgeClassification classify_edges(const Instance& instance, std::span<const EdgeId> edges);

// Guaranteed factors: 3 ln 4 - 9/4 for Steiner trees, 3/2 for spanning trees.
double theoretical_factor(TreeMode mode);

}  // namespace powertree
