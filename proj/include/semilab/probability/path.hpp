#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "semilab/algebra/instance.hpp"

namespace semilab {

// left:  S_j = x_1 ... x_j, radial d(z1, z0 S_j), increments d(z0, z0 x_j).
// right: S_j = x_j ... x_1, radial d(z1, S_j z0), increments d(z0, x_j z0).
enum class Orientation { left, right };

std::string to_string(Orientation orientation);
Orientation parse_orientation(std::string_view text);

std::vector<Element> partial_products(const MetricSemigroup& instance,
                                      std::span<const Element> xs,
                                      Orientation orientation = Orientation::left);

// Functionals of one outcome (x_1..x_n). Vectors are indexed from 0, so
// radial[k] is the value at step k + 1.
struct PathStatistics {
  std::vector<Element> partial;            // S_1..S_n
  std::vector<double> radial;              // d(z1, z0 S_k)
  std::vector<double> to_end;              // d(S_k, S_n)
  std::vector<double> increments;          // Y_1..Y_n
  std::vector<double> running_max;         // M_1..M_n
  std::vector<double> sorted_increments;   // Y_(1) <= ... <= Y_(n)
  double max_radial = 0.0;                 // U_n

  std::size_t length() const { return increments.size(); }
  double U() const { return max_radial; }
  double M() const { return running_max.back(); }
  double final_radial() const { return radial.back(); }

  // Y_(n) + Y_(n-1) + ... over the `count` largest increments, summed from
  // the largest down. count = 0 gives 0; count > n throws.
  double top_sum(std::size_t count) const;
  // Y_(n-K+2) + ... + Y_(n), i.e. top_sum(K - 1).
  double k_tail(std::size_t K) const;

  // max over m <= k <= n (1-based) of radial / min likewise.
  double max_radial_from(std::size_t m) const;
  double min_radial_from(std::size_t m) const;
};

// Fills `out`, reusing its buffers. xs must be nonempty.
void compute_path_statistics(const MetricSemigroup& instance, std::span<const Element> xs,
                             const Element& z0, const Element& z1, Orientation orientation,
                             PathStatistics& out);

PathStatistics path_statistics(const MetricSemigroup& instance, std::span<const Element> xs,
                               const Element& z0, const Element& z1,
                               Orientation orientation = Orientation::left);

}  // namespace semilab
