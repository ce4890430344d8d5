#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace semilab {

inline constexpr std::size_t kMaxRealDim = 4;

// Point of R^d (d <= kMaxRealDim). Unused coordinates stay zero so that the
// defaulted comparison is exact equality of the used part.
struct RealVector {
  std::array<double, kMaxRealDim> coords{};
  std::uint8_t dim = 0;

  RealVector() = default;
  RealVector(std::initializer_list<double> values);
  static RealVector zero(std::size_t dim);

  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const RealVector&, const RealVector&) = default;
};

// The affine map x -> scale * x + shift, scale > 0.
struct AffineMap {
  double scale = 1.0;
  double shift = 0.0;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

struct HeisenbergPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  friend bool operator==(const HeisenbergPoint&, const HeisenbergPoint&) = default;
};

// The word h^n g^eps of the two-generator counterexample semigroup;
// (n, eps) = (0, 0) is not an element.
struct CexWord {
  std::int64_t n = 0;
  int eps = 0;
  friend bool operator==(const CexWord&, const CexWord&) = default;
};

struct CyclicIndex {
  std::int64_t k = 0;
  friend bool operator==(const CyclicIndex&, const CyclicIndex&) = default;
};

// The identity adjoined to a semigroup that lacks one.
struct AdjoinedIdentity {
  friend bool operator==(const AdjoinedIdentity&, const AdjoinedIdentity&) = default;
};

using Element = std::variant<RealVector, AffineMap, HeisenbergPoint, CexWord,
                             CyclicIndex, AdjoinedIdentity>;

// Shortest decimal form that parses back to the same double.
std::string format_real(double value);

// Parses a finite double; throws InvalidElement on junk.
double parse_real(std::string_view text);

// Splits "a,b,c" on commas, trimming blanks around each field.
std::vector<std::string_view> split_fields(std::string_view text, char sep = ',');

std::string_view trim(std::string_view text);

// Instance-independent debugging form, e.g. "affine(2,1)".
std::string describe(const Element& element);

}  // namespace semilab
