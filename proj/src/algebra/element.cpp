#include "semilab/algebra/element.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "semilab/error.hpp"

namespace semilab {

RealVector::RealVector(std::initializer_list<double> values) {
  if (values.size() == 0 || values.size() > kMaxRealDim) {
    throw InvalidElement("real vector dimension must be in [1, " +
                         std::to_string(kMaxRealDim) + "]");
  }
  std::size_t i = 0;
  for (double v : values) coords[i++] = v;
  dim = static_cast<std::uint8_t>(values.size());
}

RealVector RealVector::zero(std::size_t d) {
  if (d == 0 || d > kMaxRealDim) {
    throw InvalidElement("real vector dimension must be in [1, " +
                         std::to_string(kMaxRealDim) + "]");
  }
  RealVector v;
  v.dim = static_cast<std::uint8_t>(d);
  return v;
}

std::string format_real(double value) {
  if (value == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return std::to_string(value);
  return std::string(buf.data(), end);
}

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw InvalidElement("not a finite real number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

struct Describer {
  std::string operator()(const RealVector& v) const {
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim; ++i) {
      if (i) out += ",";
      out += format_real(v[i]);
    }
    return out + ")";
  }
  std::string operator()(const AffineMap& g) const {
    return "affine(" + format_real(g.scale) + "," + format_real(g.shift) + ")";
  }
  std::string operator()(const HeisenbergPoint& p) const {
    return "heisenberg(" + format_real(p.x) + "," + format_real(p.y) + "," +
           format_real(p.z) + ")";
  }
  std::string operator()(const CexWord& w) const {
    return "cex(" + std::to_string(w.n) + "," + std::to_string(w.eps) + ")";
  }
  std::string operator()(const CyclicIndex& c) const {
    return "cyclic(" + std::to_string(c.k) + ")";
  }
  std::string operator()(const AdjoinedIdentity&) const { return "e"; }
};

}  // namespace

std::string describe(const Element& element) { return std::visit(Describer{}, element); }

}  // namespace semilab
