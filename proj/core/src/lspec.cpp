#include "sjgeo/lspec.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace sjgeo {

namespace {

int basis_index(char c) {
  switch (c) {
    case 'F': return 0;
    case 'G': return 1;
    case 'H': return 2;
    case 'P': return 3;
    case 'Q': return 4;
    case 'R': return 5;
    default: return -1;
  }
}

}  // namespace

AlgebraElement parse_generator(const std::string& spec) {
  AlgebraElement out;
  size_t i = 0;
  const size_t n = spec.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
  };

  skip_ws();
  if (i == n) throw LSpecError("empty generator expression", 0);

  bool first = true;
  while (true) {
    skip_ws();
    if (i == n) break;

    double sign = 1.0;
    if (spec[i] == '+' || spec[i] == '-') {
      sign = (spec[i] == '-') ? -1.0 : 1.0;
      ++i;
      skip_ws();
    } else if (!first) {
      throw LSpecError("expected '+' or '-' between terms", i);
    }
    first = false;

    if (i == n) throw LSpecError("dangling sign at end of expression", i);

    double coeff = 1.0;
    if (std::isdigit(static_cast<unsigned char>(spec[i])) || spec[i] == '.') {
      char* end = nullptr;
      coeff = std::strtod(spec.c_str() + i, &end);
      if (end == spec.c_str() + i)
        throw LSpecError("malformed coefficient", i);
      i = static_cast<size_t>(end - spec.c_str());
      skip_ws();
      if (i < n && spec[i] == '*') {
        ++i;
        skip_ws();
      }
    }

    if (i == n) throw LSpecError("expected basis letter F/G/H/P/Q/R", i);
    const int idx = basis_index(spec[i]);
    if (idx < 0)
      throw LSpecError(std::string("unknown basis letter '") + spec[i] + "'",
                       i);
    out.coeffs[idx] += sign * coeff;
    ++i;
  }
  return out;
}

std::string format_generator(const AlgebraElement& l) {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    const double c = l.coeffs[i];
    if (c == 0.0) continue;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", std::abs(c));
    if (!out.empty() || c < 0) out += (c < 0) ? "-" : "+";
    out += buf;
    out += "*";
    out += kBasisNames[i];
  }
  return out.empty() ? "0*R" : out;
}

}  // namespace sjgeo
