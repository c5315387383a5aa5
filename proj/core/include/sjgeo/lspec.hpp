#pragma once

// Parser for generator expressions: signed terms `c*B` with B one of
// F, G, H, P, Q, R, the `*` optional, coefficient defaulting to 1, and
// whitespace ignored. Examples: "F", "G-1*F", "2F+0.5Q-R".

#include <string>

#include "sjgeo/jacobi_group.hpp"

namespace sjgeo {

struct LSpecError : std::runtime_error {
  size_t position;
  LSpecError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

AlgebraElement parse_generator(const std::string& spec);

/// Canonical rendering, e.g. "1*G-1*F"; parse_generator round-trips it.
std::string format_generator(const AlgebraElement& l);

}  // namespace sjgeo
