#pragma once

#include "ra/symbol.hpp"

#include <string>

namespace ra {

// Tiny expression language over boundary symbols, used by the CLI:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := rational | 'i' | 'h1' | 'a(j,k)' | 'xi(k)' | 'xin' | 'c(vec)'
//           | '|xi|^2' | 'pip(expr)' | 'dxin(expr)' | 'dxn(expr)'
//           | 'tr(expr)' | 'res(expr)' | 'sph(expr)' | '(expr)'
//           | factor '^' int
//   vec    := 'e' int | 'xi' | "xi'" | 'dxn' | 'X' int
// Division is defined for exact scalar constants and for '|xi|^2' (which
// moves into the rational denominator; valid on |xi'| = 1).
BoundarySymbol parse_symbol(const std::string& src, int n, int l);

}  // namespace ra
