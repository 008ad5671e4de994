#pragma once

#include <iosfwd>
#include <string>

#include "cmkit/group.hpp"

namespace cmkit {

// Cayley table text format: line 1 = n; line 2 = optional whitespace
// separated labels (taken as row data instead when it begins with a digit);
// then n lines of n zero-based indices, row g listing g*0 .. g*(n-1).
// The identity must be index 0.
FiniteGroup read_cayley_table(std::istream& in, std::string name = "cayley");
FiniteGroup read_cayley_table_text(const std::string& text, std::string name = "cayley");
FiniteGroup read_cayley_table_file(const std::string& path);

void write_cayley_table(std::ostream& out, const FiniteGroup& G);
std::string cayley_table_text(const FiniteGroup& G);

}  // namespace cmkit
