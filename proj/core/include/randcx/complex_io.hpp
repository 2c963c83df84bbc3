#pragma once

#include <iosfwd>
#include <string>

#include "randcx/complex.hpp"

namespace randcx {

// Text format:
//   n <n_vertices>
//   <v0> <v1> ...      one simplex per line, ids separated by spaces
// Blank lines and anything after '#' are ignored. The reader takes the
// downward closure of the listed simplices, so listing only maximal faces is
// enough. The writer lists every simplex, lowest dimension first.

SimplicialComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const SimplicialComplex& X);

SimplicialComplex load_complex(const std::string& path);
void save_complex(const std::string& path, const SimplicialComplex& X);

}  // namespace randcx
