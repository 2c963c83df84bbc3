#include "randcx/complex_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "randcx/error.hpp"

namespace randcx {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

SimplicialComplex read_complex(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Simplex> listed;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(strip_comment(line));
    std::string first;
    if (!(fields >> first)) continue;
    if (n < 0) {
      long long value = -1;
      if (first != "n" || !(fields >> value) || value < 0 || value > (1LL << 30)) {
        throw MalformedInput("line " + std::to_string(line_no) + ": expected header 'n <n_vertices>'");
      }
      n = static_cast<int>(value);
      std::string extra;
      if (fields >> extra) throw MalformedInput("line " + std::to_string(line_no) + ": trailing text after header");
      continue;
    }
    std::vector<Vertex> vs;
    std::istringstream all(strip_comment(line));
    long long v = 0;
    while (all >> v) {
      if (v < 0 || v >= n) {
        throw MalformedInput("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " out of range");
      }
      vs.push_back(static_cast<Vertex>(v));
    }
    if (!all.eof()) throw MalformedInput("line " + std::to_string(line_no) + ": non-integer token");
    try {
      listed.emplace_back(std::move(vs));
    } catch (const MalformedInput& e) {
      throw MalformedInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (n < 0) throw MalformedInput("missing header 'n <n_vertices>'");
  return make_complex(listed, n);
}

void write_complex(std::ostream& out, const SimplicialComplex& X) {
  out << "n " << X.n_vertices() << '\n';
  for (int k = 0; k <= X.dim(); ++k) {
    for (const auto& s : X.simplices(k)) {
      for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
      out << '\n';
    }
  }
}

SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  return read_complex(in);
}

void save_complex(const std::string& path, const SimplicialComplex& X) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write " + path);
  write_complex(out, X);
}

}  // namespace randcx
