#include "randcx/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "randcx/error.hpp"
#include "randcx/rng.hpp"

namespace randcx {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw MalformedInput("simplex has a repeated vertex: " + to_string());
  }
  if (!vertices_.empty() && vertices_.front() < 0) {
    throw MalformedInput("negative vertex id in simplex " + to_string());
  }
}

Simplex Simplex::from_sorted(std::span<const Vertex> sorted) {
  Simplex s;
  s.vertices_.assign(sorted.begin(), sorted.end());
  return s;
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Simplex Simplex::facet(std::size_t i) const {
  Simplex s;
  s.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    if (j != i) s.vertices_.push_back(vertices_[j]);
  }
  return s;
}

Simplex Simplex::united_with(const Simplex& other) const {
  Simplex s;
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                 std::back_inserter(s.vertices_));
  return s;
}

Simplex Simplex::minus(const Simplex& other) const {
  Simplex s;
  std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                      std::back_inserter(s.vertices_));
  return s;
}

Simplex Simplex::with_vertex(Vertex v) const {
  Simplex s = *this;
  auto it = std::lower_bound(s.vertices_.begin(), s.vertices_.end(), v);
  if (it != s.vertices_.end() && *it == v) return s;
  s.vertices_.insert(it, v);
  return s;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
  os << '}';
  return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  return static_cast<std::size_t>(simplex_key(0, s.vertices()));
}

}  // namespace randcx
