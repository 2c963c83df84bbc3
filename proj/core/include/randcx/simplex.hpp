#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace randcx {

using Vertex = std::int32_t;

/// A simplex as its strictly increasing vertex list. The default-constructed
/// simplex is the empty simplex, of dimension -1.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input. Throws MalformedInput on a repeated or negative vertex.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  /// Trusted constructor; the caller guarantees strict increase.
  static Simplex from_sorted(std::span<const Vertex> sorted);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  bool disjoint_from(const Simplex& other) const;

  /// The simplex with the i-th vertex removed.
  Simplex facet(std::size_t i) const;
  Simplex united_with(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;
  Simplex with_vertex(Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace randcx
