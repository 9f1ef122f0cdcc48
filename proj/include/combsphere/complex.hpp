#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "simplex.hpp"

namespace combsphere {

/// Pure simplicial complex stored by its facets in canonical (sorted) order.
///
/// The empty complex has dimension -1 and no facets; it only arises as the
/// boundary of a closed pseudomanifold.
class Complex {
 public:
  Complex() = default;

  /// Builds a complex from facets of equal size. Duplicate facets collapse.
  static Complex from_simplices(std::vector<Simplex> facets) {
    Complex x;
    if (facets.empty()) return x;
    const int size = facets.front().size();
    for (const Simplex& f : facets) {
      if (f.size() != size)
        throw Error(ErrorCode::NonPure, "facets of sizes " + std::to_string(size) + " and " +
                                            std::to_string(f.size()));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    x.dim_ = size - 1;
    for (const Simplex& f : facets) x.vertex_mask_ |= f.mask();
    x.facets_ = std::move(facets);
    return x;
  }

  const std::vector<Simplex>& facets() const { return facets_; }
  int dim() const { return dim_; }
  bool empty() const { return facets_.empty(); }
  std::size_t num_facets() const { return facets_.size(); }

  Simplex vertex_set() const { return Simplex::from_mask(vertex_mask_); }
  int num_vertices() const { return vertex_set().size(); }
  std::vector<Vertex> vertices() const { return vertex_set().vertices(); }
  bool has_vertex(Vertex v) const { return vertex_set().contains(v); }

  bool has_facet(Simplex s) const { return std::binary_search(facets_.begin(), facets_.end(), s); }

  bool has_face(Simplex s) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](Simplex f) { return s.is_subset_of(f); });
  }

  /// All non-empty faces, bucketed by dimension.
  std::vector<std::unordered_set<Simplex>> faces_by_dim() const {
    std::vector<std::unordered_set<Simplex>> out(dim_ + 1);
    for (const Simplex& f : facets_) f.for_each_face([&](Simplex s) { out[s.dim()].insert(s); });
    return out;
  }

  std::vector<long> f_vector() const {
    std::vector<long> f;
    for (const auto& layer : faces_by_dim()) f.push_back(static_cast<long>(layer.size()));
    return f;
  }

  long euler_characteristic() const {
    long chi = 0;
    const auto f = f_vector();
    for (std::size_t j = 0; j < f.size(); ++j) chi += (j % 2 == 0) ? f[j] : -f[j];
    return chi;
  }

  bool operator==(const Complex& o) const { return facets_ == o.facets_; }

 private:
  std::vector<Simplex> facets_;
  int dim_ = -1;
  Simplex::Mask vertex_mask_ = 0;
};

/// Canonical complex from raw label lists; the entry point for untrusted input.
inline Complex from_facets(const std::vector<std::vector<Vertex>>& facet_list) {
  if (facet_list.empty()) throw Error(ErrorCode::EmptyInput, "no facets given");
  std::vector<Simplex> facets;
  facets.reserve(facet_list.size());
  for (const auto& raw : facet_list) {
    if (raw.empty()) throw Error(ErrorCode::EmptyInput, "empty facet");
    facets.emplace_back(std::span<const Vertex>(raw));
  }
  return Complex::from_simplices(std::move(facets));
}

inline std::vector<std::vector<Vertex>> facet_lists(const Complex& x) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(x.num_facets());
  for (const Simplex& f : x.facets()) out.push_back(f.vertices());
  return out;
}

/// The standard ball: a single simplex with all its faces.
inline Complex closure(Simplex s) { return Complex::from_simplices({s}); }

/// Boundary of the simplex on `vs` (the standard sphere of dimension |vs|-2).
inline Complex standard_sphere_on(Simplex vs) {
  std::vector<Simplex> facets;
  vs.for_each_vertex([&](Vertex v) { facets.push_back(vs.without(v)); });
  return Complex::from_simplices(std::move(facets));
}

inline Simplex simplex_range(Vertex first, Vertex last) {
  Simplex s;
  for (Vertex v = first; v <= last; ++v) {
    Simplex::check_label(v);
    s = s.with(v);
  }
  return s;
}

/// Union of two pure complexes of the same dimension (facet-set union).
inline Complex unite(const Complex& a, const Complex& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Simplex> facets = a.facets();
  facets.insert(facets.end(), b.facets().begin(), b.facets().end());
  return Complex::from_simplices(std::move(facets));
}

/// Face-set intersection of two complexes (not necessarily pure). Returns the
/// maximal common faces as a sorted list.
inline std::vector<Simplex> common_faces(const Complex& a, const Complex& b) {
  std::unordered_set<Simplex> in_a;
  for (const Simplex& f : a.facets()) f.for_each_face([&](Simplex s) { in_a.insert(s); });
  std::unordered_set<Simplex> shared;
  for (const Simplex& f : b.facets())
    f.for_each_face([&](Simplex s) {
      if (in_a.count(s)) shared.insert(s);
    });
  std::vector<Simplex> maximal;
  for (const Simplex& s : shared) {
    bool dominated = false;
    for (const Simplex& t : shared) {
      if (t != s && s.is_subset_of(t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

}  // namespace combsphere
