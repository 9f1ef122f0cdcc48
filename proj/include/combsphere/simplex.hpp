#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace combsphere {

/// Vertex labels are positive integers in [1, kMaxVertex].
using Vertex = int;

inline constexpr Vertex kMaxVertex = 64;

/// A finite set of vertex labels, stored as a bitmask (bit i-1 <-> label i).
///
/// Ordering is lexicographic on the increasing vertex lists, so sorting a
/// facet list with `<` yields the canonical text/JSON order.
class Simplex {
 public:
  using Mask = std::uint64_t;

  constexpr Simplex() = default;

  static constexpr Simplex from_mask(Mask m) {
    Simplex s;
    s.mask_ = m;
    return s;
  }

  Simplex(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert_checked(v);
  }

  explicit Simplex(std::span<const Vertex> vs) {
    for (Vertex v : vs) insert_checked(v);
  }

  static constexpr Mask bit(Vertex v) { return Mask{1} << (v - 1); }

  static void check_label(Vertex v) {
    if (v < 1 || v > kMaxVertex)
      throw Error(ErrorCode::LabelOutOfRange,
                  "vertex label " + std::to_string(v) + " outside [1, 64]");
  }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr int dim() const { return size() - 1; }
  constexpr bool empty() const { return mask_ == 0; }

  constexpr bool contains(Vertex v) const { return v >= 1 && v <= kMaxVertex && (mask_ & bit(v)) != 0; }
  constexpr bool is_subset_of(Simplex other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool disjoint(Simplex other) const { return (mask_ & other.mask_) == 0; }

  constexpr Simplex with(Vertex v) const { return from_mask(mask_ | bit(v)); }
  constexpr Simplex without(Vertex v) const { return from_mask(mask_ & ~bit(v)); }
  constexpr Simplex operator|(Simplex o) const { return from_mask(mask_ | o.mask_); }
  constexpr Simplex operator&(Simplex o) const { return from_mask(mask_ & o.mask_); }
  constexpr Simplex minus(Simplex o) const { return from_mask(mask_ & ~o.mask_); }

  constexpr Vertex min_vertex() const { return std::countr_zero(mask_) + 1; }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each_vertex([&](Vertex v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  constexpr void for_each_vertex(F&& f) const {
    for (Mask m = mask_; m != 0; m &= m - 1) f(static_cast<Vertex>(std::countr_zero(m) + 1));
  }

  /// Calls f on every non-empty subset (including the simplex itself).
  template <typename F>
  constexpr void for_each_face(F&& f) const {
    for (Mask sub = mask_; sub != 0; sub = (sub - 1) & mask_) f(from_mask(sub));
  }

  /// Codimension-one faces; a 0-simplex yields the empty simplex.
  template <typename F>
  constexpr void for_each_ridge(F&& f) const {
    for (Mask m = mask_; m != 0; m &= m - 1) f(from_mask(mask_ & ~(m & (~m + 1))));
  }

  constexpr bool operator==(const Simplex&) const = default;

  constexpr std::strong_ordering operator<=>(const Simplex& o) const {
    if (mask_ == o.mask_) return std::strong_ordering::equal;
    const int p = std::countr_zero(mask_ ^ o.mask_);
    // Both lists agree below p; the one holding p is smaller unless the
    // other list ends there.
    if ((mask_ >> p) & 1U) {
      return (o.mask_ >> p) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (mask_ >> p) == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::string to_string() const {
    std::string out;
    for_each_vertex([&](Vertex v) {
      if (!out.empty()) out += ' ';
      out += std::to_string(v);
    });
    return out;
  }

 private:
  void insert_checked(Vertex v) {
    check_label(v);
    if (mask_ & bit(v))
      throw Error(ErrorCode::DuplicateVertexInFacet, "vertex " + std::to_string(v) + " repeated");
    mask_ |= bit(v);
  }

  Mask mask_ = 0;
};

}  // namespace combsphere

template <>
struct std::hash<combsphere::Simplex> {
  std::size_t operator()(const combsphere::Simplex& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.mask());
  }
};
