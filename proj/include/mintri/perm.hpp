#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace mintri {

/// A permutation of the tetrahedron vertex labels {0,1,2,3}.
///
/// Composition follows function order: (p * q)[i] == p[q[i]].
/// `index()` is the position in the lexicographic ordering of the 24 image
/// sequences (0123 -> 0, 0132 -> 1, 0213 -> 2, ..., 3210 -> 23).
class Perm4 {
 public:
  constexpr Perm4() : img_{0, 1, 2, 3} {}
  constexpr Perm4(int a, int b, int c, int d)
      : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
             static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

  /// Builds from the lexicographic index; throws std::out_of_range for >= 24.
  static Perm4 from_index(int index);
  /// Parses four digits such as "1032"; throws std::invalid_argument.
  static Perm4 from_string(const std::string& s);
  /// Swaps a and b, fixes the rest.
  static Perm4 transposition(int a, int b);
  static const std::array<Perm4, 24>& all();

  constexpr int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
  int pre_image(int i) const;
  Perm4 inverse() const;
  int sign() const;
  bool is_even() const { return sign() > 0; }
  int index() const;
  std::string str() const;

  friend Perm4 operator*(const Perm4& p, const Perm4& q) {
    return {p[q[0]], p[q[1]], p[q[2]], p[q[3]]};
  }
  friend bool operator==(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> img_;
};

}  // namespace mintri
