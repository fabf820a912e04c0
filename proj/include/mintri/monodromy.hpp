#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mintri/certificate.hpp"
#include "mintri/triangulation.hpp"

namespace mintri {

using Mat2 = std::array<std::array<long long, 2>, 2>;

Mat2 letter_matrix(char letter);
Mat2 multiply(const Mat2& a, const Mat2& b);

struct MonodromyWord {
  std::string word;
  Mat2 matrix{};
  long long trace = 0;
  std::array<std::array<int, 2>, 2> mod2{};
  int order = 1;  // order of the mod 2 image, one of 1, 2, 3
};

/// Rejects empty words, letters other than R and L, and |trace| <= 2.
MonodromyWord word_analysis(const std::string& w);

/// The word repeated k times, k in {1, 2, 3}.
MonodromyWord cover(const std::string& w, int k);

/// A slope on the fiber torus as a primitive lattice vector.
using Slope = std::array<long long, 2>;

struct BundleTriangulation {
  Triangulation tri;
  std::string word;
  /// Edge slopes of the fiber below each tetrahedron, then the final fiber:
  /// (p, q, p+q).
  std::vector<std::array<Slope, 3>> fibers;
  /// Horizontal quad type of each tetrahedron.
  std::vector<int> horizontal;
};

/// Each letter is one tetrahedron layered on the previous fiber. Vertices
/// 0,1 span the flipped bottom diagonal and 2,3 the new top diagonal, so the
/// horizontal quad is type 0 in every tetrahedron.
BundleTriangulation build_bundle(const std::string& w);

struct BundleCertificate {
  MonodromyWord base;
  MonodromyWord lifted;
  int tetrahedra = 0;
  std::optional<BoundCertificate> certificate;
  int sum_neg_chi = 0;
  /// -chi(S_i) equals the horizontal quad count of S_i for each surface.
  bool horizontal_count = false;
  /// Each tetrahedron has its horizontal quad in exactly one surface.
  bool horizontal_once = false;
  bool found() const { return certificate.has_value() && certificate->holds() && horizontal_count && horizontal_once; }
};

BundleCertificate bundle_certificate(const std::string& w);

/// All words over {R, L} of the given length passing word_analysis.
std::vector<std::string> admissible_words(int length);

}  // namespace mintri
