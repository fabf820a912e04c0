#include "mintri/monodromy.hpp"

#include <cstdlib>

namespace mintri {

namespace {

using Idx = std::size_t;
Idx ix(int i) { return static_cast<Idx>(i); }

using Point = std::array<long long, 2>;

Point add(const Point& a, const Point& b) { return {a[0] + b[0], a[1] + b[1]}; }
Point scale(long long k, const Point& a) { return {k * a[0], k * a[1]}; }
Point act(const Mat2& m, const Point& x) {
  return {m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1]};
}

Mat2 inverse(const Mat2& m) { return {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}; }

[[noreturn]] void bad_word(const std::string& why) { throw TriangulationError(ErrorKind::kBadWord, why); }

// Vertex positions of the tetrahedron layered on frame (p, q).
std::array<Point, 4> layer(char letter, const Point& p, const Point& q) {
  if (letter == 'R') return {p, add(p, q), Point{0, 0}, add(scale(2, p), q)};
  return {q, add(p, q), Point{0, 0}, add(p, scale(2, q))};
}

struct Match {
  int face;
  Perm4 perm;
};

// Face among {3, 2} of `below` whose points are a translate of the top face
// `top_face` of `above`, with the induced vertex map.
Match match_face(const std::array<Point, 4>& above, int top_face, const std::array<Point, 4>& below) {
  for (int f : {3, 2}) {
    std::array<int, 4> img{-1, -1, -1, -1};
    img[ix(top_face)] = f;
    const int v0 = top_face == 0 ? 1 : 0;
    for (int anchor = 0; anchor < 4; ++anchor) {
      if (anchor == f) continue;
      const Point shift{below[ix(anchor)][0] - above[ix(v0)][0], below[ix(anchor)][1] - above[ix(v0)][1]};
      bool ok = true;
      std::array<int, 4> trial = img;
      for (int v = 0; v < 4 && ok; ++v) {
        if (v == top_face) continue;
        const Point target = add(above[ix(v)], shift);
        int found = -1;
        for (int w = 0; w < 4; ++w)
          if (w != f && below[ix(w)] == target) found = w;
        if (found < 0) ok = false;
        trial[ix(v)] = found;
      }
      if (ok) return {f, Perm4(trial[0], trial[1], trial[2], trial[3])};
    }
  }
  throw TriangulationError(ErrorKind::kBrokenInvariant, "layered faces do not match");
}

}  // namespace

Mat2 letter_matrix(char letter) {
  if (letter == 'R') return {{{1, 1}, {0, 1}}};
  if (letter == 'L') return {{{1, 0}, {1, 1}}};
  bad_word(std::string("letter outside {R, L}: ") + letter);
}

Mat2 multiply(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[ix(i)][ix(j)] = a[ix(i)][0] * b[0][ix(j)] + a[ix(i)][1] * b[1][ix(j)];
  return c;
}

MonodromyWord word_analysis(const std::string& w) {
  if (w.empty()) bad_word("empty word");
  MonodromyWord out;
  out.word = w;
  out.matrix = {{{1, 0}, {0, 1}}};
  for (char c : w) out.matrix = multiply(out.matrix, letter_matrix(c));
  out.trace = out.matrix[0][0] + out.matrix[1][1];
  if (std::llabs(out.trace) <= 2) bad_word("word " + w + " has |trace| <= 2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.mod2[ix(i)][ix(j)] = static_cast<int>(((out.matrix[ix(i)][ix(j)] % 2) + 2) % 2);
  Mat2 m = {{{1, 0}, {0, 1}}};
  for (int k = 1; k <= 6; ++k) {
    m = multiply(m, out.matrix);
    if (m[0][0] % 2 != 0 && m[0][1] % 2 == 0 && m[1][0] % 2 == 0 && m[1][1] % 2 != 0) {
      out.order = k;
      break;
    }
  }
  return out;
}

MonodromyWord cover(const std::string& w, int k) {
  if (k < 1 || k > 3) throw TriangulationError(ErrorKind::kInvalidArgument, "cover degree must be 1, 2 or 3");
  std::string lifted;
  for (int i = 0; i < k; ++i) lifted += w;
  return word_analysis(lifted);
}

BundleTriangulation build_bundle(const std::string& w) {
  const auto analysis = word_analysis(w);
  const int n = static_cast<int>(w.size());
  std::vector<std::array<Slope, 3>> fibers;
  std::vector<std::array<Point, 4>> pts;
  Point p{1, 0}, q{0, 1};
  for (char c : w) {
    fibers.push_back({p, q, add(p, q)});
    pts.push_back(layer(c, p, q));
    if (c == 'R')
      q = add(p, q);
    else
      p = add(p, q);
  }
  fibers.push_back({p, q, add(p, q)});

  FaceTable table(ix(n));
  for (int j = 0; j < n; ++j) {
    const bool last = j + 1 == n;
    std::array<Point, 4> above = pts[ix(j)];
    if (last) {
      const Mat2 back = inverse(analysis.matrix);
      for (auto& x : above) x = act(back, x);
    }
    const int next = last ? 0 : j + 1;
    for (int top : {1, 0}) {
      const Match m = match_face(above, top, pts[ix(next)]);
      join(table, j, top, next, m.perm);
    }
  }
  return {Triangulation::build(std::move(table)), w, std::move(fibers), std::vector<int>(ix(n), 0)};
}

BundleCertificate bundle_certificate(const std::string& w) {
  BundleCertificate out;
  out.base = word_analysis(w);
  out.lifted = cover(w, out.base.order);
  const auto bundle = build_bundle(out.lifted.word);
  out.tetrahedra = bundle.tri.size();
  const auto sk = skeleton(bundle.tri);
  out.certificate = bound_certificate(bundle.tri, sk);
  if (!out.certificate) return out;
  out.sum_neg_chi = out.certificate->sum_neg_chi;
  const auto& surfaces = out.certificate->analysis.surfaces;
  out.horizontal_count = true;
  std::vector<int> uses(ix(out.tetrahedra), 0);
  for (int i = 0; i < 3; ++i) {
    int horizontal = 0;
    for (int t = 0; t < out.tetrahedra; ++t) {
      if (surfaces[ix(i)].quad(t, bundle.horizontal[ix(t)]) > 0) {
        ++horizontal;
        ++uses[ix(t)];
      }
    }
    if (-out.certificate->analysis.chi[ix(i)] != horizontal) out.horizontal_count = false;
  }
  out.horizontal_once = true;
  for (int u : uses)
    if (u != 1) out.horizontal_once = false;
  return out;
}

std::vector<std::string> admissible_words(int length) {
  std::vector<std::string> out;
  if (length < 1) return out;
  for (long mask = 0; mask < (1L << length); ++mask) {
    std::string w;
    for (int i = 0; i < length; ++i) w.push_back(mask >> (length - 1 - i) & 1 ? 'R' : 'L');
    try {
      word_analysis(w);
      out.push_back(w);
    } catch (const TriangulationError&) {
    }
  }
  return out;
}

}  // namespace mintri
