#include "mintri/isosig.hpp"

#include <algorithm>
#include <cctype>

namespace mintri {

namespace {

using Idx = std::size_t;
Idx ix(int i) { return static_cast<Idx>(i); }

char to_char(int v) {
  if (v < 26) return static_cast<char>('a' + v);
  if (v < 52) return static_cast<char>('A' + v - 26);
  if (v < 62) return static_cast<char>('0' + v - 52);
  return v == 62 ? '+' : '-';
}

int from_char(char c) {
  if (c >= 'a' && c <= 'z') return c - 'a';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '-') return 63;
  return -1;
}

void append_value(std::string& out, int value, int chars) {
  for (int i = 0; i < chars; ++i) {
    out.push_back(to_char(value & 63));
    value >>= 6;
  }
}

int chars_for(int n) {
  int chars = 0;
  for (int v = n; v > 0; v >>= 6) ++chars;
  return chars;
}

struct Labelling {
  std::vector<int> image;
  std::vector<Perm4> vertex_map;
};

std::string encode_impl(const Triangulation& tri, int start, const Perm4& start_map,
                        Labelling* labelling) {
  const int n = tri.size();
  std::vector<int> image(ix(n), -1);
  std::vector<int> pre(ix(n), -1);
  std::vector<Perm4> vmap(ix(n));
  std::vector<int> actions;
  std::vector<int> join_dest;
  std::vector<int> join_perm;
  actions.reserve(ix(4 * n));

  image[ix(start)] = 0;
  pre[0] = start;
  vmap[ix(start)] = start_map;
  int next = 1;
  for (int img = 0; img < n; ++img) {
    const int src = pre[ix(img)];
    if (src < 0) break;  // disconnected input never reaches here after build
    for (int fimg = 0; fimg < 4; ++fimg) {
      const int fsrc = vmap[ix(src)].pre_image(fimg);
      const auto& g = tri.gluing(src, fsrc);
      if (!g) {
        actions.push_back(0);
        continue;
      }
      const int dest = g->tet;
      if (image[ix(dest)] >= 0) {
        if (image[ix(dest)] < image[ix(src)] ||
            (dest == src && vmap[ix(src)][g->perm[fsrc]] < fimg))
          continue;
        actions.push_back(2);
        join_dest.push_back(image[ix(dest)]);
        join_perm.push_back((vmap[ix(dest)] * g->perm * vmap[ix(src)].inverse()).index());
      } else {
        image[ix(dest)] = next;
        pre[ix(next)] = dest;
        ++next;
        vmap[ix(dest)] = vmap[ix(src)] * g->perm.inverse();
        actions.push_back(1);
      }
    }
  }

  std::string out;
  const int chars = chars_for(n);
  if (n < 63) {
    out.push_back(to_char(n));
  } else {
    out.push_back(to_char(63));
    out.push_back(to_char(chars));
    append_value(out, n, chars);
  }
  for (Idx i = 0; i < actions.size(); i += 3) {
    int c = 0;
    for (Idx j = 0; j < 3 && i + j < actions.size(); ++j) c |= actions[i + j] << (2 * j);
    out.push_back(to_char(c));
  }
  for (int d : join_dest) append_value(out, d, chars);
  for (int p : join_perm) out.push_back(to_char(p));

  if (labelling) {
    labelling->image = std::move(image);
    labelling->vertex_map = std::move(vmap);
  }
  return out;
}

[[noreturn]] void malformed(const std::string& why) {
  throw TriangulationError(ErrorKind::kMalformedSignature, "malformed signature: " + why);
}

}  // namespace

std::string encode_from(const Triangulation& tri, int start, const Perm4& start_map) {
  return encode_impl(tri, start, start_map, nullptr);
}

std::string encode_canonical(const Triangulation& tri) {
  std::string best;
  for (int t = 0; t < tri.size(); ++t) {
    for (const Perm4& p : Perm4::all()) {
      std::string s = encode_impl(tri, t, p, nullptr);
      if (best.empty() || s < best) best = std::move(s);
    }
  }
  return best;
}

CanonicalLabelling canonical_labelling(const Triangulation& tri) {
  std::string best;
  Labelling best_lab;
  for (int t = 0; t < tri.size(); ++t) {
    for (const Perm4& p : Perm4::all()) {
      Labelling lab;
      std::string s = encode_impl(tri, t, p, &lab);
      if (best.empty() || s < best) {
        best = std::move(s);
        best_lab = std::move(lab);
      }
    }
  }
  return {std::move(best_lab.image), std::move(best_lab.vertex_map)};
}

Triangulation decode(const std::string& sig, Boundary boundary) {
  std::size_t pos = 0;
  auto next_value = [&]() {
    if (pos >= sig.size()) malformed("truncated");
    const int v = from_char(sig[pos++]);
    if (v < 0) malformed("character outside the signature alphabet");
    return v;
  };
  auto read_value = [&](int chars) {
    int v = 0;
    for (int i = 0; i < chars; ++i) v |= next_value() << (6 * i);
    return v;
  };

  if (sig.empty()) malformed("empty string");
  for (char c : sig)
    if (from_char(c) < 0) malformed("character outside the signature alphabet");

  int n = next_value();
  int chars = 1;
  if (n == 63) {
    chars = next_value();
    if (chars < 1 || chars > 4) malformed("bad size width");
    n = read_value(chars);
  }
  if (n == 0) malformed("empty triangulation");
  if (n >= 63 && chars != chars_for(n)) malformed("bad size width");
  chars = chars_for(n);

  std::vector<int> actions;
  int facets = 0;
  int joins = 0;
  while (facets < 4 * n) {
    const int c = next_value();
    for (int k = 0; k < 3; ++k) {
      const int trit = (c >> (2 * k)) & 3;
      if (facets == 4 * n) {
        if (trit != 0) malformed("nonzero padding in face actions");
        continue;
      }
      if (trit == 3) malformed("bad face action");
      facets += trit == 0 ? 1 : 2;
      if (trit == 2) ++joins;
      if (facets > 4 * n) malformed("face actions overrun");
      actions.push_back(trit);
    }
  }
  std::vector<int> dests(ix(joins));
  for (auto& d : dests) d = read_value(chars);
  std::vector<int> perms(ix(joins));
  for (auto& p : perms) {
    p = next_value();
    if (p >= 24) malformed("permutation index out of range");
  }
  if (pos != sig.size()) malformed("trailing characters");

  FaceTable table(ix(n));
  int next = 1;
  Idx apos = 0;
  Idx jpos = 0;
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (table[ix(t)][ix(f)]) continue;
      if (apos >= actions.size()) malformed("face actions exhausted");
      const int a = actions[apos++];
      if (a == 1) {
        if (next >= n) malformed("too many new tetrahedra");
        join(table, t, f, next++, Perm4());
      } else if (a == 2) {
        const int d = dests[jpos];
        if (d >= next) malformed("join to an unreached tetrahedron");
        const Perm4 p = Perm4::from_index(perms[jpos]);
        ++jpos;
        if (table[ix(d)][ix(p[f])] || (d == t && p[f] == f)) malformed("inconsistent gluing");
        join(table, t, f, d, p);
      }
    }
  }
  if (apos != actions.size() || jpos != dests.size() || next != n)
    malformed("inconsistent gluing stream");
  try {
    return Triangulation::build(std::move(table), boundary);
  } catch (const TriangulationError& e) {
    malformed(e.what());
  }
}

std::string census_entry(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  const auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  if (b >= e) return {};
  const auto stop = std::find_if(b, e, [](unsigned char c) { return std::isspace(c); });
  return std::string(b, stop);
}

}  // namespace mintri
