#include "mintri/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace mintri {

namespace {

std::array<Perm4, 24> make_all() {
  std::array<Perm4, 24> out{};
  std::array<int, 4> v{0, 1, 2, 3};
  std::size_t k = 0;
  do {
    out[k++] = Perm4(v[0], v[1], v[2], v[3]);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

const std::array<Perm4, 24>& Perm4::all() {
  static const std::array<Perm4, 24> perms = make_all();
  return perms;
}

Perm4 Perm4::from_index(int index) {
  if (index < 0 || index >= 24) throw std::out_of_range("Perm4 index out of range");
  return all()[static_cast<std::size_t>(index)];
}

Perm4 Perm4::from_string(const std::string& s) {
  if (s.size() != 4) throw std::invalid_argument("permutation must have four digits: " + s);
  std::array<int, 4> v{};
  std::array<bool, 4> seen{};
  for (std::size_t i = 0; i < 4; ++i) {
    const int d = s[i] - '0';
    if (d < 0 || d > 3 || seen[static_cast<std::size_t>(d)])
      throw std::invalid_argument("not a permutation of 0123: " + s);
    seen[static_cast<std::size_t>(d)] = true;
    v[i] = d;
  }
  return {v[0], v[1], v[2], v[3]};
}

Perm4 Perm4::transposition(int a, int b) {
  Perm4 p;
  p.img_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
  p.img_[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
  return p;
}

int Perm4::pre_image(int i) const {
  for (int j = 0; j < 4; ++j)
    if (img_[static_cast<std::size_t>(j)] == i) return j;
  return -1;
}

Perm4 Perm4::inverse() const {
  Perm4 p;
  for (int i = 0; i < 4; ++i) p.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return p;
}

int Perm4::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (img_[i] > img_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int Perm4::index() const {
  // Lehmer code.
  static constexpr int kFactorial[] = {6, 2, 1, 1};
  int idx = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    int smaller = 0;
    for (std::size_t j = i + 1; j < 4; ++j)
      if (img_[j] < img_[i]) ++smaller;
    idx += smaller * kFactorial[i];
  }
  return idx;
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (std::size_t i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
  return s;
}

}  // namespace mintri
