#include "coxtour/signed_permutation.hpp"

#include <cstdlib>

namespace coxtour {

SignedPermutation::SignedPermutation(std::vector<int> img) : image(std::move(img)) {
  const int size = n();
  std::vector<std::uint8_t> hit(size + 1, 0);
  for (int v : image) {
    const int a = std::abs(v);
    if (a < 1 || a > size || hit[a])
      throw std::invalid_argument("signed permutation image is not a bijection");
    hit[a] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k + 1;
  return SignedPermutation(std::move(img));
}

int SignedPermutation::apply(int player) const {
  const int a = std::abs(player);
  if (a < 1 || a > n()) throw std::invalid_argument("player out of range");
  return player > 0 ? image[a - 1] : -image[a - 1];
}

int SignedPermutation::negative_count() const {
  int count = 0;
  for (int v : image)
    if (v < 0) ++count;
  return count;
}

bool SignedPermutation::in_weyl_group(Family f) const {
  switch (f) {
    case Family::A: return is_plain();
    case Family::D: return negative_count() % 2 == 0;
    case Family::B:
    case Family::C: return true;
  }
  throw internal_error("bad Family value");
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> img(image.size());
  for (int k = 0; k < n(); ++k) {
    const int v = image[k];
    img[std::abs(v) - 1] = v > 0 ? (k + 1) : -(k + 1);
  }
  return SignedPermutation(std::move(img));
}

ScoreVector apply(const SignedPermutation& phi, const ScoreVector& s) {
  if (phi.n() != s.size()) throw std::invalid_argument("permutation/score size mismatch");
  ScoreVector out = s;
  for (int k = 0; k < s.size(); ++k) {
    const int v = phi.image[k];
    out.doubled[std::abs(v) - 1] = (v > 0 ? 1 : -1) * s.doubled[k];
  }
  return out;
}

Tournament apply_signed_permutation(const Tournament& t, const SignedPermutation& phi) {
  const RootSystem& sys = t.system;
  if (phi.n() != sys.rank) throw std::invalid_argument("permutation/tournament size mismatch");
  if (!phi.in_weyl_group(sys.family))
    throw std::invalid_argument("permutation is not in the Weyl group of " + sys.name());

  const auto roots = positive_roots(sys);
  Tournament out(sys);
  std::vector<std::uint8_t> written(roots.size(), 0);

  for (std::size_t k = 0; k < roots.size(); ++k) {
    const SignedEdge& e = roots[k];
    const int pi = phi.apply(e.i);
    int a = std::abs(pi);
    int ca = pi > 0 ? 1 : -1;  // image vector = ca*e_a (+ cb*e_b)
    SignedEdge img = e;
    bool flip = false;
    switch (e.kind) {
      case EdgeKind::Half:
        img = SignedEdge::half(a);
        flip = ca < 0;
        break;
      case EdgeKind::Loop:
        img = SignedEdge::loop(a);
        flip = ca < 0;
        break;
      case EdgeKind::Negative:
      case EdgeKind::Positive: {
        const int pj = phi.apply(e.j);
        int b = std::abs(pj);
        int cb = pj > 0 ? 1 : -1;
        if (e.kind == EdgeKind::Negative) cb = -cb;
        if (a < b) {
          std::swap(a, b);
          std::swap(ca, cb);
        }
        img = (ca == -cb) ? SignedEdge::negative(a, b) : SignedEdge::positive(a, b);
        flip = ca < 0;
        break;
      }
    }
    const int idx = edge_index(sys, img);
    if (written[idx]) throw internal_error("permutation image hit an edge twice");
    written[idx] = 1;
    out.outcomes[idx] = flip ? (1 - t.outcomes[k]) : t.outcomes[k];
  }
  return out;
}

}  // namespace coxtour
