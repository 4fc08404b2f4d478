#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "loopbraid/agg.hpp"
#include "loopbraid/braid_word.hpp"
#include "loopbraid/free_group.hpp"
#include "loopbraid/group_module.hpp"

namespace loopbraid {

namespace detail {

// The rank-2 braiding morphism S and its inverse witness:
//   S:  x1 -> x2, x2 -> x2^-1 x1 x2,
//       K1 -> K1 + K2 - x2^-1 . K1, K2 -> x2^-1 . K1
//   S~: x1 -> x1 x2 x1^-1, x2 -> x1,
//       K1 -> x1 . K2, K2 -> K1 + K2 - x1 . K2
inline AggAutomorphism base_sigma() {
  const Word x1 = Word::generator(2, 1);
  const Word x2 = Word::generator(2, 2);
  const ModuleElt k1 = ModuleElt::basis(2, 1);
  const ModuleElt k2 = ModuleElt::basis(2, 2);
  AggMorphism fwd(FreeGroupEndo(2, {x2, x2.inverse() * x1 * x2}),
                  {k1 + k2 - act(x2.inverse(), k1), act(x2.inverse(), k1)});
  AggMorphism inv(FreeGroupEndo(2, {x1 * x2 * x1.inverse(), x1}),
                  {act(x1, k2), k1 + k2 - act(x1, k2)});
  return AggAutomorphism(std::move(fwd), std::move(inv));
}

// The rank-2 permutation morphism R: swaps x1 <-> x2 and K1 <-> K2.
inline AggAutomorphism base_rho() {
  AggMorphism swap(
      FreeGroupEndo(2, {Word::generator(2, 2), Word::generator(2, 1)}),
      {ModuleElt::basis(2, 2), ModuleElt::basis(2, 1)});
  return AggAutomorphism(swap, swap);
}

// The rank-1 flip morphism T: x1 -> x1^-1, K1 -> K1. Its module part is
// not the identity map: it inverts coefficient words through f1.
inline AggAutomorphism base_tau() {
  AggMorphism flip(FreeGroupEndo(1, {Word::generator(1, 1, -1)}),
                   {ModuleElt::basis(1, 1)});
  return AggAutomorphism(flip, flip);
}

}  // namespace detail

/// S_i = 1^(i-1) (x) S (x) 1^(n-i-1), for 1 <= i <= n-1.
inline AggAutomorphism gen_sigma(int i, int n) {
  detail::require(i >= 1 && i <= n - 1, "sigma index out of range");
  return tensor_shift(detail::base_sigma(), i - 1, n);
}

/// R_i = 1^(i-1) (x) R (x) 1^(n-i-1), for 1 <= i <= n-1.
inline AggAutomorphism gen_rho(int i, int n) {
  detail::require(i >= 1 && i <= n - 1, "rho index out of range");
  return tensor_shift(detail::base_rho(), i - 1, n);
}

/// T_j = 1^(j-1) (x) T (x) 1^(n-j), for 1 <= j <= n.
inline AggAutomorphism gen_tau(int j, int n) {
  detail::require(j >= 1 && j <= n, "tau index out of range");
  return tensor_shift(detail::base_tau(), j - 1, n);
}

inline AggAutomorphism generator_automorphism(BraidKind kind, int index,
                                              int n) {
  switch (kind) {
    case BraidKind::sigma: return gen_sigma(index, n);
    case BraidKind::rho: return gen_rho(index, n);
    case BraidKind::tau: return gen_tau(index, n);
  }
  detail::fail("unknown braid generator kind");
}

/// The lifted Artin representation on words: sigma_i -> S_i, rho_i -> R_i,
/// tau_j -> T_j, multiplied with the convention [g][g'] = [g o g'], so a
/// token earlier in the word acts later as a map. Negative exponents use
/// the inverse witnesses; |k| > 1 expands to repeated factors.
inline AggAutomorphism evaluate(const BraidWord& w) {
  AggAutomorphism result = AggAutomorphism::identity(w.rank());
  for (const BraidToken& t : w.tokens()) {
    AggAutomorphism g = generator_automorphism(t.kind, t.index, w.rank());
    if (t.exponent < 0) g = g.inverted();
    for (int r = 0; r < std::abs(t.exponent); ++r) result = compose(result, g);
  }
  return result;
}

namespace detail {

// Dahm-level generator endomorphisms, written out directly so that
// dahm() is a code path independent of the module machinery. The
// sigma inverse uses the explicit formula x_i -> x_i x_{i+1} x_i^-1,
// x_{i+1} -> x_i rather than a computed inverse.
inline FreeGroupEndo dahm_generator(BraidKind kind, int index, bool inverse,
                                    int n) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images.push_back(Word::generator(n, j));
  const int i = index;
  switch (kind) {
    case BraidKind::sigma: {
      const Word xi = Word::generator(n, i);
      const Word xi1 = Word::generator(n, i + 1);
      if (!inverse) {
        images[static_cast<std::size_t>(i - 1)] = xi1;
        images[static_cast<std::size_t>(i)] = xi1.inverse() * xi * xi1;
      } else {
        images[static_cast<std::size_t>(i - 1)] = xi * xi1 * xi.inverse();
        images[static_cast<std::size_t>(i)] = xi;
      }
      break;
    }
    case BraidKind::rho:
      std::swap(images[static_cast<std::size_t>(i - 1)],
                images[static_cast<std::size_t>(i)]);
      break;
    case BraidKind::tau:
      images[static_cast<std::size_t>(i - 1)] = Word::generator(n, i, -1);
      break;
  }
  return FreeGroupEndo(n, std::move(images));
}

}  // namespace detail

/// Dahm's homomorphism on words: composes only the free-group-level
/// generator formulas. Coincides with the f1 component of evaluate().
inline FreeGroupEndo dahm(const BraidWord& w) {
  FreeGroupEndo result = FreeGroupEndo::identity(w.rank());
  for (const BraidToken& t : w.tokens()) {
    FreeGroupEndo g =
        detail::dahm_generator(t.kind, t.index, t.exponent < 0, w.rank());
    for (int r = 0; r < std::abs(t.exponent); ++r) result = compose(result, g);
  }
  return result;
}

/// Decides equality in the extended loop braid group: by injectivity of
/// the lifted representation, w1 = w2 iff their images agree, and w = 1
/// iff the image is the identity morphism.
inline bool equal_in_group(const BraidWord& w1, const BraidWord& w2) {
  detail::require(w1.rank() == w2.rank(), "braid word rank mismatch");
  return evaluate(w1).forward() == evaluate(w2).forward();
}

}  // namespace loopbraid
