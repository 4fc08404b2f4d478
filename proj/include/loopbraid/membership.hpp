#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopbraid/agg.hpp"
#include "loopbraid/free_group.hpp"
#include "loopbraid/group_module.hpp"

namespace loopbraid {

/// Witness of the permutation-conjugating form x_i -> a_i^-1 x_{alpha(i)}^s_i a_i.
/// The conjugator a_i is the canonical maximal one extracted by cyclic_core;
/// any other valid witness differs by a power of the core letter.
struct ConjugacyForm {
  std::vector<int> permutation;  // alpha(i) at position i-1
  std::vector<int> signs;        // s_i = +1 or -1
  std::vector<Word> conjugators; // a_i
};

/// Detects the Goldsmith image form: every generator image must be a
/// conjugate of a single generator letter, with the induced index map a
/// bijection. Both conjugation orientations a x a^-1 and a^-1 x a name
/// the same set of words, so the check is orientation-free. This is a
/// syntactic test only; it does not by itself certify that the
/// endomorphism is an automorphism.
inline std::optional<ConjugacyForm> goldsmith_form(const FreeGroupEndo& f) {
  const int n = f.rank();
  ConjugacyForm form;
  form.permutation.reserve(static_cast<std::size_t>(n));
  form.signs.reserve(static_cast<std::size_t>(n));
  form.conjugators.reserve(static_cast<std::size_t>(n));
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int i = 1; i <= n; ++i) {
    auto [a, core] = cyclic_core(f.image(i));
    if (core.size() != 1) return std::nullopt;
    const Letter l = core.letters().front();
    if (hit[static_cast<std::size_t>(l.index - 1)]) return std::nullopt;
    hit[static_cast<std::size_t>(l.index - 1)] = true;
    form.permutation.push_back(l.index);
    form.signs.push_back(l.exponent);
    form.conjugators.push_back(a.inverse());
  }
  return form;
}

/// Rebuilds the endomorphism x_i -> a_i^-1 x_{alpha(i)}^s_i a_i from a form.
inline FreeGroupEndo reconstruct(const ConjugacyForm& form, int rank) {
  detail::require(static_cast<int>(form.permutation.size()) == rank &&
                      static_cast<int>(form.signs.size()) == rank &&
                      static_cast<int>(form.conjugators.size()) == rank,
                  "conjugacy form size mismatch");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    const Word& a = form.conjugators[static_cast<std::size_t>(i - 1)];
    const Word x = Word::generator(rank, form.permutation[static_cast<std::size_t>(i - 1)],
                                   form.signs[static_cast<std::size_t>(i - 1)]);
    images.push_back(a.inverse() * x * a);
  }
  return FreeGroupEndo(rank, std::move(images));
}

/// Artin's braid-image conditions: (conjugating form with all signs +1,
/// fixes the boundary word x_1 x_2 ... x_n).
inline std::pair<bool, bool> artin_conditions(const FreeGroupEndo& f) {
  const int n = f.rank();
  bool conjugating = false;
  if (auto form = goldsmith_form(f)) {
    conjugating = true;
    for (int s : form->signs) conjugating = conjugating && (s == 1);
  }
  Word boundary(n);
  for (int i = 1; i <= n; ++i) boundary *= Word::generator(n, i);
  const bool fixes_boundary = f(boundary) == boundary;
  return {conjugating, fixes_boundary};
}

/// True iff f2 fixes K_1 + ... + K_n.
inline bool conserves_flux(const AggMorphism& f) {
  if (f.rank() == 0) return true;
  const ModuleElt flux = total_flux(f.rank());
  return f.apply(flux) == flux;
}

/// CLI-facing per-generator report line.
inline std::string form_line(const ConjugacyForm& form, int i) {
  const auto k = static_cast<std::size_t>(i - 1);
  return "x" + std::to_string(i) + " -> a^-1 x" +
         std::to_string(form.permutation[k]) + "^" +
         std::to_string(form.signs[k]) + " a with a = " +
         to_string(form.conjugators[k]);
}

}  // namespace loopbraid
