#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopbraid/free_group.hpp"
#include "loopbraid/group_module.hpp"

namespace loopbraid {

/// A morphism M_n -> M_n of the free-type pair (F_n, M_n, action),
/// given by generator images: f1 on x_1..x_n and f2 on K_1..K_n. Any
/// such pair of tuples determines a unique morphism, so construction
/// needs no compatibility check beyond rank agreement, and comparing
/// generator images decides morphism equality.
class AggMorphism {
 public:
  AggMorphism(FreeGroupEndo f1, std::vector<ModuleElt> f2)
      : f1_(std::move(f1)), f2_(std::move(f2)) {
    detail::require(static_cast<int>(f2_.size()) == f1_.rank(),
                    "morphism needs exactly rank module images");
    for (const ModuleElt& m : f2_)
      detail::require(m.rank() == f1_.rank(), "module image rank mismatch");
  }

  static AggMorphism identity(int rank) {
    std::vector<ModuleElt> f2;
    f2.reserve(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) f2.push_back(ModuleElt::basis(rank, i));
    return AggMorphism(FreeGroupEndo::identity(rank), std::move(f2));
  }

  int rank() const { return f1_.rank(); }
  const FreeGroupEndo& group_part() const { return f1_; }

  /// Image of K_i, 1-based.
  const ModuleElt& module_image(int i) const {
    detail::require(i >= 1 && i <= rank(), "basis index out of range");
    return f2_[static_cast<std::size_t>(i - 1)];
  }

  const std::vector<ModuleElt>& module_images() const { return f2_; }

  Word apply(const Word& w) const { return f1_(w); }

  /// f2 on a general element: c (g, K_i) -> c (f1(g) . f2(K_i)).
  ModuleElt apply(const ModuleElt& m) const {
    detail::require(m.rank() == rank(), "rank mismatch in morphism application");
    ModuleElt out(rank());
    for (const auto& [key, c] : m.terms())
      out.add_scaled(act(f1_(key.word), module_image(key.basis)), c);
    return out;
  }

  friend bool operator==(const AggMorphism&, const AggMorphism&) = default;

 private:
  FreeGroupEndo f1_;
  std::vector<ModuleElt> f2_;
};

/// compose(f, h) applies h first, matching the product convention
/// (f1, f2)(h1, h2) = (f1 o h1, f2 o h2).
inline AggMorphism compose(const AggMorphism& f, const AggMorphism& h) {
  detail::require(f.rank() == h.rank(), "morphism rank mismatch in composition");
  std::vector<Word> f1_images;
  std::vector<ModuleElt> f2_images;
  f1_images.reserve(static_cast<std::size_t>(f.rank()));
  f2_images.reserve(static_cast<std::size_t>(f.rank()));
  for (int i = 1; i <= f.rank(); ++i) {
    f1_images.push_back(f.apply(h.group_part().image(i)));
    f2_images.push_back(f.apply(h.module_image(i)));
  }
  return AggMorphism(FreeGroupEndo(f.rank(), std::move(f1_images)),
                     std::move(f2_images));
}

inline bool is_identity(const AggMorphism& f) {
  return f == AggMorphism::identity(f.rank());
}

/// A morphism bundled with an inverse witness; the public constructor
/// verifies the two-sided inverse property exactly.
class AggAutomorphism {
 public:
  AggAutomorphism(AggMorphism forward, AggMorphism inverse)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {
    detail::require(forward_.rank() == inverse_.rank(),
                    "automorphism witness rank mismatch");
    detail::require(is_identity(compose(forward_, inverse_)) &&
                        is_identity(compose(inverse_, forward_)),
                    "inverse witness fails the two-sided inverse check");
  }

  static AggAutomorphism identity(int rank) {
    AggMorphism id = AggMorphism::identity(rank);
    return AggAutomorphism(unchecked{}, id, id);
  }

  int rank() const { return forward_.rank(); }
  const AggMorphism& forward() const { return forward_; }
  const AggMorphism& inverse() const { return inverse_; }

  AggAutomorphism inverted() const {
    return AggAutomorphism(unchecked{}, inverse_, forward_);
  }

  /// Composition of verified automorphisms is verified by construction.
  friend AggAutomorphism compose(const AggAutomorphism& f,
                                 const AggAutomorphism& h) {
    return AggAutomorphism(unchecked{}, compose(f.forward_, h.forward_),
                           compose(h.inverse_, f.inverse_));
  }

  friend bool operator==(const AggAutomorphism& a, const AggAutomorphism& b) {
    return a.forward_ == b.forward_;
  }

 private:
  struct unchecked {};
  AggAutomorphism(unchecked, AggMorphism forward, AggMorphism inverse)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

  friend AggAutomorphism tensor_shift(const AggAutomorphism&, int, int);

  AggMorphism forward_;
  AggMorphism inverse_;
};

namespace detail {

inline Word shift_word(const Word& w, int offset, int n) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (const Letter& l : w.letters())
    letters.push_back(Letter{l.index + offset, l.exponent});
  return Word::reduced(n, letters);
}

inline ModuleElt shift_module_elt(const ModuleElt& m, int offset, int n) {
  ModuleElt out(n);
  for (const auto& [key, c] : m.terms())
    out.add_term(shift_word(key.word, offset, n), key.basis + offset, c);
  return out;
}

inline AggMorphism shift_morphism(const AggMorphism& f, int offset, int n) {
  const int k = f.rank();
  std::vector<Word> f1_images;
  std::vector<ModuleElt> f2_images;
  f1_images.reserve(static_cast<std::size_t>(n));
  f2_images.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    if (j <= offset || j > offset + k) {
      f1_images.push_back(Word::generator(n, j));
      f2_images.push_back(ModuleElt::basis(n, j));
    } else {
      f1_images.push_back(shift_word(f.group_part().image(j - offset), offset, n));
      f2_images.push_back(shift_module_elt(f.module_image(j - offset), offset, n));
    }
  }
  return AggMorphism(FreeGroupEndo(n, std::move(f1_images)),
                     std::move(f2_images));
}

}  // namespace detail

/// Embeds a rank-k automorphism as 1^offset (x) f (x) 1^(n-offset-k):
/// indices inside the window shift up by offset, everything else is fixed.
inline AggAutomorphism tensor_shift(const AggAutomorphism& f, int offset,
                                    int n) {
  detail::require(offset >= 0, "tensor shift offset must be nonnegative");
  detail::require(offset + f.rank() <= n,
                  "tensor shift window exceeds target rank");
  return AggAutomorphism(AggAutomorphism::unchecked{},
                         detail::shift_morphism(f.forward(), offset, n),
                         detail::shift_morphism(f.inverse(), offset, n));
}

/// Canonical text form: n lines "x<i> -> <word>", then n lines
/// "K<i> -> <module element>".
inline std::string to_string(const AggMorphism& f) {
  std::string s;
  for (int i = 1; i <= f.rank(); ++i)
    s += "x" + std::to_string(i) + " -> " + to_string(f.group_part().image(i)) +
         "\n";
  for (int i = 1; i <= f.rank(); ++i)
    s += "K" + std::to_string(i) + " -> " + to_string(f.module_image(i)) + "\n";
  return s;
}

/// Parses the canonical morphism block produced by to_string.
inline AggMorphism parse_agg_morphism(std::string_view text, int rank) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty()) lines.push_back(std::exchange(cur, {}));
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  detail::require(static_cast<int>(lines.size()) == 2 * rank,
                  "morphism text needs exactly 2*rank lines");
  auto rhs_of = [&](const std::string& line, const std::string& prefix) {
    detail::require(line.rfind(prefix, 0) == 0,
                    "malformed morphism line '" + line + "'");
    return line.substr(prefix.size());
  };
  std::vector<Word> f1_images;
  std::vector<ModuleElt> f2_images;
  for (int i = 1; i <= rank; ++i)
    f1_images.push_back(parse_word(
        rhs_of(lines[i - 1], "x" + std::to_string(i) + " -> "), rank));
  for (int i = 1; i <= rank; ++i)
    f2_images.push_back(parse_module_elt(
        rhs_of(lines[rank + i - 1], "K" + std::to_string(i) + " -> "), rank));
  return AggMorphism(FreeGroupEndo(rank, std::move(f1_images)),
                     std::move(f2_images));
}

}  // namespace loopbraid
