#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopbraid/free_group.hpp"

namespace loopbraid {

/// Coefficients are exact arbitrary-precision integers so that repeated
/// composition can never overflow the equality oracle.
using Int = boost::multiprecision::cpp_int;

/// An element of the group ring Z[F_n]: a finite integer combination of
/// reduced words, no zero coefficients stored.
class GroupRingElt {
 public:
  using Terms = std::map<Word, Int, ShortlexLess>;

  explicit GroupRingElt(int rank) : rank_(rank) {
    detail::require(rank >= 0, "group ring rank must be nonnegative");
  }

  static GroupRingElt of(const Word& g, Int coeff = 1) {
    GroupRingElt r(g.rank());
    r.add_term(g, std::move(coeff));
    return r;
  }

  static GroupRingElt unit(int rank) { return of(Word(rank)); }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Word& g, Int coeff) {
    detail::require(g.rank() == rank_, "group ring term rank mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_.emplace(g, std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend GroupRingElt operator+(const GroupRingElt& a, const GroupRingElt& b) {
    detail::require(a.rank_ == b.rank_, "group ring rank mismatch in sum");
    GroupRingElt r = a;
    for (const auto& [g, c] : b.terms_) r.add_term(g, c);
    return r;
  }

  friend GroupRingElt operator-(const GroupRingElt& a) {
    GroupRingElt r(a.rank_);
    for (const auto& [g, c] : a.terms_) r.terms_.emplace(g, -c);
    return r;
  }

  friend GroupRingElt operator-(const GroupRingElt& a, const GroupRingElt& b) {
    return a + (-b);
  }

  /// Convolution product: (sum c_g g)(sum d_h h) = sum c_g d_h (gh).
  friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
    detail::require(a.rank_ == b.rank_, "group ring rank mismatch in product");
    GroupRingElt r(a.rank_);
    for (const auto& [g, c] : a.terms_)
      for (const auto& [h, d] : b.terms_) r.add_term(g * h, c * d);
    return r;
  }

  friend GroupRingElt operator*(const Int& c, const GroupRingElt& a) {
    GroupRingElt r(a.rank_);
    for (const auto& [g, d] : a.terms_) r.add_term(g, c * d);
    return r;
  }

  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

 private:
  int rank_;
  Terms terms_;
};

/// Basis pair (g, K_i) of M_n, ordered shortlex on the coefficient word
/// first and by basis index second, so that K1 + K2 - (x2^-1 > K1) is
/// already in canonical order; map iteration in this order is the
/// canonical term order everywhere (printing, JSON, comparisons).
struct ModuleTermKey {
  int basis;
  Word word;

  friend bool operator==(const ModuleTermKey&, const ModuleTermKey&) = default;
};

struct ModuleTermKeyLess {
  bool operator()(const ModuleTermKey& a, const ModuleTermKey& b) const {
    if (a.word != b.word) return shortlex_less(a.word, b.word);
    return a.basis < b.basis;
  }
};

/// An element of M_n = Z[F_n]{K_1..K_n}: a finite integer combination of
/// pairs (g, K_i). Invariant: no zero coefficients, all words reduced of
/// matching rank, basis indices in 1..n.
class ModuleElt {
 public:
  using Terms = std::map<ModuleTermKey, Int, ModuleTermKeyLess>;

  explicit ModuleElt(int rank) : rank_(rank) {
    detail::require(rank >= 0, "module rank must be nonnegative");
  }

  /// The basis element K_i (coefficient word = identity).
  static ModuleElt basis(int rank, int i) {
    return term(rank, 1, Word(rank), i);
  }

  static ModuleElt term(int rank, Int coeff, const Word& g, int basis) {
    ModuleElt m(rank);
    m.add_term(g, basis, std::move(coeff));
    return m;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Word& g, int basis, Int coeff) {
    detail::require(g.rank() == rank_, "module term word rank mismatch");
    detail::require(basis >= 1 && basis <= rank_,
                    "basis index " + std::to_string(basis) +
                        " out of range for rank " + std::to_string(rank_));
    if (coeff == 0) return;
    ModuleTermKey key{basis, g};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const ModuleElt& m, const Int& scale) {
    detail::require(m.rank_ == rank_, "module rank mismatch in sum");
    for (const auto& [key, c] : m.terms_) add_term(key.word, key.basis, scale * c);
  }

  friend ModuleElt operator+(const ModuleElt& a, const ModuleElt& b) {
    ModuleElt r = a;
    r.add_scaled(b, 1);
    return r;
  }

  friend ModuleElt operator-(const ModuleElt& a, const ModuleElt& b) {
    ModuleElt r = a;
    r.add_scaled(b, -1);
    return r;
  }

  friend ModuleElt operator-(const ModuleElt& a) {
    ModuleElt r(a.rank_);
    for (const auto& [key, c] : a.terms_) r.terms_.emplace(key, -c);
    return r;
  }

  friend ModuleElt operator*(const Int& c, const ModuleElt& a) {
    ModuleElt r(a.rank_);
    if (c == 0) return r;
    for (const auto& [key, d] : a.terms_) {
      Int v = c * d;
      r.terms_.emplace(key, std::move(v));
    }
    return r;
  }

  friend bool operator==(const ModuleElt&, const ModuleElt&) = default;

 private:
  int rank_;
  Terms terms_;
};

/// Diagonal action of F_n on M_n: g . (h, K_i) = (gh, K_i).
inline ModuleElt act(const Word& g, const ModuleElt& m) {
  detail::require(g.rank() == m.rank(), "rank mismatch in module action");
  ModuleElt r(m.rank());
  for (const auto& [key, c] : m.terms()) r.add_term(g * key.word, key.basis, c);
  return r;
}

/// Z[F_n]-linear extension of the action.
inline ModuleElt act(const GroupRingElt& r, const ModuleElt& m) {
  detail::require(r.rank() == m.rank(), "rank mismatch in ring action");
  ModuleElt out(m.rank());
  for (const auto& [g, c] : r.terms()) out.add_scaled(act(g, m), c);
  return out;
}

/// K_1 + K_2 + ... + K_n, the total flux fixed by every braid image.
inline ModuleElt total_flux(int n) {
  detail::require(n >= 1, "total flux needs rank >= 1");
  ModuleElt m(n);
  for (int i = 1; i <= n; ++i) m.add_term(Word(n), i, 1);
  return m;
}

/// Canonical text form, e.g. "K1 + K2 - (x2^-1 > K1)"; zero prints "0",
/// unit coefficients are dropped, identity coefficient words are dropped.
inline std::string to_string(const ModuleElt& m) {
  if (m.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c] : m.terms()) {
    const bool neg = c < 0;
    if (first) {
      if (neg) s += '-';
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    Int mag = neg ? Int(-c) : c;
    if (mag != 1) {
      s += mag.str();
      s += ' ';
    }
    if (key.word.is_identity()) {
      s += "K" + std::to_string(key.basis);
    } else {
      s += "(" + to_string(key.word) + " > K" + std::to_string(key.basis) + ")";
    }
  }
  return s;
}

namespace detail {

// Tokenizes a module element, treating '(' and ')' as their own tokens.
inline std::vector<std::string> module_tokens(std::string_view text) {
  std::string spaced;
  spaced.reserve(text.size() + 8);
  for (char c : text) {
    if (c == '(' || c == ')') {
      spaced += ' ';
      spaced += c;
      spaced += ' ';
    } else {
      spaced += c;
    }
  }
  return split_ws(spaced);
}

inline int parse_basis_token(std::string_view tok, int rank) {
  long long i = 0;
  if (tok.size() < 2 || tok[0] != 'K' || !parse_int(tok.substr(1), i) || i < 1)
    fail("invalid basis token '" + std::string(tok) + "'");
  require(i <= rank, "basis index " + std::to_string(i) +
                         " out of range for rank " + std::to_string(rank));
  return static_cast<int>(i);
}

}  // namespace detail

/// Parses the canonical module element format produced by to_string.
inline ModuleElt parse_module_elt(std::string_view text, int rank) {
  std::vector<std::string> toks = detail::module_tokens(text);
  ModuleElt m(rank);
  if (toks.size() == 1 && toks[0] == "0") return m;
  std::size_t k = 0;
  bool first = true;
  while (k < toks.size()) {
    Int sign = 1;
    if (toks[k] == "+" || toks[k] == "-") {
      if (toks[k] == "-") sign = -1;
      ++k;
    } else if (first && !toks[k].empty() && toks[k][0] == '-') {
      sign = -1;
      toks[k] = toks[k].substr(1);
      if (toks[k].empty()) ++k;
    }
    first = false;
    detail::require(k < toks.size(), "dangling sign in module element");
    Int mag = 1;
    if (!toks[k].empty() && toks[k][0] >= '0' && toks[k][0] <= '9') {
      for (char c : toks[k])
        detail::require(c >= '0' && c <= '9',
                        "invalid coefficient '" + toks[k] + "'");
      mag = Int(toks[k]);
      ++k;
      detail::require(k < toks.size(), "coefficient without a term");
    }
    Word g(rank);
    int basis = 0;
    if (toks[k] == "(") {
      ++k;
      std::vector<Letter> letters;
      bool saw_identity = false;
      while (k < toks.size() && toks[k] != ">") {
        if (toks[k] == "1" && letters.empty() && !saw_identity)
          saw_identity = true;
        else
          detail::parse_letter_token(toks[k], rank, letters);
        ++k;
      }
      detail::require(k < toks.size(), "unterminated module term");
      ++k;  // ">"
      detail::require(k < toks.size(), "module term missing basis");
      basis = detail::parse_basis_token(toks[k], rank);
      ++k;
      detail::require(k < toks.size() && toks[k] == ")",
                      "module term missing ')'");
      ++k;
      g = Word::reduced(rank, letters);
    } else {
      basis = detail::parse_basis_token(toks[k], rank);
      ++k;
    }
    m.add_term(g, basis, sign * mag);
  }
  return m;
}

}  // namespace loopbraid
