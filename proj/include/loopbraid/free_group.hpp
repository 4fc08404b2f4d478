#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loopbraid {

namespace detail {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace detail

/// A single generator occurrence x_i or x_i^-1. Indices are 1-based
/// throughout, matching the usual x_1..x_n numbering.
struct Letter {
  int index;
  int exponent;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

constexpr Letter inverse(Letter l) { return {l.index, -l.exponent}; }

/// Canonical letter order: x1 < x1^-1 < x2 < x2^-1 < ...
constexpr bool letter_less(Letter a, Letter b) {
  if (a.index != b.index) return a.index < b.index;
  return a.exponent > b.exponent;
}

/// A freely reduced word in F_n. The rank n travels with the value;
/// operations on words of different ranks throw rather than promote.
/// Reduced words are unique normal forms, so operator== decides
/// equality in the group.
class Word {
 public:
  explicit Word(int rank) : rank_(rank) {
    detail::require(rank >= 0, "word rank must be nonnegative");
  }

  Word(int rank, std::initializer_list<Letter> letters)
      : Word(reduced(rank, letters)) {}

  /// Free reduction of an arbitrary letter sequence. Cancellation is
  /// confluent, so a single left-to-right stack pass reaches the
  /// normal form.
  static Word reduced(int rank, std::span<const Letter> letters) {
    Word w(rank);
    w.letters_.reserve(letters.size());
    for (const Letter& l : letters) w.push_cancel(l);
    return w;
  }

  static Word generator(int rank, int index, int exponent = 1) {
    detail::require(exponent == 1 || exponent == -1,
                    "letter exponent must be +1 or -1");
    return Word(rank, {Letter{index, exponent}});
  }

  int rank() const { return rank_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const {
    Word w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(loopbraid::inverse(*it));
    return w;
  }

  friend Word operator*(const Word& u, const Word& v) {
    detail::require(u.rank_ == v.rank_, "word rank mismatch in product");
    Word w = u;
    for (const Letter& l : v.letters_) w.push_cancel(l);
    return w;
  }

  Word& operator*=(const Word& v) { return *this = *this * v; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push_cancel(const Letter& l) {
    detail::require(l.index >= 1 && l.index <= rank_,
                    "letter index " + std::to_string(l.index) +
                        " out of range for rank " + std::to_string(rank_));
    detail::require(l.exponent == 1 || l.exponent == -1,
                    "letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back() == loopbraid::inverse(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  int rank_;
  std::vector<Letter> letters_;
};

/// Shortlex order on reduced words: by length, then letterwise by the
/// canonical letter order. Used for all deterministic printing.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& al = a.letters();
  const auto& bl = b.letters();
  for (std::size_t k = 0; k < al.size(); ++k) {
    if (al[k] != bl[k]) return letter_less(al[k], bl[k]);
  }
  return false;
}

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    return shortlex_less(a, b);
  }
};

/// Splits w as a * c * a^-1 with c cyclically reduced and a the maximal
/// such conjugator. Both returned words are reduced substrings of w.
inline std::pair<Word, Word> cyclic_core(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  std::vector<Letter> prefix;
  while (hi - lo >= 2 && ls[lo] == inverse(ls[hi - 1])) {
    prefix.push_back(ls[lo]);
    ++lo;
    --hi;
  }
  Word a = Word::reduced(w.rank(), prefix);
  Word c = Word::reduced(
      w.rank(), std::span<const Letter>(ls.data() + lo, hi - lo));
  return {a, c};
}

/// An endomorphism of F_n given by the images of x_1..x_n; by freeness
/// this determines the homomorphism (Proposition-style extension on
/// generators).
class FreeGroupEndo {
 public:
  FreeGroupEndo(int rank, std::vector<Word> images)
      : rank_(rank), images_(std::move(images)) {
    detail::require(rank >= 0, "endomorphism rank must be nonnegative");
    detail::require(static_cast<int>(images_.size()) == rank,
                    "endomorphism needs exactly rank generator images");
    for (const Word& w : images_)
      detail::require(w.rank() == rank, "generator image rank mismatch");
  }

  static FreeGroupEndo identity(int rank) {
    std::vector<Word> images;
    images.reserve(rank);
    for (int i = 1; i <= rank; ++i)
      images.push_back(Word::generator(rank, i));
    return FreeGroupEndo(rank, std::move(images));
  }

  int rank() const { return rank_; }

  /// Image of x_i, 1-based.
  const Word& image(int i) const {
    detail::require(i >= 1 && i <= rank_, "generator index out of range");
    return images_[static_cast<std::size_t>(i - 1)];
  }

  const std::vector<Word>& images() const { return images_; }

  /// Applies the endomorphism: substitutes images letterwise and reduces.
  Word operator()(const Word& w) const {
    detail::require(w.rank() == rank_, "word rank mismatch in application");
    Word out(rank_);
    for (const Letter& l : w.letters()) {
      const Word& img = image(l.index);
      out *= (l.exponent == 1) ? img : img.inverse();
    }
    return out;
  }

  friend bool operator==(const FreeGroupEndo&, const FreeGroupEndo&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

/// compose(f, h) applies h first: x_i -> f(h(x_i)).
inline FreeGroupEndo compose(const FreeGroupEndo& f, const FreeGroupEndo& h) {
  detail::require(f.rank() == h.rank(), "endomorphism rank mismatch");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (int i = 1; i <= f.rank(); ++i) images.push_back(f(h.image(i)));
  return FreeGroupEndo(f.rank(), std::move(images));
}

inline std::string to_string(const Letter& l) {
  std::string s = "x" + std::to_string(l.index);
  if (l.exponent == -1) s += "^-1";
  return s;
}

/// Canonical text form: letters separated by single spaces, identity "1".
inline std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string s;
  for (const Letter& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

namespace detail {

inline std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!cur.empty()) out.push_back(std::exchange(cur, {}));
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  std::size_t k = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = (s[0] == '-');
    k = 1;
  }
  if (k == s.size()) return false;
  long long v = 0;
  for (; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') return false;
    v = v * 10 + (s[k] - '0');
    if (v > 1'000'000'000) return false;
  }
  out = neg ? -v : v;
  return true;
}

/// Parses one "x<i>" or "x<i>^<e>" token; exponents other than +-1 are
/// expanded into repeated letters.
inline void parse_letter_token(std::string_view tok, int rank,
                               std::vector<Letter>& out) {
  auto bad = [&] { fail("invalid word token '" + std::string(tok) + "'"); };
  if (tok.size() < 2 || tok[0] != 'x') bad();
  std::string_view rest = tok.substr(1);
  std::string_view idx = rest;
  long long exp = 1;
  if (auto caret = rest.find('^'); caret != std::string_view::npos) {
    idx = rest.substr(0, caret);
    if (!parse_int(rest.substr(caret + 1), exp) || exp == 0) bad();
  }
  long long i = 0;
  if (!parse_int(idx, i) || i < 1) bad();
  require(i <= rank, "generator index " + std::to_string(i) +
                         " out of range for rank " + std::to_string(rank));
  const int sign = exp > 0 ? 1 : -1;
  for (long long k = 0; k < (exp > 0 ? exp : -exp); ++k)
    out.push_back(Letter{static_cast<int>(i), sign});
}

}  // namespace detail

/// Parses the canonical word format ("x2^-1 x1 x2", identity "1").
inline Word parse_word(std::string_view text, int rank) {
  std::vector<std::string> toks = detail::split_ws(text);
  if (toks.size() == 1 && toks[0] == "1") return Word(rank);
  std::vector<Letter> letters;
  for (const std::string& t : toks) detail::parse_letter_token(t, rank, letters);
  return Word::reduced(rank, letters);
}

}  // namespace loopbraid
