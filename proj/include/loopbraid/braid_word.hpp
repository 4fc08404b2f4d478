#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopbraid/free_group.hpp"

namespace loopbraid {

enum class BraidKind { sigma, rho, tau };

inline char kind_char(BraidKind k) {
  switch (k) {
    case BraidKind::sigma: return 's';
    case BraidKind::rho: return 'r';
    case BraidKind::tau: return 't';
  }
  return '?';
}

/// One generator token sigma_i / rho_i / tau_j with a nonzero exponent.
struct BraidToken {
  BraidKind kind;
  int index;
  int exponent;

  friend bool operator==(const BraidToken&, const BraidToken&) = default;
};

/// A word over the extended loop braid group generators. sigma/rho
/// indices run in 1..n-1, tau indices in 1..n.
class BraidWord {
 public:
  BraidWord(int rank, std::vector<BraidToken> tokens)
      : rank_(rank), tokens_(std::move(tokens)) {
    detail::require(rank >= 1, "braid word rank must be at least 1");
    for (const BraidToken& t : tokens_) check_token(t, rank_);
  }

  static void check_token(const BraidToken& t, int rank) {
    const int max_index = (t.kind == BraidKind::tau) ? rank : rank - 1;
    detail::require(
        t.index >= 1 && t.index <= max_index,
        std::string("generator ") + kind_char(t.kind) + std::to_string(t.index) +
            " out of range for rank " + std::to_string(rank));
    detail::require(t.exponent != 0, "braid token exponent must be nonzero");
  }

  int rank() const { return rank_; }
  const std::vector<BraidToken>& tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }

  /// Formal inverse: tokens reversed with exponents negated.
  BraidWord inverted() const {
    std::vector<BraidToken> toks;
    toks.reserve(tokens_.size());
    for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it)
      toks.push_back(BraidToken{it->kind, it->index, -it->exponent});
    return BraidWord(rank_, std::move(toks));
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    detail::require(a.rank_ == b.rank_, "braid word rank mismatch");
    std::vector<BraidToken> toks = a.tokens_;
    toks.insert(toks.end(), b.tokens_.begin(), b.tokens_.end());
    return BraidWord(a.rank_, std::move(toks));
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int rank_;
  std::vector<BraidToken> tokens_;
};

/// Parse failure with the 1-based position of the offending token.
class BraidParseError : public std::runtime_error {
 public:
  BraidParseError(int position, const std::string& token,
                  const std::string& reason)
      : std::runtime_error("token " + std::to_string(position) + " ('" + token +
                           "'): " + reason),
        position_(position) {}

  int position() const { return position_; }

 private:
  int position_;
};

/// Grammar: whitespace-separated tokens `s<i>`, `r<i>`, `t<j>`, each with
/// an optional `^<int>` suffix (negative allowed) or a trailing `'`
/// meaning inverse. Kinds are case-insensitive. The empty string is the
/// empty word.
inline BraidWord parse_braid_word(std::string_view text, int rank) {
  detail::require(rank >= 1, "braid word rank must be at least 1");
  std::vector<std::string> toks = detail::split_ws(text);
  std::vector<BraidToken> tokens;
  tokens.reserve(toks.size());
  for (std::size_t p = 0; p < toks.size(); ++p) {
    const std::string& raw = toks[p];
    const int pos = static_cast<int>(p) + 1;
    auto bad = [&](const std::string& reason) -> void {
      throw BraidParseError(pos, raw, reason);
    };
    std::string body = raw;
    long long exponent = 1;
    if (!body.empty() && body.back() == '\'') {
      body.pop_back();
      exponent = -1;
    } else if (auto caret = body.find('^'); caret != std::string::npos) {
      if (!detail::parse_int(std::string_view(body).substr(caret + 1), exponent))
        bad("malformed exponent");
      if (exponent == 0) bad("exponent must be nonzero");
      body = body.substr(0, caret);
    }
    if (body.size() < 2) bad("expected s<i>, r<i> or t<j>");
    BraidKind kind;
    switch (body[0]) {
      case 's': case 'S': kind = BraidKind::sigma; break;
      case 'r': case 'R': kind = BraidKind::rho; break;
      case 't': case 'T': kind = BraidKind::tau; break;
      default: bad("unknown generator kind"); return BraidWord(rank, {});
    }
    long long index = 0;
    if (!detail::parse_int(std::string_view(body).substr(1), index) || index < 1)
      bad("malformed generator index");
    BraidToken token{kind, static_cast<int>(index), static_cast<int>(exponent)};
    try {
      BraidWord::check_token(token, rank);
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
    tokens.push_back(token);
  }
  return BraidWord(rank, std::move(tokens));
}

inline std::string to_string(const BraidToken& t) {
  std::string s(1, kind_char(t.kind));
  s += std::to_string(t.index);
  if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
  return s;
}

inline std::string to_string(const BraidWord& w) {
  std::string s;
  for (const BraidToken& t : w.tokens()) {
    if (!s.empty()) s += ' ';
    s += to_string(t);
  }
  return s;
}

}  // namespace loopbraid
