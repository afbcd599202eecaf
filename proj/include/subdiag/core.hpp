#pragma once

// Finite alphabets, words, substitutions (morphisms) and their lazy fixed
// points. Words are plain std::string; a letter is one character from
// [0-9a-zA-Z]. Everything is immutable after construction and safe to share;
// FixedPointStream is the one stateful object and is single-consumer.

#include <array>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subdiag {

/// Malformed substitution spec text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bounded search exhausted its budget.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_letter_char(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

using ParikhVector = std::vector<long long>;

/// A substitution: one nonempty image word per alphabet letter.
/// Alphabet order is definition order and fixes all matrix/vector indexing.
class Substitution {
 public:
  Substitution(std::string alphabet, std::vector<std::string> images)
      : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    index_.fill(-1);
    if (alphabet_.empty()) throw ParseError("empty alphabet");
    if (images_.size() != alphabet_.size())
      throw ParseError("one image per letter required");
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      char c = alphabet_[i];
      if (!is_letter_char(c))
        throw ParseError(std::string("invalid letter '") + c + "'");
      if (index_[static_cast<unsigned char>(c)] != -1)
        throw ParseError(std::string("duplicate letter definition '") + c +
                         "'");
      index_[static_cast<unsigned char>(c)] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i].empty())
        throw ParseError(std::string("empty image for letter '") +
                         alphabet_[i] + "'");
      for (char c : images_[i])
        if (index_[static_cast<unsigned char>(c)] == -1)
          throw ParseError(std::string("image of '") + alphabet_[i] +
                           "' uses undeclared letter '" + c + "'");
    }
  }

  /// Parse the spec grammar: letter "->" word (";" letter "->" word)*.
  /// Whitespace is not significant.
  static Substitution parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact.push_back(c);
    if (compact.empty()) throw ParseError("empty substitution spec");
    std::string alphabet;
    std::vector<std::string> images;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
      std::size_t end = compact.find(';', pos);
      std::string_view rule(compact.data() + pos,
                            (end == std::string::npos ? compact.size() : end) -
                                pos);
      std::size_t arrow = rule.find("->");
      if (arrow == std::string_view::npos)
        throw ParseError("rule missing '->': " + std::string(rule));
      if (arrow != 1)
        throw ParseError("rule must map a single letter: " + std::string(rule));
      alphabet.push_back(rule[0]);
      images.emplace_back(rule.substr(arrow + 2));
      if (end == std::string::npos) break;
      pos = end + 1;
    }
    return Substitution(std::move(alphabet), std::move(images));
  }

  const std::string& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  bool contains(char c) const {
    return index_[static_cast<unsigned char>(c)] != -1;
  }
  int index(char c) const {
    int i = index_[static_cast<unsigned char>(c)];
    if (i < 0)
      throw PreconditionError(std::string("letter '") + c +
                              "' not in alphabet");
    return i;
  }
  const std::string& image(char c) const {
    return images_[static_cast<std::size_t>(index(c))];
  }
  const std::string& image_at(std::size_t i) const { return images_[i]; }
  bool is_binary() const { return alphabet_.size() == 2; }

  /// Canonical spec string; parse(spec_string()) reproduces the value.
  std::string spec_string() const {
    std::string out;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (i) out.push_back(';');
      out.push_back(alphabet_[i]);
      out += "->";
      out += images_[i];
    }
    return out;
  }

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
  }

 private:
  std::string alphabet_;
  std::vector<std::string> images_;
  std::array<int, 256> index_;
};

/// Image of a word under the morphism, apply(s, vw) = apply(s,v)apply(s,w).
inline std::string apply(const Substitution& s, std::string_view word) {
  std::size_t total = 0;
  for (char c : word) total += s.image(c).size();
  std::string out;
  out.reserve(total);
  for (char c : word) out += s.image(c);
  return out;
}

/// theta composed with itself: x -> theta(theta(x)).
inline Substitution square(const Substitution& s) {
  std::vector<std::string> images;
  images.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    images.push_back(apply(s, s.image_at(i)));
  return Substitution(s.alphabet(), std::move(images));
}

/// Letter counts of `word` indexed by `alphabet` order.
inline ParikhVector parikh(std::string_view word, std::string_view alphabet) {
  std::array<int, 256> idx;
  idx.fill(-1);
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    idx[static_cast<unsigned char>(alphabet[i])] = static_cast<int>(i);
  ParikhVector counts(alphabet.size(), 0);
  for (char c : word) {
    int i = idx[static_cast<unsigned char>(c)];
    if (i < 0)
      throw PreconditionError(std::string("letter '") + c +
                              "' not in alphabet");
    ++counts[static_cast<std::size_t>(i)];
  }
  return counts;
}

inline ParikhVector parikh(std::string_view word, const Substitution& s) {
  return parikh(word, s.alphabet());
}

/// Lazy prefix of theta^inf(seed), produced by the self-reading expansion:
/// the buffer starts as theta(seed) and is extended by substituting its own
/// letters, which stays ahead of the read position because the seed image
/// has length >= 2. Single consumer; copies are independent.
class FixedPointStream {
 public:
  FixedPointStream(Substitution s, char seed)
      : sub_(std::move(s)), seed_(seed) {
    const std::string& img = sub_.image(seed);
    if (img[0] != seed)
      throw PreconditionError(std::string("image of '") + seed +
                              "' does not start with it; no fixed point");
    if (img.size() < 2)
      throw PreconditionError(std::string("image of '") + seed +
                              "' does not grow; no infinite fixed point");
    buf_ = img;
    next_ = 1;
  }

  char seed() const { return seed_; }
  const Substitution& substitution() const { return sub_; }

  /// Letter at 0-based position i, growing the buffer as needed.
  char at(std::size_t i) {
    ensure(i + 1);
    return buf_[i];
  }

  /// Grow to at least n letters and expose the buffer.
  const std::string& ensure(std::size_t n) {
    while (buf_.size() < n) {
      buf_ += sub_.image(buf_[next_]);
      ++next_;
    }
    return buf_;
  }

 private:
  Substitution sub_;
  char seed_;
  std::string buf_;
  std::size_t next_;
};

/// First n letters of theta^inf(seed).
inline std::string fixed_point_prefix(const Substitution& s, char seed,
                                      std::size_t n) {
  if (n == 0) return {};
  FixedPointStream st(s, seed);
  return st.ensure(n).substr(0, n);
}

/// Swap the two letters of a binary alphabet, letterwise.
inline std::string mirror_word(std::string_view word,
                               std::string_view alphabet) {
  if (alphabet.size() != 2)
    throw PreconditionError("mirror requires a binary alphabet");
  std::string out(word);
  for (char& c : out) {
    if (c == alphabet[0])
      c = alphabet[1];
    else if (c == alphabet[1])
      c = alphabet[0];
    else
      throw PreconditionError(std::string("letter '") + c +
                              "' not in alphabet");
  }
  return out;
}

/// True iff theta(1) is the letterwise mirror of theta(0).
inline bool is_continuous(const Substitution& s) {
  if (!s.is_binary())
    throw PreconditionError("continuity is defined for binary alphabets");
  return s.image_at(1) == mirror_word(s.image_at(0), s.alphabet());
}

/// Primitivity via the Wielandt bound: some power M^k with
/// k <= (d-1)^2 + 1 is entrywise positive.
inline bool is_primitive(const Substitution& s) {
  const std::size_t d = s.size();
  std::vector<std::vector<bool>> m(d, std::vector<bool>(d, false));
  for (std::size_t i = 0; i < d; ++i)
    for (char c : s.image_at(i))
      m[i][static_cast<std::size_t>(s.index(c))] = true;
  auto mul = [d](const std::vector<std::vector<bool>>& a,
                 const std::vector<std::vector<bool>>& b) {
    std::vector<std::vector<bool>> r(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (a[i][k])
          for (std::size_t j = 0; j < d; ++j)
            if (b[k][j]) r[i][j] = true;
    return r;
  };
  auto all_positive = [d](const std::vector<std::vector<bool>>& a) {
    for (const auto& row : a)
      for (bool v : row)
        if (!v) return false;
    return true;
  };
  std::size_t bound = (d - 1) * (d - 1) + 1;
  // powers by repeated squaring; positivity is monotone past the first
  // positive power, so checking M^bound suffices
  std::vector<std::vector<bool>> acc(d, std::vector<bool>(d, false));
  for (std::size_t i = 0; i < d; ++i) acc[i][i] = true;
  std::vector<std::vector<bool>> base = m;
  std::size_t e = bound;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return all_positive(acc);
}

struct PeriodicityResult {
  /// Smallest certified period, if any.
  std::optional<std::size_t> period;
  /// Prefix-periodic at this p but the rotation-power certificate failed.
  std::optional<std::size_t> empirical_period;
};

/// Periodicity of theta^inf(seed). A period p is certified when the
/// length-horizon prefix is p-periodic and theta maps the period word to a
/// power of one of its rotations; with the empirical check this pins the
/// fixed point to P^inf.
inline PeriodicityResult detect_periodicity(const Substitution& s, char seed,
                                            std::size_t max_period = 64,
                                            std::size_t horizon = 4096) {
  FixedPointStream st(s, seed);
  const std::string& w = st.ensure(horizon);
  PeriodicityResult res;
  for (std::size_t p = 1; p <= max_period && p < horizon; ++p) {
    bool periodic = true;
    for (std::size_t i = p; i < horizon; ++i)
      if (w[i] != w[i % p]) {
        periodic = false;
        break;
      }
    if (!periodic) continue;
    std::string period_word = w.substr(0, p);
    std::string img = apply(s, period_word);
    bool certified = false;
    if (img.size() % p == 0 && img.size() >= p) {
      for (std::size_t r = 0; r < p && !certified; ++r) {
        std::string rot = period_word.substr(r) + period_word.substr(0, r);
        certified = true;
        for (std::size_t i = 0; i < img.size(); ++i)
          if (img[i] != rot[i % p]) {
            certified = false;
            break;
          }
      }
    }
    if (certified) {
      res.period = p;
      return res;
    }
    if (!res.empirical_period) res.empirical_period = p;
  }
  return res;
}

}  // namespace subdiag
