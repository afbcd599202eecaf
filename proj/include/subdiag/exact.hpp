#pragma once

// Exact arithmetic: arbitrary-precision rationals, values a + b*sqrt(D) in a
// real quadratic field, 2x2 integer matrix spectra, eigenvalue-type
// classification, and Perron-Frobenius weight/frequency vectors. No floating
// point is used anywhere except the explicit to_double() conversions.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subdiag/core.hpp"

namespace subdiag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) {
  return r.sign();
}

inline double to_double(const Rational& r) {
  return r.convert_to<double>();
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// n = f*f*d with d squarefree; returns d and stores f.
inline long long squarefree_part(long long n, long long& sqrt_factor) {
  if (n < 0) throw PreconditionError("squarefree_part of a negative number");
  sqrt_factor = 1;
  if (n == 0) return 0;
  long long d = n;
  for (long long p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      sqrt_factor *= p;
    }
  }
  return d;
}

/// Exact element a + b*sqrt(D) of a real quadratic field. D is kept
/// squarefree; rational values are normalized to D = 0, b = 0. Values with
/// different irrational parts do not mix.
class QuadVal {
 public:
  QuadVal() : a_(0), b_(0), d_(0) {}
  QuadVal(long long v) : a_(v), b_(0), d_(0) {}  // NOLINT: implicit by design
  QuadVal(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT
  QuadVal(Rational a, Rational b, long long d)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {
    normalize();
  }

  static QuadVal sqrt_of(long long d) { return QuadVal(0, 1, d); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  long long radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  /// As an exact Rational; throws when irrational.
  const Rational& as_rational() const {
    if (!is_rational())
      throw PreconditionError("QuadVal is irrational: " + str());
    return a_;
  }

  QuadVal conjugate() const { return QuadVal(a_, -b_, d_); }

  /// Exact sign by case analysis on the signs of a, b and comparison of
  /// a^2 with b^2 D in integers.
  int sign() const {
    if (b_ == 0) return sign_of(a_);
    if (a_ == 0) return sign_of(b_);
    int sa = sign_of(a_), sb = sign_of(b_);
    if (sa == sb) return sa;
    Rational a2 = a_ * a_;
    Rational b2d = b_ * b_ * d_;
    if (a2 == b2d) return 0;
    bool a_wins = a2 > b2d;
    return a_wins ? sa : sb;
  }

  double to_double() const {
    return subdiag::to_double(a_) +
           subdiag::to_double(b_) * std::sqrt(static_cast<double>(d_));
  }

  /// "a+b*sqrt(D)" with rationals rendered as "p/q".
  std::string str() const {
    if (is_rational()) return to_string(a_);
    std::string out;
    if (a_ != 0) out = to_string(a_);
    if (b_ > 0 && !out.empty()) out += "+";
    if (b_ < 0) {
      out += "-";
      out += to_string(-b_);
    } else {
      out += to_string(b_);
    }
    out += "*sqrt(" + std::to_string(d_) + ")";
    return out;
  }

  friend QuadVal operator+(const QuadVal& x, const QuadVal& y) {
    long long d = merge_d(x, y);
    return QuadVal(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadVal operator-(const QuadVal& x, const QuadVal& y) {
    long long d = merge_d(x, y);
    return QuadVal(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  friend QuadVal operator-(const QuadVal& x) {
    return QuadVal(-x.a_, -x.b_, x.d_);
  }
  friend QuadVal operator*(const QuadVal& x, const QuadVal& y) {
    long long d = merge_d(x, y);
    return QuadVal(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_,
                   d);
  }
  friend QuadVal operator/(const QuadVal& x, const QuadVal& y) {
    long long d = merge_d(x, y);
    Rational n = y.a_ * y.a_ - y.b_ * y.b_ * d;
    if (n == 0) throw PreconditionError("division by zero QuadVal");
    // multiply by the conjugate of y
    Rational ra = (x.a_ * y.a_ - x.b_ * y.b_ * d) / n;
    Rational rb = (x.b_ * y.a_ - x.a_ * y.b_) / n;
    return QuadVal(std::move(ra), std::move(rb), d);
  }

  friend bool operator==(const QuadVal& x, const QuadVal& y) {
    if (x.d_ != y.d_) {
      merge_d(x, y);  // type-check; distinct nonzero radicands throw
      return false;   // one rational, one irrational
    }
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadVal& x, const QuadVal& y) {
    return !(x == y);
  }
  friend bool operator<(const QuadVal& x, const QuadVal& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const QuadVal& x, const QuadVal& y) { return y < x; }
  friend bool operator<=(const QuadVal& x, const QuadVal& y) {
    return !(y < x);
  }
  friend bool operator>=(const QuadVal& x, const QuadVal& y) {
    return !(x < y);
  }

  QuadVal abs() const { return sign() < 0 ? -*this : *this; }

 private:
  static long long merge_d(const QuadVal& x, const QuadVal& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    throw PreconditionError("mixed radicands sqrt(" + std::to_string(x.d_) +
                            ") and sqrt(" + std::to_string(y.d_) + ")");
  }

  void normalize() {
    if (d_ < 0) throw PreconditionError("negative radicand");
    long long f = 1;
    if (d_ > 1) {
      d_ = squarefree_part(d_, f);
      if (f != 1) b_ *= f;
    }
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
    if (d_ == 0 || b_ == 0) {
      b_ = 0;
      d_ = 0;
    }
  }

  Rational a_, b_;
  long long d_;
};

/// Smallest-denominator rational within tol of x, by continued-fraction
/// convergents with denominators capped at max_den.
inline std::optional<Rational> rational_snap(const Rational& x,
                                             const BigInt& max_den,
                                             const Rational& tol) {
  BigInt p0 = 1, q0 = 0;  // previous convergent
  BigInt p1, q1 = 1;      // current convergent
  Rational rest = x;
  p1 = numerator(x) / denominator(x);
  if (x < 0 && p1 * denominator(x) != numerator(x)) p1 -= 1;  // floor
  rest = x - Rational(p1);
  while (true) {
    Rational cand(p1, q1);
    Rational err = x - cand;
    if (err < 0) err = -err;
    if (err <= tol) return cand;
    if (rest == 0) return std::nullopt;
    Rational inv = Rational(1) / rest;
    BigInt a = numerator(inv) / denominator(inv);
    rest = inv - Rational(a);
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) return std::nullopt;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
}

// ---------------------------------------------------------------------------
// 2x2 substitution matrices and their spectra

/// m[i][j] = number of occurrences of letter j in theta(i); row i sums to
/// |theta(i)| when built from a substitution.
struct Matrix2 {
  long long m[2][2];

  long long trace() const { return m[0][0] + m[1][1]; }
  long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    Matrix2 r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
  }
  friend bool operator==(const Matrix2& a, const Matrix2& b) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (a.m[i][j] != b.m[i][j]) return false;
    return true;
  }
};

inline Matrix2 substitution_matrix(const Substitution& s) {
  if (!s.is_binary())
    throw PreconditionError("substitution_matrix expects a binary alphabet");
  Matrix2 r{};
  for (int i = 0; i < 2; ++i) {
    ParikhVector counts = parikh(s.image_at(static_cast<std::size_t>(i)), s);
    r.m[i][0] = counts[0];
    r.m[i][1] = counts[1];
  }
  return r;
}

/// General letter-count matrix, row i = counts of each letter in theta(i).
inline std::vector<std::vector<long long>> count_matrix(const Substitution& s) {
  std::vector<std::vector<long long>> r;
  r.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    r.push_back(parikh(s.image_at(i), s));
  return r;
}

/// Exact roots of x^2 - tr x + det, dominant first. Nonnegative integer
/// matrices always have a real pair; a negative discriminant is rejected.
inline std::pair<QuadVal, QuadVal> eigenvalues(const Matrix2& m) {
  long long tr = m.trace();
  long long disc = tr * tr - 4 * m.det();
  if (disc < 0)
    throw PreconditionError(
        "complex eigenvalue pair; spectral classification does not apply");
  long long f = 1;
  long long d = squarefree_part(disc, f);
  QuadVal lambda(Rational(tr, 2), Rational(f, 2), d);
  QuadVal lambda_o(Rational(tr, 2), Rational(-f, 2), d);
  if (lambda.abs() < lambda_o.abs()) std::swap(lambda, lambda_o);
  return {lambda, lambda_o};
}

enum class SpectralKind { Pisot, Salem, Expanding, Degenerate };

inline const char* to_string(SpectralKind k) {
  switch (k) {
    case SpectralKind::Pisot: return "Pisot";
    case SpectralKind::Salem: return "Salem";
    case SpectralKind::Expanding: return "Expanding";
    default: return "Degenerate";
  }
}

struct SpectralData {
  QuadVal lambda;    // dominant eigenvalue
  QuadVal lambda_o;  // the other one
  SpectralKind kind = SpectralKind::Degenerate;
};

/// Pisot / Salem / Expanding by the exact position of |lambda_o| relative
/// to 1; Degenerate for non-primitive substitutions.
inline SpectralData classify(const Substitution& s) {
  SpectralData out;
  auto [l, lo] = eigenvalues(substitution_matrix(s));
  out.lambda = l;
  out.lambda_o = lo;
  if (!is_primitive(s)) {
    out.kind = SpectralKind::Degenerate;
    return out;
  }
  QuadVal mod = lo.abs();
  int c = (mod - QuadVal(1)).sign();
  out.kind = c < 0   ? SpectralKind::Pisot
             : c == 0 ? SpectralKind::Salem
                      : SpectralKind::Expanding;
  return out;
}

/// Right PF eigenvector, positive. Built as (|theta(0)| - lambda_o,
/// |theta(1)| - lambda_o); when rational it is rescaled to coprime positive
/// integers so cumulative weights stay integral.
struct WeightVector {
  QuadVal w0, w1;

  bool integral() const {
    return w0.is_rational() && w1.is_rational() &&
           denominator(w0.as_rational()) == 1 &&
           denominator(w1.as_rational()) == 1;
  }
  /// Integer components; only valid when integral().
  std::pair<long long, long long> as_integers() const {
    return {numerator(w0.as_rational()).convert_to<long long>(),
            numerator(w1.as_rational()).convert_to<long long>()};
  }
  std::string str() const { return "(" + w0.str() + ", " + w1.str() + ")"; }
};

inline WeightVector pf_weight_vector(const Substitution& s) {
  if (!s.is_binary())
    throw PreconditionError("pf_weight_vector expects a binary alphabet");
  if (!is_primitive(s))
    throw PreconditionError("pf_weight_vector requires a primitive substitution");
  auto [l, lo] = eigenvalues(substitution_matrix(s));
  QuadVal w0 = QuadVal(static_cast<long long>(s.image_at(0).size())) - lo;
  QuadVal w1 = QuadVal(static_cast<long long>(s.image_at(1).size())) - lo;
  if (w0.is_rational() && w1.is_rational()) {
    Rational r0 = w0.as_rational(), r1 = w1.as_rational();
    BigInt num = boost::multiprecision::gcd(numerator(r0), numerator(r1));
    BigInt den =
        boost::multiprecision::lcm(denominator(r0), denominator(r1));
    Rational scale(den, num);
    w0 = QuadVal(r0 * scale);
    w1 = QuadVal(r1 * scale);
  }
  if (w0.sign() <= 0 || w1.sign() <= 0)
    throw PreconditionError("weight vector is not positive");
  return {w0, w1};
}

/// Normalized left PF eigenvector: exact letter frequencies of either fixed
/// point, entries positive and summing to 1.
inline std::vector<QuadVal> letter_frequencies(const Substitution& s) {
  if (!s.is_binary())
    throw PreconditionError("letter_frequencies expects a binary alphabet");
  if (!is_primitive(s))
    throw PreconditionError(
        "letter_frequencies requires a primitive substitution");
  Matrix2 m = substitution_matrix(s);
  auto [l, lo] = eigenvalues(m);
  // unnormalized left eigenvector (m10, lambda - m00)
  QuadVal x0(m.m[1][0]);
  QuadVal x1 = l - QuadVal(m.m[0][0]);
  QuadVal total = x0 + x1;
  return {x0 / total, x1 / total};
}

}  // namespace subdiag
