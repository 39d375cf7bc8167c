#pragma once

// Scalar modes of the library. Exact mode uses Gaussian rationals (complex
// numbers with rational real and imaginary parts) over a checked 64-bit
// normalized rational; float mode uses std::complex<double>. Every identity
// suite runs in both modes; exact mode asserts literal zero residuals.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace dec4 {

[[noreturn]] inline void throw_overflow() {
  throw std::overflow_error(
      "dec4: exact rational overflow; reduce coefficient magnitudes or box size");
}

/// Normalized rational on int64 (den > 0, gcd(num,den) = 1, 0 == 0/1).
/// Arithmetic is overflow-checked and throws instead of wrapping; integer
/// operands (den == 1) take allocation- and gcd-free fast paths.
class Rat64 {
 public:
  constexpr Rat64() = default;
  constexpr Rat64(std::int64_t v) : n_(v) {}  // NOLINT: implicit by design
  Rat64(std::int64_t num, std::int64_t den) : n_(num), d_(den) { normalize(); }

  std::int64_t num() const { return n_; }
  std::int64_t den() const { return d_; }
  bool is_zero() const { return n_ == 0; }
  bool is_integer() const { return d_ == 1; }

  friend Rat64 operator+(const Rat64& a, const Rat64& b) {
    if (a.d_ == 1 && b.d_ == 1) return Rat64(checked_add(a.n_, b.n_), 1, already_normal{});
    const std::int64_t g = std::gcd(a.d_, b.d_);
    const std::int64_t ad = a.d_ / g;
    const std::int64_t num =
        checked_add(checked_mul(a.n_, b.d_ / g), checked_mul(b.n_, ad));
    return Rat64(num, checked_mul(ad, b.d_));
  }

  friend Rat64 operator-(const Rat64& a, const Rat64& b) { return a + (-b); }

  friend Rat64 operator*(const Rat64& a, const Rat64& b) {
    if (a.d_ == 1 && b.d_ == 1) return Rat64(checked_mul(a.n_, b.n_), 1, already_normal{});
    const std::int64_t g1 = std::gcd(a.n_, b.d_);
    const std::int64_t g2 = std::gcd(b.n_, a.d_);
    return Rat64(checked_mul(a.n_ / g1, b.n_ / g2), checked_mul(a.d_ / g2, b.d_ / g1),
                 already_normal{});
  }

  friend Rat64 operator/(const Rat64& a, const Rat64& b) {
    if (b.n_ == 0) throw std::domain_error("dec4: rational division by zero");
    return a * b.reciprocal();
  }

  Rat64 operator-() const {
    if (n_ == std::numeric_limits<std::int64_t>::min()) throw_overflow();
    return Rat64(-n_, d_, already_normal{});
  }

  Rat64& operator+=(const Rat64& o) { return *this = *this + o; }
  Rat64& operator-=(const Rat64& o) { return *this = *this - o; }
  Rat64& operator*=(const Rat64& o) { return *this = *this * o; }
  Rat64& operator/=(const Rat64& o) { return *this = *this / o; }

  friend bool operator==(const Rat64& a, const Rat64& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;  // canonical form makes this exact
  }
  friend auto operator<=>(const Rat64& a, const Rat64& b) {
    // a.n/a.d <=> b.n/b.d with positive denominators.
    return checked_mul(a.n_, b.d_) <=> checked_mul(b.n_, a.d_);
  }

  double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }

  /// Canonical decimal form "p/q" (q always printed, so round trips are
  /// byte-identical).
  std::string str() const { return std::to_string(n_) + "/" + std::to_string(d_); }

  /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
  /// malformed input.
  static Rat64 parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rat64(parse_i64(text));
      return Rat64(parse_i64(text.substr(0, slash)), parse_i64(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("dec4: malformed rational '" + text + "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("dec4: rational out of range '" + text + "'");
    }
  }

 private:
  struct already_normal {};
  Rat64(std::int64_t num, std::int64_t den, already_normal) : n_(num), d_(den) {}

  Rat64 reciprocal() const {
    if (n_ > 0) return Rat64(d_, n_, already_normal{});
    if (n_ == std::numeric_limits<std::int64_t>::min()) throw_overflow();
    return Rat64(-d_, -n_, already_normal{});
  }

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow();
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow();
    return r;
  }

  static std::int64_t parse_i64(const std::string& s) {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size() || s.empty()) throw std::invalid_argument(s);
    return v;
  }

  void normalize() {
    if (d_ == 0) throw std::domain_error("dec4: rational with zero denominator");
    if (n_ == 0) {
      d_ = 1;
      return;
    }
    if (d_ < 0) {
      if (n_ == std::numeric_limits<std::int64_t>::min() ||
          d_ == std::numeric_limits<std::int64_t>::min())
        throw_overflow();
      n_ = -n_;
      d_ = -d_;
    }
    const std::int64_t g = std::gcd(n_, d_);
    if (g > 1) {
      n_ /= g;
      d_ /= g;
    }
  }

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
};

/// Gaussian rational: re + im*i with exact rational components. This is the
/// exact-mode scalar; it forms a field (division by nonzero elements).
struct GaussQ {
  Rat64 re{};
  Rat64 im{};

  constexpr GaussQ() = default;
  constexpr GaussQ(std::int64_t v) : re(v) {}  // NOLINT: implicit by design
  GaussQ(Rat64 r) : re(r) {}                   // NOLINT: implicit by design
  GaussQ(Rat64 r, Rat64 i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re + b.re, a.im + b.im);
  }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re - b.re, a.im - b.im);
  }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) {
    const Rat64 n2 = b.re * b.re + b.im * b.im;
    if (n2.is_zero()) throw std::domain_error("dec4: division by zero scalar");
    const GaussQ conj_over(b.re / n2, (Rat64(0) - b.im) / n2);
    return a * conj_over;
  }
  GaussQ operator-() const { return GaussQ(-re, -im); }
  GaussQ& operator+=(const GaussQ& o) { return *this = *this + o; }
  GaussQ& operator-=(const GaussQ& o) { return *this = *this - o; }
  GaussQ& operator*=(const GaussQ& o) { return *this = *this * o; }
  GaussQ& operator/=(const GaussQ& o) { return *this = *this / o; }
  friend bool operator==(const GaussQ&, const GaussQ&) = default;

  std::string str() const { return re.str() + (im.is_zero() ? "" : "+" + im.str() + "i"); }
};

using Cplx = std::complex<double>;

/// Uniform access to the two scalar modes. `exact` selects literal-zero
/// comparisons; float comparisons go through magnitudes and tolerances.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<GaussQ> {
  static constexpr bool exact = true;
  static GaussQ zero() { return GaussQ(); }
  static GaussQ one() { return GaussQ(1); }
  static GaussQ imag_unit() { return GaussQ(Rat64(0), Rat64(1)); }
  static GaussQ conj(const GaussQ& v) { return GaussQ(v.re, -v.im); }
  static bool is_zero(const GaussQ& v) { return v.is_zero(); }
  static double magnitude(const GaussQ& v) {
    return std::hypot(v.re.to_double(), v.im.to_double());
  }
  static GaussQ from_int(std::int64_t v) { return GaussQ(v); }
  static std::string str(const GaussQ& v) { return v.str(); }
};

template <>
struct ScalarOps<Cplx> {
  static constexpr bool exact = false;
  static Cplx zero() { return Cplx(0.0, 0.0); }
  static Cplx one() { return Cplx(1.0, 0.0); }
  static Cplx imag_unit() { return Cplx(0.0, 1.0); }
  static Cplx conj(const Cplx& v) { return std::conj(v); }
  static bool is_zero(const Cplx& v) { return v.real() == 0.0 && v.imag() == 0.0; }
  static double magnitude(const Cplx& v) { return std::abs(v); }
  static Cplx from_int(std::int64_t v) { return Cplx(static_cast<double>(v), 0.0); }
  static std::string str(const Cplx& v) {
    return std::to_string(v.real()) + "+" + std::to_string(v.imag()) + "i";
  }
};

}  // namespace dec4

namespace Eigen {

// Minimal adapter so fixed-size 2x2 matrices carry dec4::GaussQ entries. The
// scalar is field-complete, so coefficient products, determinants and the
// direct 2x2 inverse work unchanged. Conjugation goes through dec4::dagger
// (matrix.hpp), never through Eigen's adjoint, because GaussQ is registered
// as a non-complex scalar here.
template <>
struct NumTraits<dec4::GaussQ> {
  typedef dec4::GaussQ Real;
  typedef dec4::GaussQ NonInteger;
  typedef dec4::GaussQ Literal;
  typedef dec4::GaussQ Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 48
  };
  static inline Real epsilon() { return dec4::GaussQ(0); }
  static inline Real dummy_precision() { return dec4::GaussQ(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
