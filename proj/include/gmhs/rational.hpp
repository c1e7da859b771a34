// Exact scalars: the rationals Q and the Gaussian rationals Q(i).

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gmhs {

/// Raised for malformed input: dimension mismatches, unknown labels,
/// unparsable scalars, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den) {
    if (den == 0) throw InputError("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "a" or "a/b". Only the canonical spelling is accepted, so
  /// "2/4", "3/1", "+1" and "1/-2" are rejected.
  static Rat parse(std::string_view text) {
    const std::string s(text);
    auto bad = [&]() { return InputError("invalid rational \"" + s + "\""); };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    auto is_int = [](const std::string& t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (t[0] == '-') {
        if (!allow_sign) return false;
        i = 1;
      }
      if (i == t.size()) return false;
      if (t[i] == '0' && t.size() > i + 1) return false;
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') return false;
      }
      return true;
    };
    if (!is_int(num, true) || num == "-0") throw bad();
    Rat r;
    r.v_.get_num() = mpz_class(num);
    if (slash == std::string::npos) {
      r.v_.get_den() = 1;
      return r;
    }
    const std::string den = s.substr(slash + 1);
    if (!is_int(den, false) || den == "0" || den == "1") throw bad();
    r.v_.get_den() = mpz_class(den);
    mpq_class check = r.v_;
    check.canonicalize();
    if (check != r.v_ || r.v_.get_num() == 0) throw bad();
    return r;
  }

  [[nodiscard]] std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] const mpq_class& value() const { return v_; }
  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

/// Element re + im*i of Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(long re) : re_(re) {}            // NOLINT(google-explicit-constructor)
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  [[nodiscard]] const Rat& re() const { return re_; }
  [[nodiscard]] const Rat& im() const { return im_; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }
  [[nodiscard]] GaussRat conj() const { return {re_, -im_}; }
  [[nodiscard]] Rat norm() const { return re_ * re_ + im_ * im_; }

  [[nodiscard]] std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? "" : re_.str();
    if (im_.sign() > 0 && !s.empty()) s += "+";
    return s + im_.str() + "i";
  }

  GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    const Rat n = o.norm();
    if (n.is_zero()) throw std::domain_error("GaussRat: division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

 private:
  Rat re_;
  Rat im_;
};

// Uniform scalar helpers so templates can treat Q and Q(i) alike.
inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_zero(const GaussRat& z) { return z.is_zero(); }
inline Rat conj(const Rat& r) { return r; }
inline GaussRat conj(const GaussRat& z) { return z.conj(); }

template <typename F>
concept ExactField = std::same_as<F, Rat> || std::same_as<F, GaussRat>;

}  // namespace gmhs
