#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace voganish {

// Gaussian rational a + b*i with exact GMP rational parts.
// All core geometry runs over this field; plain rationals are the b == 0 case.
struct QI {
  mpq_class re, im;

  QI() : re(0), im(0) {}
  QI(long v) : re(v), im(0) {}         // NOLINT(google-explicit-constructor)
  QI(mpq_class r) : re(std::move(r)), im(0) {}  // NOLINT
  QI(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static QI i() { return QI(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_rational() const { return im == 0; }

  QI conj() const { return QI(re, -im); }

  // |z|^2 as a rational; zero iff z == 0.
  mpq_class norm() const { return re * re + im * im; }

  QI operator-() const { return QI(-re, -im); }
  QI& operator+=(const QI& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QI& operator-=(const QI& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  QI& operator*=(const QI& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  QI& operator/=(const QI& o) {
    if (o.is_zero()) throw std::domain_error("QI: division by zero");
    mpq_class n = o.norm();
    mpq_class r = (re * o.re + im * o.im) / n;
    mpq_class i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend QI operator+(QI a, const QI& b) { return a += b; }
  friend QI operator-(QI a, const QI& b) { return a -= b; }
  friend QI operator*(QI a, const QI& b) { return a *= b; }
  friend QI operator/(QI a, const QI& b) { return a /= b; }
  friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const QI& a, const QI& b) { return !(a == b); }

  // i^k for k mod 4.
  static QI i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return QI(1);
      case 1: return QI::i();
      case 2: return QI(-1);
      default: return QI(mpq_class(0), mpq_class(-1));
    }
  }

  std::string str() const {
    if (im == 0) return re.get_str();
    if (re == 0) {
      if (im == 1) return "i";
      if (im == -1) return "-i";
      return im.get_str() + "i";
    }
    std::string s = re.get_str();
    if (im > 0) s += "+";
    if (im == 1)
      s += "i";
    else if (im == -1)
      s += "-i";
    else
      s += im.get_str() + "i";
    return s;
  }

  // Parses "p/q", "i", "-i", "2i", "1+i", "1-2i", "3/2-1/2i".
  static QI parse(const std::string& s);
};

inline QI parse_term(const std::string& t, bool& is_im) {
  is_im = false;
  std::string body = t;
  if (!body.empty() && body.back() == 'i') {
    is_im = true;
    body.pop_back();
    if (body.empty() || body == "+") body = "1";
    if (body == "-") body = "-1";
  }
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw std::runtime_error("QI: bad literal '" + t + "'");
  q.canonicalize();
  return QI(q);
}

inline QI QI::parse(const std::string& s) {
  if (s.empty()) throw std::runtime_error("QI: empty literal");
  // Split into at most two signed terms, keeping '/' denominators intact.
  size_t split = std::string::npos;
  for (size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-')
      split = k;
  }
  QI out;
  bool im_flag = false;
  if (split == std::string::npos) {
    QI v = parse_term(s, im_flag);
    return im_flag ? QI(mpq_class(0), v.re) : v;
  }
  QI a = parse_term(s.substr(0, split), im_flag);
  if (im_flag) a = QI(mpq_class(0), a.re);
  QI b = parse_term(s.substr(split), im_flag);
  if (im_flag) b = QI(mpq_class(0), b.re);
  return a + b;
}

}  // namespace voganish
