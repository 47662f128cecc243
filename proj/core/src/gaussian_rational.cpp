#include "weylkit/gaussian_rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace weylkit {

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

bool GaussianRational::is_unit() const {
  if (is_real()) return abs(re_) == 1;
  if (is_imaginary()) return abs(im_) == 1;
  return false;
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  BigRational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  BigRational re = re_ * o.re_ - im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inv();
}

std::string rational_str(const BigRational& r) { return r.get_str(); }

namespace {

std::string imag_str(const BigRational& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return rational_str(im) + " i";
}

BigRational parse_rational(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational");
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') pos = 1;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t k = pos; k < s.size(); ++k) {
    char c = s[k];
    if (c == '/') {
      if (seen_slash || !digit_before) throw ParseError("malformed rational: " + std::string(s));
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("malformed rational: " + std::string(s));
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw ParseError("malformed rational: " + std::string(s));
  }
  std::string body(s[0] == '+' ? s.substr(1) : s);
  BigRational r;
  if (r.set_str(body, 10) != 0) throw ParseError("malformed rational: " + body);
  if (sgn(r.get_den()) == 0) throw DivisionByZero();
  r.canonicalize();
  return r;
}

BigRational parse_imag(std::string_view s) {
  // s ends with 'i'; strip it and an optional '*'.
  s.remove_suffix(1);
  if (!s.empty() && s.back() == '*') s.remove_suffix(1);
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_rational(s);
}

}  // namespace

std::string GaussianRational::str() const {
  if (is_real()) return rational_str(re_);
  if (is_imaginary()) return imag_str(im_);
  return rational_str(re_) + (sgn(im_) > 0 ? " + " : " - ") + imag_str(abs(im_));
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty Gaussian rational");
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split != std::string::npos) {
    if (s.back() != 'i') throw ParseError("expected imaginary part: " + s);
    return {parse_rational(std::string_view(s).substr(0, split)),
            parse_imag(std::string_view(s).substr(split))};
  }
  if (s.back() == 'i') return {BigRational(0), parse_imag(s)};
  return parse_rational(s);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return a + b;
    case ArithKind::Sub: return a - b;
    case ArithKind::Mul: return a * b;
    case ArithKind::Neg: return -a;
    case ArithKind::Conj: return a.conj();
  }
  return a;
}

GaussianRational gq_inv(const GaussianRational& a) { return a.inv(); }

}  // namespace weylkit
