#include "qk/scalar.hpp"

namespace qk {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 31)) throw Error("prime-field modulus too large");
  Field f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

std::string Field::str() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.size() > 1 && s[0] == 'F') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(s[i]))) throw Error("bad field spec '" + s + "'");
      p = p * 10 + (s[i] - '0');
    }
    return prime(p);
  }
  throw Error("bad field spec '" + s + "' (expected Q or F<p>)");
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  s.q_ = 0;
  s.r_ = 0;
  return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    long long m = static_cast<long long>(f.modulus());
    long long r = v % m;
    if (r < 0) r += m;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

namespace {
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw Error("division by zero in F" + std::to_string(p));
  // extended Euclid on (a, p)
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw Error("non-invertible element in prime field");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t big_mod(const boost::multiprecision::cpp_int& v, std::uint64_t p) {
  boost::multiprecision::cpp_int m = v % p;
  if (m < 0) m += p;
  return m.convert_to<std::uint64_t>();
}
}  // namespace

Scalar Scalar::from_rational(const Field& f, const BigRational& q) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = q;
  } else {
    std::uint64_t num = big_mod(numerator(q), f.modulus());
    std::uint64_t den = big_mod(denominator(q), f.modulus());
    s.r_ = (num * mod_inverse(den, f.modulus())) % f.modulus();
  }
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      boost::multiprecision::cpp_int n(text);
      return from_rational(f, BigRational(n));
    }
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in scalar '" + text + "'");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return from_rational(f, BigRational(num, den));
  } catch (const std::exception& e) {
    throw Error("bad scalar '" + text + "': " + e.what());
  }
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw Error("scalar field mismatch (" + field_.str() + " vs " + o.field_.str() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ += o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.modulus();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ -= o.q_;
  else
    s.r_ = (r_ + field_.modulus() - o.r_) % field_.modulus();
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ *= o.q_;
  else
    s.r_ = (r_ * o.r_) % field_.modulus();
  return s;
}

Scalar Scalar::inv() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    if (q_ == 0) throw Error("division by zero");
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, field_.modulus());
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = field_.modulus() - r_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
  check_same(o);
  return field_.is_rational() ? q_ < o.q_ : r_ < o.r_;
}

const BigRational& Scalar::rational() const {
  if (!field_.is_rational()) throw Error("not a rational scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error("not a prime-field scalar");
  return r_;
}

std::string Scalar::str() const {
  if (!field_.is_rational()) return std::to_string(r_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

}  // namespace qk
