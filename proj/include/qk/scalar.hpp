#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qk {

using BigRational = boost::multiprecision::cpp_rational;

/// Error type for structural problems (shape mismatches, bad input data,
/// non-invertible reassociators, ...). Axiom *failures* are never exceptions;
/// they travel in Report records.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The ground field: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { rationals, prime };

  Field() = default;
  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  std::uint64_t modulus() const { return p_; }

  bool operator==(const Field&) const = default;

  std::string str() const;           // "Q" or "F<p>"
  static Field parse(const std::string& s);

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
};

/// Exact element of the active field. Rationals are kept reduced with a
/// positive denominator (cpp_rational maintains that); prime-field residues
/// live in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), q_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_rational(const Field& f, const BigRational& q);

  /// Parses "a", "-a" or "a/b"; reduced mod p over prime fields.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order used only for deterministic bookkeeping (map keys, pivots).
  bool operator<(const Scalar& o) const;

  const BigRational& rational() const;
  std::uint64_t residue() const;

  std::string str() const;  // canonical: "a" or "a/b"; residue in [0,p)

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  BigRational q_;        // rational value
  std::uint64_t r_ = 0;  // prime-field residue
};

bool is_prime_u64(std::uint64_t n);

}  // namespace qk
