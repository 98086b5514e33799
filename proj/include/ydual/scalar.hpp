#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ydual {

/// Coefficient field of a computation: the rationals or a prime field GF(p).
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "GF:p".
  static Field parse(const std::string& spec);

  [[nodiscard]] constexpr bool is_rational() const { return p_ == 0; }
  [[nodiscard]] constexpr std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] std::string to_string() const;

  friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact field element.
///
/// Rationals are kept as a reduced int64 fraction while they fit and promote
/// to a GMP rational otherwise, so no value is ever rounded. Prime-field
/// elements store a residue in [0, p). A rational operand combined with a
/// GF(p) operand is reduced into GF(p); two different primes never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v);  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long long>(v)) {}  // NOLINT
  Scalar(long long num, long long den);
  explicit Scalar(const mpq_class& q);

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(long long v, Field f);
  /// Parses "p/q" or "p" (q > 0 after normalisation; q = 0 is an error).
  static Scalar parse(const std::string& text, Field f = Field::rationals());

  /// Reinterprets this value in field f (rationals reduce mod p).
  [[nodiscard]] Scalar in(Field f) const;
  [[nodiscard]] Field field() const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] mpq_class to_mpq() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  void set_rational(__int128 num, __int128 den);
  void set_big(mpq_class q);
  void align(Scalar& o);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t mod_ = 0;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace ydual
