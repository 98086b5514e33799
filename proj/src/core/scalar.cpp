#include "ydual/scalar.hpp"

#include <limits>
#include <ostream>

namespace ydual {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  auto u = static_cast<unsigned __int128>(neg ? -v : v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t r = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) r = static_cast<std::int64_t>((static_cast<i128>(r) * base) % p);
    base = static_cast<std::int64_t>((static_cast<i128>(base) * base) % p);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t residue(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw ArithmeticError("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  return Field{p};
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q") return rationals();
  if (spec.rfind("GF:", 0) == 0) {
    const std::string digits = spec.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ArithmeticError("malformed field spec '" + spec + "'");
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw ArithmeticError("unknown field spec '" + spec + "' (expected \"Q\" or \"GF:p\")");
}

std::string Field::to_string() const {
  return p_ == 0 ? "Q" : "GF:" + std::to_string(p_);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long long v) : num_(v) {}

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  set_rational(num, den);
}

Scalar::Scalar(const mpq_class& q) { set_big(q); }

Scalar Scalar::zero(Field f) { return Scalar(0).in(f); }
Scalar Scalar::one(Field f) { return Scalar(1).in(f); }
Scalar Scalar::from_int(long long v, Field f) { return Scalar(v).in(f); }

Scalar Scalar::parse(const std::string& text, Field f) {
  auto bad = [&](const char* why) {
    return ArithmeticError("malformed scalar '" + text + "': " + why);
  };
  if (text.empty()) throw bad("empty");
  const auto slash = text.find('/');
  auto check_int = [&](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw bad("not an integer or p/q fraction");
  };
  mpq_class q;
  if (slash == std::string::npos) {
    check_int(text, true);
    q = mpq_class(mpz_class(text));
  } else {
    const std::string n = text.substr(0, slash);
    const std::string d = text.substr(slash + 1);
    check_int(n, true);
    check_int(d, false);
    mpz_class dz(d);
    if (dz == 0) throw bad("zero denominator");
    q = mpq_class(mpz_class(n), dz);
    q.canonicalize();
  }
  return Scalar(q).in(f);
}

void Scalar::set_rational(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (fits64(num) && fits64(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    set_big(std::move(q));
  }
}

void Scalar::set_big(mpq_class q) {
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Field Scalar::field() const { return mod_ == 0 ? Field::rationals() : Field::prime(mod_); }

Scalar Scalar::in(Field f) const {
  if (f.characteristic() == mod_) return *this;
  if (mod_ != 0)
    throw ArithmeticError("cannot move a GF(" + std::to_string(mod_) + ") element into " +
                          f.to_string());
  const std::uint32_t p = f.characteristic();
  std::int64_t n = 0;
  std::int64_t d = 0;
  if (big_) {
    n = residue(big_->get_num(), p);
    d = residue(big_->get_den(), p);
  } else {
    n = ((num_ % static_cast<std::int64_t>(p)) + p) % p;
    d = den_ % static_cast<std::int64_t>(p);
  }
  if (d == 0)
    throw ArithmeticError("denominator of " + to_string() + " vanishes in " + f.to_string());
  Scalar r;
  r.mod_ = p;
  r.num_ = static_cast<std::int64_t>((static_cast<i128>(n) * mod_pow(d, p - 2, p)) % p);
  r.den_ = 1;
  return r;
}

void Scalar::align(Scalar& o) {
  if (mod_ == o.mod_) return;
  if (mod_ != 0 && o.mod_ != 0)
    throw ArithmeticError("mixing GF(" + std::to_string(mod_) + ") and GF(" +
                          std::to_string(o.mod_) + ")");
  if (mod_ == 0)
    *this = in(o.field());
  else
    o = o.in(field());
}

bool Scalar::is_zero() const { return !big_ && num_ == 0; }

bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  Scalar r = *this;
  if (mod_ != 0) {
    r.num_ = mod_pow(num_, mod_ - 2, mod_);
    return r;
  }
  if (big_) {
    mpq_class q = 1 / *big_;
    r.set_big(std::move(q));
  } else {
    r.set_rational(den_, num_);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  Scalar o = other;
  align(o);
  if (mod_ != 0) {
    num_ = (num_ + o.num_) % mod_;
    return *this;
  }
  if (big_ || o.big_) {
    set_big(to_mpq() + o.to_mpq());
    return *this;
  }
  set_rational(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
               static_cast<i128>(den_) * o.den_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  Scalar o = other;
  align(o);
  if (mod_ != 0) {
    num_ = static_cast<std::int64_t>((static_cast<i128>(num_) * o.num_) % mod_);
    return *this;
  }
  if (big_ || o.big_) {
    set_big(to_mpq() * o.to_mpq());
    return *this;
  }
  if (num_ == 0 || o.num_ == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  set_rational(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  Scalar o = other;
  align(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mod_ != 0) {
    r.num_ = (mod_ - num_) % mod_;
  } else if (big_) {
    r.set_big(-*big_);
  } else {
    r.set_rational(-static_cast<i128>(num_), den_);
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ != b.mod_) {
    Scalar x = a;
    Scalar y = b;
    x.align(y);
    return x == y;
  }
  if (a.big_ || b.big_) return a.to_mpq() == b.to_mpq();
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ydual
