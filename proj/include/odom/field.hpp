#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace odom {

// Runtime choice of coefficient field.
struct FieldSpec {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint32_t prime = 32003;

  static FieldSpec rational() { return {}; }
  static FieldSpec prime_field(std::uint32_t p) { return {Kind::Prime, p}; }

  // "QQ" or "GF(p)".
  std::string name() const;
  // Throws ArgumentError for a non-prime or out-of-range modulus.
  void validate() const;
};

struct RationalField {
  using Scalar = boost::multiprecision::cpp_rational;

  Scalar from_int(long v) const { return Scalar(v); }
  bool is_zero(const Scalar& a) const { return a == 0; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
  std::string to_string(const Scalar& a) const { return a.str(); }
};

// Z/pZ with p < 2^31.
struct PrimeField {
  using Scalar = std::uint32_t;
  std::uint32_t p = 32003;

  Scalar from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<Scalar>(r < 0 ? r + static_cast<long>(p) : r);
  }
  bool is_zero(Scalar a) const { return a == 0; }
  Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>((std::uint64_t{a} + b) % p); }
  Scalar sub(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t{a} + p - b) % p);
  }
  Scalar mul(Scalar a, Scalar b) const { return static_cast<Scalar>(std::uint64_t{a} * b % p); }
  Scalar inverse(Scalar a) const {
    // a^(p-2)
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e != 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<Scalar>(result);
  }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inverse(b)); }
  std::string to_string(Scalar a) const { return std::to_string(a); }
};

}  // namespace odom
