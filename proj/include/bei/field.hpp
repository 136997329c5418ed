#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bei {

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime field F_p with p < 2^31.  Elements are canonical residues 0..p-1;
// the field object itself is just the modulus, cheap to copy around.
struct Fp {
  using Elem = std::uint32_t;
  std::uint32_t p = kDefaultPrime;

  Fp() = default;
  explicit Fp(std::uint32_t prime) : p(prime) {
    if (!is_prime_u32(prime) || prime >= (1u << 31))
      throw std::invalid_argument("coefficient modulus must be a prime < 2^31, got " +
                                  std::to_string(prime));
  }

  bool operator==(const Fp&) const = default;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p ? Elem(s - p) : Elem(s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(a + p - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return Elem(std::uint64_t(a) * b % p); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid; p prime so gcd is 1
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return t < 0 ? Elem(t + p) : Elem(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p);
    return r < 0 ? Elem(r + p) : Elem(r);
  }
  // prints small-magnitude representative: 32002 mod 32003 renders as -1
  std::string to_string(Elem a) const {
    if (a > p / 2) return "-" + std::to_string(p - a);
    return std::to_string(a);
  }
  // signed representative in (-p/2, p/2]
  std::int64_t lift(Elem a) const {
    return a > p / 2 ? std::int64_t(a) - std::int64_t(p) : std::int64_t(a);
  }
};

// Exact rationals (slow path, used for characteristic-independence spot checks).
struct QQ {
  using Elem = mpq_class;

  bool operator==(const QQ&) const = default;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in QQ");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  std::string to_string(const Elem& a) const { return a.get_str(); }

 private:
  Elem inv_guard(const Elem& b) const {
    if (sgn(b) == 0) throw std::domain_error("division by zero in QQ");
    return b;
  }
};

}  // namespace bei
