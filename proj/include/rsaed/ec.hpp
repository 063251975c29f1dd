#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rsaed/errors.hpp"

// Prime-field elliptic curve arithmetic: short-Weierstrass group law in
// affine coordinates, scalar multiplication (plain double-and-add plus a
// windowed fixed-base path), SEC-style point compression and the curve
// registry. Field elements are arbitrary-precision integers reduced mod p;
// nothing here is constant-time — this backs a protocol simulator, not
// production key material.

namespace rsaed::ec {

using Int = mpz_class;

// Affine point or the point at infinity (default constructed).
struct Point {
  Int x{0};
  Int y{0};
  bool inf = true;

  Point() = default;
  Point(Int px, Int py) : x(std::move(px)), y(std::move(py)), inf(false) {}
  static Point infinity() { return Point{}; }
  bool is_infinity() const { return inf; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
  }
};

struct CurveParams;

// x-coordinate plus the parity of y (0 = even, 1 = odd), or infinity.
// Octet form: 1 format octet (0x00 infinity, 0x02 even y, 0x03 odd y)
// followed by ceil(bits(p)/8) big-endian x octets.
struct CompressedPoint {
  bool inf = true;
  Int x{0};
  int y_bit = 0;

  static CompressedPoint infinity() { return CompressedPoint{}; }

  std::vector<std::uint8_t> to_octets(const CurveParams& curve) const;
  static CompressedPoint from_octets(std::span<const std::uint8_t> octets,
                                     const CurveParams& curve);

  friend bool operator==(const CompressedPoint& a, const CompressedPoint& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y_bit == b.y_bit;
  }
};

// Domain parameters (a, b, p, G, n) of y^2 = x^3 + ax + b over F_p.
struct CurveParams {
  std::string name;
  Int p;
  Int a;
  Int b;
  Point G;
  Int n;  // order of G

  std::size_t field_octets() const {
    return (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8;
  }
  std::size_t compressed_octets() const { return 1 + field_octets(); }

  bool contains(const Point& P) const;

  // Enforces p prime > 3, 4a^3 + 27b^2 != 0 mod p, G on curve, n*G = infinity.
  void validate() const;
};

// Registered curves: "toy11" (p=11, a=1, b=6, G=(2,7), n=13) and
// "secp160r1" (SEC 2 standard constants). Throws UnknownCurveError otherwise.
const CurveParams& registry_get(std::string_view name);

Point point_add(const Point& P1, const Point& P2, const CurveParams& curve);
Point point_negate(const Point& P, const CurveParams& curve);

// k*P by plain double-and-add; k must be non-negative.
Point scalar_mult(const Int& k, const Point& P, const CurveParams& curve);

// Windowed precomputation for a fixed base point of order n: the scalar is
// consumed in radix-2^w digits against per-position tables, so a multiply is
// ~bits/w point additions and no doublings. Must agree with scalar_mult.
class FixedBaseTable {
 public:
  FixedBaseTable(const Point& base, const CurveParams& curve,
                 unsigned window = 4);

  Point mul(const Int& k) const;  // k taken mod n
  const Point& base() const { return base_; }

 private:
  const CurveParams* curve_;
  Point base_;
  unsigned window_;
  std::size_t digits_;
  std::vector<Point> table_;  // digits_ rows of (2^window - 1) multiples
};

CompressedPoint compress(const Point& P, const CurveParams& curve);

// Recovers the unique on-curve point with the given x and y-parity via a
// modular square root. Throws NoSquareRootError when x^3 + ax + b is a
// non-residue (corrupted wire data).
Point decompress(const CompressedPoint& c, const CurveParams& curve);

// Tonelli-Shanks square root mod an odd prime (exponent shortcut when
// p = 3 mod 4). Throws NoSquareRootError for non-residues.
Int sqrt_mod(const Int& a, const Int& p);

// Big-endian octet-string conversions for field elements.
std::vector<std::uint8_t> int_to_octets(const Int& v, std::size_t width);
Int octets_to_int(std::span<const std::uint8_t> octets);

}  // namespace rsaed::ec
