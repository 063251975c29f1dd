#include "rsaed/ec.hpp"

#include <utility>

namespace rsaed::ec {

namespace {

Int reduced(const Int& v, const Int& p) {
  Int r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());  // always in [0, p)
  return r;
}

Int inv_mod(const Int& v, const Int& p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error("element not invertible mod p");
  }
  return r;
}

Int pow_mod(const Int& base, const Int& exp, const Int& p) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
  return r;
}

void require_on_curve(const Point& P, const CurveParams& curve,
                      const char* who) {
  if (!curve.contains(P)) {
    throw OffCurveError(std::string(who) + ": point not on curve " +
                        curve.name);
  }
}

// Group law without on-curve validation; inputs are already trusted.
Point add_raw(const Point& P1, const Point& P2, const CurveParams& c) {
  if (P1.inf) return P2;
  if (P2.inf) return P1;

  Int lambda;
  if (P1.x == P2.x) {
    if (reduced(P1.y + P2.y, c.p) == 0) return Point::infinity();  // P + (-P)
    // doubling: lambda = (3x^2 + a) / 2y
    lambda = reduced((3 * P1.x * P1.x + c.a) * inv_mod(reduced(2 * P1.y, c.p), c.p), c.p);
  } else {
    // chord: lambda = (y2 - y1) / (x2 - x1)
    lambda = reduced((P2.y - P1.y) * inv_mod(reduced(P2.x - P1.x, c.p), c.p), c.p);
  }
  Int x3 = reduced(lambda * lambda - P1.x - P2.x, c.p);
  Int y3 = reduced(lambda * (P1.x - x3) - P1.y, c.p);
  return Point(std::move(x3), std::move(y3));
}

Point mult_raw(const Int& k, Point base, const CurveParams& c) {
  Point acc = Point::infinity();
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = add_raw(acc, base, c);
    base = add_raw(base, base, c);
  }
  return acc;
}

CurveParams make_toy11() {
  CurveParams c;
  c.name = "toy11";
  c.p = 11;
  c.a = 1;
  c.b = 6;
  c.G = Point(2, 7);
  c.n = 13;
  c.validate();
  return c;
}

// SEC 2 secp160r1 domain parameters.
CurveParams make_secp160r1() {
  CurveParams c;
  c.name = "secp160r1";
  c.p = Int("FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF7FFFFFFF", 16);
  c.a = Int("FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF7FFFFFFC", 16);
  c.b = Int("1C97BEFC54BD7A8B65ACF89F81D4D4ADC565FA45", 16);
  c.G = Point(Int("4A96B5688EF573284664698968C38BB913CBFC82", 16),
              Int("23A628553168947D59DCC912042351377AC5FB32", 16));
  c.n = Int("0100000000000000000001F4C8F927AED3CA752257", 16);
  c.validate();
  return c;
}

}  // namespace

bool CurveParams::contains(const Point& P) const {
  if (P.inf) return true;
  if (P.x < 0 || P.x >= p || P.y < 0 || P.y >= p) return false;
  return reduced(P.y * P.y - (P.x * P.x * P.x + a * P.x + b), p) == 0;
}

void CurveParams::validate() const {
  if (p <= 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw Error("curve " + name + ": p must be prime and > 3");
  }
  if (reduced(4 * a * a * a + 27 * b * b, p) == 0) {
    throw Error("curve " + name + ": singular (4a^3 + 27b^2 = 0 mod p)");
  }
  if (G.inf || !contains(G)) {
    throw Error("curve " + name + ": base point not on curve");
  }
  if (n < 2 || !mult_raw(n, G, *this).is_infinity()) {
    throw Error("curve " + name + ": n*G != infinity");
  }
}

const CurveParams& registry_get(std::string_view name) {
  static const CurveParams toy11 = make_toy11();
  static const CurveParams secp160r1 = make_secp160r1();
  if (name == "toy11") return toy11;
  if (name == "secp160r1") return secp160r1;
  throw UnknownCurveError("unknown curve: " + std::string(name));
}

Point point_add(const Point& P1, const Point& P2, const CurveParams& curve) {
  require_on_curve(P1, curve, "point_add");
  require_on_curve(P2, curve, "point_add");
  return add_raw(P1, P2, curve);
}

Point point_negate(const Point& P, const CurveParams& curve) {
  require_on_curve(P, curve, "point_negate");
  if (P.inf) return P;
  return Point(P.x, reduced(-P.y, curve.p));
}

Point scalar_mult(const Int& k, const Point& P, const CurveParams& curve) {
  if (k < 0) throw Error("scalar_mult: negative scalar");
  require_on_curve(P, curve, "scalar_mult");
  return mult_raw(k, P, curve);
}

FixedBaseTable::FixedBaseTable(const Point& base, const CurveParams& curve,
                               unsigned window)
    : curve_(&curve), base_(base), window_(window) {
  if (window_ < 1 || window_ > 8) throw Error("FixedBaseTable: window out of range");
  require_on_curve(base, curve, "FixedBaseTable");
  const std::size_t bits = mpz_sizeinbase(curve.n.get_mpz_t(), 2);
  digits_ = (bits + window_ - 1) / window_;
  const std::size_t row = (std::size_t{1} << window_) - 1;
  table_.reserve(digits_ * row);
  Point radix = base;  // 2^(w*j) * base for row j
  for (std::size_t j = 0; j < digits_; ++j) {
    Point multiple = radix;
    for (std::size_t d = 0; d < row; ++d) {
      table_.push_back(multiple);
      multiple = add_raw(multiple, radix, curve);
    }
    for (unsigned s = 0; s < window_; ++s) radix = add_raw(radix, radix, curve);
  }
}

Point FixedBaseTable::mul(const Int& k) const {
  if (k < 0) throw Error("FixedBaseTable::mul: negative scalar");
  const Int kr = reduced(k, curve_->n);  // base has order n
  const std::size_t row = (std::size_t{1} << window_) - 1;
  Point acc = Point::infinity();
  for (std::size_t j = 0; j < digits_; ++j) {
    unsigned digit = 0;
    for (unsigned b = 0; b < window_; ++b) {
      if (mpz_tstbit(kr.get_mpz_t(), j * window_ + b)) digit |= 1u << b;
    }
    if (digit != 0) acc = add_raw(acc, table_[j * row + digit - 1], *curve_);
  }
  return acc;
}

CompressedPoint compress(const Point& P, const CurveParams& curve) {
  require_on_curve(P, curve, "compress");
  CompressedPoint c;
  if (P.inf) return c;
  c.inf = false;
  c.x = P.x;
  c.y_bit = mpz_tstbit(P.y.get_mpz_t(), 0);
  return c;
}

Point decompress(const CompressedPoint& c, const CurveParams& curve) {
  if (c.inf) return Point::infinity();
  if (c.x < 0 || c.x >= curve.p) {
    throw MalformedError("decompress: x outside field");
  }
  const Int rhs = reduced(c.x * c.x * c.x + curve.a * c.x + curve.b, curve.p);
  Int y = sqrt_mod(rhs, curve.p);
  if (mpz_tstbit(y.get_mpz_t(), 0) != c.y_bit) y = reduced(-y, curve.p);
  if (mpz_tstbit(y.get_mpz_t(), 0) != c.y_bit) {
    throw NoSquareRootError("decompress: no root with requested parity");
  }
  return Point(c.x, std::move(y));
}

Int sqrt_mod(const Int& a, const Int& p) {
  const Int an = reduced(a, p);
  if (an == 0) return 0;
  if (mpz_legendre(an.get_mpz_t(), p.get_mpz_t()) != 1) {
    throw NoSquareRootError("sqrt_mod: value is a quadratic non-residue");
  }
  if (reduced(p, 4) == 3) {
    return pow_mod(an, (p + 1) / 4, p);
  }
  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  Int q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
  Int z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Int c = pow_mod(z, q, p);
  Int t = pow_mod(an, q, p);
  Int r = pow_mod(an, (q + 1) / 2, p);
  unsigned long m = s;
  while (t != 1) {
    Int t2 = t;
    unsigned long i = 0;
    while (t2 != 1) {
      t2 = reduced(t2 * t2, p);
      if (++i == m) throw NoSquareRootError("sqrt_mod: no root (loop bound)");
    }
    Int b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = reduced(b * b, p);
    r = reduced(r * b, p);
    c = reduced(b * b, p);
    t = reduced(t * c, p);
    m = i;
  }
  return r;
}

std::vector<std::uint8_t> int_to_octets(const Int& v, std::size_t width) {
  if (v < 0) throw Error("int_to_octets: negative value");
  std::vector<std::uint8_t> out(width, 0);
  if (v == 0) return out;
  const std::size_t need = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  if (need > width) throw FieldOverflowError("int_to_octets: value too wide");
  std::size_t count = 0;
  mpz_export(out.data() + (width - need), &count, 1, 1, 0, 0, v.get_mpz_t());
  return out;
}

Int octets_to_int(std::span<const std::uint8_t> octets) {
  Int v;
  if (!octets.empty()) {
    mpz_import(v.get_mpz_t(), octets.size(), 1, 1, 0, 0, octets.data());
  }
  return v;
}

std::vector<std::uint8_t> CompressedPoint::to_octets(
    const CurveParams& curve) const {
  std::vector<std::uint8_t> out;
  out.reserve(curve.compressed_octets());
  if (inf) {
    out.assign(curve.compressed_octets(), 0x00);
    return out;
  }
  out.push_back(y_bit ? 0x03 : 0x02);
  const auto xb = int_to_octets(x, curve.field_octets());
  out.insert(out.end(), xb.begin(), xb.end());
  return out;
}

CompressedPoint CompressedPoint::from_octets(
    std::span<const std::uint8_t> octets, const CurveParams& curve) {
  if (octets.size() != curve.compressed_octets()) {
    throw LengthMismatchError("compressed point: wrong octet count");
  }
  CompressedPoint c;
  switch (octets[0]) {
    case 0x00:
      return c;  // infinity; trailing x octets are padding
    case 0x02:
      c.y_bit = 0;
      break;
    case 0x03:
      c.y_bit = 1;
      break;
    default:
      throw MalformedError("compressed point: bad format octet");
  }
  c.inf = false;
  c.x = octets_to_int(octets.subspan(1));
  if (c.x >= curve.p) throw MalformedError("compressed point: x outside field");
  return c;
}

}  // namespace rsaed::ec
