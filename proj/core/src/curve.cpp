#include "zkcmp/pairing/curve.hpp"

#include <stdexcept>

namespace zkcmp::pairing {

namespace {

const FieldId& fp() { return FieldId::bn_base_p(); }

FieldElement fe(const char* dec) { return {mpz_class(dec), fp()}; }

// Generic affine short-Weierstrass group law over any coordinate type with
// field semantics (a = 0 curves).
template <typename Coord>
struct AffineOps {
    static bool add_is_infinity(const Coord& x1, const Coord& y1, const Coord& x2,
                                const Coord& y2) {
        return x1 == x2 && (y1 + y2).is_zero();
    }

    static Coord tangent_slope(const Coord& x, const Coord& y) {
        const Coord x_sq = x * x;
        return (x_sq + x_sq + x_sq) * (y + y).inv();
    }

    // Precondition: neither operand is infinity and the sum is finite.
    static std::pair<Coord, Coord> add(const Coord& x1, const Coord& y1, const Coord& x2,
                                       const Coord& y2) {
        Coord lambda = (x1 == x2 && y1 == y2) ? tangent_slope(x1, y1)
                                              : (y2 - y1) * (x2 - x1).inv();
        Coord x3 = lambda * lambda - x1 - x2;
        Coord y3 = lambda * (x1 - x3) - y1;
        return {std::move(x3), std::move(y3)};
    }
};

template <typename Point>
Point scalar_mul_impl(const Point& p, const mpz_class& k) {
    if (!p.on_curve()) throw std::domain_error("scalar_mul: point not on curve");
    mpz_class e = k % group_order();
    if (e < 0) e += group_order();
    Point acc = Point::infinity_point();
    if (e == 0 || p.infinity) return acc;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = acc.add(acc);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc.add(p);
    }
    return acc;
}

}  // namespace

const mpz_class& group_order() { return FieldId::snark_r().modulus(); }

// ---------------------------------------------------------------- G1

const G1Point& G1Point::generator() {
    static const G1Point g{FieldElement::one(fp()), {mpz_class(2), fp()}, false};
    return g;
}

G1Point G1Point::infinity_point() {
    return {FieldElement::zero(fp()), FieldElement::zero(fp()), true};
}

bool G1Point::on_curve() const {
    if (infinity) return true;
    const FieldElement three{mpz_class(3), fp()};
    return y * y == x * x * x + three;
}

bool G1Point::operator==(const G1Point& rhs) const {
    if (infinity || rhs.infinity) return infinity == rhs.infinity;
    return x == rhs.x && y == rhs.y;
}

G1Point G1Point::add(const G1Point& rhs) const {
    if (infinity) return rhs;
    if (rhs.infinity) return *this;
    if (AffineOps<FieldElement>::add_is_infinity(x, y, rhs.x, rhs.y)) return infinity_point();
    auto [x3, y3] = AffineOps<FieldElement>::add(x, y, rhs.x, rhs.y);
    return {std::move(x3), std::move(y3), false};
}

G1Point G1Point::neg() const {
    if (infinity) return *this;
    return {x, -y, false};
}

G1Point G1Point::scalar_mul(const mpz_class& k) const { return scalar_mul_impl(*this, k); }

G1Point G1Point::scalar_mul(const FieldElement& k) const {
    if (!(k.field() == FieldId::snark_r())) {
        throw std::invalid_argument("scalar must be a snark-r element");
    }
    return scalar_mul_impl(*this, k.value());
}

// ---------------------------------------------------------------- G2

const G2Point& G2Point::generator() {
    static const G2Point g{
        {fe("10857046999023057135944570762232829481370756359578518086990519993285655852781"),
         fe("11559732032986387107991004021392285783925812861821192530917403151452391805634")},
        {fe("8495653923123431417604973247489272438418190587263600148770280649306958101930"),
         fe("4082367875863433681332203403145435568316851327593401208105741076214120093531")},
        false};
    return g;
}

G2Point G2Point::infinity_point() { return {Fq2::zero(), Fq2::zero(), true}; }

const Fq2& G2Point::twist_b() {
    // 3 / xi
    static const Fq2 b = Fq2{fe("3"), FieldElement::zero(fp())} * Fq2::xi().inv();
    return b;
}

bool G2Point::on_curve() const {
    if (infinity) return true;
    return y.square() == x.square() * x + twist_b();
}

bool G2Point::operator==(const G2Point& rhs) const {
    if (infinity || rhs.infinity) return infinity == rhs.infinity;
    return x == rhs.x && y == rhs.y;
}

G2Point G2Point::add(const G2Point& rhs) const {
    if (infinity) return rhs;
    if (rhs.infinity) return *this;
    if (AffineOps<Fq2>::add_is_infinity(x, y, rhs.x, rhs.y)) return infinity_point();
    auto [x3, y3] = AffineOps<Fq2>::add(x, y, rhs.x, rhs.y);
    return {std::move(x3), std::move(y3), false};
}

G2Point G2Point::neg() const {
    if (infinity) return *this;
    return {x, -y, false};
}

G2Point G2Point::scalar_mul(const mpz_class& k) const { return scalar_mul_impl(*this, k); }

G2Point G2Point::scalar_mul(const FieldElement& k) const {
    if (!(k.field() == FieldId::snark_r())) {
        throw std::invalid_argument("scalar must be a snark-r element");
    }
    return scalar_mul_impl(*this, k.value());
}

// ---------------------------------------------------------------- wire

namespace {

void append_coord(std::vector<uint8_t>& out, const FieldElement& v) {
    std::array<uint8_t, 32> buf = v.to_bytes32();
    out.insert(out.end(), buf.begin(), buf.end());
}

bool all_zero(std::span<const uint8_t> bytes) {
    for (uint8_t b : bytes) {
        if (b != 0) return false;
    }
    return true;
}

FieldElement read_coord(std::span<const uint8_t> bytes) {
    mpz_class v;
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    if (v >= fp().modulus()) throw FormatError("coordinate exceeds field modulus");
    return {std::move(v), fp()};
}

}  // namespace

void serialize_g1(std::vector<uint8_t>& out, const G1Point& p) {
    if (p.infinity) {
        out.insert(out.end(), 64, uint8_t{0});
        return;
    }
    append_coord(out, p.x);
    append_coord(out, p.y);
}

void serialize_g2(std::vector<uint8_t>& out, const G2Point& p) {
    if (p.infinity) {
        out.insert(out.end(), 128, uint8_t{0});
        return;
    }
    append_coord(out, p.x.c0);
    append_coord(out, p.x.c1);
    append_coord(out, p.y.c0);
    append_coord(out, p.y.c1);
}

G1Point deserialize_g1(std::span<const uint8_t> bytes) {
    if (bytes.size() != 64) throw FormatError("G1 point must be 64 bytes");
    if (all_zero(bytes)) return G1Point::infinity_point();
    G1Point p{read_coord(bytes.subspan(0, 32)), read_coord(bytes.subspan(32, 32)), false};
    if (!p.on_curve()) throw FormatError("G1 point not on curve");
    return p;
}

G2Point deserialize_g2(std::span<const uint8_t> bytes) {
    if (bytes.size() != 128) throw FormatError("G2 point must be 128 bytes");
    if (all_zero(bytes)) return G2Point::infinity_point();
    G2Point p{{read_coord(bytes.subspan(0, 32)), read_coord(bytes.subspan(32, 32))},
              {read_coord(bytes.subspan(64, 32)), read_coord(bytes.subspan(96, 32))},
              false};
    if (!p.on_curve()) throw FormatError("G2 point not on twist");
    return p;
}

}  // namespace zkcmp::pairing
