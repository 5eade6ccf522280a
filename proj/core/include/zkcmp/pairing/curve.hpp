#ifndef ZKCMP_PAIRING_CURVE_HPP
#define ZKCMP_PAIRING_CURVE_HPP

#include <span>
#include <vector>

#include "zkcmp/algebra/field.hpp"
#include "zkcmp/algebra/tower.hpp"
#include "zkcmp/bytes.hpp"

namespace zkcmp::pairing {

using algebra::FieldElement;
using algebra::FieldId;
using algebra::Fq12;
using algebra::Fq2;

/// BN254 group order (the snark-r modulus).
const mpz_class& group_order();

/// Affine point on E(Fq): y^2 = x^3 + 3. Off-curve inputs to group
/// operations throw std::domain_error.
struct G1Point {
    FieldElement x, y;
    bool infinity;

    static const G1Point& generator();  // (1, 2)
    static G1Point infinity_point();

    bool on_curve() const;
    bool operator==(const G1Point& rhs) const;

    G1Point add(const G1Point& rhs) const;
    G1Point dbl() const { return add(*this); }
    G1Point neg() const;
    G1Point scalar_mul(const mpz_class& k) const;
    G1Point scalar_mul(const FieldElement& k) const;  // k must be in snark-r
};

/// Affine point on the sextic twist E'(Fq2): y^2 = x^3 + 3/xi.
struct G2Point {
    Fq2 x, y;
    bool infinity;

    static const G2Point& generator();
    static G2Point infinity_point();
    static const Fq2& twist_b();

    bool on_curve() const;
    bool operator==(const G2Point& rhs) const;

    G2Point add(const G2Point& rhs) const;
    G2Point dbl() const { return add(*this); }
    G2Point neg() const;
    G2Point scalar_mul(const mpz_class& k) const;
    G2Point scalar_mul(const FieldElement& k) const;
};

/// Uncompressed affine wire format: 32-byte big-endian limbs, x || y
/// (64 bytes for G1, x.c0 || x.c1 || y.c0 || y.c1 = 128 bytes for G2).
/// Infinity is the all-zero block. Deserialization rejects out-of-range
/// limbs and off-curve points with FormatError.
void serialize_g1(std::vector<uint8_t>& out, const G1Point& p);
void serialize_g2(std::vector<uint8_t>& out, const G2Point& p);
G1Point deserialize_g1(std::span<const uint8_t> bytes);
G2Point deserialize_g2(std::span<const uint8_t> bytes);

/// Element of the order-r target group, produced by final exponentiation.
class GtElement {
public:
    explicit GtElement(Fq12 value) : value_(std::move(value)) {}

    static GtElement identity() { return GtElement(Fq12::one()); }

    const Fq12& value() const { return value_; }
    GtElement operator*(const GtElement& rhs) const { return GtElement(value_ * rhs.value_); }
    GtElement pow(const mpz_class& e) const { return GtElement(value_.pow(e)); }
    bool operator==(const GtElement& rhs) const { return value_ == rhs.value_; }

private:
    Fq12 value_;
};

}  // namespace zkcmp::pairing

#endif
