#include "zkcmp/algebra/tower.hpp"

#include <array>
#include <stdexcept>

namespace zkcmp::algebra {

namespace {
const FieldId& base() { return FieldId::bn_base_p(); }

FieldElement fe(long v) { return {mpz_class(v), base()}; }
}  // namespace

// ---------------------------------------------------------------- Fq2

Fq2 Fq2::zero() { return {FieldElement::zero(base()), FieldElement::zero(base())}; }
Fq2 Fq2::one() { return {FieldElement::one(base()), FieldElement::zero(base())}; }

const Fq2& Fq2::xi() {
    static const Fq2 value{fe(9), fe(1)};
    return value;
}

Fq2 Fq2::operator+(const Fq2& rhs) const { return {c0 + rhs.c0, c1 + rhs.c1}; }
Fq2 Fq2::operator-(const Fq2& rhs) const { return {c0 - rhs.c0, c1 - rhs.c1}; }
Fq2 Fq2::operator-() const { return {-c0, -c1}; }

Fq2 Fq2::operator*(const Fq2& rhs) const {
    // (a0 + a1 u)(b0 + b1 u) with u^2 = -1
    const FieldElement t0 = c0 * rhs.c0;
    const FieldElement t1 = c1 * rhs.c1;
    return {t0 - t1, (c0 + c1) * (rhs.c0 + rhs.c1) - t0 - t1};
}

Fq2 Fq2::square() const {
    const FieldElement t0 = c0 * c1;
    return {(c0 + c1) * (c0 - c1), t0 + t0};
}

Fq2 Fq2::inv() const {
    if (is_zero()) throw std::domain_error("Fq2 inversion of zero");
    const FieldElement norm_inv = (c0 * c0 + c1 * c1).inv();
    return {c0 * norm_inv, -(c1 * norm_inv)};
}

Fq2 Fq2::pow(const mpz_class& exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    Fq2 result = Fq2::one();
    const size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    if (exponent == 0) return result;
    for (size_t i = bits; i-- > 0;) {
        result = result.square();
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = result * *this;
    }
    return result;
}

// ---------------------------------------------------------------- Fq6

Fq6 Fq6::zero() { return {Fq2::zero(), Fq2::zero(), Fq2::zero()}; }
Fq6 Fq6::one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

Fq6 Fq6::operator+(const Fq6& rhs) const { return {c0 + rhs.c0, c1 + rhs.c1, c2 + rhs.c2}; }
Fq6 Fq6::operator-(const Fq6& rhs) const { return {c0 - rhs.c0, c1 - rhs.c1, c2 - rhs.c2}; }
Fq6 Fq6::operator-() const { return {-c0, -c1, -c2}; }

Fq6 Fq6::operator*(const Fq6& rhs) const {
    // schoolbook with v^3 = xi
    const Fq2& xi = Fq2::xi();
    const Fq2 a0b0 = c0 * rhs.c0;
    const Fq2 a0b1 = c0 * rhs.c1;
    const Fq2 a0b2 = c0 * rhs.c2;
    const Fq2 a1b0 = c1 * rhs.c0;
    const Fq2 a1b1 = c1 * rhs.c1;
    const Fq2 a1b2 = c1 * rhs.c2;
    const Fq2 a2b0 = c2 * rhs.c0;
    const Fq2 a2b1 = c2 * rhs.c1;
    const Fq2 a2b2 = c2 * rhs.c2;
    return {a0b0 + xi * (a1b2 + a2b1), a0b1 + a1b0 + xi * a2b2, a0b2 + a1b1 + a2b0};
}

Fq6 Fq6::mul_by_v() const { return {Fq2::xi() * c2, c0, c1}; }

Fq6 Fq6::inv() const {
    if (is_zero()) throw std::domain_error("Fq6 inversion of zero");
    const Fq2& xi = Fq2::xi();
    const Fq2 t0 = c0.square() - xi * (c1 * c2);
    const Fq2 t1 = xi * c2.square() - c0 * c1;
    const Fq2 t2 = c1.square() - c0 * c2;
    const Fq2 denom = c0 * t0 + xi * (c1 * t2) + xi * (c2 * t1);
    const Fq2 denom_inv = denom.inv();
    return {t0 * denom_inv, t1 * denom_inv, t2 * denom_inv};
}

// ---------------------------------------------------------------- Fq12

Fq12 Fq12::zero() { return {Fq6::zero(), Fq6::zero()}; }
Fq12 Fq12::one() { return {Fq6::one(), Fq6::zero()}; }

Fq12 Fq12::from_base(const FieldElement& a) {
    Fq12 out = Fq12::zero();
    out.c0.c0.c0 = a;
    return out;
}

Fq12 Fq12::from_fq2(const Fq2& a) {
    Fq12 out = Fq12::zero();
    out.c0.c0 = a;
    return out;
}

Fq12 Fq12::operator+(const Fq12& rhs) const { return {c0 + rhs.c0, c1 + rhs.c1}; }
Fq12 Fq12::operator-(const Fq12& rhs) const { return {c0 - rhs.c0, c1 - rhs.c1}; }
Fq12 Fq12::operator-() const { return {-c0, -c1}; }

Fq12 Fq12::operator*(const Fq12& rhs) const {
    // Karatsuba with w^2 = v
    const Fq6 a0b0 = c0 * rhs.c0;
    const Fq6 a1b1 = c1 * rhs.c1;
    const Fq6 mid = (c0 + c1) * (rhs.c0 + rhs.c1);
    return {a0b0 + a1b1.mul_by_v(), mid - a0b0 - a1b1};
}

Fq12 Fq12::inv() const {
    if (is_zero()) throw std::domain_error("Fq12 inversion of zero");
    // (c0 + c1 w)^-1 = (c0 - c1 w) / (c0^2 - v c1^2)
    const Fq6 denom = c0.square() - c1.square().mul_by_v();
    const Fq6 denom_inv = denom.inv();
    return {c0 * denom_inv, -(c1 * denom_inv)};
}

Fq12 Fq12::pow(const mpz_class& exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    Fq12 result = Fq12::one();
    if (exponent == 0) return result;
    const size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = result.square();
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = result * *this;
    }
    return result;
}

namespace {

// gamma_i = xi^(i*(p-1)/6), i = 0..5: the w^i coefficients of the p-power
// Frobenius in the flat basis a_0..a_5 with x = sum a_i w^i.
const std::array<Fq2, 6>& frobenius_gammas() {
    static const std::array<Fq2, 6> gammas = [] {
        const mpz_class e = (base().modulus() - 1) / 6;
        const Fq2 gamma = Fq2::xi().pow(e);
        std::array<Fq2, 6> out{Fq2::one(), gamma,         gamma.square(),
                               Fq2::zero(), Fq2::zero(), Fq2::zero()};
        out[3] = out[2] * gamma;
        out[4] = out[3] * gamma;
        out[5] = out[4] * gamma;
        return out;
    }();
    return gammas;
}

}  // namespace

Fq12 Fq12::frobenius() const {
    // flat coordinates: (a0..a5) = (c0.c0, c1.c0, c0.c1, c1.c1, c0.c2, c1.c2)
    const auto& g = frobenius_gammas();
    const std::array<const Fq2*, 6> a{&c0.c0, &c1.c0, &c0.c1, &c1.c1, &c0.c2, &c1.c2};
    std::array<Fq2, 6> b{a[0]->conj() * g[0], a[1]->conj() * g[1], a[2]->conj() * g[2],
                         a[3]->conj() * g[3], a[4]->conj() * g[4], a[5]->conj() * g[5]};
    Fq12 out = Fq12::zero();
    out.c0.c0 = b[0];
    out.c1.c0 = b[1];
    out.c0.c1 = b[2];
    out.c1.c1 = b[3];
    out.c0.c2 = b[4];
    out.c1.c2 = b[5];
    return out;
}

}  // namespace zkcmp::algebra
