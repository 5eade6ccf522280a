#ifndef ZKCMP_ALGEBRA_TOWER_HPP
#define ZKCMP_ALGEBRA_TOWER_HPP

#include "zkcmp/algebra/field.hpp"

namespace zkcmp::algebra {

/// BN254 extension tower:
///   Fq2  = Fq[u]  / (u^2 + 1)
///   Fq6  = Fq2[v] / (v^3 - xi),  xi = 9 + u
///   Fq12 = Fq6[w] / (w^2 - v)
/// All coordinates live in the bn-base-p field. Inversion of zero throws
/// std::domain_error at every level.

struct Fq2 {
    FieldElement c0, c1;  // c0 + c1*u

    static Fq2 zero();
    static Fq2 one();
    static const Fq2& xi();  // 9 + u, the cubic non-residue

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fq2&) const = default;

    Fq2 operator+(const Fq2& rhs) const;
    Fq2 operator-(const Fq2& rhs) const;
    Fq2 operator*(const Fq2& rhs) const;
    Fq2 operator-() const;
    Fq2 square() const;
    Fq2 inv() const;
    Fq2 conj() const { return {c0, -c1}; }
    Fq2 scale(const FieldElement& k) const { return {c0 * k, c1 * k}; }
    Fq2 pow(const mpz_class& exponent) const;
};

struct Fq6 {
    Fq2 c0, c1, c2;  // c0 + c1*v + c2*v^2

    static Fq6 zero();
    static Fq6 one();

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fq6&) const = default;

    Fq6 operator+(const Fq6& rhs) const;
    Fq6 operator-(const Fq6& rhs) const;
    Fq6 operator*(const Fq6& rhs) const;
    Fq6 operator-() const;
    Fq6 square() const { return *this * *this; }
    Fq6 inv() const;
    Fq6 mul_by_v() const;  // multiply by v: (c0,c1,c2) -> (xi*c2, c0, c1)
};

struct Fq12 {
    Fq6 c0, c1;  // c0 + c1*w

    static Fq12 zero();
    static Fq12 one();
    static Fq12 from_base(const FieldElement& a);
    static Fq12 from_fq2(const Fq2& a);

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fq12&) const = default;

    Fq12 operator+(const Fq12& rhs) const;
    Fq12 operator-(const Fq12& rhs) const;
    Fq12 operator*(const Fq12& rhs) const;
    Fq12 operator-() const;
    Fq12 square() const { return *this * *this; }
    Fq12 inv() const;
    Fq12 conj() const { return {c0, -c1}; }
    Fq12 pow(const mpz_class& exponent) const;

    /// x -> x^p via the precomputed gamma = xi^((p-1)/6) coefficient table.
    Fq12 frobenius() const;
};

}  // namespace zkcmp::algebra

#endif
