#include "zkcmp/pairing/pairing.hpp"

#include <stdexcept>

namespace zkcmp::pairing {

namespace {

// Loop count 6x+2 for the BN parameter x = 4965661367192848881; together
// with the lines at pi(Q) and -pi^2(Q) this realizes the optimal Ate
// relation 6x+2 + p - p^2 + p^3 = 0 (mod r).
const mpz_class& ate_loop_count() {
    static const mpz_class s("29793968203157093288");
    return s;
}

struct Ep12Point {
    Fq12 x, y;
    bool infinity;
};

// P in E(Fq) embeds coordinate-wise.
Ep12Point embed_g1(const G1Point& p) {
    return {Fq12::from_base(p.x), Fq12::from_base(p.y), false};
}

// Q on the twist maps onto E(Fq12) via (x, y) -> (x w^2, y w^3); the twist
// denominators cancel because w^6 = xi.
Ep12Point untwist_g2(const G2Point& q) {
    Fq12 x = Fq12::zero();
    x.c0.c1 = q.x;  // q.x * w^2 = q.x * v
    Fq12 y = Fq12::zero();
    y.c1.c1 = q.y;  // q.y * w^3 = q.y * v * w
    return {std::move(x), std::move(y), false};
}

Ep12Point frobenius_point(const Ep12Point& p) {
    return {p.x.frobenius(), p.y.frobenius(), p.infinity};
}

Ep12Point negate_point(const Ep12Point& p) { return {p.x, -p.y, p.infinity}; }

// Chord-or-tangent line through t and s evaluated at p, plus t + s.
// Vertical lines (s = -t) evaluate to x_p - x_t.
struct LineStep {
    Fq12 value;
    Ep12Point next;
};

LineStep line_and_add(const Ep12Point& t, const Ep12Point& s, const Ep12Point& p) {
    if (t.infinity) return {Fq12::one(), s};
    if (s.infinity) return {Fq12::one(), t};
    if (t.x == s.x && (t.y + s.y).is_zero()) {
        return {p.x - t.x, {Fq12::zero(), Fq12::zero(), true}};
    }
    Fq12 lambda = Fq12::zero();
    if (t.x == s.x && t.y == s.y) {
        const Fq12 x_sq = t.x.square();
        lambda = (x_sq + x_sq + x_sq) * (t.y + t.y).inv();
    } else {
        lambda = (s.y - t.y) * (s.x - t.x).inv();
    }
    Fq12 x3 = lambda.square() - t.x - s.x;
    Fq12 y3 = lambda * (t.x - x3) - t.y;
    Fq12 line = (p.y - t.y) - lambda * (p.x - t.x);
    return {std::move(line), {std::move(x3), std::move(y3), false}};
}

}  // namespace

Fq12 miller_loop(const G1Point& p, const G2Point& q) {
    if (!p.on_curve() || !q.on_curve()) {
        throw std::domain_error("miller_loop: point not on curve");
    }
    if (p.infinity || q.infinity) {
        throw std::domain_error("miller_loop: finite points required");
    }

    const Ep12Point pe = embed_g1(p);
    const Ep12Point qe = untwist_g2(q);

    Fq12 f = Fq12::one();
    Ep12Point t = qe;
    const mpz_class& s = ate_loop_count();
    const size_t bits = mpz_sizeinbase(s.get_mpz_t(), 2);
    for (size_t i = bits - 1; i-- > 0;) {
        auto dbl = line_and_add(t, t, pe);
        f = f.square() * dbl.value;
        t = std::move(dbl.next);
        if (mpz_tstbit(s.get_mpz_t(), i)) {
            auto add = line_and_add(t, qe, pe);
            f = f * add.value;
            t = std::move(add.next);
        }
    }

    const Ep12Point q1 = frobenius_point(qe);
    const Ep12Point q2 = frobenius_point(q1);
    auto step1 = line_and_add(t, q1, pe);
    f = f * step1.value;
    auto step2 = line_and_add(step1.next, negate_point(q2), pe);
    f = f * step2.value;
    return f;
}

GtElement final_exponentiation(const Fq12& f) {
    if (f.is_zero()) throw std::domain_error("final_exponentiation: zero input");
    static const mpz_class exponent = [] {
        const mpz_class& p = algebra::FieldId::bn_base_p().modulus();
        mpz_class p12;
        mpz_pow_ui(p12.get_mpz_t(), p.get_mpz_t(), 12);
        return mpz_class((p12 - 1) / group_order());
    }();
    return GtElement(f.pow(exponent));
}

GtElement pairing(const G1Point& p, const G2Point& q) {
    if (!p.on_curve() || !q.on_curve()) {
        throw std::domain_error("pairing: point not on curve");
    }
    if (p.infinity || q.infinity) return GtElement::identity();
    return final_exponentiation(miller_loop(p, q));
}

}  // namespace zkcmp::pairing
