#include "zkcmp/snark/snark.hpp"

#include <random>
#include <stdexcept>

namespace zkcmp::snark {

namespace {

const FieldId& fr() { return FieldId::snark_r(); }

const G1Point& g1() { return G1Point::generator(); }
const G2Point& g2() { return G2Point::generator(); }

FieldElement random_fr(std::mt19937_64& rng) {
    // four 64-bit words give 256 bits; reduction bias is negligible
    mpz_class acc = 0;
    for (int i = 0; i < 4; ++i) {
        acc <<= 64;
        uint64_t word = rng();
        mpz_class w;
        mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
        acc += w;
    }
    return {std::move(acc), fr()};
}

bool witness_is_public(const Qap& qap, size_t k) {
    for (size_t idx : qap.public_indices) {
        if (idx == k) return true;
    }
    return false;
}

}  // namespace

// ------------------------------------------------------------- setup

ToxicWaste ToxicWaste::test_vector() {
    auto fe = [](long v) { return FieldElement(mpz_class(v), fr()); };
    return {fe(17), fe(2), fe(3), fe(4), fe(5), fe(7)};
}

ToxicWaste ToxicWaste::from_seed(uint64_t seed, const Qap& qap) {
    std::mt19937_64 rng(seed);
    auto draw_nonzero = [&rng] {
        FieldElement v = random_fr(rng);
        while (v.is_zero()) v = random_fr(rng);
        return v;
    };
    FieldElement t = draw_nonzero();
    while (qap.z.eval(t).is_zero()) t = draw_nonzero();
    ToxicWaste w{t, draw_nonzero(), draw_nonzero(), draw_nonzero(), draw_nonzero(),
                 draw_nonzero()};
    return w;
}

void ToxicWaste::erase() {
    const FieldElement zero = FieldElement::zero(fr());
    t = zero;
    k_alpha = zero;
    k_beta = zero;
    k_gamma = zero;
    rho_a = zero;
    rho_c = zero;
}

std::pair<ProvingKey, VerificationKey> trusted_setup(const Qap& qap, const ToxicWaste& waste) {
    if (waste.t.is_zero() || waste.k_alpha.is_zero() || waste.k_beta.is_zero() ||
        waste.k_gamma.is_zero() || waste.rho_a.is_zero() || waste.rho_c.is_zero()) {
        throw std::invalid_argument("setup secrets must be nonzero");
    }
    const FieldElement z_t = qap.z.eval(waste.t);
    if (z_t.is_zero()) throw std::invalid_argument("t must not be a root of z");

    const FieldElement rho_b = waste.rho_b();
    ProvingKey pk;
    const size_t n = qap.num_vars;
    pk.a_query.reserve(n);
    pk.ap_query.reserve(n);
    pk.b_query.reserve(n);
    pk.bp_query.reserve(n);
    pk.c_query.reserve(n);
    pk.cp_query.reserve(n);
    pk.k_query.reserve(n);

    for (size_t k = 0; k < n; ++k) {
        const FieldElement a_t = qap.a_polys[k].eval(waste.t);
        const FieldElement b_t = qap.b_polys[k].eval(waste.t);
        const FieldElement c_t = qap.c_polys[k].eval(waste.t);
        const FieldElement ra = waste.rho_a * a_t;
        const FieldElement cb = waste.rho_c * b_t;
        const FieldElement rbc = rho_b * c_t;
        pk.a_query.push_back(g1().scalar_mul(ra));
        pk.ap_query.push_back(g1().scalar_mul(waste.k_alpha * ra));
        pk.b_query.push_back(g2().scalar_mul(cb));
        pk.bp_query.push_back(g1().scalar_mul(waste.k_beta * cb));
        pk.c_query.push_back(g1().scalar_mul(rbc));
        pk.cp_query.push_back(g1().scalar_mul(waste.k_gamma * rbc));
        pk.k_query.push_back(g1().scalar_mul(waste.k_beta * (ra + cb + rbc)));
    }

    // Powers of t cover the quotient degree: deg H <= deg(A*B) - deg Z.
    const size_t domain_size = qap.domain.size();
    const size_t h_degree = domain_size >= 2 ? domain_size - 2 : 0;
    FieldElement t_power = FieldElement::one(fr());
    for (size_t j = 0; j <= h_degree; ++j) {
        pk.h_query.push_back(g1().scalar_mul(t_power));
        t_power = t_power * waste.t;
    }

    VerificationKey vk{
        .v_a = g2().scalar_mul(waste.k_alpha),
        .v_b = g1().scalar_mul(waste.k_beta),
        .v_c = g2().scalar_mul(waste.k_gamma),
        .v_z = g2().scalar_mul(rho_b * z_t),
        .ic = {},
        .g1_kbg = g1().scalar_mul(waste.k_beta * waste.k_gamma),
        .g2_kbg = g2().scalar_mul(waste.k_beta * waste.k_gamma),
        .g2_kg = g2().scalar_mul(waste.k_gamma),
        .g1_gen = g1(),
        .g2_gen = g2(),
    };
    vk.ic.reserve(qap.public_indices.size());
    for (size_t idx : qap.public_indices) {
        vk.ic.push_back(g1().scalar_mul(waste.rho_a * qap.a_polys[idx].eval(waste.t)));
    }
    return {std::move(pk), std::move(vk)};
}

// ------------------------------------------------------------- prove

SnarkProof prove(const ProvingKey& pk, const Witness& witness, const Qap& qap) {
    auto [h, remainder] = witness_quotient(qap, witness);
    if (!remainder.is_zero()) {
        throw std::invalid_argument("witness does not satisfy the constraint system");
    }
    if (static_cast<size_t>(h.degree()) + 1 > pk.h_query.size() && !h.is_zero()) {
        throw std::invalid_argument("quotient degree exceeds proving key");
    }

    G1Point pi_a = G1Point::infinity_point();
    G1Point pi_ap = G1Point::infinity_point();
    G2Point pi_b = G2Point::infinity_point();
    G1Point pi_bp = G1Point::infinity_point();
    G1Point pi_c = G1Point::infinity_point();
    G1Point pi_cp = G1Point::infinity_point();
    G1Point pi_kp = G1Point::infinity_point();

    for (size_t k = 0; k < witness.values.size(); ++k) {
        const FieldElement& w = witness.values[k];
        if (w.is_zero()) continue;
        if (!witness_is_public(qap, k)) {
            pi_a = pi_a.add(pk.a_query[k].scalar_mul(w));
            pi_ap = pi_ap.add(pk.ap_query[k].scalar_mul(w));
        }
        pi_b = pi_b.add(pk.b_query[k].scalar_mul(w));
        pi_bp = pi_bp.add(pk.bp_query[k].scalar_mul(w));
        pi_c = pi_c.add(pk.c_query[k].scalar_mul(w));
        pi_cp = pi_cp.add(pk.cp_query[k].scalar_mul(w));
        pi_kp = pi_kp.add(pk.k_query[k].scalar_mul(w));
    }

    G1Point pi_h = G1Point::infinity_point();
    const auto& h_coeffs = h.coefficients();
    for (size_t j = 0; j < h_coeffs.size(); ++j) {
        if (h_coeffs[j].is_zero()) continue;
        pi_h = pi_h.add(pk.h_query[j].scalar_mul(h_coeffs[j]));
    }

    return {pi_a, pi_ap, pi_b, pi_bp, pi_c, pi_cp, pi_h, pi_kp};
}

// ------------------------------------------------------------- verify

PairingChecks evaluate_pairing_checks(const VerificationKey& vk, const SnarkProof& proof,
                                      const std::vector<FieldElement>& public_inputs) {
    if (public_inputs.size() + 1 != vk.ic.size()) {
        throw std::invalid_argument("public input count does not match verification key");
    }
    using pairing::GtElement;
    using pairing::pairing;

    // V_K = ic[0] + sum public_i * ic[i]  (constant wire implicit)
    G1Point v_k = vk.ic[0];
    for (size_t i = 0; i < public_inputs.size(); ++i) {
        v_k = v_k.add(vk.ic[i + 1].scalar_mul(public_inputs[i]));
    }

    PairingChecks out{};
    // knowledge checks for the three commitment families
    out.check[0] = pairing(proof.pi_a, vk.v_a) == pairing(proof.pi_ap, vk.g2_gen);
    out.check[1] = pairing(vk.v_b, proof.pi_b) == pairing(proof.pi_bp, vk.g2_gen);
    out.check[2] = pairing(proof.pi_c, vk.v_c) == pairing(proof.pi_cp, vk.g2_gen);
    // quotient divisibility: e(V_K + pi_A, pi_B) = e(pi_H, V_z) * e(pi_C, g2)
    out.check[3] = pairing(v_k.add(proof.pi_a), proof.pi_b) ==
                   pairing(proof.pi_h, vk.v_z) * pairing(proof.pi_c, vk.g2_gen);
    // variable consistency across operands
    out.check[4] = pairing(v_k.add(proof.pi_a).add(proof.pi_c), vk.g2_kbg) *
                       pairing(vk.g1_kbg, proof.pi_b) ==
                   pairing(proof.pi_kp, vk.g2_kg);
    return out;
}

bool verify_snark(const VerificationKey& vk, const SnarkProof& proof,
                  const std::vector<FieldElement>& public_inputs) {
    if (!proof.pi_a.on_curve() || !proof.pi_ap.on_curve() || !proof.pi_b.on_curve() ||
        !proof.pi_bp.on_curve() || !proof.pi_c.on_curve() || !proof.pi_cp.on_curve() ||
        !proof.pi_h.on_curve() || !proof.pi_kp.on_curve()) {
        return false;
    }
    return evaluate_pairing_checks(vk, proof, public_inputs).all();
}

// ------------------------------------------------------------- wire

std::vector<uint8_t> serialize_snark_proof(const SnarkProof& proof) {
    std::vector<uint8_t> out;
    out.reserve(kSnarkProofBytes);
    pairing::serialize_g1(out, proof.pi_a);
    pairing::serialize_g1(out, proof.pi_ap);
    pairing::serialize_g2(out, proof.pi_b);
    pairing::serialize_g1(out, proof.pi_bp);
    pairing::serialize_g1(out, proof.pi_c);
    pairing::serialize_g1(out, proof.pi_cp);
    pairing::serialize_g1(out, proof.pi_h);
    pairing::serialize_g1(out, proof.pi_kp);
    return out;
}

SnarkProof deserialize_snark_proof(std::span<const uint8_t> bytes) {
    if (bytes.size() != kSnarkProofBytes) {
        throw FormatError("proof must be exactly 576 bytes");
    }
    ByteReader reader(bytes);
    SnarkProof proof{
        .pi_a = pairing::deserialize_g1(reader.take(64)),
        .pi_ap = pairing::deserialize_g1(reader.take(64)),
        .pi_b = pairing::deserialize_g2(reader.take(128)),
        .pi_bp = pairing::deserialize_g1(reader.take(64)),
        .pi_c = pairing::deserialize_g1(reader.take(64)),
        .pi_cp = pairing::deserialize_g1(reader.take(64)),
        .pi_h = pairing::deserialize_g1(reader.take(64)),
        .pi_kp = pairing::deserialize_g1(reader.take(64)),
    };
    reader.expect_end();
    return proof;
}

namespace {

void write_g1_list(std::vector<uint8_t>& out, const std::vector<G1Point>& points) {
    write_u32_be(out, static_cast<uint32_t>(points.size()));
    for (const auto& p : points) pairing::serialize_g1(out, p);
}

void write_g2_list(std::vector<uint8_t>& out, const std::vector<G2Point>& points) {
    write_u32_be(out, static_cast<uint32_t>(points.size()));
    for (const auto& p : points) pairing::serialize_g2(out, p);
}

std::vector<G1Point> read_g1_list(ByteReader& reader) {
    const uint32_t count = reader.u32_be();
    std::vector<G1Point> out;
    out.reserve(count);
    for (uint32_t i = 0; i < count; ++i) out.push_back(pairing::deserialize_g1(reader.take(64)));
    return out;
}

std::vector<G2Point> read_g2_list(ByteReader& reader) {
    const uint32_t count = reader.u32_be();
    std::vector<G2Point> out;
    out.reserve(count);
    for (uint32_t i = 0; i < count; ++i) out.push_back(pairing::deserialize_g2(reader.take(128)));
    return out;
}

}  // namespace

std::vector<uint8_t> ProvingKey::serialize() const {
    std::vector<uint8_t> out;
    write_g1_list(out, a_query);
    write_g1_list(out, ap_query);
    write_g2_list(out, b_query);
    write_g1_list(out, bp_query);
    write_g1_list(out, c_query);
    write_g1_list(out, cp_query);
    write_g1_list(out, h_query);
    write_g1_list(out, k_query);
    return out;
}

ProvingKey ProvingKey::deserialize(std::span<const uint8_t> bytes) {
    ByteReader reader(bytes);
    ProvingKey pk;
    pk.a_query = read_g1_list(reader);
    pk.ap_query = read_g1_list(reader);
    pk.b_query = read_g2_list(reader);
    pk.bp_query = read_g1_list(reader);
    pk.c_query = read_g1_list(reader);
    pk.cp_query = read_g1_list(reader);
    pk.h_query = read_g1_list(reader);
    pk.k_query = read_g1_list(reader);
    reader.expect_end();
    return pk;
}

std::vector<uint8_t> VerificationKey::serialize() const {
    std::vector<uint8_t> out;
    pairing::serialize_g2(out, v_a);
    pairing::serialize_g1(out, v_b);
    pairing::serialize_g2(out, v_c);
    pairing::serialize_g2(out, v_z);
    write_g1_list(out, ic);
    pairing::serialize_g1(out, g1_kbg);
    pairing::serialize_g2(out, g2_kbg);
    pairing::serialize_g2(out, g2_kg);
    pairing::serialize_g1(out, g1_gen);
    pairing::serialize_g2(out, g2_gen);
    return out;
}

VerificationKey VerificationKey::deserialize(std::span<const uint8_t> bytes) {
    ByteReader reader(bytes);
    VerificationKey vk{
        .v_a = pairing::deserialize_g2(reader.take(128)),
        .v_b = pairing::deserialize_g1(reader.take(64)),
        .v_c = pairing::deserialize_g2(reader.take(128)),
        .v_z = pairing::deserialize_g2(reader.take(128)),
        .ic = read_g1_list(reader),
        .g1_kbg = pairing::deserialize_g1(reader.take(64)),
        .g2_kbg = pairing::deserialize_g2(reader.take(128)),
        .g2_kg = pairing::deserialize_g2(reader.take(128)),
        .g1_gen = pairing::deserialize_g1(reader.take(64)),
        .g2_gen = pairing::deserialize_g2(reader.take(128)),
    };
    reader.expect_end();
    return vk;
}

}  // namespace zkcmp::snark
