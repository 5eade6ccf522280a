#ifndef ZKCMP_SNARK_SNARK_HPP
#define ZKCMP_SNARK_SNARK_HPP

#include <array>
#include <cstdint>
#include <utility>

#include "zkcmp/pairing/curve.hpp"
#include "zkcmp/pairing/pairing.hpp"
#include "zkcmp/snark/qap.hpp"

namespace zkcmp::snark {

using pairing::G1Point;
using pairing::G2Point;

/// Setup secrets. rho_b is not free: the composite blinding rho_a * rho_c
/// is what makes the quotient pairing check close.
struct ToxicWaste {
    FieldElement t, k_alpha, k_beta, k_gamma, rho_a, rho_c;

    FieldElement rho_b() const { return rho_a * rho_c; }

    /// Fixed reproducible secrets for tests and golden vectors:
    /// t=17, k_alpha=2, k_beta=3, k_gamma=4, rho_a=5, rho_c=7.
    static ToxicWaste test_vector();

    /// Deterministic secrets from a PRNG seed; rejects zero draws and any t
    /// with z(t) = 0.
    static ToxicWaste from_seed(uint64_t seed, const Qap& qap);

    /// Overwrites all secrets with zero.
    void erase();
};

struct ProvingKey {
    // Per-variable encodings evaluated at the secret point t.
    std::vector<G1Point> a_query;    // rho_a * A_k(t) * G1
    std::vector<G1Point> ap_query;   // k_alpha * rho_a * A_k(t) * G1
    std::vector<G2Point> b_query;    // rho_c * B_k(t) * G2
    std::vector<G1Point> bp_query;   // k_beta * rho_c * B_k(t) * G1
    std::vector<G1Point> c_query;    // rho_a * rho_c * C_k(t) * G1
    std::vector<G1Point> cp_query;   // k_gamma * rho_a * rho_c * C_k(t) * G1
    std::vector<G1Point> h_query;    // t^j * G1, for committing to H
    std::vector<G1Point> k_query;    // k_beta*(rho_a A_k + rho_c B_k + rho_a rho_c C_k)(t) * G1

    std::vector<uint8_t> serialize() const;
    static ProvingKey deserialize(std::span<const uint8_t> bytes);
    bool operator==(const ProvingKey&) const = default;
};

struct VerificationKey {
    G2Point v_a;               // k_alpha * G2
    G1Point v_b;               // k_beta * G1
    G2Point v_c;               // k_gamma * G2
    G2Point v_z;               // rho_a * rho_c * z(t) * G2
    std::vector<G1Point> ic;   // rho_a * A_i(t) * G1 for public i
    G1Point g1_kbg;            // k_beta * k_gamma * G1
    G2Point g2_kbg;            // k_beta * k_gamma * G2
    G2Point g2_kg;             // k_gamma * G2
    G1Point g1_gen;
    G2Point g2_gen;

    std::vector<uint8_t> serialize() const;
    static VerificationKey deserialize(std::span<const uint8_t> bytes);
    bool operator==(const VerificationKey&) const = default;
};

/// The eight proof elements, serialized in declaration order.
struct SnarkProof {
    G1Point pi_a, pi_ap;
    G2Point pi_b;
    G1Point pi_bp, pi_c, pi_cp, pi_h, pi_kp;

    bool operator==(const SnarkProof&) const = default;
};

inline constexpr size_t kSnarkProofBytes = 576;  // 7 * 64 + 128

/// Deterministic key generation from the QAP and the setup secrets.
/// Throws std::invalid_argument when a secret is zero or z(t) = 0.
std::pair<ProvingKey, VerificationKey> trusted_setup(const Qap& qap, const ToxicWaste& waste);

/// Witness-weighted commitment computation. The A-side sums skip public
/// variables (the verifier reconstructs those from ic); B, C and the K
/// commitment run over the full witness. Throws std::invalid_argument when
/// the witness does not satisfy the QAP (nonzero remainder).
SnarkProof prove(const ProvingKey& pk, const Witness& witness, const Qap& qap);

struct PairingChecks {
    std::array<bool, 5> check;
    bool all() const { return check[0] && check[1] && check[2] && check[3] && check[4]; }
};

/// Evaluates all five verification equations (no short-circuit);
/// public_inputs excludes the implicit constant-one wire.
PairingChecks evaluate_pairing_checks(const VerificationKey& vk, const SnarkProof& proof,
                                      const std::vector<FieldElement>& public_inputs);

/// True iff the proof is well-formed (all points on-curve) and every pairing
/// check holds. Off-curve elements yield false, not an exception.
bool verify_snark(const VerificationKey& vk, const SnarkProof& proof,
                  const std::vector<FieldElement>& public_inputs);

std::vector<uint8_t> serialize_snark_proof(const SnarkProof& proof);
SnarkProof deserialize_snark_proof(std::span<const uint8_t> bytes);

}  // namespace zkcmp::snark

#endif
