#ifndef ZKCMP_STARK_STARK_HPP
#define ZKCMP_STARK_STARK_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zkcmp/algebra/polynomial.hpp"
#include "zkcmp/commit/merkle.hpp"
#include "zkcmp/commit/transcript.hpp"

namespace zkcmp::stark {

using algebra::FieldElement;
using algebra::FieldId;
using algebra::Polynomial;

// Statement: "the 1023rd element of the FibonacciSq sequence is 2338775057",
// over F_q with q = 3*2^30 + 1, a_0 = 1, a_1 = 3141592,
// a_{n+2} = a_{n+1}^2 + a_n^2.
inline constexpr uint32_t kTraceLength = 1023;
inline constexpr uint32_t kTraceDomainSize = 1024;
inline constexpr uint32_t kBlowup = 8;
inline constexpr uint32_t kEvalDomainSize = kTraceDomainSize * kBlowup;
inline constexpr uint32_t kQueryIndexBound = kEvalDomainSize / 2;
inline constexpr uint64_t kTraceFirst = 1;
inline constexpr uint64_t kTraceSecond = 3141592;
inline constexpr uint64_t kClaimedLast = 2338775057;

struct Trace {
    std::vector<FieldElement> values;  // kTraceLength entries
};

/// Runs the squared-Fibonacci recurrence for 1022 steps.
Trace generate_trace();

/// g generates the order-1024 subgroup, h the order-8192 subgroup; the
/// evaluation domain is the coset 5 * <h>, disjoint from the trace domain so
/// constraint denominators never vanish on it.
struct Domains {
    FieldElement g, h, coset_offset;
    std::vector<FieldElement> trace_domain;  // g^0 .. g^1023
    std::vector<FieldElement> eval_domain;   // 5 * h^0 .. 5 * h^8191
};

Domains build_domains();

/// Unique polynomial of degree <= 1022 with P(g^i) = trace[i]; the 1024th
/// domain point carries no trace value.
Polynomial interpolate_trace(const Trace& trace, const Domains& domains);

/// Evaluations of p over the 8192-point coset; requires degree(p) < 8192.
std::vector<FieldElement> low_degree_extend(const Polynomial& p, const Domains& domains);

/// The three constraint quotients (remainders are zero for an honest trace):
///   boundary_first = (P(x) - 1) / (x - 1)
///   boundary_last  = (P(x) - 2338775057) / (x - g^1022)
///   recurrence     = (P(g^2 x) - P(g x)^2 - P(x)^2) / V(x),
/// with V vanishing on {g^0 .. g^1020}.
struct ConstraintSet {
    Polynomial boundary_first, boundary_last, recurrence;
};

/// Throws std::domain_error when any constraint leaves a nonzero remainder
/// (dishonest trace).
ConstraintSet generate_program_constraints(const Polynomial& trace_poly,
                                           const Domains& domains);

struct CompositionPoly {
    Polynomial cp;
    std::array<FieldElement, 3> alphas;
};

/// Draws alpha_0..alpha_2 from the transcript (which must already have
/// absorbed the trace root) and combines the quotients.
CompositionPoly compose_constraints(const ConstraintSet& constraints,
                                    commit::Transcript& transcript);

/// Even/odd split: result(y) = p_even(y) + beta * p_odd(y).
Polynomial fri_fold(const Polynomial& p, const FieldElement& beta);

struct FriLayer {
    Polynomial poly;
    std::vector<FieldElement> domain;
    std::vector<FieldElement> evaluations;
    commit::MerkleTree tree;
    std::optional<FieldElement> beta;  // challenge that produced this layer; none on layer 0
};

/// Layer 0 commits cp on the evaluation domain; each fold halves the domain
/// (squares of the first half) until the polynomial is constant. Every layer
/// root is absorbed; each beta is drawn after absorbing the previous root.
/// Returns the layers and the final constant.
std::pair<std::vector<FriLayer>, FieldElement> fri_commit(const CompositionPoly& cp,
                                                          const Domains& domains,
                                                          commit::Transcript& transcript);

struct StarkParams {
    uint32_t num_queries = 5;
    uint32_t blowup = kBlowup;
};

struct Opening {
    FieldElement value;
    commit::MerklePath path;
};

/// Decommitments for one query index i: trace rows at {i, i+8, i+16}, the
/// composition value at i, and an (idx, idx + half) pair for every committed
/// FRI layer including layer 0.
struct QueryBundle {
    std::vector<Opening> trace;                        // 3 openings
    Opening cp;                                        // at i
    std::vector<std::pair<Opening, Opening>> layers;   // layer_count + 1 pairs
};

struct StarkProof {
    StarkParams params;
    commit::Digest trace_root{};
    commit::Digest cp_root{};
    std::vector<commit::Digest> fri_roots;
    FieldElement final_constant;
    std::vector<QueryBundle> queries;
};

/// Stepwise prover; phases are split so the bench harness can time each one.
/// Call the run_* methods in declaration order (prove_all does).
class StarkProver {
public:
    explicit StarkProver(StarkParams params);

    void run_trace();
    void run_interpolation();
    void run_lde();
    void run_commit();
    void run_constraints();
    void run_fri();
    StarkProof run_queries();

    StarkProof prove_all();

    const Trace& trace() const { return *trace_; }
    const Polynomial& trace_polynomial() const { return *trace_poly_; }
    const CompositionPoly& composition() const { return *composition_; }
    const std::vector<FriLayer>& layers() const { return layers_; }
    const std::vector<FieldElement>& betas() const { return betas_; }
    const std::vector<uint64_t>& query_indices() const { return query_indices_; }

private:
    StarkParams params_;
    Domains domains_;
    commit::Transcript transcript_;
    std::optional<Trace> trace_;
    std::optional<Polynomial> trace_poly_;
    std::vector<FieldElement> trace_lde_;
    std::optional<commit::MerkleTree> trace_tree_;
    std::optional<ConstraintSet> constraints_;
    std::optional<CompositionPoly> composition_;
    std::vector<FriLayer> layers_;
    std::vector<FieldElement> betas_;
    std::optional<FieldElement> final_constant_;
    std::vector<uint64_t> query_indices_;
};

StarkProof stark_prove(const StarkParams& params = {});

/// Transcript replay plus every Merkle, composition, folding, and final
/// constant check. Malformed structure yields false rather than an exception.
bool stark_verify(const StarkProof& proof);

std::vector<uint8_t> serialize_stark_proof(const StarkProof& proof);
StarkProof deserialize_stark_proof(std::span<const uint8_t> bytes);

}  // namespace zkcmp::stark

#endif
