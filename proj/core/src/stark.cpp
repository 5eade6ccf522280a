#include "zkcmp/stark/stark.hpp"

#include <stdexcept>

namespace zkcmp::stark {

namespace {

const FieldId& fq() { return FieldId::stark_q(); }

FieldElement fe_u64(uint64_t v) { return FieldElement::from_u64(v, fq()); }

std::vector<uint8_t> leaf_bytes(const FieldElement& v) {
    auto b = v.to_bytes32();
    return {b.begin(), b.end()};
}

commit::MerkleTree commit_evaluations(const std::vector<FieldElement>& evals) {
    std::vector<std::vector<uint8_t>> leaves;
    leaves.reserve(evals.size());
    for (const auto& v : evals) leaves.push_back(leaf_bytes(v));
    return commit::MerkleTree(leaves);
}

constexpr std::string_view kTraceRootLabel = "trace-root";
constexpr std::string_view kCpRootLabel = "cp-root";
constexpr std::string_view kFriRootLabel = "fri-root";

}  // namespace

// ----------------------------------------------------------- pipeline ops

Trace generate_trace() {
    Trace trace;
    trace.values.reserve(kTraceLength);
    trace.values.push_back(fe_u64(kTraceFirst));
    trace.values.push_back(fe_u64(kTraceSecond));
    for (size_t n = 2; n < kTraceLength; ++n) {
        const FieldElement& a = trace.values[n - 2];
        const FieldElement& b = trace.values[n - 1];
        trace.values.push_back(b * b + a * a);
    }
    return trace;
}

Domains build_domains() {
    const mpz_class& q = fq().modulus();
    const FieldElement five = fe_u64(5);
    Domains d{.g = five.pow((q - 1) / kTraceDomainSize),
              .h = five.pow((q - 1) / kEvalDomainSize),
              .coset_offset = five,
              .trace_domain = {},
              .eval_domain = {}};
    if (!(d.g.pow(kTraceDomainSize) == FieldElement::one(fq()))) {
        throw std::logic_error("trace domain generator has wrong order");
    }
    d.trace_domain.reserve(kTraceDomainSize);
    FieldElement cur = FieldElement::one(fq());
    for (size_t i = 0; i < kTraceDomainSize; ++i) {
        d.trace_domain.push_back(cur);
        cur = cur * d.g;
    }
    d.eval_domain.reserve(kEvalDomainSize);
    cur = d.coset_offset;
    for (size_t i = 0; i < kEvalDomainSize; ++i) {
        d.eval_domain.push_back(cur);
        cur = cur * d.h;
    }
    return d;
}

Polynomial interpolate_trace(const Trace& trace, const Domains& domains) {
    if (trace.values.size() != kTraceLength) {
        throw std::invalid_argument("trace must have 1023 values");
    }
    return Polynomial::interpolate(
        std::span(domains.trace_domain).first(kTraceLength), trace.values);
}

std::vector<FieldElement> low_degree_extend(const Polynomial& p, const Domains& domains) {
    if (p.degree() >= static_cast<int>(kEvalDomainSize)) {
        throw std::invalid_argument("polynomial degree too large for the evaluation domain");
    }
    return p.eval_on_domain(domains.eval_domain);
}

ConstraintSet generate_program_constraints(const Polynomial& trace_poly,
                                           const Domains& domains) {
    const FieldElement one = FieldElement::one(fq());
    const Polynomial x_poly({FieldElement::zero(fq()), one}, fq());

    auto quotient = [](const Polynomial& num, const Polynomial& den, const char* what) {
        auto [q, r] = Polynomial::divrem(num, den);
        if (!r.is_zero()) {
            throw std::domain_error(std::string("constraint not satisfied: ") + what);
        }
        return q;
    };

    const Polynomial first_num = trace_poly - Polynomial::constant(one);
    const Polynomial first_den = x_poly - Polynomial::constant(domains.trace_domain[0]);

    const Polynomial last_num = trace_poly - Polynomial::constant(fe_u64(kClaimedLast));
    const Polynomial last_den =
        x_poly - Polynomial::constant(domains.trace_domain[kTraceLength - 1]);

    const Polynomial p_g = trace_poly.scale_argument(domains.g);
    const Polynomial p_g2 = trace_poly.scale_argument(domains.g * domains.g);
    const Polynomial rec_num = p_g2 - p_g * p_g - trace_poly * trace_poly;
    const Polynomial rec_den = Polynomial::vanishing(
        std::span(domains.trace_domain).first(kTraceLength - 2), fq());

    return {quotient(first_num, first_den, "boundary-first"),
            quotient(last_num, last_den, "boundary-last"),
            quotient(rec_num, rec_den, "recurrence")};
}

CompositionPoly compose_constraints(const ConstraintSet& constraints,
                                    commit::Transcript& transcript) {
    const FieldElement a0 = transcript.challenge_field(fq());
    const FieldElement a1 = transcript.challenge_field(fq());
    const FieldElement a2 = transcript.challenge_field(fq());
    Polynomial cp = constraints.boundary_first.scaled(a0) +
                    constraints.boundary_last.scaled(a1) + constraints.recurrence.scaled(a2);
    return {std::move(cp), {a0, a1, a2}};
}

Polynomial fri_fold(const Polynomial& p, const FieldElement& beta) {
    const auto& coeffs = p.coefficients();
    std::vector<FieldElement> folded;
    folded.reserve((coeffs.size() + 1) / 2);
    for (size_t k = 0; k < coeffs.size(); k += 2) {
        FieldElement c = coeffs[k];
        if (k + 1 < coeffs.size()) c = c + beta * coeffs[k + 1];
        folded.push_back(std::move(c));
    }
    return {std::move(folded), p.field()};
}

std::pair<std::vector<FriLayer>, FieldElement> fri_commit(const CompositionPoly& cp,
                                                          const Domains& domains,
                                                          commit::Transcript& transcript) {
    std::vector<FriLayer> layers;
    std::vector<FieldElement> domain = domains.eval_domain;
    Polynomial current = cp.cp;

    auto push_layer = [&](std::optional<FieldElement> beta, std::string_view label) {
        std::vector<FieldElement> evals = current.eval_on_domain(domain);
        commit::MerkleTree tree = commit_evaluations(evals);
        transcript.absorb(label, tree.root());
        layers.push_back({current, domain, std::move(evals), std::move(tree), std::move(beta)});
    };

    push_layer(std::nullopt, kCpRootLabel);
    while (current.degree() > 0) {
        const FieldElement beta = transcript.challenge_field(fq());
        current = fri_fold(current, beta);
        std::vector<FieldElement> next_domain;
        next_domain.reserve(domain.size() / 2);
        for (size_t i = 0; i < domain.size() / 2; ++i) {
            next_domain.push_back(domain[i] * domain[i]);
        }
        domain = std::move(next_domain);
        push_layer(beta, kFriRootLabel);
    }

    const FieldElement final_constant =
        current.is_zero() ? FieldElement::zero(fq()) : current.coeff(0);
    return {std::move(layers), final_constant};
}

// ----------------------------------------------------------- prover

StarkProver::StarkProver(StarkParams params) : params_(params), domains_(build_domains()) {
    if (params_.blowup != kBlowup) {
        throw std::invalid_argument("only the fixed blowup factor 8 is supported");
    }
    if (params_.num_queries == 0) {
        throw std::invalid_argument("at least one query is required");
    }
}

void StarkProver::run_trace() { trace_ = generate_trace(); }

void StarkProver::run_interpolation() { trace_poly_ = interpolate_trace(*trace_, domains_); }

void StarkProver::run_lde() { trace_lde_ = low_degree_extend(*trace_poly_, domains_); }

void StarkProver::run_commit() {
    trace_tree_ = commit_evaluations(trace_lde_);
    transcript_.absorb(kTraceRootLabel, trace_tree_->root());
}

void StarkProver::run_constraints() {
    constraints_ = generate_program_constraints(*trace_poly_, domains_);
    composition_ = compose_constraints(*constraints_, transcript_);
}

void StarkProver::run_fri() {
    auto [layers, final_constant] = fri_commit(*composition_, domains_, transcript_);
    layers_ = std::move(layers);
    final_constant_ = final_constant;
    betas_.clear();
    for (size_t k = 1; k < layers_.size(); ++k) betas_.push_back(*layers_[k].beta);
}

StarkProof StarkProver::run_queries() {
    query_indices_.clear();
    for (uint32_t n = 0; n < params_.num_queries; ++n) {
        query_indices_.push_back(transcript_.challenge_index(kQueryIndexBound));
    }

    StarkProof proof{.params = params_,
                     .trace_root = trace_tree_->root(),
                     .cp_root = layers_[0].tree.root(),
                     .fri_roots = {},
                     .final_constant = *final_constant_,
                     .queries = {}};
    for (size_t k = 1; k < layers_.size(); ++k) proof.fri_roots.push_back(layers_[k].tree.root());

    auto open_at = [](const commit::MerkleTree& tree, const std::vector<FieldElement>& evals,
                      size_t idx) {
        return Opening{evals[idx], tree.open(idx)};
    };

    for (uint64_t i : query_indices_) {
        QueryBundle bundle;
        for (uint64_t offset : {uint64_t{0}, uint64_t{8}, uint64_t{16}}) {
            bundle.trace.push_back(open_at(*trace_tree_, trace_lde_, i + offset));
        }
        bundle.cp = open_at(layers_[0].tree, layers_[0].evaluations, i);
        for (const FriLayer& layer : layers_) {
            const size_t half = layer.domain.size() / 2;
            const size_t idx = i % half;
            bundle.layers.emplace_back(open_at(layer.tree, layer.evaluations, idx),
                                       open_at(layer.tree, layer.evaluations, idx + half));
        }
        proof.queries.push_back(std::move(bundle));
    }
    return proof;
}

StarkProof StarkProver::prove_all() {
    run_trace();
    run_interpolation();
    run_lde();
    run_commit();
    run_constraints();
    run_fri();
    return run_queries();
}

StarkProof stark_prove(const StarkParams& params) { return StarkProver(params).prove_all(); }

// ----------------------------------------------------------- verifier

namespace {

bool verify_opening(const Opening& opening, const commit::Digest& root, uint64_t expected_index) {
    if (opening.path.leaf_index != expected_index) return false;
    return commit::merkle_verify(root, leaf_bytes(opening.value), opening.path);
}

// V(x) for the recurrence constraint, evaluated via the subgroup identity
// x^1024 - 1 = prod_{i<1024} (x - g^i).
FieldElement recurrence_vanishing_at(const FieldElement& x, const Domains& domains) {
    const FieldElement one = FieldElement::one(fq());
    FieldElement num = x.pow(kTraceDomainSize) - one;
    FieldElement den = (x - domains.trace_domain[kTraceDomainSize - 3]) *
                       (x - domains.trace_domain[kTraceDomainSize - 2]) *
                       (x - domains.trace_domain[kTraceDomainSize - 1]);
    return num * den.inv();
}

}  // namespace

bool stark_verify(const StarkProof& proof) {
    try {
        if (proof.params.blowup != kBlowup) return false;
        if (proof.queries.size() != proof.params.num_queries) return false;
        const size_t layer_count = proof.fri_roots.size();
        if (layer_count > 12) return false;

        const Domains domains = build_domains();
        const FieldElement one = FieldElement::one(fq());
        const FieldElement two_inv = (one + one).inv();

        // transcript replay
        commit::Transcript transcript;
        transcript.absorb(kTraceRootLabel, proof.trace_root);
        const FieldElement a0 = transcript.challenge_field(fq());
        const FieldElement a1 = transcript.challenge_field(fq());
        const FieldElement a2 = transcript.challenge_field(fq());
        transcript.absorb(kCpRootLabel, proof.cp_root);
        std::vector<FieldElement> betas;
        for (const auto& root : proof.fri_roots) {
            betas.push_back(transcript.challenge_field(fq()));
            transcript.absorb(kFriRootLabel, root);
        }

        for (const QueryBundle& bundle : proof.queries) {
            const uint64_t i = transcript.challenge_index(kQueryIndexBound);

            // trace openings at i, i+8, i+16
            if (bundle.trace.size() != 3) return false;
            const std::array<uint64_t, 3> offsets{0, 8, 16};
            for (size_t j = 0; j < 3; ++j) {
                if (!verify_opening(bundle.trace[j], proof.trace_root, i + offsets[j])) {
                    return false;
                }
            }
            if (!verify_opening(bundle.cp, proof.cp_root, i)) return false;

            // composition relation at x = eval_domain[i]; the +8 / +16
            // offsets select P(g x) and P(g^2 x) because h^8 = g.
            const FieldElement& x = domains.eval_domain[i];
            const FieldElement& t0 = bundle.trace[0].value;
            const FieldElement& t1 = bundle.trace[1].value;
            const FieldElement& t2 = bundle.trace[2].value;
            const FieldElement c0 = (t0 - one) * (x - domains.trace_domain[0]).inv();
            const FieldElement c1 =
                (t0 - fe_u64(kClaimedLast)) *
                (x - domains.trace_domain[kTraceLength - 1]).inv();
            const FieldElement c2 = (t2 - t1 * t1 - t0 * t0) *
                                    recurrence_vanishing_at(x, domains).inv();
            if (!(a0 * c0 + a1 * c1 + a2 * c2 == bundle.cp.value)) return false;

            // FRI folding chain
            if (bundle.layers.size() != layer_count + 1) return false;
            for (size_t k = 0; k <= layer_count; ++k) {
                const uint64_t layer_size = kEvalDomainSize >> k;
                const uint64_t half = layer_size / 2;
                const uint64_t idx = i % half;
                const commit::Digest& root = k == 0 ? proof.cp_root : proof.fri_roots[k - 1];
                const auto& [lo, hi] = bundle.layers[k];
                if (!verify_opening(lo, root, idx)) return false;
                if (!verify_opening(hi, root, idx + half)) return false;

                if (k < layer_count) {
                    // x_k = offset^(2^k) * h^(2^k * idx)
                    const mpz_class stride = mpz_class(1) << k;
                    const FieldElement x_k = domains.coset_offset.pow(stride) *
                                             domains.h.pow(stride * idx);
                    const FieldElement folded =
                        (lo.value + hi.value) * two_inv +
                        betas[k] * (lo.value - hi.value) * (x_k + x_k).inv();
                    const uint64_t next_half = half / 2;
                    const auto& next_pair = bundle.layers[k + 1];
                    const FieldElement& target =
                        (idx % next_half == idx) ? next_pair.first.value
                                                 : next_pair.second.value;
                    if (!(folded == target)) return false;
                } else {
                    if (!(lo.value == proof.final_constant)) return false;
                    if (!(hi.value == proof.final_constant)) return false;
                }
            }
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

// ----------------------------------------------------------- wire

namespace {

constexpr size_t kEvalTreeHeight = 13;  // log2(8192)

void write_field_u32(std::vector<uint8_t>& out, const FieldElement& v) {
    write_u32_be(out, static_cast<uint32_t>(v.to_u64()));
}

FieldElement read_field_u32(ByteReader& reader) {
    const uint32_t raw = reader.u32_be();
    mpz_class v(raw);
    if (v >= fq().modulus()) throw FormatError("field value out of range");
    return {std::move(v), fq()};
}

void write_opening(std::vector<uint8_t>& out, const Opening& opening) {
    write_field_u32(out, opening.value);
    opening.path.serialize(out);
}

Opening read_opening(ByteReader& reader, size_t height) {
    FieldElement value = read_field_u32(reader);
    commit::MerklePath path = commit::MerklePath::deserialize(reader, height);
    return {std::move(value), std::move(path)};
}

void write_digest(std::vector<uint8_t>& out, const commit::Digest& d) {
    out.insert(out.end(), d.begin(), d.end());
}

commit::Digest read_digest(ByteReader& reader) {
    auto bytes = reader.take(32);
    commit::Digest d;
    std::copy(bytes.begin(), bytes.end(), d.begin());
    return d;
}

}  // namespace

std::vector<uint8_t> serialize_stark_proof(const StarkProof& proof) {
    std::vector<uint8_t> out;
    write_u32_be(out, proof.params.blowup);
    write_u32_be(out, proof.params.num_queries);
    write_u32_be(out, static_cast<uint32_t>(proof.fri_roots.size()));
    write_digest(out, proof.trace_root);
    write_digest(out, proof.cp_root);
    for (const auto& root : proof.fri_roots) write_digest(out, root);
    write_field_u32(out, proof.final_constant);
    for (const QueryBundle& bundle : proof.queries) {
        for (const Opening& opening : bundle.trace) write_opening(out, opening);
        write_opening(out, bundle.cp);
        for (const auto& [lo, hi] : bundle.layers) {
            write_opening(out, lo);
            write_opening(out, hi);
        }
    }
    return out;
}

StarkProof deserialize_stark_proof(std::span<const uint8_t> bytes) {
    ByteReader reader(bytes);
    StarkParams params{.num_queries = 0, .blowup = 0};
    params.blowup = reader.u32_be();
    params.num_queries = reader.u32_be();
    if (params.blowup != kBlowup) throw FormatError("unsupported blowup factor");
    const uint32_t layer_count = reader.u32_be();
    if (layer_count > 12) throw FormatError("too many FRI layers");

    StarkProof proof{.params = params,
                     .trace_root = {},
                     .cp_root = {},
                     .fri_roots = {},
                     .final_constant = FieldElement::zero(fq()),
                     .queries = {}};
    proof.trace_root = read_digest(reader);
    proof.cp_root = read_digest(reader);
    for (uint32_t k = 0; k < layer_count; ++k) proof.fri_roots.push_back(read_digest(reader));
    proof.final_constant = read_field_u32(reader);

    for (uint32_t n = 0; n < params.num_queries; ++n) {
        QueryBundle bundle;
        for (int j = 0; j < 3; ++j) {
            bundle.trace.push_back(read_opening(reader, kEvalTreeHeight));
        }
        bundle.cp = read_opening(reader, kEvalTreeHeight);
        for (uint32_t k = 0; k <= layer_count; ++k) {
            Opening lo = read_opening(reader, kEvalTreeHeight - k);
            Opening hi = read_opening(reader, kEvalTreeHeight - k);
            bundle.layers.emplace_back(std::move(lo), std::move(hi));
        }
        proof.queries.push_back(std::move(bundle));
    }
    reader.expect_end();
    return proof;
}

}  // namespace zkcmp::stark
