#include "zkcmp/commit/transcript.hpp"

#include <stdexcept>
#include <vector>

namespace zkcmp::commit {

void Transcript::absorb(std::string_view label, std::span<const uint8_t> data) {
    std::vector<uint8_t> buf;
    buf.reserve(state_.size() + label.size() + data.size());
    buf.insert(buf.end(), state_.begin(), state_.end());
    buf.insert(buf.end(), label.begin(), label.end());
    buf.insert(buf.end(), data.begin(), data.end());
    state_ = sha3_256(buf);
    ++absorb_count_;
}

void Transcript::advance() { absorb("chal", {}); }

algebra::FieldElement Transcript::challenge_field(const algebra::FieldId& field) {
    auto out = algebra::FieldElement::from_bytes_be(state_, field);
    advance();
    return out;
}

uint64_t Transcript::challenge_index(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("challenge_index: bound must be >= 1");
    mpz_class state_int;
    mpz_import(state_int.get_mpz_t(), state_.size(), 1, 1, 1, 0, state_.data());
    mpz_class b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(bound), 0, 0, &bound);
    mpz_class rem = state_int % b;
    advance();
    return mpz_get_ui(rem.get_mpz_t());
}

}  // namespace zkcmp::commit
