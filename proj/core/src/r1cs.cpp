#include "zkcmp/snark/r1cs.hpp"

#include <cassert>
#include <stdexcept>

namespace zkcmp::snark {

namespace {

const FieldId& fr() { return FieldId::snark_r(); }

FieldElement dot(const std::vector<FieldElement>& row, const std::vector<FieldElement>& w) {
    FieldElement acc = FieldElement::zero(fr());
    for (size_t k = 0; k < row.size(); ++k) {
        if (!row[k].is_zero()) acc = acc + row[k] * w[k];
    }
    return acc;
}

}  // namespace

bool R1cs::is_satisfied(const Witness& witness) const {
    if (witness.values.size() != num_vars) return false;
    if (!(witness.values[0] == FieldElement::one(fr()))) return false;
    for (size_t i = 0; i < num_constraints; ++i) {
        if (!(dot(a[i], witness.values) * dot(b[i], witness.values) ==
              dot(c[i], witness.values))) {
            return false;
        }
    }
    return true;
}

R1cs build_cubic_circuit() {
    constexpr size_t kOne = 0, kY = 1, kX = 2, kS1 = 3, kS2 = 4, kS3 = 5;
    constexpr size_t kVars = 6, kConstraints = 4;

    R1cs r;
    r.num_vars = kVars;
    r.num_constraints = kConstraints;
    r.public_indices = {kOne, kY};
    auto zero_row = [] {
        return std::vector<FieldElement>(kVars, FieldElement::zero(fr()));
    };
    r.a.assign(kConstraints, zero_row());
    r.b.assign(kConstraints, zero_row());
    r.c.assign(kConstraints, zero_row());

    const FieldElement one = FieldElement::one(fr());
    const FieldElement five{mpz_class(5), fr()};

    // x * x = s1
    r.a[0][kX] = one;
    r.b[0][kX] = one;
    r.c[0][kS1] = one;
    // s1 * x = s2
    r.a[1][kS1] = one;
    r.b[1][kX] = one;
    r.c[1][kS2] = one;
    // (s2 + x) * one = s3
    r.a[2][kS2] = one;
    r.a[2][kX] = one;
    r.b[2][kOne] = one;
    r.c[2][kS3] = one;
    // (s3 + 5*one) * one = y
    r.a[3][kS3] = one;
    r.a[3][kOne] = five;
    r.b[3][kOne] = one;
    r.c[3][kY] = one;
    return r;
}

Witness generate_witness(const R1cs& circuit, const FieldElement& x) {
    if (!(x.field() == fr())) throw std::invalid_argument("witness input must be in snark-r");
    const FieldElement one = FieldElement::one(fr());
    const FieldElement five{mpz_class(5), fr()};
    const FieldElement s1 = x * x;
    const FieldElement s2 = s1 * x;
    const FieldElement s3 = s2 + x;
    const FieldElement y = s3 + five;
    Witness w{{one, y, x, s1, s2, s3}};
    assert(circuit.is_satisfied(w));
    return w;
}

}  // namespace zkcmp::snark
