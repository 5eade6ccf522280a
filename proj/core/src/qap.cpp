#include "zkcmp/snark/qap.hpp"

#include <stdexcept>

namespace zkcmp::snark {

namespace {
const FieldId& fr() { return FieldId::snark_r(); }
}

Qap r1cs_to_qap(const R1cs& circuit) {
    Qap qap{.a_polys = {},
            .b_polys = {},
            .c_polys = {},
            .z = Polynomial(fr()),
            .domain = {},
            .num_vars = circuit.num_vars,
            .public_indices = circuit.public_indices};
    qap.domain.reserve(circuit.num_constraints);
    for (size_t i = 1; i <= circuit.num_constraints; ++i) {
        qap.domain.push_back(FieldElement::from_u64(i, fr()));
    }

    std::vector<FieldElement> column;
    column.reserve(circuit.num_constraints);
    auto interpolate_column = [&](const std::vector<std::vector<FieldElement>>& matrix,
                                  size_t k) {
        column.clear();
        for (size_t i = 0; i < circuit.num_constraints; ++i) column.push_back(matrix[i][k]);
        return Polynomial::interpolate(qap.domain, column);
    };

    for (size_t k = 0; k < circuit.num_vars; ++k) {
        qap.a_polys.push_back(interpolate_column(circuit.a, k));
        qap.b_polys.push_back(interpolate_column(circuit.b, k));
        qap.c_polys.push_back(interpolate_column(circuit.c, k));
    }
    qap.z = Polynomial::vanishing(qap.domain, fr());
    return qap;
}

Polynomial combine(const std::vector<Polynomial>& polys, const Witness& witness) {
    if (polys.size() != witness.values.size()) {
        throw std::invalid_argument("witness length does not match polynomial count");
    }
    Polynomial acc(fr());
    for (size_t k = 0; k < polys.size(); ++k) {
        if (!witness.values[k].is_zero()) acc = acc + polys[k].scaled(witness.values[k]);
    }
    return acc;
}

std::pair<Polynomial, Polynomial> witness_quotient(const Qap& qap, const Witness& witness) {
    const Polynomial a = combine(qap.a_polys, witness);
    const Polynomial b = combine(qap.b_polys, witness);
    const Polynomial c = combine(qap.c_polys, witness);
    return Polynomial::divrem(a * b - c, qap.z);
}

}  // namespace zkcmp::snark
