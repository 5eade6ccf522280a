#ifndef ZKCMP_SNARK_R1CS_HPP
#define ZKCMP_SNARK_R1CS_HPP

#include <cstddef>
#include <vector>

#include "zkcmp/algebra/field.hpp"

namespace zkcmp::snark {

using algebra::FieldElement;
using algebra::FieldId;

/// Full assignment [one, y, x, s1, s2, s3] over snark-r; values[0] == 1.
struct Witness {
    std::vector<FieldElement> values;
};

/// Rank-1 constraint system <a_i,w> * <b_i,w> = <c_i,w>, dense matrices of
/// shape num_constraints x num_vars. Index 0 is the constant-one wire.
struct R1cs {
    std::vector<std::vector<FieldElement>> a, b, c;
    size_t num_vars = 0;
    size_t num_constraints = 0;
    std::vector<size_t> public_indices;

    bool is_satisfied(const Witness& witness) const;
};

/// The circuit for y = x^3 + x + 5: four constraints over the six variables
/// [one, y, x, s1=x^2, s2=x^3, s3=x^3+x]; public variables {one, y}.
R1cs build_cubic_circuit();

/// Evaluates the circuit on private input x; the result satisfies every
/// constraint by construction.
Witness generate_witness(const R1cs& circuit, const FieldElement& x);

}  // namespace zkcmp::snark

#endif
