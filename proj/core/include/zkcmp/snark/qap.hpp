#ifndef ZKCMP_SNARK_QAP_HPP
#define ZKCMP_SNARK_QAP_HPP

#include "zkcmp/algebra/polynomial.hpp"
#include "zkcmp/snark/r1cs.hpp"

namespace zkcmp::snark {

using algebra::Polynomial;

/// Quadratic arithmetic program over the evaluation domain {1..m}:
/// a_polys[k] interpolates column k of the A matrix over the domain
/// (likewise b, c); z vanishes on the whole domain. A witness satisfies the
/// R1CS iff z divides A*B - C for the witness-weighted combinations.
struct Qap {
    std::vector<Polynomial> a_polys, b_polys, c_polys;
    Polynomial z;
    std::vector<FieldElement> domain;
    size_t num_vars = 0;
    std::vector<size_t> public_indices;
};

Qap r1cs_to_qap(const R1cs& circuit);

/// Witness-weighted combination sum_k w_k * polys[k].
Polynomial combine(const std::vector<Polynomial>& polys, const Witness& witness);

/// Quotient H = (A*B - C) / Z for a satisfying witness; the remainder is
/// returned alongside so callers can detect unsatisfying witnesses.
std::pair<Polynomial, Polynomial> witness_quotient(const Qap& qap, const Witness& witness);

}  // namespace zkcmp::snark

#endif
