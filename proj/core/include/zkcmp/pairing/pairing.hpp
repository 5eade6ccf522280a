#ifndef ZKCMP_PAIRING_PAIRING_HPP
#define ZKCMP_PAIRING_PAIRING_HPP

#include "zkcmp/pairing/curve.hpp"

namespace zkcmp::pairing {

/// Optimal Ate Miller loop f_{6x+2,Q}(P) with the two Frobenius line
/// corrections, computed on the untwisted image of Q in E(Fq12).
/// Throws std::domain_error for off-curve inputs. Both points must be finite.
Fq12 miller_loop(const G1Point& p, const G2Point& q);

/// f^((p^12 - 1) / r). Throws std::domain_error for zero input.
GtElement final_exponentiation(const Fq12& f);

/// e(P, Q) = final_exponentiation(miller_loop(P, Q)); bilinear and
/// nondegenerate on the generators. Pairing with infinity yields the
/// multiplicative identity of GT.
GtElement pairing(const G1Point& p, const G2Point& q);

}  // namespace zkcmp::pairing

#endif
