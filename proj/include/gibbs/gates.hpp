#pragma once

#include "gibbs/statevector.hpp"

namespace gibbs {

// Single- and two-qubit gate constructors.
//
// Conventions:
//   RY(t) = exp(-i t sy/2),  RZ(t) = exp(-i t sz/2)
//   sqrt(X) = exp(i pi/4) exp(-i pi sx/4)
//   R_XY(t) = exp(+i t sx(x)sy/2),  R_YX(t) = exp(+i t sy(x)sx/2)
// The + sign in R_XY/R_YX is fixed by requiring
// R_YX(pj) R_XY(pi) to reproduce the parity-preserving R_P matrix.
namespace gates {

GateMatrix ry(double theta);
GateMatrix rz(double theta);
GateMatrix sqrt_x();
GateMatrix cnot();  // |control, target> basis: control is the first target index
GateMatrix rxy(double phi);
GateMatrix ryx(double phi);

}  // namespace gates
}  // namespace gibbs
