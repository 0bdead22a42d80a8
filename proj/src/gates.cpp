#include "gibbs/gates.hpp"

#include <cmath>

namespace gibbs::gates {

GateMatrix ry(double theta) {
  GateMatrix g;
  g.arity = 1;
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  g.at(0, 0) = c;
  g.at(0, 1) = -s;
  g.at(1, 0) = s;
  g.at(1, 1) = c;
  return g;
}

GateMatrix rz(double theta) {
  GateMatrix g;
  g.arity = 1;
  g.at(0, 0) = std::polar(1.0, -theta / 2.0);
  g.at(1, 1) = std::polar(1.0, theta / 2.0);
  return g;
}

GateMatrix sqrt_x() {
  GateMatrix g;
  g.arity = 1;
  g.at(0, 0) = cplx{0.5, 0.5};
  g.at(0, 1) = cplx{0.5, -0.5};
  g.at(1, 0) = cplx{0.5, -0.5};
  g.at(1, 1) = cplx{0.5, 0.5};
  return g;
}

GateMatrix cnot() {
  GateMatrix g;
  g.arity = 2;
  g.at(0, 0) = 1.0;
  g.at(1, 1) = 1.0;
  g.at(2, 3) = 1.0;
  g.at(3, 2) = 1.0;
  return g;
}

GateMatrix rxy(double phi) {
  // exp(+i phi sx(x)sy / 2): cos on the diagonal, the sx(x)sy block off it
  GateMatrix g;
  g.arity = 2;
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  g.at(0, 0) = c;
  g.at(1, 1) = c;
  g.at(2, 2) = c;
  g.at(3, 3) = c;
  g.at(0, 3) = s;
  g.at(1, 2) = -s;
  g.at(2, 1) = s;
  g.at(3, 0) = -s;
  return g;
}

GateMatrix ryx(double phi) {
  GateMatrix g;
  g.arity = 2;
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  g.at(0, 0) = c;
  g.at(1, 1) = c;
  g.at(2, 2) = c;
  g.at(3, 3) = c;
  g.at(0, 3) = s;
  g.at(1, 2) = s;
  g.at(2, 1) = -s;
  g.at(3, 0) = -s;
  return g;
}

}  // namespace gibbs::gates
