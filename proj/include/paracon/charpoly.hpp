#pragma once

#include "paracon/lie_algebra.hpp"

namespace paracon {

// Characteristic polynomial det(t*I - Y) = t^N + c[1] t^{N-1} + ... + c[N]
// by Faddeev-LeVerrier.  The auxiliary matrices M_k = Y M_{k-1} + c_k I carry
// every derivative for free:  d c_k = -tr(M_{k-1} dY).
struct CharPoly {
    std::vector<Rat> c;        // c[0] = 1
    std::vector<QMatrix> aux;  // aux[k] = M_k for k = 0..N-1
};

CharPoly char_poly(const QMatrix& y);

// directional derivative of c_k at Y along the sparse direction dY
Rat char_coeff_derivative(const CharPoly& cp, int k, const SparseMat& dir);

// Pfaffian of a skew-symmetric matrix by subset recursion; the table of
// sub-Pfaffians doubles as the gradient:  dPf/da_uv = (-1)^{u+v+1} Pf(A
// with rows and columns u, v removed), u < v.
struct Pfaffian {
    Rat value;
    QMatrix removed_two;  // (u,v) entry (u < v): Pf with u,v removed
};

Pfaffian pfaffian(const QMatrix& a);

// derivative of Pf(A) along a skew-symmetric sparse direction dA
Rat pfaffian_derivative(const Pfaffian& pf, const SparseMat& dir);

} // namespace paracon
