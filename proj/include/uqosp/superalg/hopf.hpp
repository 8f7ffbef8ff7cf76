#pragma once

#include "uqosp/report.hpp"
#include "uqosp/superalg/element.hpp"
#include "uqosp/superalg/tensor.hpp"

namespace uqosp {

/// Cartan element paired with a positive Chevalley letter: k_a for e_{+-a},
/// k_a0 for e_{+-(d-2a)}.
KExp letter_k(Letter l);

/// Superalgebra homomorphism into the 2-fold tensor power:
/// e -> e (x) 1 + k^-1 (x) e, f -> f (x) k + 1 (x) f, k -> k (x) k.
Tensor coproduct(const Element& x);
/// Super anti-homomorphism with S(e) = -k e, S(f) = -f k^-1, S(k) = k^-1.
Element antipode(const Element& x);
Scalar counit(const Element& x);

/// (Delta (x) id) and (id (x) Delta) on a 2-fold tensor.
Tensor coproduct_left(const Tensor& t);
Tensor coproduct_right(const Tensor& t);
/// (eps (x) id) and (id (x) eps) as elements.
Element counit_left(const Tensor& t);
Element counit_right(const Tensor& t);
/// m (S (x) id) and m (id (x) S).
Element antipode_left(const Tensor& t);
Element antipode_right(const Tensor& t);

/// The ten generators: k_d^{+-1}, k_a^{+-1}, k_a0^{+-1}, and the four e's.
std::vector<std::pair<std::string, Element>> hopf_generators();

/// Coassociativity, counit and antipode axioms on each of the ten
/// generators (three lines per generator).
CheckReport verify_hopf_axioms();

}  // namespace uqosp
