#pragma once

#include "uqosp/report.hpp"

namespace uqosp {

using ClassicalReport = CheckReport;

/// Defining relations of the affine superalgebra on the Chevalley images
/// (Cartan, [e_b, e_-b'], h_d and Cartan actions, both Serre relations),
/// h_a0 + 2h_a -> c and its centrality. The [e_b, e_-b'] lines are the
/// quantum Cartan relation at q = 1.
ClassicalReport check_chevalley_relations();
/// [e_b, e_-b] = +-h_b for b in nd-2a, nd+2a, nd-a, nd+a, nd and 1 <= n <= n_max.
ClassicalReport check_root_brackets(int n_max);
/// Skew-supersymmetry and the cocycle identity on basis triples of
/// |u-degree| <= max_degree; closed form against the residue form. The
/// identity is checked in its cyclic form; the printed variant is reported
/// as informational.
ClassicalReport check_cocycle(int max_degree);
/// Supersymmetry and invariance of the form on u-independent basis elements.
ClassicalReport check_form();
/// The recursions evaluated at q = 1 reproduce the realized vectors for
/// |c_delta| <= n_max. Needs an integral (alpha, alpha) (DomainError).
ClassicalReport check_classical_limit(int n_max);
/// Chevalley relations, root brackets for n <= n_max.
ClassicalReport check_classical(int n_max);

}  // namespace uqosp
