#pragma once

#include "qmf/cplx.hpp"
#include "qmf/context.hpp"
#include "qmf/rational.hpp"

namespace qmf {

// Full Kronecker symbol (a|n), defined for all integers.
int kronecker_symbol(int64_t a, int64_t n);

// eps_d = 1 for d = 1 mod 4, i for d = 3 mod 4; throws on even d.
// Negative odd d uses the residue of d mod 4 directly.
Cplx eps_d(int64_t d);

// Gamma on the cut plane via reflection plus Spouge's shifted asymptotic
// series sized to the working precision. Throws at non-positive integers.
Cplx complex_gamma(const Cplx& rho);

// Riemann zeta for complex s != 1: alternating (eta) acceleration for
// Re(s) > 0, reflection through the functional equation otherwise.
Cplx complex_zeta(const Cplx& s);

// e^{i pi q} for rational q, reduced exactly mod 2.
Cplx unit_phase(const Rat& q);

// i^p for real p, principal branch: e^{i pi p / 2}.
Cplx i_pow(const Rat& p);

Cplx complex_sin(const Cplx& z);

} // namespace qmf
