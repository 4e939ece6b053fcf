#pragma once

#include <string>

namespace mpcalc::fixtures {

/// The five-constituent reference catalog used by the exhaustive checks:
/// one (trivial unramified character), chi_a, chi_b (ramified quadratic),
/// rho2 (symplectic of dimension 2), tau2 (orthogonal of dimension 2).
const std::string& f1();

/// f1 extended with twist, SL2-swap and Rankin-Selberg coverage, a second
/// symplectic constituent, a non-self-dual dual pair and the swap targets.
const std::string& f1x();

/// Catalog for the rank-1 enumeration case.
const std::string& waldspurger();

/// Two-place principal scenario document (global catalog with places).
const std::string& principal_two_place();

/// Saito-Kurokawa style global documents with Rankin-Selberg sign -1 / +1.
const std::string& sk_global(int rs_sign);

} // namespace mpcalc::fixtures
