#pragma once

#include <map>
#include <string>
#include <vector>

#include "mpcalc/components.hpp"

namespace mpcalc {

/// eps(rho (x) r(a)) from eps(rho (x) r(1)) by the SL2 recursion: the root
/// number is raised to the a-th power, times (-rho(Frob))^{a-1} when rho is
/// an unramified character.
Mu4 epsilon_sl(const Catalog& cat, const std::string& constituent_id, int a);

/// Root number of a multiset of shifted constituents restricted to L_F:
/// self-dual shift-0 entries contribute their root numbers, dual pairs
/// (including every shifted entry against its dual at the opposite shift)
/// contribute det(-1). Keys are (constituent id, twice the shift).
Mu4 lf_multiset_epsilon(const Catalog& cat,
                        const std::map<std::pair<std::string, int>, long long>& entries);

/// eps(psi^{s=-1}): the minus part of a splitting, restricted to L_F.
/// Evaluates the closed product over I+/I- keys and J keys.
int epsilon_minus_part(const ArthurParameter& psi, const Splitting& s);

/// Independent route through phi_psi: expands the minus part into shifted
/// constituents and pairs them off.
int epsilon_phi_psi_minus_part(const ArthurParameter& psi, const Splitting& s);

/// nu_psi: bit at the I+ key (phi, b) is set iff eps(phi)^b = -1.
BitVec nu_character(const ArthurParameter& psi);

struct DescentReport {
    bool ok = true;
    long long fibers_checked = 0;
    std::vector<std::string> violations;
};

/// Checks that eps(psi^{s=-1}) is constant on every fiber of the splitting
/// image and, in good parity, equals nu_psi at the image. In general the
/// fiber-constant quantity is eps times the det(-1) corrections from the
/// I- and J keys moved across the fiber.
DescentReport verify_descent(const ArthurParameter& psi);

/// eps(psi|_{L_F}) = the minus part of the all-minus splitting.
int epsilon_restriction(const ArthurParameter& psi);

/// chi(z) * eps(psi|_{L_F}); the action of the central element -1.
int central_sign(const ArthurParameter& psi, const BitVec& chi);

/// delta_c: bit at the I+ key (phi, b) with b odd is set iff
/// zeta(-1)^{dim phi / 2} * eps(phi)/eps(phi.zeta) = -1; trivial at even b.
/// zeta is the quadratic character attached to the square class token.
BitVec delta_c_character(const ArthurParameter& psi, const std::string& square_class);

/// The anti-tempered packet-comparison character, on the cases certified by
/// the casebook rules: parameters of good parity in which every Jordan
/// block (rho, 1, b) has b even, every block has b = 1, or a single
/// multiplicity-one block with b = 1 sits alongside even-b blocks. Requires
/// the parameter to contain no unramified characters. Trivial on all
/// covered inputs; UnsupportedXuCase otherwise (the caller must then supply
/// the character externally).
BitVec xu_character_anti_tempered(const ArthurParameter& psi);

/// mu~ = mu * nu_psi * nu_{psi^}, on the shared basis of the component
/// groups of psi and its dual.
BitVec mu_tilde(const ArthurParameter& psi, const BitVec& mu);

/// Arthur's sign character for a discrete parameter: bit at key i is set
/// iff the number of j != i with phi_i x phi_j symplectic, min(b_i, b_j)
/// odd and eps(1/2, phi_i x phi_j) = -1 is odd. Factors through the
/// quotient by the central element z.
BitVec arthur_sign_character(const ArthurParameter& psi);

} // namespace mpcalc
