#pragma once

#include <map>
#include <string>
#include <vector>

#include "mpcalc/epsilon.hpp"

namespace mpcalc {

struct PacketMember {
    std::string label;
    BitVec character;
    int copy_index = 1;
    bool spherical = false;
    bool in_l_packet = false;
};

/// A finite labeled packet fibered over the character group: members are
/// triples (character, label, copy index). Only the index combinatorics of
/// a packet is modeled; labels are opaque.
class PacketModel {
public:
    PacketModel(ArthurParameter psi, std::vector<PacketMember> members);

    static PacketModel from_json(const Catalog& cat, const Json& j);
    Json to_json() const;

    const ArthurParameter& parameter() const { return psi_; }
    const std::vector<PacketMember>& members() const { return members_; }
    const ComponentGroup& group() const { return group_; }

    /// copies of `label` carrying the character chi
    long long multiplicity(const std::string& label, const BitVec& chi) const;

private:
    void validate() const;

    ArthurParameter psi_;
    ComponentGroup group_;
    std::vector<PacketMember> members_;
};

/// Signed coefficient vectors, keyed by member label.
using CoefficientVector = std::map<std::string, long long>;

std::string coefficient_vector_str(const CoefficientVector& v);

/// T_{psi,x}: member (chi, label, k) contributes chi(x_psi x) to its label.
CoefficientVector t_vector(const PacketModel& pm, const BitVec& x);

/// pi_{psi,chi} = |S|^{-1} sum_x chi(x_psi x) T_{psi,x}; equals the
/// multiplicity indicator of the members carrying chi.
CoefficientVector fourier_pi(const PacketModel& pm, const BitVec& chi);

/// The coefficient vector of the endoscopic transfer attached to a
/// splitting: eps(psi^{s=-1})^{-1} T_{psi, image(s)}.
CoefficientVector transfer_vector(const PacketModel& pm, const Splitting& s);

/// The two-member packet of zeta (x) r(2n): labels omega_plus(zeta) and
/// omega_minus(zeta) with the trivial and the sign character; the plus
/// member is spherical exactly when zeta is unramified.
PacketModel build_principal_packet(const Catalog& cat, const std::string& zeta, int n);

/// Additive-character variation: parameter psi.zeta, characters chi.delta_c,
/// members unchanged. An involution for a fixed square class.
PacketModel relabel_variation(const PacketModel& pm, const std::string& square_class);

/// Anti-tempered relabeling: from an L-packet model for the dual parameter,
/// the member of character chi.mu~ acquires character chi; labels receive a
/// dual marker.
PacketModel relabel_anti_tempered(const PacketModel& tempered, const ArthurParameter& psi,
                                  const BitVec& mu);

} // namespace mpcalc
