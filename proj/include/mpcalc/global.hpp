#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpcalc/packets.hpp"

namespace mpcalc {

struct GlobalSummand {
    std::string cuspidal;
    int b = 1;
    int mult = 1;
};

/// Canonical multiset of cuspidal summands phi. (x) r(b) over a global
/// catalog, with the same distinctness and parity rules as the local
/// parameters. Discrete = good parity with all multiplicities one.
class GlobalParameter {
public:
    GlobalParameter(const GlobalCatalog& cat, std::vector<GlobalSummand> summands);

    static GlobalParameter from_json(const GlobalCatalog& cat, const Json& j);
    Json to_json() const;

    const GlobalCatalog& catalog() const { return *cat_; }
    const std::vector<GlobalSummand>& summands() const { return summands_; }
    long long dim() const;

    /// keys in the centralizer sense (J-pairs at their representative)
    const std::vector<KeyInfo>& keys() const { return keys_; }

    bool good_parity() const;
    bool discrete() const;
    std::string str() const;

private:
    const GlobalCatalog* cat_;
    std::vector<GlobalSummand> summands_;
    std::vector<KeyInfo> keys_;
};

struct ShiftedSummand {
    std::string constituent;
    int b = 1;
    HalfInt shift;
    int mult = 1;
};

/// A localized global parameter: the shift-0 part as an honest local
/// parameter, the shifted part as a multiset, and the induced linear map
/// between component groups.
struct Localization {
    std::string place;
    ArthurParameter shift0;
    std::vector<ShiftedSummand> shifted;
    F2Matrix map;       // rows: local I+ basis of shift0; cols: global I+ basis
    bool unramified = false;
};

Localization localize(const GlobalParameter& gp, const std::string& place);

struct LocalizationDiagnostics {
    bool injective_into_v0 = false;
    std::optional<BitVec> kernel_witness;          // a nonzero global element mapping to 0
    bool surjective_at_u = false;
    std::optional<BitVec> missed_character_at_u;   // a nontrivial local character vanishing on the image
};

LocalizationDiagnostics localization_diagnostics(const GlobalParameter& gp,
                                                 const std::vector<std::string>& v0,
                                                 const std::string& u);

/// nu: bit at the I+ key (phi., b) is set iff eps(phi.)^b = -1, from the
/// global root numbers.
BitVec nu_global(const GlobalParameter& gp);

/// eps(psi.^{s=-1}) from global root numbers; dual pairs contribute 1.
int global_epsilon_minus_part(const GlobalParameter& gp, const Splitting& s);

/// eps(psi._v^{s=-1}) of the localized minus part restricted to L_F.
int local_epsilon_minus_part(const GlobalParameter& gp, const std::string& place, const Splitting& s);

struct FactorizationRow {
    Splitting splitting;
    BitVec image;
    int global_eps = 1;
    int nu_value = 1;
    std::map<std::string, int> local_eps;
    bool ok = true;
};

struct FactorizationReport {
    std::vector<FactorizationRow> rows;
    std::vector<std::string> violations;
    bool nu_trivial_at_s_psi = false;
    bool ok = true;
};

/// For every splitting: the global root number of the minus part, the value
/// of nu at the image, and the product of the local values over V; all three
/// must agree, and nu(s_psi.) must be 1.
FactorizationReport nu_factorization_check(const GlobalParameter& gp,
                                           const std::vector<std::string>& v);

/// Arthur's sign character from the global Rankin-Selberg table.
BitVec global_arthur_sign_character(const GlobalParameter& gp);

/// The multiplicity character eps_psi. = eps^Art * nu. The sign character
/// may be overridden by an explicitly supplied one.
BitVec epsilon_psi(const GlobalParameter& gp);
BitVec epsilon_psi(const GlobalParameter& gp, const std::optional<BitVec>& art_override);

/// All tuples (chi_v)_{v in V} of local characters whose diagonal pullback
/// equals the target character; exact enumeration by F2 linear algebra.
std::vector<std::vector<BitVec>> character_constraint_set(const GlobalParameter& gp,
                                                          const std::vector<std::string>& v);
std::vector<std::vector<BitVec>> character_constraint_set(const GlobalParameter& gp,
                                                          const BitVec& target,
                                                          const std::vector<std::string>& v);

struct GlobalMemberTuple {
    std::vector<std::string> labels;       // one per place, in V order
    std::vector<BitVec> characters;
    long long multiplicity = 1;
};

/// Member tuples of the global packet cut out by the multiplicity character:
/// one member per place of V, character tuple in the constraint set,
/// multiplicity the product of copy multiplicities. Unramified places
/// without a supplied packet use the canonical spherical singleton.
std::vector<GlobalMemberTuple> global_packet_members(const GlobalParameter& gp,
                                                     const std::map<std::string, PacketModel>& packets,
                                                     const std::vector<std::string>& v);
std::vector<GlobalMemberTuple> global_packet_members(const GlobalParameter& gp,
                                                     const std::map<std::string, PacketModel>& packets,
                                                     const BitVec& target,
                                                     const std::vector<std::string>& v);

struct StableRow {
    Splitting splitting;
    EndoscopicDatum datum;
    long long s_order = 1;        // |S_psi.|
    long long center = 1;         // |Z_{(G!)^vee}|
    Rat iota;                     // 1/center
    Rat sbar_order;               // |S_psi.| / center
    bool identity_ok = false;     // iota * sbar^{-1} == |S_psi.|^{-1}
};

/// For every splitting of a discrete parameter, the endoscopic datum and the
/// exact coefficient identity iota(G~,G!) |Sbar|^{-1} = |S_psi.|^{-1}.
std::vector<StableRow> stable_coefficient_table(const GlobalParameter& gp);

} // namespace mpcalc
