#include "mpcalc/packets.hpp"

#include <algorithm>
#include <set>

namespace mpcalc {

PacketModel::PacketModel(ArthurParameter psi, std::vector<PacketMember> members)
    : psi_(std::move(psi)), group_(component_group(psi_)), members_(std::move(members)) {
    std::stable_sort(members_.begin(), members_.end(), [](const PacketMember& a, const PacketMember& b) {
        if (a.label != b.label) return a.label < b.label;
        if (a.character != b.character) return a.character < b.character;
        return a.copy_index < b.copy_index;
    });
    validate();
}

void PacketModel::validate() const {
    std::set<std::tuple<std::string, std::string, int>> triples;
    std::map<std::pair<std::string, std::string>, std::set<int>> copies;
    std::map<std::string, long long> label_mult;
    int spherical_count = 0;
    Classification cls = classify(psi_);
    for (const PacketMember& m : members_) {
        if (m.character.size() != group_.dim())
            fail(ErrorKind::Consistency, "packet member " + m.label +
                 ": character has wrong dimension for the component group");
        if (m.copy_index < 1)
            fail(ErrorKind::Consistency, "packet member " + m.label + ": copy index must be >= 1");
        if (!triples.insert({m.label, m.character.str(), m.copy_index}).second)
            fail(ErrorKind::Consistency, "packet member (" + m.label + ", " + m.character.str() +
                 ", " + std::to_string(m.copy_index) + ") is duplicated");
        copies[{m.label, m.character.str()}].insert(m.copy_index);
        label_mult[m.label] += 1;
        if (m.spherical) {
            if (++spherical_count > 1)
                fail(ErrorKind::Consistency, "packet has more than one spherical member");
            if (!m.character.is_zero())
                fail(ErrorKind::Consistency, "spherical member " + m.label + " must carry the trivial character");
            if (!cls.unramified)
                fail(ErrorKind::Consistency, "spherical member " + m.label +
                     " on a packet whose parameter is not unramified");
        }
    }
    // copy indices enumerate 1..m within each (label, character) fiber
    for (const auto& [key, set] : copies) {
        int expect = 1;
        for (int k : set) {
            if (k != expect)
                fail(ErrorKind::Consistency, "packet member " + key.first +
                     ": copy indices must enumerate 1..m, found gap at " + std::to_string(expect));
            ++expect;
        }
    }
    // L-packet members: multiplicity one, pairwise distinct characters that
    // pull back from the component group of phi_psi
    std::set<std::string> l_chars;
    std::vector<BitVec> kernel;
    bool kernel_ready = false;
    for (const PacketMember& m : members_) {
        if (!m.in_l_packet) continue;
        if (label_mult[m.label] != 1)
            fail(ErrorKind::Consistency, "L-packet member " + m.label + " must have multiplicity 1");
        if (!l_chars.insert(m.character.str()).second)
            fail(ErrorKind::Consistency, "L-packet members must have pairwise distinct characters");
        if (!kernel_ready) {
            kernel = component_map_to_phi(psi_).matrix.kernel_basis();
            kernel_ready = true;
        }
        for (const BitVec& k : kernel)
            if (m.character.dot(k))
                fail(ErrorKind::Consistency, "L-packet member " + m.label +
                     ": character does not pull back from the component group of phi_psi");
    }
}

long long PacketModel::multiplicity(const std::string& label, const BitVec& chi) const {
    long long n = 0;
    for (const PacketMember& m : members_)
        if (m.label == label && m.character == chi) ++n;
    return n;
}

PacketModel PacketModel::from_json(const Catalog& cat, const Json& j) {
    if (!j.is_object() || !j.contains("parameter") || !j.contains("members"))
        fail(ErrorKind::Schema, "packet literal requires \"parameter\" and \"members\"");
    ArthurParameter psi = ArthurParameter::from_json(cat, j["parameter"]);
    std::vector<PacketMember> members;
    if (!j["members"].is_array()) fail(ErrorKind::Schema, "packet members must be an array");
    for (const Json& mj : j["members"]) {
        PacketMember m;
        if (!mj.contains("label") || !mj["label"].is_string())
            fail(ErrorKind::Schema, "packet member requires string field \"label\"");
        m.label = mj["label"].get<std::string>();
        if (!mj.contains("character") || !mj["character"].is_string())
            fail(ErrorKind::Schema, "packet member requires bit-string field \"character\"");
        m.character = BitVec::parse(mj["character"].get<std::string>());
        m.copy_index = mj.contains("copy") ? mj["copy"].get<int>() : 1;
        m.spherical = mj.contains("spherical") && mj["spherical"].get<bool>();
        m.in_l_packet = mj.contains("in_l_packet") && mj["in_l_packet"].get<bool>();
        members.push_back(std::move(m));
    }
    return PacketModel(std::move(psi), std::move(members));
}

Json PacketModel::to_json() const {
    Json mj = Json::array();
    for (const PacketMember& m : members_) {
        Json j{{"label", m.label}, {"character", m.character.str()}, {"copy", m.copy_index}};
        if (m.spherical) j["spherical"] = true;
        if (m.in_l_packet) j["in_l_packet"] = true;
        mj.push_back(j);
    }
    return Json{{"parameter", psi_.to_json()}, {"members", mj}};
}

std::string coefficient_vector_str(const CoefficientVector& v) {
    std::string out;
    for (const auto& [label, c] : v) {
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        long long a = c > 0 ? c : -c;
        if (a != 1) out += std::to_string(a) + "*";
        out += label;
    }
    return out.empty() ? "0" : out;
}

CoefficientVector t_vector(const PacketModel& pm, const BitVec& x) {
    Distinguished d = distinguished_elements(pm.parameter());
    BitVec shifted = d.x_psi ^ x;
    CoefficientVector out;
    for (const PacketMember& m : pm.members())
        out[m.label] += m.character.pair(shifted);
    return out;
}

CoefficientVector fourier_pi(const PacketModel& pm, const BitVec& chi) {
    const ComponentGroup& g = pm.group();
    if (chi.size() != g.dim())
        fail(ErrorKind::Consistency, "fourier_pi: character has wrong dimension");
    Distinguished d = distinguished_elements(pm.parameter());
    CoefficientVector sum;
    for (const BitVec& x : g.elements()) {
        int coeff = chi.pair(d.x_psi ^ x);
        for (const auto& [label, c] : t_vector(pm, x)) sum[label] += coeff * c;
    }
    CoefficientVector out;
    for (const auto& [label, total] : sum) {
        if (total % g.order() != 0)
            fail(ErrorKind::Consistency, "fourier_pi: coefficient of " + label +
                 " is not divisible by the group order");
        long long c = total / g.order();
        if (c != 0) out[label] = c;
    }
    return out;
}

CoefficientVector transfer_vector(const PacketModel& pm, const Splitting& s) {
    int eps = epsilon_minus_part(pm.parameter(), s);
    CoefficientVector out = t_vector(pm, splitting_image(pm.parameter(), s));
    if (eps == -1)
        for (auto& [label, c] : out) c = -c;
    return out;
}

PacketModel build_principal_packet(const Catalog& cat, const std::string& zeta, int n) {
    if (n < 1) fail(ErrorKind::Consistency, "build_principal_packet: n must be positive");
    const Constituent& c = cat.constituent(zeta);
    if (c.dim != 1 || c.sl2_dim != 1 || !c.self_dual())
        fail(ErrorKind::Consistency, "build_principal_packet: " + zeta + " is not a quadratic character constituent");
    ArthurParameter psi(cat, {{zeta, 2 * n, 1}});
    BitVec trivial(1), sign(1);
    sign.set(0, 1);
    std::vector<PacketMember> members;
    members.push_back({"omega_plus(" + zeta + ")", trivial, 1, c.is_unramified_character, false});
    members.push_back({"omega_minus(" + zeta + ")", sign, 1, false, false});
    return PacketModel(std::move(psi), std::move(members));
}

PacketModel relabel_variation(const PacketModel& pm, const std::string& square_class) {
    const Catalog& cat = pm.parameter().catalog();
    const QuadraticCharacter& zeta = cat.character_of_square_class(square_class);
    BitVec delta = delta_c_character(pm.parameter(), square_class);

    std::vector<Summand> twisted;
    for (const Summand& s : pm.parameter().summands())
        twisted.push_back({cat.twist(s.constituent, zeta.id), s.b, s.mult});
    ArthurParameter psi_zeta(cat, std::move(twisted));

    // characters move by delta_c, then get re-indexed through the bijection
    // of I+ keys (phi, b) -> (phi.zeta, b)
    ComponentGroup g_old = pm.group();
    ComponentGroup g_new = component_group(psi_zeta);
    std::vector<int> position(g_old.dim(), -1);
    for (std::size_t i = 0; i < g_old.dim(); ++i) {
        const KeyInfo& k = g_old.basis()[i];
        position[i] = g_new.index_of(cat.twist(k.id, zeta.id), k.b);
        if (position[i] < 0)
            fail(ErrorKind::Consistency, "twist of the summand " + k.str() +
                 " is not a symplectic-type key of the twisted parameter");
    }
    bool new_unramified = classify(psi_zeta).unramified;
    std::vector<PacketMember> members;
    for (const PacketMember& m : pm.members()) {
        PacketMember nm = m;
        BitVec moved = m.character ^ delta;
        nm.character = g_new.zero();
        for (std::size_t i = 0; i < g_old.dim(); ++i)
            nm.character.set(static_cast<std::size_t>(position[i]), moved.at(i));
        nm.spherical = m.spherical && new_unramified;
        nm.in_l_packet = false;   // not transported across the variation
        members.push_back(std::move(nm));
    }
    return PacketModel(std::move(psi_zeta), std::move(members));
}

PacketModel relabel_anti_tempered(const PacketModel& tempered, const ArthurParameter& psi,
                                  const BitVec& mu) {
    const Catalog& cat = psi.catalog();
    ArthurParameter phi = dual_parameter(psi);
    if (!(tempered.parameter() == phi))
        fail(ErrorKind::Consistency, "relabel_anti_tempered: supplied packet is for " +
             tempered.parameter().str() + ", expected the dual " + phi.str());
    BitVec mt = mu_tilde(psi, mu);

    ComponentGroup g_psi = component_group(psi);
    ComponentGroup g_phi = tempered.group();
    std::vector<int> position(g_psi.dim(), -1);
    for (std::size_t i = 0; i < g_psi.dim(); ++i) {
        const KeyInfo& k = g_psi.basis()[i];
        const Constituent& c = cat.constituent(k.id);
        position[i] = g_phi.index_of(cat.sl2_swap(k.id, k.b), c.sl2_dim);
        if (position[i] < 0)
            fail(ErrorKind::Consistency, "dual of the summand " + k.str() +
                 " is not a symplectic-type key of the dual parameter");
    }
    bool new_unramified = classify(psi).unramified;
    std::vector<PacketMember> members;
    for (const PacketMember& m : tempered.members()) {
        PacketMember nm;
        nm.label = m.label + "^";
        // the member of character chi.mu~ is relabeled with character chi
        BitVec chi_on_psi = g_psi.zero();
        for (std::size_t i = 0; i < g_psi.dim(); ++i)
            chi_on_psi.set(i, m.character.at(static_cast<std::size_t>(position[i])));
        nm.character = chi_on_psi ^ mt;
        nm.copy_index = m.copy_index;
        nm.spherical = m.spherical && new_unramified;
        nm.in_l_packet = false;
        members.push_back(std::move(nm));
    }
    return PacketModel(psi, std::move(members));
}

} // namespace mpcalc
