#include "mpcalc/global.hpp"

#include <algorithm>
#include <set>

namespace mpcalc {

namespace {

bool global_symplectic_type(const GlobalCuspidal& c, int b) {
    if (!c.self_dual())
        fail(ErrorKind::NotSelfDual, "global cuspidal " + c.id + " is not self-dual");
    return c.symplectic() != (b % 2 == 0);
}

std::vector<GlobalSummand> canonicalize(std::vector<GlobalSummand> in) {
    std::map<std::pair<std::string, int>, long long> merged;
    for (const GlobalSummand& s : in) {
        if (s.b < 1 || s.mult < 1)
            fail(ErrorKind::Consistency, "global summand with b or mult < 1");
        merged[{s.cuspidal, s.b}] += s.mult;
    }
    std::vector<GlobalSummand> out;
    for (const auto& [key, m] : merged)
        out.push_back({key.first, key.second, static_cast<int>(m)});
    return out;
}

} // namespace

GlobalParameter::GlobalParameter(const GlobalCatalog& cat, std::vector<GlobalSummand> summands)
    : cat_(&cat), summands_(canonicalize(std::move(summands))) {
    long long total = 0;
    for (const GlobalSummand& s : summands_) {
        const GlobalCuspidal& c = cat.cuspidal(s.cuspidal);
        total += static_cast<long long>(c.dim) * s.b * s.mult;
        KeyInfo k;
        k.id = s.cuspidal;
        k.b = s.b;
        k.mult = s.mult;
        if (!c.self_dual()) {
            k.bucket = Bucket::Jpair;
            auto it = std::find_if(summands_.begin(), summands_.end(), [&](const GlobalSummand& t) {
                return t.cuspidal == c.dual_id && t.b == s.b;
            });
            if (it == summands_.end() || it->mult != s.mult)
                fail(ErrorKind::Consistency, "global summand " + s.cuspidal + "*r(" + std::to_string(s.b) +
                     ") lacks a dual partner of equal b and multiplicity");
            if (!(s.cuspidal < c.dual_id)) continue;
            k.partner = c.dual_id;
            k.unit_dim = 2LL * c.dim * s.b;
        } else {
            k.bucket = global_symplectic_type(c, s.b) ? Bucket::Iplus : Bucket::Iminus;
            k.unit_dim = static_cast<long long>(c.dim) * s.b;
            if (k.bucket == Bucket::Iminus && s.mult % 2 != 0)
                fail(ErrorKind::Consistency, "global summand " + s.cuspidal + "*r(" + std::to_string(s.b) +
                     ") is of orthogonal type and requires even multiplicity");
        }
        keys_.push_back(k);
    }
    if (total % 2 != 0)
        fail(ErrorKind::Consistency, "global parameter has odd total dimension");
}

GlobalParameter GlobalParameter::from_json(const GlobalCatalog& cat, const Json& j) {
    if (!j.is_array()) fail(ErrorKind::Schema, "global parameter literal must be an array");
    std::vector<GlobalSummand> sums;
    for (const Json& sj : j) {
        GlobalSummand s;
        if (!sj.contains("cuspidal") || !sj["cuspidal"].is_string())
            fail(ErrorKind::Schema, "global summand requires string field \"cuspidal\"");
        s.cuspidal = sj["cuspidal"].get<std::string>();
        if (!sj.contains("b") || !sj["b"].is_number_integer())
            fail(ErrorKind::Schema, "global summand requires integer field \"b\"");
        s.b = sj["b"].get<int>();
        s.mult = sj.contains("mult") ? sj["mult"].get<int>() : 1;
        sums.push_back(s);
    }
    return GlobalParameter(cat, std::move(sums));
}

Json GlobalParameter::to_json() const {
    Json arr = Json::array();
    for (const GlobalSummand& s : summands_)
        arr.push_back(Json{{"cuspidal", s.cuspidal}, {"b", s.b}, {"mult", s.mult}});
    return arr;
}

long long GlobalParameter::dim() const {
    long long total = 0;
    for (const GlobalSummand& s : summands_)
        total += static_cast<long long>(cat_->cuspidal(s.cuspidal).dim) * s.b * s.mult;
    return total;
}

bool GlobalParameter::good_parity() const {
    for (const KeyInfo& k : keys_)
        if (k.bucket != Bucket::Iplus) return false;
    return true;
}

bool GlobalParameter::discrete() const {
    for (const KeyInfo& k : keys_)
        if (k.bucket != Bucket::Iplus || k.mult != 1) return false;
    return true;
}

std::string GlobalParameter::str() const {
    if (summands_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const GlobalSummand& s = summands_[i];
        if (i) out += " + ";
        if (s.mult > 1) out += std::to_string(s.mult) + "(";
        out += s.cuspidal + "*r(" + std::to_string(s.b) + ")";
        if (s.mult > 1) out += ")";
    }
    return out;
}

Localization localize(const GlobalParameter& gp, const std::string& place_id) {
    const GlobalCatalog& cat = gp.catalog();
    const Place& place = cat.place(place_id);
    bool unramified = true;

    std::vector<Summand> shift0;
    std::map<std::tuple<std::string, int, int>, long long> shifted_merged;
    for (const GlobalSummand& s : gp.summands()) {
        const GlobalCuspidal& c = cat.cuspidal(s.cuspidal);
        auto it = c.localizations.find(place_id);
        if (it == c.localizations.end())
            fail(ErrorKind::MissingLocalization, "global cuspidal " + s.cuspidal +
                 " has no localization at place " + place_id);
        for (const LocalizationEntry& e : it->second) {
            if (!place.catalog.constituent(e.constituent).is_unramified_character)
                unramified = false;
            if (e.shift.is_zero())
                shift0.push_back({e.constituent, s.b, s.mult * e.mult});
            else
                shifted_merged[{e.constituent, s.b, e.shift.twice}] +=
                    static_cast<long long>(s.mult) * e.mult;
        }
    }
    ArthurParameter local_param(place.catalog, std::move(shift0));
    std::vector<ShiftedSummand> shifted;
    for (const auto& [key, m] : shifted_merged)
        shifted.push_back({std::get<0>(key), std::get<1>(key), HalfInt{std::get<2>(key)},
                           static_cast<int>(m)});

    // component-group map: the global generator at key i moves, at each
    // local shift-0 key (c, b_i), by the localized multiplicity mod 2
    ComponentGroup local_group = component_group(local_param);
    ComponentGroup global_group = component_group_of_keys(gp.keys());
    F2Matrix map(local_group.dim(), global_group.dim());
    for (std::size_t col = 0; col < global_group.dim(); ++col) {
        const KeyInfo& gk = global_group.basis()[col];
        const GlobalCuspidal& c = cat.cuspidal(gk.id);
        const auto& entries = c.localizations.at(place_id);
        for (const LocalizationEntry& e : entries) {
            if (!e.shift.is_zero()) continue;
            int row = local_group.index_of(e.constituent, gk.b);
            if (row < 0) continue;   // lands in a J or I- key locally
            if (e.mult % 2 == 1)
                map.set(static_cast<std::size_t>(row), col, map.at(row, col) ^ 1);
        }
    }
    return Localization{place_id, std::move(local_param), std::move(shifted), std::move(map), unramified};
}

LocalizationDiagnostics localization_diagnostics(const GlobalParameter& gp,
                                                 const std::vector<std::string>& v0,
                                                 const std::string& u) {
    LocalizationDiagnostics diag;
    ComponentGroup g = component_group_of_keys(gp.keys());

    std::vector<F2Matrix> maps;
    std::size_t total_rows = 0;
    for (const std::string& v : v0) {
        maps.push_back(localize(gp, v).map);
        total_rows += maps.back().rows();
    }
    F2Matrix stacked(total_rows, g.dim());
    std::size_t r0 = 0;
    for (const F2Matrix& m : maps) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                stacked.set(r0 + r, c, m.at(r, c));
        r0 += m.rows();
    }
    diag.injective_into_v0 = stacked.rank() == g.dim();
    if (!diag.injective_into_v0) {
        auto kernel = stacked.kernel_basis();
        if (!kernel.empty()) diag.kernel_witness = kernel.front();
    }

    Localization lu = localize(gp, u);
    diag.surjective_at_u = lu.map.rank() == lu.map.rows();
    if (!diag.surjective_at_u) {
        // a nontrivial local character vanishing on the image
        F2Matrix transpose(lu.map.cols(), lu.map.rows());
        for (std::size_t r = 0; r < lu.map.rows(); ++r)
            for (std::size_t c = 0; c < lu.map.cols(); ++c)
                transpose.set(c, r, lu.map.at(r, c));
        auto kernel = transpose.kernel_basis();
        if (!kernel.empty()) diag.missed_character_at_u = kernel.front();
    }
    return diag;
}

BitVec nu_global(const GlobalParameter& gp) {
    const GlobalCatalog& cat = gp.catalog();
    ComponentGroup g = component_group_of_keys(gp.keys());
    BitVec nu = g.zero();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const KeyInfo& k = g.basis()[i];
        const GlobalCuspidal& c = cat.cuspidal(k.id);
        if (!c.global_root_number)
            fail(ErrorKind::Consistency, "global cuspidal " + k.id + " lacks a global root number");
        nu.set(i, *c.global_root_number == -1 && k.b % 2 == 1);
    }
    return nu;
}

int global_epsilon_minus_part(const GlobalParameter& gp, const Splitting& s) {
    const GlobalCatalog& cat = gp.catalog();
    const std::vector<KeyInfo>& keys = gp.keys();
    if (s.parts.size() != keys.size())
        fail(ErrorKind::Consistency, "splitting does not match the global key list");
    int eps = 1;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const KeyInfo& k = keys[i];
        if (k.bucket == Bucket::Jpair) continue;   // eps(phi.)eps(phi.^vee) = 1
        const GlobalCuspidal& c = cat.cuspidal(k.id);
        long long e = static_cast<long long>(k.b) * s.parts[i].second;
        if (*c.global_root_number == -1 && e % 2 == 1) eps = -eps;
    }
    return eps;
}

int local_epsilon_minus_part(const GlobalParameter& gp, const std::string& place_id,
                             const Splitting& s) {
    const GlobalCatalog& cat = gp.catalog();
    const Place& place = cat.place(place_id);
    const std::vector<KeyInfo>& keys = gp.keys();
    if (s.parts.size() != keys.size())
        fail(ErrorKind::Consistency, "splitting does not match the global key list");
    std::map<std::pair<std::string, int>, long long> entries;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const KeyInfo& k = keys[i];
        long long m2 = s.parts[i].second;
        if (m2 == 0) continue;
        std::vector<std::string> cusps{k.id};
        if (k.bucket == Bucket::Jpair) cusps.push_back(k.partner);
        for (const std::string& cusp_id : cusps) {
            const GlobalCuspidal& c = cat.cuspidal(cusp_id);
            auto it = c.localizations.find(place_id);
            if (it == c.localizations.end())
                fail(ErrorKind::MissingLocalization, "global cuspidal " + cusp_id +
                     " has no localization at place " + place_id);
            for (const LocalizationEntry& e : it->second)
                entries[{e.constituent, e.shift.twice}] += static_cast<long long>(e.mult) * k.b * m2;
        }
    }
    return lf_multiset_epsilon(place.catalog, entries)
        .sign("local epsilon of " + gp.str() + " at " + place_id);
}

FactorizationReport nu_factorization_check(const GlobalParameter& gp,
                                           const std::vector<std::string>& v) {
    const GlobalCatalog& cat = gp.catalog();
    FactorizationReport rep;
    std::set<std::string> v_set(v.begin(), v.end());

    // the factorization over V presumes everything is unramified outside V
    for (const GlobalSummand& s : gp.summands()) {
        const GlobalCuspidal& c = cat.cuspidal(s.cuspidal);
        for (const std::string& p : cat.place_ids()) {
            if (v_set.count(p)) continue;
            if (!c.unramified_places.count(p) && !cat.place(p).unramified)
                rep.violations.push_back("cuspidal " + s.cuspidal + " is not marked unramified at place " +
                                         p + " outside V");
        }
    }

    BitVec nu = nu_global(gp);
    Distinguished d = distinguished_of_keys(gp.keys());
    rep.nu_trivial_at_s_psi = nu.pair(d.x_psi) == 1;
    if (!rep.nu_trivial_at_s_psi)
        rep.violations.push_back("nu is nontrivial at the image of s_psi");

    for (const Splitting& s : enumerate_splittings_of_keys(gp.keys())) {
        FactorizationRow row;
        row.splitting = s;
        row.image = splitting_image_of_keys(gp.keys(), s);
        row.global_eps = global_epsilon_minus_part(gp, s);
        row.nu_value = nu.pair(row.image);
        int product = 1;
        for (const std::string& p : v) {
            int e = local_epsilon_minus_part(gp, p, s);
            row.local_eps[p] = e;
            product *= e;
        }
        row.ok = row.global_eps == row.nu_value && product == row.global_eps;
        if (!row.ok)
            rep.violations.push_back("mismatch at splitting with image " + row.image.str() +
                                     ": global " + std::to_string(row.global_eps) +
                                     ", nu " + std::to_string(row.nu_value) +
                                     ", local product " + std::to_string(product));
        rep.rows.push_back(std::move(row));
    }
    rep.ok = rep.violations.empty();
    return rep;
}

BitVec global_arthur_sign_character(const GlobalParameter& gp) {
    const GlobalCatalog& cat = gp.catalog();
    if (!gp.discrete())
        fail(ErrorKind::Consistency, "the sign character requires a discrete global parameter, got " + gp.str());
    ComponentGroup g = component_group_of_keys(gp.keys());
    BitVec eps = g.zero();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const KeyInfo& ki = g.basis()[i];
        const GlobalCuspidal& ci = cat.cuspidal(ki.id);
        int count = 0;
        for (std::size_t j = 0; j < g.dim(); ++j) {
            if (j == i) continue;
            const KeyInfo& kj = g.basis()[j];
            const GlobalCuspidal& cj = cat.cuspidal(kj.id);
            if (ci.symplectic() == cj.symplectic()) continue;
            if (std::min(ki.b, kj.b) % 2 == 0) continue;
            auto sign = cat.rs_sign(ki.id, kj.id);
            if (!sign)
                fail(ErrorKind::MissingRSEntry, "global Rankin-Selberg sign for {" + ki.id + ", " +
                     kj.id + "} is required and absent");
            if (*sign == -1) ++count;
        }
        eps.set(i, count % 2);
    }
    return eps;
}

BitVec epsilon_psi(const GlobalParameter& gp) {
    return global_arthur_sign_character(gp) ^ nu_global(gp);
}

BitVec epsilon_psi(const GlobalParameter& gp, const std::optional<BitVec>& art_override) {
    BitVec art = art_override ? *art_override : global_arthur_sign_character(gp);
    if (art.size() != component_group_of_keys(gp.keys()).dim())
        fail(ErrorKind::Consistency, "sign character override has the wrong dimension");
    if (art_override) {
        Distinguished d = distinguished_of_keys(gp.keys());
        if (art.pair(d.z) != 1)
            fail(ErrorKind::Consistency, "sign character override must be trivial on the central element");
    }
    return art ^ nu_global(gp);
}

std::vector<std::vector<BitVec>> character_constraint_set(const GlobalParameter& gp,
                                                          const std::vector<std::string>& v) {
    return character_constraint_set(gp, epsilon_psi(gp), v);
}

std::vector<std::vector<BitVec>> character_constraint_set(const GlobalParameter& gp,
                                                          const BitVec& target,
                                                          const std::vector<std::string>& v) {
    ComponentGroup g = component_group_of_keys(gp.keys());
    if (target.size() != g.dim())
        fail(ErrorKind::Consistency, "target character has the wrong dimension");

    std::vector<F2Matrix> maps;
    std::vector<std::size_t> dims;
    std::size_t total = 0;
    for (const std::string& p : v) {
        maps.push_back(localize(gp, p).map);
        dims.push_back(maps.back().rows());
        total += dims.back();
    }
    // diag^*(prod chi_v) = sum_v A_v^T chi_v over the stacked unknowns
    F2Matrix m(g.dim(), total);
    std::size_t c0 = 0;
    for (std::size_t k = 0; k < maps.size(); ++k) {
        for (std::size_t r = 0; r < maps[k].rows(); ++r)
            for (std::size_t c = 0; c < maps[k].cols(); ++c)
                m.set(c, c0 + r, maps[k].at(r, c));
        c0 += dims[k];
    }
    auto particular = m.solve(target);
    std::vector<std::vector<BitVec>> out;
    if (!particular) return out;   // nonempty iff the target lies in the image
    auto kernel = m.kernel_basis();
    if (kernel.size() > 20)
        fail(ErrorKind::Consistency, "character constraint set too large to enumerate");
    std::vector<BitVec> stacked_solutions;
    for (long long mask = 0; mask < (1LL << kernel.size()); ++mask) {
        BitVec x = *particular;
        for (std::size_t i = 0; i < kernel.size(); ++i)
            if (mask & (1LL << i)) x ^= kernel[i];
        stacked_solutions.push_back(x);
    }
    std::sort(stacked_solutions.begin(), stacked_solutions.end());
    for (const BitVec& x : stacked_solutions) {
        std::vector<BitVec> tuple;
        std::size_t off = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            BitVec chi(dims[k]);
            for (std::size_t i = 0; i < dims[k]; ++i) chi.set(i, x.at(off + i));
            tuple.push_back(chi);
            off += dims[k];
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

std::vector<GlobalMemberTuple> global_packet_members(const GlobalParameter& gp,
                                                     const std::map<std::string, PacketModel>& packets,
                                                     const std::vector<std::string>& v) {
    return global_packet_members(gp, packets, epsilon_psi(gp), v);
}

std::vector<GlobalMemberTuple> global_packet_members(const GlobalParameter& gp,
                                                     const std::map<std::string, PacketModel>& packets,
                                                     const BitVec& target,
                                                     const std::vector<std::string>& v) {
    std::vector<PacketModel> local_packets;
    for (const std::string& p : v) {
        Localization loc = localize(gp, p);
        auto it = packets.find(p);
        if (it != packets.end()) {
            if (!(it->second.parameter() == loc.shift0))
                fail(ErrorKind::Consistency, "packet supplied at place " + p +
                     " is for a different parameter than the localization");
            local_packets.push_back(it->second);
        } else if (loc.unramified) {
            // canonical spherical singleton with the trivial character
            std::vector<PacketMember> members;
            members.push_back({"spherical(" + p + ")", BitVec(component_group(loc.shift0).dim()), 1, true, false});
            local_packets.push_back(PacketModel(loc.shift0, std::move(members)));
        } else {
            fail(ErrorKind::MissingLocalization, "no packet supplied at ramified place " + p);
        }
    }

    std::vector<GlobalMemberTuple> out;
    for (const auto& tuple : character_constraint_set(gp, target, v)) {
        // per place: the labels carrying chi_v, with their copy multiplicities
        std::vector<std::vector<std::pair<std::string, long long>>> choices;
        bool empty = false;
        for (std::size_t k = 0; k < v.size(); ++k) {
            std::map<std::string, long long> mult;
            for (const PacketMember& m : local_packets[k].members())
                if (m.character == tuple[k]) mult[m.label] += 1;
            if (mult.empty()) { empty = true; break; }
            choices.emplace_back(mult.begin(), mult.end());
        }
        if (empty) continue;
        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            GlobalMemberTuple t;
            t.characters = tuple;
            for (std::size_t k = 0; k < choices.size(); ++k) {
                t.labels.push_back(choices[k][idx[k]].first);
                t.multiplicity *= choices[k][idx[k]].second;
            }
            out.push_back(std::move(t));
            if (out.size() > 1'000'000)
                fail(ErrorKind::Consistency, "global packet member enumeration too large");
            std::size_t k = choices.size();
            bool done = true;
            while (k > 0) {
                --k;
                if (++idx[k] < choices[k].size()) { done = false; break; }
                idx[k] = 0;
            }
            if (done) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const GlobalMemberTuple& a, const GlobalMemberTuple& b) {
        return a.labels < b.labels;
    });
    return out;
}

std::vector<StableRow> stable_coefficient_table(const GlobalParameter& gp) {
    if (!gp.discrete())
        fail(ErrorKind::Consistency, "stable coefficient table requires a discrete parameter");
    const std::vector<KeyInfo>& keys = gp.keys();
    long long s_order = 1LL << keys.size();
    std::vector<StableRow> out;
    for (const Splitting& s : enumerate_splittings_of_keys(keys)) {
        StableRow row;
        row.splitting = s;
        row.datum = splitting_to_endoscopic_keys(keys, s).datum;
        row.s_order = s_order;
        row.center = center_order(row.datum);
        row.iota = iota_coefficient(row.datum);
        row.sbar_order = Rat::of(s_order, row.center);
        row.identity_ok = row.iota * Rat::of(row.sbar_order.den, row.sbar_order.num) ==
                          Rat::of(1, s_order);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace mpcalc
