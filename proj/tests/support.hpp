#pragma once

// Shared helpers for the test suites: reference fixtures and randomized
// catalog / global-fixture generators with deterministic seeding.

#include <algorithm>
#include <random>
#include <string>

#include "mpcalc/epsilon.hpp"
#include "mpcalc/fixtures.hpp"
#include "mpcalc/global.hpp"

namespace mpcalc::testing {

inline const Catalog& f1() {
    static const Catalog cat = Catalog::from_string(fixtures::f1());
    return cat;
}

inline const Catalog& f1x() {
    static const Catalog cat = Catalog::from_string(fixtures::f1x());
    return cat;
}

using Rng = std::mt19937_64;

inline int coin(Rng& rng) { return static_cast<int>(rng() & 1); }
inline int pick(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}
inline int random_sign(Rng& rng) { return coin(rng) ? 1 : -1; }

struct RandomCatalogOptions {
    int min_constituents = 2;
    int max_constituents = 3;
    int max_dim = 3;
    bool allow_dual_pairs = true;
    bool allow_unramified = true;
    bool force_symplectic = false;   // guarantee one symplectic constituent
};

/// A random consistent local catalog: self-dual constituents with root
/// numbers satisfying root^2 = det(-1), optional dual pairs, optional
/// unramified quadratic character.
inline Json random_catalog_json(Rng& rng, const RandomCatalogOptions& opt = {}) {
    Json chars = Json::array();
    Json cons = Json::array();
    int n = pick(rng, opt.min_constituents, opt.max_constituents);
    if (opt.force_symplectic) {
        cons.push_back(Json{{"id", "sp"}, {"dim", 2}, {"duality", "symplectic"},
                            {"det_at_minus_one", 1}, {"root_number", coin(rng) ? "1" : "-1"}});
    }
    for (int i = 0; i < n; ++i) {
        std::string id = "c" + std::to_string(i);
        int dim = pick(rng, 1, opt.max_dim);
        if (opt.allow_dual_pairs && dim <= 2 && rng() % 5 == 0) {
            int det = random_sign(rng);
            cons.push_back(Json{{"id", id + "p"}, {"dim", dim},
                                {"duality", Json{{"dual", id + "q"}}}, {"det_at_minus_one", det}});
            cons.push_back(Json{{"id", id + "q"}, {"dim", dim},
                                {"duality", Json{{"dual", id + "p"}}}, {"det_at_minus_one", det}});
            continue;
        }
        bool symplectic = dim % 2 == 0 && coin(rng);
        int det = symplectic ? 1 : random_sign(rng);
        std::string root = det == 1 ? (coin(rng) ? "1" : "-1") : (coin(rng) ? "i" : "-i");
        Json c{{"id", id}, {"dim", dim},
               {"duality", symplectic ? Json("symplectic") : Json("orthogonal")},
               {"det_at_minus_one", det}, {"root_number", root}};
        if (!symplectic) {
            std::string qid = "q" + std::to_string(i);
            chars.push_back(Json{{"id", qid}, {"value_at_minus_one", det}});
            c["det_character"] = qid;
        }
        cons.push_back(c);
    }
    if (opt.allow_unramified && coin(rng)) {
        int frob = random_sign(rng);
        chars.push_back(Json{{"id", "u"}, {"value_at_minus_one", 1}, {"is_unramified", true},
                             {"frobenius_value", frob}});
        cons.push_back(Json{{"id", "u"}, {"dim", 1}, {"duality", "orthogonal"},
                            {"det_at_minus_one", 1}, {"root_number", "1"},
                            {"is_unramified_character", true}, {"det_character", "u"}});
    }
    return Json{{"quadratic_characters", chars}, {"constituents", cons}};
}

inline Catalog random_catalog(Rng& rng, const RandomCatalogOptions& opt = {}) {
    return Catalog::from_json(random_catalog_json(rng, opt));
}

/// A random packet model over psi: members with random labels, characters,
/// copy multiplicities.
inline PacketModel random_packet(Rng& rng, const ArthurParameter& psi) {
    ComponentGroup g = component_group(psi);
    std::vector<PacketMember> members;
    int labels = pick(rng, 0, 4);
    for (int i = 0; i < labels; ++i) {
        std::string label = "m" + std::to_string(i);
        int fibers = pick(rng, 1, 2);
        for (int f = 0; f < fibers; ++f) {
            BitVec chi(g.dim());
            for (std::size_t k = 0; k < g.dim(); ++k) chi.set(k, coin(rng));
            long long copies = pick(rng, 1, 2);
            bool duplicate = false;
            for (const PacketMember& m : members)
                if (m.label == label && m.character == chi) duplicate = true;
            if (duplicate) continue;
            for (long long c = 1; c <= copies; ++c)
                members.push_back({label, chi, static_cast<int>(c), false, false});
        }
    }
    return PacketModel(psi, std::move(members));
}

/// Random global fixture: a few places with random catalogs, self-dual
/// cuspidal entries with per-place localizations, global root numbers
/// computed consistently as the product of the local ones.
struct RandomGlobalFixture {
    Json doc;
    std::vector<std::string> cuspidal_ids;
    std::vector<std::string> places;
};

inline Mu4 localization_epsilon(const Catalog& cat, const Json& entries) {
    std::map<std::pair<std::string, int>, long long> multiset;
    for (const Json& e : entries) {
        HalfInt sh = e.contains("shift") ? HalfInt::parse(e["shift"].get<std::string>()) : HalfInt{0};
        multiset[{e["constituent"].get<std::string>(), sh.twice}] += e["mult"].get<int>();
    }
    return lf_multiset_epsilon(cat, multiset);
}

/// One random localization multiset of the given dimension for a self-dual
/// entry of the given type: same-type self-dual constituents come freely,
/// opposite-type ones in even multiplicity or shifted pairs.
inline Json random_localization(Rng& rng, const Catalog& cat, int target_dim, bool symplectic) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Json entries = Json::array();
        int remaining = target_dim;
        bool ok = true;
        while (remaining > 0) {
            // option: (id, mode) with mode 0 = single, 1 = even pair, 2 = shifted pair
            std::vector<std::pair<std::string, int>> options;
            for (const std::string& id : cat.constituent_ids()) {
                const Constituent& c = cat.constituent(id);
                if (!c.self_dual()) {
                    if (id < c.dual_id && 2 * c.dim <= remaining) options.push_back({id, 1});
                    continue;
                }
                if (c.symplectic() == symplectic && c.dim <= remaining) options.push_back({id, 0});
                if (2 * c.dim <= remaining) {
                    options.push_back({id, 2});
                    if (c.symplectic() != symplectic) options.push_back({id, 1});
                }
            }
            if (options.empty()) { ok = false; break; }
            auto [id, mode] = options[static_cast<std::size_t>(rng() % options.size())];
            const Constituent& c = cat.constituent(id);
            if (mode == 0) {
                entries.push_back(Json{{"constituent", id}, {"shift", "0"}, {"mult", 1}});
                remaining -= c.dim;
            } else if (mode == 1 && !c.self_dual()) {
                entries.push_back(Json{{"constituent", id}, {"shift", "0"}, {"mult", 1}});
                entries.push_back(Json{{"constituent", c.dual_id}, {"shift", "0"}, {"mult", 1}});
                remaining -= 2 * c.dim;
            } else if (mode == 1) {
                entries.push_back(Json{{"constituent", id}, {"shift", "0"}, {"mult", 2}});
                remaining -= 2 * c.dim;
            } else {
                // a shifted pair (c |.|^{1/2}, c |.|^{-1/2})
                entries.push_back(Json{{"constituent", id}, {"shift", "1/2"}, {"mult", 1}});
                entries.push_back(Json{{"constituent", id}, {"shift", "-1/2"}, {"mult", 1}});
                remaining -= 2 * c.dim;
            }
        }
        if (ok && remaining == 0) return entries;
    }
    fail(ErrorKind::Consistency, "random_localization: no multiset of dimension " +
         std::to_string(target_dim));
}

/// Dimensions representable by the catalog's atoms for a self-dual entry of
/// the given type: same-type constituents singly, anything else in pairs.
inline std::vector<int> achievable_dims(const Catalog& cat, int max_dim, bool symplectic) {
    std::vector<char> dp(static_cast<std::size_t>(max_dim) + 1, 0);
    dp[0] = 1;
    std::vector<int> units;
    for (const std::string& id : cat.constituent_ids()) {
        const Constituent& c = cat.constituent(id);
        if (c.self_dual()) {
            if (c.symplectic() == symplectic) units.push_back(c.dim);
            units.push_back(2 * c.dim);
        } else if (id < c.dual_id) {
            units.push_back(2 * c.dim);
        }
    }
    for (int d = 1; d <= max_dim; ++d)
        for (int u : units)
            if (u <= d && dp[d - u]) dp[d] = 1;
    std::vector<int> out;
    for (int d = 1; d <= max_dim; ++d)
        if (dp[d]) out.push_back(d);
    return out;
}

inline RandomGlobalFixture random_global_fixture(Rng& rng, int num_cuspidals) {
    for (int outer = 0; outer < 50; ++outer) {
        RandomGlobalFixture fx;
        fx.places = {"v1", "v2"};
        Json places = Json::array();
        std::vector<Catalog> catalogs;
        for (const std::string& p : fx.places) {
            RandomCatalogOptions opt;
            opt.min_constituents = 2;
            opt.max_constituents = 3;
            opt.max_dim = 2;
            opt.force_symplectic = p == "v1";
            Json cj = random_catalog_json(rng, opt);
            catalogs.push_back(Catalog::from_json(cj));
            places.push_back(Json{{"id", p}, {"catalog", cj}});
        }
        auto intersect = [&](bool symplectic) {
            std::vector<int> dims = achievable_dims(catalogs[0], 4, symplectic);
            std::vector<int> d2 = achievable_dims(catalogs[1], 4, symplectic);
            std::vector<int> both;
            for (int d : dims)
                if (std::find(d2.begin(), d2.end(), d) != d2.end()) both.push_back(d);
            return both;
        };
        std::vector<int> dims_orth = intersect(false);
        std::vector<int> dims_symp;
        for (int d : intersect(true))
            if (d % 2 == 0) dims_symp.push_back(d);   // symplectic entries have even dim
        if (dims_orth.empty() && dims_symp.empty()) continue;

        Json cuspidals = Json::array();
        bool fixture_ok = true;
        for (int i = 0; i < num_cuspidals && fixture_ok; ++i) {
            std::string id = "f" + std::to_string(i);
            bool symplectic = dims_symp.empty() ? false : (dims_orth.empty() || coin(rng));
            const std::vector<int>& dims = symplectic ? dims_symp : dims_orth;
            bool made = false;
            for (int attempt = 0; attempt < 200 && !made; ++attempt) {
                int dim = dims[static_cast<std::size_t>(rng() % dims.size())];
                if (symplectic && dim % 2 != 0) continue;
                try {
                    Json locs = Json::object();
                    Mu4 product = Mu4::one();
                    for (std::size_t k = 0; k < fx.places.size(); ++k) {
                        Json entries = random_localization(rng, catalogs[k], dim, symplectic);
                        product *= localization_epsilon(catalogs[k], entries);
                        locs[fx.places[k]] = entries;
                    }
                    if (!product.is_real()) continue;
                    cuspidals.push_back(Json{{"id", id}, {"dim", dim},
                                             {"duality", symplectic ? "symplectic" : "orthogonal"},
                                             {"global_root_number", product.sign("fixture root")},
                                             {"localizations", locs}});
                    made = true;
                } catch (const Error&) {
                    // dead-ended multiset; retry
                }
            }
            if (!made) fixture_ok = false;
        }
        if (!fixture_ok) continue;
        for (int i = 0; i < num_cuspidals; ++i) fx.cuspidal_ids.push_back("f" + std::to_string(i));
        fx.doc = Json{{"places", places}, {"global_cuspidals", cuspidals}};
        return fx;
    }
    fail(ErrorKind::Consistency, "random_global_fixture: could not build a consistent fixture");
}

/// The discrete parameter using every cuspidal of the fixture once, with b
/// chosen by the type rule (odd for symplectic entries, even for orthogonal).
inline std::vector<GlobalSummand> discrete_summands(Rng& rng, const GlobalCatalog& gcat,
                                                    const std::vector<std::string>& ids) {
    std::vector<GlobalSummand> sums;
    for (const std::string& id : ids) {
        const GlobalCuspidal& c = gcat.cuspidal(id);
        int b = c.symplectic() ? 2 * pick(rng, 1, 2) - 1 : 2 * pick(rng, 1, 2);
        sums.push_back({id, b, 1});
    }
    return sums;
}

} // namespace mpcalc::testing
