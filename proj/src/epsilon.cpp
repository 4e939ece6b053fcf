#include "mpcalc/epsilon.hpp"

#include <algorithm>

namespace mpcalc {

Mu4 epsilon_sl(const Catalog& cat, const std::string& constituent_id, int a) {
    const Constituent& c = cat.constituent(constituent_id);
    if (!c.self_dual())
        fail(ErrorKind::NotSelfDual, "epsilon_sl: constituent " + constituent_id + " is not self-dual");
    if (a < 1) fail(ErrorKind::Consistency, "epsilon_sl: a must be positive");
    Mu4 eps = c.root_number->pow(a);
    if (c.is_unramified_character) {
        const QuadraticCharacter& qc = cat.character(constituent_id);
        if (!qc.frobenius_value)
            fail(ErrorKind::MissingFrobenius, "epsilon_sl: unramified character " + constituent_id +
                 " lacks a Frobenius value");
        eps *= Mu4::of_sign(-*qc.frobenius_value).pow(a - 1);
    }
    return eps;
}

Mu4 lf_multiset_epsilon(const Catalog& cat,
                        const std::map<std::pair<std::string, int>, long long>& entries) {
    Mu4 eps = Mu4::one();
    for (const auto& [key, mult] : entries) {
        const auto& [id, twice_shift] = key;
        const Constituent& c = cat.constituent(id);
        if (twice_shift != 0) {
            auto partner = entries.find({c.dual_id, -twice_shift});
            if (partner == entries.end() || partner->second != mult)
                fail(ErrorKind::Consistency, "shifted summand " + id + "|.|^(" +
                     HalfInt{twice_shift}.str() + ") lacks a matching dual at the opposite shift");
            // each dual pair contributes det(-1); count it on the negative side
            if (twice_shift < 0) eps *= Mu4::of_sign(c.det_at_minus_one).pow(mult);
            continue;
        }
        if (c.self_dual()) {
            eps *= c.root_number->pow(mult);
        } else if (id < c.dual_id) {
            auto partner = entries.find({c.dual_id, 0});
            if (partner == entries.end() || partner->second != mult)
                fail(ErrorKind::Consistency, "summand " + id + " lacks a matching dual at shift 0");
            eps *= Mu4::of_sign(c.det_at_minus_one).pow(mult);
        }
    }
    return eps;
}

int epsilon_minus_part(const ArthurParameter& psi, const Splitting& s) {
    const Catalog& cat = psi.catalog();
    std::vector<KeyInfo> keys = summand_keys(psi);
    if (s.parts.size() != keys.size())
        fail(ErrorKind::Consistency, "splitting does not match the parameter's key list");
    Mu4 eps = Mu4::one();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const KeyInfo& k = keys[i];
        long long e = static_cast<long long>(k.b) * s.parts[i].second;
        const Constituent& c = cat.constituent(k.id);
        if (k.bucket == Bucket::Jpair)
            eps *= Mu4::of_sign(c.det_at_minus_one).pow(e);
        else
            eps *= c.root_number->pow(e);
    }
    return eps.sign("epsilon_minus_part of " + psi.str());
}

int epsilon_phi_psi_minus_part(const ArthurParameter& psi, const Splitting& s) {
    const Catalog& cat = psi.catalog();
    std::vector<KeyInfo> keys = summand_keys(psi);
    if (s.parts.size() != keys.size())
        fail(ErrorKind::Consistency, "splitting does not match the parameter's key list");
    for (const Summand& sm : psi.summands())
        if (!cat.constituent(sm.constituent).bounded)
            fail(ErrorKind::UnboundedConstituent, "constituent " + sm.constituent +
                 " is flagged unbounded; phi_psi is undefined");
    std::map<std::pair<std::string, int>, long long> entries;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const KeyInfo& k = keys[i];
        int m2 = s.parts[i].second;
        if (m2 == 0) continue;
        for (int h = 0; h < k.b; ++h) {
            int twice_shift = k.b - 1 - 2 * h;
            entries[{k.id, twice_shift}] += m2;
            if (k.bucket == Bucket::Jpair) entries[{k.partner, twice_shift}] += m2;
        }
    }
    return lf_multiset_epsilon(cat, entries).sign("epsilon_phi_psi_minus_part of " + psi.str());
}

BitVec nu_character(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    ComponentGroup g = component_group(psi);
    BitVec nu = g.zero();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const KeyInfo& k = g.basis()[i];
        int value = cat.constituent(k.id).root_number->pow(k.b)
                        .sign("nu component at " + k.str());
        nu.set(i, value == -1);
    }
    return nu;
}

DescentReport verify_descent(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    std::vector<KeyInfo> keys = summand_keys(psi);
    Classification cls = classify(psi);
    BitVec nu = nu_character(psi);
    DescentReport rep;

    std::map<BitVec, std::pair<int, int>> fiber_values;   // image -> (eps or -2, corrected)
    for (const Splitting& s : enumerate_splittings(psi)) {
        int eps = epsilon_minus_part(psi, s);
        // the quantity invariant across the elementary fiber moves: eps
        // times det(-1)^{b m''} over J keys and det(-1)^{b m''/2} over I-
        Mu4 corr = Mu4::one();
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const KeyInfo& k = keys[i];
            const Constituent& c = cat.constituent(k.id);
            long long m2 = s.parts[i].second;
            if (k.bucket == Bucket::Jpair)
                corr *= Mu4::of_sign(c.det_at_minus_one).pow(static_cast<long long>(k.b) * m2);
            else if (k.bucket == Bucket::Iminus)
                corr *= Mu4::of_sign(c.det_at_minus_one).pow(static_cast<long long>(k.b) * m2 / 2);
        }
        int corrected = eps * corr.sign("descent correction");
        BitVec x = splitting_image(psi, s);

        if (cls.good_parity && eps != (nu.pair(x)))
            rep.violations.push_back("eps(psi^{s=-1}) = " + std::to_string(eps) +
                                     " differs from nu at image " + x.str());
        auto [it, fresh] = fiber_values.emplace(x, std::make_pair(eps, corrected));
        if (!fresh) {
            if (cls.good_parity && it->second.first != eps)
                rep.violations.push_back("eps(psi^{s=-1}) not constant on the fiber over " + x.str());
            if (it->second.second != corrected)
                rep.violations.push_back("corrected epsilon not constant on the fiber over " + x.str());
        }
    }
    rep.fibers_checked = static_cast<long long>(fiber_values.size());
    rep.ok = rep.violations.empty();
    return rep;
}

namespace {

Splitting all_minus(const std::vector<KeyInfo>& keys) {
    Splitting s;
    for (const KeyInfo& k : keys) s.parts.push_back({0, k.mult});
    return s;
}

} // namespace

int epsilon_restriction(const ArthurParameter& psi) {
    return epsilon_minus_part(psi, all_minus(summand_keys(psi)));
}

int central_sign(const ArthurParameter& psi, const BitVec& chi) {
    Distinguished d = distinguished_elements(psi);
    return chi.pair(d.z) * epsilon_restriction(psi);
}

BitVec delta_c_character(const ArthurParameter& psi, const std::string& square_class) {
    const Catalog& cat = psi.catalog();
    const QuadraticCharacter& zeta = cat.character_of_square_class(square_class);
    ComponentGroup g = component_group(psi);
    BitVec delta = g.zero();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const KeyInfo& k = g.basis()[i];
        if (k.b % 2 == 0) continue;
        const Constituent& c = cat.constituent(k.id);       // symplectic: b odd on I+
        const Constituent& tw = cat.constituent(cat.twist(k.id, zeta.id));
        Mu4 ratio = Mu4::of_sign(zeta.value_at_minus_one).pow(c.dim / 2)
                  * (*c.root_number) * tw.root_number->inverse();
        delta.set(i, ratio.sign("delta_c component at " + k.str()) == -1);
    }
    return delta;
}

BitVec xu_character_anti_tempered(const ArthurParameter& psi) {
    Classification cls = classify(psi);
    if (!cls.good_parity || !cls.anti_tempered)
        fail(ErrorKind::UnsupportedXuCase, "parameter " + psi.str() +
             " is not anti-tempered of good parity");
    if (!cls.in_psi_star)
        fail(ErrorKind::UnsupportedXuCase, "parameter " + psi.str() +
             " contains an unramified character; outside the certified cases");
    int odd_b_keys = 0;
    bool all_b_one = true;
    bool odd_ok = true;
    for (const Summand& s : psi.summands()) {
        if (s.b != 1) all_b_one = false;
        if (s.b % 2 == 1 && s.b != 1) odd_ok = false;
        if (s.b % 2 == 1) {
            ++odd_b_keys;
            if (s.mult != 1) odd_ok = false;
        }
    }
    bool covered = all_b_one || odd_b_keys == 0 || (odd_b_keys == 1 && odd_ok);
    if (!covered)
        fail(ErrorKind::UnsupportedXuCase, "parameter " + psi.str() +
             " is outside the certified shapes; supply the character explicitly");
    return component_group(psi).zero();
}

BitVec mu_tilde(const ArthurParameter& psi, const BitVec& mu) {
    const Catalog& cat = psi.catalog();
    ComponentGroup g = component_group(psi);
    if (mu.size() != g.dim())
        fail(ErrorKind::Consistency, "mu has the wrong dimension for the component group of " + psi.str());
    ArthurParameter psihat = dual_parameter(psi);
    ComponentGroup gh = component_group(psihat);
    BitVec nu_hat_on_psi = g.zero();
    BitVec nu_hat = nu_character(psihat);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const KeyInfo& k = g.basis()[i];
        const Constituent& c = cat.constituent(k.id);
        int j = gh.index_of(cat.sl2_swap(k.id, k.b), c.sl2_dim);
        if (j < 0)
            fail(ErrorKind::Consistency, "dual of the summand " + k.str() +
                 " is not a symplectic-type key of the dual parameter");
        nu_hat_on_psi.set(i, nu_hat.at(static_cast<std::size_t>(j)));
    }
    return mu ^ nu_character(psi) ^ nu_hat_on_psi;
}

BitVec arthur_sign_character(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    if (!classify(psi).discrete)
        fail(ErrorKind::Consistency, "arthur_sign_character requires a discrete parameter, got " + psi.str());
    ComponentGroup g = component_group(psi);
    BitVec eps = g.zero();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const KeyInfo& ki = g.basis()[i];
        const Constituent& ci = cat.constituent(ki.id);
        int count = 0;
        for (std::size_t j = 0; j < g.dim(); ++j) {
            if (j == i) continue;
            const KeyInfo& kj = g.basis()[j];
            const Constituent& cj = cat.constituent(kj.id);
            if (ci.symplectic() == cj.symplectic()) continue;   // tensor not symplectic
            if (std::min(ki.b, kj.b) % 2 == 0) continue;
            auto sign = cat.rs_sign(ki.id, kj.id);
            if (!sign)
                fail(ErrorKind::MissingRSEntry, "Rankin-Selberg sign for {" + ki.id + ", " + kj.id +
                     "} is required and absent");
            if (*sign == -1) ++count;
        }
        eps.set(i, count % 2);
    }
    return eps;
}

} // namespace mpcalc
