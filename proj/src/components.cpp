#include "mpcalc/components.hpp"

#include <algorithm>

namespace mpcalc {

std::vector<KeyInfo> summand_keys(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    std::vector<KeyInfo> keys;
    for (const Summand& s : psi.summands()) {
        const Constituent& c = cat.constituent(s.constituent);
        KeyInfo k;
        k.id = s.constituent;
        k.b = s.b;
        k.mult = s.mult;
        k.bucket = summand_bucket(cat, s);
        if (k.bucket == Bucket::Jpair) {
            if (!(s.constituent < c.dual_id)) continue;   // keep the representative only
            k.partner = c.dual_id;
            k.unit_dim = 2LL * c.dim * s.b;
        } else {
            k.unit_dim = static_cast<long long>(c.dim) * s.b;
        }
        keys.push_back(k);
    }
    return keys;
}

std::string CentralizerShape::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        const CentralizerFactor& f = factors[i];
        switch (f.kind) {
            case 'O': out += "O(" + std::to_string(f.size) + ")"; break;
            case 'S': out += "Sp(" + std::to_string(f.size) + ")"; break;
            default: out += "GL(" + std::to_string(f.size) + ")"; break;
        }
    }
    return out;
}

CentralizerShape centralizer_shape(const std::vector<KeyInfo>& keys) {
    CentralizerShape shape;
    for (const KeyInfo& k : keys) {
        char kind = k.bucket == Bucket::Iplus ? 'O' : k.bucket == Bucket::Iminus ? 'S' : 'G';
        shape.factors.push_back({k, kind, k.mult});
    }
    return shape;
}

CentralizerShape centralizer(const ArthurParameter& psi) {
    return centralizer_shape(summand_keys(psi));
}

std::vector<BitVec> ComponentGroup::elements() const {
    if (basis_.size() > 22)
        fail(ErrorKind::Consistency, "component group too large to enumerate (dim " +
             std::to_string(basis_.size()) + ")");
    std::vector<BitVec> out;
    out.reserve(static_cast<std::size_t>(1) << basis_.size());
    for (long long m = 0; m < (1LL << basis_.size()); ++m) {
        BitVec v(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (m & (1LL << i)) v.set(i, 1);
        out.push_back(v);
    }
    return out;
}

int ComponentGroup::index_of(const std::string& id, int b) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].id == id && basis_[i].b == b) return static_cast<int>(i);
    return -1;
}

ComponentGroup component_group_of_keys(const std::vector<KeyInfo>& keys) {
    std::vector<KeyInfo> basis;
    for (const KeyInfo& k : keys)
        if (k.bucket == Bucket::Iplus) basis.push_back(k);
    return ComponentGroup(std::move(basis));
}

ComponentGroup component_group(const ArthurParameter& psi) {
    return component_group_of_keys(summand_keys(psi));
}

Distinguished distinguished_of_keys(const std::vector<KeyInfo>& keys) {
    ComponentGroup g = component_group_of_keys(keys);
    Distinguished d{g.zero(), g.zero()};
    std::size_t i = 0;
    for (const KeyInfo& k : keys) {
        if (k.bucket != Bucket::Iplus) continue;
        // the class of an element acting by e on the O(m) factor is det = e^m
        if (k.b % 2 == 0 && k.mult % 2 == 1) d.x_psi.set(i, 1);
        if (k.mult % 2 == 1) d.z.set(i, 1);
        ++i;
    }
    return d;
}

Distinguished distinguished_elements(const ArthurParameter& psi) {
    return distinguished_of_keys(summand_keys(psi));
}

std::vector<Splitting> enumerate_splittings_of_keys(const std::vector<KeyInfo>& keys) {
    std::vector<Splitting> out;
    Splitting acc;
    acc.parts.resize(keys.size());
    long long count = 1;
    for (const KeyInfo& k : keys) {
        long long choices = (k.bucket == Bucket::Iminus) ? k.mult / 2 + 1 : k.mult + 1;
        count *= choices;
        if (count > 4'000'000)
            fail(ErrorKind::Consistency, "too many splittings to enumerate");
    }
    std::vector<int> idx(keys.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            int step = keys[i].bucket == Bucket::Iminus ? 2 : 1;
            int m2 = idx[i] * step;
            acc.parts[i] = {keys[i].mult - m2, m2};
        }
        out.push_back(acc);
        std::size_t i = keys.size();
        while (i > 0) {
            --i;
            int step = keys[i].bucket == Bucket::Iminus ? 2 : 1;
            int max_idx = keys[i].mult / step;
            if (idx[i] < max_idx) { ++idx[i]; break; }
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (keys.empty()) return out;
    }
}

std::vector<Splitting> enumerate_splittings(const ArthurParameter& psi) {
    return enumerate_splittings_of_keys(summand_keys(psi));
}

BitVec splitting_image_of_keys(const std::vector<KeyInfo>& keys, const Splitting& s) {
    if (s.parts.size() != keys.size())
        fail(ErrorKind::Consistency, "splitting does not match the parameter's key list");
    ComponentGroup g = component_group_of_keys(keys);
    BitVec x = g.zero();
    std::size_t i = 0;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        if (keys[k].bucket != Bucket::Iplus) continue;
        x.set(i, s.parts[k].second % 2);
        ++i;
    }
    return x;
}

BitVec splitting_image(const ArthurParameter& psi, const Splitting& s) {
    return splitting_image_of_keys(summand_keys(psi), s);
}

EndoscopicPair splitting_to_endoscopic_keys(const std::vector<KeyInfo>& keys, const Splitting& s) {
    if (s.parts.size() != keys.size())
        fail(ErrorKind::Consistency, "splitting does not match the parameter's key list");
    EndoscopicPair out;
    long long dim_prime = 0, dim_dbl = 0;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        const KeyInfo& key = keys[k];
        auto [m1, m2] = s.parts[k];
        if (m1 < 0 || m2 < 0 || m1 + m2 != key.mult)
            fail(ErrorKind::Consistency, "splitting parts must be nonnegative and sum to the multiplicity at " + key.str());
        if (key.bucket == Bucket::Iminus && m2 % 2 != 0)
            fail(ErrorKind::Consistency, "splitting must have even m'' on " + key.str());
        auto push = [&key](std::vector<Summand>& dst, int m) {
            if (m == 0) return;
            dst.push_back({key.id, key.b, m});
            if (key.bucket == Bucket::Jpair) dst.push_back({key.partner, key.b, m});
        };
        push(out.psi_prime, m1);
        push(out.psi_dblprime, m2);
        dim_prime += key.unit_dim * m1;
        dim_dbl += key.unit_dim * m2;
    }
    out.datum = {dim_prime / 2, dim_dbl / 2};
    return out;
}

EndoscopicPair splitting_to_endoscopic(const ArthurParameter& psi, const Splitting& s) {
    return splitting_to_endoscopic_keys(summand_keys(psi), s);
}

long long center_order(const EndoscopicDatum& e) {
    long long z = 1;
    if (e.n_prime > 0) z *= 2;
    if (e.n_dblprime > 0) z *= 2;
    return z;
}

Rat iota_coefficient(const EndoscopicDatum& e) {
    return Rat::of(1, center_order(e));
}

ComponentMapToPhi component_map_to_phi(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    for (const Summand& s : psi.summands()) {
        if (!cat.constituent(s.constituent).bounded)
            fail(ErrorKind::UnboundedConstituent, "constituent " + s.constituent +
                 " is flagged unbounded; the component map to phi_psi is undefined");
    }
    ComponentGroup g = component_group(psi);
    ComponentMapToPhi map;
    // target: distinct symplectic constituents with a shift-0 occurrence,
    // i.e. exactly the I+ constituents with odd b
    for (const KeyInfo& k : g.basis()) {
        if (k.b % 2 == 0) continue;
        if (std::find(map.target_basis.begin(), map.target_basis.end(), k.id) == map.target_basis.end())
            map.target_basis.push_back(k.id);
    }
    std::sort(map.target_basis.begin(), map.target_basis.end());
    map.matrix = F2Matrix(map.target_basis.size(), g.dim());
    for (std::size_t col = 0; col < g.dim(); ++col) {
        const KeyInfo& k = g.basis()[col];
        if (k.b % 2 == 0) continue;
        auto it = std::find(map.target_basis.begin(), map.target_basis.end(), k.id);
        map.matrix.set(static_cast<std::size_t>(it - map.target_basis.begin()), col, 1);
    }
    return map;
}

} // namespace mpcalc
