#include "mpcalc/parameters.hpp"

#include <algorithm>
#include <map>

namespace mpcalc {

std::string bucket_name(Bucket b) {
    switch (b) {
        case Bucket::Iplus: return "I+";
        case Bucket::Iminus: return "I-";
        case Bucket::Jpair: return "J";
    }
    return "?";
}

namespace {

std::vector<Summand> canonicalize(std::vector<Summand> in) {
    std::map<std::pair<std::string, int>, long long> merged;
    for (const Summand& s : in) {
        if (s.b < 1) fail(ErrorKind::Consistency, "summand with b < 1");
        if (s.mult < 1) fail(ErrorKind::Consistency, "summand with mult < 1");
        merged[{s.constituent, s.b}] += s.mult;
    }
    std::vector<Summand> out;
    out.reserve(merged.size());
    for (const auto& [key, m] : merged) {
        if (m > 1'000'000) fail(ErrorKind::Consistency, "summand multiplicity out of range");
        out.push_back({key.first, key.second, static_cast<int>(m)});
    }
    return out;
}

} // namespace

Bucket summand_bucket(const Catalog& cat, const Summand& s) {
    const Constituent& c = cat.constituent(s.constituent);
    if (!c.self_dual()) return Bucket::Jpair;
    return symplectic_type(c, s.b) ? Bucket::Iplus : Bucket::Iminus;
}

ArthurParameter::ArthurParameter(const Catalog& cat, std::vector<Summand> summands)
    : cat_(&cat), summands_(canonicalize(std::move(summands))) {
    long long total = 0;
    for (const Summand& s : summands_) {
        const Constituent& c = cat.constituent(s.constituent);
        total += static_cast<long long>(c.dim) * s.b * s.mult;
        switch (summand_bucket(cat, s)) {
            case Bucket::Iminus:
                if (s.mult % 2 != 0)
                    fail(ErrorKind::Consistency, "summand " + s.constituent + "*r(" + std::to_string(s.b) +
                         ") is of orthogonal type and requires even multiplicity, got " + std::to_string(s.mult));
                break;
            case Bucket::Jpair: {
                // dual partner with equal b and multiplicity must be present
                auto it = std::find_if(summands_.begin(), summands_.end(), [&](const Summand& t) {
                    return t.constituent == c.dual_id && t.b == s.b;
                });
                if (it == summands_.end() || it->mult != s.mult)
                    fail(ErrorKind::Consistency, "summand " + s.constituent + "*r(" + std::to_string(s.b) +
                         ") lacks a dual partner of equal b and multiplicity");
                break;
            }
            case Bucket::Iplus:
                break;
        }
    }
    if (total % 2 != 0)
        fail(ErrorKind::Consistency, "parameter has odd total dimension " + std::to_string(total));
}

ArthurParameter ArthurParameter::from_json(const Catalog& cat, const Json& j) {
    if (!j.is_array()) fail(ErrorKind::Schema, "parameter literal must be an array of summands");
    std::vector<Summand> sums;
    for (const Json& sj : j) {
        Summand s;
        if (!sj.contains("constituent") || !sj["constituent"].is_string())
            fail(ErrorKind::Schema, "parameter summand requires string field \"constituent\"");
        s.constituent = sj["constituent"].get<std::string>();
        if (!sj.contains("b") || !sj["b"].is_number_integer())
            fail(ErrorKind::Schema, "parameter summand requires integer field \"b\"");
        s.b = sj["b"].get<int>();
        s.mult = sj.contains("mult") ? sj["mult"].get<int>() : 1;
        sums.push_back(s);
    }
    return ArthurParameter(cat, std::move(sums));
}

Json ArthurParameter::to_json() const {
    Json arr = Json::array();
    for (const Summand& s : summands_)
        arr.push_back(Json{{"constituent", s.constituent}, {"b", s.b}, {"mult", s.mult}});
    return arr;
}

long long ArthurParameter::dim() const {
    long long total = 0;
    for (const Summand& s : summands_)
        total += static_cast<long long>(cat_->constituent(s.constituent).dim) * s.b * s.mult;
    return total;
}

bool ArthurParameter::operator==(const ArthurParameter& o) const {
    if (summands_.size() != o.summands_.size()) return false;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const Summand& a = summands_[i];
        const Summand& b = o.summands_[i];
        if (a.constituent != b.constituent || a.b != b.b || a.mult != b.mult) return false;
    }
    return true;
}

bool ArthurParameter::operator<(const ArthurParameter& o) const {
    auto key = [](const Summand& s) { return std::make_tuple(s.constituent, s.b, s.mult); };
    return std::lexicographical_compare(
        summands_.begin(), summands_.end(), o.summands_.begin(), o.summands_.end(),
        [&](const Summand& a, const Summand& b) { return key(a) < key(b); });
}

std::string ArthurParameter::str() const {
    if (summands_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const Summand& s = summands_[i];
        if (i) out += " + ";
        if (s.mult > 1) out += std::to_string(s.mult) + "(";
        out += s.constituent + "*r(" + std::to_string(s.b) + ")";
        if (s.mult > 1) out += ")";
    }
    return out;
}

Classification classify(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    Classification cls;
    cls.good_parity = true;
    cls.discrete = true;
    cls.anti_tempered = true;
    cls.unramified = true;
    bool has_unramified_char = false;
    for (const Summand& s : psi.summands()) {
        const Constituent& c = cat.constituent(s.constituent);
        SummandClass sc;
        sc.bucket = summand_bucket(cat, s);
        if (sc.bucket != Bucket::Iplus) cls.good_parity = false;
        if (sc.bucket != Bucket::Iplus || s.mult != 1) cls.discrete = false;
        if (sc.bucket == Bucket::Jpair) {
            sc.j_partner = c.dual_id;
            sc.j_representative = s.constituent < c.dual_id;
        }
        // dual parameter has all b = 1 iff every constituent has sl2_dim 1
        if (c.sl2_dim != 1 || !c.bounded) cls.anti_tempered = false;
        if (!c.is_unramified_character) cls.unramified = false;
        else has_unramified_char = true;
        cls.per_summand.push_back(sc);
    }
    cls.discrete = cls.discrete && cls.good_parity;
    cls.in_psi_star = cls.good_parity && cls.anti_tempered && !has_unramified_char;
    return cls;
}

ArthurParameter dual_parameter(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    std::vector<Summand> out;
    for (const Summand& s : psi.summands()) {
        const Constituent& c = cat.constituent(s.constituent);
        std::string swapped = cat.sl2_swap(s.constituent, s.b);
        out.push_back({swapped, c.sl2_dim, s.mult});
    }
    return ArthurParameter(cat, std::move(out));
}

// ---- LParameter ---------------------------------------------------------

LParameter::LParameter(const Catalog& cat, std::vector<LSummand> summands) : cat_(&cat) {
    std::map<std::pair<std::string, int>, long long> merged;
    for (const LSummand& s : summands) {
        if (s.mult < 1) fail(ErrorKind::Consistency, "L-parameter summand with mult < 1");
        cat.constituent(s.constituent);
        merged[{s.constituent, s.shift.twice}] += s.mult;
    }
    for (const auto& [key, m] : merged)
        summands_.push_back({key.first, HalfInt{key.second}, static_cast<int>(m)});
}

long long LParameter::dim() const {
    long long total = 0;
    for (const LSummand& s : summands_)
        total += static_cast<long long>(cat_->constituent(s.constituent).dim) * s.mult;
    return total;
}

bool LParameter::operator==(const LParameter& o) const {
    if (summands_.size() != o.summands_.size()) return false;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const LSummand& a = summands_[i];
        const LSummand& b = o.summands_[i];
        if (a.constituent != b.constituent || a.shift != b.shift || a.mult != b.mult) return false;
    }
    return true;
}

std::string LParameter::str() const {
    if (summands_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const LSummand& s = summands_[i];
        if (i) out += " + ";
        if (s.mult > 1) out += std::to_string(s.mult) + "(";
        out += s.constituent;
        if (!s.shift.is_zero()) out += "|.|^(" + s.shift.str() + ")";
        if (s.mult > 1) out += ")";
    }
    return out;
}

Json LParameter::to_json() const {
    Json arr = Json::array();
    for (const LSummand& s : summands_)
        arr.push_back(Json{{"constituent", s.constituent}, {"shift", s.shift.str()}, {"mult", s.mult}});
    return arr;
}

LParameter restriction_to_lf(const ArthurParameter& psi) {
    std::vector<LSummand> out;
    for (const Summand& s : psi.summands())
        out.push_back({s.constituent, HalfInt{0}, s.mult * s.b});
    return LParameter(psi.catalog(), std::move(out));
}

LParameter associated_l_parameter(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    std::vector<LSummand> out;
    for (const Summand& s : psi.summands()) {
        const Constituent& c = cat.constituent(s.constituent);
        if (!c.bounded)
            fail(ErrorKind::UnboundedConstituent, "constituent " + c.id +
                 " is flagged unbounded; the associated L-parameter is undefined");
        for (int h = 0; h < s.b; ++h)
            out.push_back({s.constituent, HalfInt{s.b - 1 - 2 * h}, s.mult});
    }
    return LParameter(cat, std::move(out));
}

GoodParityReduction good_parity_reduction(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    Classification cls = classify(psi);
    std::vector<Summand> plus, gl;
    for (std::size_t i = 0; i < psi.summands().size(); ++i) {
        const Summand& s = psi.summands()[i];
        switch (cls.per_summand[i].bucket) {
            case Bucket::Iplus:
                plus.push_back(s);
                break;
            case Bucket::Iminus:
                gl.push_back({s.constituent, s.b, s.mult / 2});
                break;
            case Bucket::Jpair:
                if (cls.per_summand[i].j_representative)
                    gl.push_back(s);
                break;
        }
    }
    return {ArthurParameter(cat, std::move(plus)), std::move(gl)};
}

namespace {

struct Slot {
    std::string id;   // constituent (J: representative, the smaller id)
    int b;
    Bucket bucket;
    long long unit_dim;   // dimension of one copy (J: of the whole dual pair)
};

void enumerate_rec(const Catalog& cat, const std::vector<Slot>& slots, std::size_t i,
                   long long remaining, std::vector<Summand>& acc,
                   const std::function<void(const ArthurParameter&)>& visit, EnumRestriction r) {
    if (remaining == 0) {
        std::vector<Summand> sums;
        for (const Summand& s : acc) {
            sums.push_back(s);
            const Constituent& c = cat.constituent(s.constituent);
            if (!c.self_dual()) sums.push_back({c.dual_id, s.b, s.mult});
        }
        visit(ArthurParameter(cat, std::move(sums)));
        return;
    }
    if (i >= slots.size()) return;
    const Slot& sl = slots[i];
    enumerate_rec(cat, slots, i + 1, remaining, acc, visit, r);
    int step = (sl.bucket == Bucket::Iminus) ? 2 : 1;
    int max_mult = (r == EnumRestriction::Discrete) ? step : static_cast<int>(remaining / sl.unit_dim);
    for (int m = step; m <= max_mult && m * sl.unit_dim <= remaining; m += step) {
        acc.push_back({sl.id, sl.b, m});
        enumerate_rec(cat, slots, i + 1, remaining - m * sl.unit_dim, acc, visit, r);
        acc.pop_back();
    }
}

} // namespace

void for_each_parameter(const Catalog& cat, int n, EnumRestriction r,
                        const std::function<void(const ArthurParameter&)>& visit) {
    if (n < 0) fail(ErrorKind::Consistency, "enumerate_parameters: n must be nonnegative");
    const long long target = 2LL * n;
    const int b_cap = static_cast<int>(std::min<long long>(target, 64));
    std::vector<Slot> slots;
    for (const std::string& id : cat.constituent_ids()) {
        const Constituent& c = cat.constituent(id);
        for (int b = 1; b <= b_cap && static_cast<long long>(c.dim) * b <= target; ++b) {
            if (c.self_dual()) {
                Bucket bucket = symplectic_type(c, b) ? Bucket::Iplus : Bucket::Iminus;
                if (r != EnumRestriction::All && bucket != Bucket::Iplus) continue;
                slots.push_back({id, b, bucket, static_cast<long long>(c.dim) * b});
            } else if (id < c.dual_id) {
                if (r != EnumRestriction::All) continue;
                slots.push_back({id, b, Bucket::Jpair, 2LL * c.dim * b});
            }
        }
    }
    std::vector<Summand> acc;
    enumerate_rec(cat, slots, 0, target, acc, visit, r);
}

std::vector<ArthurParameter> enumerate_parameters(const Catalog& cat, int n, EnumRestriction r) {
    std::vector<ArthurParameter> out;
    for_each_parameter(cat, n, r, [&out](const ArthurParameter& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mpcalc
