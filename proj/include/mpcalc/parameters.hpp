#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mpcalc/catalog.hpp"

namespace mpcalc {

struct Summand {
    std::string constituent;
    int b = 1;
    int mult = 1;
};

enum class Bucket { Iplus, Iminus, Jpair };

std::string bucket_name(Bucket b);

/// Canonical multiset of summands phi (x) r(b). Canonical order is by
/// (constituent id, b); equal keys merge. Construction validates the
/// self-duality and parity constraints of a symplectic-type parameter.
class ArthurParameter {
public:
    ArthurParameter(const Catalog& cat, std::vector<Summand> summands);

    static ArthurParameter from_json(const Catalog& cat, const Json& j);
    Json to_json() const;

    const Catalog& catalog() const { return *cat_; }
    const std::vector<Summand>& summands() const { return summands_; }
    bool empty() const { return summands_.empty(); }

    long long dim() const;
    long long n() const { return dim() / 2; }

    bool operator==(const ArthurParameter& o) const;
    bool operator<(const ArthurParameter& o) const;

    std::string str() const;

private:
    const Catalog* cat_;
    std::vector<Summand> summands_;
};

struct SummandClass {
    Bucket bucket = Bucket::Iplus;
    std::string j_partner;   // dual id, for Jpair summands
    bool j_representative = false;
};

struct Classification {
    std::vector<SummandClass> per_summand;   // aligned with summands()
    bool good_parity = false;
    bool discrete = false;
    bool anti_tempered = false;
    bool unramified = false;
    bool in_psi_star = false;
};

Bucket summand_bucket(const Catalog& cat, const Summand& s);
Classification classify(const ArthurParameter& psi);

/// Exchange the Deligne and Arthur SL2 factors; requires swap coverage in
/// the catalog (UnsupportedSwap otherwise). Involution on its domain.
ArthurParameter dual_parameter(const ArthurParameter& psi);

struct LSummand {
    std::string constituent;
    HalfInt shift;
    int mult = 1;
};

/// Canonical multiset of shifted constituents phi |.|^s.
class LParameter {
public:
    LParameter(const Catalog& cat, std::vector<LSummand> summands);

    const Catalog& catalog() const { return *cat_; }
    const std::vector<LSummand>& summands() const { return summands_; }
    long long dim() const;
    bool operator==(const LParameter& o) const;
    std::string str() const;
    Json to_json() const;

private:
    const Catalog* cat_;
    std::vector<LSummand> summands_;
};

/// psi restricted to L_F: each (phi, b, m) becomes phi with multiplicity m*b.
LParameter restriction_to_lf(const ArthurParameter& psi);

/// The L-parameter phi_psi: (phi, b, m) contributes m copies of
/// phi|.|^{(b-1)/2 - h}, h = 0..b-1. Requires bounded constituents.
LParameter associated_l_parameter(const ArthurParameter& psi);

struct GoodParityReduction {
    ArthurParameter psi0;            // the I+ part, of good parity
    std::vector<Summand> gl_part;    // I- halves and J representatives
};

GoodParityReduction good_parity_reduction(const ArthurParameter& psi);

enum class EnumRestriction { All, GoodParity, Discrete };

/// All parameters of total dimension 2n over the catalog, canonically
/// ordered and duplicate-free. b-values are capped at min(2n, 64).
std::vector<ArthurParameter> enumerate_parameters(const Catalog& cat, int n, EnumRestriction r);

/// Streaming variant for exhaustive checks (enumeration order, not sorted).
void for_each_parameter(const Catalog& cat, int n, EnumRestriction r,
                        const std::function<void(const ArthurParameter&)>& visit);

} // namespace mpcalc
