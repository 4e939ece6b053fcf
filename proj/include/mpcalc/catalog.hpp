#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpcalc/errors.hpp"
#include "mpcalc/halfint.hpp"
#include "mpcalc/mu4.hpp"

namespace mpcalc {

using Json = nlohmann::ordered_json;

struct QuadraticCharacter {
    std::string id;
    int value_at_minus_one = 1;
    bool is_trivial = false;
    bool is_unramified = false;
    std::optional<int> frobenius_value;          // required when unramified
    std::optional<std::string> square_class;     // class of F^x/F^x2 attached by class field theory
    std::map<std::string, int> square_class_values;
};

enum class Duality { Symplectic, Orthogonal, NonSelfDual };

std::string duality_name(Duality d);

/// A simple constituent rho (x) r(a) of an Arthur parameter: an abstract
/// arithmetic atom carrying dimension, Deligne-SL2 size, self-duality type,
/// det(-1) and the root number eps(1/2, .).
struct Constituent {
    std::string id;
    int dim = 1;
    int sl2_dim = 1;
    Duality duality = Duality::Orthogonal;
    std::string dual_id;                 // equals id when self-dual
    int det_at_minus_one = 1;
    std::optional<Mu4> root_number;      // present iff self-dual
    bool is_unramified_character = false;
    std::optional<std::string> det_character;  // required when orthogonal
    bool bounded = true;

    bool self_dual() const { return duality != Duality::NonSelfDual; }
    bool symplectic() const { return duality == Duality::Symplectic; }
    bool orthogonal() const { return duality == Duality::Orthogonal; }
};

/// phi (x) r(b) is of symplectic type iff exactly one of phi, r(b) is
/// symplectic (r(b) is symplectic for even b). Requires self-dual phi.
bool symplectic_type(const Constituent& c, int b);

struct TwistEntry { std::string constituent, character, result; };
struct SwapEntry { std::string constituent; int b; std::string result; };
struct RSEntry { std::string a, b; int sign; };

struct ValidationIssue {
    std::string entity;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> violations;
    bool ok() const { return violations.empty(); }
};

/// A local catalog: the abstract arithmetic data over one place.
/// Immutable after load; safe to share across threads.
class Catalog {
public:
    Catalog() = default;

    static Catalog from_json(const Json& doc);
    static Catalog from_string(const std::string& text);
    static Catalog from_file(const std::string& path);

    Json to_json() const;

    bool archimedean() const { return archimedean_; }

    bool has_constituent(const std::string& id) const { return constituents_.count(id) > 0; }
    const Constituent& constituent(const std::string& id) const;
    bool has_character(const std::string& id) const { return characters_.count(id) > 0; }
    const QuadraticCharacter& character(const std::string& id) const;

    /// ids in canonical (sorted) order
    const std::vector<std::string>& constituent_ids() const { return constituent_order_; }
    const std::vector<std::string>& character_ids() const { return character_order_; }

    /// phi |-> phi.zeta; identity for the trivial character, MissingTwist
    /// when the pair is absent from the table.
    std::string twist(const std::string& constituent_id, const std::string& character_id) const;
    bool has_twist(const std::string& constituent_id, const std::string& character_id) const;

    /// (rho (x) r(a)) (x) r(b) with the two SL2 factors exchanged is
    /// result (x) r(a); implicit identity for a = b = 1.
    std::string sl2_swap(const std::string& constituent_id, int b) const;
    bool has_sl2_swap(const std::string& constituent_id, int b) const;

    std::optional<int> rs_sign(const std::string& a, const std::string& b) const;

    /// Quadratic character attached to a square class token.
    const QuadraticCharacter& character_of_square_class(const std::string& square_class) const;

    /// Pairwise constraints: twist involution, swap involution and root
    /// compatibility, dual involution, RS symmetry. Empty iff consistent.
    ValidationReport cross_constraints() const;

private:
    void add_character(QuadraticCharacter qc);
    void add_constituent(Constituent c);
    void finalize();   // per-entity invariants + reference resolution

    bool archimedean_ = false;
    std::map<std::string, QuadraticCharacter> characters_;
    std::map<std::string, Constituent> constituents_;
    std::vector<std::string> character_order_;
    std::vector<std::string> constituent_order_;
    std::map<std::pair<std::string, std::string>, std::string> twists_;
    std::map<std::pair<std::string, int>, std::string> swaps_;
    std::vector<RSEntry> rs_raw_;
    std::map<std::pair<std::string, std::string>, int> rs_;
    friend class GlobalCatalog;
};

// ---- global layer -----------------------------------------------------

struct LocalizationEntry {
    std::string constituent;
    HalfInt shift;
    int mult = 1;
};

struct GlobalCuspidal {
    std::string id;
    int dim = 1;
    Duality duality = Duality::Orthogonal;
    std::string dual_id;
    std::optional<int> global_root_number;   // present iff self-dual, in {+-1}
    std::map<std::string, std::vector<LocalizationEntry>> localizations; // place -> multiset
    std::set<std::string> unramified_places;

    bool self_dual() const { return duality != Duality::NonSelfDual; }
    bool symplectic() const { return duality == Duality::Symplectic; }
};

struct Place {
    std::string id;
    bool unramified = false;
    Catalog catalog;
};

/// Places with their local catalogs, global cuspidal entries and the global
/// Rankin-Selberg sign table.
class GlobalCatalog {
public:
    GlobalCatalog() = default;

    static GlobalCatalog from_json(const Json& doc);
    static GlobalCatalog from_string(const std::string& text);
    static GlobalCatalog from_file(const std::string& path);

    const Catalog& base() const { return base_; }
    const std::vector<std::string>& place_ids() const { return place_order_; }
    bool has_place(const std::string& id) const { return places_.count(id) > 0; }
    const Place& place(const std::string& id) const;

    const std::vector<std::string>& cuspidal_ids() const { return cuspidal_order_; }
    bool has_cuspidal(const std::string& id) const { return cuspidals_.count(id) > 0; }
    const GlobalCuspidal& cuspidal(const std::string& id) const;

    std::optional<int> rs_sign(const std::string& a, const std::string& b) const;

private:
    void finalize();

    Catalog base_;
    std::map<std::string, Place> places_;
    std::vector<std::string> place_order_;
    std::map<std::string, GlobalCuspidal> cuspidals_;
    std::vector<std::string> cuspidal_order_;
    std::map<std::pair<std::string, std::string>, int> rs_;
};

} // namespace mpcalc
