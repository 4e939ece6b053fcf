#pragma once

#include <string>
#include <vector>

#include "mpcalc/f2.hpp"
#include "mpcalc/parameters.hpp"

namespace mpcalc {

/// One summand key of a parameter, as seen by the centralizer: J-pairs are
/// collapsed to their representative (the lexicographically smaller id).
struct KeyInfo {
    std::string id;
    int b = 1;
    int mult = 1;
    Bucket bucket = Bucket::Iplus;
    long long unit_dim = 1;   // dimension of one copy; for J, of the whole dual pair
    std::string partner;      // dual id, for J keys

    std::string str() const { return id + "*r(" + std::to_string(b) + ")"; }
};

/// Keys in canonical order (J-pairs at their representative only).
std::vector<KeyInfo> summand_keys(const ArthurParameter& psi);

struct CentralizerFactor {
    KeyInfo key;
    char kind = 'O';   // 'O' for I+, 'S' for I- (Sp), 'G' for J (GL)
    int size = 1;
};

struct CentralizerShape {
    std::vector<CentralizerFactor> factors;
    std::string str() const;
};

CentralizerShape centralizer_shape(const std::vector<KeyInfo>& keys);
CentralizerShape centralizer(const ArthurParameter& psi);

/// mu_2^{I+} with basis the I+ keys in canonical order. Elements and
/// characters are bit vectors over the basis.
class ComponentGroup {
public:
    ComponentGroup() = default;
    explicit ComponentGroup(std::vector<KeyInfo> iplus_basis) : basis_(std::move(iplus_basis)) {}

    std::size_t dim() const { return basis_.size(); }
    long long order() const { return 1LL << basis_.size(); }
    const std::vector<KeyInfo>& basis() const { return basis_; }

    BitVec zero() const { return BitVec(basis_.size()); }

    /// All 2^dim elements; guarded against runaway sizes.
    std::vector<BitVec> elements() const;

    /// chi(x) = (-1)^{sum chi_i x_i}
    static int pair(const BitVec& chi, const BitVec& x) { return chi.pair(x); }

    int index_of(const std::string& id, int b) const;   // -1 when absent

private:
    std::vector<KeyInfo> basis_;
};

ComponentGroup component_group_of_keys(const std::vector<KeyInfo>& keys);
ComponentGroup component_group(const ArthurParameter& psi);

struct Distinguished {
    BitVec x_psi;   // image of psi(1, diag(-1,-1)); bit set iff b even and mult odd
    BitVec z;       // image of -1 in the dual group; bit set iff mult odd
};

Distinguished distinguished_of_keys(const std::vector<KeyInfo>& keys);
Distinguished distinguished_elements(const ArthurParameter& psi);

/// A conjugacy class of square-one elements of the centralizer, recorded as
/// eigenvalue multiplicities (m', m'') per key; m'' is even on I- keys.
struct Splitting {
    std::vector<std::pair<int, int>> parts;   // aligned with summand_keys order
};

std::vector<Splitting> enumerate_splittings_of_keys(const std::vector<KeyInfo>& keys);
std::vector<Splitting> enumerate_splittings(const ArthurParameter& psi);

BitVec splitting_image_of_keys(const std::vector<KeyInfo>& keys, const Splitting& s);
BitVec splitting_image(const ArthurParameter& psi, const Splitting& s);

/// Ordered pair (n', n'') with n' + n'' = n; the attached endoscopic group
/// is SO(2n'+1) x SO(2n''+1), and (n', n'') is distinguished from (n'', n').
struct EndoscopicDatum {
    long long n_prime = 0;
    long long n_dblprime = 0;
    std::string str() const {
        return "(" + std::to_string(n_prime) + ", " + std::to_string(n_dblprime) + ")";
    }
};

struct EndoscopicPair {
    EndoscopicDatum datum;
    std::vector<Summand> psi_prime;
    std::vector<Summand> psi_dblprime;
};

EndoscopicPair splitting_to_endoscopic_keys(const std::vector<KeyInfo>& keys, const Splitting& s);
EndoscopicPair splitting_to_endoscopic(const ArthurParameter& psi, const Splitting& s);

/// iota(G~, G!) = |Z_{(G!)^vee}|^{-1} = 2^{-#{nonzero parts}}.
Rat iota_coefficient(const EndoscopicDatum& e);
long long center_order(const EndoscopicDatum& e);

/// The surjection from the component group of psi onto that of phi_psi.
/// Target basis: distinct symplectic constituents occurring at shift 0 of
/// phi_psi (exactly the I+ constituents with odd b). The I+ generator at
/// (phi, b) maps to [phi] when b is odd and to 0 when b is even.
struct ComponentMapToPhi {
    std::vector<std::string> target_basis;
    F2Matrix matrix;   // rows = target, cols = source (I+ basis of psi)
};

ComponentMapToPhi component_map_to_phi(const ArthurParameter& psi);

} // namespace mpcalc
