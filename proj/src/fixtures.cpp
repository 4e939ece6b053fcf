#include "mpcalc/fixtures.hpp"

namespace mpcalc::fixtures {

namespace {

const char* kF1 = R"json({
  "quadratic_characters": [
    {"id": "one", "value_at_minus_one": 1, "is_trivial": true, "is_unramified": true,
     "frobenius_value": 1, "square_class": "unit", "square_class_values": {"minus_one": 1}},
    {"id": "chi_a", "value_at_minus_one": 1, "square_class": "a",
     "square_class_values": {"minus_one": 1}},
    {"id": "chi_b", "value_at_minus_one": -1, "square_class": "b",
     "square_class_values": {"minus_one": -1}}
  ],
  "constituents": [
    {"id": "one", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
     "root_number": "1", "is_unramified_character": true, "det_character": "one"},
    {"id": "chi_a", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
     "root_number": "-1", "det_character": "chi_a"},
    {"id": "chi_b", "dim": 1, "duality": "orthogonal", "det_at_minus_one": -1,
     "root_number": "i", "det_character": "chi_b"},
    {"id": "rho2", "dim": 2, "duality": "symplectic", "det_at_minus_one": 1,
     "root_number": "-1"},
    {"id": "tau2", "dim": 2, "duality": "orthogonal", "det_at_minus_one": -1,
     "root_number": "i", "det_character": "chi_b"}
  ]
})json";

// f1 plus:
//   rho2t          twist of rho2 by chi_b
//   *_r2, *_r4     SL2-swap targets with root numbers from the SL2 recursion
//   sigma_p/sigma_m  a non-self-dual dual pair with det(-1) = -1
const char* kF1X = R"json({
  "quadratic_characters": [
    {"id": "one", "value_at_minus_one": 1, "is_trivial": true, "is_unramified": true,
     "frobenius_value": 1, "square_class": "unit", "square_class_values": {"minus_one": 1}},
    {"id": "chi_a", "value_at_minus_one": 1, "square_class": "a",
     "square_class_values": {"minus_one": 1}},
    {"id": "chi_b", "value_at_minus_one": -1, "square_class": "b",
     "square_class_values": {"minus_one": -1}}
  ],
  "constituents": [
    {"id": "one", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
     "root_number": "1", "is_unramified_character": true, "det_character": "one"},
    {"id": "chi_a", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
     "root_number": "-1", "det_character": "chi_a"},
    {"id": "chi_b", "dim": 1, "duality": "orthogonal", "det_at_minus_one": -1,
     "root_number": "i", "det_character": "chi_b"},
    {"id": "rho2", "dim": 2, "duality": "symplectic", "det_at_minus_one": 1,
     "root_number": "-1"},
    {"id": "rho2t", "dim": 2, "duality": "symplectic", "det_at_minus_one": 1,
     "root_number": "1"},
    {"id": "tau2", "dim": 2, "duality": "orthogonal", "det_at_minus_one": -1,
     "root_number": "i", "det_character": "chi_b"},
    {"id": "one_r2", "dim": 2, "sl2_dim": 2, "duality": "symplectic",
     "det_at_minus_one": 1, "root_number": "-1"},
    {"id": "one_r4", "dim": 4, "sl2_dim": 4, "duality": "symplectic",
     "det_at_minus_one": 1, "root_number": "-1"},
    {"id": "chi_a_r2", "dim": 2, "sl2_dim": 2, "duality": "symplectic",
     "det_at_minus_one": 1, "root_number": "1"},
    {"id": "chi_a_r4", "dim": 4, "sl2_dim": 4, "duality": "symplectic",
     "det_at_minus_one": 1, "root_number": "1"},
    {"id": "chi_b_r2", "dim": 2, "sl2_dim": 2, "duality": "symplectic",
     "det_at_minus_one": 1, "root_number": "-1"},
    {"id": "chi_b_r4", "dim": 4, "sl2_dim": 4, "duality": "symplectic",
     "det_at_minus_one": 1, "root_number": "1"},
    {"id": "tau2_r2", "dim": 4, "sl2_dim": 2, "duality": "symplectic",
     "det_at_minus_one": 1, "root_number": "-1"},
    {"id": "sigma_p", "dim": 1, "duality": {"dual": "sigma_m"}, "det_at_minus_one": -1},
    {"id": "sigma_m", "dim": 1, "duality": {"dual": "sigma_p"}, "det_at_minus_one": -1}
  ],
  "twists": [
    {"constituent": "one", "character": "chi_a", "result": "chi_a"},
    {"constituent": "chi_a", "character": "chi_a", "result": "one"},
    {"constituent": "one", "character": "chi_b", "result": "chi_b"},
    {"constituent": "chi_b", "character": "chi_b", "result": "one"},
    {"constituent": "rho2", "character": "chi_b", "result": "rho2t"},
    {"constituent": "rho2t", "character": "chi_b", "result": "rho2"},
    {"constituent": "rho2", "character": "chi_a", "result": "rho2"},
    {"constituent": "rho2t", "character": "chi_a", "result": "rho2t"}
  ],
  "sl2_swaps": [
    {"constituent": "one", "b": 2, "result": "one_r2"},
    {"constituent": "one", "b": 4, "result": "one_r4"},
    {"constituent": "chi_a", "b": 2, "result": "chi_a_r2"},
    {"constituent": "chi_a", "b": 4, "result": "chi_a_r4"},
    {"constituent": "chi_b", "b": 2, "result": "chi_b_r2"},
    {"constituent": "chi_b", "b": 4, "result": "chi_b_r4"},
    {"constituent": "tau2", "b": 2, "result": "tau2_r2"}
  ],
  "rankin_selberg": [
    {"pair": ["rho2", "one"], "sign": 1},
    {"pair": ["rho2", "chi_a"], "sign": -1},
    {"pair": ["rho2", "chi_b"], "sign": 1},
    {"pair": ["rho2", "tau2"], "sign": -1},
    {"pair": ["rho2t", "one"], "sign": 1},
    {"pair": ["rho2t", "chi_a"], "sign": 1},
    {"pair": ["rho2t", "chi_b"], "sign": 1},
    {"pair": ["rho2t", "tau2"], "sign": 1},
    {"pair": ["one_r2", "one"], "sign": 1},
    {"pair": ["one_r2", "chi_a"], "sign": 1},
    {"pair": ["one_r2", "chi_b"], "sign": 1},
    {"pair": ["one_r2", "tau2"], "sign": 1},
    {"pair": ["one_r4", "one"], "sign": 1},
    {"pair": ["one_r4", "chi_a"], "sign": 1},
    {"pair": ["one_r4", "chi_b"], "sign": 1},
    {"pair": ["one_r4", "tau2"], "sign": 1},
    {"pair": ["chi_a_r2", "one"], "sign": 1},
    {"pair": ["chi_a_r2", "chi_a"], "sign": 1},
    {"pair": ["chi_a_r2", "chi_b"], "sign": 1},
    {"pair": ["chi_a_r2", "tau2"], "sign": 1},
    {"pair": ["chi_a_r4", "one"], "sign": 1},
    {"pair": ["chi_a_r4", "chi_a"], "sign": 1},
    {"pair": ["chi_a_r4", "chi_b"], "sign": 1},
    {"pair": ["chi_a_r4", "tau2"], "sign": 1},
    {"pair": ["chi_b_r2", "one"], "sign": 1},
    {"pair": ["chi_b_r2", "chi_a"], "sign": 1},
    {"pair": ["chi_b_r2", "chi_b"], "sign": 1},
    {"pair": ["chi_b_r2", "tau2"], "sign": 1},
    {"pair": ["chi_b_r4", "one"], "sign": 1},
    {"pair": ["chi_b_r4", "chi_a"], "sign": 1},
    {"pair": ["chi_b_r4", "chi_b"], "sign": 1},
    {"pair": ["chi_b_r4", "tau2"], "sign": 1},
    {"pair": ["tau2_r2", "one"], "sign": 1},
    {"pair": ["tau2_r2", "chi_a"], "sign": 1},
    {"pair": ["tau2_r2", "chi_b"], "sign": 1},
    {"pair": ["tau2_r2", "tau2"], "sign": 1}
  ]
})json";

const char* kWaldspurger = R"json({
  "quadratic_characters": [
    {"id": "one", "value_at_minus_one": 1, "is_trivial": true, "is_unramified": true,
     "frobenius_value": 1, "square_class": "unit"},
    {"id": "chi_a", "value_at_minus_one": 1, "square_class": "a"}
  ],
  "constituents": [
    {"id": "one", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
     "root_number": "1", "is_unramified_character": true, "det_character": "one"},
    {"id": "chi_a", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
     "root_number": "-1", "det_character": "chi_a"},
    {"id": "rho2", "dim": 2, "duality": "symplectic", "det_at_minus_one": 1,
     "root_number": "-1"}
  ]
})json";

const char* kPrincipalTwoPlace = R"json({
  "quadratic_characters": [
    {"id": "one", "value_at_minus_one": 1, "is_trivial": true, "is_unramified": true,
     "frobenius_value": 1, "square_class": "unit"}
  ],
  "constituents": [
    {"id": "one", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
     "root_number": "1", "is_unramified_character": true, "det_character": "one"}
  ],
  "places": [
    {"id": "v1"},
    {"id": "v2"},
    {"id": "v3", "unramified": true}
  ],
  "global_cuspidals": [
    {"id": "zeta_dot", "dim": 1, "duality": "orthogonal", "global_root_number": 1,
     "localizations": {
       "v1": [{"constituent": "one", "shift": "0", "mult": 1}],
       "v2": [{"constituent": "one", "shift": "0", "mult": 1}],
       "v3": [{"constituent": "one", "shift": "0", "mult": 1}]
     },
     "unramified_places": ["v1", "v2", "v3"]}
  ]
})json";

const char* kSkGlobalHead = R"json({
  "quadratic_characters": [
    {"id": "one", "value_at_minus_one": 1, "is_trivial": true, "is_unramified": true,
     "frobenius_value": 1, "square_class": "unit"},
    {"id": "chi_a", "value_at_minus_one": 1, "square_class": "a"}
  ],
  "constituents": [
    {"id": "one", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
     "root_number": "1", "is_unramified_character": true, "det_character": "one"},
    {"id": "chi_a", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
     "root_number": "-1", "det_character": "chi_a"},
    {"id": "rho2", "dim": 2, "duality": "symplectic", "det_at_minus_one": 1,
     "root_number": "-1"}
  ],
  "places": [
    {"id": "v1"},
    {"id": "v2", "catalog": {
      "quadratic_characters": [
        {"id": "one", "value_at_minus_one": 1, "is_trivial": true, "is_unramified": true,
         "frobenius_value": 1, "square_class": "unit"}
      ],
      "constituents": [
        {"id": "one", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
         "root_number": "1", "is_unramified_character": true, "det_character": "one"},
        {"id": "rho2p", "dim": 2, "duality": "symplectic", "det_at_minus_one": 1,
         "root_number": "1"}
      ]
    }}
  ],
  "global_cuspidals": [
    {"id": "chi_dot", "dim": 1, "duality": "orthogonal", "global_root_number": 1,
     "localizations": {
       "v1": [{"constituent": "chi_a", "shift": "0", "mult": 1}],
       "v2": [{"constituent": "one", "shift": "0", "mult": 1}]
     }},
    {"id": "phi_dot", "dim": 2, "duality": "symplectic", "global_root_number": -1,
     "localizations": {
       "v1": [{"constituent": "rho2", "shift": "0", "mult": 1}],
       "v2": [{"constituent": "rho2p", "shift": "0", "mult": 1}]
     }}
  ],
  "global_rankin_selberg": [
    {"pair": ["phi_dot", "chi_dot"], "sign": )json";

} // namespace

const std::string& f1() {
    static const std::string s = kF1;
    return s;
}

const std::string& f1x() {
    static const std::string s = kF1X;
    return s;
}

const std::string& waldspurger() {
    static const std::string s = kWaldspurger;
    return s;
}

const std::string& principal_two_place() {
    static const std::string s = kPrincipalTwoPlace;
    return s;
}

const std::string& sk_global(int rs_sign) {
    static const std::string minus = std::string(kSkGlobalHead) + "-1}\n  ]\n}";
    static const std::string plus = std::string(kSkGlobalHead) + "1}\n  ]\n}";
    return rs_sign == -1 ? minus : plus;
}

} // namespace mpcalc::fixtures
