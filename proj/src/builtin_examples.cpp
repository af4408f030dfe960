#include "folidx/catalog.hpp"

namespace folidx {

namespace {

// Suspension of an irrational rotation of the round sphere: two polar
// point strata and an open-interval principal stratum whose leaf closures
// are flat tori carrying the irrational flow.
const char* kRotationS2 = R"json({
  "schema_version": "1",
  "name": "rotation-s2",
  "strata": [
    {
      "name": "polar-leaves",
      "quotient": {"kind": "closed", "euler_closed": 2},
      "leaf_closure": {"model": "single_leaf"},
      "twist": "trivial"
    },
    {
      "name": "principal",
      "quotient": {"kind": "open", "euler_closed": 0},
      "leaf_closure": {"model": "irrational_flow_torus"},
      "twist": "trivial"
    }
  ],
  "suspension": {
    "fiber": {"kind": "sphere2", "top_sign": 1},
    "group_order": 1
  },
  "expected": {
    "basic_euler": {
      "value": 2,
      "citation": "two polar point leaves with chi(S^1,S^1) = 1 plus an open-interval principal stratum with toral closures: 2*1 + (-1)*0 = 2"
    },
    "oracle_betti": {
      "value": [1, 0, 1],
      "citation": "rotation-invariant cohomology of the sphere: constants and the volume class, h^1 = 0"
    }
  }
})json";

// Suspension of an irrational rotation of S^1 composed with an irrational
// rotation of S^2: codimension 3, all leaf-closure Euler characteristics
// vanish.
const char* kS1xS2 = R"json({
  "schema_version": "1",
  "name": "s1xs2-double-rotation",
  "strata": [
    {
      "name": "polar-closures",
      "quotient": {"kind": "closed", "euler_closed": 2},
      "leaf_closure": {"model": "irrational_flow_torus"},
      "twist": "trivial"
    },
    {
      "name": "principal",
      "quotient": {"kind": "open", "euler_closed": 0},
      "leaf_closure": {
        "model": "suspension_closure",
        "fiber": {"kind": "torus", "rank": 2, "h1_matrix": [[1, 0], [0, 1]]},
        "group_order": 1
      },
      "twist": "trivial"
    }
  ],
  "suspension": {
    "fiber": {
      "kind": "product",
      "factors": [
        {"kind": "circle", "top_sign": 1},
        {"kind": "sphere2", "top_sign": 1}
      ]
    },
    "group_order": 1
  },
  "expected": {
    "basic_euler": {
      "value": 0,
      "citation": "2*0 + (-1)*0 = 0; polar closures are irrational-flow tori and the principal closures span {1, dtheta, ds, dtheta^ds} with chi = 1-2+1 = 0"
    },
    "oracle_betti": {
      "value": [1, 1, 1, 1],
      "citation": "invariant complex on S^1 x S^2 has one class in each degree: h^0 = h^1 = h^2 = h^3 = 1"
    }
  }
})json";

// Suspension over the free group on two generators acting on T^2 by a double
// flip and an irrational translation; the closure foliation lives on a flat
// Klein bottle.
const char* kKleinBottle = R"json({
  "schema_version": "1",
  "name": "klein-bottle",
  "strata": [
    {
      "name": "flip-fixed-closures",
      "quotient": {"kind": "closed", "euler_closed": 2},
      "leaf_closure": {
        "model": "suspension_closure",
        "fiber": {"kind": "circle", "top_sign": -1},
        "group_order": 2
      },
      "twist": "trivial"
    },
    {
      "name": "principal",
      "quotient": {"kind": "open", "euler_closed": 0},
      "leaf_closure": {
        "model": "suspension_closure",
        "fiber": {"kind": "circle", "top_sign": 1},
        "group_order": 1
      },
      "twist": "trivial"
    }
  ],
  "suspension": {
    "fiber": {"kind": "torus", "rank": 2, "h1_matrix": [[-1, 0], [0, -1]]},
    "group_order": 2
  },
  "expected": {
    "basic_euler": {
      "value": 2,
      "citation": "2*1 + (-1)*0 = 2; the flip kills the circle class on the fixed closures and the principal closures satisfy Poincare duality with h^0 = h^1 = 1"
    },
    "oracle_betti": {
      "value": [1, 0, 1],
      "citation": "the flip acts by -I on degree one and fixes the volume class: h^0 = h^2 = 1, h^1 = 0"
    }
  }
})json";

// Suspension of two independent irrational rotations of S^2: dense leaves,
// a single stratum whose quotient is a point, and an SO(3) closure acting
// trivially on cohomology. The assembly is the identity map on this one, so
// the entry is effectively an oracle-only check.
const char* kDenseLeavesS2 = R"json({
  "schema_version": "1",
  "name": "dense-leaves-s2",
  "strata": [
    {
      "name": "everything",
      "quotient": {"kind": "closed", "euler_closed": 1},
      "leaf_closure": {
        "model": "suspension_closure",
        "fiber": {"kind": "sphere2", "top_sign": 1},
        "group_order": 1
      },
      "twist": "trivial"
    }
  ],
  "suspension": {
    "fiber": {"kind": "sphere2", "top_sign": 1},
    "group_order": 1
  },
  "expected": {
    "basic_euler": {
      "value": 2,
      "citation": "single point stratum: chi(point) * chi(M,F) = 1 * 2; only constants and multiples of the volume form are basic"
    },
    "oracle_betti": {
      "value": [1, 0, 1],
      "citation": "connected closure group acts trivially on cohomology, leaving the full sphere cohomology: h^0 = h^2 = 1"
    }
  }
})json";

// Hyperbolic torus bundle over the circle, foliated by the contracting
// eigendirection: the single stratum has circle quotient (chi = 0) and toral
// leaf closures with irrational flow. Not taut, and the only entry whose
// oracle is the flat-line-bundle splitting instead of a suspension.
const char* kCarriere = R"json({
  "schema_version": "1",
  "name": "carriere",
  "strata": [
    {
      "name": "toral-closures",
      "quotient": {"kind": "closed", "euler_closed": 0},
      "leaf_closure": {"model": "irrational_flow_torus"},
      "twist": "trivial"
    }
  ],
  "torus_bundle": {"holonomy": "nontrivial"},
  "expected": {
    "basic_euler": {
      "value": 0,
      "citation": "chi(S^1) * chi(torus with irrational flow) = 0 * 0 = 0"
    },
    "oracle_betti": {
      "value": [1, 1, 0],
      "citation": "h^0 = h^1 = 1, h^2 = 0: the expanding-eigenvalue twist kills both classes of the flat summand"
    }
  }
})json";

// Suspension of the quarter-turn rotation of T^2: three circle strata with
// isotropy Z4, Z2 and trivial, quotient an orbifold sphere with three cone
// points. Carries the character table for the representation-valued
// assembly.
const char* kZ4Representation = R"json({
  "schema_version": "1",
  "name": "z4-representation",
  "strata": [
    {
      "name": "z4-fixed-leaves",
      "quotient": {"kind": "closed", "euler_closed": 2},
      "leaf_closure": {"model": "single_leaf"},
      "twist": "trivial"
    },
    {
      "name": "z2-fixed-leaf",
      "quotient": {"kind": "closed", "euler_closed": 1},
      "leaf_closure": {"model": "single_leaf"},
      "twist": "trivial"
    },
    {
      "name": "principal",
      "quotient": {"kind": "open", "euler_closed": 0},
      "leaf_closure": {"model": "single_leaf"},
      "twist": "trivial"
    }
  ],
  "suspension": {
    "fiber": {"kind": "torus", "rank": 2, "h1_matrix": [[0, -1], [1, 0]]},
    "group_order": 4
  },
  "rho_table": {
    "group_order": 4,
    "per_stratum": [
      [1, 0, 0, 0],
      [1, 0, 1, 0],
      [1, 1, 1, 1]
    ]
  },
  "expected": {
    "basic_euler": {
      "value": 2,
      "citation": "2*1 + 1*1 + (-1)*1 = 2 over the three circle strata"
    },
    "rep_euler": {
      "value": [2, -1, 0, -1],
      "citation": "isotypic harmonic forms on the torus: rho0 -> {1, dy1^dy2}, rho1 -> {i dy1 + dy2}, rho2 -> {}, rho3 -> {-i dy1 + dy2}"
    },
    "oracle_betti": {
      "value": [1, 0, 1],
      "citation": "quarter-turn-invariant cohomology of T^2: constants and the area form"
    }
  }
})json";

// Lens-space eta identities: the boundary signature operator on S^3/Z_p with
// isolated fixed-point rotation data, the two display forms of the
// transverse signature, and the blowup defect. The p1 integrals are inputs;
// this synthetic problem is built so that the defect identity holds.
const char* kApsLensSignature = R"json({
  "schema_version": "1",
  "name": "aps-lens-signature",
  "signature": {
    "p": 3,
    "fixed_points": [
      {"m": 1, "n": 1},
      {"m": 2, "n": 2}
    ],
    "p1_blowup": "5/3",
    "p1_original": "23/3"
  },
  "expected": {
    "signature": {
      "value": "3",
      "citation": "blowup form (1/3)(5/3) + (1/3)(2/3 + 2/3) + 2 = 3 and original form (1/3)(23/3) + 4/9 = 3"
    },
    "blowup_defect": {
      "value": true,
      "citation": "(1/3)(23/3 - 5/3) = 2 = number of fixed points"
    },
    "eta": [
      {
        "p": 3, "m": 1, "n": 1, "value": "-2/9",
        "citation": "eta(B) = -(1/3)(cot^2(pi/3) + cot^2(2 pi/3)) = -(1/3)(2/3)"
      },
      {
        "p": 5, "m": 1, "n": 1, "value": "-4/5",
        "citation": "eta(B) = -(1/5)(p-1)(p-2)/3 = -(1/5)(4)"
      }
    ],
    "cot_closed_form": {
      "value": true,
      "max_p": 50,
      "citation": "sum_k cot^2(pi k/p) = (p-1)(p-2)/3 for every p"
    },
    "eta_float_agreement": {
      "value": true,
      "max_p": 60,
      "citation": "floating cotangent pair sums match 4 p s(m n^{-1}, p) within 1e-9"
    }
  }
})json";

const char* kBuiltinTexts[] = {kRotationS2,   kS1xS2,    kKleinBottle,      kDenseLeavesS2,
                               kCarriere,     kZ4Representation, kApsLensSignature};

}  // namespace

const std::vector<ExampleDocument>& builtin_catalog() {
  static const std::vector<ExampleDocument> catalog = [] {
    std::vector<ExampleDocument> docs;
    for (const char* text : kBuiltinTexts) docs.push_back(parse_example(text, "<builtin>"));
    return docs;
  }();
  return catalog;
}

// Raw JSON text of a built-in, for tests that need the canonical-form
// comparison source.
namespace detail {
std::vector<std::string> builtin_texts() {
  return {kBuiltinTexts, kBuiltinTexts + sizeof(kBuiltinTexts) / sizeof(kBuiltinTexts[0])};
}
}  // namespace detail

}  // namespace folidx
