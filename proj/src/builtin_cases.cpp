#include "cubics/catalog.hpp"
#include <map>
namespace cubics {
namespace {
const char* k_line_1 = R"json(
{
 "id": "line-1",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "a1",
   "role": "parameter"
  },
  {
   "name": "u1",
   "role": "parameter"
  },
  {
   "name": "u2",
   "role": "parameter"
  },
  {
   "name": "u3",
   "role": "parameter"
  },
  {
   "name": "u4",
   "role": "parameter"
  },
  {
   "name": "u5",
   "role": "parameter"
  }
 ],
 "parameters": [
  {
   "name": "a1",
   "note": "free; special values may enlarge the group"
  }
 ],
 "cubic": "x1*(x3^2 + zeta(3)*x4^2 + zeta(3)^2*x5^2) + x2*(x3^2 + zeta(3)^2*x4^2 + zeta(3)*x5^2) + x3^2*x4 + x3*x4^2 + x3^2*x5 + x4^2*x5 - x3^3 - x4^3 + a1*x3*x4*x5 + x3*x5^2 + x4*x5^2 - x5^3",
 "curves": [
  {
   "label": "l",
   "components": [
    "s",
    "t",
    "0",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "sigma1",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "sigma2",
   "matrix": [
    [
     "zeta(3)",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "zeta(3)^2",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  }
 ],
 "claimed_group": "S3",
 "maps": [
  {
   "label": "chi",
   "factors": [
    [
     "x1",
     "x2"
    ],
    [
     "x3",
     "x4",
     "x5"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "shapes": [
  {
   "label": "line_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "b1",
     "c1",
     "d1",
     "e1u",
     "f1"
    ],
    [
     "b2",
     "c2",
     "d2",
     "e2u",
     "f2"
    ],
    [
     "b3",
     "c3",
     "d3",
     "e3u",
     "f3"
    ]
   ],
   "witness": "d1*(e2u*f3 - e3u*f2) - e1u*(d2*f3 - d3*f2) + f1*(d2*e3u - d3*e2u)"
  }
 ],
 "verdict": {
  "status": "linearizable",
  "reason": "the projection to the line and to the plane of the blown-down net linearizes every finite action",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[sigma1]",
   "kind": "fixed-point",
   "generator": "sigma1",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "5",
    "4"
   ]
  },
  {
   "name": "pin[sigma2]",
   "kind": "fixed-point",
   "generator": "sigma2",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "zeta(3)",
    "2*zeta(3)^2",
    "4",
    "5",
    "3"
   ]
  },
  {
   "name": "invariant[sigma1]",
   "kind": "invariance",
   "generator": "sigma1"
  },
  {
   "name": "invariant[sigma2]",
   "kind": "invariance",
   "generator": "sigma2"
  },
  {
   "name": "point-on-X",
   "kind": "fixed-point",
   "point": [
    "1",
    "1",
    "1",
    "1",
    "1"
   ],
   "params": {
    "a1": "-3"
   },
   "expect_fixed": true,
   "expect_on_variety": true,
   "expect_smooth": true
  },
  {
   "name": "singular-line",
   "kind": "singular-along",
   "curve": "l"
  },
  {
   "name": "line-on-X",
   "kind": "curve-containment",
   "curve": "l"
  },
  {
   "name": "fiber-points-orbit",
   "kind": "orbit",
   "generators": [
    "sigma1",
    "sigma2"
   ],
   "point": [
    "1",
    "-1",
    "0",
    "0",
    "0"
   ],
   "expected_points": [
    [
     "1",
     "-1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "-zeta(3)",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "-zeta(3)^2",
     "0",
     "0",
     "0"
    ]
   ],
   "expected_group_order": 6
  },
  {
   "name": "equivariance[chi,sigma1]",
   "kind": "map-equivariance",
   "map": "chi",
   "generator": "sigma1"
  },
  {
   "name": "equivariance[chi,sigma2]",
   "kind": "map-equivariance",
   "map": "chi",
   "generator": "sigma2"
  },
  {
   "name": "fibers-generic",
   "kind": "line-in-fibers",
   "p": [
    "u1",
    "u2",
    "0",
    "0",
    "0"
   ],
   "q": [
    "0",
    "0",
    "u3",
    "u4",
    "u5"
   ],
   "constraint": "u1*(u3^2 + zeta(3)*u4^2 + zeta(3)^2*u5^2) + u2*(u3^2 + zeta(3)^2*u4^2 + zeta(3)*u5^2) + u3^2*u4 + u3*u4^2 + u3^2*u5 + u4^2*u5 - u3^3 - u4^3 + a1*u3*u4*u5 + u3*u5^2 + u4*u5^2 - u5^3",
   "expect": false
  },
  {
   "name": "group-S3",
   "kind": "group-structure",
   "generators": [
    "sigma1",
    "sigma2"
   ],
   "expected_order": 6,
   "expected_name": "S3"
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "line_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "b1": "0",
      "b2": "0",
      "b3": "0",
      "c1": "0",
      "c2": "0",
      "c3": "0",
      "d2": "0",
      "d3": "0",
      "e1u": "0",
      "e3u": "0",
      "f1": "0",
      "f2": "0",
      "d1": "1",
      "e2u": "1",
      "f3": "1",
      "lam": "1"
     },
     "expect": true
    }
   ],
   "expected_basis": [
    "b1",
    "c1",
    "d1 - 1",
    "e1u",
    "f1",
    "b2",
    "c2",
    "d2",
    "e2u - 1",
    "f2",
    "b3",
    "c3",
    "d3",
    "e3u",
    "f3 - 1",
    "lam - 1",
    "w_loc - 1"
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "line_stab",
   "localize": true,
   "expected": 1
  }
 ]
}
)json";
const char* k_line_2 = R"json(
{
 "id": "line-2",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  }
 ],
 "cubic": "x1*(x3^2 + zeta(3)*x4^2 + zeta(3)^2*x5^2) + x2*(x3^2 + zeta(3)^2*x4^2 + zeta(3)*x5^2) + x3*x4*x5",
 "curves": [
  {
   "label": "l",
   "components": [
    "s",
    "t",
    "0",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "sigma1",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "sigma2",
   "matrix": [
    [
     "zeta(3)",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "zeta(3)^2",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "iota1",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "-1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "-1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "sigma1_p2",
   "matrix": [
    [
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "1",
     "0"
    ]
   ],
   "det_witness": "1",
   "space": "aux"
  },
  {
   "label": "sigma2_p2",
   "matrix": [
    [
     "0",
     "0",
     "1"
    ],
    [
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0"
    ]
   ],
   "det_witness": "1",
   "space": "aux"
  },
  {
   "label": "iota1_p2",
   "matrix": [
    [
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "-1",
     "0"
    ],
    [
     "0",
     "0",
     "-1"
    ]
   ],
   "det_witness": "1",
   "space": "aux"
  }
 ],
 "claimed_group": "S4",
 "maps": [
  {
   "label": "chi",
   "factors": [
    [
     "x1",
     "x2"
    ],
    [
     "x3",
     "x4",
     "x5"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "shapes": [
  {
   "label": "line_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "b1",
     "c1",
     "d1",
     "e1u",
     "f1"
    ],
    [
     "b2",
     "c2",
     "d2",
     "e2u",
     "f2"
    ],
    [
     "b3",
     "c3",
     "d3",
     "e3u",
     "f3"
    ]
   ],
   "witness": "d1*(e2u*f3 - e3u*f2) - e1u*(d2*f3 - d3*f2) + f1*(d2*e3u - d3*e2u)"
  }
 ],
 "verdict": {
  "status": "linearizable",
  "reason": "the product model carries the standard faithful plane action, which linearizes",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[sigma1]",
   "kind": "fixed-point",
   "generator": "sigma1",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "5",
    "4"
   ]
  },
  {
   "name": "pin[sigma2]",
   "kind": "fixed-point",
   "generator": "sigma2",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "zeta(3)",
    "2*zeta(3)^2",
    "4",
    "5",
    "3"
   ]
  },
  {
   "name": "pin[iota1]",
   "kind": "fixed-point",
   "generator": "iota1",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3",
    "-4",
    "-5"
   ]
  },
  {
   "name": "pin[sigma1_p2]",
   "kind": "fixed-point",
   "generator": "sigma1_p2",
   "point": [
    "1",
    "2",
    "3"
   ],
   "expect_image": [
    "1",
    "3",
    "2"
   ]
  },
  {
   "name": "pin[sigma2_p2]",
   "kind": "fixed-point",
   "generator": "sigma2_p2",
   "point": [
    "1",
    "2",
    "3"
   ],
   "expect_image": [
    "2",
    "3",
    "1"
   ]
  },
  {
   "name": "pin[iota1_p2]",
   "kind": "fixed-point",
   "generator": "iota1_p2",
   "point": [
    "1",
    "2",
    "3"
   ],
   "expect_image": [
    "1",
    "-2",
    "-3"
   ]
  },
  {
   "name": "invariant[sigma1]",
   "kind": "invariance",
   "generator": "sigma1"
  },
  {
   "name": "invariant[sigma2]",
   "kind": "invariance",
   "generator": "sigma2"
  },
  {
   "name": "invariant[iota1]",
   "kind": "invariance",
   "generator": "iota1"
  },
  {
   "name": "point-on-X",
   "kind": "fixed-point",
   "point": [
    "0",
    "-2",
    "6",
    "3",
    "3"
   ],
   "expect_fixed": true,
   "expect_on_variety": true,
   "expect_smooth": true
  },
  {
   "name": "singular-line",
   "kind": "singular-along",
   "curve": "l"
  },
  {
   "name": "blown-up-points-orbit",
   "kind": "orbit",
   "generators": [
    "sigma1_p2",
    "sigma2_p2",
    "iota1_p2"
   ],
   "point": [
    "1",
    "1",
    "1"
   ],
   "expected_points": [
    [
     "1",
     "1",
     "1"
    ],
    [
     "1",
     "1",
     "-1"
    ],
    [
     "1",
     "-1",
     "1"
    ],
    [
     "-1",
     "1",
     "1"
    ]
   ],
   "expected_group_order": 24
  },
  {
   "name": "equivariance[chi,iota1]",
   "kind": "map-equivariance",
   "map": "chi",
   "generator": "iota1"
  },
  {
   "name": "group-S4",
   "kind": "group-structure",
   "generators": [
    "sigma1",
    "sigma2",
    "iota1"
   ],
   "expected_order": 24,
   "expected_name": "S4"
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "line_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "b1": "0",
      "b2": "0",
      "b3": "0",
      "c1": "0",
      "c2": "0",
      "c3": "0",
      "d2": "0",
      "d3": "0",
      "e1u": "0",
      "e3u": "0",
      "f1": "0",
      "f2": "0",
      "d1": "1",
      "e2u": "1",
      "f3": "1",
      "lam": "1"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "line_stab",
   "localize": true,
   "expected": 0
  }
 ]
}
)json";
const char* k_line_3 = R"json(
{
 "id": "line-3",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "y1",
   "role": "curve"
  },
  {
   "name": "y2",
   "role": "curve"
  },
  {
   "name": "y3",
   "role": "curve"
  },
  {
   "name": "y4",
   "role": "curve"
  },
  {
   "name": "y5",
   "role": "curve"
  },
  {
   "name": "y6",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "a_inv",
   "role": "parameter"
  },
  {
   "name": "u1",
   "role": "parameter"
  },
  {
   "name": "u2",
   "role": "parameter"
  },
  {
   "name": "u3",
   "role": "parameter"
  },
  {
   "name": "u4",
   "role": "parameter"
  },
  {
   "name": "u5",
   "role": "parameter"
  }
 ],
 "relations": [
  "a*a_inv - 1"
 ],
 "cubic": "x1*(x3^2 + zeta(3)*x4^2 + zeta(3)^2*x5^2) + x2*(x3^2 + zeta(3)^2*x4^2 + zeta(3)*x5^2)",
 "curves": [
  {
   "label": "l",
   "components": [
    "s",
    "t",
    "0",
    "0",
    "0"
   ]
  },
  {
   "label": "l_y",
   "components": [
    "s",
    "t",
    "0",
    "0",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "sigma1",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "sigma2",
   "matrix": [
    [
     "zeta(3)",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "zeta(3)^2",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "iota1",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "-1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "-1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "tau",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "a",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "a",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "a"
    ]
   ],
   "det_witness": "a",
   "multiplier": "a^2"
  }
 ],
 "claimed_group": "Gm x S4",
 "maps": [
  {
   "label": "chi",
   "factors": [
    [
     "x1",
     "x2"
    ],
    [
     "x3",
     "x4",
     "x5"
    ]
   ],
   "claimed": [
    "equivariant",
    "non-birational"
   ]
  },
  {
   "label": "rho",
   "factors": [
    [
     "x2*x3",
     "x2*x4",
     "x2*x5",
     "x3^2 + zeta(3)*x4^2 + zeta(3)^2*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  },
  {
   "label": "unproj_plane",
   "factors": [
    [
     "x1*x2",
     "x2^2",
     "x3*x2",
     "x4*x2",
     "x5*x2",
     "x3^2 + zeta(3)*x4^2 + zeta(3)^2*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "aux_polys": [
  {
   "label": "Q1",
   "poly": "y3^2 + zeta(3)*y4^2 + zeta(3)^2*y5^2 - y2*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  },
  {
   "label": "Q2",
   "poly": "y3^2 + zeta(3)^2*y4^2 + zeta(3)*y5^2 + y1*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  }
 ],
 "shapes": [
  {
   "label": "line_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "b1",
     "c1",
     "d1",
     "e1u",
     "f1"
    ],
    [
     "b2",
     "c2",
     "d2",
     "e2u",
     "f2"
    ],
    [
     "b3",
     "c3",
     "d3",
     "e3u",
     "f3"
    ]
   ],
   "witness": "d1*(e2u*f3 - e3u*f2) - e1u*(d2*f3 - d3*f2) + f1*(d2*e3u - d3*e2u)"
  },
  {
   "label": "torus345",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "m33",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "m44",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "m55"
    ]
   ],
   "witness": "m33*m44*m55"
  }
 ],
 "verdict": {
  "status": "linearizable",
  "reason": "the coordinate projection has one-dimensional fibers; the unprojection to the quadric intersection and the projection from its singular line linearize the action",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[sigma1]",
   "kind": "fixed-point",
   "generator": "sigma1",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "5",
    "4"
   ]
  },
  {
   "name": "pin[sigma2]",
   "kind": "fixed-point",
   "generator": "sigma2",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "zeta(3)",
    "2*zeta(3)^2",
    "4",
    "5",
    "3"
   ]
  },
  {
   "name": "pin[iota1]",
   "kind": "fixed-point",
   "generator": "iota1",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3",
    "-4",
    "-5"
   ]
  },
  {
   "name": "pin[tau]",
   "kind": "fixed-point",
   "generator": "tau",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3*a",
    "4*a",
    "5*a"
   ]
  },
  {
   "name": "invariant[sigma1]",
   "kind": "invariance",
   "generator": "sigma1"
  },
  {
   "name": "invariant[sigma2]",
   "kind": "invariance",
   "generator": "sigma2"
  },
  {
   "name": "invariant[iota1]",
   "kind": "invariance",
   "generator": "iota1"
  },
  {
   "name": "semi-invariant[tau]",
   "kind": "semi-invariance",
   "generator": "tau",
   "multiplier": "a^2"
  },
  {
   "name": "singular-line",
   "kind": "singular-along",
   "curve": "l"
  },
  {
   "name": "fibers-contain-lines",
   "kind": "line-in-fibers",
   "p": [
    "u1",
    "u2",
    "0",
    "0",
    "0"
   ],
   "q": [
    "0",
    "0",
    "u3",
    "u4",
    "u5"
   ],
   "constraint": "u1*(u3^2 + zeta(3)*u4^2 + zeta(3)^2*u5^2) + u2*(u3^2 + zeta(3)^2*u4^2 + zeta(3)*u5^2)",
   "expect": true
  },
  {
   "name": "equivariance[chi,sigma2]",
   "kind": "map-equivariance",
   "map": "chi",
   "generator": "sigma2"
  },
  {
   "name": "equivariance[rho,sigma1]",
   "kind": "map-equivariance",
   "map": "rho",
   "generator": "sigma1"
  },
  {
   "name": "equivariance[rho,tau]",
   "kind": "map-equivariance",
   "map": "rho",
   "generator": "tau",
   "specialize": {
    "a": "zeta(3)"
   }
  },
  {
   "name": "X22-pullbacks",
   "kind": "map-image-in",
   "map": "unproj_plane",
   "target_polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "X22-singular-line",
   "kind": "singular-along",
   "curve": "l_y",
   "polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "group-C4xS4",
   "kind": "group-structure",
   "generators": [
    "sigma1",
    "sigma2",
    "iota1",
    "tau"
   ],
   "specialize": {
    "a": "zeta(4)"
   },
   "expected_order": 96,
   "expected_name": "C4 x S4"
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus345",
   "localize": true,
   "expected": 1
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "line_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "b1": "0",
      "b2": "0",
      "b3": "0",
      "c1": "0",
      "c2": "0",
      "c3": "0",
      "d2": "0",
      "d3": "0",
      "e1u": "0",
      "e3u": "0",
      "f1": "0",
      "f2": "0",
      "d1": "1",
      "e2u": "1",
      "f3": "1",
      "lam": "1"
     },
     "expect": true
    },
    {
     "label": "iota1",
     "assign": {
      "b1": "0",
      "b2": "0",
      "b3": "0",
      "c1": "0",
      "c2": "0",
      "c3": "0",
      "d2": "0",
      "d3": "0",
      "e1u": "0",
      "e3u": "0",
      "f1": "0",
      "f2": "0",
      "d1": "1",
      "e2u": "-1",
      "f3": "-1",
      "lam": "1"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "line_stab",
   "localize": true,
   "expected": 1
  }
 ]
}
)json";
const char* k_line_4 = R"json(
{
 "id": "line-4",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "t1",
   "role": "parameter"
  },
  {
   "name": "t1_inv",
   "role": "parameter"
  },
  {
   "name": "t2",
   "role": "parameter"
  },
  {
   "name": "t2_inv",
   "role": "parameter"
  }
 ],
 "relations": [
  "t1*t1_inv - 1",
  "t2*t2_inv - 1"
 ],
 "cubic": "x1*x3^2 + x2*x4^2 + x5^3",
 "curves": [
  {
   "label": "l",
   "components": [
    "s",
    "t",
    "0",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "torus1",
   "matrix": [
    [
     "t1_inv^2",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "t1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "t1",
   "multiplier": "1"
  },
  {
   "label": "torus2",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "t2_inv^2",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "t2",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "t2",
   "multiplier": "1"
  },
  {
   "label": "swap",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  }
 ],
 "claimed_group": "Gm^2 : C2",
 "shapes": [
  {
   "label": "line_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "b1",
     "c1",
     "d1",
     "e1u",
     "f1"
    ],
    [
     "b2",
     "c2",
     "d2",
     "e2u",
     "f2"
    ],
    [
     "b3",
     "c3",
     "d3",
     "e3u",
     "f3"
    ]
   ],
   "witness": "d1*(e2u*f3 - e3u*f2) - e1u*(d2*f3 - d3*f2) + f1*(d2*e3u - d3*e2u)"
  },
  {
   "label": "torus_diag4",
   "entries": [
    [
     "m11",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "m22",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "m33",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "m44",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "witness": "m11*m22*m33*m44"
  }
 ],
 "verdict": {
  "status": "linearizable",
  "reason": "the two-torus with the swap acts generically freely on the plane of the projection",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[torus1]",
   "kind": "fixed-point",
   "generator": "torus1",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "t1_inv^2",
    "2",
    "3*t1",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[torus2]",
   "kind": "fixed-point",
   "generator": "torus2",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2*t2_inv^2",
    "3",
    "4*t2",
    "5"
   ]
  },
  {
   "name": "pin[swap]",
   "kind": "fixed-point",
   "generator": "swap",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "4",
    "3",
    "5"
   ]
  },
  {
   "name": "invariant[torus1]",
   "kind": "invariance",
   "generator": "torus1"
  },
  {
   "name": "invariant[torus2]",
   "kind": "invariance",
   "generator": "torus2"
  },
  {
   "name": "invariant[swap]",
   "kind": "invariance",
   "generator": "swap"
  },
  {
   "name": "point-on-X",
   "kind": "fixed-point",
   "point": [
    "1",
    "-2",
    "1",
    "1",
    "1"
   ],
   "expect_fixed": true,
   "expect_on_variety": true,
   "expect_smooth": true
  },
  {
   "name": "singular-line",
   "kind": "singular-along",
   "curve": "l"
  },
  {
   "name": "group-D4",
   "kind": "group-structure",
   "generators": [
    "torus1",
    "torus2",
    "swap"
   ],
   "specialize": {
    "t1": "-1",
    "t2": "-1"
   },
   "expected_order": 8,
   "expected_name": "D4"
  },
  {
   "name": "torus-system",
   "kind": "stabilizer-system",
   "shape": "torus_diag4",
   "localize": true,
   "families": [
    {
     "label": "two-torus",
     "assign": {
      "m11": "t1_inv^2",
      "m22": "t2_inv^2",
      "m33": "t1",
      "m44": "t2",
      "lam": "1"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus_diag4",
   "localize": true,
   "expected": 2
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "line_stab",
   "localize": true,
   "expected": 1
  }
 ]
}
)json";
const char* k_line_5 = R"json(
{
 "id": "line-5",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "t0",
   "role": "parameter"
  },
  {
   "name": "t0_inv",
   "role": "parameter"
  }
 ],
 "relations": [
  "t0*t0_inv - 1"
 ],
 "cubic": "x1*x3^2 + x2*x4^2 + x3*x4*x5 + x5^3",
 "curves": [
  {
   "label": "l",
   "components": [
    "s",
    "t",
    "0",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "torus",
   "matrix": [
    [
     "t0_inv^2",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "t0^2",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "t0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "t0_inv",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "t0",
   "multiplier": "1"
  },
  {
   "label": "swap",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  }
 ],
 "claimed_group": "Gm : C2",
 "shapes": [
  {
   "label": "line_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "b1",
     "c1",
     "d1",
     "e1u",
     "f1"
    ],
    [
     "b2",
     "c2",
     "d2",
     "e2u",
     "f2"
    ],
    [
     "b3",
     "c3",
     "d3",
     "e3u",
     "f3"
    ]
   ],
   "witness": "d1*(e2u*f3 - e3u*f2) - e1u*(d2*f3 - d3*f2) + f1*(d2*e3u - d3*e2u)"
  },
  {
   "label": "torus_diag4",
   "entries": [
    [
     "m11",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "m22",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "m33",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "m44",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "witness": "m11*m22*m33*m44"
  }
 ],
 "verdict": {
  "status": "linearizable",
  "reason": "as in the two-torus case, finite subgroups act generically freely on the projected plane",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[torus]",
   "kind": "fixed-point",
   "generator": "torus",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "t0_inv^2",
    "2*t0^2",
    "3*t0",
    "4*t0_inv",
    "5"
   ]
  },
  {
   "name": "pin[swap]",
   "kind": "fixed-point",
   "generator": "swap",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "4",
    "3",
    "5"
   ]
  },
  {
   "name": "invariant[torus]",
   "kind": "invariance",
   "generator": "torus"
  },
  {
   "name": "invariant[swap]",
   "kind": "invariance",
   "generator": "swap"
  },
  {
   "name": "point-on-X",
   "kind": "fixed-point",
   "point": [
    "1",
    "-3",
    "1",
    "1",
    "1"
   ],
   "expect_fixed": true,
   "expect_on_variety": true,
   "expect_smooth": true
  },
  {
   "name": "singular-line",
   "kind": "singular-along",
   "curve": "l"
  },
  {
   "name": "group-D4",
   "kind": "group-structure",
   "generators": [
    "torus",
    "swap"
   ],
   "specialize": {
    "t0": "zeta(4)"
   },
   "expected_order": 8,
   "expected_name": "D4"
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus_diag4",
   "localize": true,
   "expected": 1
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "line_stab",
   "localize": true,
   "expected": 0
  }
 ]
}
)json";
const char* k_conic_1 = R"json(
{
 "id": "conic-1",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "y1",
   "role": "curve"
  },
  {
   "name": "y2",
   "role": "curve"
  },
  {
   "name": "y3",
   "role": "curve"
  },
  {
   "name": "y4",
   "role": "curve"
  },
  {
   "name": "y5",
   "role": "curve"
  },
  {
   "name": "y6",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "a_inv",
   "role": "parameter"
  },
  {
   "name": "e1",
   "role": "parameter"
  },
  {
   "name": "e2",
   "role": "parameter"
  },
  {
   "name": "e3",
   "role": "parameter"
  }
 ],
 "parameters": [
  {
   "name": "e1",
   "note": "nonzero"
  },
  {
   "name": "e2",
   "note": "nonzero"
  },
  {
   "name": "e3",
   "note": "nonzero"
  }
 ],
 "relations": [
  "a*a_inv - 1"
 ],
 "cubic": "x3*x4^2 + (x1*x2 + x3^2)*x5 + e1*x4^2*x5 + e2*x4*x5^2 + e3*x5^3",
 "curves": [
  {
   "label": "C",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "tau",
   "matrix": [
    [
     "a",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "a_inv",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "a",
   "multiplier": "1"
  },
  {
   "label": "sigma12",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  }
 ],
 "claimed_group": "Gm : C2",
 "maps": [
  {
   "label": "unproj_x5",
   "factors": [
    [
     "x1*x5",
     "x2*x5",
     "x3*x5",
     "x4*x5",
     "x5^2",
     "x3*x4 + e1*x4*x5 + e2*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  },
  {
   "label": "unproj_x4",
   "factors": [
    [
     "-x1*x4",
     "-x2*x4",
     "-x3*x4",
     "-x4^2",
     "-x4*x5",
     "x1*x2 + x3^2 + e3*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "aux_polys": [
  {
   "label": "Q1",
   "poly": "y3*y4 + e1*y4*y5 + e2*y5^2 - y5*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  },
  {
   "label": "Q2",
   "poly": "y1*y2 + y3^2 + e3*y5^2 + y4*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  }
 ],
 "shapes": [
  {
   "label": "plane_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "m41",
     "m42",
     "m43",
     "m44",
     "m45"
    ],
    [
     "m51",
     "m52",
     "m53",
     "m54",
     "m55"
    ]
   ],
   "witness": "m44*m55 - m45*m54"
  },
  {
   "label": "torus12",
   "entries": [
    [
     "m11",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "m22",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "witness": "m11*m22"
  }
 ],
 "verdict": {
  "status": "not-linearizable",
  "reason": "the even dihedral actions are obstructed: one involution fixes a cubic surface on which the residual involution fixes a smooth elliptic curve",
  "unirational": true,
  "notes": [
   "the general member of this family; sub-actions avoiding even dihedral groups remain open"
  ]
 },
 "checks": [
  {
   "name": "pin[tau]",
   "kind": "fixed-point",
   "generator": "tau",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a",
    "2*a_inv",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[sigma12]",
   "kind": "fixed-point",
   "generator": "sigma12",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "invariant[tau]",
   "kind": "invariance",
   "generator": "tau"
  },
  {
   "name": "invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12"
  },
  {
   "name": "plane-invariant[tau]",
   "kind": "invariance",
   "generator": "tau",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "singular-conic",
   "kind": "singular-along",
   "curve": "C"
  },
  {
   "name": "conic-on-X",
   "kind": "curve-containment",
   "curve": "C"
  },
  {
   "name": "unprojection-identity",
   "kind": "map-identity",
   "map1": "unproj_x5",
   "map2": "unproj_x4",
   "expect": true
  },
  {
   "name": "X22-pullbacks",
   "kind": "map-image-in",
   "map": "unproj_x5",
   "target_polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "klein-fixed-data",
   "kind": "no-common-fixed-point",
   "generators": [
    "tau",
    "sigma12"
   ],
   "specialize": {
    "a": "-1"
   },
   "curve": "C",
   "expect": "none",
   "element_data": [
    {
     "generator": "tau",
     "fixes": [
      [
       "1",
       "0"
      ],
      [
       "0",
       "1"
      ]
     ]
    },
    {
     "generator": "sigma12",
     "maps": [
      {
       "from": [
        "1",
        "0"
       ],
       "to": [
        "0",
        "1"
       ]
      },
      {
       "from": [
        "0",
        "1"
       ],
       "to": [
        "1",
        "0"
       ]
      }
     ]
    }
   ]
  },
  {
   "name": "group-dihedral",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12"
   ],
   "dihedral_n": 4
  },
  {
   "name": "equivariance[unproj,tau]",
   "kind": "map-equivariance",
   "map": "unproj_x5",
   "generator": "tau",
   "specialize": {
    "a": "zeta(4)"
   },
   "params": {
    "e1": "1",
    "e2": "1",
    "e3": "1"
   }
  },
  {
   "name": "smooth-slice-cubic",
   "kind": "smooth-plane-cubic",
   "slice_vars": [
    "x1",
    "x2"
   ],
   "params": {
    "e1": "1",
    "e2": "1",
    "e3": "1"
   }
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus12",
   "multiplier": "one",
   "localize": true,
   "expected": 1
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "plane_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "1",
      "m55": "1",
      "lam": "1"
     },
     "expect": true
    },
    {
     "label": "eta2-not-here",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "zeta(3)",
      "m55": "zeta(3)^2",
      "lam": "zeta(3)^2"
     },
     "expect": false
    }
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "plane_stab",
   "localize": true,
   "params": {
    "e1": "1",
    "e2": "1",
    "e3": "1"
   },
   "expected": 0
  }
 ]
}
)json";
const char* k_conic_2 = R"json(
{
 "id": "conic-2",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "y1",
   "role": "curve"
  },
  {
   "name": "y2",
   "role": "curve"
  },
  {
   "name": "y3",
   "role": "curve"
  },
  {
   "name": "y4",
   "role": "curve"
  },
  {
   "name": "y5",
   "role": "curve"
  },
  {
   "name": "y6",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "a_inv",
   "role": "parameter"
  },
  {
   "name": "e1",
   "role": "parameter"
  },
  {
   "name": "e3",
   "role": "parameter"
  }
 ],
 "parameters": [
  {
   "name": "e1",
   "note": "nonzero"
  },
  {
   "name": "e3",
   "note": "nonzero"
  }
 ],
 "relations": [
  "a*a_inv - 1"
 ],
 "cubic": "x3*x4^2 + (x1*x2 + x3^2)*x5 + e1*x4^2*x5 + e3*x5^3",
 "curves": [
  {
   "label": "C",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "tau",
   "matrix": [
    [
     "a",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "a_inv",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "a",
   "multiplier": "1"
  },
  {
   "label": "sigma12",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "eta1",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "-1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  }
 ],
 "claimed_group": "C2 x (Gm : C2)",
 "maps": [
  {
   "label": "unproj_x5",
   "factors": [
    [
     "x1*x5",
     "x2*x5",
     "x3*x5",
     "x4*x5",
     "x5^2",
     "x3*x4 + e1*x4*x5"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  },
  {
   "label": "unproj_x4",
   "factors": [
    [
     "-x1*x4",
     "-x2*x4",
     "-x3*x4",
     "-x4^2",
     "-x4*x5",
     "x1*x2 + x3^2 + e3*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "aux_polys": [
  {
   "label": "Q1",
   "poly": "y3*y4 + e1*y4*y5 - y5*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  },
  {
   "label": "Q2",
   "poly": "y1*y2 + y3^2 + e3*y5^2 + y4*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  }
 ],
 "shapes": [
  {
   "label": "plane_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "m41",
     "m42",
     "m43",
     "m44",
     "m45"
    ],
    [
     "m51",
     "m52",
     "m53",
     "m54",
     "m55"
    ]
   ],
   "witness": "m44*m55 - m45*m54"
  },
  {
   "label": "torus12",
   "entries": [
    [
     "m11",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "m22",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "witness": "m11*m22"
  }
 ],
 "verdict": {
  "status": "not-linearizable",
  "reason": "the even dihedral actions are obstructed: one involution fixes a cubic surface on which the residual involution fixes a smooth elliptic curve",
  "unirational": true,
  "notes": []
 },
 "checks": [
  {
   "name": "pin[tau]",
   "kind": "fixed-point",
   "generator": "tau",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a",
    "2*a_inv",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[sigma12]",
   "kind": "fixed-point",
   "generator": "sigma12",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "invariant[tau]",
   "kind": "invariance",
   "generator": "tau"
  },
  {
   "name": "invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12"
  },
  {
   "name": "pin[eta1]",
   "kind": "fixed-point",
   "generator": "eta1",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3",
    "-4",
    "5"
   ]
  },
  {
   "name": "semi-invariant[eta1]",
   "kind": "semi-invariance",
   "generator": "eta1",
   "multiplier": "1"
  },
  {
   "name": "plane-invariant[tau]",
   "kind": "invariance",
   "generator": "tau",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[eta1]",
   "kind": "invariance",
   "generator": "eta1",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "singular-conic",
   "kind": "singular-along",
   "curve": "C"
  },
  {
   "name": "conic-on-X",
   "kind": "curve-containment",
   "curve": "C"
  },
  {
   "name": "unprojection-identity",
   "kind": "map-identity",
   "map1": "unproj_x5",
   "map2": "unproj_x4",
   "expect": true
  },
  {
   "name": "X22-pullbacks",
   "kind": "map-image-in",
   "map": "unproj_x5",
   "target_polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "klein-fixed-data",
   "kind": "no-common-fixed-point",
   "generators": [
    "tau",
    "sigma12"
   ],
   "specialize": {
    "a": "-1"
   },
   "curve": "C",
   "expect": "none",
   "element_data": [
    {
     "generator": "tau",
     "fixes": [
      [
       "1",
       "0"
      ],
      [
       "0",
       "1"
      ]
     ]
    },
    {
     "generator": "sigma12",
     "maps": [
      {
       "from": [
        "1",
        "0"
       ],
       "to": [
        "0",
        "1"
       ]
      },
      {
       "from": [
        "0",
        "1"
       ],
       "to": [
        "1",
        "0"
       ]
      }
     ]
    }
   ]
  },
  {
   "name": "group-C2xD4",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12",
    "eta1"
   ],
   "dihedral_n": 4,
   "cyclic_factor": 2
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus12",
   "multiplier": "one",
   "localize": true,
   "expected": 1
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "plane_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "1",
      "m55": "1",
      "lam": "1"
     },
     "expect": true
    },
    {
     "label": "eta1",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "-1",
      "m55": "1",
      "lam": "1"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "plane_stab",
   "localize": true,
   "params": {
    "e1": "1",
    "e3": "1"
   },
   "expected": 0
  }
 ]
}
)json";
const char* k_conic_3 = R"json(
{
 "id": "conic-3",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "y1",
   "role": "curve"
  },
  {
   "name": "y2",
   "role": "curve"
  },
  {
   "name": "y3",
   "role": "curve"
  },
  {
   "name": "y4",
   "role": "curve"
  },
  {
   "name": "y5",
   "role": "curve"
  },
  {
   "name": "y6",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "a_inv",
   "role": "parameter"
  },
  {
   "name": "e2",
   "role": "parameter"
  }
 ],
 "parameters": [
  {
   "name": "e2",
   "note": "nonzero"
  }
 ],
 "relations": [
  "a*a_inv - 1"
 ],
 "cubic": "x3*x4^2 + (x1*x2 + x3^2)*x5 + e2*x4*x5^2",
 "curves": [
  {
   "label": "C",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "tau",
   "matrix": [
    [
     "a",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "a_inv",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "a",
   "multiplier": "1"
  },
  {
   "label": "sigma12",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "eta2",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "zeta(3)",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "zeta(3)^2"
    ]
   ],
   "det_witness": "1",
   "multiplier": "zeta(3)^2"
  }
 ],
 "claimed_group": "C3 x (Gm : C2)",
 "maps": [
  {
   "label": "unproj_x5",
   "factors": [
    [
     "x1*x5",
     "x2*x5",
     "x3*x5",
     "x4*x5",
     "x5^2",
     "x3*x4 + e2*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  },
  {
   "label": "unproj_x4",
   "factors": [
    [
     "-x1*x4",
     "-x2*x4",
     "-x3*x4",
     "-x4^2",
     "-x4*x5",
     "x1*x2 + x3^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "aux_polys": [
  {
   "label": "Q1",
   "poly": "y3*y4 + e2*y5^2 - y5*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  },
  {
   "label": "Q2",
   "poly": "y1*y2 + y3^2 + y4*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  }
 ],
 "shapes": [
  {
   "label": "plane_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "m41",
     "m42",
     "m43",
     "m44",
     "m45"
    ],
    [
     "m51",
     "m52",
     "m53",
     "m54",
     "m55"
    ]
   ],
   "witness": "m44*m55 - m45*m54"
  },
  {
   "label": "torus12",
   "entries": [
    [
     "m11",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "m22",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "witness": "m11*m22"
  }
 ],
 "verdict": {
  "status": "not-linearizable",
  "reason": "the even dihedral actions are obstructed: one involution fixes a cubic surface on which the residual involution fixes a smooth elliptic curve",
  "unirational": true,
  "notes": []
 },
 "checks": [
  {
   "name": "pin[tau]",
   "kind": "fixed-point",
   "generator": "tau",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a",
    "2*a_inv",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[sigma12]",
   "kind": "fixed-point",
   "generator": "sigma12",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "invariant[tau]",
   "kind": "invariance",
   "generator": "tau"
  },
  {
   "name": "invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12"
  },
  {
   "name": "pin[eta2]",
   "kind": "fixed-point",
   "generator": "eta2",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3",
    "4*zeta(3)",
    "5*zeta(3)^2"
   ]
  },
  {
   "name": "semi-invariant[eta2]",
   "kind": "semi-invariance",
   "generator": "eta2",
   "multiplier": "zeta(3)^2"
  },
  {
   "name": "plane-invariant[tau]",
   "kind": "invariance",
   "generator": "tau",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[eta2]",
   "kind": "invariance",
   "generator": "eta2",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "singular-conic",
   "kind": "singular-along",
   "curve": "C"
  },
  {
   "name": "conic-on-X",
   "kind": "curve-containment",
   "curve": "C"
  },
  {
   "name": "unprojection-identity",
   "kind": "map-identity",
   "map1": "unproj_x5",
   "map2": "unproj_x4",
   "expect": true
  },
  {
   "name": "X22-pullbacks",
   "kind": "map-image-in",
   "map": "unproj_x5",
   "target_polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "klein-fixed-data",
   "kind": "no-common-fixed-point",
   "generators": [
    "tau",
    "sigma12"
   ],
   "specialize": {
    "a": "-1"
   },
   "curve": "C",
   "expect": "none",
   "element_data": [
    {
     "generator": "tau",
     "fixes": [
      [
       "1",
       "0"
      ],
      [
       "0",
       "1"
      ]
     ]
    },
    {
     "generator": "sigma12",
     "maps": [
      {
       "from": [
        "1",
        "0"
       ],
       "to": [
        "0",
        "1"
       ]
      },
      {
       "from": [
        "0",
        "1"
       ],
       "to": [
        "1",
        "0"
       ]
      }
     ]
    }
   ]
  },
  {
   "name": "group-C3xD4",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12",
    "eta2"
   ],
   "dihedral_n": 4,
   "cyclic_factor": 3
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus12",
   "multiplier": "one",
   "localize": true,
   "expected": 1
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "plane_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "1",
      "m55": "1",
      "lam": "1"
     },
     "expect": true
    },
    {
     "label": "eta2",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "zeta(3)",
      "m55": "zeta(3)^2",
      "lam": "zeta(3)^2"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "plane_stab",
   "localize": true,
   "params": {
    "e2": "1"
   },
   "expected": 0
  }
 ]
}
)json";
const char* k_conic_4 = R"json(
{
 "id": "conic-4",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "y1",
   "role": "curve"
  },
  {
   "name": "y2",
   "role": "curve"
  },
  {
   "name": "y3",
   "role": "curve"
  },
  {
   "name": "y4",
   "role": "curve"
  },
  {
   "name": "y5",
   "role": "curve"
  },
  {
   "name": "y6",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "a_inv",
   "role": "parameter"
  },
  {
   "name": "e3",
   "role": "parameter"
  }
 ],
 "parameters": [
  {
   "name": "e3",
   "note": "nonzero"
  }
 ],
 "relations": [
  "a*a_inv - 1"
 ],
 "cubic": "x3*x4^2 + (x1*x2 + x3^2)*x5 + e3*x5^3",
 "curves": [
  {
   "label": "C",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "tau",
   "matrix": [
    [
     "a",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "a_inv",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "a",
   "multiplier": "1"
  },
  {
   "label": "sigma12",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "eta3",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "zeta(4)",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "-1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "-1"
  }
 ],
 "claimed_group": "C4 x (Gm : C2)",
 "maps": [
  {
   "label": "unproj_x5",
   "factors": [
    [
     "x1*x5",
     "x2*x5",
     "x3*x5",
     "x4*x5",
     "x5^2",
     "x3*x4"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  },
  {
   "label": "unproj_x4",
   "factors": [
    [
     "-x1*x4",
     "-x2*x4",
     "-x3*x4",
     "-x4^2",
     "-x4*x5",
     "x1*x2 + x3^2 + e3*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "aux_polys": [
  {
   "label": "Q1",
   "poly": "y3*y4 - y5*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  },
  {
   "label": "Q2",
   "poly": "y1*y2 + y3^2 + e3*y5^2 + y4*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  }
 ],
 "shapes": [
  {
   "label": "plane_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "m41",
     "m42",
     "m43",
     "m44",
     "m45"
    ],
    [
     "m51",
     "m52",
     "m53",
     "m54",
     "m55"
    ]
   ],
   "witness": "m44*m55 - m45*m54"
  },
  {
   "label": "torus12",
   "entries": [
    [
     "m11",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "m22",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "witness": "m11*m22"
  }
 ],
 "verdict": {
  "status": "not-linearizable",
  "reason": "the even dihedral actions are obstructed: one involution fixes a cubic surface on which the residual involution fixes a smooth elliptic curve",
  "unirational": true,
  "notes": []
 },
 "checks": [
  {
   "name": "pin[tau]",
   "kind": "fixed-point",
   "generator": "tau",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a",
    "2*a_inv",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[sigma12]",
   "kind": "fixed-point",
   "generator": "sigma12",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "invariant[tau]",
   "kind": "invariance",
   "generator": "tau"
  },
  {
   "name": "invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12"
  },
  {
   "name": "pin[eta3]",
   "kind": "fixed-point",
   "generator": "eta3",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3",
    "4*zeta(4)",
    "-5"
   ]
  },
  {
   "name": "semi-invariant[eta3]",
   "kind": "semi-invariance",
   "generator": "eta3",
   "multiplier": "-1"
  },
  {
   "name": "plane-invariant[tau]",
   "kind": "invariance",
   "generator": "tau",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[eta3]",
   "kind": "invariance",
   "generator": "eta3",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "singular-conic",
   "kind": "singular-along",
   "curve": "C"
  },
  {
   "name": "conic-on-X",
   "kind": "curve-containment",
   "curve": "C"
  },
  {
   "name": "unprojection-identity",
   "kind": "map-identity",
   "map1": "unproj_x5",
   "map2": "unproj_x4",
   "expect": true
  },
  {
   "name": "X22-pullbacks",
   "kind": "map-image-in",
   "map": "unproj_x5",
   "target_polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "klein-fixed-data",
   "kind": "no-common-fixed-point",
   "generators": [
    "tau",
    "sigma12"
   ],
   "specialize": {
    "a": "-1"
   },
   "curve": "C",
   "expect": "none",
   "element_data": [
    {
     "generator": "tau",
     "fixes": [
      [
       "1",
       "0"
      ],
      [
       "0",
       "1"
      ]
     ]
    },
    {
     "generator": "sigma12",
     "maps": [
      {
       "from": [
        "1",
        "0"
       ],
       "to": [
        "0",
        "1"
       ]
      },
      {
       "from": [
        "0",
        "1"
       ],
       "to": [
        "1",
        "0"
       ]
      }
     ]
    }
   ]
  },
  {
   "name": "group-C4xD4",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12",
    "eta3"
   ],
   "dihedral_n": 4,
   "cyclic_factor": 4
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus12",
   "multiplier": "one",
   "localize": true,
   "expected": 1
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "plane_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "1",
      "m55": "1",
      "lam": "1"
     },
     "expect": true
    },
    {
     "label": "eta3",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "zeta(4)",
      "m55": "-1",
      "lam": "-1"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "plane_stab",
   "localize": true,
   "params": {
    "e3": "1"
   },
   "expected": 0
  }
 ]
}
)json";
const char* k_conic_5 = R"json(
{
 "id": "conic-5",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "y1",
   "role": "curve"
  },
  {
   "name": "y2",
   "role": "curve"
  },
  {
   "name": "y3",
   "role": "curve"
  },
  {
   "name": "y4",
   "role": "curve"
  },
  {
   "name": "y5",
   "role": "curve"
  },
  {
   "name": "y6",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "a_inv",
   "role": "parameter"
  },
  {
   "name": "b",
   "role": "parameter"
  },
  {
   "name": "c",
   "role": "parameter"
  },
  {
   "name": "d",
   "role": "parameter"
  },
  {
   "name": "e1",
   "role": "parameter"
  },
  {
   "name": "e2",
   "role": "parameter"
  }
 ],
 "parameters": [
  {
   "name": "e1",
   "note": "nonzero"
  },
  {
   "name": "e2",
   "note": "nonzero"
  }
 ],
 "relations": [
  "a*a_inv - 1"
 ],
 "cubic": "x5*(x1*x2 + x3^2) + x4^3 + e1*x4*x5^2 + e2*x5^3",
 "curves": [
  {
   "label": "C",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0"
   ]
  },
  {
   "label": "C_y",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "pgl2_block",
   "matrix": [
    [
     "a^2",
     "b^2",
     "zeta(4)*a*b",
     "0",
     "0"
    ],
    [
     "c^2",
     "d^2",
     "zeta(4)*c*d",
     "0",
     "0"
    ],
    [
     "-2*zeta(4)*a*c",
     "-2*zeta(4)*b*d",
     "a*d + b*c",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "a*d - b*c",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "a*d - b*c"
    ]
   ],
   "det_witness": "a*d - b*c",
   "multiplier": "(a*d - b*c)^3"
  },
  {
   "label": "tau",
   "matrix": [
    [
     "a",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "a_inv",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "a",
   "multiplier": "1"
  },
  {
   "label": "sigma12",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "eta1",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "-1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "-1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "-1"
  }
 ],
 "claimed_group": "C2 x PGL2",
 "maps": [
  {
   "label": "unproj_x5",
   "factors": [
    [
     "x1*x5",
     "x2*x5",
     "x3*x5",
     "x4*x5",
     "x5^2",
     "x4^2 + e1*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  },
  {
   "label": "unproj_x4",
   "factors": [
    [
     "-x1*x4",
     "-x2*x4",
     "-x3*x4",
     "-x4^2",
     "-x4*x5",
     "x1*x2 + x3^2 + e2*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "aux_polys": [
  {
   "label": "Q1",
   "poly": "y4^2 + e1*y5^2 - y5*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  },
  {
   "label": "Q2",
   "poly": "y1*y2 + y3^2 + e2*y5^2 + y4*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  }
 ],
 "shapes": [
  {
   "label": "plane_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "m41",
     "m42",
     "m43",
     "m44",
     "m45"
    ],
    [
     "m51",
     "m52",
     "m53",
     "m54",
     "m55"
    ]
   ],
   "witness": "m44*m55 - m45*m54"
  },
  {
   "label": "torus12",
   "entries": [
    [
     "m11",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "m22",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "witness": "m11*m22"
  }
 ],
 "verdict": {
  "status": "not-linearizable",
  "reason": "the even dihedral subgroups of the rotation factor are obstructed exactly as in the general conic case",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[pgl2_block]",
   "kind": "fixed-point",
   "generator": "pgl2_block",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a^2 + 2*c^2 - 6*zeta(4)*a*c",
    "b^2 + 2*d^2 - 6*zeta(4)*b*d",
    "zeta(4)*a*b + 2*zeta(4)*c*d + 3*a*d + 3*b*c",
    "4*a*d - 4*b*c",
    "5*a*d - 5*b*c"
   ]
  },
  {
   "name": "pin[tau]",
   "kind": "fixed-point",
   "generator": "tau",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a",
    "2*a_inv",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[sigma12]",
   "kind": "fixed-point",
   "generator": "sigma12",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[eta1]",
   "kind": "fixed-point",
   "generator": "eta1",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3",
    "-4",
    "-5"
   ]
  },
  {
   "name": "semi-invariant[pgl2]",
   "kind": "semi-invariance",
   "generator": "pgl2_block",
   "multiplier": "(a*d - b*c)^3",
   "pure_power_of": "a*d - b*c",
   "exponent": 3
  },
  {
   "name": "invariant[tau]",
   "kind": "invariance",
   "generator": "tau"
  },
  {
   "name": "invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12"
  },
  {
   "name": "semi-invariant[eta1]",
   "kind": "semi-invariance",
   "generator": "eta1",
   "multiplier": "-1"
  },
  {
   "name": "plane-invariant[pgl2_block]",
   "kind": "invariance",
   "generator": "pgl2_block",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[tau]",
   "kind": "invariance",
   "generator": "tau",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[eta1]",
   "kind": "invariance",
   "generator": "eta1",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "singular-conic",
   "kind": "singular-along",
   "curve": "C"
  },
  {
   "name": "conic-on-X",
   "kind": "curve-containment",
   "curve": "C"
  },
  {
   "name": "unprojection-identity",
   "kind": "map-identity",
   "map1": "unproj_x5",
   "map2": "unproj_x4",
   "expect": true
  },
  {
   "name": "X22-pullbacks",
   "kind": "map-image-in",
   "map": "unproj_x5",
   "target_polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "X22-singular-conic",
   "kind": "singular-along",
   "curve": "C_y",
   "polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "klein-fixed-data",
   "kind": "no-common-fixed-point",
   "generators": [
    "tau",
    "sigma12"
   ],
   "specialize": {
    "a": "-1"
   },
   "curve": "C",
   "expect": "none",
   "element_data": [
    {
     "generator": "tau",
     "fixes": [
      [
       "1",
       "0"
      ],
      [
       "0",
       "1"
      ]
     ]
    },
    {
     "generator": "sigma12",
     "maps": [
      {
       "from": [
        "1",
        "0"
       ],
       "to": [
        "0",
        "1"
       ]
      },
      {
       "from": [
        "0",
        "1"
       ],
       "to": [
        "1",
        "0"
       ]
      }
     ]
    }
   ]
  },
  {
   "name": "group-dihedral",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12"
   ],
   "dihedral_n": 4
  },
  {
   "name": "group-C2xD4",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12",
    "eta1"
   ],
   "dihedral_n": 4,
   "cyclic_factor": 2
  },
  {
   "name": "equivariance[unproj,pgl2]",
   "kind": "map-equivariance",
   "map": "unproj_x5",
   "generator": "pgl2_block",
   "specialize": {
    "a": "1",
    "b": "0",
    "c": "1",
    "d": "1"
   },
   "params": {
    "e1": "1",
    "e2": "1"
   }
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus12",
   "multiplier": "one",
   "localize": true,
   "expected": 1
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "plane_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "1",
      "m55": "1",
      "lam": "1"
     },
     "expect": true
    },
    {
     "label": "eta1",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "-1",
      "m55": "-1",
      "lam": "-1"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "plane_stab",
   "localize": true,
   "params": {
    "e1": "1",
    "e2": "1"
   },
   "expected": 0
  }
 ]
}
)json";
const char* k_conic_6 = R"json(
{
 "id": "conic-6",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "y1",
   "role": "curve"
  },
  {
   "name": "y2",
   "role": "curve"
  },
  {
   "name": "y3",
   "role": "curve"
  },
  {
   "name": "y4",
   "role": "curve"
  },
  {
   "name": "y5",
   "role": "curve"
  },
  {
   "name": "y6",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "a_inv",
   "role": "parameter"
  },
  {
   "name": "b",
   "role": "parameter"
  },
  {
   "name": "c",
   "role": "parameter"
  },
  {
   "name": "d",
   "role": "parameter"
  },
  {
   "name": "e1",
   "role": "parameter"
  }
 ],
 "parameters": [
  {
   "name": "e1",
   "note": "nonzero"
  }
 ],
 "relations": [
  "a*a_inv - 1"
 ],
 "cubic": "x5*(x1*x2 + x3^2) + x4^3 + e1*x4*x5^2",
 "curves": [
  {
   "label": "C",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0"
   ]
  },
  {
   "label": "C_y",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "pgl2_block",
   "matrix": [
    [
     "a^2",
     "b^2",
     "zeta(4)*a*b",
     "0",
     "0"
    ],
    [
     "c^2",
     "d^2",
     "zeta(4)*c*d",
     "0",
     "0"
    ],
    [
     "-2*zeta(4)*a*c",
     "-2*zeta(4)*b*d",
     "a*d + b*c",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "a*d - b*c",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "a*d - b*c"
    ]
   ],
   "det_witness": "a*d - b*c",
   "multiplier": "(a*d - b*c)^3"
  },
  {
   "label": "tau",
   "matrix": [
    [
     "a",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "a_inv",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "a",
   "multiplier": "1"
  },
  {
   "label": "sigma12",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "eta2",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "zeta(4)",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "-zeta(4)"
    ]
   ],
   "det_witness": "1",
   "multiplier": "-zeta(4)"
  }
 ],
 "claimed_group": "C4 x PGL2",
 "maps": [
  {
   "label": "unproj_x5",
   "factors": [
    [
     "x1*x5",
     "x2*x5",
     "x3*x5",
     "x4*x5",
     "x5^2",
     "x4^2 + e1*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  },
  {
   "label": "unproj_x4",
   "factors": [
    [
     "-x1*x4",
     "-x2*x4",
     "-x3*x4",
     "-x4^2",
     "-x4*x5",
     "x1*x2 + x3^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "aux_polys": [
  {
   "label": "Q1",
   "poly": "y4^2 + e1*y5^2 - y5*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  },
  {
   "label": "Q2",
   "poly": "y1*y2 + y3^2 + y4*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  }
 ],
 "shapes": [
  {
   "label": "plane_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "m41",
     "m42",
     "m43",
     "m44",
     "m45"
    ],
    [
     "m51",
     "m52",
     "m53",
     "m54",
     "m55"
    ]
   ],
   "witness": "m44*m55 - m45*m54"
  },
  {
   "label": "torus12",
   "entries": [
    [
     "m11",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "m22",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "witness": "m11*m22"
  }
 ],
 "verdict": {
  "status": "not-linearizable",
  "reason": "the even dihedral subgroups of the rotation factor are obstructed exactly as in the general conic case",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[pgl2_block]",
   "kind": "fixed-point",
   "generator": "pgl2_block",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a^2 + 2*c^2 - 6*zeta(4)*a*c",
    "b^2 + 2*d^2 - 6*zeta(4)*b*d",
    "zeta(4)*a*b + 2*zeta(4)*c*d + 3*a*d + 3*b*c",
    "4*a*d - 4*b*c",
    "5*a*d - 5*b*c"
   ]
  },
  {
   "name": "pin[tau]",
   "kind": "fixed-point",
   "generator": "tau",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a",
    "2*a_inv",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[sigma12]",
   "kind": "fixed-point",
   "generator": "sigma12",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[eta2]",
   "kind": "fixed-point",
   "generator": "eta2",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3",
    "4*zeta(4)",
    "-5*zeta(4)"
   ]
  },
  {
   "name": "semi-invariant[pgl2]",
   "kind": "semi-invariance",
   "generator": "pgl2_block",
   "multiplier": "(a*d - b*c)^3",
   "pure_power_of": "a*d - b*c",
   "exponent": 3
  },
  {
   "name": "invariant[tau]",
   "kind": "invariance",
   "generator": "tau"
  },
  {
   "name": "invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12"
  },
  {
   "name": "semi-invariant[eta2]",
   "kind": "semi-invariance",
   "generator": "eta2",
   "multiplier": "-zeta(4)"
  },
  {
   "name": "plane-invariant[pgl2_block]",
   "kind": "invariance",
   "generator": "pgl2_block",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[tau]",
   "kind": "invariance",
   "generator": "tau",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[eta2]",
   "kind": "invariance",
   "generator": "eta2",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "singular-conic",
   "kind": "singular-along",
   "curve": "C"
  },
  {
   "name": "conic-on-X",
   "kind": "curve-containment",
   "curve": "C"
  },
  {
   "name": "unprojection-identity",
   "kind": "map-identity",
   "map1": "unproj_x5",
   "map2": "unproj_x4",
   "expect": true
  },
  {
   "name": "X22-pullbacks",
   "kind": "map-image-in",
   "map": "unproj_x5",
   "target_polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "X22-singular-conic",
   "kind": "singular-along",
   "curve": "C_y",
   "polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "klein-fixed-data",
   "kind": "no-common-fixed-point",
   "generators": [
    "tau",
    "sigma12"
   ],
   "specialize": {
    "a": "-1"
   },
   "curve": "C",
   "expect": "none",
   "element_data": [
    {
     "generator": "tau",
     "fixes": [
      [
       "1",
       "0"
      ],
      [
       "0",
       "1"
      ]
     ]
    },
    {
     "generator": "sigma12",
     "maps": [
      {
       "from": [
        "1",
        "0"
       ],
       "to": [
        "0",
        "1"
       ]
      },
      {
       "from": [
        "0",
        "1"
       ],
       "to": [
        "1",
        "0"
       ]
      }
     ]
    }
   ]
  },
  {
   "name": "group-dihedral",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12"
   ],
   "dihedral_n": 4
  },
  {
   "name": "group-C4xD4",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12",
    "eta2"
   ],
   "dihedral_n": 4,
   "cyclic_factor": 4
  },
  {
   "name": "equivariance[unproj,pgl2]",
   "kind": "map-equivariance",
   "map": "unproj_x5",
   "generator": "pgl2_block",
   "specialize": {
    "a": "1",
    "b": "0",
    "c": "1",
    "d": "1"
   },
   "params": {
    "e1": "1"
   }
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus12",
   "multiplier": "one",
   "localize": true,
   "expected": 1
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "plane_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "1",
      "m55": "1",
      "lam": "1"
     },
     "expect": true
    },
    {
     "label": "eta2",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "zeta(4)",
      "m55": "-zeta(4)",
      "lam": "-zeta(4)"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "plane_stab",
   "localize": true,
   "params": {
    "e1": "1"
   },
   "expected": 0
  }
 ]
}
)json";
const char* k_conic_7 = R"json(
{
 "id": "conic-7",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "y1",
   "role": "curve"
  },
  {
   "name": "y2",
   "role": "curve"
  },
  {
   "name": "y3",
   "role": "curve"
  },
  {
   "name": "y4",
   "role": "curve"
  },
  {
   "name": "y5",
   "role": "curve"
  },
  {
   "name": "y6",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "a_inv",
   "role": "parameter"
  },
  {
   "name": "b",
   "role": "parameter"
  },
  {
   "name": "c",
   "role": "parameter"
  },
  {
   "name": "d",
   "role": "parameter"
  },
  {
   "name": "e2",
   "role": "parameter"
  }
 ],
 "parameters": [
  {
   "name": "e2",
   "note": "nonzero"
  }
 ],
 "relations": [
  "a*a_inv - 1"
 ],
 "cubic": "x5*(x1*x2 + x3^2) + x4^3 + e2*x5^3",
 "curves": [
  {
   "label": "C",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0"
   ]
  },
  {
   "label": "C_y",
   "components": [
    "s^2",
    "-t^2",
    "s*t",
    "0",
    "0",
    "0"
   ]
  }
 ],
 "generators": [
  {
   "label": "pgl2_block",
   "matrix": [
    [
     "a^2",
     "b^2",
     "zeta(4)*a*b",
     "0",
     "0"
    ],
    [
     "c^2",
     "d^2",
     "zeta(4)*c*d",
     "0",
     "0"
    ],
    [
     "-2*zeta(4)*a*c",
     "-2*zeta(4)*b*d",
     "a*d + b*c",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "a*d - b*c",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "a*d - b*c"
    ]
   ],
   "det_witness": "a*d - b*c",
   "multiplier": "(a*d - b*c)^3"
  },
  {
   "label": "tau",
   "matrix": [
    [
     "a",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "a_inv",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "a",
   "multiplier": "1"
  },
  {
   "label": "sigma12",
   "matrix": [
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "eta3",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "-zeta(3)",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "-1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "-1"
  }
 ],
 "claimed_group": "C6 x PGL2",
 "maps": [
  {
   "label": "unproj_x5",
   "factors": [
    [
     "x1*x5",
     "x2*x5",
     "x3*x5",
     "x4*x5",
     "x5^2",
     "x4^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  },
  {
   "label": "unproj_x4",
   "factors": [
    [
     "-x1*x4",
     "-x2*x4",
     "-x3*x4",
     "-x4^2",
     "-x4*x5",
     "x1*x2 + x3^2 + e2*x5^2"
    ]
   ],
   "claimed": [
    "birational",
    "equivariant"
   ]
  }
 ],
 "aux_polys": [
  {
   "label": "Q1",
   "poly": "y4^2 - y5*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  },
  {
   "label": "Q2",
   "poly": "y1*y2 + y3^2 + e2*y5^2 + y4*y6",
   "coords": [
    "y1",
    "y2",
    "y3",
    "y4",
    "y5",
    "y6"
   ]
  }
 ],
 "shapes": [
  {
   "label": "plane_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "m41",
     "m42",
     "m43",
     "m44",
     "m45"
    ],
    [
     "m51",
     "m52",
     "m53",
     "m54",
     "m55"
    ]
   ],
   "witness": "m44*m55 - m45*m54"
  },
  {
   "label": "torus12",
   "entries": [
    [
     "m11",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "m22",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "witness": "m11*m22"
  }
 ],
 "verdict": {
  "status": "not-linearizable",
  "reason": "the even dihedral subgroups of the rotation factor are obstructed exactly as in the general conic case",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[pgl2_block]",
   "kind": "fixed-point",
   "generator": "pgl2_block",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a^2 + 2*c^2 - 6*zeta(4)*a*c",
    "b^2 + 2*d^2 - 6*zeta(4)*b*d",
    "zeta(4)*a*b + 2*zeta(4)*c*d + 3*a*d + 3*b*c",
    "4*a*d - 4*b*c",
    "5*a*d - 5*b*c"
   ]
  },
  {
   "name": "pin[tau]",
   "kind": "fixed-point",
   "generator": "tau",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "a",
    "2*a_inv",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[sigma12]",
   "kind": "fixed-point",
   "generator": "sigma12",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "2",
    "1",
    "3",
    "4",
    "5"
   ]
  },
  {
   "name": "pin[eta3]",
   "kind": "fixed-point",
   "generator": "eta3",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3",
    "-4*zeta(3)",
    "-5"
   ]
  },
  {
   "name": "semi-invariant[pgl2]",
   "kind": "semi-invariance",
   "generator": "pgl2_block",
   "multiplier": "(a*d - b*c)^3",
   "pure_power_of": "a*d - b*c",
   "exponent": 3
  },
  {
   "name": "invariant[tau]",
   "kind": "invariance",
   "generator": "tau"
  },
  {
   "name": "invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12"
  },
  {
   "name": "semi-invariant[eta3]",
   "kind": "semi-invariance",
   "generator": "eta3",
   "multiplier": "-1"
  },
  {
   "name": "plane-invariant[pgl2_block]",
   "kind": "invariance",
   "generator": "pgl2_block",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[tau]",
   "kind": "invariance",
   "generator": "tau",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[sigma12]",
   "kind": "invariance",
   "generator": "sigma12",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "plane-invariant[eta3]",
   "kind": "invariance",
   "generator": "eta3",
   "ideal": [
    "x4",
    "x5"
   ]
  },
  {
   "name": "singular-conic",
   "kind": "singular-along",
   "curve": "C"
  },
  {
   "name": "conic-on-X",
   "kind": "curve-containment",
   "curve": "C"
  },
  {
   "name": "unprojection-identity",
   "kind": "map-identity",
   "map1": "unproj_x5",
   "map2": "unproj_x4",
   "expect": true
  },
  {
   "name": "X22-pullbacks",
   "kind": "map-image-in",
   "map": "unproj_x5",
   "target_polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "X22-singular-conic",
   "kind": "singular-along",
   "curve": "C_y",
   "polys": [
    "Q1",
    "Q2"
   ]
  },
  {
   "name": "klein-fixed-data",
   "kind": "no-common-fixed-point",
   "generators": [
    "tau",
    "sigma12"
   ],
   "specialize": {
    "a": "-1"
   },
   "curve": "C",
   "expect": "none",
   "element_data": [
    {
     "generator": "tau",
     "fixes": [
      [
       "1",
       "0"
      ],
      [
       "0",
       "1"
      ]
     ]
    },
    {
     "generator": "sigma12",
     "maps": [
      {
       "from": [
        "1",
        "0"
       ],
       "to": [
        "0",
        "1"
       ]
      },
      {
       "from": [
        "0",
        "1"
       ],
       "to": [
        "1",
        "0"
       ]
      }
     ]
    }
   ]
  },
  {
   "name": "group-dihedral",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12"
   ],
   "dihedral_n": 4
  },
  {
   "name": "group-C6xD4",
   "kind": "group-structure",
   "generators": [
    "tau",
    "sigma12",
    "eta3"
   ],
   "dihedral_n": 4,
   "cyclic_factor": 6
  },
  {
   "name": "equivariance[unproj,pgl2]",
   "kind": "map-equivariance",
   "map": "unproj_x5",
   "generator": "pgl2_block",
   "specialize": {
    "a": "1",
    "b": "0",
    "c": "1",
    "d": "1"
   },
   "params": {
    "e2": "1"
   }
  },
  {
   "name": "torus-dimension",
   "kind": "dimension",
   "shape": "torus12",
   "multiplier": "one",
   "localize": true,
   "expected": 1
  },
  {
   "name": "H-system",
   "kind": "stabilizer-system",
   "shape": "plane_stab",
   "localize": true,
   "families": [
    {
     "label": "identity",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "1",
      "m55": "1",
      "lam": "1"
     },
     "expect": true
    },
    {
     "label": "eta3",
     "assign": {
      "m41": "0",
      "m42": "0",
      "m43": "0",
      "m45": "0",
      "m51": "0",
      "m52": "0",
      "m53": "0",
      "m54": "0",
      "m44": "-zeta(3)",
      "m55": "-1",
      "lam": "-1"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "H-dimension",
   "kind": "dimension",
   "shape": "plane_stab",
   "localize": true,
   "params": {
    "e2": "1"
   },
   "expected": 0
  }
 ]
}
)json";
const char* k_chordal = R"json(
{
 "id": "chordal",
 "ambient_dim": 4,
 "max_conductor": 60,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "b",
   "role": "parameter"
  },
  {
   "name": "c",
   "role": "parameter"
  },
  {
   "name": "d",
   "role": "parameter"
  }
 ],
 "cubic": "x1*x4^2 + x2^2*x5 - x1*x3*x5 - 2*x2*x3*x4 + x3^3",
 "curves": [
  {
   "label": "nu4",
   "components": [
    "s^4",
    "s^3*t",
    "s^2*t^2",
    "s*t^3",
    "t^4"
   ]
  }
 ],
 "generators": [
  {
   "label": "klein_diag",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "-1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "-1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "klein_rev",
   "matrix": [
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "m_generic",
   "matrix": [
    [
     "a",
     "b"
    ],
    [
     "c",
     "d"
    ]
   ],
   "det_witness": "a*d - b*c",
   "space": "aux"
  },
  {
   "label": "rot6",
   "matrix": [
    [
     "zeta(6)",
     "0"
    ],
    [
     "0",
     "1"
    ]
   ],
   "det_witness": "zeta(6)",
   "space": "aux"
  },
  {
   "label": "rot5",
   "matrix": [
    [
     "zeta(5)",
     "0"
    ],
    [
     "0",
     "1"
    ]
   ],
   "det_witness": "zeta(5)",
   "space": "aux",
   "source": "derived"
  },
  {
   "label": "flip",
   "matrix": [
    [
     "0",
     "1"
    ],
    [
     "1",
     "0"
    ]
   ],
   "det_witness": "-1",
   "space": "aux"
  },
  {
   "label": "tetra_i",
   "matrix": [
    [
     "zeta(4)",
     "0"
    ],
    [
     "0",
     "-zeta(4)"
    ]
   ],
   "det_witness": "1",
   "space": "aux",
   "source": "derived"
  },
  {
   "label": "tetra_w",
   "matrix": [
    [
     "1/2 + 1/2*zeta(4)",
     "1/2 + 1/2*zeta(4)"
    ],
    [
     "-1/2 + 1/2*zeta(4)",
     "1/2 - 1/2*zeta(4)"
    ]
   ],
   "det_witness": "1",
   "space": "aux",
   "source": "derived"
  },
  {
   "label": "oct_s",
   "matrix": [
    [
     "zeta(4)",
     "0"
    ],
    [
     "0",
     "1"
    ]
   ],
   "det_witness": "zeta(4)",
   "space": "aux",
   "source": "derived"
  },
  {
   "label": "icosa_t",
   "matrix": [
    [
     "-zeta(5) + zeta(5)^4",
     "zeta(5)^2 - zeta(5)^3"
    ],
    [
     "zeta(5)^2 - zeta(5)^3",
     "zeta(5) - zeta(5)^4"
    ]
   ],
   "det_witness": "5",
   "space": "aux",
   "source": "derived"
  }
 ],
 "claimed_group": "PGL2",
 "maps": [],
 "verdict": {
  "status": "linearizable",
  "reason": "every finite subgroup of the rotation group either contains the Klein four-group, which fixes a smooth point, or is cyclic; the full connected group is a different matter",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[klein_diag]",
   "kind": "fixed-point",
   "generator": "klein_diag",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "-2",
    "3",
    "-4",
    "5"
   ]
  },
  {
   "name": "pin[klein_rev]",
   "kind": "fixed-point",
   "generator": "klein_rev",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "5",
    "4",
    "3",
    "2",
    "1"
   ]
  },
  {
   "name": "pin[m_generic]",
   "kind": "fixed-point",
   "generator": "m_generic",
   "point": [
    "1",
    "2"
   ],
   "expect_image": [
    "a + 2*c",
    "b + 2*d"
   ]
  },
  {
   "name": "pin[rot6]",
   "kind": "fixed-point",
   "generator": "rot6",
   "point": [
    "1",
    "2"
   ],
   "expect_image": [
    "zeta(6)",
    "2"
   ]
  },
  {
   "name": "pin[rot5]",
   "kind": "fixed-point",
   "generator": "rot5",
   "point": [
    "1",
    "2"
   ],
   "expect_image": [
    "zeta(5)",
    "2"
   ]
  },
  {
   "name": "pin[flip]",
   "kind": "fixed-point",
   "generator": "flip",
   "point": [
    "1",
    "2"
   ],
   "expect_image": [
    "2",
    "1"
   ]
  },
  {
   "name": "pin[tetra_i]",
   "kind": "fixed-point",
   "generator": "tetra_i",
   "point": [
    "1",
    "2"
   ],
   "expect_image": [
    "zeta(4)",
    "-2*zeta(4)"
   ]
  },
  {
   "name": "pin[tetra_w]",
   "kind": "fixed-point",
   "generator": "tetra_w",
   "point": [
    "1",
    "2"
   ],
   "expect_image": [
    "-1/2 + 3/2*zeta(4)",
    "3/2 - 1/2*zeta(4)"
   ]
  },
  {
   "name": "pin[oct_s]",
   "kind": "fixed-point",
   "generator": "oct_s",
   "point": [
    "1",
    "2"
   ],
   "expect_image": [
    "zeta(4)",
    "2"
   ]
  },
  {
   "name": "pin[icosa_t]",
   "kind": "fixed-point",
   "generator": "icosa_t",
   "point": [
    "1",
    "2"
   ],
   "expect_image": [
    "-zeta(5) + zeta(5)^4 + 2*zeta(5)^2 - 2*zeta(5)^3",
    "zeta(5)^2 - zeta(5)^3 + 2*zeta(5) - 2*zeta(5)^4"
   ]
  },
  {
   "name": "invariant[klein_diag]",
   "kind": "invariance",
   "generator": "klein_diag"
  },
  {
   "name": "invariant[klein_rev]",
   "kind": "invariance",
   "generator": "klein_rev"
  },
  {
   "name": "singular-quartic",
   "kind": "singular-along",
   "curve": "nu4"
  },
  {
   "name": "quartic-on-X",
   "kind": "curve-containment",
   "curve": "nu4"
  },
  {
   "name": "sym4-semi-invariance",
   "kind": "semi-invariance",
   "generator": "m_generic",
   "sym_power": 4,
   "multiplier": "(a*d - b*c)^6",
   "pure_power_of": "a*d - b*c",
   "exponent": 6
  },
  {
   "name": "fixed-smooth-point[klein_diag]",
   "kind": "fixed-point",
   "generator": "klein_diag",
   "point": [
    "1",
    "0",
    "1",
    "0",
    "1"
   ],
   "expect_fixed": true,
   "expect_on_variety": true,
   "expect_smooth": true
  },
  {
   "name": "fixed-smooth-point[klein_rev]",
   "kind": "fixed-point",
   "generator": "klein_rev",
   "point": [
    "1",
    "0",
    "1",
    "0",
    "1"
   ],
   "expect_fixed": true,
   "expect_on_variety": true,
   "expect_smooth": true
  },
  {
   "name": "group-klein",
   "kind": "group-structure",
   "generators": [
    "klein_diag",
    "klein_rev"
   ],
   "expected_order": 4,
   "expected_name": "C2^2"
  },
  {
   "name": "group-C6",
   "kind": "group-structure",
   "generators": [
    "rot6"
   ],
   "sym_power": 4,
   "expected_order": 6,
   "expected_name": "C6",
   "sym2_faithful": true
  },
  {
   "name": "group-D5",
   "kind": "group-structure",
   "generators": [
    "rot5",
    "flip"
   ],
   "sym_power": 4,
   "expected_order": 10,
   "expected_name": "D5",
   "sym2_faithful": true
  },
  {
   "name": "group-A4",
   "kind": "group-structure",
   "generators": [
    "tetra_i",
    "tetra_w"
   ],
   "sym_power": 4,
   "expected_order": 12,
   "expected_name": "A4",
   "sym2_faithful": true
  },
  {
   "name": "group-S4",
   "kind": "group-structure",
   "generators": [
    "tetra_i",
    "tetra_w",
    "oct_s"
   ],
   "sym_power": 4,
   "expected_order": 24,
   "expected_name": "S4",
   "sym2_faithful": true
  },
  {
   "name": "group-A5",
   "kind": "group-structure",
   "generators": [
    "rot5",
    "icosa_t"
   ],
   "sym_power": 4,
   "expected_order": 60,
   "expected_name": "A5",
   "sym2_faithful": true
  }
 ]
}
)json";
const char* k_plane = R"json(
{
 "id": "plane",
 "ambient_dim": 4,
 "max_conductor": 12,
 "variables": [
  {
   "name": "x1",
   "role": "geometry"
  },
  {
   "name": "x2",
   "role": "geometry"
  },
  {
   "name": "x3",
   "role": "geometry"
  },
  {
   "name": "x4",
   "role": "geometry"
  },
  {
   "name": "x5",
   "role": "geometry"
  },
  {
   "name": "s",
   "role": "curve"
  },
  {
   "name": "t",
   "role": "curve"
  },
  {
   "name": "y1",
   "role": "curve"
  },
  {
   "name": "y2",
   "role": "curve"
  },
  {
   "name": "z1",
   "role": "curve"
  },
  {
   "name": "z2",
   "role": "curve"
  },
  {
   "name": "z3",
   "role": "curve"
  },
  {
   "name": "t1",
   "role": "curve"
  },
  {
   "name": "t2",
   "role": "curve"
  },
  {
   "name": "t3",
   "role": "curve"
  },
  {
   "name": "t4",
   "role": "curve"
  },
  {
   "name": "t5",
   "role": "curve"
  },
  {
   "name": "t6",
   "role": "curve"
  },
  {
   "name": "a",
   "role": "parameter"
  },
  {
   "name": "b",
   "role": "parameter"
  },
  {
   "name": "c",
   "role": "parameter"
  },
  {
   "name": "d",
   "role": "parameter"
  },
  {
   "name": "alpha",
   "role": "parameter"
  },
  {
   "name": "beta",
   "role": "parameter"
  },
  {
   "name": "gamma",
   "role": "parameter"
  },
  {
   "name": "gamma_inv",
   "role": "parameter"
  }
 ],
 "relations": [
  "gamma*gamma_inv - 1"
 ],
 "cubic": "x1*x4^2 + x2*x4*x5 + x3*x5^2",
 "generators": [
  {
   "label": "gl2_family",
   "matrix": [
    [
     "d^2",
     "-2*b*d",
     "b^2",
     "0",
     "0"
    ],
    [
     "-c*d",
     "a*d + b*c",
     "-a*b",
     "0",
     "0"
    ],
    [
     "c^2",
     "-2*a*c",
     "a^2",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "a",
     "c"
    ],
    [
     "0",
     "0",
     "0",
     "b",
     "d"
    ]
   ],
   "det_witness": "a*d - b*c",
   "multiplier": "(a*d - b*c)^2"
  },
  {
   "label": "stabi_family",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "-alpha",
     "-beta",
     "gamma",
     "0"
    ],
    [
     "alpha",
     "beta",
     "0",
     "0",
     "gamma"
    ]
   ],
   "det_witness": "gamma",
   "multiplier": "gamma^2"
  },
  {
   "label": "gl2_conc",
   "matrix": [
    [
     "1",
     "-2",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "-1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "1"
    ]
   ],
   "det_witness": "1",
   "multiplier": "1"
  },
  {
   "label": "gl2_pi",
   "matrix": [
    [
     "d^2",
     "-2*b*d",
     "b^2"
    ],
    [
     "-c*d",
     "a*d + b*c",
     "-a*b"
    ],
    [
     "c^2",
     "-2*a*c",
     "a^2"
    ]
   ],
   "det_witness": "a*d - b*c",
   "space": "aux"
  },
  {
   "label": "prod_sym",
   "matrix": [
    [
     "d",
     "b",
     "0",
     "0",
     "0"
    ],
    [
     "c",
     "a",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "d",
     "b",
     "0"
    ],
    [
     "0",
     "0",
     "c",
     "a",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "a*d - b*c",
   "space": "aux",
   "vars": [
    "y1",
    "y2",
    "z1",
    "z2",
    "z3"
   ]
  },
  {
   "label": "prod_1011",
   "matrix": [
    [
     "1",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "space": "aux",
   "vars": [
    "y1",
    "y2",
    "z1",
    "z2",
    "z3"
   ]
  },
  {
   "label": "prod_trans",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "alpha",
     "-beta",
     "1"
    ]
   ],
   "det_witness": "1",
   "space": "aux",
   "vars": [
    "y1",
    "y2",
    "z1",
    "z2",
    "z3"
   ]
  },
  {
   "label": "stabi_g1",
   "matrix": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "-alpha",
     "-beta",
     "1",
     "0"
    ],
    [
     "alpha",
     "beta",
     "0",
     "0",
     "1"
    ]
   ],
   "det_witness": "1",
   "space": "aux"
  }
 ],
 "claimed_group": "GL2 x (Ga^2 : Gm)",
 "maps": [
  {
   "label": "segre_proj",
   "source_vars": [
    "y1",
    "y2",
    "z1",
    "z2",
    "z3"
   ],
   "factors": [
    [
     "y1*z1",
     "-y1*z2 - y2*z1",
     "y2*z2",
     "y2*z3",
     "y1*z3"
    ]
   ],
   "claimed": [
    "birational"
   ]
  },
  {
   "label": "segre6",
   "source_vars": [
    "y1",
    "y2",
    "z1",
    "z2",
    "z3"
   ],
   "factors": [
    [
     "y1*z1",
     "y1*z2",
     "y1*z3",
     "y2*z1",
     "y2*z2",
     "y2*z3"
    ]
   ]
  },
  {
   "label": "proj54",
   "source_vars": [
    "t1",
    "t2",
    "t3",
    "t4",
    "t5",
    "t6"
   ],
   "factors": [
    [
     "t1",
     "-t2 - t4",
     "t5",
     "t6",
     "t3"
    ]
   ]
  }
 ],
 "shapes": [
  {
   "label": "plane_stab",
   "entries": [
    [
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "m41",
     "m42",
     "m43",
     "m44",
     "m45"
    ],
    [
     "m51",
     "m52",
     "m53",
     "m54",
     "m55"
    ]
   ],
   "witness": "m44*m55 - m45*m54"
  }
 ],
 "verdict": {
  "status": "linearizable",
  "reason": "the blowup of the singular plane is the product of a line and a plane, and every finite subgroup lifts to a linear bundle action",
  "unirational": true
 },
 "checks": [
  {
   "name": "pin[gl2_family]",
   "kind": "fixed-point",
   "generator": "gl2_family",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "d^2 - 2*c*d + 3*c^2",
    "-2*b*d + 2*a*d + 2*b*c - 6*a*c",
    "b^2 - 2*a*b + 3*a^2",
    "4*a + 5*b",
    "4*c + 5*d"
   ]
  },
  {
   "name": "pin[stabi_family]",
   "kind": "fixed-point",
   "generator": "stabi_family",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1 + 5*alpha",
    "2 - 4*alpha + 5*beta",
    "3 - 4*beta",
    "4*gamma",
    "5*gamma"
   ]
  },
  {
   "name": "pin[gl2_conc]",
   "kind": "fixed-point",
   "generator": "gl2_conc",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "0",
    "2",
    "9",
    "5"
   ]
  },
  {
   "name": "pin[prod_sym]",
   "kind": "fixed-point",
   "generator": "prod_sym",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "d + 2*c",
    "b + 2*a",
    "3*d + 4*c",
    "3*b + 4*a",
    "5"
   ]
  },
  {
   "name": "pin[prod_trans]",
   "kind": "fixed-point",
   "generator": "prod_trans",
   "point": [
    "1",
    "2",
    "3",
    "4",
    "5"
   ],
   "expect_image": [
    "1",
    "2",
    "3 + 5*alpha",
    "4 - 5*beta",
    "5"
   ]
  },
  {
   "name": "semi-invariant[gl2]",
   "kind": "semi-invariance",
   "generator": "gl2_family",
   "multiplier": "(a*d - b*c)^2",
   "pure_power_of": "a*d - b*c",
   "exponent": 2
  },
  {
   "name": "semi-invariant[stabi]",
   "kind": "semi-invariance",
   "generator": "stabi_family",
   "multiplier": "gamma^2"
  },
  {
   "name": "invariant[gl2_conc]",
   "kind": "invariance",
   "generator": "gl2_conc"
  },
  {
   "name": "discriminant-conic",
   "kind": "semi-invariance",
   "generator": "gl2_pi",
   "form": "4*x1*x3 - x2^2",
   "vars": [
    "x1",
    "x2",
    "x3"
   ],
   "multiplier": "(a*d - b*c)^2"
  },
  {
   "name": "segre-image-in-X",
   "kind": "map-image-in",
   "map": "segre_proj",
   "modulo": "none"
  },
  {
   "name": "projection-center-excluded",
   "kind": "map-image-in",
   "map": "segre6",
   "point": [
    "0",
    "1",
    "0",
    "-1",
    "0",
    "0"
   ],
   "expect": "excluded"
  },
  {
   "name": "projection-factorization",
   "kind": "map-identity",
   "map1": "segre_proj",
   "map2": "proj54",
   "compose_with": "segre6",
   "expect": true
  },
  {
   "name": "equivariance[gl2-symbolic]",
   "kind": "map-equivariance",
   "map": "segre_proj",
   "source_action": "prod_sym",
   "expected_target": "gl2_family"
  },
  {
   "name": "equivariance[gl2-concrete]",
   "kind": "map-equivariance",
   "map": "segre_proj",
   "source_action": "prod_1011",
   "expected_target": "gl2_conc"
  },
  {
   "name": "equivariance[translations]",
   "kind": "map-equivariance",
   "map": "segre_proj",
   "source_action": "prod_trans",
   "expected_target": "stabi_g1"
  },
  {
   "name": "group-C2xS3",
   "kind": "group-structure",
   "generators": [
    {
     "label": "gl2_family",
     "specialize": {
      "a": "zeta(3)",
      "b": "0",
      "c": "0",
      "d": "zeta(3)^2"
     }
    },
    {
     "label": "gl2_family",
     "specialize": {
      "a": "0",
      "b": "1",
      "c": "1",
      "d": "0"
     }
    },
    {
     "label": "stabi_family",
     "specialize": {
      "alpha": "0",
      "beta": "0",
      "gamma": "-1"
     }
    }
   ],
   "expected_order": 12,
   "expected_name": "C2 x S3"
  },
  {
   "name": "stabilizer-family",
   "kind": "stabilizer-system",
   "shape": "plane_stab",
   "localize": true,
   "families": [
    {
     "label": "translations",
     "assign": {
      "m41": "0",
      "m42": "-alpha",
      "m43": "-beta",
      "m44": "gamma",
      "m45": "0",
      "m51": "alpha",
      "m52": "beta",
      "m53": "0",
      "m54": "0",
      "m55": "gamma",
      "lam": "gamma^2"
     },
     "expect": true
    }
   ]
  },
  {
   "name": "stabilizer-dimension",
   "kind": "dimension",
   "shape": "plane_stab",
   "localize": true,
   "expected": 3
  }
 ]
}
)json";
}  // namespace

std::vector<std::string> builtin_ids() {
    return {"line-1", "line-2", "line-3", "line-4", "line-5",
            "conic-1", "conic-2", "conic-3", "conic-4", "conic-5",
            "conic-6", "conic-7", "chordal", "plane"};
}

const std::string& builtin_source(const std::string& id) {
    static const std::map<std::string, std::string> sources = {
        {"line-1", k_line_1},
        {"line-2", k_line_2},
        {"line-3", k_line_3},
        {"line-4", k_line_4},
        {"line-5", k_line_5},
        {"conic-1", k_conic_1},
        {"conic-2", k_conic_2},
        {"conic-3", k_conic_3},
        {"conic-4", k_conic_4},
        {"conic-5", k_conic_5},
        {"conic-6", k_conic_6},
        {"conic-7", k_conic_7},
        {"chordal", k_chordal},
        {"plane", k_plane},
    };
    auto it = sources.find(id);
    if (it == sources.end()) throw load_error("unknown built-in case: " + id);
    return it->second;
}

}  // namespace cubics
