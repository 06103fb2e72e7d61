#include "flagdes/constructions.hpp"

#include <nlohmann/json.hpp>

namespace flagdes {

// Built-in catalog of example data. Field element tokens: "0", "1", "wN" for
// the N-th power of the designated primitive element. src values: "table" =
// transcribed entry, "structure-order" = order implied by the structure name,
// "identity:<...>" = value obtained from the stated identity, "selected" =
// value fixed by the documented selection procedure in the builder.
static const char *kCatalogJson = R"json({
  "version": 1,
  "table1": [
    {"line": 1, "p": 5, "params": {"v": 25, "k": 4, "r": 16, "b": 100, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w1","w3"],["w3","w3"]],
     "gens": [[["w1","0"],["0","1"]], [["0","1"],["1","0"]]],
     "structure": "(Z4 x Z4):Z2", "g0_order": 32, "g0_order_src": "structure-order"},
    {"line": 2, "p": 7, "params": {"v": 49, "k": 3, "r": 48, "b": 784, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["1","w1"]],
     "gens": [[["1","w5"],["w5","w3"]], [["w3","w5"],["w4","0"]]],
     "structure": "Z3 x Z2.S4-", "g0_order": 144, "g0_order_src": "structure-order"},
    {"line": 3, "p": 7, "params": {"v": 49, "k": 3, "r": 48, "b": 784, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["1","w1"]],
     "gens": [[["0","w1"],["w2","w3"]], [["w3","w3"],["w2","1"]]],
     "structure": "Z2.S4-", "g0_order": 48, "g0_order_src": "structure-order"},
    {"line": 4, "p": 7, "params": {"v": 49, "k": 3, "r": 48, "b": 784, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["1","w1"]],
     "gens": [[["w1","w5"],["w5","w4"]], [["1","w1"],["w1","w3"]]],
     "structure": "Z3 x Q16", "g0_order": 48, "g0_order_src": "structure-order"},
    {"line": 5, "p": 11, "params": {"v": 121, "k": 3, "r": 120, "b": 4840, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w3","w4"]],
     "gens": [[["w8","w7"],["w9","w7"]], [["0","w2"],["w2","w5"]]],
     "structure": "Z5 x GL2(3)", "g0_order": 240, "g0_order_src": "structure-order"},
    {"line": 6, "p": 11, "params": {"v": 121, "k": 3, "r": 120, "b": 4840, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w4","w2"]],
     "gens": [[["w8","w7"],["w9","w7"]], [["0","w2"],["w2","w5"]]],
     "structure": "Z5 x GL2(3)", "g0_order": 240, "g0_order_src": "structure-order"},
    {"line": 7, "p": 11, "params": {"v": 121, "k": 3, "r": 120, "b": 4840, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w2","w2"]],
     "gens": [[["w4","w4"],["1","w1"]], [["w8","1"],["1","w3"]]],
     "structure": "Z5 x SL2(3)", "g0_order": 120, "g0_order_src": "structure-order"},
    {"line": 8, "p": 11, "params": {"v": 121, "k": 4, "r": 80, "b": 2420, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w4","w1"],["w9","w5"]],
     "gens": [[["1","0"],["w3","w5"]], [["0","w2"],["w7","0"]]],
     "structure": "Z5 x SD16", "g0_order": 80, "g0_order_src": "structure-order"},
    {"line": 9, "p": 19, "params": {"v": 361, "k": 6, "r": 144, "b": 8664, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w4","w5"],["w4","w14"],["w7","w1"],["w7","w17"]],
     "gens": [[["w11","w13"],["w1","w13"]], [["0","w2"],["w2","w7"]]],
     "structure": "Z9 x GL2(3)", "g0_order": 432, "g0_order_src": "structure-order"},
    {"line": 10, "p": 19, "params": {"v": 361, "k": 6, "r": 144, "b": 8664, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w4","w5"],["w4","w14"],["w7","w1"],["w7","w17"]],
     "gens": [[["1","0"],["w5","w9"]], [["0","w2"],["w11","0"]]],
     "structure": "Z9 x SD16", "g0_order": 144, "g0_order_src": "structure-order"},
    {"line": 11, "p": 19, "params": {"v": 361, "k": 6, "r": 144, "b": 8664, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w5","w11"],["w5","w13"],["w8","w10"],["w8","w14"]],
     "gens": [[["w11","w13"],["w1","w13"]], [["0","w2"],["w2","w7"]]],
     "structure": "Z9 x GL2(3)", "g0_order": 432, "g0_order_src": "structure-order"},
    {"line": 12, "p": 19, "params": {"v": 361, "k": 6, "r": 144, "b": 8664, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w5","w11"],["w5","w13"],["w8","w10"],["w8","w14"]],
     "gens": [[["1","0"],["w5","w9"]], [["0","w2"],["w11","0"]]],
     "structure": "Z9 x SD16", "g0_order": 144, "g0_order_src": "structure-order"},
    {"line": 13, "p": 19, "params": {"v": 361, "k": 6, "r": 144, "b": 8664, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["1","w12"],["1","w13"],["w15","w9"],["w15","w14"]],
     "gens": [[["1","0"],["w5","w9"]], [["0","w2"],["w11","0"]]],
     "structure": "Z9 x SD16", "g0_order": 144, "g0_order_src": "structure-order"},
    {"line": 14, "p": 19, "params": {"v": 361, "k": 6, "r": 144, "b": 8664, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w1","w10"],["w1","w17"],["w4","w2"],["w4","w11"]],
     "gens": [[["1","0"],["w5","w9"]], [["0","w2"],["w11","0"]]],
     "structure": "Z9 x SD16", "g0_order": 144, "g0_order_src": "structure-order"},
    {"line": 15, "p": 19, "params": {"v": 361, "k": 6, "r": 144, "b": 8664, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w2","w2"],["w2","w12"],["w5","w5"],["w5","w16"]],
     "gens": [[["1","0"],["w5","w9"]], [["0","w2"],["w11","0"]]],
     "structure": "Z9 x SD16", "g0_order": 144, "g0_order_src": "structure-order"},
    {"line": 16, "p": 19, "params": {"v": 361, "k": 6, "r": 144, "b": 8664, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w3","w9"],["w3","w12"],["w6","w2"],["w6","w15"]],
     "gens": [[["1","0"],["w5","w9"]], [["0","w2"],["w11","0"]]],
     "structure": "Z9 x SD16", "g0_order": 144, "g0_order_src": "structure-order"},
    {"line": 17, "p": 23, "params": {"v": 529, "k": 3, "r": 528, "b": 93104, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w6","w7"]],
     "gens": [[["w6","w7"],["w8","w21"]], [["w1","w12"],["w1","w1"]]],
     "structure": "Z11 x Z2.S4-", "g0_order": 528, "g0_order_src": "structure-order"},
    {"line": 18, "p": 23, "params": {"v": 529, "k": 3, "r": 528, "b": 93104, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w7","w17"]],
     "gens": [[["w6","w7"],["w8","w21"]], [["w1","w12"],["w1","w1"]]],
     "structure": "Z11 x Z2.S4-", "g0_order": 528, "g0_order_src": "structure-order"},
    {"line": 19, "p": 23, "params": {"v": 529, "k": 3, "r": 528, "b": 93104, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w8","w17"]],
     "gens": [[["w6","w7"],["w8","w21"]], [["w1","w12"],["w1","w1"]]],
     "structure": "Z11 x Z2.S4-", "g0_order": 528, "g0_order_src": "structure-order"},
    {"line": 20, "p": 23, "params": {"v": 529, "k": 3, "r": 528, "b": 93104, "lambda": 2, "src": "table"},
     "block": [["0","0"],["0","1"],["w10","w17"]],
     "gens": [[["w6","w7"],["w8","w21"]], [["w1","w12"],["w1","w1"]]],
     "structure": "Z11 x Z2.S4-", "g0_order": 528, "g0_order_src": "structure-order"}
  ],
  "table2": [
    {"line": 1, "words": ["a", "b"], "order": 192, "stab": 6,
     "structure": "((Z2.S4-):Z2):Z2", "order_src": "structure-order", "stab_src": "table"},
    {"line": 2, "words": ["b(ba)^2b^9", "a^-1b^-1(b^-1a^-1)^2b^-2"], "order": 96, "stab": 3,
     "structure": "(Z2.S4-):Z2", "order_src": "structure-order", "stab_src": "table"},
    {"line": 3, "words": ["ab^-1a^-1b^-1", "(a^-1b^-1)^3a^-1"], "order": 96, "stab": 3,
     "structure": "((Z8 x Z2):Z2):Z3", "order_src": "structure-order", "stab_src": "table"},
    {"line": 4, "words": ["(ba)^3b", "b^-2"], "order": 96, "stab": 3,
     "structure": "(((Z4 x Z2):Z2):Z3):Z2", "order_src": "structure-order", "stab_src": "table"},
    {"line": 5, "words": ["b^3a", "ab(ba)^2b^6(ba)^3b^2", "b(ba)^2b^5(ba)^3b"], "order": 64, "stab": 2,
     "structure": "(Z2 x SD16):Z2", "order_src": "structure-order", "stab_src": "table"},
    {"line": 6, "words": ["b^3a", "(ba)^3b", "b(ba)^2b^5(ba)^3b"], "order": 32, "stab": 1,
     "structure": "Z2 x SD16", "order_src": "structure-order", "stab_src": "table"},
    {"line": 7, "words": ["ab(ba)^2b^2a", "ab(ba)^2b^6(ba)^3b^2"], "order": 32, "stab": 1,
     "structure": "(Z8 x Z2):Z2", "order_src": "structure-order", "stab_src": "table"},
    {"line": 8, "words": ["bab^4", "b(ba)^2b^5(ba)^3b"], "order": 32, "stab": 1,
     "structure": "(Z8:Z2):Z2", "order_src": "structure-order", "stab_src": "table"},
    {"line": 9, "words": ["b(ba)^2b^4ab", "b^3a"], "order": 32, "stab": 1,
     "structure": "(Z2 x Z2).(Z4 x Z2)", "order_src": "structure-order", "stab_src": "table"},
    {"line": 10, "words": ["b(ba)^2b^4ab", "ab(ba)^2b^2a"], "order": 32, "stab": 1,
     "structure": "Z4.D8", "order_src": "structure-order", "stab_src": "table"},
    {"line": 11, "words": ["ab(ba)^2b^2a", "ab(ba)^2b^6(ba)^3b^2", "b(ba)^2b^5"], "order": 32, "stab": 1,
     "structure": "(Z8 x Z2):Z2", "order_src": "structure-order", "stab_src": "table"},
    {"line": 12, "words": ["ab(ba)^2b^6(ba)^3b^2", "ab(ba)^2b", "b(ba)^2b^5(ba)^3b"], "order": 32, "stab": 1,
     "structure": "Z8:(Z2 x Z2)", "order_src": "structure-order", "stab_src": "table"},
    {"line": 13, "words": ["b^3a", "ab(ba)^2b^6(ba)^3b^2", "b(ba)^2b^5"], "order": 32, "stab": 1,
     "structure": "(Z2 x Q8):Z2", "order_src": "structure-order", "stab_src": "table"}
  ],
  "hyperbolic": {
    "alpha": [[0,0,-1,0],[0,0,0,-1],[-1,0,0,0],[0,-1,0,0]],
    "beta": [[1,0,0,1],[1,1,1,-1],[1,-1,1,1],[-1,0,0,1]],
    "block": [[0,0,0,0],[1,0,0,0],[2,0,0,0],[0,1,1,0],[1,1,1,0],[2,1,1,0]],
    "expected": {"v": 81, "k": 6, "r": 32, "b": 432, "lambda": 2, "src": "table"},
    "g0_order": 192, "g0_order_src": "identity:|G0|=r*|G0_B|",
    "g0b_order": 6, "g0b_order_src": "table",
    "orbit_lengths": [32, 48], "orbit_lengths_src": "table"
  },
  "gamma_l1": {
    "field": {"p": 3, "d": 4, "poly": [2, 1, 0, 0, 1]},
    "alpha_scalar_exp": 5,
    "beta_frobenius_power": 2,
    "block": ["0", "w0", "w16", "w56", "w58", "w73"],
    "expected": {"v": 81, "k": 6, "r": 32, "b": 432, "lambda": 2, "src": "table"},
    "g0_order": 32, "g0_order_src": "table",
    "orbit_lengths": [16, 32, 32], "orbit_lengths_src": "table"
  },
  "tens": {
    "alpha": [[0,1,0],[0,0,1],[1,1,0]],
    "beta": [[0,1],[1,1]],
    "gamma": [[1,0],[1,1]],
    "pi2_w": [1, 0, 1],
    "pi2_w_src": "selected",
    "expected": {"v": 64, "k": 4, "r": 42, "b": 672, "lambda": 2, "src": "identity:b=vr/k"},
    "g0_order": 42, "g0_order_src": "structure-order",
    "orbit_lengths": [21, 42], "orbit_lengths_src": "table"
  },
  "sl25_orbits": {
    "subspace_orbit_lengths": [5, 5, 5, 5, 10, 20, 20, 30, 30],
    "subspace_orbit_lengths_src": "table"
  },
  "hall": {
    "expected": {"v": 81, "k": 9, "r": 20, "b": 180, "lambda": 2, "src": "identity:b=vr/k"},
    "g0_order": 480, "g0_order_src": "structure-order"
  },
  "d8q8": {
    "expected": {"v": 81, "k": 9, "r": 20, "b": 180, "lambda": 2, "src": "table"},
    "g0_order": 320, "g0_order_src": "table",
    "g0b_order": 8, "g0b_order_src": "table"
  },
  "sem1dim": [
    {"id": "3pts-7-1-1-gl1", "p": 7, "d": 1, "n": 1, "x": "gl1",
     "expected": {"v": 7, "k": 3, "r": 6, "b": 14, "lambda": 2, "src": "identity:r(k-1)=2(v-1)"}},
    {"id": "3pts-5-2-1-gl1", "p": 5, "d": 2, "n": 1, "x": "gl1",
     "expected": {"v": 25, "k": 3, "r": 24, "b": 200, "lambda": 2, "src": "identity:r(k-1)=2(v-1)"}},
    {"id": "3pts-5-2-2-sl", "p": 5, "d": 2, "n": 2, "x": "sl",
     "expected": {"v": 25, "k": 3, "r": 24, "b": 200, "lambda": 2, "src": "identity:r(k-1)=2(v-1)"}},
    {"id": "3pts-2-4-2-sl", "p": 2, "d": 4, "n": 2, "x": "sl",
     "expected": {"v": 16, "k": 3, "r": 15, "b": 80, "lambda": 2, "src": "identity:b=q^n(q^n-1)/3"}},
    {"id": "subfield-3-4-1-2", "p": 3, "d": 4, "n": 1, "t": 2,
     "expected": {"v": 81, "k": 9, "r": 20, "b": 180, "lambda": 2, "src": "identity:b=2(q^n/p^t)(q^n-1)/(p^t-1)"}},
    {"id": "subfield-2-8-2-2", "p": 2, "d": 8, "n": 2, "t": 2,
     "expected": {"v": 256, "k": 4, "r": 170, "b": 10880, "lambda": 2, "src": "identity:b=2(q^n/p^t)(q^n-1)/(p^t-1)"}}
  ]
})json";

const nlohmann::json &catalog() {
  static const nlohmann::json j = nlohmann::json::parse(kCatalogJson);
  return j;
}

} // namespace flagdes
