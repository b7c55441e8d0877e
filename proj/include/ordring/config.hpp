#pragma once

#include <string>

#include "ordring/crossed_product.hpp"

namespace ordring {

// Group + twist + field from a JSON config:
//   {"family": "free_abelian", "rank": 2, "order": "lex",
//    "eta": {"type": "bilinear_q", "q": "2", "matrix": [[0,0],[1,0]]},
//    "field": {"type": "Q"}}
// Families: free_abelian, rational_vector, free_group (magnus_degree_bound),
// braid_b3, semidirect (normal, quotient, action.matrix/.words + inverses).
CPRingPtr load_ring_from_json(const std::string& json_text);
CPRingPtr load_ring_from_file(const std::string& path);

}  // namespace ordring
