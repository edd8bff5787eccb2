#ifndef JNORM_NAMES_HPP
#define JNORM_NAMES_HPP

#include <string>

#include "jnorm/graph.hpp"

namespace jnorm {

// Constructs a graph from a name expression:
//
//   K_n          complete graph
//   P_n          path
//   C_n          cycle (n >= 3)
//   K_{a,b}      complete bipartite
//   T_{n,k}      K_n extended with an extra vertex adjacent to k old ones
//   A u B        disjoint union ("u" token), with multiplicity: 2K_2
//   K_n - H      remove the edges of H placed on distinct vertices of K_n
//   A + K_2      add one edge between two nonadjacent vertices; valid only
//                when every choice gives the same isomorphism class
//
// Parentheses group, e.g. "K_5-(P_3 u K_2)". Throws std::invalid_argument
// on malformed or ambiguous names.
SmallGraph named(const std::string& spec);

}  // namespace jnorm

#endif
