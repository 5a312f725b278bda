#ifndef SLP_FIXTURES_HPP
#define SLP_FIXTURES_HPP

#include <string>
#include <vector>

#include "slp/graph.hpp"
#include "slp/lefschetz.hpp"
#include "slp/poly.hpp"

namespace slp {

// Built-in study objects:
//   m13  - the 13-edge, 8-vertex graph whose degree-3 Lefschetz map is
//          singular for every linear element (the smallest known case)
//   p17  - a planar 17-edge, 8-vertex graph with the same failure
//   s11  - the 11-edge, 8-vertex graph whose degree-2 map is singular at
//          the all-ones element only
//   q54  - a degree-5 polynomial in 4 variables with a singular degree-2
//          Hessian (a classical non-graphic example)
// and certificates:
//   m13-k3      - symbolic kernel vector for m13 at degree 3
//   s11-k2-ones - point kernel vector for s11 at degree 2, all-ones element

std::vector<std::string> fixture_names();
bool is_fixture_name(const std::string& name);

Graph fixture_graph(const std::string& name);       // m13, p17, s11
SparsePoly fixture_poly(const std::string& name);   // q54, or f_G of a graph fixture
KernelCertificate fixture_certificate(const std::string& name);

}  // namespace slp

#endif
