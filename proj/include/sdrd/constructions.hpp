#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdrd/graph.hpp"
#include "sdrd/labeling.hpp"

namespace sdrd {

/// Explicit labeling schemes per graph family. Every function validates its
/// output (k = 1) before returning and throws std::logic_error if a scheme
/// ever fails, std::invalid_argument on parameter errors.

/// P(m,k), m >= 4 even, k odd: -1 on u_{2i}, v_{2i}, 2 elsewhere. Weight m.
Labeling petersen_even_odd(int m, int k);

/// P(m,3), m >= 8. Weight m for even m, m+1 for odd m.
Labeling petersen_m3(int m);

/// P(m,1), m >= 3. Weight m (even), m+1 (m = 3 mod 4), m+2 (m = 1 mod 4).
Labeling petersen_m1(int m);

/// J_m, m >= 5. Weight 2m+1.
Labeling flower_snark(int m);

/// G_{2,m}, m >= 5. Weight m+1 if m = 1 mod 4, else m.
Labeling grid_2xm(int m);

/// Weight each scheme is claimed to reach.
int predicted_petersen_m1(int m);
int predicted_petersen_m3(int m);
int predicted_grid_2xm(int m);
inline int predicted_flower_snark(int m) { return 2 * m + 1; }

struct Scheme {
    Graph graph;
    Labeling labeling;
    int predicted_weight;
};

/// Family names: petersen-m1, petersen-m3, petersen-even (uses shift k),
/// snark, grid2xm.
Scheme make_scheme(std::string_view family, int m, int k = 1);
const std::vector<std::string>& scheme_families();

} // namespace sdrd
