#pragma once

// The bundled instances. Each one is built here from its defining
// construction; corpus/*.json holds their canonical serializations.

#include "twistrb/instance.hpp"

#include <string>
#include <vector>

namespace twistrb {

struct CorpusEntry {
    std::string file;    // e.g. "nijenhuis_example.json"
    std::string command; // the CLI command that validates it
    std::string summary;
    Instance instance;
};

std::vector<CorpusEntry> corpus();

/// e_1 e_1 = e_1, e_1 e_2 = e_2, all other products zero.
Algebra left_unit_algebra();

/// K[ε]/(ε²) in the basis e_1 = 1, e_2 = ε.
Algebra dual_numbers();

/// T = h^{-1} on the adjoint bimodule of left_unit_algebra with
/// h(e_1) = e_1, h(e_2) = e_1 + 2e_2 and H = -δh.
TrbContext inverse_example();

/// M = A ⊗ A over left_unit_algebra with a·(b⊗c) = ab⊗c, (b⊗c)·a = b⊗ca,
/// H(a,b) = -a⊗b and T = μ. The basis of M is e_b⊗e_c at index 2(b-1) + c.
TrbContext multiplication_map_example();

} // namespace twistrb
