#pragma once

#include "talex/representation.hpp"

namespace talex {

struct Sl2Rep {
    Representation<Fp> rep;
    bool irreducible = false;
};

// Exhaustively lists all representations of a two-generator presentation
// into SL(2, F_p), p in {3, 5, 7}, by filtering every pair of SL(2, F_p)
// matrices through the relators.  Each representation is tagged with its
// absolute irreducibility.
std::vector<Sl2Rep> enumerate_sl2_reps(const GroupPresentation& p, long prime);

} // namespace talex
