#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talex/smith.hpp"
#include "talex/word.hpp"

namespace talex {

// Finite group presentation with the topological metadata the symmetry
// theorems consume: number of boundary tori of the exterior, the Thurston
// norm of the abelianization class when known, and pairwise linking
// numbers for links.
struct GroupPresentation {
    int generators = 0;
    std::vector<Word> relators;
    std::optional<std::string> name;
    std::optional<int> boundary_components; // b0 of the boundary of the exterior
    std::optional<int> thurston_norm;       // x(phi) when known
    std::optional<MatI> linking;            // symmetric pairwise linking numbers

    void validate() const;
};

// The epimorphism from the presented group onto the free part of its
// abelianization.  Column j of images is the image of generator j in
// Z^rank; every relator maps to zero.
struct AbelianizationMap {
    MatI images;

    int rank() const { return static_cast<int>(images.rows()); }
    int generators() const { return static_cast<int>(images.cols()); }
    std::vector<long> apply(const Word& w) const;
};

// Projection onto the free part of H_1 computed from the Smith normal form
// of the relator exponent matrix, with each coordinate sign-normalized so
// its first nonzero generator image is positive.  Throws HypothesisError
// when the free part is trivial.
AbelianizationMap abelianization(const GroupPresentation& p);

// Built-in reduced Wirtinger presentations:
// unknot, trefoil, figure8, 5_2, hopf, whitehead.
GroupPresentation knot_table(const std::string& name);
std::vector<std::string> knot_table_names();

// Text format: "gens: a b" then "rel: abaBAB" lines (whitespace inside
// words is ignored); optional "name:", "b0:", "x:" and "lk:" metadata
// lines; '#' starts a comment.  lk takes the upper triangle of the
// pairwise linking matrix in row-major order.
GroupPresentation parse_presentation_text(const std::string& text);
std::string presentation_to_text(const GroupPresentation& p);

} // namespace talex
