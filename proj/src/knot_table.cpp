#include "talex/presentation.hpp"

namespace talex {

namespace {

GroupPresentation knot(const std::string& name, const std::string& relator, int thurston_norm) {
    GroupPresentation p;
    p.name = name;
    p.generators = 2;
    p.relators = {Word::parse(relator, 2)};
    p.boundary_components = 1;
    p.thurston_norm = thurston_norm;
    return p;
}

GroupPresentation link(const std::string& name, const std::string& relator, long lk12) {
    GroupPresentation p;
    p.name = name;
    p.generators = 2;
    p.relators = {Word::parse(relator, 2)};
    p.boundary_components = 2;
    MatI lk = MatI::Zero(2, 2);
    lk(0, 1) = lk12;
    lk(1, 0) = lk12;
    p.linking = lk;
    return p;
}

} // namespace

GroupPresentation knot_table(const std::string& name) {
    if (name == "unknot") {
        GroupPresentation p;
        p.name = "unknot";
        p.generators = 1;
        p.boundary_components = 1;
        return p;
    }
    // Genus-1 knots have fibered-face norm x(phi) = 2g - 1 = 1.
    if (name == "trefoil") return knot("trefoil", "abaBAB", 1);
    if (name == "figure8") return knot("figure8", "aBabABaBAb", 1);
    if (name == "5_2") return knot("5_2", "abaBAbaBABabAB", 1);
    if (name == "hopf") return link("hopf", "abAB", 1);
    if (name == "whitehead") return link("whitehead", "abaBABabABAbabAB", 0);
    throw InputError("unknown knot or link name '" + name + "'");
}

std::vector<std::string> knot_table_names() {
    return {"unknot", "trefoil", "figure8", "5_2", "hopf", "whitehead"};
}

} // namespace talex
