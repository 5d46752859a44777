#include "estrada/compare.hpp"

#include "estrada/bounds.hpp"
#include "estrada/errors.hpp"

namespace estrada {

CompareRow compare_row(Family family, int n) {
    FamilySpec spec;
    switch (family) {
        case Family::empty: spec = FamilySpec::empty(n); break;
        case Family::complete: spec = FamilySpec::complete(n); break;
        case Family::star: spec = FamilySpec::star(n); break;
        case Family::path: spec = FamilySpec::path(n); break;
        case Family::cycle: spec = FamilySpec::cycle(n); break;
        case Family::complete_bipartite:
            throw InvalidFamilyParam("complete_bipartite has no single-n comparison row");
    }
    const Graph g = generate(spec);
    CompareRow row;
    row.family = family_name(family);
    row.n = g.n();
    row.m = g.m();
    row.estrada = estrada_index(jacobi_eigen(adjacency_matrix(g), false));
    row.j = bound_j(g.n(), g.m());
    row.cp = bound_cp(g.n(), g.m());
    if (g.n() >= 2 && is_connected(g) && is_bipartite(g).has_value()) {
        row.jb = bound_jb(g.n(), g.m());
    }
    row.dominance = row.j >= row.cp;
    return row;
}

}  // namespace estrada
