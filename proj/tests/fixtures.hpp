#pragma once

// complexes shared across the test files. Everything here is built through
// the public constructors so the fixtures double as construction tests.

#include "hyperchi/cubical.hpp"
#include "hyperchi/simplicial.hpp"

#include <random>
#include <vector>

namespace fixtures {

using hyperchi::CubicalComplex;
using hyperchi::Face;
using hyperchi::SimplicialComplex;

// S^2 on 6 vertices; antipodal pairs (0,1), (2,3), (4,5)
inline SimplicialComplex octahedron() {
    return SimplicialComplex::from_maximal({{0, 2, 4},
                                            {0, 2, 5},
                                            {0, 3, 4},
                                            {0, 3, 5},
                                            {1, 2, 4},
                                            {1, 2, 5},
                                            {1, 3, 4},
                                            {1, 3, 5}});
}

// the 7-vertex 2-torus: triangles (i, i+1, i+3) and (i, i+2, i+3) mod 7
inline SimplicialComplex torus7() {
    std::vector<Face> tri;
    for (int i = 0; i < 7; ++i) {
        tri.push_back(hyperchi::canonical_face({i, (i + 1) % 7, (i + 3) % 7}));
        tri.push_back(hyperchi::canonical_face({i, (i + 2) % 7, (i + 3) % 7}));
    }
    return SimplicialComplex::from_maximal(tri);
}

// two solid triangles glued at vertex 0: contractible but not a manifold
inline SimplicialComplex wedge_triangles() {
    return SimplicialComplex::from_maximal({{0, 1, 2}, {0, 3, 4}});
}

// the 6-vertex real projective plane; its homology depends on the field
inline SimplicialComplex projective_plane6() {
    return SimplicialComplex::from_maximal({{1, 2, 5},
                                            {1, 2, 6},
                                            {1, 3, 4},
                                            {1, 3, 6},
                                            {1, 4, 5},
                                            {2, 3, 4},
                                            {2, 3, 5},
                                            {2, 4, 6},
                                            {3, 5, 6},
                                            {4, 5, 6}});
}

// boundary of the (k+1)-dimensional cross polytope = S^k, built by
// iterated suspension of S^0
inline SimplicialComplex cross_sphere(int k) {
    SimplicialComplex s = SimplicialComplex::from_maximal({{0}, {1}});
    for (int i = 0; i < k; ++i) s = suspension(s);
    return s;
}

// product of cycles; one factor gives the cycle itself
inline CubicalComplex cycle_product(const std::vector<int>& lengths) {
    CubicalComplex c = hyperchi::cycle(lengths.at(0));
    for (std::size_t i = 1; i < lengths.size(); ++i)
        c = hyperchi::cubical_product(c, hyperchi::cycle(lengths[i]));
    return c;
}

// deterministic small random complex; raw mt19937 output only, so the
// stream is identical on every platform
inline SimplicialComplex random_complex(std::mt19937& rng) {
    int nv = 3 + static_cast<int>(rng() % 5);       // vertices 3..7
    int nf = 1 + static_cast<int>(rng() % 6);       // maximal faces 1..6
    std::vector<Face> maximal;
    for (int i = 0; i < nf; ++i) {
        int cap = nv < 4 ? nv : 4;                  // never ask for more distinct
        int sz = 1 + static_cast<int>(rng() % cap); // vertices than exist
        Face f;
        while (static_cast<int>(f.size()) < sz) {
            int v = static_cast<int>(rng() % nv);
            bool dup = false;
            for (int u : f) dup = dup || u == v;
            if (!dup) f.push_back(v);
        }
        maximal.push_back(hyperchi::canonical_face(f));
    }
    std::vector<std::string> ignore;
    return SimplicialComplex::from_maximal(maximal, &ignore);
}

}  // namespace fixtures
