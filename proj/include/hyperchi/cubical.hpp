#pragma once

// cubical complexes, stored as their face posets: each face is identified
// by its vertex set, a dim-i face has 2^i vertices, and containment is
// vertex-set inclusion. Construction can verify the cube-lattice axioms:
// every lower interval counts like a cube and pairwise intersections of
// faces are faces.

#include "hyperchi/numeric.hpp"
#include "hyperchi/simplicial.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchi {

struct CubicalFaceSpec {
    Face vertices;
    int dim = 0;
};

class CubicalComplex {
public:
    CubicalComplex() = default;  // just the empty face

    static CubicalComplex from_faces(const std::vector<CubicalFaceSpec>& specs,
                                     bool validate_lattice = true,
                                     std::vector<std::string>* warnings = nullptr,
                                     std::size_t max_faces = 0) {
        CubicalComplex c;
        std::map<Face, int> dim_of;
        for (const CubicalFaceSpec& s : specs) {
            Face f = canonical_face(s.vertices);
            if (s.dim < 0 || s.dim > 25)
                throw std::invalid_argument("face " + face_str(f) + ": bad dimension " +
                                            std::to_string(s.dim));
            if (f.size() != (std::size_t(1) << s.dim))
                throw std::invalid_argument(
                    "face " + face_str(f) + " declared dim " + std::to_string(s.dim) + " has " +
                    std::to_string(f.size()) + " vertices, expected 2^" + std::to_string(s.dim) +
                    " = " + std::to_string(std::size_t(1) << s.dim));
            auto [it, fresh] = dim_of.emplace(f, s.dim);
            if (!fresh) {
                if (it->second != s.dim)
                    throw std::invalid_argument("face " + face_str(f) +
                                                " listed with two different dimensions");
                if (warnings) warnings->push_back("duplicate face " + face_str(f) + " ignored");
            }
        }
        // make sure every vertex is present as a dim-0 face
        for (const auto& [f, d] : dim_of)
            if (d > 0)
                for (int v : f) dim_of.emplace(Face{v}, 0);
        if (max_faces && dim_of.size() > max_faces)
            throw std::runtime_error("complex exceeds the face cap of " +
                                     std::to_string(max_faces));
        for (const auto& [f, d] : dim_of) {
            if (c.faces_.size() <= static_cast<std::size_t>(d)) c.faces_.resize(d + 1);
            c.faces_[d].push_back(f);
        }
        c.finish();
        if (validate_lattice) c.validate();
        return c;
    }

    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    bool is_pure() const { return pure_; }

    const std::vector<Face>& faces(int k) const {
        static const std::vector<Face> none;
        if (k < 0 || k > dim()) return none;
        return faces_[k];
    }

    long long face_count(int k) const {
        if (k == -1) return 1;
        if (k < -1 || k > dim()) return 0;
        return static_cast<long long>(faces_[k].size());
    }

    long long total_faces() const {
        long long t = 0;
        for (const auto& level : faces_) t += static_cast<long long>(level.size());
        return t;
    }

    std::vector<int> vertices() const {
        std::vector<int> vs;
        for (const Face& f : faces(0)) vs.push_back(f[0]);
        return vs;
    }

    std::optional<int> face_dim(const Face& f) const {
        auto it = index_.find(f);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // cube-lattice axioms; throws naming the offending face or pair
    void validate() const {
        for (int i = 1; i <= dim(); ++i) {
            for (const Face& f : faces_[i]) {
                // count listed faces inside [∅,F] per dimension
                std::vector<long long> counts(i + 1, 0);
                for (int k = 0; k <= i; ++k)
                    for (const Face& g : faces_[k])
                        if (face_subset(g, f)) ++counts[k];
                for (int k = 0; k <= i; ++k) {
                    long long want = binom_ll(i, k) * (1LL << (i - k));
                    if (counts[k] != want)
                        throw std::invalid_argument(
                            "face " + face_str(f) + " of dim " + std::to_string(i) +
                            ": interval below it has " + std::to_string(counts[k]) +
                            " faces of dim " + std::to_string(k) + ", a cube needs " +
                            std::to_string(want));
                }
            }
        }
        std::vector<Face> all;
        for (const auto& level : faces_) all.insert(all.end(), level.begin(), level.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                Face inter = face_intersection(all[i], all[j]);
                if (!inter.empty() && !index_.count(inter))
                    throw std::invalid_argument("faces " + face_str(all[i]) + " and " +
                                                face_str(all[j]) + " meet in " + face_str(inter) +
                                                ", which is not a face");
            }
    }

private:
    std::vector<std::vector<Face>> faces_;
    std::map<Face, int> index_;
    bool pure_ = true;

    void finish() {
        index_.clear();
        for (int k = 0; k <= dim(); ++k) {
            std::sort(faces_[k].begin(), faces_[k].end());
            for (const Face& f : faces_[k]) index_[f] = k;
        }
        compute_purity();
    }

    void compute_purity() {
        pure_ = true;
        for (int k = 0; k < dim(); ++k)
            for (const Face& f : faces_[k]) {
                bool covered = false;
                for (int j = k + 1; j <= dim() && !covered; ++j)
                    for (const Face& g : faces_[j])
                        if (face_subset(f, g)) {
                            covered = true;
                            break;
                        }
                if (!covered) {
                    pure_ = false;
                    return;
                }
            }
    }

    friend CubicalComplex trusted_cubical(std::vector<std::vector<Face>> by_dim);
};

// internal fast path for generators whose output is valid by construction
inline CubicalComplex trusted_cubical(std::vector<std::vector<Face>> by_dim) {
    CubicalComplex c;
    c.faces_ = std::move(by_dim);
    c.finish();
    return c;
}

// ∂I^n: all proper faces of the n-cube on vertices 0..2^n-1 (bit masks)
inline CubicalComplex boundary_cube(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("boundary_cube: need 1 <= n <= 20");
    std::vector<std::vector<Face>> by_dim(n);
    for (unsigned free = 0; free < (1u << n); ++free) {
        int k = __builtin_popcount(free);
        if (k == n) continue;  // the cube itself is not in its boundary
        unsigned fixed_mask = ~free & ((1u << n) - 1);
        // iterate over assignments to the fixed coordinates
        for (unsigned fixed = fixed_mask;; fixed = (fixed - 1) & fixed_mask) {
            Face verts;
            for (unsigned sub = free;; sub = (sub - 1) & free) {
                verts.push_back(static_cast<int>(fixed | sub));
                if (sub == 0) break;
            }
            std::sort(verts.begin(), verts.end());
            by_dim[k].push_back(std::move(verts));
            if (fixed == 0) break;
        }
    }
    return trusted_cubical(std::move(by_dim));
}

// the n-cycle as a cubical 1-complex (n >= 3 so edges have distinct
// vertex sets)
inline CubicalComplex cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::vector<Face>> by_dim(2);
    for (int i = 0; i < n; ++i) {
        by_dim[0].push_back(Face{i});
        Face e{i, (i + 1) % n};
        std::sort(e.begin(), e.end());
        by_dim[1].push_back(std::move(e));
    }
    return trusted_cubical(std::move(by_dim));
}

// product complex; vertex (u,v) gets label pos(u)*|V(b)| + pos(v) where
// pos is the rank in the factor's sorted vertex list
inline CubicalComplex cubical_product(const CubicalComplex& a, const CubicalComplex& b) {
    std::vector<int> va = a.vertices(), vb = b.vertices();
    std::map<int, int> pa, pb;
    for (std::size_t i = 0; i < va.size(); ++i) pa[va[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < vb.size(); ++i) pb[vb[i]] = static_cast<int>(i);
    int nb = static_cast<int>(vb.size());
    if (a.dim() < 0 || b.dim() < 0) return CubicalComplex{};
    std::vector<std::vector<Face>> by_dim(a.dim() + b.dim() + 1);
    for (int ka = 0; ka <= a.dim(); ++ka)
        for (const Face& fa : a.faces(ka))
            for (int kb = 0; kb <= b.dim(); ++kb)
                for (const Face& fb : b.faces(kb)) {
                    Face verts;
                    for (int u : fa)
                        for (int v : fb) verts.push_back(pa[u] * nb + pb[v]);
                    std::sort(verts.begin(), verts.end());
                    by_dim[ka + kb].push_back(std::move(verts));
                }
    return trusted_cubical(std::move(by_dim));
}

// link of a nonempty face F: a simplicial complex whose vertices are the
// (dim F + 1)-faces over F; a face G ⊃ F contributes the simplex of those
// vertices lying below G
inline LinkComplex link(const CubicalComplex& c, const Face& center_raw) {
    Face center = canonical_face(center_raw);
    if (center.empty()) throw std::invalid_argument("link: center face must be nonempty");
    auto cd = c.face_dim(center);
    if (!cd) throw std::invalid_argument("link: face " + face_str(center) + " is not in the complex");
    int fd = *cd;
    std::vector<Face> atoms;
    for (const Face& g : c.faces(fd + 1))
        if (face_subset(center, g)) atoms.push_back(g);
    std::set<Face> faces;
    faces.insert(Face{});
    for (int k = fd + 1; k <= c.dim(); ++k)
        for (const Face& g : c.faces(k)) {
            if (!face_subset(center, g)) continue;
            Face simplex;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                if (face_subset(atoms[i], g)) simplex.push_back(static_cast<int>(i));
            faces.insert(std::move(simplex));
        }
    LinkComplex out;
    out.complex = SimplicialComplex::from_closed_faces(faces);
    out.host = HostKind::cubical;
    out.center = center;
    out.vertex_faces = atoms;
    return out;
}

inline CubicalComplex skeleton(const CubicalComplex& c, int r) {
    if (r < 0 || r > c.dim())
        throw std::invalid_argument("skeleton: r must be between 0 and dim=" +
                                    std::to_string(c.dim()));
    std::vector<std::vector<Face>> by_dim(r + 1);
    for (int k = 0; k <= r; ++k) by_dim[k] = c.faces(k);
    return trusted_cubical(std::move(by_dim));
}

}  // namespace hyperchi
