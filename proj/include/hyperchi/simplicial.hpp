#pragma once

// finite abstract simplicial complexes over integer vertex labels.
// A complex always contains the empty face; the complex {∅} has dim -1.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchi {

using Face = std::vector<int>;  // strictly increasing vertex labels

inline std::string face_str(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "}";
}

inline Face canonical_face(Face f) {
    std::sort(f.begin(), f.end());
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] == f[i - 1])
            throw std::invalid_argument("repeated vertex " + std::to_string(f[i]) +
                                        " in face " + face_str(f));
    return f;
}

inline Face face_union(const Face& a, const Face& b) {
    Face out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_intersection(const Face& a, const Face& b) {
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool face_disjoint(const Face& a, const Face& b) {
    return face_intersection(a, b).empty();
}

// a ⊆ b for sorted faces
inline bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

class SimplicialComplex {
public:
    SimplicialComplex() = default;  // the complex {∅}

    // downward closure of the given maximal faces; duplicates among the
    // input are dropped with a warning. max_faces of 0 means uncapped.
    static SimplicialComplex from_maximal(const std::vector<Face>& maximal,
                                          std::vector<std::string>* warnings = nullptr,
                                          std::size_t max_faces = 0) {
        std::set<Face> seen;
        std::set<Face> all;
        for (const Face& raw : maximal) {
            Face f = canonical_face(raw);
            if (f.empty()) throw std::invalid_argument("maximal face must be nonempty");
            if (!seen.insert(f).second) {
                if (warnings)
                    warnings->push_back("duplicate maximal face " + face_str(f) + " ignored");
                continue;
            }
            // all subsets of f
            std::size_t n = f.size();
            if (n > 25) throw std::invalid_argument("face " + face_str(f) + " too large");
            for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
                Face sub;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::size_t(1) << i)) sub.push_back(f[i]);
                all.insert(std::move(sub));
                if (max_faces && all.size() > max_faces)
                    throw std::runtime_error("complex exceeds the face cap of " +
                                             std::to_string(max_faces));
            }
        }
        return from_closed_faces(all);
    }

    // trusted constructor: `faces` must already be closed under taking
    // subsets (the empty face may be present or absent, it is implied)
    static SimplicialComplex from_closed_faces(const std::set<Face>& faces) {
        SimplicialComplex c;
        for (const Face& f : faces) {
            if (f.empty()) continue;
            std::size_t k = f.size() - 1;
            if (c.faces_.size() <= k) c.faces_.resize(k + 1);
            c.faces_[k].push_back(f);
        }
        for (auto& level : c.faces_) std::sort(level.begin(), level.end());
        c.compute_purity();
        return c;
    }

    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    bool is_pure() const { return pure_; }

    // faces of dimension k, sorted; empty list outside 0..dim
    const std::vector<Face>& faces(int k) const {
        static const std::vector<Face> none;
        if (k < 0 || k > dim()) return none;
        return faces_[k];
    }

    // f_k with the convention f_{-1} = 1
    long long face_count(int k) const {
        if (k == -1) return 1;
        if (k < -1 || k > dim()) return 0;
        return static_cast<long long>(faces_[k].size());
    }

    long long total_faces() const {  // nonempty faces
        long long t = 0;
        for (const auto& level : faces_) t += static_cast<long long>(level.size());
        return t;
    }

    std::vector<int> vertices() const {
        std::vector<int> vs;
        for (const Face& f : faces(0)) vs.push_back(f[0]);
        return vs;
    }

    bool contains(const Face& f) const {
        if (f.empty()) return true;
        int k = static_cast<int>(f.size()) - 1;
        if (k > dim()) return false;
        return std::binary_search(faces_[k].begin(), faces_[k].end(), f);
    }

    std::vector<Face> facets() const {
        std::vector<Face> out;
        for (int k = 0; k <= dim(); ++k)
            for (const Face& f : faces_[k])
                if (!has_proper_coface(f)) out.push_back(f);
        return out;
    }

    std::vector<Face> all_nonempty_faces() const {
        std::vector<Face> out;
        for (const auto& level : faces_) out.insert(out.end(), level.begin(), level.end());
        return out;
    }

    friend bool operator==(const SimplicialComplex& x, const SimplicialComplex& y) {
        return x.faces_ == y.faces_;
    }

private:
    std::vector<std::vector<Face>> faces_;  // faces_[k] = dim-k faces
    bool pure_ = true;

    // in a closed complex, a non-facet always has a coface one dim up
    bool has_proper_coface(const Face& f) const {
        int k = static_cast<int>(f.size());  // dim+1
        for (const Face& g : faces(k))
            if (face_subset(f, g)) return true;
        return false;
    }

    void compute_purity() {
        pure_ = true;
        for (int k = 0; k < dim(); ++k) {
            std::set<Face> covered;
            for (const Face& g : faces_[k + 1]) {
                for (std::size_t drop = 0; drop < g.size(); ++drop) {
                    Face sub;
                    for (std::size_t i = 0; i < g.size(); ++i)
                        if (i != drop) sub.push_back(g[i]);
                    covered.insert(std::move(sub));
                }
            }
            for (const Face& f : faces_[k])
                if (!covered.count(f)) {
                    pure_ = false;
                    return;
                }
        }
    }
};

enum class HostKind { simplicial, cubical };

// a vertex link (or general face link); always a simplicial complex even
// when the host is cubical. vertex_faces records, per link vertex, the
// host face it came from.
struct LinkComplex {
    SimplicialComplex complex;
    HostKind host = HostKind::simplicial;
    Face center;
    std::vector<Face> vertex_faces;
};

// lk(F) = { G : G ∩ F = ∅ and G ∪ F ∈ Δ }
inline LinkComplex link(const SimplicialComplex& c, const Face& center_raw) {
    Face center = canonical_face(center_raw);
    if (!c.contains(center))
        throw std::invalid_argument("link: face " + face_str(center) + " is not in the complex");
    std::set<Face> faces;
    faces.insert(Face{});
    for (int k = 0; k <= c.dim(); ++k)
        for (const Face& g : c.faces(k))
            if (face_disjoint(g, center) && c.contains(face_union(g, center)))
                faces.insert(g);
    LinkComplex out;
    out.complex = SimplicialComplex::from_closed_faces(faces);
    out.host = HostKind::simplicial;
    out.center = center;
    for (int v : out.complex.vertices()) out.vertex_faces.push_back(Face{v});
    return out;
}

inline SimplicialComplex skeleton(const SimplicialComplex& c, int r) {
    if (r < 0 || r > c.dim())
        throw std::invalid_argument("skeleton: r must be between 0 and dim=" +
                                    std::to_string(c.dim()));
    std::set<Face> faces;
    for (int k = 0; k <= r; ++k)
        for (const Face& f : c.faces(k)) faces.insert(f);
    return SimplicialComplex::from_closed_faces(faces);
}

// ∂σ^n on vertices {0..n}: every proper subset
inline SimplicialComplex boundary_simplex(int n) {
    if (n < 1) throw std::invalid_argument("boundary_simplex: need n >= 1");
    std::vector<Face> maximal;
    for (int drop = 0; drop <= n; ++drop) {
        Face f;
        for (int v = 0; v <= n; ++v)
            if (v != drop) f.push_back(v);
        maximal.push_back(f);
    }
    return SimplicialComplex::from_maximal(maximal);
}

// join; B's vertices are relabeled to sit right after A's largest label
inline SimplicialComplex join_complexes(const SimplicialComplex& a, const SimplicialComplex& b) {
    long long offset = 0;
    auto va = a.vertices();
    auto vb = b.vertices();
    if (!va.empty() && !vb.empty())
        offset = static_cast<long long>(va.back()) + 1 - vb.front();
    std::set<Face> faces;
    std::vector<Face> a_faces = a.all_nonempty_faces();
    a_faces.push_back(Face{});
    std::vector<Face> b_faces = b.all_nonempty_faces();
    b_faces.push_back(Face{});
    for (const Face& fa : a_faces)
        for (const Face& fb : b_faces) {
            Face g = fa;
            for (int v : fb) g.push_back(static_cast<int>(v + offset));
            std::sort(g.begin(), g.end());
            if (!g.empty()) faces.insert(std::move(g));
        }
    return SimplicialComplex::from_closed_faces(faces);
}

inline SimplicialComplex suspension(const SimplicialComplex& a) {
    std::set<Face> two_points = {Face{0}, Face{1}};
    return join_complexes(a, SimplicialComplex::from_closed_faces(two_points));
}

// barycentric subdivision: one vertex per nonempty face of the input,
// numbered by (dim, lex) order; simplices are chains of nested faces
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
    std::vector<Face> nf;
    for (int k = 0; k <= c.dim(); ++k)
        for (const Face& f : c.faces(k)) nf.push_back(f);
    std::size_t n = nf.size();
    // supersets[i] = indices j with nf[i] ⊂ nf[j]; ids grow with dim so j > i
    std::vector<std::vector<int>> supersets(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nf[j].size() > nf[i].size() && face_subset(nf[i], nf[j]))
                supersets[i].push_back(static_cast<int>(j));
    std::set<Face> chains;
    chains.insert(Face{});
    std::vector<int> chain;
    auto grow = [&](auto&& self, int last) -> void {
        chains.insert(Face(chain.begin(), chain.end()));
        for (int j : supersets[last]) {
            chain.push_back(j);
            self(self, j);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        chain.assign(1, static_cast<int>(i));
        grow(grow, static_cast<int>(i));
    }
    return SimplicialComplex::from_closed_faces(chains);
}

}  // namespace hyperchi
