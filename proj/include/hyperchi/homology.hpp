#pragma once

// reduced simplicial homology with field coefficients (Q or Z/p), via
// exact rank computations: fraction-free Bareiss elimination over the
// integers for Q, modular elimination for Z/p. No floating point and no
// integer (Z) homology; cubical complexes are probed only through the
// simplicial links of their faces.

#include "hyperchi/cubical.hpp"
#include "hyperchi/numeric.hpp"
#include "hyperchi/simplicial.hpp"
#include "hyperchi/vectors.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchi {

struct FieldSpec {
    bool rational = true;
    long long p = 0;

    static FieldSpec Q() { return {}; }
    static FieldSpec Fp(long long p) {
        if (p < 2 || p > (1LL << 31))
            throw std::invalid_argument("FieldSpec: characteristic out of range");
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0)
                throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not prime");
        return {false, p};
    }

    std::string str() const { return rational ? "q" : std::to_string(p); }
};

// reduced Betti numbers b~_{-1} .. b~_d; b[0] is b~_{-1}
struct BettiVector {
    int d = -1;
    std::vector<long long> b;

    long long at(int i) const {  // i in [-1, d], 0 outside
        if (i < -1 || i > d) return 0;
        return b[i + 1];
    }
};

namespace detail {

inline long long rank_bareiss(std::vector<std::vector<Integer>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<long long>(r);
}

inline long long rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    auto inv = [p](long long x) {
        long long t = 0, nt = 1, r = p, nr = ((x % p) + p) % p;
        while (nr != 0) {
            long long q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        return ((t % p) + p) % p;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        long long s = inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = ((m[r][j] % p) * s % p + p) % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % p == 0) continue;
            long long f = ((m[i][c] % p) + p) % p;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return static_cast<long long>(r);
}

// boundary matrix ∂_k : C_k -> C_{k-1} with lex-ordered bases and
// alternating signs; k = 0 gives the augmentation row onto the empty face
inline std::vector<std::vector<long long>> boundary_matrix(const SimplicialComplex& c, int k) {
    const auto& src = c.faces(k);
    std::size_t rows = (k == 0) ? 1 : c.faces(k - 1).size();
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(src.size(), 0));
    if (k == 0) {
        for (std::size_t col = 0; col < src.size(); ++col) m[0][col] = 1;
        return m;
    }
    const auto& dst = c.faces(k - 1);
    for (std::size_t col = 0; col < src.size(); ++col) {
        const Face& f = src[col];
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Face sub;
            sub.reserve(f.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub.push_back(f[i]);
            auto it = std::lower_bound(dst.begin(), dst.end(), sub);
            m[static_cast<std::size_t>(it - dst.begin())][col] = (drop % 2 ? -1 : 1);
        }
    }
    return m;
}

inline long long matrix_rank(const std::vector<std::vector<long long>>& m, const FieldSpec& field) {
    if (field.rational) {
        std::vector<std::vector<Integer>> big(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            big[i].assign(m[i].begin(), m[i].end());
        return rank_bareiss(std::move(big));
    }
    return rank_mod_p(m, field.p);
}

}  // namespace detail

inline BettiVector betti(const SimplicialComplex& c, const FieldSpec& field = FieldSpec::Q()) {
    int d = c.dim();
    std::vector<long long> rank(d + 2, 0);  // rank[k] = rank ∂_k, k = 0..d
    for (int k = 0; k <= d; ++k)
        rank[k] = detail::matrix_rank(detail::boundary_matrix(c, k), field);
    BettiVector out;
    out.d = d;
    out.b.resize(d + 2);
    for (int i = -1; i <= d; ++i) {
        long long dim_ci = c.face_count(i);
        long long rk_out = (i >= 0) ? rank[i] : 0;
        long long rk_in = (i + 1 <= d) ? rank[i + 1] : 0;
        out.b[i + 1] = dim_ci - rk_out - rk_in;
    }
    return out;
}

namespace detail {

inline bool sphere_betti(const BettiVector& b, int sphere_dim) {
    if (b.d != sphere_dim) return false;
    for (int i = -1; i <= b.d; ++i)
        if (b.at(i) != (i == sphere_dim ? 1 : 0)) return false;
    return true;
}

}  // namespace detail

// Δ and every face link (the empty face included) must carry the reduced
// homology of a sphere of the complementary dimension
inline bool is_homology_sphere(const SimplicialComplex& c, const FieldSpec& field = FieldSpec::Q()) {
    if (c.dim() < 0) return true;  // the empty complex is the (-1)-sphere
    if (!c.is_pure()) return false;
    int d = c.dim();
    std::vector<Face> centers = c.all_nonempty_faces();
    centers.push_back(Face{});
    for (const Face& f : centers) {
        LinkComplex lk = link(c, f);
        int sd = d - static_cast<int>(f.size());
        if (lk.complex.dim() != sd) return false;
        if (!detail::sphere_betti(betti(lk.complex, field), sd)) return false;
    }
    return true;
}

struct ManifoldReport {
    bool ok = true;
    Face bad_face;       // host face whose link fails
    std::string reason;  // empty when ok
};

// closed homology manifold test: all links of nonempty faces are homology
// spheres of complementary dimension (this forbids boundary, whose links
// would be contractible)
inline ManifoldReport manifold_report(const SimplicialComplex& c,
                                      const FieldSpec& field = FieldSpec::Q()) {
    if (c.dim() < 0) return {false, {}, "the empty complex is not a closed manifold"};
    if (!c.is_pure()) return {false, {}, "complex is not pure"};
    int d = c.dim();
    for (const Face& f : c.all_nonempty_faces()) {
        LinkComplex lk = link(c, f);
        int sd = d - static_cast<int>(f.size());
        if (lk.complex.dim() != sd)
            return {false, f,
                    "link of " + face_str(f) + " has dimension " +
                        std::to_string(lk.complex.dim()) + ", expected " + std::to_string(sd)};
        if (!detail::sphere_betti(betti(lk.complex, field), sd))
            return {false, f,
                    "link of " + face_str(f) + " does not have the homology of S^" +
                        std::to_string(sd) + " over " + field.str()};
    }
    return {};
}

inline ManifoldReport manifold_report(const CubicalComplex& c,
                                      const FieldSpec& field = FieldSpec::Q()) {
    if (c.dim() < 0) return {false, {}, "the empty complex is not a closed manifold"};
    if (!c.is_pure()) return {false, {}, "complex is not pure"};
    int d = c.dim();
    for (int k = 0; k <= d; ++k)
        for (const Face& f : c.faces(k)) {
            LinkComplex lk = link(c, f);
            int sd = d - k - 1;
            if (lk.complex.dim() != sd)
                return {false, f,
                        "link of " + face_str(f) + " has dimension " +
                            std::to_string(lk.complex.dim()) + ", expected " + std::to_string(sd)};
            if (!is_homology_sphere(lk.complex, field))
                return {false, f,
                        "link of " + face_str(f) + " is not a homology S^" + std::to_string(sd) +
                            " over " + field.str()};
        }
    return {};
}

template <typename Complex>
bool is_homology_manifold(const Complex& c, const FieldSpec& field = FieldSpec::Q()) {
    return manifold_report(c, field).ok;
}

// Reisner's criterion over the chosen field: H~_i(lk F) = 0 for every
// face F (empty included) and every i < dim(Δ) - |F|
inline bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field = FieldSpec::Q()) {
    if (c.dim() < 0) return true;
    int d = c.dim();
    std::vector<Face> centers = c.all_nonempty_faces();
    centers.push_back(Face{});
    for (const Face& f : centers) {
        LinkComplex lk = link(c, f);
        int bound = d - static_cast<int>(f.size());
        BettiVector b = betti(lk.complex, field);
        for (int i = -1; i < bound; ++i)
            if (b.at(i) != 0) return false;
    }
    return true;
}

}  // namespace hyperchi
