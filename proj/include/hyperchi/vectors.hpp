#pragma once

// f-vectors, h-vectors and the two "short" h-vectors (one simplicial, one
// cubical), with both defining routes: summing h-vectors of vertex links,
// and inverting the triangular transform against the f-vector.
//
//   simplicial:  (i+1) f_i = Σ_{j<=i} C(d-j, d-i) h~_j
//   cubical:     2^i  f_i = Σ_{j<=i} C(d-j, d-i) h^sc_j
//
// Counts use 64-bit integers; the triangular systems solve by forward
// substitution without division, and the reconstruction direction checks
// divisibility exactly.

#include "hyperchi/cubical.hpp"
#include "hyperchi/numeric.hpp"
#include "hyperchi/simplicial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchi {

// counts[0] = f_{-1} = 1, counts[i+1] = f_i
struct FVector {
    int d = -1;
    std::vector<long long> counts;

    long long at(int i) const {  // i in [-1, d]
        if (i < -1 || i > d) return 0;
        return counts[i + 1];
    }
};

// entries h_0 .. h_{d+1}
struct HVector {
    int d = -1;
    std::vector<long long> h;
};

enum class ShortKind { simplicial, cubical };
enum class ShortHMethod { by_links, by_transform };

// entries index 0..d
struct ShortHVector {
    ShortKind kind = ShortKind::simplicial;
    int d = -1;
    std::vector<long long> h;
};

template <typename Complex>
FVector f_vector(const Complex& c) {
    FVector f;
    f.d = c.dim();
    f.counts.resize(f.d + 2);
    f.counts[0] = 1;
    for (int i = 0; i <= f.d; ++i) f.counts[i + 1] = c.face_count(i);
    return f;
}

inline long long euler_characteristic(const FVector& f) {
    long long chi = 0;
    for (int i = 0; i <= f.d; ++i) chi += (i % 2 ? -1 : 1) * f.at(i);
    return chi;
}

inline long long euler_characteristic(const SimplicialComplex& c) {
    return euler_characteristic(f_vector(c));
}
inline long long euler_characteristic(const CubicalComplex& c) {
    return euler_characteristic(f_vector(c));
}

// h_j = Σ_{i<=j} (-1)^{j-i} C(d+1-i, d+1-j) f_{i-1}; d may exceed the
// complex dimension when a link is graded against its host
inline HVector h_from_f(const FVector& f, int d) {
    if (d < f.d) throw std::invalid_argument("h_from_f: d below the complex dimension");
    HVector h;
    h.d = d;
    h.h.assign(d + 2, 0);
    for (int j = 0; j <= d + 1; ++j)
        for (int i = 0; i <= j; ++i)
            h.h[j] += ((j - i) % 2 ? -1 : 1) * binom_ll(d + 1 - i, d + 1 - j) * f.at(i - 1);
    return h;
}

inline HVector h_vector(const SimplicialComplex& c) { return h_from_f(f_vector(c), c.dim()); }

// inverse transform: f_{i-1} = Σ_{j<=i} C(d+1-j, d+1-i) h_j
inline FVector f_from_h(const HVector& h) {
    FVector f;
    f.d = h.d;
    f.counts.assign(h.d + 2, 0);
    for (int i = 0; i <= h.d + 1; ++i)
        for (int j = 0; j <= i; ++j)
            f.counts[i] += binom_ll(h.d + 1 - j, h.d + 1 - i) * h.h[j];
    return f;
}

namespace detail {

inline void warn_not_pure(const char* what, int d, std::vector<std::string>* warnings) {
    if (warnings)
        warnings->push_back(std::string(what) +
                            ": complex is not pure; using its dimension d=" + std::to_string(d));
}

// forward substitution for Σ_{j<=i} C(d-j, d-i) h_j = rhs_i (the
// coefficient of h_i is C(d-i,d-i) = 1, so no division is needed)
inline std::vector<long long> solve_triangular(const std::vector<long long>& rhs, int d) {
    std::vector<long long> h(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        long long s = rhs[i];
        for (int j = 0; j < i; ++j) s -= binom_ll(d - j, d - i) * h[j];
        h[i] = s;
    }
    return h;
}

}  // namespace detail

// Σ over vertices of h(link), graded against dim d-1
inline ShortHVector short_simplicial_h(const SimplicialComplex& c,
                                       ShortHMethod method = ShortHMethod::by_links,
                                       std::vector<std::string>* warnings = nullptr) {
    int d = c.dim();
    if (d < 0) throw std::invalid_argument("short_simplicial_h: empty complex");
    if (!c.is_pure()) detail::warn_not_pure("short_simplicial_h", d, warnings);
    ShortHVector out;
    out.kind = ShortKind::simplicial;
    out.d = d;
    if (method == ShortHMethod::by_links) {
        out.h.assign(d + 1, 0);
        for (int v : c.vertices()) {
            HVector hv = h_from_f(f_vector(link(c, Face{v}).complex), d - 1);
            for (int j = 0; j <= d; ++j) out.h[j] += hv.h[j];
        }
    } else {
        FVector f = f_vector(c);
        std::vector<long long> rhs(d + 1);
        for (int i = 0; i <= d; ++i) rhs[i] = (i + 1) * f.at(i);
        out.h = detail::solve_triangular(rhs, d);
    }
    return out;
}

inline ShortHVector short_cubical_h(const CubicalComplex& c,
                                    ShortHMethod method = ShortHMethod::by_links,
                                    std::vector<std::string>* warnings = nullptr) {
    int d = c.dim();
    if (d < 0) throw std::invalid_argument("short_cubical_h: empty complex");
    if (!c.is_pure()) detail::warn_not_pure("short_cubical_h", d, warnings);
    ShortHVector out;
    out.kind = ShortKind::cubical;
    out.d = d;
    if (method == ShortHMethod::by_links) {
        out.h.assign(d + 1, 0);
        for (int v : c.vertices()) {
            HVector hv = h_from_f(f_vector(link(c, Face{v}).complex), d - 1);
            for (int j = 0; j <= d; ++j) out.h[j] += hv.h[j];
        }
    } else {
        FVector f = f_vector(c);
        if (d > 61) throw std::invalid_argument("short_cubical_h: dimension too large");
        std::vector<long long> rhs(d + 1);
        for (int i = 0; i <= d; ++i) rhs[i] = (1LL << i) * f.at(i);
        out.h = detail::solve_triangular(rhs, d);
    }
    return out;
}

// reconstructs the f-vector from a short h-vector; the divisions by i+1
// (simplicial) or 2^i (cubical) must come out exact, anything else means
// the vector was not a short h-vector for any complex of that kind
inline FVector f_from_short_h(const ShortHVector& s) {
    FVector f;
    f.d = s.d;
    f.counts.assign(s.d + 2, 0);
    f.counts[0] = 1;
    for (int i = 0; i <= s.d; ++i) {
        long long sum = 0;
        for (int j = 0; j <= i; ++j) sum += binom_ll(s.d - j, s.d - i) * s.h[j];
        long long div = s.kind == ShortKind::simplicial ? i + 1 : (1LL << i);
        if (sum % div != 0)
            throw std::logic_error("f_from_short_h: entry " + std::to_string(i) + " gives " +
                                   std::to_string(sum) + ", not divisible by " +
                                   std::to_string(div));
        f.counts[i + 1] = sum / div;
    }
    return f;
}

}  // namespace hyperchi
