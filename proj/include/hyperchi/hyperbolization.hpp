#pragma once

// the four hyperbolization coefficient families and everything built on
// them: the defining recursions, the triangular coefficient matrices
// c(j,d) / s(j,d), symbolic Euler characteristics of hyperbolized
// complexes computed by two independent routes, mechanical verification
// of the structural lemmas (Pascal recursion, skew symmetry, half-line
// monotonicity, top-term identities, auxiliary even/odd identities), and
// Euler-characteristic sign certification for closed even-dimensional
// homology manifolds.
//
// Each family attaches to one kind of complex. "Mobius" families
// hyperbolize with a surface of Euler characteristic a <= 0, "Gromov"
// families with a <= -1; a is kept symbolic (LinearPoly) until a caller
// evaluates.

#include "hyperchi/cubical.hpp"
#include "hyperchi/homology.hpp"
#include "hyperchi/linear_poly.hpp"
#include "hyperchi/numeric.hpp"
#include "hyperchi/simplicial.hpp"
#include "hyperchi/vectors.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchi {

enum class Family { cubical_mobius, simplicial_mobius, cubical_gromov, simplicial_gromov };

inline bool family_is_cubical(Family f) {
    return f == Family::cubical_mobius || f == Family::cubical_gromov;
}
inline bool family_is_gromov(Family f) {
    return f == Family::cubical_gromov || f == Family::simplicial_gromov;
}

// largest admissible surface Euler characteristic
inline Rational family_bound(Family f) { return family_is_gromov(f) ? Rational(-1) : Rational(0); }

inline std::string family_name(Family f) {
    switch (f) {
        case Family::cubical_mobius: return "cubical-mobius";
        case Family::simplicial_mobius: return "simplicial-mobius";
        case Family::cubical_gromov: return "cubical-gromov";
        case Family::simplicial_gromov: return "simplicial-gromov";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    if (s == "cubical-mobius") return Family::cubical_mobius;
    if (s == "simplicial-mobius") return Family::simplicial_mobius;
    if (s == "cubical-gromov") return Family::cubical_gromov;
    if (s == "simplicial-gromov") return Family::simplicial_gromov;
    throw std::invalid_argument("unknown family \"" + s +
                                "\" (expected cubical-mobius, simplicial-mobius, "
                                "cubical-gromov or simplicial-gromov)");
}

// a(0..n_max); a(0)=1, a(1)=-1, a(2)=a, then the family's recursion
struct CoeffSequence {
    Family family = Family::cubical_mobius;
    std::vector<LinearPoly> a;
};

namespace detail {

// number of k-faces of ∂I^m (cubical) or ∂σ^m (simplicial), k < m
inline Rational boundary_faces_cubical(int m, int k) { return Rational(binom(m, k) * pow2(m - k)); }
inline Rational boundary_faces_simplicial(int m, int k) { return Rational(binom(m + 1, k + 1)); }

inline LinearPoly next_coefficient(Family f, const std::vector<LinearPoly>& a) {
    int n = static_cast<int>(a.size());
    LinearPoly acc;
    switch (f) {
        case Family::cubical_mobius:
            for (int k = 0; k < n; ++k) acc += a[k] * boundary_faces_cubical(n, k);
            break;
        case Family::simplicial_mobius:
            for (int k = 0; k < n; ++k) acc += a[k] * boundary_faces_simplicial(n, k);
            break;
        case Family::cubical_gromov:
            for (int k = 0; k <= n - 2; ++k) acc += a[k] * boundary_faces_cubical(n - 1, k);
            for (int k = 0; k <= n - 1; ++k) acc += a[k] * boundary_faces_cubical(n, k);
            break;
        case Family::simplicial_gromov:
            for (int k = 0; k <= n - 2; ++k) acc += a[k] * boundary_faces_simplicial(n - 1, k);
            for (int k = 0; k <= n - 1; ++k) acc += a[k] * boundary_faces_simplicial(n, k);
            break;
    }
    return acc * Rational(-1, 2);
}

}  // namespace detail

// memoized per family; extending an existing prefix reuses it
inline CoeffSequence coeff_sequence(Family f, int n_max) {
    if (n_max < 2) throw std::invalid_argument("coeff_sequence: need n_max >= 2");
    static std::mutex mu;
    static std::map<Family, std::vector<LinearPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& v = cache[f];
    if (v.empty()) v = {LinearPoly(1), LinearPoly(-1), LinearPoly::var()};
    while (static_cast<int>(v.size()) <= n_max) v.push_back(detail::next_coefficient(f, v));
    return {f, std::vector<LinearPoly>(v.begin(), v.begin() + n_max + 1)};
}

// c[d][j] for 0 <= j <= d <= d_max
struct CoeffMatrix {
    Family family = Family::cubical_mobius;
    int d_max = 0;
    std::vector<std::vector<LinearPoly>> c;
};

// cubical:    c(j,d) = Σ_{k=j..d} 2^{-k}   C(d-j, d-k) a(k)
// simplicial: s(j,d) = Σ_{k=j..d} 1/(k+1)  C(d-j, d-k) b(k)
inline CoeffMatrix coeff_matrix(Family f, int d_max) {
    if (d_max < 0) throw std::invalid_argument("coeff_matrix: need d_max >= 0");
    CoeffSequence seq = coeff_sequence(f, std::max(2, d_max));
    bool cub = family_is_cubical(f);
    CoeffMatrix m{f, d_max, {}};
    m.c.resize(d_max + 1);
    for (int d = 0; d <= d_max; ++d) {
        m.c[d].resize(d + 1);
        for (int j = 0; j <= d; ++j) {
            LinearPoly acc;
            for (int k = j; k <= d; ++k) {
                Rational w = cub ? Rational(1, pow2(k)) : Rational(1, k + 1);
                acc += seq.a[k] * (w * Rational(binom(d - j, d - k)));
            }
            m.c[d][j] = acc;
        }
    }
    return m;
}

struct CheckFailure {
    std::string identity;
    long long j = -1;
    long long d = -1;
    std::string detail;
};

struct VerifyReport {
    std::string name;
    Family family = Family::cubical_mobius;
    long long bound = 0;
    long long checks = 0;
    std::vector<CheckFailure> failures;

    bool passed() const { return failures.empty(); }
};

// c(j,d) = c(j+1,d) + c(j,d-1) for 0 <= j < d
inline VerifyReport verify_recursion(const CoeffMatrix& m) {
    VerifyReport r{"recursion", m.family, m.d_max, 0, {}};
    for (int d = 1; d <= m.d_max; ++d)
        for (int j = 0; j < d; ++j) {
            ++r.checks;
            if (m.c[d][j] != m.c[d][j + 1] + m.c[d - 1][j])
                r.failures.push_back({"c(j,d)=c(j+1,d)+c(j,d-1)", j, d,
                                      m.c[d][j].str() + " vs " +
                                          (m.c[d][j + 1] + m.c[d - 1][j]).str()});
        }
    return r;
}

// c(j,d) = (-1)^d c(d-j,d)
inline VerifyReport verify_skew_symmetry(const CoeffMatrix& m) {
    VerifyReport r{"skew-symmetry", m.family, m.d_max, 0, {}};
    for (int d = 0; d <= m.d_max; ++d)
        for (int j = 0; j <= d; ++j) {
            ++r.checks;
            LinearPoly rhs = (d % 2) ? -m.c[d][d - j] : m.c[d][d - j];
            if (m.c[d][j] != rhs)
                r.failures.push_back(
                    {"c(j,d)=(-1)^d c(d-j,d)", j, d, m.c[d][j].str() + " vs " + rhs.str()});
        }
    return r;
}

// sign and ordering chains for d >= 4, certified on the whole admissible
// half-line (a <= 0 for Mobius, a <= -1 for Gromov). For d divisible by 4
// and d = 4m+2 the Mobius families pin the outer entry to zero exactly,
// the Gromov families only bound its sign.
inline VerifyReport verify_monotonicity(const CoeffMatrix& m) {
    VerifyReport r{"monotonicity", m.family, m.d_max, 0, {}};
    Rational a0 = family_bound(m.family);
    bool mobius = !family_is_gromov(m.family);
    auto cell = [](int j, int d) {
        return "c(" + std::to_string(j) + "," + std::to_string(d) + ")";
    };
    auto expect_le = [&](const LinearPoly& lo, const LinearPoly& hi, const std::string& label,
                         int j, int d) {
        ++r.checks;
        if (!le_on_halfline(lo, hi, a0))
            r.failures.push_back({label, j, d, "not certified on a <= " + rational_str(a0)});
    };
    auto expect_zero = [&](const LinearPoly& x, const std::string& label, int j, int d) {
        ++r.checks;
        if (!x.is_zero()) r.failures.push_back({label, j, d, "expected 0, got " + x.str()});
    };
    for (int d = 4; d <= m.d_max; ++d) {
        const auto& row = m.c[d];
        int mm = d / 4;
        switch (d % 4) {
            case 0:
                if (mobius)
                    expect_zero(row[0], cell(0, d) + "=0", 0, d);
                else
                    expect_le(LinearPoly(0), row[0], "0<=" + cell(0, d), 0, d);
                for (int j = 0; j < 2 * mm; ++j)
                    expect_le(row[j], row[j + 1], cell(j, d) + "<=" + cell(j + 1, d), j, d);
                break;
            case 1:
                expect_le(LinearPoly(0), row[2 * mm], "0<=" + cell(2 * mm, d), 2 * mm, d);
                for (int j = 0; j < 2 * mm; ++j)
                    expect_le(row[j + 1], row[j], cell(j + 1, d) + "<=" + cell(j, d), j, d);
                break;
            case 2:
                if (mobius)
                    expect_zero(row[0], cell(0, d) + "=0", 0, d);
                else
                    expect_le(row[0], LinearPoly(0), cell(0, d) + "<=0", 0, d);
                for (int j = 0; j <= 2 * mm; ++j)
                    expect_le(row[j + 1], row[j], cell(j + 1, d) + "<=" + cell(j, d), j, d);
                break;
            case 3:
                expect_le(row[2 * mm + 1], LinearPoly(0), cell(2 * mm + 1, d) + "<=0", 2 * mm + 1,
                          d);
                for (int j = 0; j <= 2 * mm; ++j)
                    expect_le(row[j], row[j + 1], cell(j, d) + "<=" + cell(j + 1, d), j, d);
                break;
        }
    }
    return r;
}

// Gromov-only boundary relations between consecutive rows, d >= 3:
//   cubical:    2 (c(0,d) + c(d,d)) = c(d-1,d-1) - c(0,d-1)
//   simplicial: (d+1)(s(0,d) + s(d,d)) = d (s(d-1,d-1) - s(0,d-1))
inline VerifyReport verify_top_terms(const CoeffMatrix& m) {
    if (!family_is_gromov(m.family))
        throw std::invalid_argument("verify_top_terms: defined for the Gromov families only");
    VerifyReport r{"top-terms", m.family, m.d_max, 0, {}};
    bool cub = family_is_cubical(m.family);
    for (int d = 3; d <= m.d_max; ++d) {
        ++r.checks;
        LinearPoly lhs, rhs;
        if (cub) {
            lhs = Rational(2) * (m.c[d][0] + m.c[d][d]);
            rhs = m.c[d - 1][d - 1] - m.c[d - 1][0];
        } else {
            lhs = Rational(d + 1) * (m.c[d][0] + m.c[d][d]);
            rhs = Rational(d) * (m.c[d - 1][d - 1] - m.c[d - 1][0]);
        }
        if (lhs != rhs)
            r.failures.push_back({cub ? "2(c(0,d)+c(d,d))=c(d-1,d-1)-c(0,d-1)"
                                      : "(d+1)(s(0,d)+s(d,d))=d(s(d-1,d-1)-s(0,d-1))",
                                  -1, d, lhs.str() + " vs " + rhs.str()});
    }
    return r;
}

// the even/odd coincidence, the vanishing of the hyperbolized boundary
// sphere, and the even-index-only recursions. The coincidence a(2n)=a(2n-1)
// and the even-index recursions involve the seed a(2)=a, so they are exact
// polynomial identities for n >= 2 only; at n = 1, and for the even-index
// recursions at every n, the identity holds at the Gromov boundary value
// a = -1, which is where the theory uses them. The vanishing identities
// hold symbolically for all n.
inline VerifyReport verify_auxiliary_gromov(Family f, int n_max) {
    if (!family_is_gromov(f))
        throw std::invalid_argument("verify_auxiliary_gromov: defined for the Gromov families only");
    if (n_max < 1) throw std::invalid_argument("verify_auxiliary_gromov: need n_max >= 1");
    VerifyReport r{"auxiliary", f, n_max, 0, {}};
    CoeffSequence seq = coeff_sequence(f, 2 * n_max);
    const auto& a = seq.a;
    bool cub = family_is_cubical(f);
    Rational at(-1);
    std::vector<Rational> regen{Rational(1)};  // regenerated even-index values at a = -1
    for (int n = 1; n <= n_max; ++n) {
        ++r.checks;
        if (n >= 2) {
            if (a[2 * n] != a[2 * n - 1])
                r.failures.push_back({"a(2n)=a(2n-1)", -1, n,
                                      a[2 * n].str() + " vs " + a[2 * n - 1].str()});
        } else if (a[2](at) != a[1](at)) {
            r.failures.push_back({"a(2n)=a(2n-1) at a=-1", -1, n, "seed mismatch"});
        }

        ++r.checks;
        LinearPoly vanish;
        if (cub)
            for (int k = 0; k < 2 * n; ++k)
                vanish += a[k] * detail::boundary_faces_cubical(2 * n, k);
        else
            for (int k = 0; k < 2 * n; ++k)
                vanish += a[k] * detail::boundary_faces_simplicial(2 * n, k);
        if (!vanish.is_zero())
            r.failures.push_back({"sum a(k) f_k(boundary sphere) = 0", -1, n, vanish.str()});

        ++r.checks;
        Rational rhs;
        if (cub) {
            rhs = 0;
            for (int k = 0; k < n; ++k)
                rhs += a[2 * k](at) *
                       Rational(pow2(2 * n - 2 * k - 1) *
                                (2 * binom(2 * n, 2 * k) - binom(2 * n - 1, 2 * k)));
        } else {
            rhs = -1;
            for (int k = 0; k < n; ++k) rhs += Rational(binom(2 * n + 1, 2 * k + 1)) * a[2 * k](at);
        }
        if (Rational(-2) * a[2 * n](at) != rhs)
            r.failures.push_back({"even-index recursion at a=-1", -1, n,
                                  rational_str(Rational(-2) * a[2 * n](at)) + " vs " +
                                      rational_str(rhs)});

        // regenerate a(2n)|_{a=-1} from the even-index recursion alone
        ++r.checks;
        Rational rr;
        if (cub) {
            rr = 0;
            for (int k = 0; k < n; ++k)
                rr += regen[k] * Rational(pow2(2 * n - 2 * k - 1) *
                                          (2 * binom(2 * n, 2 * k) - binom(2 * n - 1, 2 * k)));
        } else {
            rr = -1;
            for (int k = 0; k < n; ++k) rr += Rational(binom(2 * n + 1, 2 * k + 1)) * regen[k];
        }
        regen.push_back(rr / Rational(-2));
        if (regen[n] != a[2 * n](at))
            r.failures.push_back({"even-index recursion regenerates a(2n) at a=-1", -1, n,
                                  rational_str(regen[n]) + " vs " + rational_str(a[2 * n](at))});
    }
    return r;
}

struct HyperbolizedEuler {
    Family family = Family::cubical_mobius;
    LinearPoly chi;               // symbolic in a
    std::optional<Rational> at;   // evaluation point, if requested
    std::optional<Rational> value;
    bool cross_checked = false;   // both routes computed and agreed
};

namespace detail {

template <typename Complex>
HyperbolizedEuler euler_hyperbolized_impl(const Complex& c, Family f, std::optional<Rational> at,
                                          ShortHVector (*short_h)(const Complex&, ShortHMethod,
                                                                  std::vector<std::string>*)) {
    int d = c.dim();
    HyperbolizedEuler out;
    out.family = f;
    if (d >= 0) {
        CoeffSequence seq = coeff_sequence(f, std::max(2, d));
        FVector fv = f_vector(c);
        for (int k = 0; k <= d; ++k) out.chi += seq.a[k] * Rational(fv.at(k));
        if (c.is_pure()) {
            // independent route through the short h-vector
            CoeffMatrix m = coeff_matrix(f, d);
            ShortHVector s = short_h(c, ShortHMethod::by_transform, nullptr);
            LinearPoly alt;
            for (int j = 0; j <= d; ++j) alt += m.c[d][j] * Rational(s.h[j]);
            if (alt != out.chi)
                throw std::logic_error("euler_hyperbolized: face-count route gives " +
                                       out.chi.str() + " but short-h route gives " + alt.str());
            out.cross_checked = true;
        }
    }
    if (at) {
        out.at = at;
        out.value = out.chi(*at);
    }
    return out;
}

}  // namespace detail

inline HyperbolizedEuler euler_hyperbolized(const CubicalComplex& c, Family f,
                                            std::optional<Rational> at = std::nullopt) {
    if (!family_is_cubical(f))
        throw std::invalid_argument("family " + family_name(f) + " expects a simplicial complex");
    return detail::euler_hyperbolized_impl<CubicalComplex>(c, f, at, &short_cubical_h);
}

inline HyperbolizedEuler euler_hyperbolized(const SimplicialComplex& c, Family f,
                                            std::optional<Rational> at = std::nullopt) {
    if (family_is_cubical(f))
        throw std::invalid_argument("family " + family_name(f) + " expects a cubical complex");
    return detail::euler_hyperbolized_impl<SimplicialComplex>(c, f, at, &short_simplicial_h);
}

struct SignVerdict {
    Family family = Family::cubical_mobius;
    int d = 0;
    int m = 0;  // d = 2m
    Rational a;
    LinearPoly chi_symbolic;
    Rational chi;
    bool sign_ok = false;  // (-1)^m chi >= 0
    std::vector<Rational> coeff_at_a;  // c(j,d) evaluated at a
    std::vector<long long> short_h;
    std::vector<Rational> products;    // coeff * short_h, each must match the predicted sign
    bool witness_ok = false;
    bool manifold_checked = false;
    std::vector<std::string> warnings;

    bool passed() const { return sign_ok && witness_ok; }
};

namespace detail {

template <typename Complex>
SignVerdict certify_impl(const Complex& c, Family f, const Rational& a, bool trust_manifold,
                         const FieldSpec& field,
                         ShortHVector (*short_h)(const Complex&, ShortHMethod,
                                                 std::vector<std::string>*)) {
    int d = c.dim();
    if (d < 0 || d % 2 != 0)
        throw std::invalid_argument("certify_sign_conjecture: dimension " + std::to_string(d) +
                                    " is odd; the conjecture concerns closed even-dimensional "
                                    "manifolds");
    SignVerdict v;
    v.family = f;
    v.d = d;
    v.m = d / 2;
    v.a = a;
    if (a > family_bound(f))
        v.warnings.push_back("a = " + rational_str(a) + " is outside the admissible range a <= " +
                             rational_str(family_bound(f)) + " for " + family_name(f));
    if (!trust_manifold) {
        ManifoldReport mr = manifold_report(c, field);
        if (!mr.ok)
            throw std::runtime_error("certify_sign_conjecture: complex is not a closed homology "
                                     "manifold over " + field.str() + ": " + mr.reason);
        v.manifold_checked = true;
    }
    HyperbolizedEuler he = euler_hyperbolized(c, f, a);
    v.chi_symbolic = he.chi;
    v.chi = *he.value;
    int sign = (v.m % 2) ? -1 : 1;
    v.sign_ok = Rational(sign) * v.chi >= 0;
    CoeffMatrix mat = coeff_matrix(f, d);
    ShortHVector s = short_h(c, ShortHMethod::by_links, nullptr);
    v.short_h = s.h;
    v.witness_ok = true;
    for (int j = 0; j <= d; ++j) {
        v.coeff_at_a.push_back(mat.c[d][j](a));
        v.products.push_back(v.coeff_at_a.back() * Rational(s.h[j]));
        if (Rational(sign) * v.products.back() < 0) v.witness_ok = false;
    }
    return v;
}

}  // namespace detail

inline SignVerdict certify_sign_conjecture(const CubicalComplex& c, Family f, const Rational& a,
                                           bool trust_manifold = false,
                                           const FieldSpec& field = FieldSpec::Q()) {
    if (!family_is_cubical(f))
        throw std::invalid_argument("family " + family_name(f) + " expects a simplicial complex");
    return detail::certify_impl<CubicalComplex>(c, f, a, trust_manifold, field, &short_cubical_h);
}

inline SignVerdict certify_sign_conjecture(const SimplicialComplex& c, Family f, const Rational& a,
                                           bool trust_manifold = false,
                                           const FieldSpec& field = FieldSpec::Q()) {
    if (family_is_cubical(f))
        throw std::invalid_argument("family " + family_name(f) + " expects a cubical complex");
    return detail::certify_impl<SimplicialComplex>(c, f, a, trust_manifold, field,
                                                   &short_simplicial_h);
}

}  // namespace hyperchi
