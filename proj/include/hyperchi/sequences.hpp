#pragma once

// tangent, secant and Genocchi numbers through the derivative recursions of
// their generating functions, plus two implementations that share no code
// with those recursions (brute-force alternating-permutation counting and
// the Seidel boustrophedon triangle) and the identity checks tying the
// derivative sequences to the hyperbolization coefficient families.
//
// Sign conventions, in one place:
//
//   generator           value at 0                      unsigned sequence
//   F  = 1 - tanh x     F^(2n-1)(0) = (-1)^n t_n        t_n = 1, 2, 16, 272, ...
//   Ft = sech x         Ft^(2n)(0)  = (-1)^n E_n        E_n = 1, 1, 5, 61, ...
//   G  = x tanh(x/2)    G^(2n)(0)   = (-1)^(n+1) g_n    g_n = 1, 1, 3, 17, ...
//
// identity checks (verify_identities):
//   a_M(n)    at a = 0   equals  F^(n)(0)
//   b_M(2n-1) at a = 0   equals -G^(2n)(0)     (the -x tanh(x/2) convention,
//                                               in which that equality is derived)
//   a_G(2n)   at a = -1  equals  Ft^(2n)(0)
//   b_G(2n-2) at a = -1  equals  G^(2n)(0)

#include "hyperchi/hyperbolization.hpp"
#include "hyperchi/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchi {

enum class GenTag { one_minus_tanh, sech, x_tanh_half };

inline std::string gen_tag_name(GenTag t) {
    switch (t) {
        case GenTag::one_minus_tanh: return "1-tanh(x)";
        case GenTag::sech: return "sech(x)";
        case GenTag::x_tanh_half: return "x*tanh(x/2)";
    }
    return "?";
}

// v[n] = f^(n)(0); integral for all three generators
struct DerivativeSequence {
    GenTag tag = GenTag::one_minus_tanh;
    std::vector<Integer> v;
};

// Each generator satisfies a linear identity against e^x or e^2x whose n-th
// derivative at 0 isolates 2 f^(n)(0) on the left, so every step is an exact
// division by 2 (guarded).
inline DerivativeSequence derivative_sequence(GenTag tag, int n_max) {
    if (n_max < 0) throw std::invalid_argument("derivative_sequence: need n_max >= 0");
    std::vector<Integer> v;
    for (int n = 0; n <= n_max; ++n) {
        Integer s;
        switch (tag) {
            case GenTag::one_minus_tanh:
                if (n == 0) {
                    v.push_back(1);
                    continue;
                }
                s = 0;
                for (int k = 0; k < n; ++k) s += binom(n, k) * pow2(n - k) * v[k];
                v.push_back(exact_div(-s, 2));
                break;
            case GenTag::sech:
                s = 2;
                for (int k = 0; k < n; ++k) s -= binom(n, k) * pow2(n - k) * v[k];
                v.push_back(exact_div(s, 2));
                break;
            case GenTag::x_tanh_half:
                if (n <= 1) {
                    v.push_back(0);
                    continue;
                }
                s = n;
                for (int k = 0; k < n; ++k) s -= binom(n, k) * v[k];
                v.push_back(exact_div(s, 2));
                break;
        }
    }
    return {tag, v};
}

// t_1..t_n
inline std::vector<Integer> tangent_numbers(int n_max) {
    if (n_max < 1) throw std::invalid_argument("tangent_numbers: need n_max >= 1");
    DerivativeSequence F = derivative_sequence(GenTag::one_minus_tanh, 2 * n_max - 1);
    std::vector<Integer> t;
    for (int n = 1; n <= n_max; ++n) t.push_back((n % 2) ? -F.v[2 * n - 1] : F.v[2 * n - 1]);
    return t;
}

// E_0..E_n
inline std::vector<Integer> secant_numbers(int n_max) {
    if (n_max < 1) throw std::invalid_argument("secant_numbers: need n_max >= 1");
    DerivativeSequence Ft = derivative_sequence(GenTag::sech, 2 * n_max);
    std::vector<Integer> e;
    for (int n = 0; n <= n_max; ++n) e.push_back((n % 2) ? -Ft.v[2 * n] : Ft.v[2 * n]);
    return e;
}

// g_1..g_n
inline std::vector<Integer> genocchi_numbers(int n_max) {
    if (n_max < 1) throw std::invalid_argument("genocchi_numbers: need n_max >= 1");
    DerivativeSequence G = derivative_sequence(GenTag::x_tanh_half, 2 * n_max);
    std::vector<Integer> g;
    for (int n = 1; n <= n_max; ++n) g.push_back(abs(G.v[2 * n]));
    return g;
}

enum class AltKind { up_down_odd, up_down_even };

// permutations of {1..len} with pi_1 < pi_2 > pi_3 < ... ; len = 2n-1 for the
// odd kind (count t_n), len = 2n for the even kind (count E_n). Brute force.
inline long long alternating_permutation_count(int n, AltKind kind) {
    if (n < (kind == AltKind::up_down_odd ? 1 : 0))
        throw std::invalid_argument("alternating_permutation_count: n too small");
    int len = (kind == AltKind::up_down_odd) ? 2 * n - 1 : 2 * n;
    if (len > 11)
        throw std::invalid_argument("alternating_permutation_count: " + std::to_string(len) +
                                    "! permutations is past the brute-force range (length <= 11); "
                                    "use seidel_zigzag");
    std::vector<int> p(len);
    std::iota(p.begin(), p.end(), 1);
    long long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < len && ok; ++i)
            ok = (i % 2 == 0) ? p[i] < p[i + 1] : p[i] > p[i + 1];
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// zigzag numbers A_0..A_n (1,1,1,2,5,16,61,272,...) by the boustrophedon
// transform of 1,0,0,...; A_{2n} = E_n and A_{2n-1} = t_n. Independent of the
// derivative recursions above.
inline std::vector<Integer> seidel_zigzag(int n_max) {
    if (n_max < 0) throw std::invalid_argument("seidel_zigzag: need n_max >= 0");
    std::vector<Integer> zig{1};
    std::vector<Integer> row{1};
    for (int k = 1; k <= n_max; ++k) {
        std::vector<Integer> next(k + 1);
        next[0] = 0;
        for (int i = 1; i <= k; ++i) next[i] = next[i - 1] + row[k - i];
        zig.push_back(next[k]);
        row = std::move(next);
    }
    return zig;
}

struct SequenceReport {
    std::string name;
    long long n_max = 0;
    long long checks = 0;
    std::vector<CheckFailure> failures;

    bool passed() const { return failures.empty(); }
};

// the four equalities between coefficient families and generator derivatives
// listed in the header comment, each in its own sign convention
inline SequenceReport verify_identities(int n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_identities: need n_max >= 2");
    SequenceReport r{"coefficient-identities", n_max, 0, {}};
    CoeffSequence aM = coeff_sequence(Family::cubical_mobius, n_max);
    CoeffSequence bM = coeff_sequence(Family::simplicial_mobius, n_max);
    CoeffSequence aG = coeff_sequence(Family::cubical_gromov, n_max);
    CoeffSequence bG = coeff_sequence(Family::simplicial_gromov, n_max);
    DerivativeSequence F = derivative_sequence(GenTag::one_minus_tanh, n_max);
    DerivativeSequence Ft = derivative_sequence(GenTag::sech, n_max);
    DerivativeSequence G = derivative_sequence(GenTag::x_tanh_half, n_max + 3);
    Rational zero(0), minus1(-1);

    for (int n = 0; n <= n_max; ++n) {
        ++r.checks;
        if (aM.a[n](zero) != Rational(F.v[n]))
            r.failures.push_back({"a_M(n)|a=0 = F^(n)(0)", -1, n,
                                  rational_str(aM.a[n](zero)) + " vs " + F.v[n].str()});
    }
    for (int n = 1; 2 * n - 1 <= n_max; ++n) {
        ++r.checks;
        if (bM.a[2 * n - 1](zero) != Rational(-G.v[2 * n]))
            r.failures.push_back({"b_M(2n-1)|a=0 = -G^(2n)(0)", -1, n,
                                  rational_str(bM.a[2 * n - 1](zero)) + " vs " +
                                      Integer(-G.v[2 * n]).str()});
    }
    for (int n = 1; 2 * n <= n_max; ++n) {
        ++r.checks;
        if (aG.a[2 * n](minus1) != Rational(Ft.v[2 * n]))
            r.failures.push_back({"a_G(2n)|a=-1 = sech^(2n)(0)", -1, n,
                                  rational_str(aG.a[2 * n](minus1)) + " vs " + Ft.v[2 * n].str()});
    }
    for (int n = 1; 2 * n - 2 <= n_max; ++n) {
        ++r.checks;
        if (bG.a[2 * n - 2](minus1) != Rational(G.v[2 * n]))
            r.failures.push_back({"b_G(2n-2)|a=-1 = G^(2n)(0)", -1, n,
                                  rational_str(bG.a[2 * n - 2](minus1)) + " vs " +
                                      G.v[2 * n].str()});
    }
    return r;
}

// recursion values against brute-force permutation counts (within the
// factorial budget) and against the Seidel triangle (everywhere)
inline SequenceReport verify_triple_agreement(int n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_triple_agreement: need n_max >= 1");
    SequenceReport r{"triple-agreement", n_max, 0, {}};
    std::vector<Integer> t = tangent_numbers(n_max);
    std::vector<Integer> e = secant_numbers(n_max);
    std::vector<Integer> zig = seidel_zigzag(2 * n_max);
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
        ++r.checks;
        long long bf = alternating_permutation_count(n, AltKind::up_down_odd);
        if (Integer(bf) != t[n - 1])
            r.failures.push_back({"t_n = #up-down perms of odd length", -1, n,
                                  std::to_string(bf) + " vs " + t[n - 1].str()});
    }
    for (int n = 0; n <= std::min(n_max, 5); ++n) {
        ++r.checks;
        long long bf = alternating_permutation_count(n, AltKind::up_down_even);
        if (Integer(bf) != e[n])
            r.failures.push_back({"E_n = #up-down perms of even length", -1, n,
                                  std::to_string(bf) + " vs " + e[n].str()});
    }
    for (int n = 1; n <= n_max; ++n) {
        ++r.checks;
        if (zig[2 * n - 1] != t[n - 1])
            r.failures.push_back({"t_n = zigzag(2n-1)", -1, n,
                                  zig[2 * n - 1].str() + " vs " + t[n - 1].str()});
    }
    for (int n = 0; n <= n_max; ++n) {
        ++r.checks;
        if (zig[2 * n] != e[n])
            r.failures.push_back({"E_n = zigzag(2n)", -1, n, zig[2 * n].str() + " vs " + e[n].str()});
    }
    return r;
}

// sech and x*tanh(x/2) are even functions (the latter once the leading x is
// paired with the odd tanh), so odd derivatives at 0 must vanish
inline SequenceReport verify_odd_vanishing(int n_max) {
    if (n_max < 0) throw std::invalid_argument("verify_odd_vanishing: need n_max >= 0");
    SequenceReport r{"odd-derivative-vanishing", n_max, 0, {}};
    DerivativeSequence Ft = derivative_sequence(GenTag::sech, 2 * n_max + 1);
    DerivativeSequence G = derivative_sequence(GenTag::x_tanh_half, 2 * n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        ++r.checks;
        if (Ft.v[2 * n + 1] != 0)
            r.failures.push_back({"sech^(2n+1)(0) = 0", -1, n, Ft.v[2 * n + 1].str()});
        ++r.checks;
        if (G.v[2 * n + 1] != 0)
            r.failures.push_back({"G^(2n+1)(0) = 0", -1, n, G.v[2 * n + 1].str()});
    }
    return r;
}

// g_n 2^(2n-1) = 2n t_n, i.e. the Genocchi numbers are scaled tangent
// numbers; an arithmetic bridge between the two derivative recursions
inline SequenceReport verify_genocchi_tangent(int n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_genocchi_tangent: need n_max >= 1");
    SequenceReport r{"genocchi-tangent", n_max, 0, {}};
    std::vector<Integer> t = tangent_numbers(n_max);
    std::vector<Integer> g = genocchi_numbers(n_max);
    for (int n = 1; n <= n_max; ++n) {
        ++r.checks;
        if (g[n - 1] * pow2(2 * n - 1) != Integer(2 * n) * t[n - 1])
            r.failures.push_back({"g_n 2^(2n-1) = 2n t_n", -1, n,
                                  Integer(g[n - 1] * pow2(2 * n - 1)).str() + " vs " +
                                      Integer(Integer(2 * n) * t[n - 1]).str()});
    }
    return r;
}

}  // namespace hyperchi
