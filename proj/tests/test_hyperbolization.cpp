#include "hyperchi/hyperbolization.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <utility>

#include "fixtures.hpp"

using namespace hyperchi;

namespace {

LinearPoly lp(const char* p, const char* q) {
    return LinearPoly(parse_rational(p), parse_rational(q));
}

using Row = std::vector<std::pair<const char*, const char*>>;

void check_matrix(const CoeffMatrix& m, const std::vector<Row>& want) {
    REQUIRE(m.c.size() >= want.size());
    for (std::size_t d = 0; d < want.size(); ++d) {
        REQUIRE(m.c[d].size() == want[d].size());
        for (std::size_t j = 0; j < want[d].size(); ++j) {
            INFO("family " << family_name(m.family) << " cell (" << j << "," << d << ")");
            REQUIRE(m.c[d][j] == lp(want[d][j].first, want[d][j].second));
        }
    }
}

std::set<std::pair<long long, long long>> failure_cells(const VerifyReport& r) {
    std::set<std::pair<long long, long long>> out;
    for (const auto& f : r.failures) out.insert({f.j, f.d});
    return out;
}

}  // namespace

TEST_CASE("coefficient sequences, low order, symbolically") {
    CoeffSequence aM = coeff_sequence(Family::cubical_mobius, 6);
    CoeffSequence bM = coeff_sequence(Family::simplicial_mobius, 6);
    CoeffSequence aG = coeff_sequence(Family::cubical_gromov, 7);
    CoeffSequence bG = coeff_sequence(Family::simplicial_gromov, 7);

    std::vector<LinearPoly> want_aM = {lp("1", "0"),  lp("-1", "0"),  lp("0", "1"), lp("2", "-3"),
                                       lp("0", "0"),  lp("-16", "20"), lp("0", "0")};
    std::vector<LinearPoly> want_bM = {lp("1", "0"), lp("-1", "0"), lp("0", "1"), lp("1", "-2"),
                                       lp("0", "0"), lp("-3", "5"), lp("0", "0")};
    std::vector<LinearPoly> want_aG = {lp("1", "0"),    lp("-1", "0"),   lp("0", "1"),
                                       lp("2", "-3"),   lp("2", "-3"),   lp("-26", "35"),
                                       lp("-26", "35"), lp("594", "-791")};
    std::vector<LinearPoly> want_bG = {lp("1", "0"),   lp("-1", "0"),  lp("0", "1"),
                                       lp("1", "-2"),  lp("1", "-2"),  lp("-6", "11"),
                                       lp("-6", "11"), lp("55", "-100")};
    REQUIRE(aM.a == want_aM);
    REQUIRE(bM.a == want_bM);
    REQUIRE(aG.a == want_aG);
    REQUIRE(bG.a == want_bG);

    // the Gromov even/odd coincidence at the first few indices
    REQUIRE(aG.a[4] == aG.a[3]);
    REQUIRE(aG.a[6] == aG.a[5]);
    REQUIRE(bG.a[4] == bG.a[3]);
    REQUIRE(bG.a[6] == bG.a[5]);
}

TEST_CASE("memoized sequences extend consistently") {
    CoeffSequence small = coeff_sequence(Family::simplicial_gromov, 5);
    CoeffSequence big = coeff_sequence(Family::simplicial_gromov, 12);
    REQUIRE(big.a.size() == 13);
    for (int n = 0; n <= 5; ++n) REQUIRE(small.a[n] == big.a[n]);
    REQUIRE_THROWS_AS(coeff_sequence(Family::simplicial_gromov, 1), std::invalid_argument);
}

TEST_CASE("odd-index Mobius coefficients vanish beyond the seeds") {
    CoeffSequence aM = coeff_sequence(Family::cubical_mobius, 30);
    CoeffSequence bM = coeff_sequence(Family::simplicial_mobius, 30);
    for (int k = 2; k <= 15; ++k) {
        INFO("k = " << k);
        REQUIRE(aM.a[2 * k].is_zero());
        REQUIRE(bM.a[2 * k].is_zero());
    }
}

TEST_CASE("diagonal of the coefficient matrix is the scaled sequence") {
    for (Family f : {Family::cubical_mobius, Family::simplicial_mobius, Family::cubical_gromov,
                     Family::simplicial_gromov}) {
        CoeffSequence seq = coeff_sequence(f, 20);
        CoeffMatrix m = coeff_matrix(f, 20);
        for (int d = 0; d <= 20; ++d) {
            INFO("family " << family_name(f) << " d = " << d);
            Rational w = family_is_cubical(f) ? Rational(1, pow2(d)) : Rational(1, d + 1);
            REQUIRE(m.c[d][d] == seq.a[d] * w);
        }
    }
}

TEST_CASE("cubical Mobius matrix through dimension 6") {
    check_matrix(coeff_matrix(Family::cubical_mobius, 6),
                 {{{"1", "0"}},
                  {{"1/2", "0"}, {"-1/2", "0"}},
                  {{"0", "1/4"}, {"-1/2", "1/4"}, {"0", "1/4"}},
                  {{"-1/4", "3/8"}, {"-1/4", "1/8"}, {"1/4", "-1/8"}, {"1/4", "-3/8"}},
                  {{"0", "0"}, {"1/4", "-3/8"}, {"1/2", "-1/2"}, {"1/4", "-3/8"}, {"0", "0"}},
                  {{"1/2", "-5/8"},
                   {"1/2", "-5/8"},
                   {"1/4", "-1/4"},
                   {"-1/4", "1/4"},
                   {"-1/2", "5/8"},
                   {"-1/2", "5/8"}},
                  {{"0", "0"},
                   {"-1/2", "5/8"},
                   {"-1", "5/4"},
                   {"-5/4", "3/2"},
                   {"-1", "5/4"},
                   {"-1/2", "5/8"},
                   {"0", "0"}}});
}

TEST_CASE("simplicial Mobius matrix through dimension 6") {
    check_matrix(coeff_matrix(Family::simplicial_mobius, 6),
                 {{{"1", "0"}},
                  {{"1/2", "0"}, {"-1/2", "0"}},
                  {{"0", "1/3"}, {"-1/2", "1/3"}, {"0", "1/3"}},
                  {{"-1/4", "1/2"}, {"-1/4", "1/6"}, {"1/4", "-1/6"}, {"1/4", "-1/2"}},
                  {{"0", "0"}, {"1/4", "-1/2"}, {"1/2", "-2/3"}, {"1/4", "-1/2"}, {"0", "0"}},
                  {{"1/2", "-5/6"},
                   {"1/2", "-5/6"},
                   {"1/4", "-1/3"},
                   {"-1/4", "1/3"},
                   {"-1/2", "5/6"},
                   {"-1/2", "5/6"}},
                  {{"0", "0"},
                   {"-1/2", "5/6"},
                   {"-1", "5/3"},
                   {"-5/4", "2"},
                   {"-1", "5/3"},
                   {"-1/2", "5/6"},
                   {"0", "0"}}});
}

TEST_CASE("cubical Gromov matrix through dimension 6") {
    check_matrix(coeff_matrix(Family::cubical_gromov, 6),
                 {{{"1", "0"}},
                  {{"1/2", "0"}, {"-1/2", "0"}},
                  {{"0", "1/4"}, {"-1/2", "1/4"}, {"0", "1/4"}},
                  {{"-1/4", "3/8"}, {"-1/4", "1/8"}, {"1/4", "-1/8"}, {"1/4", "-3/8"}},
                  {{"1/8", "-3/16"},
                   {"3/8", "-9/16"},
                   {"5/8", "-11/16"},
                   {"3/8", "-9/16"},
                   {"1/8", "-3/16"}},
                  {{"13/16", "-35/32"},
                   {"11/16", "-29/32"},
                   {"5/16", "-11/32"},
                   {"-5/16", "11/32"},
                   {"-11/16", "29/32"},
                   {"-13/16", "35/32"}},
                  {{"-13/32", "35/64"},
                   {"-39/32", "105/64"},
                   {"-61/32", "163/64"},
                   {"-71/32", "185/64"},
                   {"-61/32", "163/64"},
                   {"-39/32", "105/64"},
                   {"-13/32", "35/64"}}});
}

TEST_CASE("simplicial Gromov matrix through dimension 6") {
    check_matrix(coeff_matrix(Family::simplicial_gromov, 6),
                 {{{"1", "0"}},
                  {{"1/2", "0"}, {"-1/2", "0"}},
                  {{"0", "1/3"}, {"-1/2", "1/3"}, {"0", "1/3"}},
                  {{"-1/4", "1/2"}, {"-1/4", "1/6"}, {"1/4", "-1/6"}, {"1/4", "-1/2"}},
                  {{"1/5", "-2/5"},
                   {"9/20", "-9/10"},
                   {"7/10", "-16/15"},
                   {"9/20", "-9/10"},
                   {"1/5", "-2/5"}},
                  {{"1", "-11/6"},
                   {"4/5", "-43/30"},
                   {"7/20", "-8/15"},
                   {"-7/20", "8/15"},
                   {"-4/5", "43/30"},
                   {"-1", "11/6"}},
                  {{"-6/7", "11/7"},
                   {"-13/7", "143/42"},
                   {"-93/35", "508/105"},
                   {"-421/140", "188/35"},
                   {"-93/35", "508/105"},
                   {"-13/7", "143/42"},
                   {"-6/7", "11/7"}}});
}

TEST_CASE("named matrix entries and evaluations") {
    CoeffMatrix cM = coeff_matrix(Family::cubical_mobius, 6);
    CoeffMatrix cG = coeff_matrix(Family::cubical_gromov, 6);
    Rational zero(0), m1(-1);

    // c(1,2) = (a-2)/4, rendered
    REQUIRE(cM.c[2][1].str() == "-1/2 + 1/4*a");
    // the d = 4 Mobius chain evaluated at a = 0: 0, 4/16, 8/16
    REQUIRE(cM.c[4][0](zero) == Rational(0));
    REQUIRE(cM.c[4][1](zero) == Rational(1, 4));
    REQUIRE(cM.c[4][2](zero) == Rational(1, 2));
    // Gromov corner values
    REQUIRE(cG.c[4][0](m1) == Rational(5, 16));
    REQUIRE(cG.c[6][3](m1) == Rational(-327, 64));
}

TEST_CASE("lemma verifications pass on wide matrices") {
    for (Family f : {Family::cubical_mobius, Family::simplicial_mobius, Family::cubical_gromov,
                     Family::simplicial_gromov}) {
        CoeffMatrix m = coeff_matrix(f, 16);
        VerifyReport rec = verify_recursion(m);
        VerifyReport skew = verify_skew_symmetry(m);
        VerifyReport mono = verify_monotonicity(m);
        INFO("family " << family_name(f));
        REQUIRE(rec.passed());
        REQUIRE(rec.checks == 136);  // sum of d for d = 1..16
        REQUIRE(skew.passed());
        REQUIRE(skew.checks == 153);  // sum of d+1 for d = 0..16
        REQUIRE(mono.passed());
        if (family_is_gromov(f)) {
            VerifyReport top = verify_top_terms(m);
            REQUIRE(top.passed());
            REQUIRE(top.checks == 14);  // d = 3..16
        }
    }
}

TEST_CASE("top-terms relations are Gromov-only") {
    CoeffMatrix m = coeff_matrix(Family::cubical_mobius, 6);
    REQUIRE_THROWS_AS(verify_top_terms(m), std::invalid_argument);
}

TEST_CASE("auxiliary Gromov identities") {
    REQUIRE(verify_auxiliary_gromov(Family::cubical_gromov, 15).passed());
    REQUIRE(verify_auxiliary_gromov(Family::simplicial_gromov, 15).passed());
    REQUIRE_THROWS_AS(verify_auxiliary_gromov(Family::cubical_mobius, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_auxiliary_gromov(Family::cubical_gromov, 0), std::invalid_argument);
}

TEST_CASE("a perturbed matrix fails exactly the incident recursion identities") {
    CoeffMatrix m = coeff_matrix(Family::simplicial_gromov, 8);

    SECTION("interior cell (2,5)") {
        m.c[5][2] += LinearPoly(1);
        VerifyReport rec = verify_recursion(m);
        REQUIRE_FALSE(rec.passed());
        // (2,5) as left side, (1,5) through the j+1 term, (2,6) through the d-1 term
        REQUIRE(failure_cells(rec) ==
                std::set<std::pair<long long, long long>>{{2, 5}, {1, 5}, {2, 6}});

        VerifyReport skew = verify_skew_symmetry(m);
        REQUIRE(failure_cells(skew) == std::set<std::pair<long long, long long>>{{2, 5}, {3, 5}});
    }

    SECTION("left edge cell (0,7)") {
        m.c[7][0] += LinearPoly(1);
        REQUIRE(failure_cells(verify_recursion(m)) ==
                std::set<std::pair<long long, long long>>{{0, 7}, {0, 8}});
    }

    SECTION("diagonal corner (8,8)") {
        m.c[8][8] += LinearPoly(1);
        REQUIRE(failure_cells(verify_recursion(m)) ==
                std::set<std::pair<long long, long long>>{{7, 8}});
    }

    SECTION("failure messages carry both sides") {
        m.c[5][2] += LinearPoly(1);
        VerifyReport rec = verify_recursion(m);
        REQUIRE_FALSE(rec.failures.empty());
        REQUIRE(rec.failures.front().identity == "c(j,d)=c(j+1,d)+c(j,d-1)");
        REQUIRE(rec.failures.front().detail.find(" vs ") != std::string::npos);
    }
}

TEST_CASE("hyperbolized Euler characteristic, cubical fixtures") {
    CubicalComplex bi3 = boundary_cube(3);
    HyperbolizedEuler he = euler_hyperbolized(bi3, Family::cubical_mobius);
    REQUIRE(he.chi == lp("-4", "6"));
    REQUIRE(he.cross_checked);
    REQUIRE_FALSE(he.at.has_value());

    CubicalComplex torus2 = fixtures::cycle_product({3, 3});
    HyperbolizedEuler ht = euler_hyperbolized(torus2, Family::cubical_mobius, Rational(0));
    REQUIRE(ht.chi == lp("-9", "9"));
    REQUIRE(ht.value == Rational(-9));
    REQUIRE(ht.cross_checked);

    HyperbolizedEuler hg = euler_hyperbolized(bi3, Family::cubical_gromov, Rational(-1));
    REQUIRE(hg.value == Rational(-10));
}

TEST_CASE("hyperbolized Euler characteristic, simplicial fixtures") {
    SimplicialComplex octa = fixtures::octahedron();
    HyperbolizedEuler he = euler_hyperbolized(octa, Family::simplicial_mobius);
    REQUIRE(he.chi == lp("-6", "8"));
    REQUIRE(he.cross_checked);

    HyperbolizedEuler hg = euler_hyperbolized(octa, Family::simplicial_gromov, Rational(-1));
    REQUIRE(hg.chi == lp("-6", "8"));
    REQUIRE(hg.value == Rational(-14));

    SimplicialComplex t7 = fixtures::torus7();
    for (Family f : {Family::simplicial_mobius, Family::simplicial_gromov}) {
        HyperbolizedEuler h7 = euler_hyperbolized(t7, f);
        REQUIRE(h7.chi == lp("-14", "14"));
        REQUIRE(h7.cross_checked);
    }
}

TEST_CASE("hyperbolized Euler characteristic, degenerate inputs") {
    SimplicialComplex mixed = SimplicialComplex::from_maximal({{0, 1, 2}, {3, 4}});
    HyperbolizedEuler he = euler_hyperbolized(mixed, Family::simplicial_mobius);
    REQUIRE(he.chi == lp("1", "1"));  // f = (5, 4, 1)
    REQUIRE_FALSE(he.cross_checked);

    SimplicialComplex empty = SimplicialComplex::from_maximal({});
    HyperbolizedEuler hz = euler_hyperbolized(empty, Family::simplicial_mobius, Rational(-3));
    REQUIRE(hz.chi.is_zero());
    REQUIRE(hz.value == Rational(0));
    REQUIRE_FALSE(hz.cross_checked);
}

TEST_CASE("family and complex kinds must match") {
    REQUIRE_THROWS_AS(euler_hyperbolized(fixtures::octahedron(), Family::cubical_mobius),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(euler_hyperbolized(boundary_cube(3), Family::simplicial_gromov),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(certify_sign_conjecture(fixtures::octahedron(), Family::cubical_gromov,
                                              Rational(-1)),
                      std::invalid_argument);
}

TEST_CASE("sign certification on a cubical surface") {
    SignVerdict v = certify_sign_conjecture(boundary_cube(3), Family::cubical_gromov, Rational(-1));
    REQUIRE(v.d == 2);
    REQUIRE(v.m == 1);
    REQUIRE(v.chi == Rational(-10));
    REQUIRE(v.sign_ok);
    REQUIRE(v.short_h == std::vector<long long>{8, 8, 8});
    REQUIRE(v.coeff_at_a == std::vector<Rational>{Rational(-1, 4), Rational(-3, 4), Rational(-1, 4)});
    REQUIRE(v.products == std::vector<Rational>{Rational(-2), Rational(-6), Rational(-2)});
    REQUIRE(v.witness_ok);
    REQUIRE(v.manifold_checked);
    REQUIRE(v.warnings.empty());
    REQUIRE(v.passed());
}

TEST_CASE("sign certification on the 4-sphere boundary complex") {
    SignVerdict v =
        certify_sign_conjecture(boundary_simplex(5), Family::simplicial_mobius, Rational(0));
    REQUIRE(v.d == 4);
    REQUIRE(v.m == 2);
    REQUIRE(v.chi_symbolic == lp("6", "-10"));
    REQUIRE(v.chi == Rational(6));
    REQUIRE(v.sign_ok);  // positive sign in dimension 4m
    REQUIRE(v.short_h == std::vector<long long>{6, 6, 6, 6, 6});
    REQUIRE(v.witness_ok);
    REQUIRE(v.passed());
}

TEST_CASE("certification preconditions and warnings") {
    // odd dimension is rejected
    REQUIRE_THROWS_AS(
        certify_sign_conjecture(boundary_simplex(4), Family::simplicial_mobius, Rational(0)),
        std::invalid_argument);

    // a wedge of two triangles is not a homology manifold
    REQUIRE_THROWS_AS(
        certify_sign_conjecture(fixtures::wedge_triangles(), Family::simplicial_mobius,
                                Rational(0)),
        std::runtime_error);

    // unless the caller asserts manifoldness, in which case nothing was checked
    SignVerdict trusted = certify_sign_conjecture(fixtures::wedge_triangles(),
                                                  Family::simplicial_mobius, Rational(0), true);
    REQUIRE_FALSE(trusted.manifold_checked);
    REQUIRE(trusted.chi == Rational(-1));

    // an inadmissible parameter draws a warning and here breaks the sign
    SignVerdict warned = certify_sign_conjecture(fixtures::octahedron(),
                                                 Family::simplicial_mobius, Rational(1));
    REQUIRE(warned.warnings.size() == 1);
    REQUIRE(warned.chi == Rational(2));
    REQUIRE_FALSE(warned.sign_ok);
    REQUIRE_FALSE(warned.passed());
}

TEST_CASE("certification of the 7-vertex triangulated torus") {
    SignVerdict v =
        certify_sign_conjecture(fixtures::torus7(), Family::simplicial_gromov, Rational(-1));
    REQUIRE(v.chi_symbolic == lp("-14", "14"));
    REQUIRE(v.chi == Rational(-28));
    REQUIRE(v.sign_ok);
    REQUIRE(v.short_h == std::vector<long long>{7, 28, 7});
    REQUIRE(v.witness_ok);
    REQUIRE(v.manifold_checked);
    REQUIRE(v.passed());
}
