#pragma once

// the hyperchi command line: ingestion, vector/homology queries, coefficient
// tables, hyperbolized Euler characteristics, lemma sweeps, sign
// certification and the integer-sequence cross-checks, all behind one
// argv-in, text-out entry point (run_cli) so the binary and the tests drive
// the same code.
//
// Exit codes: 0 pass (or warnings without --strict), 1 computational or
// verification failure, 2 usage. Output for a fixed argv is byte-identical
// run to run; --verbose adds timing on stderr only.

#include "hyperchi/cubical.hpp"
#include "hyperchi/homology.hpp"
#include "hyperchi/hyperbolization.hpp"
#include "hyperchi/io.hpp"
#include "hyperchi/linear_poly.hpp"
#include "hyperchi/numeric.hpp"
#include "hyperchi/sequences.hpp"
#include "hyperchi/simplicial.hpp"
#include "hyperchi/vectors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace hyperchi {

namespace cli_detail {

using Json = nlohmann::ordered_json;

inline void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line.append(width[i] - r[i].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

inline Json poly_json(const LinearPoly& f) {
    return Json{{"p", rational_str_json(f.p)}, {"q", rational_str_json(f.q)}};
}

inline Json failures_json(const std::vector<CheckFailure>& fs) {
    Json arr = Json::array();
    for (const auto& f : fs)
        arr.push_back(Json{{"identity", f.identity}, {"j", f.j}, {"d", f.d}, {"detail", f.detail}});
    return arr;
}

inline void print_failures(std::ostream& out, const std::vector<CheckFailure>& fs) {
    const std::size_t cap = 20;
    for (std::size_t i = 0; i < fs.size() && i < cap; ++i) {
        out << "  " << fs[i].identity;
        if (fs[i].j >= 0) out << " (j=" << fs[i].j << ", d=" << fs[i].d << ")";
        else if (fs[i].d >= 0) out << " (n=" << fs[i].d << ")";
        out << ": " << fs[i].detail << "\n";
    }
    if (fs.size() > cap) out << "  ... and " << (fs.size() - cap) << " more\n";
}

inline std::string status_str(bool failed, bool warned) {
    return failed ? "fail" : warned ? "warning" : "pass";
}

inline int finish(bool failed, bool warned, bool strict) {
    return failed ? 1 : (warned && strict) ? 1 : 0;
}

inline FieldSpec field_from_string(const std::string& s) {
    if (s == "q" || s == "Q") return FieldSpec::Q();
    try {
        return FieldSpec::Fp(std::stoll(s));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("field must be q or a prime, got \"" + s + "\"");
    }
}

// flattened view of a verification report for uniform rendering
struct ReportRow {
    std::string name;
    long long checks = 0;
    std::vector<CheckFailure> failures;
};

inline void emit_report_block(std::ostream& out, const std::string& command,
                              const std::vector<std::pair<std::string, std::string>>& header,
                              const std::vector<ReportRow>& reports, bool json_format,
                              bool warned, const std::vector<std::string>& warnings) {
    bool failed = false;
    for (const auto& r : reports) failed = failed || !r.failures.empty();
    if (json_format) {
        Json j;
        j["command"] = command;
        for (const auto& kv : header) {
            // numeric headers stay numeric in JSON where they parse as such
            try {
                std::size_t pos = 0;
                long long v = std::stoll(kv.second, &pos);
                if (pos == kv.second.size()) {
                    j[kv.first] = v;
                    continue;
                }
            } catch (const std::exception&) {
            }
            j[kv.first] = kv.second;
        }
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(Json{{"name", r.name},
                               {"checks", r.checks},
                               {"failures", failures_json(r.failures)}});
        j["verifications"] = arr;
        j["warnings"] = warnings;
        j["status"] = status_str(failed, warned);
        out << j.dump(2) << "\n";
        return;
    }
    std::vector<std::vector<std::string>> head{{"command", command}};
    for (const auto& kv : header) head.push_back({kv.first, kv.second});
    print_aligned(out, head);
    out << "\n";
    std::vector<std::vector<std::string>> rows{{"verification", "checks", "result"}};
    for (const auto& r : reports)
        rows.push_back({r.name, std::to_string(r.checks), r.failures.empty() ? "pass" : "FAIL"});
    print_aligned(out, rows);
    for (const auto& r : reports)
        if (!r.failures.empty()) {
            out << "\nfailures in " << r.name << ":\n";
            print_failures(out, r.failures);
        }
    for (const auto& w : warnings) out << "warning: " << w << "\n";
    out << "\nstatus  " << status_str(failed, warned) << "\n";
}

inline ReportRow row_of(const VerifyReport& r, const std::string& prefix = "") {
    return {prefix.empty() ? r.name : prefix + " " + r.name, r.checks, r.failures};
}

inline ReportRow row_of(const SequenceReport& r) { return {r.name, r.checks, r.failures}; }

// ---- subcommand bodies ----

inline int cmd_vectors(const std::string& input, const std::string& which,
                       const std::string& format, bool strict, std::ostream& out) {
    std::vector<std::string> warnings;
    AnyComplex any = load_complex(input, &warnings);
    bool simp = is_simplicial(any);
    int dim = simp ? std::get<SimplicialComplex>(any).dim() : std::get<CubicalComplex>(any).dim();
    std::vector<int> indices;
    std::vector<long long> values;
    std::string label;
    if (which == "f") {
        FVector fv = simp ? f_vector(std::get<SimplicialComplex>(any))
                          : f_vector(std::get<CubicalComplex>(any));
        label = "f";
        for (int i = -1; i <= fv.d; ++i) {
            indices.push_back(i);
            values.push_back(fv.at(i));
        }
    } else if (which == "h") {
        if (!simp)
            throw std::invalid_argument("the h-vector here is simplicial; for cubical complexes "
                                        "use --which short-cubical");
        HVector h = h_vector(std::get<SimplicialComplex>(any));
        label = "h";
        for (int j = 0; j <= h.d + 1; ++j) {
            indices.push_back(j);
            values.push_back(h.h[j]);
        }
    } else if (which == "short-simplicial") {
        if (!simp) throw std::invalid_argument("--which short-simplicial needs simplicial input");
        ShortHVector s =
            short_simplicial_h(std::get<SimplicialComplex>(any), ShortHMethod::by_links, &warnings);
        label = "h~";
        for (int j = 0; j <= s.d; ++j) {
            indices.push_back(j);
            values.push_back(s.h[j]);
        }
    } else {
        if (simp) throw std::invalid_argument("--which short-cubical needs cubical input");
        ShortHVector s =
            short_cubical_h(std::get<CubicalComplex>(any), ShortHMethod::by_links, &warnings);
        label = "h~";
        for (int j = 0; j <= s.d; ++j) {
            indices.push_back(j);
            values.push_back(s.h[j]);
        }
    }
    bool warned = !warnings.empty();
    if (format == "json") {
        Json j;
        j["command"] = "vectors";
        j["input"] = input;
        j["kind"] = simp ? "simplicial" : "cubical";
        j["which"] = which;
        j["dim"] = dim;
        j["indices"] = indices;
        j["values"] = values;
        j["warnings"] = warnings;
        j["status"] = status_str(false, warned);
        out << j.dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"command", "vectors"},
                                                   {"kind", simp ? "simplicial" : "cubical"},
                                                   {"dim", std::to_string(dim)},
                                                   {"which", which}};
        for (std::size_t i = 0; i < values.size(); ++i)
            rows.push_back({label + "(" + std::to_string(indices[i]) + ")",
                            std::to_string(values[i])});
        print_aligned(out, rows);
        for (const auto& w : warnings) out << "warning: " << w << "\n";
        out << "status  " << status_str(false, warned) << "\n";
    }
    return finish(false, warned, strict);
}

inline int cmd_verify_manifold(const std::string& input, const std::string& field_str,
                               const std::string& format, bool strict, std::ostream& out) {
    std::vector<std::string> warnings;
    AnyComplex any = load_complex(input, &warnings);
    FieldSpec field = field_from_string(field_str);
    bool simp = is_simplicial(any);
    ManifoldReport rep = simp ? manifold_report(std::get<SimplicialComplex>(any), field)
                              : manifold_report(std::get<CubicalComplex>(any), field);
    int dim = simp ? std::get<SimplicialComplex>(any).dim() : std::get<CubicalComplex>(any).dim();
    bool warned = !warnings.empty();
    if (format == "json") {
        Json j;
        j["command"] = "verify-manifold";
        j["input"] = input;
        j["kind"] = simp ? "simplicial" : "cubical";
        j["field"] = field.str();
        j["dim"] = dim;
        j["manifold"] = rep.ok;
        if (!rep.ok) {
            j["bad_face"] = rep.bad_face;
            j["reason"] = rep.reason;
        }
        j["warnings"] = warnings;
        j["status"] = status_str(!rep.ok, warned);
        out << j.dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"command", "verify-manifold"},
                                                   {"kind", simp ? "simplicial" : "cubical"},
                                                   {"field", field.str()},
                                                   {"dim", std::to_string(dim)},
                                                   {"manifold", rep.ok ? "yes" : "no"}};
        if (!rep.ok) {
            rows.push_back({"bad_face", face_str(rep.bad_face)});
            rows.push_back({"reason", rep.reason});
        }
        print_aligned(out, rows);
        for (const auto& w : warnings) out << "warning: " << w << "\n";
        out << "status  " << status_str(!rep.ok, warned) << "\n";
    }
    return rep.ok ? finish(false, warned, strict) : 1;
}

inline void print_sequence_table(std::ostream& out, const CoeffSequence& s,
                                 const std::optional<Rational>& at) {
    char letter = family_is_cubical(s.family) ? 'a' : 'b';
    out << "\n" << family_name(s.family) << " sequence " << letter << "(n), n = 0.."
        << (s.a.size() - 1) << (at ? " at a = " + rational_str(*at) : "") << "\n";
    std::vector<std::vector<std::string>> rows{{"n", std::string(1, letter) + "(n)"}};
    for (std::size_t n = 0; n < s.a.size(); ++n)
        rows.push_back({std::to_string(n), at ? rational_str(s.a[n](*at)) : s.a[n].str()});
    print_aligned(out, rows);
}

inline void print_matrix_table(std::ostream& out, const CoeffMatrix& m,
                               const std::optional<Rational>& at) {
    char letter = family_is_cubical(m.family) ? 'c' : 's';
    out << "\n" << family_name(m.family) << " matrix " << letter << "(j,d), 0 <= j <= d <= "
        << m.d_max << (at ? " at a = " + rational_str(*at) : "") << "\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"d\\j"};
    for (int j = 0; j <= m.d_max; ++j) head.push_back(std::to_string(j));
    rows.push_back(head);
    for (int d = 0; d <= m.d_max; ++d) {
        std::vector<std::string> row{std::to_string(d)};
        for (int j = 0; j <= d; ++j)
            row.push_back(at ? rational_str(m.c[d][j](*at)) : m.c[d][j].str());
        rows.push_back(row);
    }
    print_aligned(out, rows);
}

inline Json sequence_json(const CoeffSequence& s, const std::optional<Rational>& at) {
    Json arr = Json::array();
    for (const auto& p : s.a)
        arr.push_back(at ? Json(rational_str_json(p(*at))) : poly_json(p));
    return arr;
}

inline Json matrix_json(const CoeffMatrix& m, const std::optional<Rational>& at) {
    Json rows = Json::array();
    for (int d = 0; d <= m.d_max; ++d) {
        Json row = Json::array();
        for (int j = 0; j <= d; ++j)
            row.push_back(at ? Json(rational_str_json(m.c[d][j](*at))) : poly_json(m.c[d][j]));
        rows.push_back(row);
    }
    return rows;
}

inline int cmd_coeffs(const std::string& family_str, int max_d, const std::string& a_str,
                      const std::string& format, std::ostream& out) {
    Family fam = parse_family(family_str);
    std::optional<Rational> at;
    if (!a_str.empty()) at = parse_rational(a_str);
    CoeffSequence seq = coeff_sequence(fam, std::max(2, max_d));
    CoeffMatrix mat = coeff_matrix(fam, max_d);
    if (format == "json") {
        Json j;
        j["command"] = "coeffs";
        j["family"] = family_name(fam);
        j["max_d"] = max_d;
        if (at) j["a"] = rational_str_json(*at);
        j["sequence"] = sequence_json(seq, at);
        j["matrix"] = matrix_json(mat, at);
        j["status"] = "pass";
        out << j.dump(2) << "\n";
    } else {
        print_aligned(out, {{"command", "coeffs"},
                            {"family", family_name(fam)},
                            {"max_d", std::to_string(max_d)}});
        print_sequence_table(out, seq, at);
        print_matrix_table(out, mat, at);
        out << "\nstatus  pass\n";
    }
    return 0;
}

inline int cmd_euler_hyp(const std::string& input, const std::string& family_str,
                         const std::string& a_str, const std::string& format, bool strict,
                         std::ostream& out) {
    Family fam = parse_family(family_str);
    std::optional<Rational> at;
    if (!a_str.empty()) at = parse_rational(a_str);
    std::vector<std::string> warnings;
    AnyComplex any = load_complex(input, &warnings);
    bool simp = is_simplicial(any);
    HyperbolizedEuler he = simp ? euler_hyperbolized(std::get<SimplicialComplex>(any), fam, at)
                                : euler_hyperbolized(std::get<CubicalComplex>(any), fam, at);
    int dim = simp ? std::get<SimplicialComplex>(any).dim() : std::get<CubicalComplex>(any).dim();
    bool warned = !warnings.empty();
    if (format == "json") {
        Json j;
        j["command"] = "euler-hyp";
        j["input"] = input;
        j["kind"] = simp ? "simplicial" : "cubical";
        j["family"] = family_name(fam);
        j["dim"] = dim;
        j["chi"] = poly_json(he.chi);
        if (he.at) {
            j["a"] = rational_str_json(*he.at);
            j["value"] = rational_str_json(*he.value);
        }
        j["cross_checked"] = he.cross_checked;
        j["warnings"] = warnings;
        j["status"] = status_str(false, warned);
        out << j.dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"command", "euler-hyp"},
                                                   {"kind", simp ? "simplicial" : "cubical"},
                                                   {"family", family_name(fam)},
                                                   {"dim", std::to_string(dim)},
                                                   {"chi(a)", he.chi.str()}};
        if (he.at) {
            rows.push_back({"a", rational_str(*he.at)});
            rows.push_back({"value", rational_str(*he.value)});
        }
        rows.push_back({"cross_checked", he.cross_checked ? "yes" : "no"});
        print_aligned(out, rows);
        for (const auto& w : warnings) out << "warning: " << w << "\n";
        out << "status  " << status_str(false, warned) << "\n";
    }
    return finish(false, warned, strict);
}

inline int cmd_verify_lemmas(const std::string& family_str, int max_d, int aux_n,
                             const std::string& format, std::ostream& out) {
    Family fam = parse_family(family_str);
    CoeffMatrix mat = coeff_matrix(fam, max_d);
    std::vector<ReportRow> rows;
    rows.push_back(row_of(verify_recursion(mat)));
    rows.push_back(row_of(verify_skew_symmetry(mat)));
    rows.push_back(row_of(verify_monotonicity(mat)));
    if (family_is_gromov(fam)) {
        rows.push_back(row_of(verify_top_terms(mat)));
        rows.push_back(row_of(verify_auxiliary_gromov(fam, aux_n > 0 ? aux_n : max_d)));
    }
    emit_report_block(out, "verify-lemmas",
                      {{"family", family_name(fam)}, {"max_d", std::to_string(max_d)}}, rows,
                      format == "json", false, {});
    for (const auto& r : rows)
        if (!r.failures.empty()) return 1;
    return 0;
}

inline int cmd_certify_sign(const std::string& input, const std::string& family_str,
                            const std::string& a_str, bool trust_manifold,
                            const std::string& field_str, const std::string& format, bool strict,
                            std::ostream& out) {
    Family fam = parse_family(family_str);
    Rational a = parse_rational(a_str);
    FieldSpec field = field_from_string(field_str);
    std::vector<std::string> warnings;
    AnyComplex any = load_complex(input, &warnings);
    bool simp = is_simplicial(any);
    SignVerdict v = simp ? certify_sign_conjecture(std::get<SimplicialComplex>(any), fam, a,
                                                   trust_manifold, field)
                         : certify_sign_conjecture(std::get<CubicalComplex>(any), fam, a,
                                                   trust_manifold, field);
    warnings.insert(warnings.end(), v.warnings.begin(), v.warnings.end());
    bool warned = !warnings.empty();
    bool failed = !v.passed();
    std::string expected = (v.m % 2) ? "chi <= 0" : "chi >= 0";
    if (format == "json") {
        Json j;
        j["command"] = "certify-sign";
        j["input"] = input;
        j["kind"] = simp ? "simplicial" : "cubical";
        j["family"] = family_name(fam);
        j["d"] = v.d;
        j["m"] = v.m;
        j["a"] = rational_str_json(v.a);
        j["chi_symbolic"] = poly_json(v.chi_symbolic);
        j["chi"] = rational_str_json(v.chi);
        j["expected"] = expected;
        j["sign_ok"] = v.sign_ok;
        j["manifold"] = v.manifold_checked ? "verified" : "trusted";
        j["short_h"] = v.short_h;
        Json coeffs = Json::array(), products = Json::array();
        for (const auto& c : v.coeff_at_a) coeffs.push_back(rational_str_json(c));
        for (const auto& p : v.products) products.push_back(rational_str_json(p));
        j["coeff_at_a"] = coeffs;
        j["products"] = products;
        j["witness_ok"] = v.witness_ok;
        j["warnings"] = warnings;
        j["status"] = status_str(failed, warned);
        out << j.dump(2) << "\n";
    } else {
        print_aligned(out, {{"command", "certify-sign"},
                            {"kind", simp ? "simplicial" : "cubical"},
                            {"family", family_name(fam)},
                            {"field", field.str()},
                            {"d", std::to_string(v.d)},
                            {"m", std::to_string(v.m)},
                            {"a", rational_str(v.a)},
                            {"chi(a)", v.chi_symbolic.str()},
                            {"chi", rational_str(v.chi)},
                            {"expected", expected},
                            {"sign_ok", v.sign_ok ? "yes" : "no"},
                            {"manifold", v.manifold_checked ? "verified" : "trusted"},
                            {"witness_ok", v.witness_ok ? "yes" : "no"}});
        out << "\n";
        std::vector<std::vector<std::string>> wit{{"j", "coeff(j)", "short_h(j)", "product"}};
        for (std::size_t jx = 0; jx < v.coeff_at_a.size(); ++jx)
            wit.push_back({std::to_string(jx), rational_str(v.coeff_at_a[jx]),
                           std::to_string(v.short_h[jx]), rational_str(v.products[jx])});
        print_aligned(out, wit);
        for (const auto& w : warnings) out << "warning: " << w << "\n";
        out << "\nstatus  " << status_str(failed, warned) << "\n";
    }
    return failed ? 1 : finish(false, warned, strict);
}

inline int cmd_sequences(const std::string& which, int n, bool check, const std::string& format,
                         std::ostream& out) {
    std::vector<Integer> values;
    std::vector<int> indices;
    if (which == "tangent") {
        values = tangent_numbers(n);
        for (int i = 1; i <= n; ++i) indices.push_back(i);
    } else if (which == "genocchi") {
        values = genocchi_numbers(n);
        for (int i = 1; i <= n; ++i) indices.push_back(i);
    } else {
        values = secant_numbers(n);
        for (int i = 0; i <= n; ++i) indices.push_back(i);
    }
    std::vector<ReportRow> checks;
    if (check) {
        checks.push_back(row_of(verify_triple_agreement(n)));
        checks.push_back(row_of(verify_odd_vanishing(std::max(20, n))));
        checks.push_back(row_of(verify_identities(std::max(4, 2 * n))));
        checks.push_back(row_of(verify_genocchi_tangent(n)));
    }
    bool failed = false;
    for (const auto& r : checks) failed = failed || !r.failures.empty();
    char letter = which[0] == 't' ? 't' : which[0] == 'g' ? 'g' : 'E';
    if (format == "json") {
        Json j;
        j["command"] = "sequences";
        j["which"] = which;
        j["n"] = n;
        j["indices"] = indices;
        Json vals = Json::array();
        for (const auto& v : values) vals.push_back(v.str());
        j["values"] = vals;
        if (check) {
            Json arr = Json::array();
            for (const auto& r : checks)
                arr.push_back(Json{{"name", r.name},
                                   {"checks", r.checks},
                                   {"failures", failures_json(r.failures)}});
            j["verifications"] = arr;
        }
        j["status"] = status_str(failed, false);
        out << j.dump(2) << "\n";
    } else {
        print_aligned(out, {{"command", "sequences"}, {"which", which}, {"n", std::to_string(n)}});
        out << "\n";
        std::vector<std::vector<std::string>> rows{{"n", std::string(1, letter) + "(n)"}};
        for (std::size_t i = 0; i < values.size(); ++i)
            rows.push_back({std::to_string(indices[i]), values[i].str()});
        print_aligned(out, rows);
        if (check) {
            out << "\n";
            std::vector<std::vector<std::string>> crows{{"verification", "checks", "result"}};
            for (const auto& r : checks)
                crows.push_back(
                    {r.name, std::to_string(r.checks), r.failures.empty() ? "pass" : "FAIL"});
            print_aligned(out, crows);
            for (const auto& r : checks)
                if (!r.failures.empty()) {
                    out << "\nfailures in " << r.name << ":\n";
                    print_failures(out, r.failures);
                }
        }
        out << "\nstatus  " << status_str(failed, false) << "\n";
    }
    return failed ? 1 : 0;
}

inline int cmd_tables(const std::string& format, std::ostream& out) {
    const Family fams[] = {Family::cubical_mobius, Family::simplicial_mobius,
                           Family::cubical_gromov, Family::simplicial_gromov};
    if (format == "json") {
        Json j;
        j["command"] = "tables";
        Json arr = Json::array();
        for (Family f : fams) {
            int n_hi = family_is_gromov(f) ? 7 : 6;
            Json e;
            e["family"] = family_name(f);
            e["sequence"] = sequence_json(coeff_sequence(f, n_hi), std::nullopt);
            e["matrix"] = matrix_json(coeff_matrix(f, 6), std::nullopt);
            arr.push_back(e);
        }
        j["families"] = arr;
        j["status"] = "pass";
        out << j.dump(2) << "\n";
    } else {
        print_aligned(out, {{"command", "tables"}});
        for (Family f : fams) {
            int n_hi = family_is_gromov(f) ? 7 : 6;
            print_sequence_table(out, coeff_sequence(f, n_hi), std::nullopt);
            print_matrix_table(out, coeff_matrix(f, 6), std::nullopt);
        }
        out << "\nstatus  pass\n";
    }
    return 0;
}

inline int cmd_sweep(int max_d, int n, const std::string& format, std::ostream& out) {
    std::vector<ReportRow> rows;
    const Family fams[] = {Family::cubical_mobius, Family::simplicial_mobius,
                           Family::cubical_gromov, Family::simplicial_gromov};
    for (Family f : fams) {
        CoeffMatrix mat = coeff_matrix(f, max_d);
        rows.push_back(row_of(verify_recursion(mat), family_name(f)));
        rows.push_back(row_of(verify_skew_symmetry(mat), family_name(f)));
        rows.push_back(row_of(verify_monotonicity(mat), family_name(f)));
        if (family_is_gromov(f)) {
            rows.push_back(row_of(verify_top_terms(mat), family_name(f)));
            rows.push_back(row_of(verify_auxiliary_gromov(f, n), family_name(f)));
        }
    }
    rows.push_back(row_of(verify_triple_agreement(n)));
    rows.push_back(row_of(verify_odd_vanishing(n)));
    rows.push_back(row_of(verify_identities(std::max(4, 2 * n))));
    rows.push_back(row_of(verify_genocchi_tangent(n)));
    emit_report_block(out, "sweep",
                      {{"max_d", std::to_string(max_d)}, {"n", std::to_string(n)}}, rows,
                      format == "json", false, {});
    for (const auto& r : rows)
        if (!r.failures.empty()) return 1;
    return 0;
}

}  // namespace cli_detail

// args excludes the program name; returns the process exit code
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"exact combinatorics of simplicial and cubical complexes: face and h-vectors, "
                 "homology-based manifold checking, hyperbolization coefficient tables and the "
                 "lemma/sign-conjecture verification suite"};
    app.require_subcommand(1);
    bool strict = false, verbose = false;
    app.add_flag("--strict", strict, "treat warnings as failures (exit 1)");
    app.add_flag("--verbose", verbose, "print timing to stderr");

    std::string in_vectors, which_vectors, fmt_vectors = "table";
    CLI::App* sc_vectors = app.add_subcommand("vectors", "f-, h- and short h-vectors of a complex");
    sc_vectors->fallthrough();
    sc_vectors->add_option("--input", in_vectors, "complex file (JSON)")->required();
    sc_vectors->add_option("--which", which_vectors, "which vector")
        ->required()
        ->check(CLI::IsMember({"f", "h", "short-simplicial", "short-cubical"}));
    sc_vectors->add_option("--format", fmt_vectors, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string in_mani, field_mani = "q", fmt_mani = "json";
    CLI::App* sc_mani =
        app.add_subcommand("verify-manifold", "check that every face link is a homology sphere");
    sc_mani->fallthrough();
    sc_mani->add_option("--input", in_mani, "complex file (JSON)")->required();
    sc_mani->add_option("--field", field_mani, "homology coefficients: q or a prime");
    sc_mani->add_option("--format", fmt_mani, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string fam_coeffs, a_coeffs, fmt_coeffs = "table";
    int maxd_coeffs = 6;
    CLI::App* sc_coeffs =
        app.add_subcommand("coeffs", "hyperbolization coefficient sequence and matrix");
    sc_coeffs->fallthrough();
    sc_coeffs->add_option("--family", fam_coeffs, "coefficient family")
        ->required()
        ->check(CLI::IsMember({"cubical-mobius", "simplicial-mobius", "cubical-gromov",
                               "simplicial-gromov"}));
    sc_coeffs->add_option("--max-d", maxd_coeffs, "largest dimension")->check(CLI::NonNegativeNumber);
    sc_coeffs->add_option("--a", a_coeffs, "evaluate at this surface Euler characteristic");
    sc_coeffs->add_option("--format", fmt_coeffs, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string in_euler, fam_euler, a_euler, fmt_euler = "table";
    CLI::App* sc_euler =
        app.add_subcommand("euler-hyp", "Euler characteristic of the hyperbolized complex");
    sc_euler->fallthrough();
    sc_euler->add_option("--input", in_euler, "complex file (JSON)")->required();
    sc_euler->add_option("--family", fam_euler, "coefficient family")->required();
    sc_euler->add_option("--a", a_euler, "surface Euler characteristic (omit for symbolic)");
    sc_euler->add_option("--format", fmt_euler, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string fam_lem, fmt_lem = "table";
    int maxd_lem = 30, auxn_lem = 0;
    CLI::App* sc_lem = app.add_subcommand("verify-lemmas", "verify the coefficient lemmas");
    sc_lem->fallthrough();
    sc_lem->add_option("--family", fam_lem, "coefficient family")->required();
    sc_lem->add_option("--max-d", maxd_lem, "largest dimension")->check(CLI::PositiveNumber);
    sc_lem->add_option("--n", auxn_lem, "bound for the auxiliary identities (default --max-d)")
        ->check(CLI::PositiveNumber);
    sc_lem->add_option("--format", fmt_lem, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string in_cert, fam_cert, a_cert, field_cert = "q", fmt_cert = "table";
    bool trust_cert = false;
    CLI::App* sc_cert = app.add_subcommand(
        "certify-sign", "certify the Euler characteristic sign for an even-dimensional manifold");
    sc_cert->fallthrough();
    sc_cert->add_option("--input", in_cert, "complex file (JSON)")->required();
    sc_cert->add_option("--family", fam_cert, "coefficient family")->required();
    sc_cert->add_option("--a", a_cert, "surface Euler characteristic")->required();
    sc_cert->add_flag("--trust-manifold", trust_cert, "skip the homology manifold gate");
    sc_cert->add_option("--field", field_cert, "homology coefficients for the gate");
    sc_cert->add_option("--format", fmt_cert, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string which_seq, fmt_seq = "table";
    int n_seq = 10;
    bool check_seq = false;
    CLI::App* sc_seq =
        app.add_subcommand("sequences", "tangent, Genocchi and secant numbers with cross-checks");
    sc_seq->fallthrough();
    sc_seq->add_option("--which", which_seq, "which sequence")
        ->required()
        ->check(CLI::IsMember({"tangent", "genocchi", "secant"}));
    sc_seq->add_option("--n", n_seq, "how many terms")->check(CLI::PositiveNumber);
    sc_seq->add_flag("--check", check_seq, "run the agreement and identity checks");
    sc_seq->add_option("--format", fmt_seq, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string fmt_tables = "table";
    CLI::App* sc_tables =
        app.add_subcommand("tables", "all four coefficient sequences and matrices at once");
    sc_tables->fallthrough();
    sc_tables->add_option("--format", fmt_tables, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string fmt_sweep = "table";
    int maxd_sweep = 30, n_sweep = 20;
    CLI::App* sc_sweep =
        app.add_subcommand("sweep", "run every verification to the given bounds (CI entry point)");
    sc_sweep->fallthrough();
    sc_sweep->add_option("--max-d", maxd_sweep, "matrix bound")->check(CLI::PositiveNumber);
    sc_sweep->add_option("--n", n_sweep, "sequence bound")->check(CLI::PositiveNumber);
    sc_sweep->add_option("--format", fmt_sweep, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    int rc = 1;
    try {
        if (sc_vectors->parsed())
            rc = cmd_vectors(in_vectors, which_vectors, fmt_vectors, strict, out);
        else if (sc_mani->parsed())
            rc = cmd_verify_manifold(in_mani, field_mani, fmt_mani, strict, out);
        else if (sc_coeffs->parsed())
            rc = cmd_coeffs(fam_coeffs, maxd_coeffs, a_coeffs, fmt_coeffs, out);
        else if (sc_euler->parsed())
            rc = cmd_euler_hyp(in_euler, fam_euler, a_euler, fmt_euler, strict, out);
        else if (sc_lem->parsed())
            rc = cmd_verify_lemmas(fam_lem, maxd_lem, auxn_lem, fmt_lem, out);
        else if (sc_cert->parsed())
            rc = cmd_certify_sign(in_cert, fam_cert, a_cert, trust_cert, field_cert, fmt_cert,
                                  strict, out);
        else if (sc_seq->parsed())
            rc = cmd_sequences(which_seq, n_seq, check_seq, fmt_seq, out);
        else if (sc_tables->parsed())
            rc = cmd_tables(fmt_tables, out);
        else if (sc_sweep->parsed())
            rc = cmd_sweep(maxd_sweep, n_sweep, fmt_sweep, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (verbose) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        err << "elapsed " << ms << " ms\n";
    }
    return rc;
}

}  // namespace hyperchi
