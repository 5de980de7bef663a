/* Copyright 2026 The orr Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Command-line front end. run() is kept separate from main() so the test
// suite can drive it in-process.

#ifndef ORR_TOOLS_CLI_HPP
#define ORR_TOOLS_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orr/collection.hpp"
#include "orr/galois.hpp"
#include "orr/jacobi.hpp"
#include "orr/koszul.hpp"
#include "orr/massey.hpp"
#include "orr/tables.hpp"

namespace orr::cli {

using Json = nlohmann::ordered_json;

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// Raised for bad parameters after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integers too large for a JSON number are written as strings.
inline Json number(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

inline Json residue(const Rational& x) { return to_string(x); }

struct Options {
    int n = 2, k = 3, K = 6, M = 4;
    long ell = 3;
    int degree = 3;
    int n_max = 9, k_max = 9;
    long budget = 20000;
    bool verify_koszul = false;
    std::string format = "json", out, word, index, config, diagram, ring;
    int m = 0, l = 0, length = 0;
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

inline CoefficientRing ring_of(const Options& o) {
    if (!o.ring.empty()) return CoefficientRing::parse(o.ring);
    return CoefficientRing::mod_prime_power(o.ell, o.M);
}

inline void check_ranges(const Options& o) {
    require(o.n >= 1 && o.n <= 64, "--n must be in 1..64");
    require(o.k >= 1 && o.k <= 64, "--k must be in 1..64");
    require(o.K >= 1 && o.K <= 64, "--K must be in 1..64");
    require(o.M >= 1 && o.M <= 256, "--M must be in 1..256");
    require(o.ell >= 2 && is_prime(Integer(o.ell)), "--ell must be a prime");
    require(o.budget >= 1, "--budget must be positive");
    require(o.format == "json" || o.format == "tsv" || o.format == "text", "--format must be json, tsv or text");
}

// ---------------------------------------------------------------- commands

inline Json cmd_witt(const Options& o) {
    return Json{{"n", o.n}, {"k", o.k}, {"N_k", number(witt_rank(o.n, o.k))}, {"D_k", number(d_rank(o.n, o.k))}};
}

inline Json cmd_lyndon(const Options& o) {
    require(witt_rank(o.n, o.k) <= 100000, "too many Lyndon words for listing");
    Json words = Json::array();
    for (const auto& L : enumerate_lyndon(o.n, o.k)) {
        auto [a, b] = o.k > 1 ? standard_factorization(L) : std::pair{L, L};
        Json e{{"word", L.str()}};
        if (o.k > 1) e["factorization"] = {a.str(), b.str()};
        words.push_back(e);
    }
    return Json{{"n", o.n}, {"k", o.k}, {"count", words.size()}, {"words", words}};
}

inline Json series_json(const MagnusSeries& S) {
    Json t = Json::object();
    for (const auto& [I, c] : S.terms()) t[index_string(I, S.rank())] = residue(c);
    return t;
}

inline Json cmd_magnus(const std::string& action, const Options& o) {
    require(!o.word.empty(), "--word is required");
    auto ring = ring_of(o);
    Word w = parse_word(o.word, o.n);
    if (action == "expand") {
        auto S = expand(w, o.K, ring);
        return Json{{"word", format(w)}, {"K", o.K}, {"ring", ring.name()}, {"depth", series_depth(S).str()},
                    {"terms", series_json(S)}};
    }
    require(!o.index.empty(), "--index is required");
    MultiIndex I = parse_index(o.index, o.n);
    return Json{{"word", format(w)}, {"index", index_string(I, o.n)}, {"ring", ring.name()},
                {"coefficient", residue(coefficient(w, I, ring))}};
}

inline Json homology_json(const HomologyResult& h) {
    Json by = Json::object();
    for (const auto& [w, g] : h.by_weight) {
        Json t = Json::array();
        for (const auto& x : g.torsion) t.push_back(number(x));
        by[std::to_string(w)] = Json{{"rank", number(g.rank)}, {"torsion", t}};
    }
    return by;
}

inline void check_budget(const KoszulComplex& C, int degree, long budget) {
    Integer est = largest_block(C, degree + 1);
    if (est > budget)
        throw UsageError("largest weight block has " + est.get_str() + " columns, over the budget of " +
                         std::to_string(budget) + " (raise --budget to run anyway)");
}

inline Json cmd_homology(const Options& o) {
    require(o.k >= 2, "--k must be >= 2");
    require(o.degree >= 0 && o.degree <= 3, "--degree must be in 0..3");
    check_budget(KoszulComplex(o.n, o.k), o.degree, o.budget);
    auto h = homology(o.n, o.k, o.degree);
    Json r{{"n", o.n}, {"k", o.k}, {"degree", o.degree}, {"by_weight", homology_json(h)},
           {"total_rank", number(h.total_rank())}};
    if (o.degree == 3) {
        std::string cell;
        bool match = true;
        for (const auto& [w, want] : predicted_h3(o.n, o.k)) {
            cell += (cell.empty() ? "" : "⊕") + h.at(w).rank.get_str();
            match = match && h.at(w).rank == want;
        }
        for (const auto& [w, g] : h.by_weight) match = match && g.torsion.empty() && (w > o.k && w < 2 * o.k ? true : g.rank == 0);
        r["cell"] = cell.empty() ? "0" : cell;
        r["formula"] = h3_cell(o.n, o.k);
        r["matches_formula"] = match;
    }
    return r;
}

struct TablesResult {
    std::string t1, t2, t3;
    Json verification = Json::array();
    bool ok = true;
};

inline TablesResult cmd_tables(const Options& o) {
    require(o.n_max >= 2 && o.n_max <= 64 && o.k_max >= 2 && o.k_max <= 64, "--n-max and --k-max must be in 2..64");
    TablesResult r;
    r.t1 = witt_table_tsv(2, o.n_max, 2, o.k_max);
    r.t2 = d_table_tsv(2, o.n_max, 2, o.k_max);
    const int k3 = std::min(o.k_max, 5);
    r.t3 = h3_table_tsv(2, o.n_max, 2, k3);
    if (o.verify_koszul) {
        for (int n = 2; n <= o.n_max; ++n)
            for (int k = 2; k <= k3; ++k) {
                KoszulComplex C(n, k);
                Integer est = largest_block(C, 4);
                Json cell{{"n", n}, {"k", k}, {"largest_block", number(est)}};
                if (est > o.budget) {
                    cell["status"] = "skipped: over budget";
                } else {
                    auto h = homology(n, k, 3);
                    bool match = true;
                    for (const auto& [w, g] : h.by_weight) {
                        Integer want = (w > k && w < 2 * k) ? d_rank(n, w - 1) : Integer(0);
                        match = match && g.rank == want && g.torsion.empty();
                    }
                    cell["status"] = match ? "match" : "MISMATCH";
                    r.ok = r.ok && match;
                }
                r.verification.push_back(cell);
            }
    }
    return r;
}

inline Json matrix_json(const Matrix<Integer>& A) {
    Json m = Json::array();
    for (const auto& row : A) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(number(x));
        m.push_back(r);
    }
    return m;
}

struct CheckResult {
    Json report;
    bool pass;
};

inline CheckResult cmd_check(const std::string& identity, const Options& o) {
    Json r{{"identity", identity}};
    bool pass = true;
    if (identity == "cyclotomic" || identity == "dk-genfun") {
        require(o.degree >= 1 && o.degree <= 64, "--degree must be in 1..64");
        auto c = identity == "cyclotomic" ? check_cyclotomic(o.n, o.degree) : check_d_generating(o.n, o.degree);
        r["n"] = o.n;
        r["degree"] = o.degree;
        pass = c.pass;
        if (!pass)
            r["counterexample"] = {{"degree", *c.first_mismatch}, {"product", number(c.lhs)}, {"closed_form", number(c.rhs)}};
    } else if (identity == "massey-dual") {
        auto M = dual_basis_matrix(o.n, o.k);
        const int s = o.k % 2 ? 1 : -1;
        r["n"] = o.n;
        r["k"] = o.k;
        r["expected_sign"] = s;
        r["matrix"] = matrix_json(M);
        auto L = enumerate_lyndon(o.n, o.k);
        for (std::size_t i = 0; i < M.size() && pass; ++i)
            for (std::size_t j = 0; j < M.size() && pass; ++j)
                if (M[i][j] != (i == j ? s : 0)) {
                    pass = false;
                    r["counterexample"] = {{"row", L[i].str()}, {"column", L[j].str()}, {"value", number(M[i][j])}};
                }
    } else if (identity == "jacobi-dim") {
        long dim = ct_dimension(o.n, o.k);
        r["n"] = o.n;
        r["k"] = o.k;
        r["diagram_dimension"] = dim;
        r["d_rank"] = number(d_rank(o.n, o.k));
        pass = Integer(dim) == d_rank(o.n, o.k);
    } else if (identity == "koszul-h3") {
        Options p = o;
        p.degree = 3;
        Json h = cmd_homology(p);
        r["n"] = o.n;
        r["k"] = o.k;
        r["cell"] = h["cell"];
        r["formula"] = h["formula"];
        pass = h["matches_formula"].get<bool>();
    } else {
        throw UsageError("unknown identity '" + identity +
                         "' (cyclotomic, dk-genfun, massey-dual, jacobi-dim, koszul-h3)");
    }
    r["pass"] = pass;
    return {r, pass};
}

inline Json cmd_massey(const std::string& action, const Options& o) {
    if (action == "dual") {
        auto L = enumerate_lyndon(o.n, o.k);
        Json labels = Json::array();
        for (const auto& w : L) labels.push_back(w.str());
        return Json{{"n", o.n}, {"k", o.k}, {"basis", labels}, {"matrix", matrix_json(dual_basis_matrix(o.n, o.k))}};
    }
    require(!o.word.empty() && !o.index.empty(), "--word and --index are required");
    MultiIndex I = parse_index(o.index, o.n);
    Word f = parse_word(o.word, o.n);
    auto ring = o.ring.empty() ? CoefficientRing::integers() : CoefficientRing::parse(o.ring);
    return Json{{"index", index_string(I, o.n)}, {"relator", format(f)}, {"ring", ring.name()},
                {"value", residue(massey_evaluate(I, f, ring))}};
}

// ------------------------------------------------------------------ galois

inline std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

struct LoadedConfig {
    GaloisAutomorphism sigma;
    bool strict_x0;
};

inline LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(path + ": malformed JSON", line, col);
    }
    auto need = [&](const char* key) -> const Json& {
        if (!j.contains(key)) throw UsageError(path + ": missing key '" + key + "'");
        return j.at(key);
    };
    try {
        const int n = need("n").get<int>(), K = need("K").get<int>(), M = need("M").get<int>();
        const Json& ell_j = need("ell");
        Integer ell = ell_j.is_string() ? parse_integer(ell_j.get<std::string>()) : Integer(ell_j.get<long>());
        const Json& chi_j = need("chi");
        Integer chi = chi_j.is_string() ? parse_integer(chi_j.get<std::string>()) : Integer(chi_j.get<long>());
        require(n >= 1 && n <= 64 && K >= 1 && K <= 64 && M >= 1 && M <= 256, path + ": n, K or M out of range");
        require(is_prime(ell), path + ": ell must be a prime");
        const Json& ys = need("y");
        require(ys.is_array() && static_cast<int>(ys.size()) == n, path + ": 'y' must list n words");
        std::vector<Word> y;
        for (std::size_t i = 0; i < ys.size(); ++i) {
            const std::string s = ys[i].get<std::string>();
            try {
                y.push_back(parse_word(s, n));
            } catch (const ParseError& e) {
                // Locate the word in the file so the position is file-relative.
                auto at = text.find("\"" + s + "\"");
                auto [line, col] = line_column(text, at == std::string::npos ? 0 : at + 1);
                throw ParseError(path + ": y[" + std::to_string(i) + "]: " + e.message(), line,
                                 col + e.column() - 1);
            }
        }
        bool strict = j.contains("strict_x0") && j.at("strict_x0").get<bool>();
        return {GaloisAutomorphism(n, K, ell, M, chi, y), strict};
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

inline Json witness_json(const std::optional<InvariantWitness>& w, int n) {
    if (!w) return nullptr;
    return Json{{"index", index_string(w->index, n)}, {"value", residue(w->value)}};
}

inline Json cmd_galois(const std::string& report, const Options& o) {
    require(!o.config.empty(), "--config is required");
    auto [s, strict] = load_config(o.config);
    const int n = s.rank();
    auto defect = x0_defect_degree(s);
    if (strict && defect)
        throw std::domain_error("strict_x0: sigma(x_0) differs from x_0^chi in degree " + std::to_string(*defect));
    Json r{{"report", report}, {"n", n}, {"K", s.truncation()}, {"ring", s.ring().name()},
           {"chi", s.chi().get_str()}, {"x0_defect_degree", defect ? Json(*defect) : Json(nullptr)}};
    const int k = o.k;
    if (report == "depth") {
        r["depth"] = johnson_depth(s).str();
    } else if (report == "milnor") {
        int len = o.length;
        if (len == 0) {
            auto w = first_nonvanishing_invariant(s, s.truncation() + 1);
            len = w ? static_cast<int>(w->index.size()) : 2;
        }
        require(len >= 2 && len - 1 <= s.truncation(), "--length must be in 2..K+1");
        Json inv = Json::object();
        for (const auto& I : all_indices(n, len - 1))
            for (int i = 1; i <= n; ++i) {
                MultiIndex J = I;
                J.push_back(i);
                Rational v = milnor_invariant(s, J);
                if (v != 0) inv[index_string(J, n)] = residue(v);
            }
        r["length"] = len;
        r["nonzero"] = inv;
    } else if (report == "tau") {
        auto t = tau_vanishes(s, k);
        r["k"] = k;
        r["theta_defined"] = true;
        r["vanishes"] = t.vanishes;
        r["witness"] = witness_json(t.witness, n);
    } else if (report == "tower") {
        const int m = o.m ? o.m : k, l = o.l ? o.l : m;
        auto t = obstruction_tower(s, m, l);
        Json levels = Json::array();
        for (const auto& lv : t.levels)
            levels.push_back({{"j", lv.j}, {"restriction", lv.restriction}, {"vacuous", lv.vacuous},
                              {"passes", lv.passes}, {"witness", witness_json(lv.witness, n)}});
        r["m"] = m;
        r["l"] = l;
        r["levels"] = levels;
        r["verdict"] = t.verdict;
        r["theta_vanishes"] = t.theta_vanishes;
        r["agrees"] = t.agrees();
    } else if (report == "n2") {
        auto t = n2_report(s, k);
        Json inv = Json::object();
        for (const auto& [J, v] : t.invariants) inv[index_string(J, n)] = residue(v);
        r["k"] = k;
        r["invariants"] = inv;
        r["vanishes"] = t.vanishes;
        r["tau_agrees"] = t.tau_agrees;
    } else {
        throw UsageError("unknown galois report '" + report + "' (depth, milnor, tau, tower, n2)");
    }
    return r;
}

inline Json hl_json(const HLElement& e, int n) {
    Json t = Json::object();
    for (const auto& [key, c] : e) t["X" + std::to_string(key.first) + "⊗e(" + index_string(key.second.letters(), n) + ")"] = residue(c);
    return t;
}

inline Json cmd_jacobi(const std::string& action, const Options& o) {
    if (action == "dim") {
        Json blocks = Json::array();
        long total = 0;
        for (const auto& [c, blk] : diagram_blocks(o.n, o.k)) {
            Json basis = Json::array();
            for (auto j : blk.basis_columns) basis.push_back(blk.codes[j]);
            total += static_cast<long>(blk.basis_columns.size());
            if (!basis.empty()) blocks.push_back({{"content", c}, {"basis", basis}});
        }
        return Json{{"n", o.n}, {"k", o.k}, {"dimension", total}, {"d_rank", number(d_rank(o.n, o.k))},
                    {"blocks", blocks}};
    }
    require(!o.diagram.empty(), "--diagram is required");
    auto D = JacobiDiagram::parse(o.diagram, o.n);
    auto cf = D.canonical();
    Json legs = Json::array();
    for (int v : D.legs()) legs.push_back({{"label", D.label(v)}, {"L_v", D.rooted_at(v).str()}});
    return Json{{"diagram", o.diagram},
                {"degree", D.degree()},
                {"canonical", cf.zero ? Json(nullptr) : Json(cf.code)},
                {"sign", cf.zero ? 0 : cf.sign},
                {"legs", legs},
                {"phi", hl_json(phi_map(D), o.n)},
                {"vanishes", vanishes_in_quotient(D)}};
}

// ------------------------------------------------------------------ output

inline void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, v] : j.items()) flatten(v, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

inline void emit(const Json& j, const Options& o, std::ostream& out) {
    if (o.format == "json")
        out << j.dump(2) << '\n';
    else
        flatten(j, "", out);
}

// Writes to --out when given, else to `out`.
inline void deliver(const std::string& body, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << body;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write '" + o.out + "'");
    f << body;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"orr: Magnus expansions, free Lie algebras, Koszul homology, Massey products, Milnor invariants"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--n", o.n, "number of generators");
        c->add_option("--k", o.k, "degree / nilpotency level");
        c->add_option("--ell", o.ell, "prime ell");
        c->add_option("--M", o.M, "precision: work modulo ell^M");
        c->add_option("--K", o.K, "Magnus truncation degree");
        c->add_option("--format", o.format, "json | tsv | text");
        c->add_option("--out", o.out, "output file (directory for tables)");
        c->add_option("--budget", o.budget, "largest Koszul weight block allowed (columns)");
    };
    auto* witt = app.add_subcommand("witt", "N_k and D_k");
    auto* lyndon = app.add_subcommand("lyndon", "Lyndon words of length k with standard factorizations");
    auto* magnus = app.add_subcommand("magnus", "Magnus expansion");
    magnus->require_subcommand(1);
    auto* mexp = magnus->add_subcommand("expand", "truncated expansion of a word");
    auto* mcoef = magnus->add_subcommand("coeff", "single coefficient mu(I; w)");
    auto* hom = app.add_subcommand("homology", "Koszul homology of L / L_{>=k} by weight");
    auto* tables = app.add_subcommand("tables", "rank tables as TSV");
    auto* check = app.add_subcommand("check", "run a named identity check");
    std::string identity, galois_report;
    check->add_option("identity", identity, "cyclotomic | dk-genfun | massey-dual | jacobi-dim | koszul-h3")->required();
    auto* massey = app.add_subcommand("massey", "Massey products");
    massey->require_subcommand(1);
    auto* mdual = massey->add_subcommand("dual", "dual-basis matrix on LW_k");
    auto* meval = massey->add_subcommand("eval", "evaluate on a relator");
    auto* galois = app.add_subcommand("galois", "reports for an automorphism config");
    galois->add_option("report", galois_report, "depth | milnor | tau | tower | n2")->required();
    auto* jacobi = app.add_subcommand("jacobi", "tree Jacobi diagrams");
    jacobi->require_subcommand(1);
    auto* jdim = jacobi->add_subcommand("dim", "dimension and basis modulo AS/IHX");
    auto* jphi = jacobi->add_subcommand("phi", "the map into H (x) L_k");

    for (auto* c : {witt, lyndon, mexp, mcoef, hom, tables, check, mdual, meval, galois, jdim, jphi}) common(c);
    for (auto* c : {mexp, mcoef, meval}) c->add_option("--word", o.word, "word, e.g. \"x1^2 [x1,x2]\"");
    for (auto* c : {mcoef, meval}) c->add_option("--index", o.index, "multi-index, e.g. 122");
    for (auto* c : {mexp, mcoef, meval}) c->add_option("--ring", o.ring, "Z | Q | Z/ell^M (default Z/ell^M)");
    hom->add_option("--degree", o.degree, "homological degree (0..3)");
    check->add_option("--degree", o.degree, "series degree");
    tables->add_option("--n-max", o.n_max, "largest n");
    tables->add_option("--k-max", o.k_max, "largest k");
    tables->add_flag("--verify-koszul", o.verify_koszul, "recompute H_3 cells within the budget");
    galois->add_option("--config", o.config, "automorphism JSON")->check(CLI::ExistingFile);
    galois->add_option("--m", o.m, "tower: level m");
    galois->add_option("--l", o.l, "tower: restriction level l");
    galois->add_option("--length", o.length, "milnor: invariant length");
    jphi->add_option("--diagram", o.diagram, "e.g. \"v:1 | [[1,2],2]\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        app.exit(e, sink, err);
        return kUsage;
    }

    // The default format for tables is TSV.
    if (tables->parsed() && !tables->count("--format")) o.format = "tsv";

    try {
        check_ranges(o);
        if (witt->parsed()) emit(cmd_witt(o), o, out);
        else if (lyndon->parsed()) emit(cmd_lyndon(o), o, out);
        else if (mexp->parsed()) emit(cmd_magnus("expand", o), o, out);
        else if (mcoef->parsed()) emit(cmd_magnus("coeff", o), o, out);
        else if (hom->parsed()) {
            Json h = cmd_homology(o);
            if (o.format == "tsv") {
                std::ostringstream t;
                t << "weight\trank\ttorsion\n";
                for (const auto& [w, g] : h["by_weight"].items()) t << w << '\t' << g["rank"].dump() << '\t' << g["torsion"].dump() << '\n';
                deliver(t.str(), o, out);
            } else {
                std::ostringstream t;
                emit(h, o, t);
                deliver(t.str(), o, out);
            }
        } else if (tables->parsed()) {
            auto t = cmd_tables(o);
            if (o.format == "tsv") {
                if (!o.out.empty()) {
                    for (auto [name, body] : {std::pair{"table1.tsv", &t.t1}, {"table2.tsv", &t.t2}, {"table3.tsv", &t.t3}}) {
                        std::ofstream f(o.out + "/" + name);
                        if (!f) throw UsageError("cannot write into '" + o.out + "'");
                        f << *body;
                    }
                } else {
                    out << "# N_k\n" << t.t1 << "\n# D_k\n" << t.t2 << "\n# H_3\n" << t.t3;
                }
                if (o.verify_koszul) out << t.verification.dump(2) << '\n';
            } else {
                Json j{{"table1", t.t1}, {"table2", t.t2}, {"table3", t.t3}};
                if (o.verify_koszul) j["koszul_verification"] = t.verification;
                std::ostringstream s;
                emit(j, o, s);
                deliver(s.str(), o, out);
            }
            return t.ok ? kPass : kCheckFailed;
        } else if (check->parsed()) {
            auto r = cmd_check(identity, o);
            emit(r.report, o, out);
            return r.pass ? kPass : kCheckFailed;
        } else if (mdual->parsed()) emit(cmd_massey("dual", o), o, out);
        else if (meval->parsed()) emit(cmd_massey("eval", o), o, out);
        else if (galois->parsed()) emit(cmd_galois(galois_report, o), o, out);
        else if (jdim->parsed()) emit(cmd_jacobi("dim", o), o, out);
        else if (jphi->parsed()) emit(cmd_jacobi("phi", o), o, out);
        return kPass;
    } catch (const std::domain_error& e) {
        // Precondition failures (depth, definedness) as structured errors.
        out << Json{{"error", "precondition"}, {"message", e.what()}}.dump(2) << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace orr::cli

#endif
