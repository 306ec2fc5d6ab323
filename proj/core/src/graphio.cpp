#include "cospectra/graphio.hpp"

#include "cospectra/blockgrammar.hpp"
#include "cospectra/families.hpp"
#include "cospectra/genalg.hpp"
#include "cospectra/ortho.hpp"
#include "cospectra/spectra.hpp"
#include "cospectra/switching.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cospectra {

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>((n >> 12 & 63) + 63));
        out.push_back(static_cast<char>((n >> 6 & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("order beyond the supported graph6 range");
    }
    int bit = 5;
    int cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.edge(i, j)) cur |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

DecodeResult graph6_decode(const std::string& text) {
    DecodeResult r;
    auto fail = [&](size_t off, const char* msg) {
        r.offset = off;
        r.error = msg;
        return r;
    };
    if (text.empty()) return fail(0, "empty input");
    auto sextet = [&](size_t off) -> int {
        const char ch = text[off];
        if (ch < 63 || ch > 126) return -1;
        return ch - 63;
    };
    long long n = 0;
    size_t pos = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') return fail(1, "orders beyond 258047 are not supported");
        if (text.size() < 4) return fail(text.size(), "truncated order field");
        for (pos = 1; pos <= 3; ++pos) {
            const int v = sextet(pos);
            if (v < 0) return fail(pos, "byte outside the printable range");
            n = n << 6 | v;
        }
    } else {
        const int v = sextet(0);
        if (v < 0) return fail(0, "byte outside the printable range");
        n = v;
        pos = 1;
    }
    if (n > 10000) return fail(0, "order too large for this tool");
    const long long nbits = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() - pos < need) return fail(text.size(), "truncated adjacency bits");
    if (text.size() - pos > need) return fail(pos + need, "trailing bytes after the adjacency bits");
    for (size_t i = 0; i < need; ++i)
        if (sextet(pos + i) < 0) return fail(pos + i, "byte outside the printable range");
    Graph g(static_cast<int>(n));
    long long idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (sextet(pos + idx / 6) >> (5 - idx % 6) & 1) g.set_edge(i, j, true);
    for (long long b = nbits; b < static_cast<long long>(need) * 6; ++b)
        if (sextet(pos + b / 6) >> (5 - b % 6) & 1) return fail(pos + b / 6, "nonzero padding bits");
    r.ok = true;
    r.graph = std::move(g);
    return r;
}

namespace {

using json = nlohmann::ordered_json;

json poly_json(const CharPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs) a.push_back(c.str());
    return a;
}

json witness_json(const EntryWitness& w) {
    return json{{"row", w.row}, {"col", w.col}, {"value", w.num.str() + "/" + w.den.str()}};
}

void emit(std::ostream& out, const json& rep) { out << rep.dump(2) << '\n'; }

// File path when one exists, otherwise a graph6 literal.
Graph read_graph_arg(const std::string& arg) {
    std::string text = arg;
    if (std::ifstream in(arg); in) {
        std::string line;
        if (!std::getline(in, line) || line.empty()) throw std::runtime_error("empty graph file " + arg);
        text = line;
    }
    auto d = graph6_decode(text);
    if (!d.ok)
        throw std::runtime_error("bad graph6 '" + text + "' at byte " + std::to_string(d.offset) + ": " + d.error);
    return d.graph;
}

uint64_t env_seed() {
    if (const char* s = std::getenv("COSPECTRA_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

// Certificates shared by every emitted pair: exact polynomial equality for
// the graphs and for their complements.
json pair_certificates(const Graph& g, const Graph& gp) {
    const CharPoly pa = char_poly(g), pb = char_poly(gp);
    const CharPoly ca = char_poly(complement(g)), cb = char_poly(complement(gp));
    json cert;
    cert["char_poly"] = poly_json(pa);
    cert["partner_char_poly"] = poly_json(pb);
    cert["cospectral"] = pa == pb;
    cert["complement_cospectral"] = ca == cb;
    return cert;
}

int run_gen(const GenConfig& cfg, std::ostream& out) {
    GenStats stats;
    Graph g = cfg.level == 2 ? algorithm1(cfg, &stats) : algorithm2(cfg, &stats);
    auto q = build_q(cfg.level, cfg.m);
    auto check = check_matrix(g.adjacency_int(), q);
    auto gp = Graph::from_adjacency(check.image);
    json rep;
    rep["command"] = "gen";
    rep["inputs"] = {{"level", cfg.level}, {"m", cfg.m}, {"seed", cfg.seed}, {"retries", cfg.max_retries}};
    rep["outputs"] = {{"order", g.order()},
                      {"edges", g.edge_count()},
                      {"graph6", graph6_encode(g)},
                      {"partner_graph6", graph6_encode(*gp)},
                      {"restarts", stats.restarts}};
    rep["certificates"] = pair_certificates(g, *gp);
    rep["certificates"]["window_check"] = check.ok ? "pass" : "fail";
    rep["discrepancies"] = json::array();
    emit(out, rep);
    const bool ok = check.ok && rep["certificates"]["cospectral"].get<bool>() &&
                    rep["certificates"]["complement_cospectral"].get<bool>();
    return ok ? 0 : 1;
}

std::vector<BlockSub> parse_variant_file(const std::string& path, int level) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open variant file " + path);
    std::vector<BlockSub> subs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<long long> tok;
        long long v;
        while (ls >> v) tok.push_back(v);
        if (tok.empty()) continue;
        const auto where = path + ":" + std::to_string(lineno);
        if (tok.size() == 3) {
            // "i j id": replacement by 1-based alphabet id
            const int id = static_cast<int>(tok[2]);
            const int limit = level == 2 ? 16 : 8;
            if (id < 1 || id > limit) throw std::runtime_error(where + ": alphabet id out of range");
            const IntMatrix& blk = level == 2 ? blocks2()[id - 1] : blocks3()[id - 1];
            subs.push_back({static_cast<int>(tok[0]), static_cast<int>(tok[1]), blk});
        } else if (tok.size() == 2 + static_cast<size_t>(level) * level) {
            // "i j e11 e12 ...": raw row-major block entries
            IntMatrix blk(level, level);
            for (int r = 0; r < level; ++r)
                for (int c = 0; c < level; ++c) blk.at(r, c) = tok[2 + r * level + c];
            subs.push_back({static_cast<int>(tok[0]), static_cast<int>(tok[1]), std::move(blk)});
        } else {
            throw std::runtime_error(where + ": expected 'i j id' or 'i j' plus block entries");
        }
    }
    return subs;
}

int run_family(const std::string& name, int m, const std::string& variant_path, std::ostream& out) {
    auto fam = family_from_name(name);
    if (!fam) throw CLI::ValidationError("family", "unknown family '" + name + "'");
    if (!family_size_ok(*fam, m))
        throw CLI::ValidationError("--m", "size/parity violation for family '" + name + "'");
    const int level = family_level(*fam);
    Graph g = build_family({*fam, m});

    json rep;
    rep["command"] = "family";
    rep["inputs"] = {{"family", name}, {"m", m}, {"variant", variant_path.empty() ? json() : json(variant_path)}};

    if (!variant_path.empty()) {
        auto subs = parse_variant_file(variant_path, level);
        auto res = apply_substitution(g, level, subs);
        if (!res.ok) {
            rep["certificates"] = {{"window_check", "fail"}, {"witness", witness_json(res.witness)}};
            rep["discrepancies"] = json::array();
            emit(out, rep);
            return 1;
        }
        g = res.graph;
    }

    auto q = build_q(level, m);
    auto check = check_matrix(g.adjacency_int(), q);
    auto gp = Graph::from_adjacency(check.image);
    rep["outputs"] = {{"order", g.order()},
                      {"edges", g.edge_count()},
                      {"graph6", graph6_encode(g)},
                      {"partner_graph6", graph6_encode(*gp)}};
    rep["certificates"] = pair_certificates(g, *gp);
    rep["certificates"]["window_check"] = "pass";
    rep["discrepancies"] = json::array();
    emit(out, rep);
    const bool ok = rep["certificates"]["cospectral"].get<bool>() &&
                    rep["certificates"]["complement_cospectral"].get<bool>();
    return ok ? 0 : 1;
}

ZeroOneMatrix parse_border_file(const std::string& path, int k, int outside) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open border file " + path);
    ZeroOneMatrix c(k, outside);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        long long i, j;
        if (!(ls >> i)) continue;
        const auto where = path + ":" + std::to_string(lineno);
        if (!(ls >> j)) throw std::runtime_error(where + ": expected 'outside inside' vertex pair");
        long long extra;
        if (ls >> extra) throw std::runtime_error(where + ": expected exactly two numbers");
        if (i < 1 || i > outside) throw std::runtime_error(where + ": outside vertex out of range");
        if (j < 1 || j > k) throw std::runtime_error(where + ": inside vertex out of range");
        c.set(static_cast<int>(j - 1), static_cast<int>(i - 1), true);
    }
    return c;
}

int run_switch(const std::string& xspec, const std::string& bspec, const std::string& border_path,
               int level, int m, std::ostream& out) {
    Graph x;
    if (xspec.rfind("family:", 0) == 0) {
        const auto rest = xspec.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--x", "family form is family:<name>:<m>");
        auto fam = family_from_name(rest.substr(0, colon));
        if (!fam) throw CLI::ValidationError("--x", "unknown family '" + rest.substr(0, colon) + "'");
        const int fm = std::atoi(rest.substr(colon + 1).c_str());
        if (!family_size_ok(*fam, fm))
            throw CLI::ValidationError("--x", "size/parity violation for the family");
        x = build_family({*fam, fm});
        level = family_level(*fam);
        m = fm;
    } else {
        if (level == 0 || m == 0)
            throw CLI::ValidationError("--x", "--level and --m are required with a graph6 inside graph");
        x = read_graph_arg(xspec);
    }
    if (x.order() != level * m)
        throw CLI::ValidationError("--x", "inside graph order does not equal level*m");
    Graph b = read_graph_arg(bspec);
    ZeroOneMatrix c = border_path.empty() ? ZeroOneMatrix(x.order(), b.order())
                                          : parse_border_file(border_path, x.order(), b.order());

    auto q = build_q(level, m);
    auto pr = make_cospectral_pair({x, c, b}, q);

    json rep;
    rep["command"] = "switch";
    rep["inputs"] = {{"x", xspec}, {"b", bspec},
                     {"border", border_path.empty() ? json() : json(border_path)},
                     {"level", level}, {"m", m}};
    if (!pr.ok) {
        rep["certificates"] = {{"pair", "fail"}, {"failure", pr.failure}};
        if (pr.column >= 0) rep["certificates"]["column"] = pr.column;
        rep["certificates"]["witness"] = witness_json(pr.witness);
        rep["discrepancies"] = json::array();
        emit(out, rep);
        return 1;
    }

    json classes = json::array();
    for (int j = 0; j < b.order(); ++j) {
        std::vector<int> col(x.order());
        for (int i = 0; i < x.order(); ++i) col[i] = c.get(i, j) ? 1 : 0;
        classes.push_back(column_class_name(classify_column(level, m, col)));
    }
    rep["outputs"] = {{"order", pr.g.order()},
                      {"edges", pr.g.edge_count()},
                      {"graph6", graph6_encode(pr.g)},
                      {"partner_graph6", graph6_encode(pr.g_prime)},
                      {"column_classes", classes}};
    rep["certificates"] = pair_certificates(pr.g, pr.g_prime);
    if (pr.g.order() <= 32) {
        auto iso = isomorphic(pr.g, pr.g_prime);
        rep["certificates"]["isomorphism"] =
            iso.isomorphic ? "isomorphic" : "non-isomorphic: " + iso.witness;
    } else {
        rep["certificates"]["isomorphism"] = "skipped (order above 32)";
    }
    rep["discrepancies"] = json::array();
    emit(out, rep);
    const bool ok = rep["certificates"]["cospectral"].get<bool>() &&
                    rep["certificates"]["complement_cospectral"].get<bool>();
    return ok ? 0 : 1;
}

int run_verify_window_2(std::ostream& out) {
    const auto quads = enumerate_offdiag_level2();
    int low = 0, high = 0, mixed = 0, literal_ok = 0, with9 = 0;
    json example9;
    for (const auto& t : quads) {
        const int ids[4] = {t.p, t.q, t.r, t.s};
        bool all_low = true, all_high = true, all_lit_high = true, has9 = false;
        for (int id : ids) {
            all_low &= id <= 8;
            all_high &= id >= 9;
            all_lit_high &= id >= 10;
            has9 |= id == 9;
        }
        low += all_low;
        high += all_high;
        mixed += !(all_low || all_high);
        literal_ok += all_low || all_lit_high;
        if (has9 && ++with9 == 1) example9 = {t.p, t.q, t.r, t.s};
    }
    const auto diags = enumerate_diag_level2();
    std::set<std::pair<int, std::pair<int, int>>> got;
    for (const auto& t : diags) got.insert({t.d, {t.c, t.dp}});
    std::set<std::pair<int, std::pair<int, int>>> want;
    for (int d : {1, 7})
        for (int c : {1, 2, 3, 5, 6, 7}) want.insert({d, {c, d}});
    const bool diag_ok = got == want;
    const bool literal_holds = literal_ok == static_cast<int>(quads.size());
    const bool computed_holds = mixed == 0;

    json rep;
    rep["command"] = "verify-window";
    rep["level"] = 2;
    rep["offdiagonal"] = {
        {"cases", 65536},
        {"admissible", quads.size()},
        {"split", {{"all_ids_1_to_8", low}, {"all_ids_9_to_16", high}, {"mixed", mixed}}},
        {"documented_rule", {{"families", "ids 1..8 or ids 10..16"}, {"holds", literal_holds},
                             {"violations", static_cast<int>(quads.size()) - literal_ok}}},
        {"computed_rule", {{"families", "ids 1..8 or ids 9..16"}, {"holds", computed_holds}}}};
    rep["diagonal"] = {
        {"cases", 64},
        {"admissible", diags.size()},
        {"characterization",
         {{"diagonals", "equal, ids {1,7}"}, {"middle_ids", {1, 2, 3, 5, 6, 7}}, {"holds", diag_ok}}}};
    rep["discrepancies"] = json::array();
    if (!literal_holds)
        rep["discrepancies"].push_back(
            {{"claim", "admissible off-diagonal windows draw from ids 1..8 or 10..16"},
             {"computed", "the families are ids 1..8 and ids 9..16"},
             {"windows_containing_id_9", with9},
             {"example", example9}});
    emit(out, rep);
    return computed_holds && diag_ok ? 0 : 1;
}

int run_verify_window_3(std::ostream& out) {
    const auto trips = enumerate_diag_level3();
    std::set<int> zero_diag_c;
    std::set<std::pair<int, int>> id_pairs;
    for (const auto& t : trips) {
        if (t.d == 1 && t.dp == 1) zero_diag_c.insert(t.c_bits);
        id_pairs.insert({t.d, t.dp});
    }
    std::set<int> table;
    for (const auto& b : band3()) table.insert(pack3(b));
    const bool eq = zero_diag_c == table;

    json rep;
    rep["command"] = "verify-window";
    rep["level"] = 3;
    rep["diagonal"] = {{"cases", 32768}, {"admissible", trips.size()}};
    rep["band_table"] = {{"size", table.size()},
                         {"zero_diagonal_admissible_middles", zero_diag_c.size()},
                         {"matches", eq}};
    json pairs = json::array();
    for (const auto& [d, dp] : id_pairs) pairs.push_back({d, dp});
    rep["diagonal_id_pairs"] = pairs;
    rep["discrepancies"] = json::array();
    emit(out, rep);
    return eq ? 0 : 1;
}

int run_verify_column(int level, int m, std::ostream& out) {
    const int k = level * m;
    if (k > 20) throw CLI::ValidationError("--m", "column sweep capped at level*m <= 20");
    auto q = build_q(level, m);
    long long admissible = 0;
    long long by_class[3] = {0, 0, 0};
    json extras = json::array();
    bool classification_sound = true, rewrite_matches = true;
    for (long long bits = 0; bits < (1LL << k); ++bits) {
        std::vector<int> col(k);
        for (int i = 0; i < k; ++i) col[i] = bits >> i & 1;
        auto cc = column_admissible(q, col);
        const auto cls = classify_column(level, m, col);
        if (cc.ok) ++admissible;
        if (cls != ColumnClass::Inadmissible) {
            ++by_class[static_cast<int>(cls)];
            if (!cc.ok) {
                classification_sound = false;
            } else if (switch_border(level, m, col, cls) != cc.image) {
                rewrite_matches = false;
            }
        } else if (cc.ok) {
            std::string s(k, '0');
            for (int i = 0; i < k; ++i)
                if (col[i]) s[i] = '1';
            extras.push_back(s);
        }
    }
    json rep;
    rep["command"] = "verify-column";
    rep["level"] = level;
    rep["m"] = m;
    rep["k"] = k;
    rep["columns"] = 1LL << k;
    rep["admissible"] = admissible;
    rep["classes"] = {{"mixed", by_class[0]}, {"aligned", by_class[1]}, {"grouped", by_class[2]}};
    rep["extras"] = {{"count", extras.size()}, {"columns", extras}};
    rep["classification_sound"] = classification_sound;
    rep["rewrite_matches_image"] = rewrite_matches;
    rep["discrepancies"] = json::array();
    if (!extras.empty())
        rep["discrepancies"].push_back(
            {{"claim", "every admissible column carries a class"},
             {"computed", "some admissible columns fall outside the classification"},
             {"count", extras.size()}});
    emit(out, rep);
    return classification_sound && rewrite_matches ? 0 : 1;
}

int run_cospectral(const std::string& a, const std::string& b, std::ostream& out) {
    Graph g = read_graph_arg(a), h = read_graph_arg(b);
    json rep;
    rep["command"] = "cospectral";
    rep["inputs"] = {{"a", a}, {"b", b}};
    if (g.order() != h.order()) {
        rep["certificates"] = {{"cospectral", false}, {"reason", "orders differ"}};
        emit(out, rep);
        return 1;
    }
    const CharPoly pa = char_poly(g), pb = char_poly(h);
    const bool cos = pa == pb;
    rep["certificates"] = {{"char_poly_a", poly_json(pa)}, {"char_poly_b", poly_json(pb)}, {"cospectral", cos}};
    emit(out, rep);
    return cos ? 0 : 1;
}

int run_charpoly(const std::string& a, std::ostream& out) {
    Graph g = read_graph_arg(a);
    const CharPoly p = char_poly(g);
    json rep;
    rep["command"] = "charpoly";
    rep["inputs"] = {{"graph", a}};
    rep["outputs"] = {{"order", g.order()},
                      {"edges", g.edge_count()},
                      {"coefficients", poly_json(p)},
                      {"pretty", p.to_string()}};
    emit(out, rep);
    return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cospectral graph constructions via block-structured orthogonal conjugation"};
    app.name("cospectra");
    app.require_subcommand(1);

    GenConfig gcfg;
    gcfg.seed = env_seed();
    auto* gen = app.add_subcommand("gen", "generate a seeded admissible graph and its conjugated partner");
    gen->add_option("--level", gcfg.level, "construction level (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
    gen->add_option("--m", gcfg.m, "block count (at least 3)")->required()->check(CLI::Range(3, 64));
    gen->add_option("--seed", gcfg.seed, "random seed (default: COSPECTRA_SEED or 0)");
    gen->add_option("--retries", gcfg.max_retries, "restart budget")->check(CLI::Range(0, 100000000));

    std::string fam_name, fam_variant;
    int fam_m = 0;
    auto* fam = app.add_subcommand("family", "build a named family graph and its conjugated partner");
    fam->add_option("name", fam_name, "flower | sunflower | example4 | example6")->required();
    fam->add_option("--m", fam_m, "block count")->required()->check(CLI::Range(3, 512));
    fam->add_option("--variant", fam_variant, "block substitution file")->check(CLI::ExistingFile);

    std::string sw_x, sw_b = "?", sw_border;
    int sw_level = 0, sw_m = 0;
    auto* sw = app.add_subcommand("switch", "assemble a bordered graph and emit the certified cospectral pair");
    sw->add_option("--x", sw_x, "inside graph: graph6, a .g6 file, or family:<name>:<m>")->required();
    sw->add_option("--b", sw_b, "outside graph as graph6 or a .g6 file (default: empty)");
    sw->add_option("--border", sw_border, "edge list file, lines 'outside inside' (1-based)")->check(CLI::ExistingFile);
    sw->add_option("--level", sw_level, "level when --x is graph6")->check(CLI::IsMember({2, 3}));
    sw->add_option("--m", sw_m, "block count when --x is graph6")->check(CLI::Range(2, 512));

    int vw_level = 0;
    auto* vw = app.add_subcommand("verify-window", "sweep every block window and report the admissible sets");
    vw->add_option("--level", vw_level, "2 (off-diagonal and diagonal) or 3 (diagonal)")->required()->check(CLI::IsMember({2, 3}));

    int vc_level = 0, vc_m = 0;
    auto* vc = app.add_subcommand("verify-column", "sweep every border column and report admissibility and classes");
    vc->add_option("--level", vc_level, "construction level")->required()->check(CLI::IsMember({2, 3}));
    vc->add_option("--m", vc_m, "block count")->required()->check(CLI::Range(2, 10));

    std::string cos_a, cos_b;
    auto* cos = app.add_subcommand("cospectral", "compare two graphs' characteristic polynomials");
    cos->add_option("a", cos_a, "graph6 or .g6 file")->required();
    cos->add_option("b", cos_b, "graph6 or .g6 file")->required();

    std::string cp_a;
    auto* cp = app.add_subcommand("charpoly", "exact characteristic polynomial of a graph");
    cp->add_option("graph", cp_a, "graph6 or .g6 file")->required();

    std::vector<const char*> argv;
    argv.push_back("cospectra");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(gcfg, out);
        if (fam->parsed()) return run_family(fam_name, fam_m, fam_variant, out);
        if (sw->parsed()) return run_switch(sw_x, sw_b, sw_border, sw_level, sw_m, out);
        if (vw->parsed()) return vw_level == 2 ? run_verify_window_2(out) : run_verify_window_3(out);
        if (vc->parsed()) return run_verify_column(vc_level, vc_m, out);
        if (cos->parsed()) return run_cospectral(cos_a, cos_b, out);
        if (cp->parsed()) return run_charpoly(cp_a, out);
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace cospectra
