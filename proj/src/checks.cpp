#include "qtate/checks.hpp"

#include <algorithm>
#include <sstream>

namespace qtate {

namespace {

Json identity_json(const std::vector<IdentityResult>& rs) {
    Json arr = Json::array();
    for (const auto& r : rs) arr.push_back({{"identity", r.name}, {"pass", r.pass}});
    return arr;
}

bool all_pass(const std::vector<IdentityResult>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const IdentityResult& r) { return r.pass; });
}

std::string mono_str(Variant var, Mono m) { return RingElement(var, m).str(); }

Json triples_json(Variant var, const std::vector<TripleKey>& ts) {
    Json arr = Json::array();
    for (const auto& t : ts)
        arr.push_back({{"a", mono_str(var, t.a)}, {"b", mono_str(var, t.b)}, {"c", mono_str(var, t.c)}});
    return arr;
}

// expected class-of-h tables
const char* kHTableT2[6][6] = {
    {"0", "0", "0", "0", "0", "0"},
    {"0", "0", "x + y", "x^2", "x^2 + y^2", "x^2*y"},
    {"0", "x + y", "0", "0", "y^2", "0"},
    {"0", "x^2", "0", "0", "0", "0"},
    {"0", "x^2 + y^2", "y^2", "0", "0", "0"},
    {"0", "x^2*y", "0", "0", "0", "0"},
};
const char* kHTableT4[6][6] = {
    {"0", "0", "0", "0", "0", "0"},
    {"0", "0", "x", "x^2", "x^2", "x^2*y"},
    {"0", "x", "0", "0", "y^2", "0"},
    {"0", "x^2", "0", "0", "0", "0"},
    {"0", "x^2", "y^2", "0", "0", "0"},
    {"0", "x^2*y", "0", "0", "0", "0"},
};

RingElement expected_h(Variant var, int b, int c) {
    return parse_ring_element(var, (var == Variant::T2 ? kHTableT2 : kHTableT4)[b][c]);
}

RingElement expected_m(Variant var, int a, int b, int c) {
    if (b == B_Y && a == B_X && c == B_X)
        return var == Variant::T2 ? xy_alias(var) : ring_mono(var, 0, B_X2);
    if (b == B_Y && ((a == B_X && c == B_X2) || (a == B_X2 && c == B_X)))
        return ring_mono(var, 0, B_X2Y);
    return RingElement(var);
}

}  // namespace

std::vector<Check> check_group(const RunConfig& rc) {
    const GroupConfig cfg{rc.t, rc.field};
    cfg.validate(rc.max_t);
    const auto rs = verify_identities(cfg);
    Check c;
    c.name = "group-algebra identities (t=" + std::to_string(rc.t) + ")";
    c.ref = "group-identities";
    c.pass = all_pass(rs);
    c.data = identity_json(rs);
    return {c};
}

std::vector<Check> check_resolution(const RunConfig& rc) {
    const GroupConfig cfg{rc.t, rc.field};
    cfg.validate(rc.max_t);
    const auto P = build_resolution(cfg);
    std::vector<Check> out;
    for (const auto& chk : check_complex(P)) {
        Check c;
        c.name = chk.name + " (t=" + std::to_string(rc.t) + ")";
        c.ref = "resolution-exactness";
        c.pass = chk.pass;
        if (!chk.detail.empty()) c.data = {{"dims", chk.detail}};
        out.push_back(c);
    }
    return out;
}

std::vector<Check> check_homotopies(const RunConfig& rc) {
    const GroupConfig cfg{rc.t, rc.field};
    cfg.validate(rc.max_t);
    const auto P = build_resolution(cfg);
    const auto x = standard_map(StdMap::X, P), y = standard_map(StdMap::Y, P),
               p = standard_map(StdMap::P, P), w = standard_map(StdMap::W, P),
               s = PeriodicMap::shift(P, 1);
    std::vector<Check> out;
    auto add = [&out](const std::string& name, const std::string& ref, bool pass) {
        out.push_back({name, ref, pass, false, Json()});
    };
    add("d(x) = 0 and d(y) = 0", "chain-maps",
        dga_differential(x).is_zero() && dga_differential(y).is_zero());
    add("d(p) = xy + yx", "homotopy-identities", dga_differential(p) == x * y + y * x);
    add("d(w) = y^3", "homotopy-identities", dga_differential(w) == y * y * y);
    add("s w + w s = y^2 s", "homotopy-identities", s * w + w * s == (y * y).s_compose(1));
    if (rc.t == 2) {
        const auto r = standard_map(StdMap::R, P);
        add("d(r) = x^2 + xy + y^2", "homotopy-identities",
            dga_differential(r) == x * x + x * y + y * y);
        add("s r + r s = x s", "homotopy-identities", s * r + r * s == x.s_compose(1));
        {
            // the conjugation defect class of this target is x s; x+y s is unreachable
            Check info;
            info.name = "conjugation defect class of x^2+xy+y^2";
            info.ref = "homotopy-identities";
            info.info_only = true;
            info.pass = true;
            const auto defect = r.s_conjugate() + r;
            info.data = {{"class", class_map(defect).str()},
                         {"x_plus_y_reachable", false}};
            out.push_back(info);
        }
        const auto target = x * x + x * y + y * y;
        add("x^2+xy+y^2: no 4-periodic null-homotopy", "period-obstruction",
            !solve_homotopy(target, 4).feasible);
        add("x^2+xy+y^2: 8-periodic null-homotopy exists", "period-obstruction",
            solve_homotopy(target, 8).feasible);
        // reported, not asserted: the analogous query for x^3
        Check info;
        info.name = "x^3: 4-periodic null-homotopy?";
        info.ref = "period-obstruction";
        info.info_only = true;
        const bool xxx4 = solve_homotopy(x * x * x, 4).feasible;
        info.pass = true;
        info.data = {{"feasible", xxx4}, {"period", 4}};
        out.push_back(info);
    } else {
        const auto v = standard_map(StdMap::V, P);
        add("d(v) = x^2 + xy", "homotopy-identities", dga_differential(v) == x * x + x * y);
        add("s v + v s = x s", "homotopy-identities", s * v + v * s == x.s_compose(1));
    }
    return out;
}

std::vector<Check> check_f2_suite(const RunConfig& rc) {
    const GroupConfig cfg{rc.t, rc.field};
    cfg.validate(rc.max_t);
    const SecondaryTables T(cfg);
    std::vector<Check> out;
    bool d_all = true, c_all = true;
    Json fails = Json::array();
    for (const auto& st : verify_f2(T)) {
        d_all = d_all && st.d_identity;
        c_all = c_all && st.class_vanishes;
        if (!st.d_identity || !st.class_vanishes)
            fails.push_back({{"b", kBName[st.b]}, {"c", kBName[st.c]},
                             {"d_identity", st.d_identity}, {"class_vanishes", st.class_vanishes}});
    }
    Check cd;
    cd.name = "f2: d f2(b,c) = f1(bc) + f1(b) f1(c) on all 36 pairs (t=" + std::to_string(rc.t) + ")";
    cd.ref = "f2-table";
    cd.pass = d_all;
    if (!fails.empty()) cd.data = fails;
    out.push_back(cd);
    Check cc;
    cc.name = "f2: class of f2(b,c) vanishes on all 36 pairs (t=" + std::to_string(rc.t) + ")";
    cc.ref = "f2-table";
    cc.pass = c_all;
    out.push_back(cc);

    std::vector<MKind> kinds = {MKind::M, MKind::MPrime, MKind::MDoublePrime};
    if (rc.t >= 4) kinds.push_back(MKind::MTilde);
    for (MKind k : kinds) {
        const auto rep = verify_cocycle(T, k, rc.window);
        Check ck;
        ck.name = "cocycle law for " + mkind_name(k) + ", s-exponents in [-" +
                  std::to_string(rc.window) + "," + std::to_string(rc.window) + "]";
        ck.ref = "cocycle-law";
        ck.pass = rep.failures == 0;
        ck.data = {{"tuples", rep.tuples_checked}, {"failures", rep.failures}};
        out.push_back(ck);
    }
    return out;
}

std::vector<Check> check_gamma(const RunConfig& rc, MKind kind) {
    const GroupConfig cfg{rc.t, rc.field};
    cfg.validate(rc.max_t);
    const SecondaryTables T(cfg);
    const auto cert = gamma_certificate(T, kind);
    Check c;
    c.name = "gamma(" + mkind_name(kind) + "): delta g = " + mkind_name(kind) +
             " infeasible on the default window (t=" + std::to_string(rc.t) + ")";
    c.ref = "gamma-nontrivial";
    /* Feasibility of the restricted system proves nothing; report it as an
     * inconclusive outcome rather than a failure. */
    c.info_only = !cert.infeasible;
    c.pass = cert.infeasible;
    c.data = {{"unknowns", cert.unknowns},
              {"equations", cert.equations},
              {"rank", cert.rank},
              {"verdict", cert.infeasible ? "nontrivial (certificate)" : "inconclusive"},
              {"obstruction_triples", triples_json(T.variant(), cert.obstruction_triples)}};
    return {c};
}

std::vector<Check> check_enumeration(const RunConfig& rc) {
    const GroupConfig cfg{rc.t, rc.field};
    cfg.validate(rc.max_t);
    const SecondaryTables T(cfg);
    const auto rep = enumerate_scalar_triples(T, rc.max_degree);
    Check c;
    c.name = "scalar triples with ab = 0 = bc, degrees <= " + std::to_string(rc.max_degree) +
             " (" + field_name(rc.field) + ")";
    c.ref = "scalar-massey";
    // over GF2/t=2 every defined triple must contain 0; over GF4 counterexamples exist
    const bool expect_all = (rc.field == Field::GF2);
    c.pass = expect_all ? rep.counterexamples.empty() : !rep.counterexamples.empty();
    Json cex = Json::array();
    for (const auto& t : rep.counterexamples)
        cex.push_back({{"a", t.a.str()}, {"b", t.b.str()}, {"c", t.c.str()}, {"m", t.value.str()}});
    c.data = {{"defined", rep.defined}, {"members", rep.members}, {"counterexamples", cex}};
    return {c};
}

std::vector<Check> check_module(const RunConfig& rc, const LambdaMatrix& A, MKind kind) {
    const GroupConfig cfg{rc.t, rc.field};
    cfg.validate(rc.max_t);
    const SecondaryTables T(cfg);
    const auto v = realizable_summand(T, A, kind);
    Check c;
    c.name = "module realizability decision (" + mkind_name(kind) + ")";
    c.ref = "realizability";
    c.pass = true;  // exit 0 means "verdict computed"
    c.data = {{"summand_of_realizable", v.summand_of_realizable},
              {"exact_AB", v.exact_ab.pass()},
              {"exact_BC", v.exact_bc.pass()},
              {"A", matrix_to_json(v.A)},
              {"B", matrix_to_json(v.B)},
              {"C", matrix_to_json(v.C)},
              {"m_ABC", matrix_to_json(v.value)}};
    if (v.membership.member) {
        c.data["witness_X"] = matrix_to_json(*v.membership.X);
        c.data["witness_Y"] = matrix_to_json(*v.membership.Y);
    }
    if (v.prime_witness) {
        auto grid_json = [](const ElementGrid& G) {
            Json rows = Json::array();
            for (const auto& row : G) {
                Json r = Json::array();
                for (const auto& e : row) r.push_back(e.str());
                rows.push_back(r);
            }
            return rows;
        };
        c.data["closed_form"] = Json{{"identity_m_prime_eq_AV_plus_WC", v.prime_witness->identity_holds},
                                     {"W", grid_json(v.prime_witness->W)},
                                     {"V", grid_json(v.prime_witness->V)}};
    }
    return {c};
}

Json dump_m_table(const RunConfig& rc) {
    const GroupConfig cfg{rc.t, rc.field};
    cfg.validate(rc.max_t);
    const SecondaryTables T(cfg);
    const Variant var = T.variant();
    Json m = Json::array();
    for (int ai = 0; ai < 12; ++ai)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c) {
                const Mono am{ai < 6 ? 0 : 1, ai % 6};
                m.push_back({{"a", mono_str(var, am)},
                             {"b", kBName[b]},
                             {"c", kBName[c]},
                             {"m", T.m_base(ai, b, c).str()}});
            }
    Json h = Json::array();
    for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
            h.push_back({{"b", kBName[b]}, {"c", kBName[c]}, {"class_h", T.h_class(b, c).str()}});
    return Json{{"m_table", m}, {"h_class_table", h}};
}

LambdaMatrix sample_presentation(Variant var, std::mt19937_64& rng) {
    while (true) {
        const size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        GradedSet I, J;
        for (size_t i = 0; i < rows; ++i) I.degs.push_back(static_cast<int>(rng() % 4));
        for (size_t j = 0; j < cols; ++j) J.degs.push_back(static_cast<int>(rng() % 6) - 3);
        LambdaMatrix A(var, I, J);
        bool nonzero = false;
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                const int d = I.degs[i] - J.degs[j];
                if (d < 1 || d > 3) continue;
                const auto monos = piece_monomials(d);
                RingElement e(var);
                for (const Mono& mu : monos)
                    if (rng() % 2) e.add_term(mu, Gf::one());
                if (!e.is_zero()) nonzero = true;
                A.at(i, j) = e;
            }
        if (nonzero) return A;
    }
}

LambdaMatrix matrix_from_json(Variant var, const Json& j) {
    GradedSet rows, cols;
    for (const auto& d : j.at("rows")) rows.degs.push_back(d.get<int>());
    for (const auto& d : j.at("cols")) cols.degs.push_back(d.get<int>());
    LambdaMatrix M(var, rows, cols);
    const auto& entries = j.at("entries");
    if (entries.size() != rows.size())
        throw std::invalid_argument("matrix entries: wrong row count");
    for (size_t i = 0; i < rows.size(); ++i) {
        if (entries[i].size() != cols.size())
            throw std::invalid_argument("matrix entries: wrong column count");
        for (size_t jj = 0; jj < cols.size(); ++jj)
            M.at(i, jj) = parse_ring_element(var, entries[i][jj].get<std::string>());
    }
    M.validate();
    return M;
}

Json matrix_to_json(const LambdaMatrix& M) {
    Json entries = Json::array();
    for (size_t i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j).str());
        entries.push_back(row);
    }
    return Json{{"rows", M.row_set().degs}, {"cols", M.col_set().degs}, {"entries", entries}};
}

/* ---------- the acceptance suite ---------- */

namespace {

struct Criterion {
    CriterionResult res;
    explicit Criterion(int n, const std::string& title) {
        res.number = n;
        res.title = title;
        res.pass = true;
    }
    void add(const std::string& name, bool pass, Json data = Json()) {
        res.details.push_back({name, "", pass, false, std::move(data)});
        res.pass = res.pass && pass;
    }
};

/* indicator evaluation of the Hochschild coboundary: g is the bilinear form
 * supported on the single basis pair (sigma, tau) with value mu */
RingElement delta_g_indicator(Variant var, Mono sigma, Mono tau, Mono mu,
                              const RingElement& a, const RingElement& b, const RingElement& c) {
    auto g = [&](const RingElement& u, const RingElement& v) {
        return RingElement(var, mu) * (u.coeff(sigma) * v.coeff(tau));
    };
    return a * g(b, c) + g(a * b, c) + g(a, b * c) + g(a, b) * c;
}

struct CombinationItem {
    RingElement a, b, c;
    size_t row;  // coordinate index inside piece(|a|+|b|+|c|-1)
};

/* Verify that the given row combination of the equations delta g = m is a
 * contradiction: the left side kills every indicator cochain while the right
 * side is nonzero.  This is an oracle independent of the solver. */
bool combination_is_contradiction(const SecondaryTables& T, const std::vector<CombinationItem>& items) {
    const Variant var = T.variant();
    // left side on indicators
    for (int sb = 1; sb < 6; ++sb)
        for (int tb = 1; tb < 6; ++tb) {
            const Mono sigma{0, sb}, tau{0, tb};
            const int dg = kBDeg[sb] + kBDeg[tb] - 1;
            for (const Mono& mu : piece_monomials(dg)) {
                Gf lhs = Gf::zero();
                for (const auto& it : items) {
                    const RingElement val = delta_g_indicator(var, sigma, tau, mu, it.a, it.b, it.c);
                    const int D = *it.a.degree() + *it.b.degree() + *it.c.degree() - 1;
                    lhs += piece_coords(val, D)[it.row];
                }
                if (!lhs.is_zero()) return false;
            }
        }
    // right side
    Gf rhs = Gf::zero();
    for (const auto& it : items) {
        const RingElement val = T.m_eval(MKind::M, it.a, it.b, it.c);
        const int D = *it.a.degree() + *it.b.degree() + *it.c.degree() - 1;
        rhs += piece_coords(val, D)[it.row];
    }
    return !rhs.is_zero();
}

std::vector<CriterionResult> run_criteria_core() {
    std::vector<CriterionResult> out;
    const std::vector<int> all_t = {2, 4, 8, 16};

    {  // 1: group-algebra identities
        Criterion c(1, "group-algebra identities for t in {2,4,8,16}");
        for (int t : all_t) {
            const auto rs = verify_identities(GroupConfig{t, Field::GF2});
            c.add("all identities pass (t=" + std::to_string(t) + ")", all_pass(rs));
        }
        out.push_back(c.res);
    }

    {  // 2: resolution
        Criterion c(2, "resolution: d^2 = 0 and exactness for t in {2,4,8,16}");
        for (int t : all_t) {
            const auto P = build_resolution(GroupConfig{t, Field::GF2});
            bool ok = true;
            for (const auto& chk : check_complex(P)) ok = ok && chk.pass;
            c.add("complex checks (t=" + std::to_string(t) + ")", ok);
        }
        const auto P2 = build_resolution(GroupConfig{2, Field::GF2});
        c.add("t=2: dim ker d0 = 7", boundary_kernel_dim(P2, 0) == 7);
        out.push_back(c.res);
    }

    {  // 3: degree-2 product classes
        Criterion c(3, "degree-2 product classes");
        for (int t : all_t) {
            const GroupConfig cfg{t, Field::GF2};
            const Variant var = variant_for_t(t);
            const auto P = build_resolution(cfg);
            const auto x = standard_map(StdMap::X, P), y = standard_map(StdMap::Y, P);
            const auto eps = [](const PeriodicMap& f, int col) {
                return f.comp(0).at(0, col).augmentation();
            };
            const auto xy = x * y, yx = y * x, xx = x * x, yy = y * y;
            bool vectors_ok =
                eps(xy, 0) == Gf::zero() && eps(xy, 1) == Gf::one() &&
                eps(yx, 0) == Gf::zero() && eps(yx, 1) == Gf::one() &&
                eps(xx, 0) == special("a", cfg).pow(t - 2).augmentation() && eps(xx, 1) == Gf::one() &&
                eps(yy, 0) == Gf::one() && eps(yy, 1) == Gf::zero();
            c.add("epsilon vectors (t=" + std::to_string(t) + ")", vectors_ok);
            bool classes_ok = class_map(xy) == xy_alias(var) && class_map(yx) == xy_alias(var) &&
                              class_map(yy) == ring_mono(var, 0, B_Y2) &&
                              class_map(xx) == ring_mono(var, 0, B_X2);
            c.add("classes xy, yx, y^2, x^2 (t=" + std::to_string(t) + ")", classes_ok);
        }
        out.push_back(c.res);
    }

    {  // 4: homotopy identities
        Criterion c(4, "homotopy identities over one full period");
        for (int t : all_t) {
            const auto P = build_resolution(GroupConfig{t, Field::GF2});
            const auto x = standard_map(StdMap::X, P), y = standard_map(StdMap::Y, P),
                       p = standard_map(StdMap::P, P), w = standard_map(StdMap::W, P),
                       s = PeriodicMap::shift(P, 1);
            const std::string ts = " (t=" + std::to_string(t) + ")";
            c.add("d(p) = xy + yx" + ts, dga_differential(p) == x * y + y * x);
            c.add("d(w) = y^3" + ts, dga_differential(w) == y * y * y);
            c.add("s w + w s = y^2 s" + ts, s * w + w * s == (y * y).s_compose(1));
            if (t == 2) {
                const auto r = standard_map(StdMap::R, P);
                c.add("d(r) = x^2 + xy + y^2" + ts,
                      dga_differential(r) == x * x + x * y + y * y);
                /* The stated relation is unattainable: the conjugation defect
                 * of every null-homotopy of x^2+xy+y^2 has class x s, so the
                 * canonical r satisfies s r + r s = x s instead. */
                c.add("s r + r s = (x+y) s as stated" + ts, s * r + r * s == (x + y).s_compose(1),
                      Json{{"computed_relation", "s r + r s = x s"},
                           {"defect_class", class_map(r.s_conjugate() + r).str()},
                           {"stated_class", "x + y"}});
                c.add("s r + r s = x s (computed relation)" + ts,
                      s * r + r * s == x.s_compose(1));
            } else {
                const auto v = standard_map(StdMap::V, P);
                c.add("d(v) = x^2 + xy" + ts, dga_differential(v) == x * x + x * y);
                c.add("s v + v s = x s" + ts, s * v + v * s == x.s_compose(1));
            }
        }
        out.push_back(c.res);
    }

    {  // 5: period obstruction
        Criterion c(5, "x^2+xy+y^2 over t=2: 4-periodic infeasible, 8-periodic feasible");
        const auto P = build_resolution(GroupConfig{2, Field::GF2});
        const auto x = standard_map(StdMap::X, P), y = standard_map(StdMap::Y, P);
        const auto target = x * x + x * y + y * y;
        c.add("period 4 infeasible", !solve_homotopy(target, 4).feasible);
        const auto sol8 = solve_homotopy(target, 8);
        c.add("period 8 feasible", sol8.feasible);
        c.add("witness is a null-homotopy", sol8.feasible && dga_differential(*sol8.witness) == target);
        out.push_back(c.res);
    }

    {  // 6: f2 tables
        Criterion c(6, "f2 tables: d-identity and class vanishing on all 36 pairs");
        for (int t : {2, 4}) {
            const SecondaryTables T(GroupConfig{t, Field::GF2});
            bool d_all = true, cls_all = true, star_d = true;
            for (const auto& st : verify_f2(T)) {
                d_all = d_all && st.d_identity;
                cls_all = cls_all && st.class_vanishes;
                if (st.completed) star_d = star_d && st.d_identity && st.class_vanishes;
            }
            c.add("d-identity (t=" + std::to_string(t) + ")", d_all);
            c.add("class vanishing (t=" + std::to_string(t) + ")", cls_all);
            c.add("solver-completed entries included (t=" + std::to_string(t) + ")", star_d);
        }
        out.push_back(c.res);
    }

    {  // 7: m tables and h-class tables
        Criterion c(7, "m on B^3 and the class-of-h tables");
        for (int t : {2, 4}) {
            const SecondaryTables T(GroupConfig{t, Field::GF2});
            const Variant var = T.variant();
            bool m_ok = true, h_ok = true;
            Json mism = Json::array();
            for (int a = 0; a < 6; ++a)
                for (int b = 0; b < 6; ++b)
                    for (int cc = 0; cc < 6; ++cc) {
                        const RingElement got = T.m_base(a, b, cc);
                        const RingElement want = expected_m(var, a, b, cc);
                        if (got != want) {
                            m_ok = false;
                            mism.push_back({{"a", kBName[a]}, {"b", kBName[b]}, {"c", kBName[cc]},
                                            {"got", got.str()}, {"want", want.str()}});
                        }
                    }
            Json h_mism = Json::array();
            for (int b = 0; b < 6; ++b)
                for (int cc = 0; cc < 6; ++cc)
                    if (T.h_class(b, cc) != expected_h(var, b, cc)) {
                        h_ok = false;
                        h_mism.push_back({{"b", kBName[b]}, {"c", kBName[cc]},
                                          {"computed", T.h_class(b, cc).str()},
                                          {"stated", expected_h(var, b, cc).str()}});
                    }
            c.add("m table exact (t=" + std::to_string(t) + ")", m_ok, mism);
            /* Over t=2 the stated table assumes the conjugation relation
             * s r s^{-1} = r + x + y, whose defect class is actually x; the
             * computed invariant values differ at the r-dependent cells. */
            c.add("class-of-h table as stated (t=" + std::to_string(t) + ")", h_ok, h_mism);
        }
        out.push_back(c.res);
    }

    {  // 8: cocycle law
        Criterion c(8, "Hochschild cocycle law on s-exponent window [-2,2]");
        for (int t : {2, 4}) {
            const SecondaryTables T(GroupConfig{t, Field::GF2});
            std::vector<MKind> kinds = {MKind::M, MKind::MPrime, MKind::MDoublePrime};
            if (t >= 4) kinds.push_back(MKind::MTilde);
            for (MKind k : kinds) {
                const auto rep = verify_cocycle(T, k, 2);
                c.add("cocycle law for " + mkind_name(k) + " (t=" + std::to_string(t) + ")",
                      rep.failures == 0,
                      Json{{"tuples", rep.tuples_checked}, {"failures", rep.failures}});
            }
        }
        out.push_back(c.res);
    }

    {  // 9: gamma certificates
        Criterion c(9, "gamma is non-trivial: infeasibility certificates");
        for (int t : {2, 4, 8}) {
            const SecondaryTables T(GroupConfig{t, Field::GF2});
            const auto cert = gamma_certificate(T);
            c.add("default window infeasible (t=" + std::to_string(t) + ")", cert.infeasible,
                  Json{{"unknowns", cert.unknowns}, {"rank", cert.rank},
                       {"obstruction_triples", triples_json(T.variant(), cert.obstruction_triples)}});
        }
        {
            // t=2: the five stated equations plus their x<->y mirrors contradict
            const SecondaryTables T(GroupConfig{2, Field::GF2});
            const Variant var = T.variant();
            const Mono X{0, B_X}, Y{0, B_Y};
            const std::vector<std::array<Mono, 3>> five = {
                {Y, X, Y}, {X, Y, Y}, {Y, Y, X}, {X, X, X}, {X, Y, X}};
            auto swap_xy = [](Mono m) {
                if (m.b == B_X) return Mono{m.s, B_Y};
                if (m.b == B_Y) return Mono{m.s, B_X};
                return m;
            };
            std::vector<TripleKey> ten;
            for (const auto& tr : five) ten.push_back({tr[0], tr[1], tr[2]});
            for (const auto& tr : five)
                ten.push_back({swap_xy(tr[0]), swap_xy(tr[1]), swap_xy(tr[2])});
            std::sort(ten.begin(), ten.end());
            ten.erase(std::unique(ten.begin(), ten.end(),
                                  [](const TripleKey& p, const TripleKey& q) {
                                      return !(p < q) && !(q < p);
                                  }),
                      ten.end());
            std::vector<TripleKey> five_only;
            for (const auto& tr : five) five_only.push_back({tr[0], tr[1], tr[2]});
            c.add("five equations alone are consistent (t=2)",
                  !gamma_certificate(T, MKind::M, five_only).infeasible);
            c.add("five equations plus mirrors are contradictory (t=2)",
                  gamma_certificate(T, MKind::M, ten).infeasible);

            // the explicit row combination of the stated proof, checked against indicators
            std::vector<CombinationItem> items;
            for (const auto& tr : five) {
                items.push_back({RingElement(var, tr[0]), RingElement(var, tr[1]),
                                 RingElement(var, tr[2]), 0});
                items.push_back({RingElement(var, tr[0]), RingElement(var, tr[1]),
                                 RingElement(var, tr[2]), 1});
            }
            for (const auto& tr : five)
                items.push_back({RingElement(var, swap_xy(tr[0])), RingElement(var, swap_xy(tr[1])),
                                 RingElement(var, swap_xy(tr[2])), 0});
            c.add("stated five-equation combination certifies the contradiction (t=2)",
                  combination_is_contradiction(T, items));
        }
        {
            // t=4: the stated z-frame combination
            const SecondaryTables T(GroupConfig{4, Field::GF2});
            const Variant var = T.variant();
            const RingElement x = ring_x(var), z = ring_z(var), x2 = ring_mono(var, 0, B_X2);
            const RingElement z2 = z * z;
            std::vector<CombinationItem> items = {
                {x, z, x2, 0}, {x2, x, z, 0}, {z, x2, x, 0}, {z, z2, z, 0}, {z, z, z, 1}};
            c.add("stated z-frame combination certifies the contradiction (t=4)",
                  combination_is_contradiction(T, items));
        }
        out.push_back(c.res);
    }

    {  // 10: the 2x2 module over t=2
        Criterion c(10, "2x2 presentation over t=2: not a summand of a realizable module");
        const SecondaryTables T(GroupConfig{2, Field::GF2});
        const Variant var = T.variant();
        LambdaMatrix A(var, GradedSet{{0, 0}}, GradedSet{{-1, -1}});
        A.at(0, 0) = ring_y(var);
        A.at(0, 1) = ring_z(var);
        A.at(1, 0) = ring_x(var);
        A.at(1, 1) = ring_y(var);
        A.validate();
        const auto A1 = A.shifted(-1), A2 = A.shifted(-2);
        c.add("A.A = 0", lam_mul(A, A1).is_zero());
        const auto E = m_matrix(T, MKind::M, A, A1, A2);
        LambdaMatrix stated(var, E.row_set(), E.col_set());
        stated.at(0, 0) = ring_mono(var, 0, B_X2);
        stated.at(1, 0) = ring_mono(var, 0, B_X2);
        stated.at(1, 1) = ring_mono(var, 0, B_X2);
        c.add("m(A,A,A) equals the stated matrix [[x^2,0],[x^2,x^2]]", E == stated,
              Json{{"computed", matrix_to_json(E)}, {"stated", matrix_to_json(stated)}});
        c.add("m(A,A,A) is NOT in the indeterminacy", !indeterminacy_member(E, A, A2).member);
        c.add("exactness of the triple", check_exact(A, A1).pass() && check_exact(A1, A2).pass());
        const auto verdict = realizable_summand(T, A);
        c.add("realizable_summand returns NO", !verdict.summand_of_realizable);
        out.push_back(c.res);
    }

    {  // 11: scalar triples
        Criterion c(11, "scalar Massey triples: GF2 exhaustive, GF4 counterexample");
        {
            const SecondaryTables T(GroupConfig{2, Field::GF2});
            const auto rep = enumerate_scalar_triples(T);
            c.add("GF2, t=2: every defined triple contains 0", rep.counterexamples.empty(),
                  Json{{"defined", rep.defined}, {"members", rep.members}});
        }
        {
            const SecondaryTables T(GroupConfig{2, Field::GF4});
            const Variant var = T.variant();
            const Gf al = Gf::alpha();
            const RingElement a = ring_x(var) * al + ring_y(var);
            const RingElement b = ring_x(var) * (al * al) + ring_y(var);
            const bool defined = (a * b).is_zero() && (b * a).is_zero();
            c.add("GF4 triple (ax+y, a^2x+y, ax+y) is defined", defined);
            const RingElement val = T.m_eval(MKind::M, a, b, a);
            c.add("GF4 triple fails membership",
                  defined && !scalar_in_indeterminacy(val, a, a, 1, 1, 1));
        }
        out.push_back(c.res);
    }

    {  // 12: seeded realizability sweep over t=4
        Criterion c(12, "seeded presentations over t=4: witnesses and realizability");
        const SecondaryTables T(GroupConfig{4, Field::GF2});
        const Variant var = T.variant();
        std::mt19937_64 rng(1);
        const int n_samples = 20;
        bool all_yes = true, all_witness = true, all_tilde = true, all_bycy = true;
        for (int k = 0; k < n_samples; ++k) {
            const LambdaMatrix A = sample_presentation(var, rng);
            const auto v = realizable_summand(T, A, MKind::M);
            all_yes = all_yes && v.summand_of_realizable;
            all_witness = all_witness && prime_closed_form_witness(T, v.A, v.B, v.C).identity_holds;
            // B_y C_y = 0 for the minimal triple
            const auto By = coefficient_grid(v.B, B_Y), Cy = coefficient_grid(v.C, B_Y);
            for (size_t i = 0; i < By.size(); ++i)
                for (size_t j2 = 0; Cy.size() && j2 < Cy[0].size(); ++j2) {
                    RingElement acc(var);
                    for (size_t kk = 0; kk < Cy.size(); ++kk) acc += By[i][kk] * Cy[kk][j2];
                    all_bycy = all_bycy && acc.is_zero();
                }
            // m~ vanishes after the degree-window normalization
            const auto twI = window_twists(v.A.row_set(), 0);
            const auto twJ = window_twists(v.A.col_set(), -1);
            const auto twK = window_twists(v.B.col_set(), -8);
            const auto twL = window_twists(v.C.col_set(), -15);
            const auto An = retwist(v.A, twI, twJ);
            const auto Bn = retwist(v.B, twJ, twK);
            const auto Cn = retwist(v.C, twK, twL);
            all_tilde = all_tilde && m_matrix(T, MKind::MTilde, An, Bn, Cn).is_zero();
        }
        c.add("realizable_summand = YES on all samples", all_yes, Json{{"samples", n_samples}});
        c.add("closed-form witnesses: m'(A,B,C) = AV + WC on all samples", all_witness);
        c.add("B_y C_y = 0 on all samples", all_bycy);
        c.add("m~ vanishes on all window-normalized samples", all_tilde);
        out.push_back(c.res);
    }

    return out;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite() {
    auto first = run_criteria_core();
    Criterion c13(13, "identical seeds produce byte-identical reports");
    const auto second = run_criteria_core();
    const std::string s1 = acceptance_report_json(first).dump();
    const std::string s2 = acceptance_report_json(second).dump();
    c13.add("two full runs serialize identically", s1 == s2);
    first.push_back(c13.res);
    return first;
}

Json report_json(const RunConfig& rc, const std::string& command,
                 const std::vector<Check>& checks) {
    Json arr = Json::array();
    bool all = true;
    for (const auto& c : checks) {
        Json j{{"name", c.name},
               {"paper_ref", c.ref},
               {"status", c.info_only ? "info" : (c.pass ? "pass" : "fail")}};
        if (!c.data.is_null()) j["data"] = c.data;
        arr.push_back(j);
        if (!c.info_only) all = all && c.pass;
    }
    return Json{{"schema", 1},
                {"config", Json{{"command", command},
                                {"t", rc.t},
                                {"field", field_name(rc.field)},
                                {"window", rc.window},
                                {"max_degree", rc.max_degree},
                                {"seed", rc.seed}}},
                {"all_pass", all},
                {"checks", arr}};
}

Json acceptance_report_json(const std::vector<CriterionResult>& results) {
    Json arr = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json details = Json::array();
        for (const auto& d : r.details) {
            Json j{{"name", d.name}, {"status", d.pass ? "pass" : "fail"}};
            if (!d.data.is_null()) j["data"] = d.data;
            details.push_back(j);
        }
        arr.push_back(Json{{"criterion", r.number},
                           {"title", r.title},
                           {"status", r.pass ? "pass" : "fail"},
                           {"checks", details}});
        all = all && r.pass;
    }
    return Json{{"schema", 1}, {"suite", "acceptance"}, {"all_pass", all}, {"criteria", arr}};
}

}  // namespace qtate
