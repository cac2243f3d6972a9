#include "qtate/secondary.hpp"

#include <stdexcept>

#include "qtate/linalg.hpp"

namespace qtate {

namespace {
int floordiv(int a, int n) { return (a >= 0) ? a / n : -(((-a) + n - 1) / n); }
}  // namespace

std::string mkind_name(MKind k) {
    switch (k) {
        case MKind::M: return "m";
        case MKind::MPrime: return "m'";
        case MKind::MDoublePrime: return "m''";
        case MKind::MTilde: return "m~";
    }
    return "?";
}

MKind parse_mkind(const std::string& s) {
    if (s == "m") return MKind::M;
    if (s == "m'" || s == "mprime") return MKind::MPrime;
    if (s == "m''" || s == "mdoubleprime") return MKind::MDoublePrime;
    if (s == "m~" || s == "mtilde") return MKind::MTilde;
    throw std::invalid_argument("unknown secondary product kind: " + s);
}

SecondaryTables::SecondaryTables(const GroupConfig& cfg, int star_variation)
    : cfg_(cfg), var_(variant_for_t(cfg.t)),
      P_(std::make_shared<PeriodicComplex>(build_resolution(cfg))) {
    const PeriodicMap x = standard_map(StdMap::X, *P_);
    const PeriodicMap y = standard_map(StdMap::Y, *P_);
    f1_b_[B_ONE] = PeriodicMap::identity(*P_);
    f1_b_[B_X] = x;
    f1_b_[B_Y] = y;
    f1_b_[B_X2] = x * x;
    f1_b_[B_Y2] = y * y;
    f1_b_[B_X2Y] = x * x * y;
    build_f2(star_variation);
    build_h_and_m();
}

PeriodicMap SecondaryTables::f1_mono(Mono m) const { return f1_b_[m.b].s_compose(m.s); }

PeriodicMap SecondaryTables::f1(const RingElement& u) const {
    if (u.is_zero()) throw std::invalid_argument("f1: zero element has no defined degree");
    if (!u.is_homogeneous()) throw std::invalid_argument("f1: element not homogeneous");
    std::optional<PeriodicMap> acc;
    for (const auto& [m, c] : u.terms()) {
        PeriodicMap part = f1_mono(m) * c;
        acc = acc ? *acc + part : part;
    }
    return *acc;
}

void SecondaryTables::build_f2(int star_variation) {
    const PeriodicMap x = f1_b_[B_X], y = f1_b_[B_Y];
    const PeriodicMap x2 = f1_b_[B_X2], y2 = f1_b_[B_Y2], x2y = f1_b_[B_X2Y];
    const PeriodicMap p = standard_map(StdMap::P, *P_);
    const PeriodicMap w = standard_map(StdMap::W, *P_);

    // zero of the right degree everywhere first
    for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
            f2_[b][c] = PeriodicMap::zero(*P_, kBDeg[b] + kBDeg[c] - 1, 8);

    if (var_ == Variant::T2) {
        const PeriodicMap r = standard_map(StdMap::R, *P_);
        f2_[B_X][B_Y] = r;
        f2_[B_X][B_X2] = x * r + r * y + w;
        f2_[B_X][B_Y2] = r * y + w;
        f2_[B_X][B_X2Y] = x * r * y + r * y2 + w * y;
        f2_[B_Y][B_X] = p + r;
        f2_[B_Y][B_X2] = p * x + x * p + x * y;
        f2_[B_Y][B_Y2] = w;
        f2_[B_Y][B_X2Y] = y * r * y + p * y2 + x * w + y * w;
        f2_[B_X2][B_X] = x * r + r * y + w;
        f2_[B_X2][B_X2] = x * r * x + r * y * x + w * x;
        f2_[B_X2][B_Y2] = r * y2 + x * w + y * w;
        f2_[B_Y2][B_X] = y * p + y * r + w + p * x + x * p + x * y;
        f2_[B_Y2][B_Y] = w;
        f2_[B_Y2][B_X2] = y2 * r + y2 * p + w * x + w * y;
        f2_[B_Y2][B_Y2] = w * y;
        f2_[B_X2Y][B_X] = x2 * p + x * r * y + r * y2 + w * y + x2 * y;
        f2_[B_X2Y][B_Y] = r * y2 + x * w + y * w;
        star_[B_X2][B_X2Y] = true;
        star_[B_Y2][B_X2Y] = true;
        star_[B_X2Y][B_X2] = true;
        star_[B_X2Y][B_Y2] = true;
        star_[B_X2Y][B_X2Y] = true;
    } else {
        const PeriodicMap v = standard_map(StdMap::V, *P_);
        const PeriodicMap x3 = x * x2;
        f2_[B_X][B_Y] = v;
        f2_[B_X][B_X2] = x * v;
        f2_[B_X][B_Y2] = v * y;
        f2_[B_X][B_X2Y] = x * v * y + v * y2 + x * w;
        f2_[B_Y][B_X] = p + v;
        f2_[B_Y][B_X2] = p * x + x * p + x2;
        f2_[B_Y][B_Y2] = w;
        f2_[B_Y][B_X2Y] = y * v * y + p * y2 + x * w;
        f2_[B_X2][B_X] = x * v;
        f2_[B_X2][B_X2] = x2 * v + x * v * y + v * y2 + x * w;
        f2_[B_X2][B_Y2] = v * y2 + x * w;
        f2_[B_X2][B_X2Y] = x2 * v * y + x * v * y2 + x2 * w;
        f2_[B_Y2][B_X] = y * p + p * y + v * y;
        f2_[B_Y2][B_Y] = w;
        f2_[B_Y2][B_X2] = y2 * v + y2 * p + w * x;
        f2_[B_Y2][B_Y2] = w * y;
        f2_[B_Y2][B_X2Y] = y2 * v * y + y2 * p * y + w * x * y;
        f2_[B_X2Y][B_X] = x2 * p + x * v * y + v * y2 + x * w + x2 * y;
        f2_[B_X2Y][B_Y] = v * y2 + x * w;
        f2_[B_X2Y][B_X2] = x2 * p * x + x * v * y * x + v * y2 * x + x * w * x;
        f2_[B_X2Y][B_Y2] = x2 * w;
        f2_[B_X2Y][B_X2Y] = x2 * y * v * y + x2 * p * y2 + x3 * w;
    }

    // complete the "*" cells by solving for a class-constrained null-homotopy
    for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c) {
            if (!star_[b][c]) continue;
            const RingElement bc = ring_mono(var_, 0, b) * ring_mono(var_, 0, c);
            PeriodicMap target = f1_b_[b] * f1_b_[c];
            if (!bc.is_zero()) target = target + f1(bc);
            const bool want_kernel = star_variation > 0;
            auto sol = solve_homotopy(target, 8, true, want_kernel);
            if (!sol.feasible)
                throw std::runtime_error("f2 completion infeasible at (" + std::string(kBName[b]) +
                                         ", " + std::string(kBName[c]) + ")");
            PeriodicMap h = *sol.witness;
            if (star_variation > 0 && !sol.kernel.empty())
                h = h + sol.kernel[static_cast<size_t>(star_variation - 1) % sol.kernel.size()];
            f2_[b][c] = h;
        }
}

void SecondaryTables::build_h_and_m() {
    for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
            h_class_[b][c] = class_map(f2_[b][c].s_conjugate() + f2_[b][c]);

    for (int ai = 0; ai < 12; ++ai) {
        const PeriodicMap f1a =
            ai < 6 ? f1_b_[ai] : f1_b_[ai - 6].s_compose(1);
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                m_base_[ai][b][c] = class_map(f1a * f2_[b][c]);
    }
}

RingElement SecondaryTables::m_eval(MKind kind, Mono a, Mono b, Mono c) const {
    switch (kind) {
        case MKind::M: {
            const int q = floordiv(a.s, 2);
            const int e = a.s - 2 * q;
            return m_base_[a.b + 6 * e][b.b][c.b].s_shift(2 * q + b.s + c.s);
        }
        case MKind::MPrime:
            return m_base_[a.b][b.b][c.b].s_shift(a.s + b.s + c.s);
        case MKind::MDoublePrime:
            return m_eval(MKind::M, a, b, c) + m_eval(MKind::MPrime, a, b, c);
        case MKind::MTilde: {
            if (var_ != Variant::T4)
                throw std::invalid_argument("m~ is defined for the t >= 4 variant only");
            const RingElement ea(var_, a), eb(var_, b), ec(var_, c);
            RingElement out = m_eval(MKind::MDoublePrime, a, b, c);
            out += ea * g_cochain(eb, ec);
            out += g_cochain(ea * eb, ec);
            out += g_cochain(ea, eb * ec);
            out += g_cochain(ea, eb) * ec;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

RingElement SecondaryTables::m_eval(MKind kind, const RingElement& a, const RingElement& b,
                                    const RingElement& c) const {
    RingElement out(var_);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            for (const auto& [mc, cc] : c.terms())
                out += m_eval(kind, ma, mb, mc) * (ca * cb * cc);
    return out;
}

RingElement SecondaryTables::g_cochain(const RingElement& u, const RingElement& v) const {
    RingElement out(var_);
    if (var_ != Variant::T4 || u.is_zero() || v.is_zero()) return out;
    const ZElement zu = to_z_form(u), zv = to_z_form(v);
    Gf cu = Gf::zero();
    for (const auto& [m, c] : zu.terms())
        if (m.s == -1 && m.zb == Z_X2) cu = c;
    if (cu.is_zero()) return out;
    ZElement zr;
    for (const auto& [m, c] : zv.terms()) {
        if (m.zb == Z_X) zr.add_term(ZMono{m.s - 1, Z_Z2}, cu * c);
        else if (m.zb == Z_Z) zr.add_term(ZMono{m.s - 1, Z_X2}, cu * c);
    }
    return from_z_form(var_, zr);
}

std::vector<PairStatus> verify_f2(const SecondaryTables& T) {
    std::vector<PairStatus> out;
    const Variant var = T.variant();
    for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c) {
            const RingElement bc = ring_mono(var, 0, b) * ring_mono(var, 0, c);
            PeriodicMap target = T.f1_mono(Mono{0, b}) * T.f1_mono(Mono{0, c});
            if (!bc.is_zero()) target = target + T.f1(bc);
            const bool d_ok = dga_differential(T.f2(b, c)) == target;
            const bool c_ok = class_map(T.f2(b, c)).is_zero();
            out.push_back({b, c, d_ok, c_ok, T.f2_completed_by_solver(b, c)});
        }
    return out;
}

CocycleReport verify_cocycle(const SecondaryTables& T, MKind kind, int window) {
    CocycleReport rep;
    const Variant var = T.variant();
    std::vector<Mono> slots;
    for (int s = -window; s <= window; ++s)
        for (int b = 0; b < 6; ++b) slots.push_back(Mono{s, b});

    for (const Mono& a : slots) {
        const RingElement ea(var, a);
        for (const Mono& b : slots) {
            const RingElement eb(var, b);
            const RingElement eab = ea * eb;
            for (const Mono& c : slots) {
                const RingElement ec(var, c);
                const RingElement ebc = eb * ec;
                for (const Mono& d : slots) {
                    const RingElement ed(var, d);
                    RingElement law = ea * T.m_eval(kind, eb, ec, ed);
                    law += T.m_eval(kind, eab, ec, ed);
                    law += T.m_eval(kind, ea, ebc, ed);
                    law += T.m_eval(kind, ea, eb, ec * ed);
                    law += T.m_eval(kind, a, b, c) * ed;
                    ++rep.tuples_checked;
                    if (!law.is_zero()) {
                        ++rep.failures;
                        if (rep.failing.size() < 5) rep.failing.push_back({a, b, c, d});
                    }
                }
            }
        }
    }
    return rep;
}

std::vector<TripleKey> default_certificate_triples(Variant, int max_total_degree) {
    std::vector<TripleKey> out;
    std::vector<Mono> monos;
    for (int b = 1; b < 6; ++b) monos.push_back(Mono{0, b});
    for (const Mono& a : monos)
        for (const Mono& b : monos)
            for (const Mono& c : monos)
                if (kBDeg[a.b] + kBDeg[b.b] + kBDeg[c.b] <= max_total_degree)
                    out.push_back({a, b, c});
    return out;
}

Certificate gamma_certificate(const SecondaryTables& T, MKind kind,
                              std::vector<TripleKey> triples) {
    const Variant var = T.variant();
    if (triples.empty()) triples = default_certificate_triples(var);

    // collect the unknown pairs g(sigma, tau) that can occur
    std::map<std::pair<Mono, Mono>, size_t> pair_offset;
    size_t n_unknowns = 0;
    auto note_pair = [&](Mono s, Mono t) {
        const auto key = std::make_pair(s, t);
        if (pair_offset.count(key)) return;
        pair_offset[key] = 0;  // offsets assigned after collection
        (void)n_unknowns;
    };
    auto note_product_pairs = [&](const RingElement& prod, Mono other, bool prod_first) {
        for (const auto& [m, c] : prod.terms()) {
            (void)c;
            if (prod_first) note_pair(m, other);
            else note_pair(other, m);
        }
    };
    for (const auto& tr : triples) {
        const RingElement ea(var, tr.a), eb(var, tr.b), ec(var, tr.c);
        note_pair(tr.b, tr.c);
        note_pair(tr.a, tr.b);
        note_product_pairs(ea * eb, tr.c, true);
        note_product_pairs(eb * ec, tr.a, false);
    }
    for (auto& [key, off] : pair_offset) {
        off = n_unknowns;
        n_unknowns += piece_monomials(key.first.degree() + key.second.degree() - 1).size();
    }

    LinearSystem sys(n_unknowns);
    std::vector<size_t> row_triple;  // row index -> triple index

    for (size_t ti = 0; ti < triples.size(); ++ti) {
        const auto& tr = triples[ti];
        const RingElement ea(var, tr.a), eb(var, tr.b), ec(var, tr.c);
        const int D = tr.a.degree() + tr.b.degree() + tr.c.degree() - 1;
        const auto rows_m = piece_monomials(D);
        std::vector<std::vector<std::pair<size_t, Gf>>> rowbuf(rows_m.size());

        // contribution of w * g(sigma, tau) (ring is commutative)
        auto contribute = [&](Mono s, Mono t, const RingElement& w) {
            if (w.is_zero()) return;
            const size_t off = pair_offset.at(std::make_pair(s, t));
            const int dg = s.degree() + t.degree() - 1;
            const auto cols_m = piece_monomials(dg);
            for (size_t k = 0; k < cols_m.size(); ++k) {
                const RingElement img = w * RingElement(var, cols_m[k]);
                const auto coords = piece_coords(img, D);
                for (size_t md = 0; md < rows_m.size(); ++md)
                    sys.add_term(rowbuf[md], off + k, coords[md]);
            }
        };

        const RingElement eab = ea * eb, ebc = eb * ec;
        contribute(tr.b, tr.c, ea);                                   // a . g(b,c)
        for (const auto& [m, c] : eab.terms())                        // g(ab, c)
            contribute(m, tr.c, RingElement::one(var) * c);
        for (const auto& [m, c] : ebc.terms())                        // g(a, bc)
            contribute(tr.a, m, RingElement::one(var) * c);
        contribute(tr.a, tr.b, ec);                                   // g(a,b) . c

        const auto rhs = piece_coords(T.m_eval(kind, tr.a, tr.b, tr.c), D);
        for (size_t md = 0; md < rows_m.size(); ++md) {
            sys.add_equation(std::move(rowbuf[md]), rhs[md]);
            row_triple.push_back(ti);
        }
    }

    const auto res = sys.solve(false, true);
    Certificate cert;
    cert.unknowns = n_unknowns;
    cert.equations = sys.equations();
    cert.rank = res.rank;
    cert.infeasible = !res.feasible;
    if (!res.feasible) {
        std::vector<bool> seen(triples.size(), false);
        for (size_t r = 0; r < res.certificate.size(); ++r)
            if (!res.certificate[r].is_zero()) seen[row_triple[r]] = true;
        for (size_t ti = 0; ti < triples.size(); ++ti)
            if (seen[ti]) cert.obstruction_triples.push_back(triples[ti]);
    } else {
        for (const auto& [key, off] : pair_offset) {
            const int dg = key.first.degree() + key.second.degree() - 1;
            const auto cols_m = piece_monomials(dg);
            std::vector<Gf> coords(cols_m.size());
            for (size_t k = 0; k < cols_m.size(); ++k) coords[k] = res.solution[off + k];
            const RingElement val = from_piece_coords(var, dg, coords);
            if (!val.is_zero()) cert.witness[key] = val;
        }
    }
    return cert;
}

}  // namespace qtate
