#include "qtate/massey.hpp"

#include <stdexcept>

#include "qtate/linalg.hpp"

namespace qtate {

namespace {
int floordiv(int a, int n) { return (a >= 0) ? a / n : -(((-a) + n - 1) / n); }

/* Coordinate layout of the degree-d piece of Lambda^J: per index j the
 * monomial frame of Lambda_{d + |j|}. */
struct PieceLayout {
    std::vector<std::vector<Mono>> monos;
    std::vector<size_t> offsets;
    size_t dim = 0;

    PieceLayout(const GradedSet& J, int d) {
        offsets.reserve(J.size() + 1);
        for (int dj : J.degs) {
            offsets.push_back(dim);
            monos.push_back(piece_monomials(d + dj));
            dim += monos.back().size();
        }
        offsets.push_back(dim);
    }
};

std::vector<Gf> to_coords(const PieceLayout& L, const std::vector<RingElement>& col) {
    std::vector<Gf> out(L.dim, Gf::zero());
    for (size_t j = 0; j < col.size(); ++j) {
        for (const auto& [m, c] : col[j].terms()) {
            bool placed = false;
            for (size_t k = 0; k < L.monos[j].size(); ++k)
                if (L.monos[j][k] == m) {
                    out[L.offsets[j] + k] = c;
                    placed = true;
                    break;
                }
            if (!placed) throw std::invalid_argument("to_coords: inhomogeneous column");
        }
    }
    return out;
}

std::vector<RingElement> from_coords(Variant var, const PieceLayout& L, const std::vector<Gf>& v) {
    std::vector<RingElement> col(L.monos.size(), RingElement(var));
    for (size_t j = 0; j < L.monos.size(); ++j)
        for (size_t k = 0; k < L.monos[j].size(); ++k)
            col[j].add_term(L.monos[j][k], v[L.offsets[j] + k]);
    return col;
}

std::vector<RingElement> apply_matrix(const LambdaMatrix& A, const std::vector<RingElement>& col) {
    std::vector<RingElement> out(A.rows(), RingElement(A.variant()));
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j)
            out[i] += A.at(i, j) * col[j];
    return out;
}

// basis of ker(A) in degree d, as element columns
std::vector<std::vector<RingElement>> kernel_space(const LambdaMatrix& A, int d) {
    const Variant var = A.variant();
    const PieceLayout dom(A.col_set(), d), cod(A.row_set(), d);
    LinearSystem sys(dom.dim);
    std::vector<std::vector<std::pair<size_t, Gf>>> rowbuf(cod.dim);
    for (size_t j = 0; j < A.cols(); ++j)
        for (size_t k = 0; k < dom.monos[j].size(); ++k) {
            std::vector<RingElement> e(A.cols(), RingElement(var));
            e[j] = RingElement(var, dom.monos[j][k]);
            const auto img = to_coords(cod, apply_matrix(A, e));
            for (size_t r = 0; r < cod.dim; ++r)
                sys.add_term(rowbuf[r], dom.offsets[j] + k, img[r]);
        }
    for (size_t r = 0; r < cod.dim; ++r) sys.add_equation(std::move(rowbuf[r]), Gf::zero());
    const auto res = sys.solve(true);
    std::vector<std::vector<RingElement>> out;
    for (const auto& v : res.kernel) out.push_back(from_coords(var, dom, v));
    return out;
}

// independent spanning set of im(A) in degree d, as element columns
std::vector<std::vector<RingElement>> image_space(const LambdaMatrix& A, int d) {
    const Variant var = A.variant();
    const PieceLayout cod(A.row_set(), d);
    Span sp(cod.dim);
    std::vector<std::vector<RingElement>> out;
    for (size_t j = 0; j < A.cols(); ++j) {
        // the column generator has degree -|j|; its degree-d multiples
        const int dj = A.col_set().degs[j];
        for (const Mono& mu : piece_monomials(d + dj)) {
            std::vector<RingElement> col(A.rows(), RingElement(var));
            const RingElement w(var, mu);
            for (size_t i = 0; i < A.rows(); ++i) col[i] = A.at(i, j) * w;
            if (sp.add(to_coords(cod, col))) out.push_back(std::move(col));
        }
    }
    return out;
}

/* Nakayama-minimal generators of an s-periodic graded submodule of Lambda^J,
 * given a provider of degreewise bases (element columns). */
LambdaMatrix minimal_generators(
    Variant var, const GradedSet& J,
    const std::function<std::vector<std::vector<RingElement>>(int)>& space) {
    std::vector<int> gen_degs;
    std::vector<std::vector<RingElement>> gens;
    auto prev = space(-1);
    for (int d = 0; d < 4; ++d) {
        const PieceLayout lay(J, d);
        Span radical(lay.dim);
        for (const auto& v : prev)
            for (const RingElement& w : {ring_x(var), ring_y(var)}) {
                std::vector<RingElement> vw(v.size(), RingElement(var));
                for (size_t j = 0; j < v.size(); ++j) vw[j] = v[j] * w;
                radical.add(to_coords(lay, vw));
            }
        auto cur = space(d);
        for (const auto& v : cur)
            if (radical.add(to_coords(lay, v))) {
                gen_degs.push_back(-d);
                gens.push_back(v);
            }
        prev = std::move(cur);
    }
    LambdaMatrix B(var, J, GradedSet{gen_degs});
    for (size_t k = 0; k < gens.size(); ++k)
        for (size_t j = 0; j < J.size(); ++j) B.at(j, k) = gens[k][j];
    B.validate();
    return B;
}

}  // namespace

LambdaMatrix::LambdaMatrix(Variant var, GradedSet rows, GradedSet cols)
    : var_(var), rows_(std::move(rows)), cols_(std::move(cols)),
      e_(rows_.size() * cols_.size(), RingElement(var)) {}

void LambdaMatrix::validate() const {
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < cols_.size(); ++j) {
            const RingElement& x = at(i, j);
            if (x.is_zero()) continue;
            const auto d = x.degree();
            if (!d || *d != rows_.degs[i] - cols_.degs[j])
                throw std::invalid_argument("LambdaMatrix: entry (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") not homogeneous of degree |i|-|j|");
        }
}

bool LambdaMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool LambdaMatrix::operator==(const LambdaMatrix& o) const {
    return var_ == o.var_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

LambdaMatrix LambdaMatrix::shifted(int n) const {
    LambdaMatrix r = *this;
    r.rows_ = rows_.shifted(n);
    r.cols_ = cols_.shifted(n);
    return r;
}

LambdaMatrix lam_mul(const LambdaMatrix& A, const LambdaMatrix& B) {
    if (A.variant() != B.variant()) throw std::invalid_argument("lam_mul: variant mismatch");
    if (!(A.col_set() == B.row_set()))
        throw std::invalid_argument("lam_mul: column degrees of A must equal row degrees of B");
    LambdaMatrix R(A.variant(), A.row_set(), B.col_set());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t k = 0; k < A.cols(); ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < B.cols(); ++j) R.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return R;
}

LambdaMatrix lam_add(const LambdaMatrix& A, const LambdaMatrix& B) {
    if (!(A.row_set() == B.row_set()) || !(A.col_set() == B.col_set()))
        throw std::invalid_argument("lam_add: graded set mismatch");
    LambdaMatrix R = A;
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) R.at(i, j) += B.at(i, j);
    return R;
}

LambdaMatrix m_matrix(const SecondaryTables& T, MKind kind, const LambdaMatrix& A,
                      const LambdaMatrix& B, const LambdaMatrix& C) {
    if (!(A.col_set() == B.row_set()) || !(B.col_set() == C.row_set()))
        throw std::invalid_argument("m_matrix: triple not composable");
    LambdaMatrix R(A.variant(), A.row_set().shifted(-1), C.col_set());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t l = 0; l < C.cols(); ++l)
            for (size_t j = 0; j < B.rows(); ++j)
                for (size_t k = 0; k < C.rows(); ++k)
                    R.at(i, l) += T.m_eval(kind, A.at(i, j), B.at(j, k), C.at(k, l));
    R.validate();
    return R;
}

MemberVerdict indeterminacy_member(const LambdaMatrix& E, const LambdaMatrix& A,
                                   const LambdaMatrix& C) {
    const Variant var = E.variant();
    if (!(E.row_set() == A.row_set().shifted(-1)) || !(E.col_set() == C.col_set()))
        throw std::invalid_argument("indeterminacy_member: shape mismatch");

    const GradedSet X_rows = A.col_set().shifted(-1), X_cols = C.col_set();
    const GradedSet Y_rows = A.row_set().shifted(-1), Y_cols = C.row_set();

    // unknown layout: X entries then Y entries, each a graded piece
    size_t n = 0;
    std::vector<size_t> xoff(X_rows.size() * X_cols.size());
    std::vector<size_t> yoff(Y_rows.size() * Y_cols.size());
    for (size_t j = 0; j < X_rows.size(); ++j)
        for (size_t l = 0; l < X_cols.size(); ++l) {
            xoff[j * X_cols.size() + l] = n;
            n += piece_monomials(X_rows.degs[j] - X_cols.degs[l]).size();
        }
    for (size_t i = 0; i < Y_rows.size(); ++i)
        for (size_t k = 0; k < Y_cols.size(); ++k) {
            yoff[i * Y_cols.size() + k] = n;
            n += piece_monomials(Y_rows.degs[i] - Y_cols.degs[k]).size();
        }

    LinearSystem sys(n);
    for (size_t i = 0; i < E.rows(); ++i)
        for (size_t l = 0; l < E.cols(); ++l) {
            const int D = E.row_set().degs[i] - E.col_set().degs[l];
            const auto rows_m = piece_monomials(D);
            std::vector<std::vector<std::pair<size_t, Gf>>> rowbuf(rows_m.size());
            // sum_j A(i,j) X(j,l)
            for (size_t j = 0; j < A.cols(); ++j) {
                if (A.at(i, j).is_zero()) continue;
                const auto cols_m = piece_monomials(X_rows.degs[j] - X_cols.degs[l]);
                for (size_t k = 0; k < cols_m.size(); ++k) {
                    const auto coords = piece_coords(A.at(i, j) * RingElement(var, cols_m[k]), D);
                    for (size_t md = 0; md < rows_m.size(); ++md)
                        sys.add_term(rowbuf[md], xoff[j * X_cols.size() + l] + k, coords[md]);
                }
            }
            // sum_k Y(i,k) C(k,l)
            for (size_t k2 = 0; k2 < C.rows(); ++k2) {
                if (C.at(k2, l).is_zero()) continue;
                const auto cols_m = piece_monomials(Y_rows.degs[i] - Y_cols.degs[k2]);
                for (size_t k = 0; k < cols_m.size(); ++k) {
                    const auto coords = piece_coords(RingElement(var, cols_m[k]) * C.at(k2, l), D);
                    for (size_t md = 0; md < rows_m.size(); ++md)
                        sys.add_term(rowbuf[md], yoff[i * Y_cols.size() + k2] + k, coords[md]);
                }
            }
            const auto rhs = piece_coords(E.at(i, l), D);
            for (size_t md = 0; md < rows_m.size(); ++md)
                sys.add_equation(std::move(rowbuf[md]), rhs[md]);
        }

    const auto res = sys.solve();
    MemberVerdict v;
    v.member = res.feasible;
    v.unknowns = n;
    v.rank = res.rank;
    if (res.feasible) {
        LambdaMatrix X(var, X_rows, X_cols), Y(var, Y_rows, Y_cols);
        for (size_t j = 0; j < X_rows.size(); ++j)
            for (size_t l = 0; l < X_cols.size(); ++l) {
                const auto monos = piece_monomials(X_rows.degs[j] - X_cols.degs[l]);
                for (size_t k = 0; k < monos.size(); ++k)
                    X.at(j, l).add_term(monos[k], res.solution[xoff[j * X_cols.size() + l] + k]);
            }
        for (size_t i = 0; i < Y_rows.size(); ++i)
            for (size_t k2 = 0; k2 < Y_cols.size(); ++k2) {
                const auto monos = piece_monomials(Y_rows.degs[i] - Y_cols.degs[k2]);
                for (size_t k = 0; k < monos.size(); ++k)
                    Y.at(i, k2).add_term(monos[k], res.solution[yoff[i * Y_cols.size() + k2] + k]);
            }
        v.X = std::move(X);
        v.Y = std::move(Y);
    }
    return v;
}

LambdaMatrix minimal_kernel_generators(const LambdaMatrix& A) {
    A.validate();
    return minimal_generators(A.variant(), A.col_set(),
                              [&](int d) { return kernel_space(A, d); });
}

LambdaMatrix minimize_columns(const LambdaMatrix& A) {
    A.validate();
    return minimal_generators(A.variant(), A.row_set(),
                              [&](int d) { return image_space(A, d); });
}

size_t kernel_dim(const LambdaMatrix& A, int degree) {
    return kernel_space(A, degree).size();
}

std::vector<std::vector<RingElement>> kernel_basis(const LambdaMatrix& A, int degree) {
    return kernel_space(A, degree);
}

size_t image_dim(const LambdaMatrix& A, int degree) {
    return image_space(A, degree).size();
}

ExactnessReport check_exact(const LambdaMatrix& A, const LambdaMatrix& B) {
    ExactnessReport rep;
    rep.composite_zero = lam_mul(A, B).is_zero();
    rep.dims_match = true;
    for (int d = 0; d < 4; ++d) {
        const size_t k = kernel_dim(A, d), im = image_dim(B, d);
        rep.dims.emplace_back(k, im);
        if (k != im) rep.dims_match = false;
    }
    return rep;
}

RealizabilityVerdict realizable_summand(const SecondaryTables& T, const LambdaMatrix& A,
                                        MKind kind) {
    A.validate();
    RealizabilityVerdict out;
    out.A = minimize_columns(A);
    out.B = minimal_kernel_generators(out.A);
    out.C = minimal_kernel_generators(out.B);
    out.exact_ab = check_exact(out.A, out.B);
    out.exact_bc = check_exact(out.B, out.C);
    out.value = m_matrix(T, kind, out.A, out.B, out.C);
    out.membership = indeterminacy_member(out.value, out.A, out.C);
    out.summand_of_realizable = out.membership.member;
    if (kind != MKind::M && T.variant() == Variant::T4)
        out.prime_witness = prime_closed_form_witness(T, out.A, out.B, out.C);
    return out;
}

namespace {

using Grid = std::vector<std::vector<RingElement>>;

Grid grid_of(const LambdaMatrix& M) {
    Grid g(M.rows(), std::vector<RingElement>(M.cols(), RingElement(M.variant())));
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) g[i][j] = M.at(i, j);
    return g;
}

Grid grid_mul(Variant var, const Grid& A, const Grid& B) {
    if (A.empty() || B.empty()) return Grid(A.size());
    Grid R(A.size(), std::vector<RingElement>(B[0].size(), RingElement(var)));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t k = 0; k < B.size(); ++k)
            for (size_t j = 0; j < B[0].size(); ++j) R[i][j] += A[i][k] * B[k][j];
    return R;
}

Grid grid_add(const Grid& A, const Grid& B) {
    Grid R = A;
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[i].size(); ++j) R[i][j] += B[i][j];
    return R;
}

Grid grid_scale(const Grid& A, const RingElement& w) {
    Grid R = A;
    for (auto& row : R)
        for (auto& x : row) x = x * w;
    return R;
}

bool grid_equal(const Grid& A, const Grid& B) {
    if (A.size() != B.size()) return false;
    for (size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != B[i].size()) return false;
        for (size_t j = 0; j < A[i].size(); ++j)
            if (A[i][j] != B[i][j]) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<RingElement>> coefficient_grid(const LambdaMatrix& M, int b_idx) {
    Grid g(M.rows(), std::vector<RingElement>(M.cols(), RingElement(M.variant())));
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j)
            for (const auto& [m, c] : M.at(i, j).terms())
                if (m.b == b_idx) g[i][j].add_term(Mono{m.s, B_ONE}, c);
    return g;
}

PrimeWitness prime_closed_form_witness(const SecondaryTables& T, const LambdaMatrix& A,
                                       const LambdaMatrix& B, const LambdaMatrix& C) {
    const Variant var = T.variant();
    if (var != Variant::T4)
        throw std::invalid_argument("prime_closed_form_witness: t >= 4 only");
    const RingElement x = ring_x(var), x2 = ring_mono(var, 0, B_X2),
                      y2 = ring_mono(var, 0, B_Y2);
    const Grid Ax = coefficient_grid(A, B_X), Ax2 = coefficient_grid(A, B_X2),
               By = coefficient_grid(B, B_Y), Cy2 = coefficient_grid(C, B_Y2);
    PrimeWitness out;
    out.W = grid_add(grid_scale(grid_mul(var, Ax, By), x),
                     grid_scale(grid_mul(var, Ax2, By), x2));
    out.V = grid_scale(grid_mul(var, By, Cy2), y2);
    const Grid lhs = grid_of(m_matrix(T, MKind::MPrime, A, B, C));
    const Grid rhs = grid_add(grid_mul(var, grid_of(A), out.V), grid_mul(var, out.W, grid_of(C)));
    out.identity_holds = grid_equal(lhs, rhs);
    return out;
}

LambdaMatrix retwist(const LambdaMatrix& M, const std::vector<int>& row_twists,
                     const std::vector<int>& col_twists) {
    GradedSet rows = M.row_set(), cols = M.col_set();
    for (size_t i = 0; i < rows.size(); ++i) rows.degs[i] -= 4 * row_twists[i];
    for (size_t j = 0; j < cols.size(); ++j) cols.degs[j] -= 4 * col_twists[j];
    LambdaMatrix R(M.variant(), rows, cols);
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j)
            R.at(i, j) = M.at(i, j).s_shift(col_twists[j] - row_twists[i]);
    R.validate();
    return R;
}

std::vector<int> window_twists(const GradedSet& s, int lo) {
    std::vector<int> out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[i] = floordiv(s.degs[i] - lo, 4);
    return out;
}

bool scalar_in_indeterminacy(const RingElement& value, const RingElement& a,
                             const RingElement& c, int deg_a, int deg_b, int deg_c) {
    const Variant var = value.variant();
    const int D = deg_a + deg_b + deg_c - 1;
    const auto xi_m = piece_monomials(deg_b + deg_c - 1);
    const auto eta_m = piece_monomials(deg_a + deg_b - 1);
    LinearSystem sys(xi_m.size() + eta_m.size());
    const auto rows_m = piece_monomials(D);
    std::vector<std::vector<std::pair<size_t, Gf>>> rowbuf(rows_m.size());
    for (size_t k = 0; k < xi_m.size(); ++k) {
        const auto coords = piece_coords(a * RingElement(var, xi_m[k]), D);
        for (size_t md = 0; md < rows_m.size(); ++md) sys.add_term(rowbuf[md], k, coords[md]);
    }
    for (size_t k = 0; k < eta_m.size(); ++k) {
        const auto coords = piece_coords(RingElement(var, eta_m[k]) * c, D);
        for (size_t md = 0; md < rows_m.size(); ++md)
            sys.add_term(rowbuf[md], xi_m.size() + k, coords[md]);
    }
    const auto rhs = piece_coords(value, D);
    for (size_t md = 0; md < rows_m.size(); ++md)
        sys.add_equation(std::move(rowbuf[md]), rhs[md]);
    return sys.solve().feasible;
}

ScalarTripleReport enumerate_scalar_triples(const SecondaryTables& T, int max_degree) {
    const Variant var = T.variant();
    const Field field = T.config().field;
    ScalarTripleReport rep;

    // all nonzero homogeneous elements per degree
    std::vector<std::vector<RingElement>> by_degree(static_cast<size_t>(max_degree) + 1);
    const auto scalars = field_elements(field);
    for (int d = 0; d <= max_degree; ++d) {
        const auto monos = piece_monomials(d);
        std::vector<RingElement> elems;
        std::vector<size_t> idx(monos.size(), 0);
        // odometer over coefficient tuples
        while (true) {
            RingElement e(var);
            for (size_t k = 0; k < monos.size(); ++k) e.add_term(monos[k], scalars[idx[k]]);
            if (!e.is_zero()) elems.push_back(e);
            size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == scalars.size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
        by_degree[static_cast<size_t>(d)] = std::move(elems);
    }

    for (int da = 0; da <= max_degree; ++da)
        for (int db = 0; db <= max_degree; ++db)
            for (int dc = 0; dc <= max_degree; ++dc)
                for (const auto& a : by_degree[static_cast<size_t>(da)])
                    for (const auto& b : by_degree[static_cast<size_t>(db)]) {
                        if (!(a * b).is_zero()) {
                            rep.considered += by_degree[static_cast<size_t>(dc)].size();
                            continue;
                        }
                        for (const auto& c : by_degree[static_cast<size_t>(dc)]) {
                            ++rep.considered;
                            if (!(b * c).is_zero()) continue;
                            ++rep.defined;
                            const RingElement val = T.m_eval(MKind::M, a, b, c);
                            if (scalar_in_indeterminacy(val, a, c, da, db, dc)) {
                                ++rep.members;
                            } else if (rep.counterexamples.size() < 10) {
                                rep.counterexamples.push_back({a, b, c, val, false});
                            }
                        }
                    }
    return rep;
}

}  // namespace qtate
