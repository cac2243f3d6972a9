#include "qtate/resolution.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qtate/linalg.hpp"

namespace qtate {

namespace {

int floordiv(int a, int n) { return (a >= 0) ? a / n : -(((-a) + n - 1) / n); }
}  // namespace

KgMatrix KgMatrix::identity(const GroupConfig& cfg, int n) {
    KgMatrix m(cfg, n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = AlgebraElement::one(cfg);
    return m;
}

KgMatrix operator*(const KgMatrix& A, const KgMatrix& B) {
    if (A.cols_ != B.rows_) throw std::invalid_argument("KgMatrix: shape mismatch in product");
    KgMatrix r(A.cfg_, A.rows_, B.cols_);
    for (int i = 0; i < A.rows_; ++i)
        for (int k = 0; k < A.cols_; ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (int j = 0; j < B.cols_; ++j)
                if (!B.at(k, j).is_zero()) r.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return r;
}

KgMatrix operator+(const KgMatrix& A, const KgMatrix& B) {
    if (A.rows_ != B.rows_ || A.cols_ != B.cols_)
        throw std::invalid_argument("KgMatrix: shape mismatch in sum");
    KgMatrix r = A;
    for (int i = 0; i < A.rows_; ++i)
        for (int j = 0; j < A.cols_; ++j) r.at(i, j) += B.at(i, j);
    return r;
}

KgMatrix KgMatrix::operator*(Gf c) const {
    KgMatrix r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

bool KgMatrix::operator==(const KgMatrix& B) const {
    if (rows_ != B.rows_ || cols_ != B.cols_) return false;
    return e_ == B.e_;
}

bool KgMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

PeriodicComplex build_resolution(const GroupConfig& cfg) {
    cfg.validate(1 << 20);
    const AlgebraElement a = special("a", cfg), b = special("b", cfg), c = special("c", cfg),
                         N = special("N", cfg);
    PeriodicComplex P;
    P.cfg = cfg;
    P.bnd[1] = KgMatrix(cfg, 1, 2);
    P.bnd[1].at(0, 0) = a;
    P.bnd[1].at(0, 1) = b;
    P.bnd[2] = KgMatrix(cfg, 2, 2);
    P.bnd[2].at(0, 0) = a.pow(cfg.t - 1);
    P.bnd[2].at(0, 1) = c;
    P.bnd[2].at(1, 0) = b;
    P.bnd[2].at(1, 1) = a;
    P.bnd[3] = KgMatrix(cfg, 2, 1);
    P.bnd[3].at(0, 0) = a;
    P.bnd[3].at(1, 0) = c;
    P.bnd[0] = KgMatrix(cfg, 1, 1);
    P.bnd[0].at(0, 0) = N;
    return P;
}

/* k-matrix of left multiplication by the entries of M, acting on coefficient
 * columns: (4t * rows) x (4t * cols). */
static std::vector<std::vector<Gf>> left_mult_matrix(const KgMatrix& M) {
    const GroupConfig& cfg = M.config();
    const size_t n = static_cast<size_t>(cfg.order());
    std::vector<std::vector<Gf>> rows(M.rows() * n, std::vector<Gf>(M.cols() * n, Gf::zero()));
    AlgebraElement probe(cfg);
    for (int c = 0; c < M.cols(); ++c)
        for (size_t q = 0; q < n; ++q) {
            // image of basis vector e_c * (group element q)
            for (int r = 0; r < M.rows(); ++r) {
                const AlgebraElement& v = M.at(r, c);
                if (v.is_zero()) continue;
                const AlgebraElement img = v * AlgebraElement::from_group(cfg, probe.element_at(q));
                for (size_t p = 0; p < n; ++p)
                    rows[r * n + p][c * n + q] += img.coeff_at(p);
            }
        }
    return rows;
}

size_t boundary_image_dim(const PeriodicComplex& P, int j) {
    const KgMatrix& M = P.boundary(j);
    return gf_rank(left_mult_matrix(M), static_cast<size_t>(M.cols()) * P.cfg.order());
}

size_t boundary_kernel_dim(const PeriodicComplex& P, int j) {
    const KgMatrix& M = P.boundary(j);
    const size_t cols = static_cast<size_t>(M.cols()) * P.cfg.order();
    return cols - gf_rank(left_mult_matrix(M), cols);
}

std::vector<ComplexCheck> check_complex(const PeriodicComplex& P) {
    std::vector<ComplexCheck> out;
    for (int j = 0; j < 4; ++j) {
        const KgMatrix prod = P.boundary(j) * P.boundary(j + 1);
        out.push_back({"d" + std::to_string(j) + " . d" + std::to_string(j + 1) + " = 0",
                       prod.is_zero(), ""});
    }
    for (int j = 0; j < 4; ++j) {
        const size_t k = boundary_kernel_dim(P, j);
        const size_t im = boundary_image_dim(P, j + 1);
        std::ostringstream os;
        os << "dim ker d" << j << " = " << k << ", dim im d" << j + 1 << " = " << im;
        out.push_back({"exact at spot " + std::to_string(j), k == im, os.str()});
    }
    return out;
}

PeriodicMap::PeriodicMap(const PeriodicComplex& P, int degree, int period)
    : P_(&P), degree_(degree), period_(period) {
    if (period != 4 && period != 8) throw std::invalid_argument("PeriodicMap: period must be 4 or 8");
    comps_.reserve(static_cast<size_t>(period));
    for (int j = 0; j < period; ++j)
        comps_.emplace_back(P.cfg, PeriodicComplex::rank(j), PeriodicComplex::rank(j + degree));
}

PeriodicMap PeriodicMap::zero(const PeriodicComplex& P, int degree, int period) {
    return PeriodicMap(P, degree, period);
}

PeriodicMap PeriodicMap::identity(const PeriodicComplex& P) {
    PeriodicMap f(P, 0, 4);
    for (int j = 0; j < 4; ++j) f.comps_[static_cast<size_t>(j)] = KgMatrix::identity(P.cfg, PeriodicComplex::rank(j));
    return f;
}

PeriodicMap PeriodicMap::shift(const PeriodicComplex& P, int i) {
    PeriodicMap f(P, 4 * i, 4);
    for (int j = 0; j < 4; ++j) f.comps_[static_cast<size_t>(j)] = KgMatrix::identity(P.cfg, PeriodicComplex::rank(j));
    return f;
}

void PeriodicMap::check_compatible(const PeriodicMap& g) const {
    if (P_ == nullptr || g.P_ == nullptr) throw std::invalid_argument("PeriodicMap: uninitialized");
    if (P_->cfg != g.P_->cfg) throw std::invalid_argument("PeriodicMap: different complexes");
}

PeriodicMap operator*(const PeriodicMap& f, const PeriodicMap& g) {
    f.check_compatible(g);
    const int period = std::lcm(f.period_, g.period_);
    PeriodicMap r(*f.P_, f.degree_ + g.degree_, period);
    for (int j = 0; j < period; ++j) r.comps_[static_cast<size_t>(j)] = f.comp(j) * g.comp(j + f.degree_);
    return r;
}

PeriodicMap operator+(const PeriodicMap& f, const PeriodicMap& g) {
    f.check_compatible(g);
    if (f.degree_ != g.degree_) throw std::invalid_argument("PeriodicMap: degree mismatch in sum");
    const int period = std::lcm(f.period_, g.period_);
    PeriodicMap r(*f.P_, f.degree_, period);
    for (int j = 0; j < period; ++j) r.comps_[static_cast<size_t>(j)] = f.comp(j) + g.comp(j);
    return r;
}

PeriodicMap PeriodicMap::operator*(Gf c) const {
    PeriodicMap r = *this;
    for (auto& m : r.comps_) m = m * c;
    return r;
}

bool PeriodicMap::operator==(const PeriodicMap& g) const {
    check_compatible(g);
    if (degree_ != g.degree_) return false;
    const int period = std::lcm(period_, g.period_);
    for (int j = 0; j < period; ++j)
        if (comp(j) != g.comp(j)) return false;
    return true;
}

bool PeriodicMap::is_zero() const {
    for (const auto& m : comps_)
        if (!m.is_zero()) return false;
    return true;
}

PeriodicMap PeriodicMap::s_conjugate() const {
    PeriodicMap r(*P_, degree_, period_);
    for (int j = 0; j < period_; ++j) r.comps_[static_cast<size_t>(j)] = comp(j + 4);
    return r;
}

PeriodicMap PeriodicMap::s_compose(int i) const {
    PeriodicMap r(*P_, degree_ + 4 * i, period_);
    r.comps_ = comps_;
    return r;
}

PeriodicMap dga_differential(const PeriodicMap& f) {
    const PeriodicComplex& P = f.complex();
    const int n = f.degree();
    PeriodicMap df(P, n + 1, f.period());
    for (int j = 0; j < f.period(); ++j)
        df.comp(j) = P.boundary(j + 1) * f.comp(j + 1) + f.comp(j) * P.boundary(j + n + 1);
    return df;
}

StdMap parse_std_map(const std::string& name) {
    if (name == "x") return StdMap::X;
    if (name == "y") return StdMap::Y;
    if (name == "s") return StdMap::S;
    if (name == "p") return StdMap::P;
    if (name == "w") return StdMap::W;
    if (name == "r") return StdMap::R;
    if (name == "v") return StdMap::V;
    throw std::invalid_argument("unknown standard map: " + name);
}

PeriodicMap standard_map(StdMap name, const PeriodicComplex& P) {
    const GroupConfig& cfg = P.cfg;
    const int t = cfg.t;
    const AlgebraElement a = special("a", cfg), b = special("b", cfg), c = special("c", cfg),
                         one = AlgebraElement::one(cfg);
    const AlgebraElement g = gen_g(cfg, 1);
    const AlgebraElement ginv = gen_g(cfg, -1);
    const AlgebraElement hinv = gen_g(cfg, t, 1);  // h^{-1} = h^3 = g^t h

    switch (name) {
        case StdMap::S:
            return PeriodicMap::shift(P, 1);
        case StdMap::X: {
            PeriodicMap f(P, 1, 4);
            f.comp(0).at(0, 0) = one;
            f.comp(1).at(0, 0) = a.pow(t - 2);
            f.comp(1).at(0, 1) = one;
            f.comp(1).at(1, 1) = g;
            f.comp(2).at(0, 0) = one;
            f.comp(2).at(1, 0) = one;
            f.comp(3).at(0, 0) = a.pow(2 * t - 2) * b;
            return f;
        }
        case StdMap::Y: {
            PeriodicMap f(P, 1, 4);
            f.comp(0).at(0, 1) = one;
            f.comp(1).at(0, 1) = one;
            f.comp(1).at(1, 0) = one;
            f.comp(2).at(1, 0) = one;
            f.comp(3).at(0, 0) = a.pow(2 * t - 1);
            return f;
        }
        case StdMap::P: {
            PeriodicMap f(P, 1, 4);
            f.comp(1).at(0, 1) = one;
            f.comp(2).at(1, 0) = one;
            f.comp(3).at(0, 0) = a.pow(2 * t - 2);
            return f;
        }
        case StdMap::W: {
            // 4-periodic seed, then the half-period correction by y^2
            PeriodicMap f(P, 2, 8);
            f.comp(2).at(0, 0) = b * hinv;
            f.comp(2).at(1, 0) = a.pow(t - 1) * hinv;
            f.comp(3).at(0, 0) = c * ginv * hinv;
            f.comp(3).at(0, 1) = a.pow(t - 1) * hinv;
            for (int j = 0; j < 4; ++j) f.comp(j + 4) = f.comp(j);
            const PeriodicMap y = standard_map(StdMap::Y, P);
            const PeriodicMap y2 = y * y;
            for (int j = 4; j < 8; ++j) f.comp(j) = f.comp(j) + y2.comp(j);
            return f;
        }
        case StdMap::R: {
            if (t != 2) throw std::invalid_argument("r is defined only for t = 2");
            /* No null-homotopy of x^2+xy+y^2 satisfies s r + r s = (x+y) s:
             * the conjugation defect of this target has class x s (a rank
             * fact of the periodic homotopy system).  The canonical r is the
             * unique-up-to-gauge solution with vanishing first three
             * components and the exact relation s r + r s = x s, mirroring
             * the t >= 4 case. */
            const PeriodicMap x = standard_map(StdMap::X, P);
            const PeriodicMap y = standard_map(StdMap::Y, P);
            const PeriodicMap target = x * x + x * y + y * y;
            HomotopyOptions opts;
            for (int j = 0; j < 3; ++j)
                opts.pins.emplace_back(
                    j, KgMatrix(cfg, PeriodicComplex::rank(j), PeriodicComplex::rank(j + 1)));
            opts.conjugation = x;
            auto sol = solve_homotopy(target, 8, opts);
            if (!sol.feasible) throw std::logic_error("canonical r: pinned system infeasible");
            return *sol.witness;
        }
        case StdMap::V: {
            if (t < 4) throw std::invalid_argument("v is defined only for t >= 4");
            PeriodicMap f(P, 1, 8);
            f.comp(1).at(0, 0) = a.pow(t - 3);
            f.comp(3).at(0, 0) = special("u", cfg);
            for (int j = 0; j < 4; ++j) f.comp(j + 4) = f.comp(j);
            const PeriodicMap corr = standard_map(StdMap::X, P);
            for (int j = 4; j < 8; ++j) f.comp(j) = f.comp(j) + corr.comp(j);
            return f;
        }
    }
    throw std::logic_error("unreachable");
}

RingElement class_map(const PeriodicMap& f) {
    const int n = f.degree();
    const Variant var = variant_for_t(f.complex().cfg.t);
    const KgMatrix& f0 = f.comp(0);
    std::vector<Gf> eps(static_cast<size_t>(f0.cols()));
    for (int c = 0; c < f0.cols(); ++c) eps[static_cast<size_t>(c)] = f0.at(0, c).augmentation();

    const int q = floordiv(n, 4);
    const RingElement sq = ring_s(var, q);
    switch (((n % 4) + 4) % 4) {
        case 0:
            return sq * eps[0];
        case 1:
            return (ring_x(var) * eps[0] + ring_y(var) * eps[1]) * sq;
        case 2:
            return (ring_mono(var, 0, B_Y2) * eps[0] + xy_alias(var) * eps[1]) * sq;
        default:
            return ring_mono(var, 0, B_X2Y, eps[0]) * sq;
    }
}

HomotopySolution solve_homotopy(const PeriodicMap& target, int period,
                                bool with_class_constraint, bool want_kernel) {
    HomotopyOptions opts;
    opts.class_constraint = with_class_constraint;
    opts.want_kernel = want_kernel;
    return solve_homotopy(target, period, opts);
}

HomotopySolution solve_homotopy(const PeriodicMap& target, int period,
                                const HomotopyOptions& opts) {
    const bool with_class_constraint = opts.class_constraint;
    const bool want_kernel = opts.want_kernel;
    if (period != 4 && period != 8) throw std::invalid_argument("solve_homotopy: period must be 4 or 8");
    if (period % target.period() != 0)
        throw std::invalid_argument("solve_homotopy: target period does not divide requested period");
    if (!dga_differential(target).is_zero())
        throw std::invalid_argument("solve_homotopy: target is not a cocycle");

    const PeriodicComplex& P = target.complex();
    const GroupConfig& cfg = P.cfg;
    const size_t n_alg = static_cast<size_t>(cfg.order());
    const int n = target.degree();
    const int hdeg = n - 1;

    // unknown layout: for j in [0, period), entries of h_j row-major, n_alg scalars each
    std::vector<size_t> block_offset(static_cast<size_t>(period) + 1, 0);
    for (int j = 0; j < period; ++j) {
        const size_t entries =
            static_cast<size_t>(PeriodicComplex::rank(j)) * PeriodicComplex::rank(j + hdeg);
        block_offset[static_cast<size_t>(j) + 1] = block_offset[static_cast<size_t>(j)] + entries * n_alg;
    }
    const size_t n_unknowns = block_offset[static_cast<size_t>(period)];
    LinearSystem sys(n_unknowns);

    auto unknown_index = [&](int j, int r, int c, size_t q) {
        const int hcols = PeriodicComplex::rank(j + hdeg);
        return block_offset[static_cast<size_t>(j)] +
               (static_cast<size_t>(r * hcols + c)) * n_alg + q;
    };

    // d(h)_j = bnd_{j+1} h_{j+1} + h_j bnd_{j+n}  =  target_j
    AlgebraElement probe(cfg);
    for (int j = 0; j < period; ++j) {
        const KgMatrix& L = P.boundary(j + 1);          // rank(j) x rank(j+1)
        const KgMatrix& Rb = P.boundary(j + n);         // rank(j+n-1) x rank(j+n)
        const int rows = PeriodicComplex::rank(j);
        const int cols = PeriodicComplex::rank(j + n);
        const int mid_l = PeriodicComplex::rank(j + 1);       // h_{j+1} is rank(j+1) x cols
        const int mid_r = PeriodicComplex::rank(j + hdeg);    // h_j is rows x mid_r
        const int jp1 = (j + 1) % period;
        for (int r = 0; r < rows; ++r)
            for (int cc = 0; cc < cols; ++cc) {
                // one row buffer per group-element coordinate of this cell
                std::vector<std::vector<std::pair<size_t, Gf>>> rowbuf(n_alg);
                for (int mdx = 0; mdx < mid_l; ++mdx) {
                    const AlgebraElement& v = L.at(r, mdx);
                    if (v.is_zero()) continue;
                    for (size_t q = 0; q < n_alg; ++q) {
                        const AlgebraElement img =
                            v * AlgebraElement::from_group(cfg, probe.element_at(q));
                        const size_t col = unknown_index(jp1, mdx, cc, q);
                        for (size_t p = 0; p < n_alg; ++p)
                            sys.add_term(rowbuf[p], col, img.coeff_at(p));
                    }
                }
                for (int mdx = 0; mdx < mid_r; ++mdx) {
                    const AlgebraElement& v = Rb.at(mdx, cc);
                    if (v.is_zero()) continue;
                    for (size_t q = 0; q < n_alg; ++q) {
                        const AlgebraElement img =
                            AlgebraElement::from_group(cfg, probe.element_at(q)) * v;
                        const size_t col = unknown_index(j, r, mdx, q);
                        for (size_t p = 0; p < n_alg; ++p)
                            sys.add_term(rowbuf[p], col, img.coeff_at(p));
                    }
                }
                for (size_t p = 0; p < n_alg; ++p)
                    sys.add_equation(std::move(rowbuf[p]), target.comp(j).at(r, cc).coeff_at(p));
            }
    }

    if (with_class_constraint) {
        for (int j = 0; j < period; j += 4) {
            const int hcols = PeriodicComplex::rank(j + hdeg);
            for (int cc = 0; cc < hcols; ++cc) {
                std::vector<std::pair<size_t, Gf>> row;
                for (size_t q = 0; q < n_alg; ++q)
                    sys.add_term(row, unknown_index(j, 0, cc, q), Gf::one());
                sys.add_equation(std::move(row), Gf::zero());
            }
        }
    }

    for (const auto& [j, M] : opts.pins) {
        const int jj = ((j % period) + period) % period;
        for (int r = 0; r < M.rows(); ++r)
            for (int cc = 0; cc < M.cols(); ++cc)
                for (size_t q = 0; q < n_alg; ++q)
                    sys.add_equation({{unknown_index(jj, r, cc, q), Gf::one()}},
                                     M.at(r, cc).coeff_at(q));
    }

    if (opts.conjugation) {
        if (period != 8)
            throw std::invalid_argument("solve_homotopy: conjugation constraint needs period 8");
        const PeriodicMap& C = *opts.conjugation;
        for (int j = 0; j < 4; ++j) {
            const int rows = PeriodicComplex::rank(j);
            const int hcols = PeriodicComplex::rank(j + hdeg);
            for (int r = 0; r < rows; ++r)
                for (int cc = 0; cc < hcols; ++cc)
                    for (size_t q = 0; q < n_alg; ++q)
                        sys.add_equation({{unknown_index(j + 4, r, cc, q), Gf::one()},
                                          {unknown_index(j, r, cc, q), Gf::one()}},
                                         C.comp(j).at(r, cc).coeff_at(q));
        }
    }

    const auto res = sys.solve(want_kernel, false);
    HomotopySolution out;
    out.feasible = res.feasible;
    out.unknowns = n_unknowns;
    out.rank = res.rank;
    if (!res.feasible) return out;

    auto unpack = [&](const std::vector<Gf>& sol) {
        PeriodicMap h(P, hdeg, period);
        for (int j = 0; j < period; ++j) {
            const int rows = PeriodicComplex::rank(j);
            const int hcols = PeriodicComplex::rank(j + hdeg);
            for (int r = 0; r < rows; ++r)
                for (int cc = 0; cc < hcols; ++cc)
                    for (size_t q = 0; q < n_alg; ++q)
                        h.comp(j).at(r, cc).add_coeff_at(q, sol[unknown_index(j, r, cc, q)]);
        }
        return h;
    };
    out.witness = unpack(res.solution);
    if (want_kernel)
        for (const auto& v : res.kernel) out.kernel.push_back(unpack(v));
    return out;
}

}  // namespace qtate
