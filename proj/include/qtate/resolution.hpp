#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtate/group_algebra.hpp"
#include "qtate/tate_ring.hpp"

namespace qtate {

/* Matrix over kG.  Maps of free right modules act by left multiplication,
 * so composition of maps is the matrix product. */
class KgMatrix {
public:
    KgMatrix() : rows_(0), cols_(0) {}
    KgMatrix(const GroupConfig& cfg, int rows, int cols)
        : cfg_(cfg), rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows * cols), AlgebraElement(cfg)) {}

    static KgMatrix identity(const GroupConfig& cfg, int n);

    const GroupConfig& config() const { return cfg_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    AlgebraElement& at(int r, int c) { return e_[static_cast<size_t>(r * cols_ + c)]; }
    const AlgebraElement& at(int r, int c) const { return e_[static_cast<size_t>(r * cols_ + c)]; }

    friend KgMatrix operator*(const KgMatrix& A, const KgMatrix& B);
    friend KgMatrix operator+(const KgMatrix& A, const KgMatrix& B);
    KgMatrix operator*(Gf c) const;
    bool operator==(const KgMatrix& B) const;
    bool operator!=(const KgMatrix& B) const { return !(*this == B); }
    bool is_zero() const;

private:
    GroupConfig cfg_;
    int rows_, cols_;
    std::vector<AlgebraElement> e_;
};

/* The 4-periodic complete resolution of the trivial module: ranks (1,2,2,1)
 * and boundaries d1 = (a b), d2 = (a^{t-1} c; b a), d3 = (a; c), d0 = N,
 * indices mod 4. */
struct PeriodicComplex {
    GroupConfig cfg;
    std::array<KgMatrix, 4> bnd;  // bnd[r] = boundary P_j -> P_{j-1} for j = r mod 4

    static int rank(int j) {
        static constexpr int r[4] = {1, 2, 2, 1};
        return r[((j % 4) + 4) % 4];
    }
    const KgMatrix& boundary(int j) const { return bnd[static_cast<size_t>(((j % 4) + 4) % 4)]; }
};

PeriodicComplex build_resolution(const GroupConfig& cfg);

struct ComplexCheck {
    std::string name;
    bool pass;
    std::string detail;
};

/* d^2 = 0 symbolically plus exactness by k-linear rank at all four spots
 * (dim ker of each boundary vs dim im of the next). */
std::vector<ComplexCheck> check_complex(const PeriodicComplex& P);

// dimension of ker / im of the boundary at spot j, as k-spaces
size_t boundary_kernel_dim(const PeriodicComplex& P, int j);
size_t boundary_image_dim(const PeriodicComplex& P, int j);

/* Degree-n family of maps f_j : P_{j+n} -> P_j with finite period 4 or 8;
 * the currency of all chain-level computations. */
class PeriodicMap {
public:
    PeriodicMap() : degree_(0), period_(4) {}
    PeriodicMap(const PeriodicComplex& P, int degree, int period);

    static PeriodicMap zero(const PeriodicComplex& P, int degree, int period = 4);
    static PeriodicMap identity(const PeriodicComplex& P);       // degree 0
    static PeriodicMap shift(const PeriodicComplex& P, int i);   // s-bar^i, degree 4i

    const PeriodicComplex& complex() const { return *P_; }
    int degree() const { return degree_; }
    int period() const { return period_; }

    KgMatrix& comp(int j) { return comps_[static_cast<size_t>(((j % period_) + period_) % period_)]; }
    const KgMatrix& comp(int j) const {
        return comps_[static_cast<size_t>(((j % period_) + period_) % period_)];
    }

    friend PeriodicMap operator*(const PeriodicMap& f, const PeriodicMap& g);  // composition
    friend PeriodicMap operator+(const PeriodicMap& f, const PeriodicMap& g);
    PeriodicMap operator*(Gf c) const;
    bool operator==(const PeriodicMap& g) const;
    bool operator!=(const PeriodicMap& g) const { return !(*this == g); }
    bool is_zero() const;

    PeriodicMap s_conjugate() const;   // s f s^{-1}: components shifted by 4
    PeriodicMap s_compose(int i) const;  // f . s-bar^i: degree += 4i, components unchanged

private:
    const PeriodicComplex* P_ = nullptr;
    int degree_, period_;
    std::vector<KgMatrix> comps_;

    void check_compatible(const PeriodicMap& g) const;
};

// (df)_j = d_{j+1} f_{j+1} + f_j d_{j+n+1}  (characteristic 2)
PeriodicMap dga_differential(const PeriodicMap& f);

enum class StdMap { X, Y, S, P, W, R, V };

StdMap parse_std_map(const std::string& name);

/* x,y: the 4-periodic chain maps of degree 1; s: the degree-4 shift;
 * p: the 4-periodic null-homotopy of xy+yx; w: the 8-periodic null-homotopy
 * of y^3; r (t=2): the 8-periodic null-homotopy of x^2+xy+y^2;
 * v (t>=4): the 8-periodic null-homotopy of x^2+xy. */
PeriodicMap standard_map(StdMap name, const PeriodicComplex& P);

/* Class of eps . f_0 in the degree-n piece, via the dual-basis identification
 * (n mod 4): () |-> s^{n/4}; (v1 v2) |-> v1 x + v2 y; (v1 v2) |-> v1 y^2 + v2 xy;
 * (v) |-> v x^2 y, all twisted by s^{floor(n/4)}. */
RingElement class_map(const PeriodicMap& f);

struct HomotopySolution {
    bool feasible = false;
    size_t unknowns = 0;
    size_t rank = 0;
    std::optional<PeriodicMap> witness;
    // further solutions: witness + span of these (only filled when requested)
    std::vector<PeriodicMap> kernel;
};

struct HomotopyOptions {
    /* adds eps . h_{4i} = 0 for all 4i < period, pinning the class of h and
     * of its s-conjugate to zero */
    bool class_constraint = false;
    bool want_kernel = false;
    // pin whole components h_j to fixed matrices
    std::vector<std::pair<int, KgMatrix>> pins;
    // require h_{j+4} + h_j = conjugation_j exactly (period 8)
    std::optional<PeriodicMap> conjugation;
};

/* Solve d(h) = target over one period of unknowns with wrap-around indexing.
 * Requires target to be a cocycle. */
HomotopySolution solve_homotopy(const PeriodicMap& target, int period,
                                const HomotopyOptions& opts);
HomotopySolution solve_homotopy(const PeriodicMap& target, int period,
                                bool with_class_constraint = false,
                                bool want_kernel = false);

}  // namespace qtate
