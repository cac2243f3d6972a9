#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtate/secondary.hpp"

namespace qtate {

struct GradedSet {
    std::vector<int> degs;

    size_t size() const { return degs.size(); }
    GradedSet shifted(int n) const {
        GradedSet r = *this;
        for (int& d : r.degs) d += n;
        return r;
    }
    bool operator==(const GradedSet& o) const { return degs == o.degs; }
};

/* Finite homogeneous matrix over the Tate ring between shifted free modules:
 * entry (i,j) is zero or homogeneous of degree |i| - |j|. */
class LambdaMatrix {
public:
    LambdaMatrix() : var_(Variant::T2) {}
    LambdaMatrix(Variant var, GradedSet rows, GradedSet cols);

    Variant variant() const { return var_; }
    const GradedSet& row_set() const { return rows_; }
    const GradedSet& col_set() const { return cols_; }
    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_.size(); }

    RingElement& at(size_t i, size_t j) { return e_[i * cols_.size() + j]; }
    const RingElement& at(size_t i, size_t j) const { return e_[i * cols_.size() + j]; }

    void validate() const;  // homogeneity of every entry
    bool is_zero() const;
    bool operator==(const LambdaMatrix& o) const;
    bool operator!=(const LambdaMatrix& o) const { return !(*this == o); }

    LambdaMatrix shifted(int n) const;  // both graded sets shifted; entries unchanged

private:
    Variant var_;
    GradedSet rows_, cols_;
    std::vector<RingElement> e_;
};

LambdaMatrix lam_mul(const LambdaMatrix& A, const LambdaMatrix& B);
LambdaMatrix lam_add(const LambdaMatrix& A, const LambdaMatrix& B);

// entrywise trilinear extension of the secondary product; result rows I[-1]
LambdaMatrix m_matrix(const SecondaryTables& T, MKind kind, const LambdaMatrix& A,
                      const LambdaMatrix& B, const LambdaMatrix& C);

struct MemberVerdict {
    bool member = false;
    size_t unknowns = 0;
    size_t rank = 0;
    std::optional<LambdaMatrix> X;  // E = A X + Y C when member
    std::optional<LambdaMatrix> Y;
};

/* Decide E in A . Lambda^{J[-1],L} + Lambda^{I[-1],K} . C by solving the
 * k-linear system over the homogeneous entries of X and Y. */
MemberVerdict indeterminacy_member(const LambdaMatrix& E, const LambdaMatrix& A,
                                   const LambdaMatrix& C);

/* Nakayama-minimal generators of ker(A): computed degreewise in the window
 * [0,3] (s-periodicity covers the rest), pruned modulo the ideal (x,y).
 * im(result) = ker(A); column degrees land in [-3, 0]. */
LambdaMatrix minimal_kernel_generators(const LambdaMatrix& A);

// Nakayama-minimal generating set of im(A); coker is unchanged
LambdaMatrix minimize_columns(const LambdaMatrix& A);

// degreewise kernel/image dimensions (brute-force oracles for tests)
size_t kernel_dim(const LambdaMatrix& A, int degree);
size_t image_dim(const LambdaMatrix& A, int degree);

// basis of ker(A) in one degree, as element columns
std::vector<std::vector<RingElement>> kernel_basis(const LambdaMatrix& A, int degree);

struct ExactnessReport {
    bool composite_zero = false;
    bool dims_match = false;
    std::vector<std::pair<size_t, size_t>> dims;  // (ker, im) per degree 0..3
    bool pass() const { return composite_zero && dims_match; }
};

// exactness of Lambda^K -B-> Lambda^J -A-> Lambda^I at the middle spot
ExactnessReport check_exact(const LambdaMatrix& A, const LambdaMatrix& B);

using ElementGrid = std::vector<std::vector<RingElement>>;

/* The closed-form witnesses W = A_x B_y x + A_{x^2} B_y x^2 and
 * V = B_y C_{y^2} y^2 for the s-linear part, with the verified identity
 * m'(A,B,C) = AV + WC (entrywise; t >= 4, minimal triples). */
struct PrimeWitness {
    bool identity_holds = false;
    ElementGrid W, V;
};

struct RealizabilityVerdict {
    bool summand_of_realizable = false;
    LambdaMatrix A;  // column-minimized presentation actually used
    LambdaMatrix B, C;
    LambdaMatrix value;  // m(A,B,C)
    MemberVerdict membership;
    ExactnessReport exact_ab, exact_bc;
    // closed-form witnesses for the s-linear part (kinds m', m'', m~ over t>=4)
    std::optional<PrimeWitness> prime_witness;
};

RealizabilityVerdict realizable_summand(const SecondaryTables& T, const LambdaMatrix& A,
                                        MKind kind = MKind::M);

PrimeWitness prime_closed_form_witness(const SecondaryTables& T, const LambdaMatrix& A,
                                       const LambdaMatrix& B, const LambdaMatrix& C);

// coefficient-of-b matrix over k[s^{+-1}]: terms s^q b of each entry, b struck out
std::vector<std::vector<RingElement>> coefficient_grid(const LambdaMatrix& M, int b_idx);

// re-grade: new |i| = |i| - 4 * row_twists[i], entries adjusted by s powers
LambdaMatrix retwist(const LambdaMatrix& M, const std::vector<int>& row_twists,
                     const std::vector<int>& col_twists);
// twists placing every degree of the set into [lo, lo+3]
std::vector<int> window_twists(const GradedSet& s, int lo);

struct ScalarTriple {
    RingElement a, b, c, value;
    bool member;
};

struct ScalarTripleReport {
    size_t considered = 0;
    size_t defined = 0;
    size_t members = 0;
    std::vector<ScalarTriple> counterexamples;
};

/* All homogeneous 1x1 triples with ab = 0 = bc over degrees [0, max_degree];
 * checks m(a,b,c) in a.Lambda + Lambda.c for each. */
ScalarTripleReport enumerate_scalar_triples(const SecondaryTables& T, int max_degree = 7);

// 1x1 membership test used by the enumeration
bool scalar_in_indeterminacy(const RingElement& value, const RingElement& a,
                             const RingElement& c, int deg_a, int deg_b, int deg_c);

}  // namespace qtate
