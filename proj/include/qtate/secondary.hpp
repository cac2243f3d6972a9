#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtate/resolution.hpp"

namespace qtate {

/* Everything derived from the cycle selection f1 and the homotopy table f2:
 * the classes C(h(b,c)), the secondary product m on basis triples, and the
 * s-periodicity rules that extend it to the whole ring. */
enum class MKind { M, MPrime, MDoublePrime, MTilde };

std::string mkind_name(MKind k);
MKind parse_mkind(const std::string& s);

class SecondaryTables {
public:
    /* star_variation > 0 perturbs the solver-completed "*" entries of the
     * t=2 table by kernel vectors of the homotopy system; the m values must
     * not depend on it. */
    explicit SecondaryTables(const GroupConfig& cfg, int star_variation = 0);

    const GroupConfig& config() const { return cfg_; }
    Variant variant() const { return var_; }
    const PeriodicComplex& complex() const { return *P_; }

    // f1 on a basis monomial s^i x^e y^d
    PeriodicMap f1_mono(Mono m) const;
    // f1 extended k-linearly over the basis
    PeriodicMap f1(const RingElement& u) const;

    const PeriodicMap& f2(int b, int c) const { return f2_[b][c]; }
    bool f2_completed_by_solver(int b, int c) const { return star_[b][c]; }

    // C(h(b,c)) with h(b,c) = s f2(b,c) s^{-1} - f2(b,c)
    const RingElement& h_class(int b, int c) const { return h_class_[b][c]; }

    // m on (B u Bs) x B x B via C(f1(a) f2(b,c)); a_idx in [0,12), a_idx >= 6 means s*B[a_idx-6]
    const RingElement& m_base(int a_idx, int b, int c) const { return m_base_[a_idx][b][c]; }

    // trilinear evaluation of the chosen representative on basis monomials
    RingElement m_eval(MKind kind, Mono a, Mono b, Mono c) const;
    RingElement m_eval(MKind kind, const RingElement& a, const RingElement& b,
                       const RingElement& c) const;

    // the (2,-1)-cochain g used by m-tilde (t >= 4): nonzero only on
    // z-frame pairs (s^{-1}x^2, s^i x) and (s^{-1}x^2, s^i z)
    RingElement g_cochain(const RingElement& u, const RingElement& v) const;

private:
    GroupConfig cfg_;
    Variant var_;
    std::shared_ptr<PeriodicComplex> P_;
    std::array<PeriodicMap, 6> f1_b_;
    PeriodicMap f2_[6][6];
    bool star_[6][6] = {};
    RingElement h_class_[6][6];
    RingElement m_base_[12][6][6];

    void build_f2(int star_variation);
    void build_h_and_m();
};

struct PairStatus {
    int b, c;
    bool d_identity;     // d f2(b,c) = f1(bc) + f1(b) f1(c)
    bool class_vanishes; // C(f2(b,c)) = 0
    bool completed;      // entry produced by the solver
};

std::vector<PairStatus> verify_f2(const SecondaryTables& T);

struct CocycleReport {
    size_t tuples_checked = 0;
    size_t failures = 0;
    std::vector<std::array<Mono, 4>> failing;  // at most a few kept
};

/* Hochschild cocycle law a.m(b,c,d) + m(ab,c,d) + m(a,bc,d) + m(a,b,cd)
 * + m(a,b,c).d = 0 on all basis 4-tuples with s-exponents in [-W, W]. */
CocycleReport verify_cocycle(const SecondaryTables& T, MKind kind, int window);

struct TripleKey {
    Mono a, b, c;
    bool operator<(const TripleKey& o) const {
        if (!(a == o.a)) return a < o.a;
        if (!(b == o.b)) return b < o.b;
        return c < o.c;
    }
};

struct Certificate {
    bool infeasible = false;
    size_t unknowns = 0;
    size_t equations = 0;
    size_t rank = 0;
    // triples carrying nonzero weight in the left null vector (if infeasible)
    std::vector<TripleKey> obstruction_triples;
    // witness values g(sigma, tau) on basis pairs (if feasible)
    std::map<std::pair<Mono, Mono>, RingElement> witness;
};

std::vector<TripleKey> default_certificate_triples(Variant var, int max_total_degree = 5);

/* Decide solvability of delta g = m restricted to the given triples; an
 * infeasible restriction certifies that the class of m is non-zero. */
Certificate gamma_certificate(const SecondaryTables& T, MKind kind = MKind::M,
                              std::vector<TripleKey> triples = {});

}  // namespace qtate
