#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qtate/gf.hpp"

namespace qtate {

/* The group of generalized quaternions of order 4t,
 *   < g, h | g^t = h^2, g h g = h >,
 * t >= 2 a power of 2, over a coefficient field of characteristic 2.
 * Normal form of elements: g^i h^j with 0 <= i < 2t, j in {0,1};
 * multiplication is driven by h g = g^{-1} h and h^2 = g^t. */
struct GroupConfig {
    int t = 2;
    Field field = Field::GF2;

    int order() const { return 4 * t; }
    int two_t() const { return 2 * t; }
    bool operator==(const GroupConfig& o) const { return t == o.t && field == o.field; }
    bool operator!=(const GroupConfig& o) const { return !(*this == o); }

    void validate(int max_t = 16) const;
};

struct GroupElement {
    int i = 0;  // exponent of g, mod 2t
    int j = 0;  // exponent of h, 0 or 1

    bool operator==(const GroupElement& o) const { return i == o.i && j == o.j; }
};

GroupElement group_mul(const GroupConfig& cfg, GroupElement u, GroupElement v);
GroupElement group_inv(const GroupConfig& cfg, GroupElement u);

/* Element of kQ_{4t}: dense coefficient table over the 4t normal forms.
 * Index layout: idx = j * 2t + i. */
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(const GroupConfig& cfg)
        : cfg_(cfg), coef_(static_cast<size_t>(cfg.order()), Gf::zero()) {}

    static AlgebraElement zero(const GroupConfig& cfg) { return AlgebraElement(cfg); }
    static AlgebraElement one(const GroupConfig& cfg);
    static AlgebraElement from_group(const GroupConfig& cfg, GroupElement e, Gf c = Gf::one());

    const GroupConfig& config() const { return cfg_; }
    size_t size() const { return coef_.size(); }

    Gf coeff(GroupElement e) const { return coef_[index(e)]; }
    Gf coeff_at(size_t idx) const { return coef_[idx]; }
    void set_coeff(GroupElement e, Gf c) { coef_[index(e)] = c; }
    void add_coeff_at(size_t idx, Gf c) { coef_[idx] += c; }

    bool is_zero() const;

    friend AlgebraElement operator+(const AlgebraElement& p, const AlgebraElement& q);
    friend AlgebraElement operator*(const AlgebraElement& p, const AlgebraElement& q);
    AlgebraElement& operator+=(const AlgebraElement& q);
    AlgebraElement operator*(Gf c) const;
    bool operator==(const AlgebraElement& q) const;
    bool operator!=(const AlgebraElement& q) const { return !(*this == q); }

    AlgebraElement pow(int n) const;

    Gf augmentation() const;

    std::string str() const;

    size_t index(GroupElement e) const {
        return static_cast<size_t>(e.j) * cfg_.two_t() + static_cast<size_t>(e.i);
    }
    GroupElement element_at(size_t idx) const {
        const int tt = cfg_.two_t();
        return GroupElement{static_cast<int>(idx) % tt, static_cast<int>(idx) / tt};
    }

private:
    GroupConfig cfg_;
    std::vector<Gf> coef_;
};

// generators and distinguished elements
AlgebraElement gen_g(const GroupConfig& cfg, int power = 1, int hpow = 0);
AlgebraElement special(const std::string& name, const GroupConfig& cfg);  // a, b, c, N, u

struct IdentityResult {
    std::string name;
    bool pass;
};

// every group-algebra identity the resolution machinery relies on
std::vector<IdentityResult> verify_identities(const GroupConfig& cfg);

}  // namespace qtate
