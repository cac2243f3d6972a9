#include "qtate/group_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qtate {

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }
}  // namespace

void GroupConfig::validate(int max_t) const {
    if (t < 2 || (t & (t - 1)) != 0)
        throw std::invalid_argument("t must be a power of 2 with t >= 2");
    if (t > max_t)
        throw std::invalid_argument("t exceeds the configured bound (" + std::to_string(max_t) + ")");
}

GroupElement group_mul(const GroupConfig& cfg, GroupElement u, GroupElement v) {
    const int tt = cfg.two_t();
    if (u.j == 0) return GroupElement{mod(u.i + v.i, tt), v.j};
    // h g^k = g^{-k} h, then h h = g^t
    int i = mod(u.i - v.i + (v.j ? cfg.t : 0), tt);
    return GroupElement{i, 1 - v.j};
}

GroupElement group_inv(const GroupConfig& cfg, GroupElement u) {
    const int tt = cfg.two_t();
    if (u.j == 0) return GroupElement{mod(-u.i, tt)};
    // (g^i h)^{-1} = h^{-1} g^{-i} = g^t h g^{-i} = g^{t+i} h... verify: (g^i h)(g^{t+i} h) = g^{i-(t+i)+t} = 1
    return GroupElement{mod(u.i + cfg.t, tt), 1};
}

AlgebraElement AlgebraElement::one(const GroupConfig& cfg) {
    return from_group(cfg, GroupElement{0, 0});
}

AlgebraElement AlgebraElement::from_group(const GroupConfig& cfg, GroupElement e, Gf c) {
    AlgebraElement r(cfg);
    r.set_coeff(e, c);
    return r;
}

bool AlgebraElement::is_zero() const {
    for (Gf c : coef_)
        if (!c.is_zero()) return false;
    return true;
}

AlgebraElement operator+(const AlgebraElement& p, const AlgebraElement& q) {
    AlgebraElement r = p;
    r += q;
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& q) {
    if (cfg_ != q.cfg_) throw std::invalid_argument("AlgebraElement: mismatched group configuration");
    for (size_t k = 0; k < coef_.size(); ++k) coef_[k] += q.coef_[k];
    return *this;
}

AlgebraElement operator*(const AlgebraElement& p, const AlgebraElement& q) {
    if (p.cfg_ != q.cfg_) throw std::invalid_argument("AlgebraElement: mismatched group configuration");
    AlgebraElement r(p.cfg_);
    const size_t n = p.coef_.size();
    for (size_t u = 0; u < n; ++u) {
        const Gf cu = p.coef_[u];
        if (cu.is_zero()) continue;
        const GroupElement eu = p.element_at(u);
        for (size_t v = 0; v < n; ++v) {
            const Gf cv = q.coef_[v];
            if (cv.is_zero()) continue;
            const GroupElement ev = q.element_at(v);
            r.coef_[r.index(group_mul(p.cfg_, eu, ev))] += cu * cv;
        }
    }
    return r;
}

AlgebraElement AlgebraElement::operator*(Gf c) const {
    AlgebraElement r = *this;
    for (auto& x : r.coef_) x *= c;
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& q) const {
    return cfg_ == q.cfg_ && coef_ == q.coef_;
}

AlgebraElement AlgebraElement::pow(int n) const {
    if (n < 0) throw std::invalid_argument("AlgebraElement::pow: negative exponent");
    AlgebraElement r = one(cfg_);
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
}

Gf AlgebraElement::augmentation() const {
    Gf s = Gf::zero();
    for (Gf c : coef_) s += c;
    return s;
}

std::string AlgebraElement::str() const {
    // monomials ordered by (i, j) descending, e.g. "g^3*h + g^2 + 1"
    std::ostringstream os;
    bool first = true;
    const int tt = cfg_.two_t();
    for (int i = tt - 1; i >= 0; --i) {
        for (int j = 1; j >= 0; --j) {
            const Gf c = coeff(GroupElement{i, j});
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            std::string mono;
            if (i == 1) mono = "g";
            else if (i > 1) mono = "g^" + std::to_string(i);
            if (j) mono += mono.empty() ? "h" : "*h";
            if (mono.empty()) mono = "1";
            if (c != Gf::one()) {
                os << (c == Gf::alpha() ? "a*" : "(a+1)*");
            }
            os << mono;
        }
    }
    if (first) return "0";
    return os.str();
}

AlgebraElement gen_g(const GroupConfig& cfg, int power, int hpow) {
    return AlgebraElement::from_group(cfg, GroupElement{mod(power, cfg.two_t()), mod(hpow, 2)});
}

AlgebraElement special(const std::string& name, const GroupConfig& cfg) {
    const AlgebraElement one = AlgebraElement::one(cfg);
    if (name == "a") return gen_g(cfg, 1) + one;
    if (name == "b") return gen_g(cfg, 0, 1) + one;
    if (name == "c") return gen_g(cfg, 0, 1) * gen_g(cfg, 1) + one;  // c = hg + 1
    if (name == "N") {
        AlgebraElement n(cfg);
        for (size_t k = 0; k < n.size(); ++k) n.add_coeff_at(k, Gf::one());
        return n;
    }
    if (name == "u") {
        if (cfg.t < 4) throw std::invalid_argument("u is defined only for t >= 4");
        const AlgebraElement a = special("a", cfg), b = special("b", cfg), c = special("c", cfg);
        return c * a.pow(2 * cfg.t - 2) + b * a.pow(2 * cfg.t - 3);
    }
    throw std::invalid_argument("unknown special element: " + name);
}

std::vector<IdentityResult> verify_identities(const GroupConfig& cfg) {
    const int t = cfg.t;
    const AlgebraElement a = special("a", cfg), b = special("b", cfg), c = special("c", cfg),
                         N = special("N", cfg), one = AlgebraElement::one(cfg),
                         g = gen_g(cfg, 1), h = gen_g(cfg, 0, 1);
    std::vector<IdentityResult> out;
    auto check = [&out](const std::string& name, const AlgebraElement& lhs, const AlgebraElement& rhs) {
        out.push_back({name, lhs == rhs});
    };

    check("a^t = b^2", a.pow(t), b * b);
    check("b^2 = c^2", b * b, c * c);
    check("a^2t = 0", a.pow(2 * t), AlgebraElement::zero(cfg));
    check("b^4 = 0", b.pow(4), AlgebraElement::zero(cfg));
    check("ba = a+b+c", b * a, a + b + c);
    check("ac = a+b+c", a * c, a + b + c);
    check("N = a^{2t-1}b", N, a.pow(2 * t - 1) * b);
    check("c = a+bg", c, a + b * g);
    check("gc = a+b", g * c, a + b);
    check("N = ca^{2t-2}b", N, c * a.pow(2 * t - 2) * b);
    check("N = ca^{2t-1}", N, c * a.pow(2 * t - 1));
    check("N = a^{2t-1} + a^{2t-2}b + ca^{2t-2}",
          N, a.pow(2 * t - 1) + a.pow(2 * t - 2) * b + c * a.pow(2 * t - 2));
    check("ca^{t-1}b = ca^{t-1} + a^{t-1}b",
          c * a.pow(t - 1) * b, c * a.pow(t - 1) + a.pow(t - 1) * b);

    auto central = [&](const std::string& name, const AlgebraElement& v) {
        out.push_back({name + " central", v * g == g * v && v * h == h * v});
    };
    central("a^{2t-1}", a.pow(2 * t - 1));
    central("a^{2t-2}", a.pow(2 * t - 2));
    central("a^{2t-4}", a.pow(2 * t - 4));

    if (t >= 4) {
        const AlgebraElement u = special("u", cfg);
        check("au = a^{2t-2}b + a^{2t-1}", a * u, a.pow(2 * t - 2) * b + a.pow(2 * t - 1));
        check("cu = a^{2t-2}b + a^{2t-1}", c * u, a.pow(2 * t - 2) * b + a.pow(2 * t - 1));
        check("ua = a^{2t-2}b + N", u * a, a.pow(2 * t - 2) * b + N);
        check("ub = a^{2t-2}b", u * b, a.pow(2 * t - 2) * b);
    }
    return out;
}

}  // namespace qtate
