#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtate {

/* Coefficient fields of characteristic 2.  GF4 = GF(2)[a]/(a^2+a+1); GF2 is
 * the subfield {0,1}.  Elements are stored as lo + hi*a in two bits, so one
 * element type serves both fields and addition is xor. */
enum class Field { GF2, GF4 };

class Gf {
public:
    constexpr Gf() : v_(0) {}
    constexpr explicit Gf(uint8_t v) : v_(v & 3u) {}

    static constexpr Gf zero() { return Gf(0); }
    static constexpr Gf one() { return Gf(1); }
    static constexpr Gf alpha() { return Gf(2); }

    constexpr uint8_t bits() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }
    constexpr bool lo() const { return v_ & 1u; }
    constexpr bool hi() const { return (v_ >> 1) & 1u; }

    friend constexpr Gf operator+(Gf a, Gf b) { return Gf(a.v_ ^ b.v_); }
    friend constexpr Gf operator-(Gf a, Gf b) { return a + b; }
    Gf& operator+=(Gf b) { v_ ^= b.v_; return *this; }

    friend constexpr Gf operator*(Gf a, Gf b) {
        // lo/hi bit form: (l1 + h1 a)(l2 + h2 a), a^2 = a + 1
        const bool l1 = a.lo(), h1 = a.hi(), l2 = b.lo(), h2 = b.hi();
        const bool hh = h1 && h2;
        const bool lo = (l1 && l2) ^ hh;
        const bool hi = (l1 && h2) ^ (h1 && l2) ^ hh;
        return Gf(static_cast<uint8_t>(lo | (hi << 1)));
    }
    Gf& operator*=(Gf b) { *this = *this * b; return *this; }

    constexpr Gf inv() const {
        switch (v_) {
            case 1: return Gf(1);
            case 2: return Gf(3);  // a^-1 = a+1
            case 3: return Gf(2);
            default: throw std::domain_error("Gf::inv of zero");
        }
    }

    friend constexpr bool operator==(Gf a, Gf b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Gf a, Gf b) { return a.v_ != b.v_; }

    std::string str() const {
        static const char* names[4] = {"0", "1", "a", "a+1"};
        return names[v_];
    }

private:
    uint8_t v_;
};

inline bool in_field(Gf x, Field f) { return f == Field::GF4 || !x.hi(); }

inline std::vector<Gf> field_elements(Field f) {
    if (f == Field::GF2) return {Gf(0), Gf(1)};
    return {Gf(0), Gf(1), Gf(2), Gf(3)};
}

inline std::vector<Gf> field_units(Field f) {
    if (f == Field::GF2) return {Gf(1)};
    return {Gf(1), Gf(2), Gf(3)};
}

inline std::string field_name(Field f) { return f == Field::GF2 ? "GF2" : "GF4"; }

inline Field parse_field(const std::string& s) {
    if (s == "GF2" || s == "gf2" || s == "2") return Field::GF2;
    if (s == "GF4" || s == "gf4" || s == "4") return Field::GF4;
    throw std::invalid_argument("unknown field: " + s);
}

}  // namespace qtate
