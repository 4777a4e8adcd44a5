#pragma once

// Scalar fields for the linear-algebra oracle. Rationals are exact (GMP);
// Zp<P> is the prime field F_P used for field-independence sweeps and for
// exhaustive enumeration of extension classes.

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dexact::oracle {

using Rational = mpq_class;

template <std::uint32_t P>
class Zp {
    static_assert(P > 2 && P < (1u << 31), "prime modulus must fit in 31 bits");

public:
    static constexpr std::uint32_t modulus = P;

    constexpr Zp() = default;
    constexpr Zp(long long v) : value_(reduce(v)) {}

    constexpr std::uint32_t value() const { return value_; }

    friend constexpr Zp operator+(Zp a, Zp b) { return raw((a.value_ + b.value_) % P); }
    friend constexpr Zp operator-(Zp a, Zp b) { return raw((a.value_ + P - b.value_) % P); }
    friend constexpr Zp operator*(Zp a, Zp b)
    {
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % P));
    }
    friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
    constexpr Zp operator-() const { return raw((P - value_) % P); }
    Zp& operator+=(Zp o) { return *this = *this + o; }
    Zp& operator-=(Zp o) { return *this = *this - o; }
    Zp& operator*=(Zp o) { return *this = *this * o; }
    Zp& operator/=(Zp o) { return *this = *this / o; }
    friend constexpr bool operator==(Zp a, Zp b) { return a.value_ == b.value_; }

    Zp inverse() const
    {
        if (value_ == 0)
            throw std::domain_error("division by zero in prime field");
        // Fermat: a^(P-2)
        Zp result(1), base = *this;
        for (std::uint32_t e = P - 2; e > 0; e >>= 1) {
            if (e & 1u)
                result *= base;
            base *= base;
        }
        return result;
    }

    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.value_; }

private:
    static constexpr Zp raw(std::uint32_t v)
    {
        Zp z;
        z.value_ = v;
        return z;
    }
    static constexpr std::uint32_t reduce(long long v)
    {
        long long r = v % static_cast<long long>(P);
        return static_cast<std::uint32_t>(r < 0 ? r + P : r);
    }

    std::uint32_t value_ = 0;
};

using F101 = Zp<101>;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
template <std::uint32_t P>
constexpr bool is_zero(Zp<P> x) { return x.value() == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }
template <std::uint32_t P>
std::string to_string(Zp<P> x) { return std::to_string(x.value()); }

template <class F>
struct FieldInfo;

template <>
struct FieldInfo<Rational> {
    static constexpr std::string_view name = "rational";
    static constexpr bool finite = false;
    static constexpr std::uint32_t order = 0;
};

template <std::uint32_t P>
struct FieldInfo<Zp<P>> {
    static constexpr std::string_view name = "prime";
    static constexpr bool finite = true;
    static constexpr std::uint32_t order = P;
};

} // namespace dexact::oracle
