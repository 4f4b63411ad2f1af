#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubiczeta {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline BigInt rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

// Floor division for possibly negative operands.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long mod_reduce(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

inline long long checked_i64(const BigInt& x, const char* where) {
    if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN))
        throw std::overflow_error(std::string("integer overflow in ") + where);
    return static_cast<long long>(x);
}

// Exact element of the real quadratic field generated by sqrt(3).
struct QRoot3 {
    Rat u, v; // value u + v*sqrt(3)

    QRoot3() : u(0), v(0) {}
    QRoot3(Rat u_) : u(std::move(u_)), v(0) {}
    QRoot3(Rat u_, Rat v_) : u(std::move(u_)), v(std::move(v_)) {}
    QRoot3(long long n) : u(n), v(0) {}

    static QRoot3 sqrt3() { return QRoot3(Rat(0), Rat(1)); }

    bool is_zero() const { return u == 0 && v == 0; }

    QRoot3 operator-() const { return QRoot3(-u, -v); }
    QRoot3 operator+(const QRoot3& o) const { return QRoot3(u + o.u, v + o.v); }
    QRoot3 operator-(const QRoot3& o) const { return QRoot3(u - o.u, v - o.v); }
    QRoot3 operator*(const QRoot3& o) const {
        return QRoot3(u * o.u + 3 * v * o.v, u * o.v + v * o.u);
    }
    QRoot3& operator+=(const QRoot3& o) { u += o.u; v += o.v; return *this; }
    QRoot3& operator-=(const QRoot3& o) { u -= o.u; v -= o.v; return *this; }
    bool operator==(const QRoot3& o) const { return u == o.u && v == o.v; }
    bool operator!=(const QRoot3& o) const { return !(*this == o); }

    // Exact sign of u + v*sqrt(3); no floating point involved.
    int sign() const {
        int su = sign_of(u), sv = sign_of(v);
        if (sv == 0) return su;
        if (su == 0) return sv;
        if (su == sv) return su;
        // Mixed signs: compare u^2 with 3 v^2.
        Rat lhs = u * u, rhs = 3 * v * v;
        if (lhs == rhs) return 0;
        return (lhs > rhs) ? su : sv;
    }

    double to_double() const {
        return static_cast<double>(u) + 1.7320508075688772935 * static_cast<double>(v);
    }
};

inline QRoot3 operator*(const Rat& c, const QRoot3& x) { return QRoot3(c * x.u, c * x.v); }

std::string to_string(const Rat& x);
std::string to_string(const QRoot3& x);

} // namespace cubiczeta
