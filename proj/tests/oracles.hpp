#pragma once

// Test-side oracles, deliberately independent of the library code paths they
// check: naive recurrences, schoolbook polynomial division, convolution,
// brute-force order enumeration and modular arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;

/// w_0..w_hi by the bare recurrence w_{k+1} = p w_k + q w_{k-1}.
inline std::vector<Int> recurrence(long a0, long a1, long p, long q, long hi) {
    std::vector<Int> w = {Int(a0), Int(a1)};
    while (static_cast<long>(w.size()) <= hi) w.push_back(p * w[w.size() - 1] + q * w[w.size() - 2]);
    return w;
}

/// Rational backward value w_k for k < 0 via w_{k-1} = (w_{k+1} - p w_k)/q.
inline Rat backward(long a0, long a1, long p, long q, long k) {
    Rat hi(a1), lo(a0);  // (w_{j+1}, w_j) sliding left from j = 0
    for (long j = 0; j > k; --j) {
        Rat prev = (hi - p * lo) / q;
        hi = lo;
        lo = prev;
    }
    return lo;
}

/// Exact division of integer polynomials (low-degree-first, divisor monic).
inline std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    int dd = static_cast<int>(den.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    std::vector<Int> q(dn - dd + 1, Int(0));
    for (int i = dn; i >= dd; --i) {
        Int c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::runtime_error("oracle: inexact division");
    return q;
}

/// Truncated convolution of two rational coefficient lists.
inline std::vector<Rat> convolve(const std::vector<Rat>& a, const std::vector<Rat>& b, int order) {
    std::vector<Rat> out(order, Rat(0));
    for (int i = 0; i < order && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j < order && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Multiplicative order of x mod r by repeated multiplication.
inline long mul_order(long x, long r) {
    long acc = ((x % r) + r) % r;
    if (acc == 0) return 0;
    long cur = acc, ord = 1;
    while (cur != 1) {
        cur = (cur * acc) % r;
        if (++ord > r) return 0;
    }
    return ord;
}

inline long pow_mod(long b, long e, long r) {
    long acc = 1 % r;
    b = ((b % r) + r) % r;
    while (e > 0) {
        if (e & 1) acc = (acc * b) % r;
        b = (b * b) % r;
        e >>= 1;
    }
    return acc;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace oracle
