#pragma once

/**
 * @file rings.hpp
 * @brief Exact arithmetic kernel: integers, rationals, prime fields,
 *        polynomial quotient extensions and truncated power series.
 *
 * Every value is a RingElement: an immutable payload tagged with a shared
 * RingDescriptor. Arithmetic is exact; there is no floating point anywhere.
 * Quotient rings use dense coordinate lists and schoolbook multiplication
 * (degrees here never exceed 4).
 */

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "horasym/errors.hpp"

namespace horasym {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

enum class RingKind { Integers, Rationals, ModPrime, Quotient, Series };

struct RingDescriptor;
using RingDesc = std::shared_ptr<const RingDescriptor>;

/// Payload of a ring element. Interpretation depends on the descriptor:
/// Integers/ModPrime hold an Int, Rationals a Rat, Quotient/Series a
/// coordinate list of base-ring payloads.
struct Value {
    std::variant<Int, Rat, std::vector<Value>> v;

    Value() : v(Int(0)) {}
    explicit Value(Int z) : v(std::move(z)) {}
    explicit Value(Rat q) : v(std::move(q)) {}
    explicit Value(std::vector<Value> c) : v(std::move(c)) {}

    const Int& as_int() const { return std::get<Int>(v); }
    const Rat& as_rat() const { return std::get<Rat>(v); }
    const std::vector<Value>& coords() const { return std::get<std::vector<Value>>(v); }
    std::vector<Value>& coords() { return std::get<std::vector<Value>>(v); }
};

struct RingDescriptor {
    RingKind kind;
    Int prime;                        // ModPrime
    RingDesc base;                    // Quotient, Series
    std::vector<Value> modulus;       // Quotient: monic, length degree+1, base payloads
    int order = 0;                    // Series: truncation length T >= 1

    int quotient_degree() const { return static_cast<int>(modulus.size()) - 1; }

    int depth() const {
        int d = 0;
        const RingDescriptor* cur = this;
        while (cur->kind == RingKind::Quotient || cur->kind == RingKind::Series) {
            ++d;
            cur = cur->base.get();
        }
        return d;
    }

    /// Characteristic of the underlying scalar ring (0 or the root prime).
    Int characteristic() const {
        const RingDescriptor* cur = this;
        while (cur->kind == RingKind::Quotient || cur->kind == RingKind::Series) cur = cur->base.get();
        return cur->kind == RingKind::ModPrime ? cur->prime : Int(0);
    }
};

// ---------------------------------------------------------------------------
// descriptor construction

inline bool is_prime_trial(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline RingDesc integers_ring() {
    static const RingDesc d = std::make_shared<RingDescriptor>(RingDescriptor{RingKind::Integers, 0, nullptr, {}, 0});
    return d;
}

inline RingDesc rationals_ring() {
    static const RingDesc d = std::make_shared<RingDescriptor>(RingDescriptor{RingKind::Rationals, 0, nullptr, {}, 0});
    return d;
}

inline RingDesc mod_prime_ring(const Int& r) {
    if (r >= 1000000) throw InvalidArgument("ModPrime modulus exceeds desk scale (< 10^6)");
    if (!is_prime_trial(r)) throw NotPrime("ModPrime modulus " + r.get_str() + " is not prime");
    return std::make_shared<RingDescriptor>(RingDescriptor{RingKind::ModPrime, r, nullptr, {}, 0});
}

bool value_eq(const RingDesc& d, const Value& a, const Value& b);
bool value_is_zero(const RingDesc& d, const Value& a);
Value value_one(const RingDesc& d);

inline RingDesc quotient_ring(RingDesc base, std::vector<Value> monic_modulus) {
    if (monic_modulus.size() < 2) throw InvalidArgument("quotient modulus must have degree >= 1");
    if (!value_eq(base, monic_modulus.back(), value_one(base)))
        throw InvalidArgument("quotient modulus must be monic");
    auto d = std::make_shared<RingDescriptor>(
        RingDescriptor{RingKind::Quotient, 0, std::move(base), std::move(monic_modulus), 0});
    if (d->depth() > 3) throw InvalidArgument("ring nesting depth exceeds 3");
    return d;
}

inline RingDesc series_ring(RingDesc base, int order) {
    if (order < 1) throw InvalidArgument("series truncation order must be >= 1");
    auto d = std::make_shared<RingDescriptor>(RingDescriptor{RingKind::Series, 0, std::move(base), {}, order});
    if (d->depth() > 3) throw InvalidArgument("ring nesting depth exceeds 3");
    return d;
}

inline bool desc_eq(const RingDesc& a, const RingDesc& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case RingKind::Integers:
        case RingKind::Rationals: return true;
        case RingKind::ModPrime: return a->prime == b->prime;
        case RingKind::Series: return a->order == b->order && desc_eq(a->base, b->base);
        case RingKind::Quotient: {
            if (!desc_eq(a->base, b->base)) return false;
            if (a->modulus.size() != b->modulus.size()) return false;
            for (size_t i = 0; i < a->modulus.size(); ++i)
                if (!value_eq(a->base, a->modulus[i], b->modulus[i])) return false;
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// value arithmetic (recursive on the descriptor)

Value value_add(const RingDesc& d, const Value& a, const Value& b);
Value value_sub(const RingDesc& d, const Value& a, const Value& b);
Value value_mul(const RingDesc& d, const Value& a, const Value& b);
Value value_neg(const RingDesc& d, const Value& a);
Value value_inv(const RingDesc& d, const Value& a);

inline Value value_zero(const RingDesc& d) {
    switch (d->kind) {
        case RingKind::Integers:
        case RingKind::ModPrime: return Value(Int(0));
        case RingKind::Rationals: return Value(Rat(0));
        case RingKind::Quotient: return Value(std::vector<Value>(d->quotient_degree(), value_zero(d->base)));
        case RingKind::Series: {
            std::vector<Value> c(d->order, value_zero(d->base));
            return Value(std::move(c));
        }
    }
    throw Error("unreachable");
}

inline Value value_one(const RingDesc& d) {
    switch (d->kind) {
        case RingKind::Integers:
        case RingKind::ModPrime: return Value(Int(1));
        case RingKind::Rationals: return Value(Rat(1));
        case RingKind::Quotient:
        case RingKind::Series: {
            Value z = value_zero(d);
            z.coords()[0] = value_one(d->base);
            return z;
        }
    }
    throw Error("unreachable");
}

inline bool value_is_zero(const RingDesc& d, const Value& a) {
    switch (d->kind) {
        case RingKind::Integers:
        case RingKind::ModPrime: return a.as_int() == 0;
        case RingKind::Rationals: return a.as_rat() == 0;
        case RingKind::Quotient:
        case RingKind::Series: {
            for (const Value& c : a.coords())
                if (!value_is_zero(d->base, c)) return false;
            return true;
        }
    }
    throw Error("unreachable");
}

inline bool value_eq(const RingDesc& d, const Value& a, const Value& b) {
    switch (d->kind) {
        case RingKind::Integers:
        case RingKind::ModPrime: return a.as_int() == b.as_int();
        case RingKind::Rationals: return a.as_rat() == b.as_rat();
        case RingKind::Quotient:
        case RingKind::Series: {
            const auto& ca = a.coords();
            const auto& cb = b.coords();
            if (ca.size() != cb.size()) return false;
            for (size_t i = 0; i < ca.size(); ++i)
                if (!value_eq(d->base, ca[i], cb[i])) return false;
            return true;
        }
    }
    throw Error("unreachable");
}

namespace detail {

// Dense polynomial helpers over a base ring, used for quotient arithmetic.
// Coefficient lists are low-degree-first and not necessarily normalized.

inline int poly_degree(const RingDesc& base, const std::vector<Value>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!value_is_zero(base, p[i])) return i;
    return -1;
}

inline std::vector<Value> poly_mul(const RingDesc& base, const std::vector<Value>& a, const std::vector<Value>& b) {
    std::vector<Value> out(a.size() + b.size() - 1, value_zero(base));
    for (size_t i = 0; i < a.size(); ++i) {
        if (value_is_zero(base, a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (value_is_zero(base, b[j])) continue;
            out[i + j] = value_add(base, out[i + j], value_mul(base, a[i], b[j]));
        }
    }
    return out;
}

/// Remainder of p modulo a monic divisor.
inline std::vector<Value> poly_rem_monic(const RingDesc& base, std::vector<Value> p, const std::vector<Value>& m) {
    const int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(p.size()) - 1; i >= dm; --i) {
        if (value_is_zero(base, p[i])) continue;
        Value c = p[i];
        for (int j = 0; j <= dm; ++j)
            p[i - dm + j] = value_sub(base, p[i - dm + j], value_mul(base, c, m[j]));
    }
    p.resize(dm);
    return p;
}

/// Quotient/remainder by a divisor whose leading coefficient must be a unit.
inline std::pair<std::vector<Value>, std::vector<Value>> poly_divmod(const RingDesc& base, std::vector<Value> p,
                                                                     const std::vector<Value>& m) {
    const int dm = poly_degree(base, m);
    if (dm < 0) throw NotInvertible("polynomial division by zero");
    const Value lead_inv = value_inv(base, m[dm]);
    int dp = poly_degree(base, p);
    std::vector<Value> q(std::max(dp - dm + 1, 0), value_zero(base));
    while (dp >= dm) {
        Value c = value_mul(base, p[dp], lead_inv);
        q[dp - dm] = c;
        for (int j = 0; j <= dm; ++j)
            p[dp - dm + j] = value_sub(base, p[dp - dm + j], value_mul(base, c, m[j]));
        dp = poly_degree(base, p);
    }
    return {std::move(q), std::move(p)};
}

/// Extended Euclid: returns (g, s) with s*a == g (mod m). Throws NotInvertible
/// if a division en route requires inverting a nonunit.
inline std::pair<std::vector<Value>, std::vector<Value>> poly_half_ext_gcd(const RingDesc& base,
                                                                           std::vector<Value> a,
                                                                           std::vector<Value> m) {
    std::vector<Value> r0 = std::move(m), r1 = std::move(a);
    std::vector<Value> s0 = {value_zero(base)}, s1 = {value_one(base)};
    while (poly_degree(base, r1) >= 0) {
        auto [q, r2] = poly_divmod(base, r0, r1);
        std::vector<Value> qs = poly_mul(base, q, s1);
        std::vector<Value> s2(std::max(s0.size(), qs.size()), value_zero(base));
        for (size_t i = 0; i < s2.size(); ++i) {
            Value x = i < s0.size() ? s0[i] : value_zero(base);
            Value y = i < qs.size() ? qs[i] : value_zero(base);
            s2[i] = value_sub(base, x, y);
        }
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    return {std::move(r0), std::move(s0)};
}

}  // namespace detail

inline Value value_add(const RingDesc& d, const Value& a, const Value& b) {
    switch (d->kind) {
        case RingKind::Integers: return Value(Int(a.as_int() + b.as_int()));
        case RingKind::ModPrime: {
            Int s = a.as_int() + b.as_int();
            if (s >= d->prime) s -= d->prime;
            return Value(std::move(s));
        }
        case RingKind::Rationals: return Value(Rat(a.as_rat() + b.as_rat()));
        case RingKind::Quotient:
        case RingKind::Series: {
            std::vector<Value> out(a.coords().size());
            for (size_t i = 0; i < out.size(); ++i) out[i] = value_add(d->base, a.coords()[i], b.coords()[i]);
            return Value(std::move(out));
        }
    }
    throw Error("unreachable");
}

inline Value value_sub(const RingDesc& d, const Value& a, const Value& b) {
    switch (d->kind) {
        case RingKind::Integers: return Value(Int(a.as_int() - b.as_int()));
        case RingKind::ModPrime: {
            Int s = a.as_int() - b.as_int();
            if (s < 0) s += d->prime;
            return Value(std::move(s));
        }
        case RingKind::Rationals: return Value(Rat(a.as_rat() - b.as_rat()));
        case RingKind::Quotient:
        case RingKind::Series: {
            std::vector<Value> out(a.coords().size());
            for (size_t i = 0; i < out.size(); ++i) out[i] = value_sub(d->base, a.coords()[i], b.coords()[i]);
            return Value(std::move(out));
        }
    }
    throw Error("unreachable");
}

inline Value value_neg(const RingDesc& d, const Value& a) {
    switch (d->kind) {
        case RingKind::Integers: return Value(Int(-a.as_int()));
        case RingKind::ModPrime: {
            if (a.as_int() == 0) return a;
            return Value(Int(d->prime - a.as_int()));
        }
        case RingKind::Rationals: return Value(Rat(-a.as_rat()));
        case RingKind::Quotient:
        case RingKind::Series: {
            std::vector<Value> out(a.coords().size());
            for (size_t i = 0; i < out.size(); ++i) out[i] = value_neg(d->base, a.coords()[i]);
            return Value(std::move(out));
        }
    }
    throw Error("unreachable");
}

inline Value value_mul(const RingDesc& d, const Value& a, const Value& b) {
    switch (d->kind) {
        case RingKind::Integers: return Value(Int(a.as_int() * b.as_int()));
        case RingKind::ModPrime: return Value(Int(a.as_int() * b.as_int() % d->prime));
        case RingKind::Rationals: return Value(Rat(a.as_rat() * b.as_rat()));
        case RingKind::Quotient: {
            auto prod = detail::poly_mul(d->base, a.coords(), b.coords());
            auto red = detail::poly_rem_monic(d->base, std::move(prod), d->modulus);
            red.resize(d->quotient_degree(), value_zero(d->base));
            return Value(std::move(red));
        }
        case RingKind::Series: {
            // Cauchy product truncated to the ring's order.
            const auto& ca = a.coords();
            const auto& cb = b.coords();
            std::vector<Value> out(d->order, value_zero(d->base));
            for (int i = 0; i < d->order; ++i) {
                if (value_is_zero(d->base, ca[i])) continue;
                for (int j = 0; i + j < d->order; ++j) {
                    if (value_is_zero(d->base, cb[j])) continue;
                    out[i + j] = value_add(d->base, out[i + j], value_mul(d->base, ca[i], cb[j]));
                }
            }
            return Value(std::move(out));
        }
    }
    throw Error("unreachable");
}

inline Value value_inv(const RingDesc& d, const Value& a) {
    if (value_is_zero(d, a)) throw NotInvertible("zero is not invertible");
    switch (d->kind) {
        case RingKind::Integers: {
            if (a.as_int() == 1 || a.as_int() == -1) return a;
            throw NotInvertible(a.as_int().get_str() + " is not a unit in the integers");
        }
        case RingKind::ModPrime: {
            Int out;
            if (mpz_invert(out.get_mpz_t(), a.as_int().get_mpz_t(), d->prime.get_mpz_t()) == 0)
                throw NotInvertible("no inverse mod " + d->prime.get_str());
            return Value(std::move(out));
        }
        case RingKind::Rationals: return Value(Rat(1 / a.as_rat()));
        case RingKind::Quotient: {
            auto [g, s] = detail::poly_half_ext_gcd(d->base, a.coords(), d->modulus);
            if (detail::poly_degree(d->base, g) != 0)
                throw NotInvertible("nonunit in quotient ring (gcd with modulus has positive degree)");
            Value gi = value_inv(d->base, g[0]);
            std::vector<Value> scaled(s.size());
            for (size_t i = 0; i < s.size(); ++i) scaled[i] = value_mul(d->base, s[i], gi);
            auto red = detail::poly_rem_monic(d->base, std::move(scaled), d->modulus);
            red.resize(d->quotient_degree(), value_zero(d->base));
            return Value(std::move(red));
        }
        case RingKind::Series: {
            // b0 = a0^{-1}; b_n = -a0^{-1} * sum_{i=1..n} a_i b_{n-i}
            const auto& ca = a.coords();
            Value c0i = value_inv(d->base, ca[0]);
            std::vector<Value> out(d->order, value_zero(d->base));
            out[0] = c0i;
            for (int n = 1; n < d->order; ++n) {
                Value acc = value_zero(d->base);
                for (int i = 1; i <= n; ++i)
                    acc = value_add(d->base, acc, value_mul(d->base, ca[i], out[n - i]));
                out[n] = value_neg(d->base, value_mul(d->base, c0i, acc));
            }
            return Value(std::move(out));
        }
    }
    throw Error("unreachable");
}

/// Embed an integer into any ring.
inline Value value_from_int(const RingDesc& d, const Int& n) {
    switch (d->kind) {
        case RingKind::Integers: return Value(n);
        case RingKind::ModPrime: {
            Int m = n % d->prime;
            if (m < 0) m += d->prime;
            return Value(std::move(m));
        }
        case RingKind::Rationals: return Value(Rat(n));
        case RingKind::Quotient:
        case RingKind::Series: {
            Value z = value_zero(d);
            z.coords()[0] = value_from_int(d->base, n);
            return z;
        }
    }
    throw Error("unreachable");
}

/// Embed a rational where the ring permits it. Throws ReductionUndefined when
/// the denominator is not a unit (e.g. divisible by the characteristic).
inline Value value_from_rat(const RingDesc& d, const Rat& q) {
    if (q.get_den() == 1) return value_from_int(d, q.get_num());
    switch (d->kind) {
        case RingKind::Integers:
            throw ReductionUndefined("rational " + q.get_str() + " is not an integer");
        case RingKind::Rationals: return Value(q);
        case RingKind::ModPrime: {
            if (q.get_den() % d->prime == 0)
                throw ReductionUndefined("denominator of " + q.get_str() + " vanishes mod " + d->prime.get_str());
            Value num = value_from_int(d, q.get_num());
            Value den = value_from_int(d, q.get_den());
            return value_mul(d, num, value_inv(d, den));
        }
        case RingKind::Quotient:
        case RingKind::Series: {
            Value z = value_zero(d);
            z.coords()[0] = value_from_rat(d->base, q);
            return z;
        }
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// RingElement: descriptor-tagged immutable value with operator sugar

class RingElement {
   public:
    RingElement() : desc_(integers_ring()), val_(value_zero(desc_)) {}
    RingElement(RingDesc desc, Value val) : desc_(std::move(desc)), val_(std::move(val)) {}

    const RingDesc& ring() const { return desc_; }
    const Value& value() const { return val_; }

    bool is_zero() const { return value_is_zero(desc_, val_); }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        a.check(b);
        return {a.desc_, value_add(a.desc_, a.val_, b.val_)};
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        a.check(b);
        return {a.desc_, value_sub(a.desc_, a.val_, b.val_)};
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        a.check(b);
        return {a.desc_, value_mul(a.desc_, a.val_, b.val_)};
    }
    RingElement operator-() const { return {desc_, value_neg(desc_, val_)}; }

    RingElement inv() const { return {desc_, value_inv(desc_, val_)}; }

    /// Nonnegative integer power by binary exponentiation.
    RingElement pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RingElement acc(desc_, value_one(desc_));
        RingElement b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return acc;
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        a.check(b);
        return value_eq(a.desc_, a.val_, b.val_);
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

   private:
    void check(const RingElement& other) const {
        if (!desc_eq(desc_, other.desc_)) throw DescriptorMismatch();
    }

    RingDesc desc_;
    Value val_;
};

inline RingElement ring_zero(const RingDesc& d) { return {d, value_zero(d)}; }
inline RingElement ring_one(const RingDesc& d) { return {d, value_one(d)}; }
inline RingElement ring_int(const RingDesc& d, const Int& n) { return {d, value_from_int(d, n)}; }
inline RingElement ring_int(const RingDesc& d, long n) { return {d, value_from_int(d, Int(n))}; }
inline RingElement ring_rat(const RingDesc& d, const Rat& q) { return {d, value_from_rat(d, q)}; }

enum class RingOp { add, sub, mul, neg, pow, inv };

/// Uniform entry point mirroring the operation table; y is ignored for
/// neg/inv, and must carry the exponent (an Integers element) for pow.
inline RingElement ring_arith(RingOp op, const RingElement& x, const std::optional<RingElement>& y = std::nullopt) {
    switch (op) {
        case RingOp::add: return x + *y;
        case RingOp::sub: return x - *y;
        case RingOp::mul: return x * *y;
        case RingOp::neg: return -x;
        case RingOp::inv: return x.inv();
        case RingOp::pow: {
            const Int& e = y->value().as_int();
            if (e < 0) return x.inv().pow(Int(-e).get_si());
            return x.pow(e.get_si());
        }
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// cyclotomic polynomials and ring extensions

/// Integer polynomial helpers for cyclotomic computation (low-degree-first).
namespace detail {

inline std::vector<Int> zpoly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Exact division of integer polynomials (divisor monic); remainder must vanish.
inline std::vector<Int> zpoly_exact_div(std::vector<Int> p, const std::vector<Int>& m) {
    const int dm = static_cast<int>(m.size()) - 1;
    const int dp = static_cast<int>(p.size()) - 1;
    std::vector<Int> q(dp - dm + 1, Int(0));
    for (int i = dp; i >= dm; --i) {
        Int c = p[i];
        if (c == 0) continue;
        q[i - dm] = c;
        for (int j = 0; j <= dm; ++j) p[i - dm + j] -= c * m[j];
    }
    for (const Int& c : p)
        if (c != 0) throw Error("inexact polynomial division");
    return q;
}

}  // namespace detail

/// Phi_N as an integer coefficient list (low-degree-first, monic), computed by
/// dividing t^N - 1 by the cyclotomic polynomials of the proper divisors of N.
inline std::vector<Int> cyclotomic_polynomial(int N) {
    if (N < 1 || N > 16) throw InvalidArgument("cyclotomic index out of desk range [1, 16]");
    static std::map<int, std::vector<Int>> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    std::vector<Int> num(N + 1, Int(0));
    num[0] = -1;
    num[N] = 1;
    for (int d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        num = detail::zpoly_exact_div(std::move(num), cyclotomic_polynomial(d));
    }
    cache[N] = num;
    return num;
}

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Multiplicative order of x mod r (brute force; desk scale).
inline long order_mod(const Int& x, const Int& r) {
    Int acc = x % r;
    if (acc < 0) acc += r;
    if (acc == 0) return 0;
    Int cur = acc;
    long ord = 1;
    while (cur != 1) {
        cur = cur * acc % r;
        ++ord;
        if (ord > r) return 0;  // not a unit
    }
    return ord;
}

/// Adjoin a primitive N-th root of unity to the base ring; returns the
/// extended descriptor and the root itself.
inline std::pair<RingDesc, RingElement> adjoin_primitive_root(const RingDesc& base, int N) {
    if (N < 1 || N > 16) throw InvalidArgument("root index out of desk range [1, 16]");
    if (base->kind == RingKind::Rationals) {
        auto phi = cyclotomic_polynomial(N);
        std::vector<Value> mod(phi.size());
        for (size_t i = 0; i < phi.size(); ++i) mod[i] = Value(Rat(phi[i]));
        RingDesc ext = quotient_ring(base, std::move(mod));
        Value t = value_zero(ext);
        if (ext->quotient_degree() == 1) {
            // degree-1 quotient: the class of t is the negated constant term
            t.coords()[0] = value_neg(base, ext->modulus[0]);
        } else {
            t.coords()[1] = value_one(base);
        }
        return {ext, RingElement(ext, std::move(t))};
    }
    if (base->kind == RingKind::ModPrime) {
        const Int& r = base->prime;
        if (Int(N) % r == 0) throw CharDividesN("characteristic " + r.get_str() + " divides N");
        if ((r - 1) % N == 0) {
            // smallest canonical representative of exact multiplicative order N
            for (Int g = 1; g < r; ++g) {
                if (order_mod(g, r) == N) return {base, ring_int(base, g)};
            }
            throw Error("order-N element promised by N | r-1 not found");
        }
        if (N == 3 && r % 3 == 2) {
            // t^2+t+1 has no root mod r, so it is irreducible; K = GF(r^2)
            for (Int x = 0; x < r; ++x)
                if ((x * x + x + 1) % r == 0)
                    throw Error("t^2+t+1 unexpectedly has a root mod " + r.get_str());
            std::vector<Value> mod = {value_from_int(base, 1), value_from_int(base, 1), value_from_int(base, 1)};
            RingDesc ext = quotient_ring(base, std::move(mod));
            Value t = value_zero(ext);
            t.coords()[1] = value_one(base);
            return {ext, RingElement(ext, std::move(t))};
        }
        throw UnsupportedExtension("no order-" + std::to_string(N) + " root available over Z_" + r.get_str() +
                                   " (only N | r-1 and the N=3 quadratic extension are supported)");
    }
    throw InvalidArgument("adjoin_primitive_root expects Rationals or ModPrime base");
}

/// Adjoin a formal square root of Delta: Quotient(base, u^2 - Delta).
inline std::pair<RingDesc, RingElement> adjoin_quadratic(const RingDesc& base, const Int& delta) {
    if (delta == 0) throw ZeroDiscriminant();
    bool base_ok = base->kind == RingKind::Rationals ||
                   (base->kind == RingKind::Quotient && base->base->kind == RingKind::Rationals);
    if (!base_ok) throw InvalidArgument("adjoin_quadratic expects Rationals or Quotient(Rationals, ...)");
    std::vector<Value> mod = {value_neg(base, value_from_int(base, delta)), value_zero(base), value_one(base)};
    RingDesc ext = quotient_ring(base, std::move(mod));
    Value v = value_zero(ext);
    v.coords()[1] = value_one(base);
    return {ext, RingElement(ext, std::move(v))};
}

/// Truncated Cauchy product of two series elements of equal order.
inline RingElement series_mul_truncate(int order, const RingElement& f, const RingElement& g) {
    if (f.ring()->kind != RingKind::Series || f.ring()->order != order)
        throw DescriptorMismatch("series order mismatch");
    return f * g;
}

inline RingElement series_from_coeffs(const RingDesc& sring, const std::vector<RingElement>& coeffs) {
    Value z = value_zero(sring);
    for (size_t i = 0; i < coeffs.size() && i < z.coords().size(); ++i) z.coords()[i] = coeffs[i].value();
    return {sring, std::move(z)};
}

inline RingElement series_coeff(const RingElement& f, int n) {
    return {f.ring()->base, f.value().coords().at(n)};
}

// ---------------------------------------------------------------------------
// canonical text serialization

namespace detail {

inline std::string base_tag(const RingDesc& d) {
    switch (d->kind) {
        case RingKind::Integers:
        case RingKind::Rationals: return "";
        case RingKind::ModPrime: return "mod " + d->prime.get_str();
        default: break;
    }
    throw Error("unexpected base in serialization");
}

std::string value_str(const RingDesc& d, const Value& v);

inline char quotient_var(const RingDesc& d) {
    // innermost quotient prints 't', then 'u', then 'w'
    int q_below = 0;
    const RingDescriptor* cur = d->base.get();
    while (cur) {
        if (cur->kind == RingKind::Quotient) ++q_below;
        cur = cur->base ? cur->base.get() : nullptr;
    }
    static const char vars[] = {'t', 'u', 'w'};
    return vars[std::min(q_below, 2)];
}

/// Elements print low-degree-first ("2+3t"); moduli high-degree-first ("t^2+t+1").
inline std::string poly_str(const RingDesc& base, const std::vector<Value>& coeffs, char var, bool high_first = false) {
    std::string out;
    const int n = static_cast<int>(coeffs.size());
    for (int step = 0; step < n; ++step) {
        const int i = high_first ? n - 1 - step : step;
        if (value_is_zero(base, coeffs[i])) continue;
        std::string cs = value_str(base, coeffs[i]);
        bool composite = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
        if (composite) cs = "(" + cs + ")";
        std::string term;
        if (i == 0) {
            term = cs;
        } else {
            if (cs == "1")
                term = "";
            else if (cs == "-1")
                term = "-";
            else
                term = cs;
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty()) {
            if (!term.empty() && term[0] == '-') {
                out += "-";
                term = term.substr(1);
            } else {
                out += "+";
            }
        }
        out += term;
    }
    return out.empty() ? "0" : out;
}

inline std::string value_str(const RingDesc& d, const Value& v) {
    switch (d->kind) {
        case RingKind::Integers:
        case RingKind::ModPrime: return v.as_int().get_str();
        case RingKind::Rationals: {
            const Rat& q = v.as_rat();
            if (q.get_den() == 1) return q.get_num().get_str();
            return q.get_num().get_str() + "/" + q.get_den().get_str();
        }
        case RingKind::Quotient: {
            char var = quotient_var(d);
            std::string body = poly_str(d->base, v.coords(), var);
            std::string tag = "mod " + poly_str(d->base, d->modulus, var, true);
            RingDesc curp = d->base;
            while (curp) {
                if (curp->kind == RingKind::Quotient) {
                    tag += ", mod " + poly_str(curp->base, curp->modulus, quotient_var(curp), true);
                    curp = curp->base;
                } else {
                    std::string bt = base_tag(curp);
                    if (!bt.empty()) tag += ", " + bt;
                    break;
                }
            }
            return body + " (" + tag + ")";
        }
        case RingKind::Series: {
            std::string body = poly_str(d->base, v.coords(), 's');
            return body + " + O(s^" + std::to_string(d->order) + ")";
        }
    }
    throw Error("unreachable");
}

}  // namespace detail

inline std::string to_string(const RingElement& e) { return detail::value_str(e.ring(), e.value()); }

}  // namespace horasym
