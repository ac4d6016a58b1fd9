#pragma once

/**
 * @file horadam.hpp
 * @brief Horadam sequences w_{k+1} = p w_k + q w_{k-1}, their (p,q)-Fibonacci
 *        and (p,q)-Lucas specializations, and exact Binet evaluation in the
 *        quadratic extension ring.
 *
 * Negative indices use the backward extension w_{k-1} = (w_{k+1} - p w_k)/q,
 * which is exact over the rationals (q != 0 is enforced at construction).
 */

#include <string>
#include <vector>

#include "horasym/rings.hpp"

namespace horasym {

constexpr long kMaxSequenceIndex = 10000;  // bounds big-integer growth at desk scale

struct HoradamParams {
    long a0 = 0, a1 = 1, p = 1, q = 1;

    HoradamParams() = default;
    HoradamParams(long a0_, long a1_, long p_, long q_) : a0(a0_), a1(a1_), p(p_), q(q_) {
        if (q == 0) throw InvalidArgument("Horadam parameter q must be nonzero");
        if (delta() <= 0) throw InvalidArgument("Horadam discriminant p^2 + 4q must be positive");
    }

    Int delta() const { return Int(p) * p + 4 * Int(q); }

    std::string str() const {
        return "(" + std::to_string(a0) + "," + std::to_string(a1) + "," + std::to_string(p) + "," +
               std::to_string(q) + ")";
    }

    friend bool operator==(const HoradamParams& x, const HoradamParams& y) {
        return x.a0 == y.a0 && x.a1 == y.a1 && x.p == y.p && x.q == y.q;
    }
};

inline HoradamParams fibonacci_params(long p, long q) { return {0, 1, p, q}; }
inline HoradamParams lucas_params(long p, long q) { return {2, p, p, q}; }

/// Memoizing window over the whole index range; values are exact rationals
/// (integers for k >= 0).
class SequenceCache {
   public:
    explicit SequenceCache(const HoradamParams& params) : params_(params) {
        fwd_ = {Rat(params.a0), Rat(params.a1)};
    }

    const HoradamParams& params() const { return params_; }

    Rat at(long k) const {
        if (k > kMaxSequenceIndex || k < -kMaxSequenceIndex)
            throw InvalidArgument("sequence index exceeds desk-scale cap");
        if (k >= 0) {
            while (static_cast<long>(fwd_.size()) <= k)
                fwd_.push_back(Rat(params_.p) * fwd_[fwd_.size() - 1] + Rat(params_.q) * fwd_[fwd_.size() - 2]);
            return fwd_[k];
        }
        while (static_cast<long>(bwd_.size()) < -k) {
            long j = -static_cast<long>(bwd_.size());  // extending to w_{j-1}
            Rat w_j1 = at(j + 1), w_j = at(j);
            bwd_.push_back((w_j1 - Rat(params_.p) * w_j) / Rat(params_.q));
        }
        return bwd_[-k - 1];
    }

   private:
    HoradamParams params_;
    mutable std::vector<Rat> fwd_;
    mutable std::vector<Rat> bwd_;
};

struct SequenceWindow {
    long lo = 0, hi = 0;
    std::vector<Rat> values;  // values[i] = w_{lo+i}

    const Rat& at(long k) const { return values.at(k - lo); }
};

inline SequenceWindow generate_window(const HoradamParams& params, long lo, long hi) {
    if (lo > hi) throw InvalidArgument("window bounds must satisfy lo <= hi");
    SequenceCache c(params);
    SequenceWindow w{lo, hi, {}};
    w.values.reserve(hi - lo + 1);
    for (long k = lo; k <= hi; ++k) w.values.push_back(c.at(k));
    return w;
}

/// The quadratic ring Q[v]/(v^2 - Delta) together with the characteristic
/// roots alpha = (p+v)/2, beta = (p-v)/2 and the Binet constants
/// A = a1 - a0*beta, B = a1 - a0*alpha.
struct BinetContext {
    HoradamParams params;
    RingDesc ring;
    RingElement alpha, beta, A, B, sqrt_delta;

    /// v^{-1} = v / Delta; valid even when Delta is a perfect square, where
    /// the quotient is not a field but v is still a unit.
    RingElement sqrt_delta_inv() const {
        return sqrt_delta * ring_rat(ring, make_rat(1, params.delta()));
    }
};

inline BinetContext binet_context(const HoradamParams& params) {
    auto [ring, v] = adjoin_quadratic(rationals_ring(), params.delta());
    RingElement half = ring_rat(ring, make_rat(1, 2));
    RingElement p = ring_int(ring, params.p);
    RingElement alpha = (p + v) * half;
    RingElement beta = (p - v) * half;
    RingElement A = ring_int(ring, params.a1) - ring_int(ring, params.a0) * beta;
    RingElement B = ring_int(ring, params.a1) - ring_int(ring, params.a0) * alpha;
    return {params, ring, alpha, beta, A, B, v};
}

/// alpha^k for any integer k; negative powers use alpha^{-1} = -beta/q (and
/// symmetrically for beta), so no generic quotient inversion is needed.
inline RingElement binet_root_pow(const BinetContext& ctx, bool use_alpha, long k) {
    const RingElement& root = use_alpha ? ctx.alpha : ctx.beta;
    if (k >= 0) return root.pow(k);
    const RingElement& other = use_alpha ? ctx.beta : ctx.alpha;
    RingElement inv = -other * ring_rat(ctx.ring, make_rat(1, ctx.params.q));
    return inv.pow(-k);
}

/// w_k = (A alpha^k - B beta^k) / (alpha - beta), exact in the quadratic ring.
inline RingElement binet_eval(const BinetContext& ctx, long k) {
    if (k > kMaxSequenceIndex || k < -kMaxSequenceIndex)
        throw InvalidArgument("sequence index exceeds desk-scale cap");
    RingElement num = ctx.A * binet_root_pow(ctx, true, k) - ctx.B * binet_root_pow(ctx, false, k);
    return num * ctx.sqrt_delta_inv();
}

/// Rational coordinate of a quadratic-ring element whose v-coordinate is zero.
inline Rat rational_part(const RingElement& e) {
    const auto& c = e.value().coords();
    if (!value_is_zero(e.ring()->base, c[1]))
        throw InvalidArgument("element has a nonzero sqrt coordinate: " + to_string(e));
    return c[0].as_rat();
}

/// (F_{p,q,k}, L_{p,q,k}) by recurrence; k >= 0 keeps both integral.
inline std::pair<Int, Int> pq_sequences(long p, long q, long k) {
    if (k < 0) throw InvalidArgument("pq_sequences expects k >= 0");
    SequenceCache f(fibonacci_params(p, q)), l(lucas_params(p, q));
    return {f.at(k).get_num(), l.at(k).get_num()};
}

}  // namespace horasym
