#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ppv/error.hpp"

namespace ppv {

class FieldCtx;

/// Element of F_{Q^2}. Stored as the index whose base-p digits are the
/// coordinates (c0, ..., c_{2m-1}) in the tower basis (1, t, ..., t^{m-1},
/// u, ut, ..., ut^{m-1}), low degree first. Elements are value types bound
/// to a FieldCtx; mixing contexts throws ContextMismatch.
class FieldElem {
public:
    FieldElem() = default; // unbound; any arithmetic throws

    uint32_t index() const { return idx_; }
    const FieldCtx* ctx() const { return ctx_; }
    bool is_bound() const { return ctx_ != nullptr; }
    bool is_zero() const { return idx_ == 0; }

    /// Coordinates over F_p, length 2m, low degree first.
    std::vector<uint32_t> coords() const;

    FieldElem inv() const;
    FieldElem pow(uint64_t e) const;
    FieldElem frobenius() const;       // x -> x^Q
    bool is_in_subfield() const;       // fixed by Frobenius, i.e. in F_Q

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    FieldElem operator-() const;

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

private:
    friend class FieldCtx;
    FieldElem(const FieldCtx* ctx, uint32_t idx) : ctx_(ctx), idx_(idx) {}

    const FieldCtx* ctx_ = nullptr;
    uint32_t idx_ = 0;
};

/// Immutable description of the tower F_p < F_Q < F_{Q^2} with q = Q^2.
///
/// Moduli are the lexicographically smallest monic irreducibles
/// (coefficients compared low-degree-first), the generator is the
/// coordinate-lexicographically smallest element of order q-1, and
/// mu_{Q+1} is enumerated as powers of generator^(Q-1). Everything is
/// precomputed at construction; instances are safe to share across threads.
class FieldCtx {
public:
    static constexpr uint64_t kMaxQ = 1024; // q = Q^2 <= 2^20

    /// Builds the context for a prime power Q. `modulus_rank` selects the
    /// rank-th monic irreducible quadratic over F_Q in lexicographic order
    /// (0 = default model); nonzero ranks exist to check that verdicts are
    /// model-independent.
    static std::shared_ptr<const FieldCtx> make(uint64_t Q, uint32_t modulus_rank = 0);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t Q() const { return Q_; }
    uint32_t q() const { return q_; }
    uint32_t size() const { return q_; }

    /// Monic irreducible of degree m over F_p defining F_Q; m+1 coefficients
    /// in [0,p), low degree first.
    const std::vector<uint32_t>& modulus_mid() const { return mid_mod_; }
    /// Monic irreducible of degree 2 over F_Q defining F_{Q^2}; 3 coefficients
    /// given as F_Q element indices, low degree first.
    const std::vector<uint32_t>& modulus_top() const { return top_mod_; }

    FieldElem generator() const { return FieldElem(this, gen_); }

    /// The Q+1 solutions of x^{Q+1} = 1, ordered as (generator^(Q-1))^i.
    const std::vector<FieldElem>& unit_circle() const { return mu_; }

    /// The d-th roots of unity, d | q-1, ordered as powers of generator^((q-1)/d).
    std::vector<FieldElem> roots_of_unity(uint64_t d) const;

    /// Fixed enumeration of F_q: element(i) has index i, 0 <= i < q.
    FieldElem element(uint32_t idx) const;
    FieldElem zero() const { return FieldElem(this, 0); }
    FieldElem one() const { return FieldElem(this, one_); }

    /// Canonical ring homomorphism Z -> F_{Q^2}.
    FieldElem from_int(int64_t n) const;
    FieldElem from_coords(const std::vector<uint32_t>& coords) const;

    bool on_unit_circle(const FieldElem& a) const;

    // index-level arithmetic (used by FieldElem operators)
    uint32_t add_idx(uint32_t a, uint32_t b) const;
    uint32_t sub_idx(uint32_t a, uint32_t b) const;
    uint32_t neg_idx(uint32_t a) const;
    uint32_t mul_idx(uint32_t a, uint32_t b) const;
    uint32_t inv_idx(uint32_t a) const;
    uint32_t pow_idx(uint32_t a, uint64_t e) const;
    uint32_t frob_idx(uint32_t a) const;

private:
    FieldCtx() = default;
    void build(uint64_t Q, uint32_t modulus_rank);

    uint32_t p_ = 0, m_ = 0, Q_ = 0, q_ = 0;
    uint32_t one_ = 1;
    uint32_t gen_ = 0;
    std::vector<uint32_t> mid_mod_;     // over F_p
    std::vector<uint32_t> top_mod_;     // over F_Q, element indices
    std::vector<uint32_t> mid_log_, mid_antilog_;
    std::vector<uint32_t> log_, antilog_;
    std::vector<FieldElem> mu_;

    // construction-time helpers (tower arithmetic on mid indices)
    uint32_t mid_add(uint32_t a, uint32_t b) const;
    uint32_t mid_neg(uint32_t a) const;
    uint32_t mid_mul_slow(uint32_t a, uint32_t b) const;
    uint32_t mid_mul(uint32_t a, uint32_t b) const;
    uint32_t top_mul_tower(uint32_t a, uint32_t b) const;
    uint32_t neg_t0_ = 0, neg_t1_ = 0; // negated top modulus coefficients
};

/// "c0,c1,...,c_{2m-1}" coordinates over F_p, low degree first.
std::string to_text(const FieldElem& a);

/// Accepts the coordinate form, "g^k" (generator power), and "0".
FieldElem parse_element(const FieldCtx& ctx, std::string_view text);

} // namespace ppv
