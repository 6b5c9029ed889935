#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppv/ff.hpp"

namespace ppv {

struct Term {
    uint64_t exp;
    FieldElem coeff;
};

/// Sparse polynomial over F_{Q^2}: strictly increasing exponents, no zero
/// coefficients. Exponents may be huge (up to 2^63-1); evaluation is
/// per-term square-and-multiply so the cost is O(terms), independent of
/// the degree.
class TermSum {
public:
    TermSum() = default; // unbound zero
    explicit TermSum(const FieldCtx& ctx) : ctx_(&ctx) {}
    TermSum(const FieldCtx& ctx, std::vector<Term> terms);

    const FieldCtx* ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    uint64_t degree() const { return terms_.empty() ? 0 : terms_.back().exp; }

    FieldElem eval(const FieldElem& x) const;
    TermSum scaled(const FieldElem& c) const;

    friend TermSum operator+(const TermSum& a, const TermSum& b);
    bool operator==(const TermSum& other) const;

private:
    const FieldCtx* ctx_ = nullptr;
    std::vector<Term> terms_;
};

/// Dense polynomial over F_{Q^2}, coefficient index = degree, trailing
/// coefficient nonzero. Degree is capped so reductions mod x^q - x stay
/// materializable.
class DensePoly {
public:
    static constexpr uint64_t kMaxDegree = 1u << 20;

    DensePoly() = default; // unbound zero
    explicit DensePoly(const FieldCtx& ctx) : ctx_(&ctx) {}
    DensePoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs);

    const FieldCtx* ctx() const { return ctx_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    uint64_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    FieldElem coeff(uint64_t i) const;

    FieldElem eval(const FieldElem& x) const;
    TermSum to_sparse() const;
    DensePoly scaled(const FieldElem& c) const;

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    bool operator==(const DensePoly& other) const;

private:
    const FieldCtx* ctx_ = nullptr;
    std::vector<FieldElem> coeffs_;
};

DensePoly dense_pow(const DensePoly& f, uint64_t e);

/// The unique polynomial of degree < q that agrees with f as a function on
/// F_q: exponent e > 0 maps to ((e-1) mod (q-1)) + 1, exponent 0 stays 0,
/// colliding coefficients are summed.
DensePoly reduce_mod_field(const TermSum& f);

/// f(x^s): every exponent multiplied by s (s >= 1), with overflow checked
/// against 2^63-1.
TermSum substitute_monomial(const TermSum& f, uint64_t s);

/// Equality as functions on F_q.
bool functions_equal(const TermSum& a, const TermSum& b);

/// "e1:c1;e2:c2;..." with coefficients in the element text format; "0" or
/// the empty string denote the zero polynomial.
std::string to_text(const TermSum& f);
std::string to_text(const DensePoly& f);
TermSum parse_termsum(const FieldCtx& ctx, std::string_view text);
DensePoly parse_densepoly(const FieldCtx& ctx, std::string_view text);

} // namespace ppv
