#include "ppv/poly.hpp"

#include <algorithm>
#include <charconv>

namespace ppv {

namespace {

constexpr uint64_t kMaxExp = (1ull << 63) - 1;

const FieldCtx* require_ctx(const FieldCtx* ctx, const char* what) {
    if (!ctx) raise(ErrorKind::ContextMismatch, std::string(what) + " not bound to a context");
    return ctx;
}

} // namespace

// ---------------------------------------------------------------------------
// TermSum

TermSum::TermSum(const FieldCtx& ctx, std::vector<Term> terms) : ctx_(&ctx) {
    for (const auto& t : terms) {
        if (t.coeff.ctx() != &ctx)
            raise(ErrorKind::ContextMismatch, "term coefficient from another context");
        if (t.exp > kMaxExp) raise(ErrorKind::Overflow, "exponent exceeds 2^63-1");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().exp == t.exp)
            terms_.back().coeff = terms_.back().coeff + t.coeff;
        else
            terms_.push_back(t);
    }
    std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

FieldElem TermSum::eval(const FieldElem& x) const {
    const FieldCtx* c = require_ctx(ctx_, "polynomial");
    if (x.ctx() != c) raise(ErrorKind::ContextMismatch, "evaluation point from another context");
    FieldElem acc = c->zero();
    for (const auto& t : terms_) acc = acc + t.coeff * x.pow(t.exp);
    return acc;
}

TermSum TermSum::scaled(const FieldElem& c) const {
    const FieldCtx* cx = require_ctx(ctx_, "polynomial");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exp, t.coeff * c});
    return TermSum(*cx, std::move(out));
}

TermSum operator+(const TermSum& a, const TermSum& b) {
    const FieldCtx* c = require_ctx(a.ctx_, "polynomial");
    if (b.ctx_ != c) raise(ErrorKind::ContextMismatch, "polynomials from different contexts");
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return TermSum(*c, std::move(all));
}

bool TermSum::operator==(const TermSum& other) const {
    if (ctx_ != other.ctx_) raise(ErrorKind::ContextMismatch, "polynomials from different contexts");
    if (terms_.size() != other.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != other.terms_[i].exp || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// DensePoly

DensePoly::DensePoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs)
    : ctx_(&ctx), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.ctx() != &ctx) raise(ErrorKind::ContextMismatch, "coefficient from another context");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (!coeffs_.empty() && coeffs_.size() - 1 > kMaxDegree)
        raise(ErrorKind::CapExceeded, "dense degree exceeds 2^20");
}

FieldElem DensePoly::coeff(uint64_t i) const {
    const FieldCtx* c = require_ctx(ctx_, "polynomial");
    return i < coeffs_.size() ? coeffs_[i] : c->zero();
}

FieldElem DensePoly::eval(const FieldElem& x) const {
    const FieldCtx* c = require_ctx(ctx_, "polynomial");
    if (x.ctx() != c) raise(ErrorKind::ContextMismatch, "evaluation point from another context");
    FieldElem acc = c->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

TermSum DensePoly::to_sparse() const {
    const FieldCtx* c = require_ctx(ctx_, "polynomial");
    std::vector<Term> terms;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) terms.push_back({i, coeffs_[i]});
    return TermSum(*c, std::move(terms));
}

DensePoly DensePoly::scaled(const FieldElem& c) const {
    const FieldCtx* cx = require_ctx(ctx_, "polynomial");
    std::vector<FieldElem> out = coeffs_;
    for (auto& a : out) a = a * c;
    return DensePoly(*cx, std::move(out));
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    const FieldCtx* c = require_ctx(a.ctx_, "polynomial");
    if (b.ctx_ != c) raise(ErrorKind::ContextMismatch, "polynomials from different contexts");
    std::vector<FieldElem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), c->zero());
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.coeffs_.size()) out[i] = out[i] + a.coeffs_[i];
        if (i < b.coeffs_.size()) out[i] = out[i] + b.coeffs_[i];
    }
    return DensePoly(*c, std::move(out));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    const FieldCtx* c = require_ctx(b.ctx_, "polynomial");
    return a + b.scaled(-c->one());
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    const FieldCtx* c = require_ctx(a.ctx_, "polynomial");
    if (b.ctx_ != c) raise(ErrorKind::ContextMismatch, "polynomials from different contexts");
    if (a.is_zero() || b.is_zero()) return DensePoly(*c);
    if (a.degree() + b.degree() > DensePoly::kMaxDegree)
        raise(ErrorKind::CapExceeded, "product degree exceeds 2^20");
    std::vector<FieldElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, c->zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(*c, std::move(out));
}

bool DensePoly::operator==(const DensePoly& other) const {
    if (ctx_ != other.ctx_) raise(ErrorKind::ContextMismatch, "polynomials from different contexts");
    if (coeffs_.size() != other.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != other.coeffs_[i]) return false;
    return true;
}

DensePoly dense_pow(const DensePoly& f, uint64_t e) {
    const FieldCtx* c = require_ctx(f.ctx(), "polynomial");
    DensePoly acc(*c, {c->one()});
    DensePoly base = f;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// reduction and substitution

DensePoly reduce_mod_field(const TermSum& f) {
    const FieldCtx* c = require_ctx(f.ctx(), "polynomial");
    const uint64_t q = c->q();
    if (q > DensePoly::kMaxDegree) raise(ErrorKind::CapExceeded, "q exceeds the densification cap");
    std::vector<FieldElem> out(q, c->zero());
    for (const auto& t : f.terms()) {
        const uint64_t e = t.exp == 0 ? 0 : (t.exp - 1) % (q - 1) + 1;
        out[e] = out[e] + t.coeff;
    }
    return DensePoly(*c, std::move(out));
}

TermSum substitute_monomial(const TermSum& f, uint64_t s) {
    const FieldCtx* c = require_ctx(f.ctx(), "polynomial");
    if (s == 0) raise(ErrorKind::InvalidArgument, "substitution power must be positive");
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        if (t.exp > kMaxExp / s) raise(ErrorKind::Overflow, "exponent exceeds 2^63-1 after substitution");
        out.push_back({t.exp * s, t.coeff});
    }
    return TermSum(*c, std::move(out));
}

bool functions_equal(const TermSum& a, const TermSum& b) {
    return reduce_mod_field(a) == reduce_mod_field(b);
}

// ---------------------------------------------------------------------------
// text format

namespace {

std::string terms_to_text(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += ';';
        out += std::to_string(t.exp);
        out += ':';
        out += to_text(t.coeff);
    }
    return out;
}

} // namespace

std::string to_text(const TermSum& f) { return terms_to_text(f.terms()); }

std::string to_text(const DensePoly& f) { return terms_to_text(f.to_sparse().terms()); }

TermSum parse_termsum(const FieldCtx& ctx, std::string_view text) {
    if (text.empty() || text == "0") return TermSum(ctx);
    std::vector<Term> terms;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        std::string_view piece =
            text.substr(pos, semi == std::string_view::npos ? semi : semi - pos);
        size_t colon = piece.find(':');
        if (colon == std::string_view::npos)
            raise(ErrorKind::ParseError, "expected exp:coeff in: " + std::string(piece));
        uint64_t e = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + colon, e);
        if (ec != std::errc() || ptr != piece.data() + colon)
            raise(ErrorKind::ParseError, "bad exponent in: " + std::string(piece));
        if (e > kMaxExp) raise(ErrorKind::Overflow, "exponent exceeds 2^63-1");
        terms.push_back({e, parse_element(ctx, piece.substr(colon + 1))});
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return TermSum(ctx, std::move(terms));
}

DensePoly parse_densepoly(const FieldCtx& ctx, std::string_view text) {
    TermSum f = parse_termsum(ctx, text);
    if (!f.is_zero() && f.degree() > DensePoly::kMaxDegree)
        raise(ErrorKind::CapExceeded, "dense degree exceeds 2^20");
    std::vector<FieldElem> coeffs(f.is_zero() ? 0 : f.degree() + 1, ctx.zero());
    for (const auto& t : f.terms()) coeffs[t.exp] = t.coeff;
    return DensePoly(ctx, std::move(coeffs));
}

} // namespace ppv
