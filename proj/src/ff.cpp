#include "ppv/ff.hpp"

#include <algorithm>
#include <charconv>

namespace ppv {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotAPrimePower:     return "NotAPrimePower";
    case ErrorKind::TooLarge:           return "TooLarge";
    case ErrorKind::DivisionByZero:     return "DivisionByZero";
    case ErrorKind::ContextMismatch:    return "ContextMismatch";
    case ErrorKind::CapExceeded:        return "CapExceeded";
    case ErrorKind::Overflow:           return "Overflow";
    case ErrorKind::Degenerate:         return "Degenerate";
    case ErrorKind::InvalidDivisor:     return "InvalidDivisor";
    case ErrorKind::SpecViolation:      return "SpecViolation";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError:         return "ParseError";
    case ErrorKind::InvalidArgument:    return "InvalidArgument";
    }
    return "UnknownError";
}

namespace {

// dense polynomial over F_p, low degree first; used only during construction
using PPoly = std::vector<uint32_t>;

void trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly poly_mul(const PPoly& a, const PPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (uint32_t)((c[i + j] + (uint64_t)a[i] * b[j]) % p);
    }
    return c;
}

// remainder of f by monic g
PPoly poly_mod(PPoly f, const PPoly& g, uint32_t p) {
    const size_t dg = g.size() - 1;
    for (;;) {
        trim(f);
        if (f.size() <= dg) return f;
        const uint32_t lead = f.back();
        const size_t shift = f.size() - 1 - dg;
        for (size_t i = 0; i <= dg; ++i) {
            const uint32_t s = (uint32_t)((uint64_t)lead * g[i] % p);
            f[shift + i] = (f[shift + i] + p - s) % p;
        }
    }
}

// trial division by all monic polynomials of degree 1..deg(f)/2
bool is_irreducible(const PPoly& f, uint32_t p) {
    const size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t r = 0; r < count; ++r) {
            PPoly g(d + 1, 0);
            uint64_t v = r;
            for (size_t i = 0; i < d; ++i) { g[i] = (uint32_t)(v % p); v /= p; }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

// ---------------------------------------------------------------------------
// construction

std::shared_ptr<const FieldCtx> FieldCtx::make(uint64_t Q, uint32_t modulus_rank) {
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->build(Q, modulus_rank);
    return ctx;
}

void FieldCtx::build(uint64_t Q, uint32_t modulus_rank) {
    if (Q > kMaxQ) raise(ErrorKind::TooLarge, "Q > " + std::to_string(kMaxQ));
    if (Q < 2) raise(ErrorKind::NotAPrimePower, "Q must be at least 2");

    // factor Q = p^m
    uint64_t p = 0, rest = Q;
    for (uint64_t d = 2; d * d <= Q; ++d) {
        if (Q % d == 0) { p = d; break; }
    }
    if (p == 0) p = Q; // Q prime
    uint32_t m = 0;
    while (rest % p == 0) { rest /= p; ++m; }
    if (rest != 1)
        raise(ErrorKind::NotAPrimePower, std::to_string(Q) + " has more than one prime factor");

    p_ = (uint32_t)p;
    m_ = m;
    Q_ = (uint32_t)Q;
    q_ = Q_ * Q_;

    // mid modulus: lexicographically smallest monic irreducible of degree m,
    // constant coefficient most significant in the comparison
    {
        uint64_t count = 1;
        for (uint32_t i = 0; i < m_; ++i) count *= p_;
        for (uint64_t r = 0; r < count; ++r) {
            PPoly f(m_ + 1, 0);
            uint64_t v = r;
            for (uint32_t i = 0; i < m_; ++i) {
                uint32_t digit = (uint32_t)(v % p_); // least significant digit of r
                f[m_ - 1 - i] = digit;               // varies fastest = last coordinate
                v /= p_;
            }
            f[m_] = 1;
            if (is_irreducible(f, p_)) { mid_mod_ = f; break; }
        }
    }

    // mid discrete-log tables (generator of F_Q^* found by order testing)
    {
        auto mid_pow_slow = [&](uint32_t a, uint64_t e) {
            uint32_t acc = 1, base = a;
            while (e) {
                if (e & 1) acc = mid_mul_slow(acc, base);
                base = mid_mul_slow(base, base);
                e >>= 1;
            }
            return acc;
        };
        const auto factors = prime_factors(Q_ - 1);
        uint32_t g = 1;
        for (uint32_t c = 1; c < Q_; ++c) {
            bool primitive = true;
            for (uint64_t f : factors)
                if (mid_pow_slow(c, (Q_ - 1) / f) == 1) { primitive = false; break; }
            if (primitive) { g = c; break; }
        }
        mid_antilog_.assign(Q_ - 1, 0);
        mid_log_.assign(Q_, 0);
        uint32_t acc = 1;
        for (uint32_t i = 0; i + 1 < Q_; ++i) {
            mid_antilog_[i] = acc;
            mid_log_[acc] = i;
            acc = mid_mul_slow(acc, g);
        }
    }

    // top modulus: rank-th lexicographically smallest monic irreducible
    // u^2 + t1*u + t0 over F_Q (degree 2: irreducible <=> no root)
    {
        uint32_t found = 0;
        bool done = false;
        for (uint32_t t0 = 0; t0 < Q_ && !done; ++t0) {
            for (uint32_t t1 = 0; t1 < Q_ && !done; ++t1) {
                bool has_root = false;
                for (uint32_t x = 0; x < Q_; ++x) {
                    uint32_t v = mid_add(mid_add(mid_mul(x, x), mid_mul(t1, x)), t0);
                    if (v == 0) { has_root = true; break; }
                }
                if (!has_root) {
                    if (found == modulus_rank) {
                        top_mod_ = {t0, t1, 1};
                        done = true;
                    }
                    ++found;
                }
            }
        }
        if (!done)
            raise(ErrorKind::InvalidArgument,
                  "modulus_rank " + std::to_string(modulus_rank) + " out of range for Q=" +
                      std::to_string(Q_));
        neg_t0_ = mid_neg(top_mod_[0]);
        neg_t1_ = mid_neg(top_mod_[1]);
    }

    // generator of F_{Q^2}^*: smallest in coordinate-lex order (c0 most
    // significant) among elements of multiplicative order q-1
    {
        auto top_pow_slow = [&](uint32_t a, uint64_t e) {
            uint32_t acc = 1, base = a;
            while (e) {
                if (e & 1) acc = top_mul_tower(acc, base);
                base = top_mul_tower(base, base);
                e >>= 1;
            }
            return acc;
        };
        const auto factors = prime_factors(q_ - 1);
        const uint32_t n_coords = 2 * m_;
        bool found = false;
        for (uint64_t r = 1; r < q_ && !found; ++r) {
            // decode lex rank: c0 is the most significant base-p digit
            uint32_t idx = 0;
            uint64_t v = r;
            for (uint32_t i = 0; i < n_coords; ++i) {
                uint32_t digit = (uint32_t)(v % p_); // coordinate c_{n_coords-1-i}
                v /= p_;
                uint64_t w = 1;
                for (uint32_t j = 0; j < n_coords - 1 - i; ++j) w *= p_;
                idx += (uint32_t)(digit * w);
            }
            bool primitive = true;
            for (uint64_t f : factors)
                if (top_pow_slow(idx, (q_ - 1) / f) == 1) { primitive = false; break; }
            if (primitive) { gen_ = idx; found = true; }
        }

        log_.assign(q_, UINT32_MAX);
        antilog_.assign(q_ - 1, 0);
        uint32_t acc = 1;
        for (uint32_t i = 0; i + 1 < q_; ++i) {
            antilog_[i] = acc;
            log_[acc] = i;
            acc = top_mul_tower(acc, gen_);
        }
    }

    // mu_{Q+1} = powers of generator^(Q-1)
    mu_.reserve(Q_ + 1);
    for (uint32_t i = 0; i <= Q_; ++i) {
        uint64_t e = (uint64_t)(Q_ - 1) * i % (q_ - 1);
        mu_.push_back(FieldElem(this, antilog_[e]));
    }
}

// ---------------------------------------------------------------------------
// tower arithmetic used while building tables

uint32_t FieldCtx::mid_add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += (a % p_ + b % p_) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

uint32_t FieldCtx::mid_neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += (p_ - a % p_) % p_ * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

uint32_t FieldCtx::mid_mul_slow(uint32_t a, uint32_t b) const {
    PPoly fa(m_), fb(m_);
    for (uint32_t i = 0; i < m_; ++i) { fa[i] = a % p_; a /= p_; }
    for (uint32_t i = 0; i < m_; ++i) { fb[i] = b % p_; b /= p_; }
    PPoly r = poly_mod(poly_mul(fa, fb, p_), mid_mod_, p_);
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        if (i < r.size()) out += r[i] * place;
        place *= p_;
    }
    return out;
}

uint32_t FieldCtx::mid_mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return mid_antilog_[(mid_log_[a] + mid_log_[b]) % (Q_ - 1)];
}

uint32_t FieldCtx::top_mul_tower(uint32_t a, uint32_t b) const {
    const uint32_t a0 = a % Q_, a1 = a / Q_, b0 = b % Q_, b1 = b / Q_;
    const uint32_t p11 = mid_mul(a1, b1);
    const uint32_t cross = mid_add(mid_mul(a0, b1), mid_mul(a1, b0));
    // u^2 = -t1*u - t0
    const uint32_t c0 = mid_add(mid_mul(a0, b0), mid_mul(p11, neg_t0_));
    const uint32_t c1 = mid_add(cross, mid_mul(p11, neg_t1_));
    return c0 + Q_ * c1;
}

// ---------------------------------------------------------------------------
// runtime arithmetic

uint32_t FieldCtx::add_idx(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < 2 * m_; ++i) {
        out += (a % p_ + b % p_) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

uint32_t FieldCtx::neg_idx(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < 2 * m_; ++i) {
        out += (p_ - a % p_) % p_ * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

uint32_t FieldCtx::sub_idx(uint32_t a, uint32_t b) const { return add_idx(a, neg_idx(b)); }

uint32_t FieldCtx::mul_idx(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[((uint64_t)log_[a] + log_[b]) % (q_ - 1)];
}

uint32_t FieldCtx::inv_idx(uint32_t a) const {
    if (a == 0) raise(ErrorKind::DivisionByZero, "inverse of zero");
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t FieldCtx::pow_idx(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? one_ : 0;
    const uint64_t r = (uint64_t)((unsigned __int128)log_[a] * e % (q_ - 1));
    return antilog_[r];
}

uint32_t FieldCtx::frob_idx(uint32_t a) const {
    if (a == 0) return 0;
    return antilog_[(uint64_t)log_[a] * Q_ % (q_ - 1)];
}

// ---------------------------------------------------------------------------
// public element factories

FieldElem FieldCtx::element(uint32_t idx) const {
    if (idx >= q_) raise(ErrorKind::InvalidArgument, "element index out of range");
    return FieldElem(this, idx);
}

FieldElem FieldCtx::from_int(int64_t n) const {
    int64_t r = n % (int64_t)p_;
    if (r < 0) r += p_;
    return FieldElem(this, (uint32_t)r);
}

FieldElem FieldCtx::from_coords(const std::vector<uint32_t>& coords) const {
    if (coords.size() != 2 * m_)
        raise(ErrorKind::InvalidArgument, "expected " + std::to_string(2 * m_) + " coordinates");
    uint32_t idx = 0, place = 1;
    for (uint32_t i = 0; i < 2 * m_; ++i) {
        if (coords[i] >= p_) raise(ErrorKind::InvalidArgument, "coordinate out of [0,p)");
        idx += coords[i] * place;
        place *= p_;
    }
    return FieldElem(this, idx);
}

std::vector<FieldElem> FieldCtx::roots_of_unity(uint64_t d) const {
    if (d == 0 || (q_ - 1) % d != 0)
        raise(ErrorKind::InvalidDivisor, std::to_string(d) + " does not divide q-1");
    std::vector<FieldElem> out;
    out.reserve(d);
    const uint64_t step = (q_ - 1) / d;
    for (uint64_t i = 0; i < d; ++i) out.push_back(FieldElem(this, antilog_[step * i % (q_ - 1)]));
    return out;
}

bool FieldCtx::on_unit_circle(const FieldElem& a) const {
    if (a.ctx() != this) raise(ErrorKind::ContextMismatch, "element from another context");
    if (a.is_zero()) return false;
    return log_[a.index()] % (Q_ - 1) == 0; // mu_{Q+1} = <generator^(Q-1)>
}

// ---------------------------------------------------------------------------
// FieldElem

namespace {

const FieldCtx* same_ctx(const FieldElem& a, const FieldElem& b) {
    if (!a.is_bound() || !b.is_bound())
        raise(ErrorKind::ContextMismatch, "element not bound to a context");
    if (a.ctx() != b.ctx())
        raise(ErrorKind::ContextMismatch, "elements belong to different contexts");
    return a.ctx();
}

const FieldCtx* ctx_of(const FieldElem& a) {
    if (!a.is_bound()) raise(ErrorKind::ContextMismatch, "element not bound to a context");
    return a.ctx();
}

} // namespace

std::vector<uint32_t> FieldElem::coords() const {
    const FieldCtx* c = ctx_of(*this);
    std::vector<uint32_t> out(2 * c->m());
    uint32_t v = idx_;
    for (auto& d : out) { d = v % c->p(); v /= c->p(); }
    return out;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    const FieldCtx* c = same_ctx(a, b);
    return c->element(c->add_idx(a.index(), b.index()));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    const FieldCtx* c = same_ctx(a, b);
    return c->element(c->sub_idx(a.index(), b.index()));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const FieldCtx* c = same_ctx(a, b);
    return c->element(c->mul_idx(a.index(), b.index()));
}

FieldElem FieldElem::operator-() const {
    const FieldCtx* c = ctx_of(*this);
    return c->element(c->neg_idx(idx_));
}

FieldElem FieldElem::inv() const {
    const FieldCtx* c = ctx_of(*this);
    return c->element(c->inv_idx(idx_));
}

FieldElem FieldElem::pow(uint64_t e) const {
    const FieldCtx* c = ctx_of(*this);
    return c->element(c->pow_idx(idx_, e));
}

FieldElem FieldElem::frobenius() const {
    const FieldCtx* c = ctx_of(*this);
    return c->element(c->frob_idx(idx_));
}

bool FieldElem::is_in_subfield() const {
    const FieldCtx* c = ctx_of(*this);
    return c->frob_idx(idx_) == idx_;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    same_ctx(a, b);
    return a.index() == b.index();
}

// ---------------------------------------------------------------------------
// text format

std::string to_text(const FieldElem& a) {
    std::string out;
    for (uint32_t d : a.coords()) {
        if (!out.empty()) out += ',';
        out += std::to_string(d);
    }
    return out;
}

FieldElem parse_element(const FieldCtx& ctx, std::string_view text) {
    if (text == "0") return ctx.zero();
    if (text.size() > 2 && text[0] == 'g' && text[1] == '^') {
        uint64_t k = 0;
        auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), k);
        if (ec != std::errc() || ptr != text.data() + text.size())
            raise(ErrorKind::ParseError, "bad generator power: " + std::string(text));
        return ctx.generator().pow(k);
    }
    std::vector<uint32_t> coords;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view piece = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int64_t v = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
            raise(ErrorKind::ParseError, "bad element coordinate in: " + std::string(text));
        int64_t r = v % ctx.p();
        if (r < 0) r += ctx.p();
        coords.push_back((uint32_t)r);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (coords.size() != 2 * ctx.m())
        raise(ErrorKind::ParseError, "expected " + std::to_string(2 * ctx.m()) +
                                         " coordinates, got " + std::to_string(coords.size()));
    return ctx.from_coords(coords);
}

} // namespace ppv
