#include "weave/laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "weave/errors.hpp"

namespace weave {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("Laurent coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("Laurent coefficient overflow");
    return r;
}

int lex_cmp(const std::int32_t* a, const std::int32_t* b, int m) {
    for (int i = 0; i < m; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

namespace modp {
std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= P ? r - P : r;
}
std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(x & P);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t r = lo + hi;
    return r >= P ? r - P : r;
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}
std::uint64_t inv(std::uint64_t a) {
    if (a % P == 0) throw DivisionByZero("inverse of zero modulo 2^61-1");
    return pow(a, P - 2);
}
}  // namespace modp

LaurentPoly LaurentPoly::constant(int nvars, std::int64_t c) {
    LaurentPoly p(nvars);
    if (c != 0) {
        p.exps_.assign(nvars, 0);
        p.coefs_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, e, 1);
}

LaurentPoly LaurentPoly::monomial(int nvars, const std::vector<int>& exps, std::int64_t c) {
    if (static_cast<int>(exps.size()) != nvars) throw InvalidArgument("exponent length mismatch");
    LaurentPoly p(nvars);
    if (c != 0) {
        p.exps_.assign(exps.begin(), exps.end());
        p.coefs_.push_back(c);
    }
    return p;
}

void LaurentPoly::push_term(const std::int32_t* e, std::int64_t c) {
    exps_.insert(exps_.end(), e, e + m_);
    coefs_.push_back(c);
}

void LaurentPoly::normalize() {
    const std::size_t t = coefs_.size();
    std::vector<std::uint32_t> idx(t);
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        return lex_cmp(exps_.data() + a * m_, exps_.data() + b * m_, m_) < 0;
    });
    std::vector<std::int32_t> ne;
    std::vector<std::int64_t> nc;
    ne.reserve(exps_.size());
    nc.reserve(t);
    for (std::size_t a = 0; a < t;) {
        std::size_t b = a;
        std::int64_t c = 0;
        const std::int32_t* ea = exps_.data() + idx[a] * m_;
        while (b < t && lex_cmp(ea, exps_.data() + idx[b] * m_, m_) == 0) {
            c = checked_add(c, coefs_[idx[b]]);
            ++b;
        }
        if (c != 0) {
            ne.insert(ne.end(), ea, ea + m_);
            nc.push_back(c);
        }
        a = b;
    }
    exps_.swap(ne);
    coefs_.swap(nc);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (m_ != o.m_) throw InvalidArgument("variable count mismatch");
    LaurentPoly r(m_);
    std::size_t i = 0, j = 0;
    while (i < size() || j < o.size()) {
        int c = i == size() ? 1 : (j == o.size() ? -1 : lex_cmp(exps(i), o.exps(j), m_));
        if (c < 0) {
            r.push_term(exps(i), coefs_[i]);
            ++i;
        } else if (c > 0) {
            r.push_term(o.exps(j), o.coefs_[j]);
            ++j;
        } else {
            std::int64_t s = checked_add(coefs_[i], o.coefs_[j]);
            if (s != 0) r.push_term(exps(i), s);
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly neg = o;
    for (auto& c : neg.coefs_) c = checked_mul(c, -1);
    return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (m_ != o.m_) throw InvalidArgument("variable count mismatch");
    LaurentPoly r(m_);
    r.exps_.reserve(size() * o.size() * m_);
    r.coefs_.reserve(size() * o.size());
    std::vector<std::int32_t> e(m_);
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < o.size(); ++j) {
            const std::int32_t* a = exps(i);
            const std::int32_t* b = o.exps(j);
            for (int v = 0; v < m_; ++v) e[v] = a[v] + b[v];
            r.push_term(e.data(), checked_mul(coefs_[i], o.coefs_[j]));
        }
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = constant(m_, 1);
    LaurentPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (m_ != d.m_) throw InvalidArgument("variable count mismatch");
    if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (is_zero()) return LaurentPoly(m_);
    using Key = std::vector<std::int32_t>;
    std::map<Key, std::int64_t> rem;
    for (std::size_t t = 0; t < size(); ++t) rem.emplace(Key(exps(t), exps(t) + m_), coefs_[t]);

    // Every quotient exponent is bounded below by tail(p) - tail(d), and per
    // variable by the Newton polytopes: Newt(p) = Newt(q) + Newt(d).
    Key floor(m_), lo(m_), hi(m_);
    for (int v = 0; v < m_; ++v) {
        floor[v] = exps(0)[v] - d.exps(0)[v];
        std::int32_t pmin = exps(0)[v], pmax = pmin, dmin = d.exps(0)[v], dmax = dmin;
        for (std::size_t t = 1; t < size(); ++t) {
            pmin = std::min(pmin, exps(t)[v]);
            pmax = std::max(pmax, exps(t)[v]);
        }
        for (std::size_t t = 1; t < d.size(); ++t) {
            dmin = std::min(dmin, d.exps(t)[v]);
            dmax = std::max(dmax, d.exps(t)[v]);
        }
        lo[v] = pmin - dmin;
        hi[v] = pmax - dmax;
    }
    const std::size_t last = d.size() - 1;
    const std::int32_t* lead = d.exps(last);
    const std::int64_t lc = d.coefs_[last];

    LaurentPoly q(m_);
    Key qe(m_), e(m_);
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        for (int v = 0; v < m_; ++v) qe[v] = top->first[v] - lead[v];
        if (qe < floor) return std::nullopt;
        for (int v = 0; v < m_; ++v)
            if (qe[v] < lo[v] || qe[v] > hi[v]) return std::nullopt;
        if (top->second % lc != 0) return std::nullopt;
        std::int64_t qc = top->second / lc;
        q.push_term(qe.data(), qc);
        for (std::size_t t = 0; t < d.size(); ++t) {
            const std::int32_t* de = d.exps(t);
            for (int v = 0; v < m_; ++v) e[v] = qe[v] + de[v];
            std::int64_t delta = checked_mul(qc, d.coefs_[t]);
            auto it = rem.find(e);
            if (it == rem.end()) {
                rem.emplace(e, -delta);
            } else {
                it->second = checked_add(it->second, -delta);
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    q.normalize();
    return q;
}

int LaurentPoly::min_exponent(int i) const {
    if (is_zero()) return 0;
    int mn = exps(0)[i];
    for (std::size_t t = 1; t < size(); ++t) mn = std::min(mn, exps(t)[i]);
    return mn;
}

std::string LaurentPoly::serialize() const {
    std::string s;
    for (std::size_t t = 0; t < size(); ++t) {
        if (t) s += ';';
        s += std::to_string(coefs_[t]);
        s += ':';
        for (int v = 0; v < m_; ++v) {
            if (v) s += ',';
            s += std::to_string(exps(t)[v]);
        }
    }
    return s;
}

LaurentPoly LaurentPoly::deserialize(int nvars, const std::string& s) {
    LaurentPoly p(nvars);
    if (s.empty()) return p;
    std::stringstream terms(s);
    std::string term;
    std::vector<std::int32_t> e(nvars);
    while (std::getline(terms, term, ';')) {
        auto colon = term.find(':');
        if (colon == std::string::npos) throw InvalidArgument("bad Laurent term '" + term + "'");
        std::int64_t c = std::stoll(term.substr(0, colon));
        std::stringstream es(term.substr(colon + 1));
        std::string tok;
        int v = 0;
        while (std::getline(es, tok, ',')) {
            if (v >= nvars) throw InvalidArgument("too many exponents in '" + term + "'");
            e[v++] = std::stoi(tok);
        }
        if (v != nvars) throw InvalidArgument("too few exponents in '" + term + "'");
        p.push_term(e.data(), c);
    }
    p.normalize();
    return p;
}

std::string LaurentPoly::pretty() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t t = size(); t-- > 0;) {
        std::int64_t c = coefs_[t];
        std::string mono;
        for (int v = 0; v < m_; ++v) {
            int e = exps(t)[v];
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(v + 1);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        std::int64_t a = c < 0 ? -c : c;
        if (mono.empty()) s += std::to_string(a);
        else if (a == 1) s += mono;
        else s += std::to_string(a) + "*" + mono;
    }
    return s;
}

std::uint64_t LaurentPoly::eval_mod(const std::vector<std::uint64_t>& point) const {
    std::vector<std::uint64_t> invs(m_);
    for (int v = 0; v < m_; ++v) invs[v] = modp::inv(point[v]);
    std::uint64_t acc = 0;
    for (std::size_t t = 0; t < size(); ++t) {
        std::int64_t c = coefs_[t];
        std::uint64_t term = c >= 0 ? static_cast<std::uint64_t>(c) % modp::P
                                    : (modp::P - static_cast<std::uint64_t>(-(c + 1)) % modp::P - 1) % modp::P;
        for (int v = 0; v < m_; ++v) {
            int e = exps(t)[v];
            if (e > 0) term = modp::mul(term, modp::pow(point[v], static_cast<std::uint64_t>(e)));
            else if (e < 0) term = modp::mul(term, modp::pow(invs[v], static_cast<std::uint64_t>(-e)));
        }
        acc = modp::add(acc, term);
    }
    return acc;
}

}  // namespace weave
