#pragma once

#include "sqrt2.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpoly {

/// Exponent vector of t_1..t_n; index i holds the exponent of t_{i+1}.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

/// Graded order: lower total degree first; within a degree the
/// lexicographically larger exponent vector comes first, so t1 precedes t3.
struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        int dx = total_degree(x), dy = total_degree(y);
        if (dx != dy) return dx < dy;
        return x > y;
    }
};

/// Sparse multivariate polynomial in t_1..t_n over Z[sqrt(2)].
/// Invariant: no stored coefficient is zero; every key has length rank().
class Polynomial {
public:
    using TermMap = std::map<Monomial, Sqrt2, GrlexLess>;

    explicit Polynomial(int rank) : rank_(rank) {
        if (rank < 0) throw std::invalid_argument("Polynomial: negative rank");
    }

    static Polynomial zero(int rank) { return Polynomial(rank); }
    static Polynomial constant(int rank, Sqrt2 c) {
        Polynomial p(rank);
        p.add_term(Monomial(static_cast<size_t>(rank), 0), std::move(c));
        return p;
    }
    static Polynomial one(int rank) { return constant(rank, Sqrt2::one()); }
    /// The single variable t_var (1-based).
    static Polynomial variable(int rank, int var) {
        Polynomial p(rank);
        Monomial m(static_cast<size_t>(rank), 0);
        m.at(static_cast<size_t>(var - 1)) = 1;
        p.add_term(std::move(m), Sqrt2::one());
        return p;
    }

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Monomial m, Sqrt2 c) {
        if (static_cast<int>(m.size()) != rank_)
            throw std::invalid_argument("Polynomial: monomial length != rank");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Sqrt2 coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Sqrt2::zero() : it->second;
    }

    /// Coefficient of the all-zero monomial.
    Sqrt2 constant_term() const {
        return coefficient(Monomial(static_cast<size_t>(rank_), 0));
    }

    /// True iff every coefficient lies in Z (sqrt(2) parts cancelled).
    bool is_integer() const {
        for (const auto& [m, c] : terms_)
            if (!c.is_integer()) return false;
        return true;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        if (p.rank_ != q.rank_)
            throw std::invalid_argument("poly_add: rank mismatch");
        Polynomial r = p;
        for (const auto& [m, c] : q.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        if (p.rank_ != q.rank_)
            throw std::invalid_argument("poly_sub: rank mismatch");
        Polynomial r = p;
        for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.rank_ != q.rank_)
            throw std::invalid_argument("poly_mul: rank mismatch");
        Polynomial r(p.rank_);
        for (const auto& [mp, cp] : p.terms_)
            for (const auto& [mq, cq] : q.terms_) {
                Monomial m = mp;
                for (size_t i = 0; i < m.size(); ++i) m[i] += mq[i];
                r.add_term(std::move(m), cp * cq);
            }
        return r;
    }

    Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    /// Canonical human-readable sum, e.g. "1 + 2*t2 + t2^2 + t1*t2^2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            std::string vars;
            for (int i = 0; i < rank_; ++i) {
                int e = m[static_cast<size_t>(i)];
                if (e == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += "t" + std::to_string(i + 1);
                if (e > 1) vars += "^" + std::to_string(e);
            }
            if (vars.empty()) {
                out += c.str();
            } else if (c.is_one()) {
                out += vars;
            } else if (c.is_integer() || c.a == 0) {
                out += c.str() + "*" + vars;
            } else {
                out += "(" + c.str() + ")*" + vars;
            }
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : terms_) {
            terms.push_back({{"a", static_cast<std::int64_t>(c.a)},
                             {"b", static_cast<std::int64_t>(c.b)},
                             {"exp", m}});
        }
        return {{"rank", rank_}, {"terms", terms}};
    }

    static Polynomial from_json(const nlohmann::json& j) {
        Polynomial p(j.at("rank").get<int>());
        for (const auto& t : j.at("terms")) {
            p.add_term(t.at("exp").get<Monomial>(),
                       Sqrt2{Int(t.at("a").get<std::int64_t>()),
                             Int(t.at("b").get<std::int64_t>())});
        }
        return p;
    }

private:
    int rank_;
    TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline bool is_integer_poly(const Polynomial& p) { return p.is_integer(); }
inline Sqrt2 eval_all_zero(const Polynomial& p) { return p.constant_term(); }

/// Halve all exponents of a perfect-square monomial with unit coefficient.
/// An odd exponent or a non-unit coefficient signals a violated
/// perfect-square assumption and is reported, never silently fixed.
inline std::pair<Monomial, Sqrt2> monomial_sqrt(const Monomial& m, const Sqrt2& c) {
    if (!c.is_one())
        throw std::domain_error("monomial_sqrt: coefficient is not 1");
    Monomial half = m;
    for (auto& e : half) {
        if (e % 2 != 0)
            throw std::domain_error("monomial_sqrt: odd exponent, not a perfect square");
        e /= 2;
    }
    return {half, Sqrt2::one()};
}

}  // namespace fpoly
