#pragma once

#include "polynomial.hpp"
#include "weyl.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fpoly {

/// Image of the basis vector v_j under the Chevalley generator e_i or f_i
/// in the standard representation (at most one term).
enum class Generator { E, F };

inline std::vector<std::pair<Letter, Sqrt2>> generator_on_standard(const LieType& type,
                                                                   Generator which, int i,
                                                                   Letter j) {
    type.validate();
    int n = type.rank;
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
    const Sqrt2 one = Sqrt2::one();
    const Sqrt2 r2 = Sqrt2::sqrt2();

    if (type.family == Family::A) {
        if (j < 1 || j > n + 1) throw std::invalid_argument("letter outside type A alphabet");
        if (which == Generator::E) {
            if (j == i + 1) return {{i, one}};
        } else {
            if (j == i) return {{i + 1, one}};
        }
        return {};
    }

    bool has_zero = type.family == Family::B;
    if (j != 0 && (j < -n || j > n)) throw std::invalid_argument("letter outside alphabet");
    if (j == 0 && !has_zero) throw std::invalid_argument("letter 0 outside this alphabet");

    if (i < n) {
        if (which == Generator::E) {
            if (j == i + 1) return {{i, one}};
            if (j == -i) return {{-(i + 1), one}};
        } else {
            if (j == i) return {{i + 1, one}};
            if (j == -(i + 1)) return {{-i, one}};
        }
        return {};
    }

    switch (type.family) {
        case Family::B:
            if (which == Generator::E) {
                if (j == 0) return {{n, r2}};
                if (j == -n) return {{0, r2}};
            } else {
                if (j == n) return {{0, r2}};
                if (j == 0) return {{-n, r2}};
            }
            return {};
        case Family::C:
            if (which == Generator::E) {
                if (j == -n) return {{n, one}};
            } else {
                if (j == n) return {{-n, one}};
            }
            return {};
        case Family::D:
            if (which == Generator::E) {
                if (j == -(n - 1)) return {{n, one}};
                if (j == -n) return {{n - 1, one}};
            } else {
                if (j == n - 1) return {{-n, one}};
                if (j == n) return {{-(n - 1), one}};
            }
            return {};
        default: return {};
    }
}

/// Image of v_j under the group element x_i(t) (gen = +i) or x_{bar i}(t)
/// (gen = -i) in the standard representation: I + t*e (+ t^2/2 * e^2, which
/// is nonzero only for the odd orthogonal generator n; the 1/2! is absorbed
/// exactly since e^2 carries the coefficient 2).
inline std::vector<std::pair<Letter, Polynomial>> group_generator_on_standard(
    const LieType& type, int gen, const Polynomial& t, Letter j) {
    int i = gen > 0 ? gen : -gen;
    Generator which = gen > 0 ? Generator::E : Generator::F;

    std::vector<std::pair<Letter, Polynomial>> out;
    out.emplace_back(j, Polynomial::one(t.rank()));
    for (auto& [j1, c1] : generator_on_standard(type, which, i, j)) {
        out.emplace_back(j1, Polynomial::constant(t.rank(), c1) * t);
        if (type.family == Family::B && i == type.rank) {
            for (auto& [j2, c2] : generator_on_standard(type, which, i, j1)) {
                Sqrt2 prod = c1 * c2;
                if (prod.a % 2 != 0 || prod.b % 2 != 0)
                    throw std::logic_error("quadratic exponential term is not halvable");
                Polynomial coeff =
                    Polynomial::constant(t.rank(), Sqrt2{prod.a / 2, prod.b / 2});
                out.emplace_back(j2, coeff * t * t);
            }
        }
    }
    return out;
}

/// Basis vectors keyed by their letter sequences: a strictly increasing
/// wedge word for exterior powers, an n-subset for spin representations.
using SymbolicVector = std::map<std::vector<Letter>, Polynomial>;

namespace detail {

inline void accumulate(SymbolicVector& v, std::vector<Letter> key, Polynomial p) {
    if (p.is_zero()) return;
    auto it = v.find(key);
    if (it == v.end()) {
        v.emplace(std::move(key), std::move(p));
    } else {
        it->second += p;
        if (it->second.is_zero()) v.erase(it);
    }
}

/// Sort a wedge word into the level order, tracking the permutation sign;
/// returns false (zero vector) when a letter repeats.
inline bool normalize_wedge(const LieType& type, LabelKind kind, std::vector<Letter>& word,
                            int& sign) {
    sign = 1;
    for (size_t a = 0; a < word.size(); ++a)
        for (size_t b = a + 1; b < word.size(); ++b) {
            int oa = level_order(type, kind, word[a]);
            int ob = level_order(type, kind, word[b]);
            if (oa == ob) return false;
            if (oa > ob) {
                std::swap(word[a], word[b]);
                sign = -sign;
            }
        }
    return true;
}

/// Spin generator action on an n-subset T (at most one term, coefficient 1).
inline bool spin_generator(const LieType& type, Generator which, int i,
                           const std::vector<Letter>& T, std::vector<Letter>& image) {
    int n = type.rank;
    auto has = [&](Letter x) {
        return std::find(T.begin(), T.end(), x) != T.end();
    };
    auto replace = [&](Letter r1, Letter r2, Letter a1, Letter a2) {
        image.clear();
        for (Letter x : T)
            if (x != r1 && x != r2) image.push_back(x);
        image.push_back(a1);
        if (a2 != 0) image.push_back(a2);
        return true;
    };
    if (i < n) {
        if (which == Generator::E) {
            if (has(i + 1) && has(-i)) return replace(i + 1, -i, i, -(i + 1));
        } else {
            if (has(i) && has(-(i + 1))) return replace(i, -(i + 1), i + 1, -i);
        }
        return false;
    }
    if (type.family == Family::B) {
        if (which == Generator::E) {
            if (has(-n)) return replace(-n, -n, n, 0);
        } else {
            if (has(n)) return replace(n, n, -n, 0);
        }
        return false;
    }
    // type D
    if (which == Generator::E) {
        if (has(-n) && has(-(n - 1))) return replace(-n, -(n - 1), n - 1, n);
    } else {
        if (has(n - 1) && has(n)) return replace(n - 1, n, -n, -(n - 1));
    }
    return false;
}

}  // namespace detail

/// Apply x_i(t) (gen = +i) or x_{bar i}(t) (gen = -i) to a symbolic vector
/// over the representation selected by `kind`: multiplicative extension to
/// wedge words (with the sorting sign), I + t*(generator action) on spin
/// subsets (generators square to zero there).
inline SymbolicVector apply_group_generator(const LieType& type, LabelKind kind, int gen,
                                            const Polynomial& t, const SymbolicVector& v) {
    SymbolicVector out;
    int i = gen > 0 ? gen : -gen;
    Generator which = gen > 0 ? Generator::E : Generator::F;

    if (kind == LabelKind::Wedge) {
        for (const auto& [word, coeff] : v) {
            // Expand the product of per-factor images.
            std::vector<std::pair<std::vector<Letter>, Polynomial>> partial;
            partial.emplace_back(std::vector<Letter>{}, coeff);
            for (Letter j : word) {
                auto images = group_generator_on_standard(type, gen, t, j);
                std::vector<std::pair<std::vector<Letter>, Polynomial>> next;
                for (auto& [prefix, p] : partial)
                    for (auto& [j2, q] : images) {
                        std::vector<Letter> ext = prefix;
                        ext.push_back(j2);
                        next.emplace_back(std::move(ext), p * q);
                    }
                partial = std::move(next);
            }
            for (auto& [word2, p] : partial) {
                int sign = 1;
                std::vector<Letter> sorted = word2;
                if (!detail::normalize_wedge(type, kind, sorted, sign)) continue;
                if (sign < 0) p = Polynomial::zero(p.rank()) - p;
                detail::accumulate(out, std::move(sorted), std::move(p));
            }
        }
        return out;
    }

    for (const auto& [T, coeff] : v) {
        detail::accumulate(out, T, coeff);
        std::vector<Letter> image;
        if (detail::spin_generator(type, which, i, T, image)) {
            std::sort(image.begin(), image.end(), [&](Letter a, Letter b) {
                return level_order(type, kind, a) < level_order(type, kind, b);
            });
            detail::accumulate(out, std::move(image), coeff * t);
        }
    }
    return out;
}

/// Principal minor: coefficient of the label's basis vector in
/// x_{bar i_1}(1) ... x_{bar i_n}(1) x_{i_n}(t_{i_n}) ... x_{i_1}(t_{i_1})
/// applied to that same vector (group factors applied right to left).
inline Polynomial principal_minor(const LieType& type, const CoxeterWord& c,
                                  const WeightLabel& label) {
    type.validate();
    c.validate();
    label.validate(type);
    if (c.rank() != type.rank) throw std::invalid_argument("Coxeter word length != rank");
    int n = type.rank;

    std::vector<Letter> key = label.letters;
    std::sort(key.begin(), key.end(), [&](Letter a, Letter b) {
        return level_order(type, label.kind, a) < level_order(type, label.kind, b);
    });

    SymbolicVector v;
    v.emplace(key, Polynomial::one(n));

    for (int p = 0; p < n; ++p) {
        int i = c.entries[static_cast<size_t>(p)];
        v = apply_group_generator(type, label.kind, i, Polynomial::variable(n, i), v);
    }
    Polynomial unit = Polynomial::one(n);
    for (int p = n - 1; p >= 0; --p) {
        int i = c.entries[static_cast<size_t>(p)];
        v = apply_group_generator(type, label.kind, -i, unit, v);
    }

    auto it = v.find(key);
    return it == v.end() ? Polynomial::zero(n) : it->second;
}

}  // namespace fpoly
