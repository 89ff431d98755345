#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpoly {

enum class Family { A, B, C, D };

inline char family_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    throw std::logic_error("family_char");
}

inline Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
    }
    throw std::invalid_argument(std::string("unknown type: ") + c);
}

struct LieType {
    Family family;
    int rank;

    void validate() const {
        int min = 1;
        switch (family) {
            case Family::A: min = 1; break;
            case Family::B: min = 2; break;
            case Family::C: min = 2; break;
            case Family::D: min = 4; break;
        }
        if (rank < min)
            throw std::invalid_argument("rank " + std::to_string(rank) +
                                        " below minimum for type " +
                                        family_char(family));
    }

    friend bool operator==(const LieType&, const LieType&) = default;
};

/// Index letter: +i for i, -i for the barred letter, 0 for the middle
/// level of the odd orthogonal vector representation.  Type A uses the
/// unbarred letters 1..n+1.
using Letter = int;

inline std::string letter_str(Letter x) { return std::to_string(x); }

/// Coxeter word (i_1,...,i_n): a permutation of [1,n] encoding
/// c = s_{i_1} ... s_{i_n}.
struct CoxeterWord {
    std::vector<int> entries;

    int rank() const { return static_cast<int>(entries.size()); }

    void validate() const {
        std::vector<bool> seen(entries.size() + 1, false);
        for (int i : entries) {
            if (i < 1 || i > rank() || seen[static_cast<size_t>(i)])
                throw std::invalid_argument("Coxeter word is not a permutation of 1.." +
                                            std::to_string(rank()));
            seen[static_cast<size_t>(i)] = true;
        }
    }

    friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;
};

enum class LabelKind {
    Wedge,      // k-subset label for an exterior-power weight
    SpinB,      // n-subset label, type B spin
    SpinDOdd,   // type D, omega_{n-1}: odd number of bars
    SpinDEven,  // type D, omega_n: even number of bars
};

inline bool is_spin(LabelKind k) { return k != LabelKind::Wedge; }

/// Position of a letter in the bottom-to-top level order used by both the
/// networks and the wedge normalization:
///   A:        1 < ... < n+1
///   B vector: 1 < ... < n < 0 < nbar < ... < 1bar
///   B spin / C / D: 1 < ... < n < nbar < ... < 1bar
inline int level_order(const LieType& type, LabelKind kind, Letter x) {
    int n = type.rank;
    if (type.family == Family::A) {
        if (x < 1 || x > n + 1) throw std::invalid_argument("letter outside type A alphabet");
        return x - 1;
    }
    bool has_zero = type.family == Family::B && kind == LabelKind::Wedge;
    if (x >= 1 && x <= n) return x - 1;
    if (x == 0) {
        if (!has_zero) throw std::invalid_argument("letter 0 outside this alphabet");
        return n;
    }
    if (x <= -1 && x >= -n) return (has_zero ? 2 * n + 1 : 2 * n) + x;  // -n -> n(+1), -1 -> 2n(-1)
    throw std::invalid_argument("letter outside alphabet: " + letter_str(x));
}

struct WeightLabel {
    LabelKind kind{LabelKind::Wedge};
    std::vector<Letter> letters;  // sorted in level order

    friend bool operator==(const WeightLabel&, const WeightLabel&) = default;

    int bar_count() const {
        return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                              [](Letter x) { return x < 0; }));
    }

    void sort(const LieType& type) {
        std::sort(letters.begin(), letters.end(), [&](Letter a, Letter b) {
            return level_order(type, kind, a) < level_order(type, kind, b);
        });
    }

    void validate(const LieType& type) const {
        for (Letter x : letters) {
            level_order(type, kind, x);  // alphabet check
            if (x == 0) throw std::invalid_argument("0 cannot occur in a weight label");
            if (x < 0 && std::find(letters.begin(), letters.end(), -x) != letters.end())
                throw std::invalid_argument("i and bar(i) co-occur in label");
        }
        if (is_spin(kind) && static_cast<int>(letters.size()) != type.rank)
            throw std::invalid_argument("spin label must have n letters");
        if (kind == LabelKind::SpinDOdd && bar_count() % 2 != 1)
            throw std::invalid_argument("omega_{n-1} label needs an odd number of bars");
        if (kind == LabelKind::SpinDEven && bar_count() % 2 != 0)
            throw std::invalid_argument("omega_n label needs an even number of bars");
    }

    std::string str() const {
        std::string out = "{";
        for (size_t i = 0; i < letters.size(); ++i) {
            if (i) out += ",";
            out += letter_str(letters[i]);
        }
        return out + "}";
    }
};

/// Image of one letter under the simple reflection s_i.  Letters not moved
/// by the stated transposition(s) are fixed; 0 is always fixed.
inline Letter simple_reflection(const LieType& type, int i, Letter x) {
    int n = type.rank;
    if (i < 1 || i > n) throw std::invalid_argument("reflection index out of range");
    if (type.family == Family::A) {
        if (x < 1 || x > n + 1) throw std::invalid_argument("letter outside type A alphabet");
        if (x == i) return i + 1;
        if (x == i + 1) return i;
        return x;
    }
    if (x == 0) return 0;
    if (x < -n || x > n) throw std::invalid_argument("letter outside alphabet");
    if (i < n) {  // (i, i+1)(bar(i+1), bar(i))
        if (x == i) return i + 1;
        if (x == i + 1) return i;
        if (x == -i) return -(i + 1);
        if (x == -(i + 1)) return -i;
        return x;
    }
    if (type.family == Family::B || type.family == Family::C) {  // s_n = (n, bar(n))
        if (x == n) return -n;
        if (x == -n) return n;
        return x;
    }
    // type D: s_n = (n-1, bar(n))(n, bar(n-1))
    if (x == n - 1) return -n;
    if (x == -n) return n - 1;
    if (x == n) return -(n - 1);
    if (x == -(n - 1)) return n;
    return x;
}

/// Apply c^m to a label.  One application of c = s_{i_1}...s_{i_n} applies
/// s_{i_n} first and s_{i_1} last.
inline Letter coxeter_apply(const LieType& type, const CoxeterWord& c, Letter x, int m = 1) {
    for (int rep = 0; rep < m; ++rep)
        for (auto it = c.entries.rbegin(); it != c.entries.rend(); ++it)
            x = simple_reflection(type, *it, x);
    return x;
}

inline WeightLabel coxeter_apply(const LieType& type, const CoxeterWord& c,
                                 const WeightLabel& label, int m) {
    if (m < 0) throw std::invalid_argument("coxeter_apply: negative power");
    label.validate(type);
    WeightLabel out = label;
    for (auto& x : out.letters) x = coxeter_apply(type, c, x, m);
    out.sort(type);
    return out;
}

/// Action of the longest element on a label: A reverses the index line,
/// B and C bar every letter, D bars every letter and, for odd n, then
/// exchanges n and bar(n).
inline WeightLabel w0_label(const LieType& type, const WeightLabel& label) {
    WeightLabel out = label;
    for (auto& x : out.letters) {
        switch (type.family) {
            case Family::A: x = type.rank + 2 - x; break;
            case Family::B:
            case Family::C: x = -x; break;
            case Family::D:
                x = -x;
                if (type.rank % 2 != 0) {
                    if (x == type.rank) x = -type.rank;
                    else if (x == -type.rank) x = type.rank;
                }
                break;
        }
    }
    out.sort(type);
    return out;
}

inline int coxeter_number(const LieType& type) {
    switch (type.family) {
        case Family::A: return type.rank + 1;
        case Family::B:
        case Family::C: return 2 * type.rank;
        case Family::D: return 2 * type.rank - 2;
    }
    throw std::logic_error("coxeter_number");
}

/// The label of the fundamental weight omega_k: [1,k] for wedge cases,
/// the spin n-subsets for B k=n and D k in {n-1, n}.
inline WeightLabel fundamental_label(const LieType& type, int k) {
    type.validate();
    int n = type.rank;
    if (k < 1 || k > n) throw std::invalid_argument("fundamental index out of range");
    WeightLabel label;
    if (type.family == Family::B && k == n) {
        label.kind = LabelKind::SpinB;
        for (int i = 1; i <= n; ++i) label.letters.push_back(i);
    } else if (type.family == Family::D && k == n - 1) {
        label.kind = LabelKind::SpinDOdd;
        for (int i = 1; i < n; ++i) label.letters.push_back(i);
        label.letters.push_back(-n);
    } else if (type.family == Family::D && k == n) {
        label.kind = LabelKind::SpinDEven;
        for (int i = 1; i <= n; ++i) label.letters.push_back(i);
    } else {
        label.kind = LabelKind::Wedge;
        for (int i = 1; i <= k; ++i) label.letters.push_back(i);
    }
    return label;
}

/// h(k;c): smallest m >= 1 with c^m applied to the fundamental label equal
/// to the longest-element image.  c has order dividing the Coxeter number,
/// so the search is bounded by it.
inline int height(const LieType& type, const CoxeterWord& c, const WeightLabel& base) {
    WeightLabel target = w0_label(type, base);
    WeightLabel cur = base;
    int bound = coxeter_number(type);
    for (int m = 1; m <= bound; ++m) {
        cur = coxeter_apply(type, c, cur, 1);
        if (cur == target) return m;
    }
    throw std::logic_error("height: w0 image not reached within the Coxeter number");
}

inline int height(const LieType& type, const CoxeterWord& c, int k) {
    return height(type, c, fundamental_label(type, k));
}

}  // namespace fpoly
