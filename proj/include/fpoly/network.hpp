#pragma once

#include "polynomial.hpp"
#include "weyl.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpoly {

enum class SchemeVariant { AVector, BVector, BSpin, CVector, DVector };

inline Family scheme_family(SchemeVariant v) {
    switch (v) {
        case SchemeVariant::AVector: return Family::A;
        case SchemeVariant::BVector:
        case SchemeVariant::BSpin: return Family::B;
        case SchemeVariant::CVector: return Family::C;
        case SchemeVariant::DVector: return Family::D;
    }
    throw std::logic_error("scheme_family");
}

/// Horizontal levels of a chip column, bottom to top.
struct LevelScheme {
    SchemeVariant variant;
    int rank;
    std::vector<Letter> levels;

    int num_levels() const { return static_cast<int>(levels.size()); }

    int level_of(Letter x) const {
        for (int i = 0; i < num_levels(); ++i)
            if (levels[static_cast<size_t>(i)] == x) return i;
        throw std::invalid_argument("letter " + letter_str(x) + " is not a level of this scheme");
    }

    Letter letter_at(int level) const { return levels.at(static_cast<size_t>(level)); }
};

inline LevelScheme make_scheme(SchemeVariant v, int rank) {
    LieType type{scheme_family(v), rank};
    type.validate();
    LevelScheme s{v, rank, {}};
    int n = rank;
    if (v == SchemeVariant::AVector) {
        for (int i = 1; i <= n + 1; ++i) s.levels.push_back(i);
        return s;
    }
    for (int i = 1; i <= n; ++i) s.levels.push_back(i);
    if (v == SchemeVariant::BVector) s.levels.push_back(0);
    for (int i = n; i >= 1; --i) s.levels.push_back(-i);
    return s;
}

/// One weighted edge inside a chip, traversed right-to-left.
/// weight = coeff * t^tpow where t is the chip's variable (1 for barred chips).
struct ChipEdge {
    int right;
    int left;
    Sqrt2 coeff;
    int tpow;
};

/// Elementary chip: horizontals at every level (edge id == level) followed
/// by the diagonals of the figure for this generator.
struct Chip {
    int generator;  // +i / -i
    int var;        // variable index t_i, or 0 when the constant 1 is substituted
    std::vector<ChipEdge> edges;
    std::vector<std::pair<int, int>> crossings;  // (edge id, edge id), non-vertex intersections
    std::optional<std::pair<int, int>> bundle;   // paired diagonals, used both-or-neither

    /// Weight of one edge as a polynomial term over rank variables.
    std::pair<Monomial, Sqrt2> edge_weight(int edge_id, int rank) const {
        const ChipEdge& e = edges.at(static_cast<size_t>(edge_id));
        Monomial m(static_cast<size_t>(rank), 0);
        if (var > 0) m[static_cast<size_t>(var - 1)] = e.tpow;
        return {m, e.coeff};
    }
};

inline Chip build_chip(const LevelScheme& scheme, int generator) {
    int n = scheme.rank;
    int i = generator > 0 ? generator : -generator;
    if (i < 1 || i > n) throw std::invalid_argument("chip generator out of range");
    bool barred = generator < 0;

    Chip chip;
    chip.generator = generator;
    chip.var = barred ? 0 : i;
    for (int lvl = 0; lvl < scheme.num_levels(); ++lvl)
        chip.edges.push_back({lvl, lvl, Sqrt2::one(), 0});

    auto L = [&](Letter x) { return scheme.level_of(x); };
    auto diag = [&](Letter from, Letter to, Sqrt2 c, int tpow) {
        chip.edges.push_back({L(from), L(to), std::move(c), tpow});
        return static_cast<int>(chip.edges.size()) - 1;
    };
    // A crossing pairs a level-skipping diagonal with the horizontal edge of
    // the level it skips; horizontals carry edge id == level.
    auto cross = [&](int diag_id, Letter skipped) {
        chip.crossings.emplace_back(diag_id, L(skipped));
    };

    const Sqrt2 one = Sqrt2::one();
    const Sqrt2 r2 = Sqrt2::sqrt2();

    switch (scheme.variant) {
        case SchemeVariant::AVector:
            if (!barred) diag(i + 1, i, one, 1);
            else diag(i, i + 1, one, 1);
            break;

        case SchemeVariant::BVector:
            if (i < n) {
                int d1, d2;
                if (!barred) {
                    d1 = diag(i + 1, i, one, 1);
                    d2 = diag(-i, -(i + 1), one, 1);
                } else {
                    d1 = diag(i, i + 1, one, 1);
                    d2 = diag(-(i + 1), -i, one, 1);
                }
                (void)d1; (void)d2;
            } else if (!barred) {
                diag(-n, 0, r2, 1);
                diag(0, n, r2, 1);
                cross(diag(-n, n, one, 2), 0);
            } else {
                diag(0, -n, r2, 1);
                diag(n, 0, r2, 1);
                cross(diag(n, -n, one, 2), 0);
            }
            break;

        case SchemeVariant::BSpin:
            if (i < n) {
                int d1, d2;
                if (!barred) {
                    d1 = diag(i + 1, i, one, 1);
                    d2 = diag(-i, -(i + 1), one, 1);
                } else {
                    d1 = diag(i, i + 1, one, 1);
                    d2 = diag(-(i + 1), -i, one, 1);
                }
                chip.bundle = {d1, d2};
            } else if (!barred) {
                diag(-n, n, one, 2);
            } else {
                diag(n, -n, one, 2);
            }
            break;

        case SchemeVariant::CVector:
            if (i < n) {
                if (!barred) {
                    diag(i + 1, i, one, 1);
                    diag(-i, -(i + 1), one, 1);
                } else {
                    diag(i, i + 1, one, 1);
                    diag(-(i + 1), -i, one, 1);
                }
            } else if (!barred) {
                diag(-n, n, one, 1);
            } else {
                diag(n, -n, one, 1);
            }
            break;

        case SchemeVariant::DVector:
            if (i < n) {
                int d1, d2;
                if (!barred) {
                    d1 = diag(i + 1, i, one, 1);
                    d2 = diag(-i, -(i + 1), one, 1);
                } else {
                    d1 = diag(i, i + 1, one, 1);
                    d2 = diag(-(i + 1), -i, one, 1);
                }
                chip.bundle = {d1, d2};
            } else {
                int d1, d2;
                if (!barred) {
                    d1 = diag(-n, n - 1, one, 1);
                    d2 = diag(-(n - 1), n, one, 1);
                } else {
                    d1 = diag(n - 1, -n, one, 1);
                    d2 = diag(n, -(n - 1), one, 1);
                }
                cross(d1, n);
                cross(d2, -n);
                chip.bundle = {d1, d2};
            }
            break;
    }
    return chip;
}

/// Concatenation of the 2n elementary chips
/// x_{bar i_1}(1), ..., x_{bar i_n}(1), x_{i_n}(t_{i_n}), ..., x_{i_1}(t_{i_1})
/// laid out left to right.  Sources are the right boundary, sinks the left.
struct LayeredNetwork {
    LevelScheme scheme;
    std::vector<Chip> chips;

    int num_boundaries() const { return static_cast<int>(chips.size()) + 1; }
};

inline LayeredNetwork build_network(SchemeVariant v, int rank, const CoxeterWord& c) {
    if (c.rank() != rank) throw std::invalid_argument("Coxeter word length != rank");
    c.validate();
    LayeredNetwork net{make_scheme(v, rank), {}};
    for (int j = 0; j < rank; ++j)
        net.chips.push_back(build_chip(net.scheme, -c.entries[static_cast<size_t>(j)]));
    for (int j = rank - 1; j >= 0; --j)
        net.chips.push_back(build_chip(net.scheme, c.entries[static_cast<size_t>(j)]));
    return net;
}

/// A family of vertex-disjoint paths.  paths[p][j] is the edge taken by the
/// p-th path (sources in ascending level order) in chip j (0 = leftmost).
struct PathFamily {
    std::vector<int> sources;  // levels, ascending
    std::vector<std::vector<int>> paths;
    Monomial weight_exp;
    Sqrt2 weight_coeff;
    int crossings{0};
};

namespace detail {

using Mask = std::uint32_t;

struct Transition {
    Mask left_mask;
    // For each right level (ascending), the chosen edge id.
    std::vector<std::pair<int, int>> choice;
};

/// All vertex-disjoint routings of the tokens in right_mask through one chip.
inline std::vector<Transition> chip_transitions(const Chip& chip, Mask right_mask,
                                                bool bundled) {
    std::vector<int> tokens;
    for (int lvl = 0; lvl < 32; ++lvl)
        if (right_mask & (Mask{1} << lvl)) tokens.push_back(lvl);

    std::vector<Transition> out;
    std::vector<std::pair<int, int>> choice;
    Mask left_used = 0;

    auto bundle_ok = [&](const std::vector<std::pair<int, int>>& ch) {
        if (!bundled || !chip.bundle) return true;
        bool u1 = false, u2 = false;
        for (auto& [lvl, e] : ch) {
            if (e == chip.bundle->first) u1 = true;
            if (e == chip.bundle->second) u2 = true;
        }
        return u1 == u2;
    };

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == tokens.size()) {
            if (bundle_ok(choice)) out.push_back({left_used, choice});
            return;
        }
        int lvl = tokens[idx];
        for (int e = 0; e < static_cast<int>(chip.edges.size()); ++e) {
            const ChipEdge& edge = chip.edges[static_cast<size_t>(e)];
            if (edge.right != lvl) continue;
            Mask bit = Mask{1} << edge.left;
            if (left_used & bit) continue;
            left_used |= bit;
            choice.emplace_back(lvl, e);
            self(self, idx + 1);
            choice.pop_back();
            left_used &= ~bit;
        }
    };
    rec(rec, 0);
    return out;
}

inline int crossing_count(const Chip& chip, const std::vector<std::pair<int, int>>& choice) {
    int count = 0;
    for (auto& [d, h] : chip.crossings) {
        bool ud = false, uh = false;
        for (auto& [lvl, e] : choice) {
            if (e == d) ud = true;
            if (e == h) uh = true;
        }
        if (ud && uh) ++count;
    }
    return count;
}

inline std::vector<int> mask_levels(Mask m) {
    std::vector<int> v;
    for (int lvl = 0; lvl < 32; ++lvl)
        if (m & (Mask{1} << lvl)) v.push_back(lvl);
    return v;
}

}  // namespace detail

/// Level set of a label in the scheme (errors on a label/scheme mismatch).
inline std::vector<int> label_levels(const LevelScheme& scheme, const WeightLabel& label) {
    std::vector<int> levels;
    for (Letter x : label.letters) levels.push_back(scheme.level_of(x));
    std::sort(levels.begin(), levels.end());
    return levels;
}

/// All families of vertex-disjoint paths from sources = `levels` (right) to
/// sinks = `levels` (left), in deterministic order: lexicographic on the
/// sequence of occupied-level sets per boundary, leftmost boundary first.
/// With `bundled`, every chip with a bundle pair uses both paired diagonals
/// or neither.  Exposed with a raw level set for testing; use the
/// WeightLabel overload for extremal-weight computations.
inline std::vector<PathFamily> enumerate_families_levels(const LayeredNetwork& net,
                                                         const std::vector<int>& levels,
                                                         bool bundled) {
    using detail::Mask;
    const int num_chips = static_cast<int>(net.chips.size());
    const int rank = net.scheme.rank;

    Mask target = 0;
    for (int lvl : levels) {
        if (lvl < 0 || lvl >= net.scheme.num_levels())
            throw std::invalid_argument("label level outside scheme");
        target |= Mask{1} << lvl;
    }

    // reach[j]: masks at boundary j (0 = leftmost) that can still reach the
    // sink set by travelling left through chips j-1 .. 0.
    std::vector<std::set<Mask>> reach(static_cast<size_t>(num_chips) + 1);
    reach[0].insert(target);
    for (int j = 0; j < num_chips; ++j) {
        for (Mask right = 0; right < (Mask{1} << net.scheme.num_levels()); ++right) {
            if (__builtin_popcount(right) != static_cast<int>(levels.size())) continue;
            for (const auto& tr :
                 detail::chip_transitions(net.chips[static_cast<size_t>(j)], right, bundled)) {
                if (reach[static_cast<size_t>(j)].count(tr.left_mask)) {
                    reach[static_cast<size_t>(j) + 1].insert(right);
                    break;
                }
            }
        }
    }

    std::vector<PathFamily> families;
    if (!reach[static_cast<size_t>(num_chips)].count(target)) return families;

    struct State {
        std::vector<int> token_level;                 // by token index
        std::vector<std::vector<int>> paths;          // paths[p][chips walked so far]
        std::vector<Mask> boundary_masks;             // right to left
    };
    State st;
    st.token_level = levels;
    st.paths.assign(levels.size(), {});
    st.boundary_masks.push_back(target);

    auto rec = [&](auto&& self, int chips_done) -> void {
        if (chips_done == num_chips) {
            PathFamily fam;
            fam.sources = levels;
            fam.paths.assign(levels.size(), std::vector<int>(static_cast<size_t>(num_chips)));
            // Paths were recorded right-to-left; store left-to-right by chip index.
            for (size_t p = 0; p < levels.size(); ++p)
                for (int j = 0; j < num_chips; ++j)
                    fam.paths[p][static_cast<size_t>(j)] =
                        st.paths[p][static_cast<size_t>(num_chips - 1 - j)];
            fam.weight_exp.assign(static_cast<size_t>(rank), 0);
            fam.weight_coeff = Sqrt2::one();
            fam.crossings = 0;
            for (int j = 0; j < num_chips; ++j) {
                const Chip& chip = net.chips[static_cast<size_t>(j)];
                std::vector<std::pair<int, int>> used;
                for (size_t p = 0; p < levels.size(); ++p) {
                    int e = fam.paths[p][static_cast<size_t>(j)];
                    auto [m, c] = chip.edge_weight(e, rank);
                    for (size_t i = 0; i < m.size(); ++i) fam.weight_exp[i] += m[i];
                    fam.weight_coeff *= c;
                    used.emplace_back(0, e);
                }
                fam.crossings += detail::crossing_count(chip, used);
            }
            families.push_back(std::move(fam));
            return;
        }
        int chip_index = num_chips - 1 - chips_done;  // walk right to left
        const Chip& chip = net.chips[static_cast<size_t>(chip_index)];
        Mask cur = st.boundary_masks.back();
        for (const auto& tr : detail::chip_transitions(chip, cur, bundled)) {
            if (!reach[static_cast<size_t>(chip_index)].count(tr.left_mask)) continue;
            std::vector<int> saved = st.token_level;
            for (size_t p = 0; p < st.token_level.size(); ++p) {
                int lvl = st.token_level[p];
                for (auto& [right_lvl, e] : tr.choice)
                    if (right_lvl == lvl) {
                        st.paths[p].push_back(e);
                        st.token_level[p] = chip.edges[static_cast<size_t>(e)].left;
                        break;
                    }
            }
            st.boundary_masks.push_back(tr.left_mask);
            self(self, chips_done + 1);
            st.boundary_masks.pop_back();
            st.token_level = saved;
            for (auto& path : st.paths) path.pop_back();
        }
    };
    rec(rec, 0);

    // Canonical order: boundary occupied-level sets compared left to right,
    // ties broken by the edge lists themselves.
    auto key = [&](const PathFamily& fam) {
        std::vector<std::vector<int>> k;
        std::vector<int> cur = fam.sources;  // recompute boundaries left to right
        // Boundary j (left of chip j) level sets, j = 0..num_chips.
        std::vector<std::vector<int>> bounds(static_cast<size_t>(num_chips) + 1);
        std::vector<int> token = fam.sources;
        bounds[static_cast<size_t>(num_chips)] = token;
        for (int j = num_chips - 1; j >= 0; --j) {
            const Chip& chip = net.chips[static_cast<size_t>(j)];
            for (size_t p = 0; p < token.size(); ++p)
                token[p] = chip.edges[static_cast<size_t>(fam.paths[p][static_cast<size_t>(j)])].left;
            std::vector<int> sorted = token;
            std::sort(sorted.begin(), sorted.end());
            bounds[static_cast<size_t>(j)] = sorted;
        }
        for (auto& b : bounds) k.push_back(b);
        return k;
    };
    std::stable_sort(families.begin(), families.end(),
                     [&](const PathFamily& x, const PathFamily& y) {
                         auto kx = key(x), ky = key(y);
                         if (kx != ky) return kx < ky;
                         return x.paths < y.paths;
                     });
    return families;
}

inline std::vector<PathFamily> enumerate_families(const LayeredNetwork& net,
                                                  const WeightLabel& label, bool bundled) {
    return enumerate_families_levels(net, label_levels(net.scheme, label), bundled);
}

/// Product of edge weights over all paths, plus the crossing count.
inline std::pair<std::pair<Monomial, Sqrt2>, int> family_weight(const LayeredNetwork& net,
                                                                const PathFamily& fam) {
    int rank = net.scheme.rank;
    Monomial exp(static_cast<size_t>(rank), 0);
    Sqrt2 coeff = Sqrt2::one();
    int crossings = 0;
    for (size_t j = 0; j < net.chips.size(); ++j) {
        const Chip& chip = net.chips[j];
        std::vector<std::pair<int, int>> used;
        for (const auto& path : fam.paths) {
            auto [m, c] = chip.edge_weight(path.at(j), rank);
            for (size_t i = 0; i < m.size(); ++i) exp[i] += m[i];
            coeff *= c;
            used.emplace_back(0, path.at(j));
        }
        crossings += detail::crossing_count(chip, used);
    }
    return {{exp, coeff}, crossings};
}

/// Sum over families of (-1)^crossings * weight.
inline Polynomial signed_sum(const LayeredNetwork& net, const WeightLabel& label) {
    Polynomial result(net.scheme.rank);
    for (const auto& fam : enumerate_families(net, label, false)) {
        Sqrt2 c = fam.crossings % 2 == 0 ? fam.weight_coeff : -fam.weight_coeff;
        result.add_term(fam.weight_exp, c);
    }
    return result;
}

/// Sum over bundled families of the square roots of their weights; every
/// bundled weight must be a perfect-square monomial with coefficient 1.
inline Polynomial spin_sum(const LayeredNetwork& net, const WeightLabel& label) {
    Polynomial result(net.scheme.rank);
    for (const auto& fam : enumerate_families(net, label, true)) {
        auto [m, c] = monomial_sqrt(fam.weight_exp, fam.weight_coeff);
        result.add_term(m, c);
    }
    return result;
}

inline std::string edge_weight_str(const Chip& chip, int edge_id) {
    const ChipEdge& e = chip.edges.at(static_cast<size_t>(edge_id));
    std::string coeff;
    if (e.coeff == Sqrt2::sqrt2()) coeff = "sqrt(2)";
    else if (!e.coeff.is_one()) coeff = e.coeff.str();
    std::string var;
    if (chip.var > 0 && e.tpow > 0) {
        var = "t" + std::to_string(chip.var);
        if (e.tpow > 1) var += "^" + std::to_string(e.tpow);
    }
    if (coeff.empty() && var.empty()) return "1";
    if (coeff.empty()) return var;
    if (var.empty()) return coeff;
    return coeff + "*" + var;
}

/// DOT digraph of the network, one same-rank subgraph per boundary column;
/// the highlighted family, when given, is drawn bold.
inline std::string export_dot(const LayeredNetwork& net,
                              const PathFamily* highlight = nullptr) {
    std::string out = "digraph network {\n  rankdir=RL;\n  node [shape=point];\n";
    int L = net.scheme.num_levels();
    int B = net.num_boundaries();
    auto node = [](int boundary, int level) {
        return "b" + std::to_string(boundary) + "_l" + std::to_string(level);
    };
    for (int b = 0; b < B; ++b) {
        out += "  { rank=same; ";
        for (int l = 0; l < L; ++l) out += node(b, l) + "; ";
        out += "}\n";
    }
    for (size_t j = 0; j < net.chips.size(); ++j) {
        const Chip& chip = net.chips[j];
        for (int e = 0; e < static_cast<int>(chip.edges.size()); ++e) {
            const ChipEdge& edge = chip.edges[static_cast<size_t>(e)];
            bool bold = false;
            if (highlight)
                for (const auto& path : highlight->paths)
                    if (path.at(j) == e) bold = true;
            out += "  " + node(static_cast<int>(j) + 1, edge.right) + " -> " +
                   node(static_cast<int>(j), edge.left) + " [label=\"" +
                   edge_weight_str(chip, e) + "\"";
            if (bold) out += ", style=bold, penwidth=3";
            out += "];\n";
        }
    }
    out += "}\n";
    return out;
}

/// JSON dump of all families for a label:
/// {"label": [...], "families": [{"weight": {...}, "crossings": k,
///   "edges": [[chip, edge_id], ...]}]}
inline nlohmann::json families_json(const LayeredNetwork& net, const WeightLabel& label,
                                    bool bundled) {
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& fam : enumerate_families(net, label, bundled)) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& path : fam.paths)
            for (size_t j = 0; j < path.size(); ++j)
                edges.push_back({static_cast<int>(j), path[j]});
        fams.push_back({{"weight",
                         {{"a", static_cast<std::int64_t>(fam.weight_coeff.a)},
                          {"b", static_cast<std::int64_t>(fam.weight_coeff.b)},
                          {"exp", fam.weight_exp}}},
                        {"crossings", fam.crossings},
                        {"edges", edges}});
    }
    return {{"label", label.letters}, {"families", fams}};
}

}  // namespace fpoly
