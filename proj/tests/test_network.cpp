#include <fpoly/network.hpp>

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace fpoly;

namespace {

/// Transfer matrix of one chip: entry [left][right] sums the edge weights.
std::vector<std::vector<Polynomial>> transfer_matrix(const LayeredNetwork& net,
                                                     const Chip& chip) {
    int L = net.scheme.num_levels();
    int rank = net.scheme.rank;
    std::vector<std::vector<Polynomial>> M(
        static_cast<size_t>(L), std::vector<Polynomial>(static_cast<size_t>(L), Polynomial(rank)));
    for (int e = 0; e < static_cast<int>(chip.edges.size()); ++e) {
        const ChipEdge& edge = chip.edges[static_cast<size_t>(e)];
        auto [m, c] = chip.edge_weight(e, rank);
        Polynomial term(rank);
        term.add_term(m, c);
        M[static_cast<size_t>(edge.left)][static_cast<size_t>(edge.right)] += term;
    }
    return M;
}

std::vector<std::vector<Polynomial>> mat_mul(const std::vector<std::vector<Polynomial>>& X,
                                             const std::vector<std::vector<Polynomial>>& Y,
                                             int rank) {
    size_t L = X.size();
    std::vector<std::vector<Polynomial>> Z(L, std::vector<Polynomial>(L, Polynomial(rank)));
    for (size_t i = 0; i < L; ++i)
        for (size_t k = 0; k < L; ++k) {
            if (X[i][k].is_zero()) continue;
            for (size_t j = 0; j < L; ++j) Z[i][j] += X[i][k] * Y[k][j];
        }
    return Z;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> M, int rank) {
    size_t k = M.size();
    if (k == 0) return Polynomial::one(rank);
    Polynomial det(rank);
    for (size_t r = 0; r < k; ++r) {
        if (M[r][0].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (size_t i = 0; i < k; ++i) {
            if (i == r) continue;
            sub.emplace_back(M[i].begin() + 1, M[i].end());
        }
        Polynomial cof = M[r][0] * determinant(std::move(sub), rank);
        if (r % 2 == 0) det += cof;
        else det = det - cof;
    }
    return det;
}

/// Determinant identity oracle: for type A networks (no crossings), the
/// signed sum over vertex-disjoint families with label I equals the minor
/// det(P[I, I]) of the full transfer-matrix product.
Polynomial lindstrom_minor(const LayeredNetwork& net, const std::vector<int>& levels) {
    int rank = net.scheme.rank;
    auto P = transfer_matrix(net, net.chips[0]);
    for (size_t j = 1; j < net.chips.size(); ++j)
        P = mat_mul(P, transfer_matrix(net, net.chips[j]), rank);
    std::vector<std::vector<Polynomial>> sub;
    for (int i : levels) {
        std::vector<Polynomial> row;
        for (int j : levels) row.push_back(P[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        sub.push_back(std::move(row));
    }
    return determinant(std::move(sub), rank);
}

/// Occupied levels at each boundary, left to right; validates disjointness.
std::vector<std::set<int>> boundary_sets(const LayeredNetwork& net, const PathFamily& fam) {
    size_t chips = net.chips.size();
    std::vector<int> token = fam.sources;
    std::vector<std::set<int>> bounds(chips + 1);
    bounds[chips] = {token.begin(), token.end()};
    REQUIRE(bounds[chips].size() == token.size());
    for (size_t j = chips; j-- > 0;) {
        for (size_t p = 0; p < token.size(); ++p) {
            const ChipEdge& e = net.chips[j].edges.at(static_cast<size_t>(fam.paths[p][j]));
            REQUIRE(e.right == token[p]);
            token[p] = e.left;
        }
        bounds[j] = {token.begin(), token.end()};
        REQUIRE(bounds[j].size() == token.size());  // vertex-disjoint
    }
    return bounds;
}

Polynomial poly_of(int rank, std::vector<std::pair<Monomial, Sqrt2>> terms) {
    Polynomial p(rank);
    for (auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

}  // namespace

TEST_CASE("level schemes") {
    CHECK(make_scheme(SchemeVariant::AVector, 3).levels == std::vector<Letter>{1, 2, 3, 4});
    CHECK(make_scheme(SchemeVariant::BVector, 2).levels ==
          std::vector<Letter>{1, 2, 0, -2, -1});
    CHECK(make_scheme(SchemeVariant::BSpin, 2).levels == std::vector<Letter>{1, 2, -2, -1});
    CHECK(make_scheme(SchemeVariant::CVector, 3).levels ==
          std::vector<Letter>{1, 2, 3, -3, -2, -1});
    CHECK(make_scheme(SchemeVariant::DVector, 4).levels ==
          std::vector<Letter>{1, 2, 3, 4, -4, -3, -2, -1});
}

TEST_CASE("chip shapes") {
    LevelScheme a3 = make_scheme(SchemeVariant::AVector, 3);
    Chip barred1 = build_chip(a3, -1);
    // 4 horizontals + the single diagonal 1 -> 2 (rising, weight t with t = 1).
    CHECK(barred1.edges.size() == 5);
    CHECK(barred1.var == 0);
    CHECK(barred1.edges[4].right == a3.level_of(1));
    CHECK(barred1.edges[4].left == a3.level_of(2));
    CHECK(barred1.edges[4].tpow == 1);

    LevelScheme b2 = make_scheme(SchemeVariant::BVector, 2);
    Chip xn = build_chip(b2, 2);
    CHECK(xn.var == 2);
    REQUIRE(xn.edges.size() == 8);  // 5 horizontals + 3 diagonals
    CHECK(xn.edges[5].coeff == Sqrt2::sqrt2());
    CHECK(xn.edges[6].coeff == Sqrt2::sqrt2());
    CHECK(xn.edges[7].coeff == Sqrt2::one());
    CHECK(xn.edges[7].tpow == 2);
    // The long diagonal crosses the level-0 horizontal.
    REQUIRE(xn.crossings.size() == 1);
    CHECK(xn.crossings[0] == std::pair<int, int>{7, b2.level_of(0)});
    CHECK(!xn.bundle);

    LevelScheme bs2 = make_scheme(SchemeVariant::BSpin, 2);
    Chip spin1 = build_chip(bs2, 1);
    REQUIRE(spin1.bundle.has_value());
    Chip spin2 = build_chip(bs2, 2);
    CHECK(spin2.edges.size() == 5);  // 4 horizontals + single t^2 diagonal
    CHECK(spin2.edges[4].tpow == 2);
    CHECK(!spin2.bundle);

    LevelScheme c3 = make_scheme(SchemeVariant::CVector, 3);
    CHECK(!build_chip(c3, 1).bundle);
    CHECK(build_chip(c3, 3).edges.size() == 7);  // single diagonal, weight t

    LevelScheme d4 = make_scheme(SchemeVariant::DVector, 4);
    Chip dn = build_chip(d4, 4);
    REQUIRE(dn.bundle.has_value());
    CHECK(dn.crossings.size() == 2);
    CHECK(build_chip(d4, 2).bundle.has_value());
}

TEST_CASE("network layout: barred block then reversed unbarred block") {
    CoxeterWord c{{1, 3, 2}};
    LayeredNetwork net = build_network(SchemeVariant::AVector, 3, c);
    REQUIRE(net.chips.size() == 6);
    std::vector<int> gens;
    for (const auto& chip : net.chips) gens.push_back(chip.generator);
    CHECK(gens == std::vector<int>{-1, -3, -2, 2, 3, 1});
    CHECK_THROWS_AS(build_network(SchemeVariant::AVector, 3, CoxeterWord{{1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("golden A3 families for label {2,4}") {
    LayeredNetwork net = build_network(SchemeVariant::AVector, 3, CoxeterWord{{1, 3, 2}});
    WeightLabel label{LabelKind::Wedge, {2, 4}};
    auto families = enumerate_families(net, label, false);
    CHECK(families.size() == 5);
    for (const auto& fam : families) CHECK(fam.crossings == 0);
    CHECK(signed_sum(net, label) == poly_of(3, {{{0, 0, 0}, Sqrt2::one()},
                                                {{1, 0, 0}, Sqrt2::one()},
                                                {{0, 0, 1}, Sqrt2::one()},
                                                {{1, 0, 1}, Sqrt2::one()},
                                                {{1, 1, 1}, Sqrt2::one()}}));
}

TEST_CASE("golden B2 vector families: the 2*t2 term comes from sqrt2 * sqrt2") {
    LayeredNetwork net = build_network(SchemeVariant::BVector, 2, CoxeterWord{{2, 1}});
    WeightLabel label{LabelKind::Wedge, {-2}};
    auto families = enumerate_families(net, label, false);
    REQUIRE(families.size() == 4);
    int two_coeff = 0;
    for (const auto& fam : families) {
        CHECK(fam.crossings == 0);
        if (fam.weight_coeff == Sqrt2{2, 0}) {
            ++two_coeff;
            CHECK(fam.weight_exp == Monomial{0, 1});
        }
    }
    CHECK(two_coeff == 1);
    CHECK(signed_sum(net, label) == poly_of(2, {{{0, 0}, Sqrt2::one()},
                                                {{0, 1}, Sqrt2{2, 0}},
                                                {{0, 2}, Sqrt2::one()},
                                                {{1, 2}, Sqrt2::one()}}));
}

TEST_CASE("golden B2 spin: bundled families have square weights") {
    LayeredNetwork net = build_network(SchemeVariant::BSpin, 2, CoxeterWord{{2, 1}});
    WeightLabel label{LabelKind::SpinB, {-2, -1}};
    auto families = enumerate_families(net, label, true);
    REQUIRE(families.size() == 3);
    std::vector<Monomial> weights;
    for (const auto& fam : families) {
        CHECK(fam.weight_coeff == Sqrt2::one());
        weights.push_back(fam.weight_exp);
    }
    std::sort(weights.begin(), weights.end());
    CHECK(weights == std::vector<Monomial>{{0, 0}, {0, 2}, {2, 2}});
    CHECK(spin_sum(net, label) == poly_of(2, {{{0, 0}, Sqrt2::one()},
                                              {{0, 1}, Sqrt2::one()},
                                              {{1, 1}, Sqrt2::one()}}));
}

TEST_CASE("golden D4 spin: three bundled families of weights 1, t2^2, t2^2*t4^2") {
    LayeredNetwork net = build_network(SchemeVariant::DVector, 4, CoxeterWord{{1, 2, 3, 4}});
    WeightLabel label{LabelKind::SpinDOdd, {3, -4, -2, -1}};
    auto families = enumerate_families(net, label, true);
    REQUIRE(families.size() == 3);
    std::vector<Monomial> weights;
    for (const auto& fam : families) weights.push_back(fam.weight_exp);
    std::sort(weights.begin(), weights.end());
    CHECK(weights == std::vector<Monomial>{{0, 0, 0, 0}, {0, 2, 0, 0}, {0, 2, 0, 2}});
    CHECK(spin_sum(net, label) == poly_of(4, {{{0, 0, 0, 0}, Sqrt2::one()},
                                              {{0, 1, 0, 0}, Sqrt2::one()},
                                              {{0, 1, 0, 1}, Sqrt2::one()}}));
}

TEST_CASE("family weights recompute consistently and paths are vertex-disjoint") {
    LayeredNetwork net = build_network(SchemeVariant::DVector, 4, CoxeterWord{{2, 4, 1, 3}});
    WeightLabel label{LabelKind::Wedge, {1, 2}};
    for (const auto& fam : enumerate_families(net, label, false)) {
        auto [weight, crossings] = family_weight(net, fam);
        CHECK(weight.first == fam.weight_exp);
        CHECK(weight.second == fam.weight_coeff);
        CHECK(crossings == fam.crossings);
        boundary_sets(net, fam);
    }
}

TEST_CASE("enumeration is deterministic") {
    LayeredNetwork net = build_network(SchemeVariant::BVector, 3, CoxeterWord{{3, 1, 2}});
    WeightLabel label{LabelKind::Wedge, {1, 2}};
    auto first = enumerate_families(net, label, false);
    auto second = enumerate_families(net, label, false);
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].paths == second[i].paths);
        CHECK(first[i].weight_exp == second[i].weight_exp);
    }
    // Families come sorted by their boundary occupied-set sequences.
    std::vector<std::vector<std::set<int>>> keys;
    for (const auto& fam : first) keys.push_back(boundary_sets(net, fam));
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("signed sums match the determinant identity in type A") {
    for (int n = 1; n <= 4; ++n) {
        LieType type{Family::A, n};
        for (const CoxeterWord& c : testutil::coxeter_words(type)) {
            LayeredNetwork net = build_network(SchemeVariant::AVector, n, c);
            // All k-subsets of the n+1 levels for k = 1, 2.
            for (int i = 0; i <= n; ++i) {
                CHECK(signed_sum(net, WeightLabel{LabelKind::Wedge, {i + 1}}) ==
                      lindstrom_minor(net, {i}));
                for (int j = i + 1; j <= n; ++j)
                    CHECK(signed_sum(net, WeightLabel{LabelKind::Wedge, {i + 1, j + 1}}) ==
                          lindstrom_minor(net, {i, j}));
            }
        }
    }
}

TEST_CASE("label/scheme mismatch is rejected") {
    LayeredNetwork net = build_network(SchemeVariant::AVector, 3, CoxeterWord{{1, 2, 3}});
    CHECK_THROWS_AS(enumerate_families(net, WeightLabel{LabelKind::Wedge, {-1}}, false),
                    std::invalid_argument);
}

TEST_CASE("DOT export") {
    LayeredNetwork net = build_network(SchemeVariant::AVector, 3, CoxeterWord{{1, 3, 2}});
    std::string dot = export_dot(net);
    // 7 boundary columns x 4 levels = 28 vertices.
    CHECK(std::count(dot.begin(), dot.end(), '{') >= 7);
    size_t ranks = 0, pos = 0;
    while ((pos = dot.find("rank=same", pos)) != std::string::npos) {
        ++ranks;
        pos += 9;
    }
    CHECK(ranks == 7);
    for (int b = 0; b < 7; ++b)
        for (int l = 0; l < 4; ++l)
            CHECK(dot.find("b" + std::to_string(b) + "_l" + std::to_string(l)) !=
                  std::string::npos);
    CHECK(dot == export_dot(net));  // bit-exact

    LayeredNetwork bnet = build_network(SchemeVariant::BVector, 2, CoxeterWord{{1, 2}});
    CHECK(export_dot(bnet).find("sqrt(2)*t2") != std::string::npos);

    WeightLabel label{LabelKind::Wedge, {2, 4}};
    auto families = enumerate_families(net, label, false);
    REQUIRE(!families.empty());
    std::string bold = export_dot(net, &families.front());
    CHECK(bold.find("style=bold") != std::string::npos);
}

TEST_CASE("families JSON dump") {
    LayeredNetwork net = build_network(SchemeVariant::AVector, 2, CoxeterWord{{1, 2}});
    WeightLabel label{LabelKind::Wedge, {2}};
    nlohmann::json j = families_json(net, label, false);
    CHECK(j.at("label") == nlohmann::json::array({2}));
    REQUIRE(j.at("families").is_array());
    for (const auto& fam : j.at("families")) {
        CHECK(fam.contains("weight"));
        CHECK(fam.contains("crossings"));
        CHECK(fam.at("edges").is_array());
        CHECK(fam.at("weight").contains("exp"));
    }
}
