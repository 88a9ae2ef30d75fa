#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace krc;

namespace {

const CartanType D4{Family::D, 4};
const CartanType D6{Family::D, 6};
const CartanType D8{Family::D, 8};
const CartanType B3{Family::B, 3};
const CartanType C3{Family::A2odd, 3};

const KRCrystal& b22_d4() {
    static const KRCrystal B(D4, 2, 2);
    return B;
}

AffineWeight sample_weight() { return AffineWeight({1, 2, 1, 1, 0, 1, 0, 0, 0}); }

std::string status_of(const Report& rep) {
    std::string out;
    for (const auto& c : rep.checks)
        if (c.status == Status::fail) out += c.condition + ": " + c.witness + "\n";
    return out;
}

} // namespace

TEST(BuildKR, SizesAndComponents) {
    EXPECT_EQ(KRCrystal(D4, 1, 1).size(), 8u);
    EXPECT_EQ(KRCrystal(C3, 1, 1).size(), 6u);
    EXPECT_EQ(b22_d4().shapes(), (std::vector<Shape>{Shape({2, 2}), Shape({2, 0}), Shape({0, 0})}));
    EXPECT_EQ(b22_d4().size(), 329u);
}

TEST(BuildKR, SizesMatchWeylDimension) {
    for (const auto& t : oracle::desk_types())
        for (int r = 1; r <= std::min(3, t.max_nonspin_node()); ++r)
            for (int s = 1; s <= 2; ++s) {
                if (oracle::kr_dimension(r, s, t) > 60000) continue;
                EXPECT_EQ(static_cast<long long>(KRCrystal(t, r, s).size()), oracle::kr_dimension(r, s, t))
                    << t.name() << " r=" << r << " s=" << s;
            }
}

TEST(BuildKR, Errors) {
    EXPECT_THROW(KRCrystal(D4, 3, 1), DomainError);
    EXPECT_THROW(KRCrystal(B3, 3, 1), DomainError);
    EXPECT_THROW(KRCrystal(D4, 2, 2, 100), ResourceError);
}

TEST(Sigma, ShortExample) {
    EXPECT_EQ(to_rows(sigma(from_rows({{3}, {1}}, 2), 2, D4)), (Rows{{-2, -1}, {2, 3}}));
}

TEST(Sigma, RankSixExample) {
    const auto b = from_rows({{-4, -2}, {3, 4}, {2, 3, -1, -1}, {1, 1, 2, 3}}, 5);
    EXPECT_EQ(to_rows(sigma(b, 4, D6)), (Rows{{-2}, {-4}, {3, 3, 4, -1}, {1, 2, 2, 3}}));
}

TEST(Sigma, InvolutionOnB22) {
    const auto& B = b22_d4();
    for (int v = 0; v < static_cast<int>(B.size()); ++v) {
        EXPECT_EQ(B.sigma(B.sigma(v)), v);
        EXPECT_EQ(sigma(sigma(B.element(v), 2, D4), 2, D4), B.element(v));
    }
}

TEST(Sigma, IndependentOfRaisingOrder) {
    // raise over 2..n with the largest eligible index first instead
    const auto& B = b22_d4();
    const auto& lt = letters_for(D4);
    const std::vector<int> nodes{4, 3, 2};
    for (const auto& b : B.elements()) {
        auto [top, a] = raise_to_highest(b.word, nodes, lt);
        Element c = phi(s_involution(phi_inverse(Element{b.shape, top}, D4), 2));
        for (auto it = a.rbegin(); it != a.rend(); ++it) ASSERT_TRUE(word_step_inplace(*it, c.word, Step::lower, lt));
        EXPECT_EQ(c, sigma(b, 2, D4)) << to_string(b);
    }
}

TEST(AffineStep, ShortExample) {
    const auto b = from_rows({{3}, {1}}, 2);
    auto e0 = affine_step(0, b, Step::raise, 2, D4);
    ASSERT_TRUE(e0);
    EXPECT_EQ(to_rows(*e0), (Rows{{-2}, {3}}));
    const auto& B = b22_d4();
    EXPECT_EQ(B.element(B.e(0, B.require(b))), *e0);
}

TEST(AffineStep, InverseAndAgreesWithTables) {
    const auto& B = b22_d4();
    for (int v = 0; v < static_cast<int>(B.size()); ++v) {
        const int w = B.f(0, v);
        if (w >= 0) EXPECT_EQ(B.e(0, w), v);
        const auto direct = affine_step(0, B.element(v), Step::lower, 2, D4);
        EXPECT_EQ(direct.has_value(), w >= 0);
        if (direct) EXPECT_EQ(*direct, B.element(w));
    }
}

TEST(AffineStep, ZeroNodeOnEmptyElement) {
    const auto& B = b22_d4();
    const int u = B.require(Element{Shape({0, 0}), {}});
    EXPECT_EQ(B.eps_vec(u), AffineWeight({2, 0, 0, 0, 0}));
    int v = u, steps = 0;
    while (B.e(0, v) >= 0) {
        v = B.e(0, v);
        ++steps;
    }
    EXPECT_EQ(steps, 2);
}

TEST(EpsPhiVec, WordLocalMatchesTables) {
    const auto& B = b22_d4();
    for (int v = 0; v < static_cast<int>(B.size()); v += 7) {
        auto [e, f] = eps_phi_vec(B.element(v), 2, D4);
        EXPECT_EQ(e, B.eps_vec(v));
        EXPECT_EQ(f, B.phi_vec(v));
    }
}

TEST(EpsPhiVec, HighestElementCountsColumns) {
    const CartanType D5{Family::D, 5};
    const auto b = highest_word(Shape({3, 3, 1}), D5);
    auto [e, f] = eps_phi_vec(b, 3, D5);
    EXPECT_EQ(f[3], 2);
    EXPECT_EQ(f[1], 1);
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(e[i], 0);
}

TEST(WeightDiagram, WorkedExamples) {
    EXPECT_EQ(to_sign_rows(weight_diagram(sample_weight(), 3, D8)),
              (SignRows{{"", "", "+", "-", "-"}, {"", "", "", "", "+"}, {"", "", "", "", "", "", "+", "-", "-"}}));
    EXPECT_EQ(to_sign_rows(weight_diagram(sample_weight(), 4, D8)),
              (SignRows{{"", "", "-"}, {"", "", "+"}, {"", "", "", "", "+", "-", "-", "-"}, {"", "", "", "", "", "", "+", "+"}}));
    const auto empty = weight_diagram(AffineWeight({3, 0, 0, 0, 0}), 2, D4);
    EXPECT_EQ(empty.outer, Shape({0, 0, 0}));
}

TEST(MinimalElement, WorkedExamples) {
    const auto b3 = minimal_element(sample_weight(), 3, D8);
    EXPECT_EQ(to_rows(b3), (Rows{{3, 5, -5, -1, -1}, {2, 2, 5, -5, -2}, {1, 1, 1, 5, -5, -3, -2, -1, -1}}));
    EXPECT_EQ(eps_phi_vec(b3, 3, D8).first, sample_weight());
    const auto b4 = minimal_element(sample_weight(), 4, D8);
    EXPECT_EQ(to_rows(b4), (Rows{{5, -5, -2}, {3, 5, -5}, {2, 2, 5, -5, -2, -1, -1, -1}, {1, 1, 1, 2, 5, -5, -3, -2}}));
    EXPECT_EQ(eps_phi_vec(b4, 4, D8).first, sample_weight());
    EXPECT_TRUE(minimal_element(AffineWeight({2, 0, 0, 0, 0}), 2, D4).word.empty());
}

TEST(MinimalElement, InvalidInputs) {
    EXPECT_THROW(minimal_element(AffineWeight({1, 1, 1}), 2, D4), DomainError);
    EXPECT_THROW(minimal_element(AffineWeight({1, 0, 0, 0, 0}), 3, D4), DomainError);
}

TEST(MinimalSet, KnownListForB22) {
    const auto ms = minimal_set(b22_d4());
    std::set<Rows> got;
    for (const auto& [w, v] : ms) got.insert(to_rows(b22_d4().element(v)));
    const std::set<Rows> want{Rows{},
                              {{4}, {-4}},
                              {{-4}, {4}},
                              {{-2}, {2}},
                              {{-2, -1}, {1, 2}},
                              {{2, -1}, {1, -2}},
                              {{4, -1}, {1, -4}},
                              {{-4, -1}, {1, 4}},
                              {{3, -2}, {2, -3}},
                              {{4, -3}, {3, -4}},
                              {{-4, -3}, {3, 4}}};
    EXPECT_EQ(got, want);
    EXPECT_EQ(ms.size(), dominant_weights(2, D4).size());
}

TEST(MinimalSet, LevelOneForB11) {
    for (const auto& t : {D4, B3, C3}) {
        const KRCrystal B(t, 1, 1);
        const auto ms = minimal_set(B);
        ASSERT_FALSE(ms.empty());
        EXPECT_EQ(level(ms.begin()->first, t), 1) << t.name();
    }
}

TEST(MinimalElement, AgreesWithScan) {
    for (const auto& [t, r, s] : std::vector<std::tuple<CartanType, int, int>>{
             {D4, 1, 1}, {D4, 1, 2}, {D4, 2, 1}, {D4, 2, 2}, {B3, 1, 1}, {B3, 2, 1}, {B3, 1, 2}, {C3, 1, 1}, {C3, 2, 1},
             {C3, 2, 2}, {C3, 3, 1}, {C3, 1, 2}, {CartanType{Family::D, 5}, 3, 1}}) {
        const KRCrystal B(t, r, s);
        const auto ms = minimal_set(B);
        for (const auto& La : dominant_weights(s, t)) {
            const auto b = minimal_element(La, r, t);
            auto it = ms.find(La);
            ASSERT_NE(it, ms.end()) << t.name() << " " << to_string(La);
            EXPECT_EQ(B.element(it->second), b) << t.name() << " r=" << r << " s=" << s << " " << to_string(La);
        }
    }
}

TEST(CheckPerfect, DeskCrystals) {
    for (const auto& [t, r, s] : std::vector<std::tuple<CartanType, int, int>>{{D4, 1, 1}, {D4, 2, 2}, {B3, 1, 1}, {C3, 2, 1}}) {
        const KRCrystal B(t, r, s);
        const auto rep = check_perfect(B);
        EXPECT_TRUE(rep.ok()) << t.name() << "\n" << status_of(rep);
        ASSERT_NE(rep.find("3: realized by a module"), nullptr);
        EXPECT_EQ(rep.find("3: realized by a module")->status, Status::skipped);
    }
}

TEST(CheckPropertyAKR, DeskCrystals) {
    for (const auto& [t, r, s] : std::vector<std::tuple<CartanType, int, int>>{
             {D4, 2, 2}, {D4, 1, 1}, {D4, 1, 2}, {B3, 2, 1}, {C3, 1, 2}, {C3, 3, 1}, {CartanType{Family::D, 5}, 3, 1}}) {
        const KRCrystal B(t, r, s);
        const auto rep = check_property_AKR(B);
        EXPECT_TRUE(rep.ok()) << t.name() << " r=" << r << " s=" << s << "\n" << status_of(rep);
    }
}

TEST(CheckPropertyAKR, UniqueUForOddR) {
    const KRCrystal B(D4, 1, 2);
    std::vector<int> us;
    for (int v = 0; v < static_cast<int>(B.size()); ++v)
        if (B.eps_vec(v) == AffineWeight({2, 0, 0, 0, 0})) us.push_back(v);
    ASSERT_EQ(us.size(), 1u);
    EXPECT_EQ(B.element(us[0]), highest_word(Shape({1, 1}), D4));
    EXPECT_EQ(B.phi_vec(us[0]), AffineWeight({0, 2, 0, 0, 0}));
}

TEST(Report, OkIgnoresSkippedAndReported) {
    const Report bad{{{"x", Status::fail, "w"}}};
    const Report fine{{{"x", Status::reported, "w"}, {"y", Status::skipped, ""}}};
    EXPECT_FALSE(bad.ok());
    EXPECT_TRUE(fine.ok());
}
