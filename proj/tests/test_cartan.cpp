#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace krc;

namespace {

const CartanType D4{Family::D, 4};
const CartanType D8{Family::D, 8};

int brute_count(int s, const CartanType& t) {
    // odometer over all coordinate vectors bounded by s
    const int n = t.rank;
    std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
    int count = 0;
    for (;;) {
        int lv = 0;
        for (int i = 0; i <= n; ++i) lv += level_coefficient(i, t) * c[static_cast<std::size_t>(i)];
        count += lv == s;
        int k = 0;
        while (k <= n && ++c[static_cast<std::size_t>(k)] > s) c[static_cast<std::size_t>(k++)] = 0;
        if (k > n) break;
    }
    return count;
}

} // namespace

TEST(Level, WorkedWeight) { EXPECT_EQ(level(AffineWeight({1, 2, 1, 1, 0, 1, 0, 0, 0}), D8), 9); }

TEST(Level, ZeroAndLambda2) {
    EXPECT_EQ(level(AffineWeight::zero(4), D4), 0);
    EXPECT_EQ(level(AffineWeight({0, 0, 1, 0, 0}), D4), 2);
}

TEST(Level, RankMismatchThrows) { EXPECT_THROW(level(AffineWeight({1, 0}), D4), DomainError); }

TEST(Level, CoefficientsPerFamily) {
    EXPECT_EQ(level(AffineWeight({1, 1, 1, 1, 1}), CartanType{Family::D, 4}), 6);
    EXPECT_EQ(level(AffineWeight({1, 1, 1, 1}), CartanType{Family::B, 3}), 5);
    EXPECT_EQ(level(AffineWeight({1, 1, 1, 1}), CartanType{Family::A2odd, 3}), 6);
}

TEST(DominantWeights, D4LevelTwoHasEleven) {
    EXPECT_EQ(dominant_weights(2, D4).size(), 11u);
    EXPECT_EQ(brute_count(2, D4), 11);
}

TEST(DominantWeights, LevelOneAndZero) {
    const auto w1 = dominant_weights(1, D4);
    const std::set<AffineWeight> got(w1.begin(), w1.end());
    const std::set<AffineWeight> want{AffineWeight({1, 0, 0, 0, 0}), AffineWeight({0, 1, 0, 0, 0}),
                                      AffineWeight({0, 0, 0, 1, 0}), AffineWeight({0, 0, 0, 0, 1})};
    EXPECT_EQ(got, want);
    const auto w0 = dominant_weights(0, D4);
    ASSERT_EQ(w0.size(), 1u);
    EXPECT_EQ(w0[0], AffineWeight::zero(4));
}

TEST(DominantWeights, LevelMatchesAndCountsAgree) {
    for (const auto& t : oracle::desk_types())
        for (int s = 0; s <= 4; ++s) {
            const auto ws = dominant_weights(s, t);
            for (const auto& w : ws) EXPECT_EQ(level(w, t), s) << t.name();
            EXPECT_EQ(static_cast<int>(ws.size()), brute_count(s, t)) << t.name() << " s=" << s;
            EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
        }
}

TEST(ClassicalShapes, Examples) {
    EXPECT_EQ(classical_shapes(1, 1, D4), std::vector<Shape>{Shape({1})});
    EXPECT_EQ(classical_shapes(2, 2, D4), (std::vector<Shape>{Shape({2, 2}), Shape({2, 0}), Shape({0, 0})}));
    const auto s45 = classical_shapes(4, 5, CartanType{Family::D, 6});
    EXPECT_NE(std::find(s45.begin(), s45.end(), Shape({4, 4, 2, 2, 0})), s45.end());
}

TEST(ClassicalShapes, SpinRejected) {
    EXPECT_THROW(classical_shapes(3, 1, D4), DomainError);
    EXPECT_THROW(classical_shapes(3, 1, CartanType{Family::B, 3}), DomainError);
    EXPECT_NO_THROW(classical_shapes(3, 1, CartanType{Family::A2odd, 3}));
}

TEST(ClassicalShapes, ReachableByDominoRemoval) {
    for (const auto& t : oracle::desk_types())
        for (int r = 1; r <= t.max_nonspin_node(); ++r)
            for (int s = 1; s <= 3; ++s) {
                std::set<Shape> seen{Shape(std::vector<int>(static_cast<std::size_t>(s), r))};
                std::vector<Shape> todo(seen.begin(), seen.end());
                while (!todo.empty()) {
                    Shape cur = todo.back();
                    todo.pop_back();
                    for (int j = 0; j < s; ++j) {
                        Shape nxt = cur;
                        nxt.heights[static_cast<std::size_t>(j)] -= 2;
                        if (nxt[j] < 0 || !nxt.is_partition()) continue;
                        if (seen.insert(nxt).second) todo.push_back(nxt);
                    }
                }
                const auto got = classical_shapes(r, s, t);
                EXPECT_EQ(std::set<Shape>(got.begin(), got.end()), seen);
                EXPECT_EQ(got.size(), seen.size());
            }
}

TEST(HPairing, Examples) {
    ClassicalWeight e1(4);
    e1.x(1) = 1;
    EXPECT_EQ(h_pairing(2, e1, D4), 0);
    EXPECT_EQ(h_pairing(0, e1, D4), -1);
    ClassicalWeight e3(3);
    e3.x(3) = 1;
    EXPECT_EQ(h_pairing(3, e3, CartanType{Family::A2odd, 3}), 1);
}

TEST(HPairing, CartanMatrixDiagonalIsTwo) {
    for (const auto& t : oracle::desk_types())
        for (int i = 1; i <= t.rank; ++i) EXPECT_EQ(h_pairing(i, simple_root(i, t), t), 2) << t.name() << " " << i;
}

TEST(SimpleRootCoordinates, RoundTrip) {
    for (const auto& t : oracle::desk_types()) {
        std::vector<int> c{3, 1, 4, 1, 5};
        c.resize(static_cast<std::size_t>(t.rank), 2);
        ClassicalWeight sum(t.rank);
        for (int i = 1; i <= t.rank; ++i)
            for (int k = 0; k < c[static_cast<std::size_t>(i - 1)]; ++k) sum += simple_root(i, t);
        auto got = simple_root_coordinates(sum, t);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(*got, c) << t.name();
    }
}

TEST(CartanType, Triples) {
    EXPECT_EQ(CartanType::from_triple("A", 5, 2), (CartanType{Family::A2odd, 3}));
    EXPECT_EQ(CartanType::from_triple("D", 4, 1), D4);
    EXPECT_THROW(CartanType::from_triple("D", 3, 1), DomainError);
    EXPECT_THROW(CartanType::from_triple("A", 4, 2), DomainError);
    EXPECT_THROW(CartanType::from_triple("C", 3, 1), DomainError);
    const auto tr = CartanType{Family::A2odd, 3}.triple();
    EXPECT_EQ(tr.letter, "A");
    EXPECT_EQ(tr.index, 5);
    EXPECT_EQ(tr.twist, 2);
}
