#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace krc;

namespace {
const CartanType D4{Family::D, 4};
const CartanType B3{Family::B, 3};
const CartanType C3{Family::A2odd, 3};
} // namespace

TEST(LetterStep, Examples) {
    EXPECT_EQ(letter_step(0, Letter(-2), Step::lower, D4), Letter(1));
    EXPECT_EQ(letter_step(3, Letter(3), Step::lower, B3), Letter(0));
    EXPECT_EQ(letter_step(1, Letter(3), Step::lower, D4), std::nullopt);
}

TEST(LetterStep, InvalidInputs) {
    EXPECT_THROW(letter_step(5, Letter(1), Step::lower, D4), DomainError);
    EXPECT_THROW(letter_step(1, Letter(0), Step::lower, D4), DomainError);
    EXPECT_THROW(letter_step(1, Letter(5), Step::lower, D4), DomainError);
}

TEST(LetterWeight, Examples) {
    EXPECT_EQ(letter_weight(Letter(1), 3).coords, (std::vector<int>{1, 0, 0}));
    EXPECT_EQ(letter_weight(Letter(-2), 3).coords, (std::vector<int>{0, -1, 0}));
    EXPECT_EQ(letter_weight(Letter(0), 3).coords, (std::vector<int>{0, 0, 0}));
}

TEST(Alphabet, Sizes) {
    for (const auto& t : oracle::desk_types()) {
        const int n = t.rank;
        EXPECT_EQ(static_cast<int>(alphabet(t).size()), t.family == Family::B ? 2 * n + 1 : 2 * n) << t.name();
    }
}

TEST(TableOne, ArrowsMatchTranscription) {
    for (const auto& t : {D4, B3, C3}) {
        std::set<oracle::Arrow> got;
        for (int i = 0; i <= t.rank; ++i)
            for (Letter x : alphabet(t))
                if (auto y = letter_step(i, x, Step::lower, t)) got.emplace(x.value, i, y->value);
        EXPECT_EQ(got, oracle::vector_arrows(t)) << t.name();
    }
}

TEST(LetterStep, RaiseUndoesLower) {
    for (const auto& t : oracle::desk_types())
        for (int i = 0; i <= t.rank; ++i)
            for (Letter x : alphabet(t)) {
                if (auto y = letter_step(i, x, Step::lower, t)) EXPECT_EQ(letter_step(i, *y, Step::raise, t), x);
                if (auto y = letter_step(i, x, Step::raise, t)) EXPECT_EQ(letter_step(i, *y, Step::lower, t), x);
            }
}

TEST(LetterStep, WeightDropsBySimpleRoot) {
    for (const auto& t : oracle::desk_types())
        for (int i = 1; i <= t.rank; ++i)
            for (Letter x : alphabet(t))
                if (auto y = letter_step(i, x, Step::lower, t))
                    EXPECT_EQ(letter_weight(*y, t.rank), letter_weight(x, t.rank) - simple_root(i, t));
}

TEST(LetterStep, ZeroNodePairingRule) {
    for (const auto& t : oracle::desk_types())
        for (Letter x : alphabet(t)) {
            auto [e, f] = letter_eps_phi(0, x, t);
            EXPECT_EQ(f - e, h_pairing(0, letter_weight(x, t.rank), t)) << t.name() << " " << to_string(x);
        }
}

TEST(LetterTable, AgreesWithDirectRule) {
    for (const auto& t : oracle::desk_types()) {
        const LetterTable lt(t);
        for (int i = 0; i <= t.rank; ++i)
            for (Letter x : alphabet(t)) {
                EXPECT_EQ(lt.step(i, x, Step::lower), letter_step(i, x, Step::lower, t));
                EXPECT_EQ(lt.step(i, x, Step::raise), letter_step(i, x, Step::raise, t));
                EXPECT_EQ(std::make_pair(lt.eps(i, x), lt.phi(i, x)), letter_eps_phi(i, x, t));
            }
    }
}
