#include "nilp/presentation.hpp"
#include "nilp/word.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nilp;

namespace {

const Letter x1 = gen(0), x2 = gen(1), x3 = gen(2);
const Letter X1 = inv(0), X2 = inv(1), X3 = inv(2);

Word random_word(std::mt19937_64 &rng, std::size_t len, int gens)
{
	Word w;
	for (std::size_t i = 0; i < len; ++i)
		w.push_back(Letter(static_cast<int>(rng() % gens), rng() % 2 ? 1 : -1));
	return w;
}

} // namespace

TEST(Word, FreeReduceInversePair)
{
	EXPECT_TRUE(free_reduce(Word{x1, X1}).empty());
	EXPECT_TRUE(free_reduce(Word{x1, x2, X2, X1}).empty());
	// z~^0 at c=2, n=2
	EXPECT_TRUE(free_reduce(Word{X1, X1, x1, x1}).empty());
	EXPECT_EQ(free_reduce(Word{x1, x2, X2, x3}), (Word{x1, x3}));
}

TEST(Word, FreeReduceIsIdempotentAndReduced)
{
	std::mt19937_64 rng(5);
	for (int t = 0; t < 200; ++t)
	{
		Word w = random_word(rng, rng() % 30, 3);
		Word r = free_reduce(w);
		EXPECT_TRUE(is_freely_reduced(r));
		EXPECT_EQ(free_reduce(r), r);
	}
}

TEST(Word, Inverse)
{
	EXPECT_TRUE(inverse_word(Word{}).empty());
	EXPECT_EQ(inverse_word(Word{x1, x2}), (Word{X2, X1}));
	EXPECT_EQ(inverse_word(commutator(Word{x1}, Word{x2})), (Word{X2, X1, x2, x1}));
}

TEST(Word, Commutators)
{
	EXPECT_EQ(nested_commutator(std::vector<Letter>{x1}), (Word{x1}));
	EXPECT_EQ(commutator(Word{x1}, Word{x2}), (Word{X1, X2, x1, x2}));
	Word inner{X2, X3, x2, x3};
	Word expect{X1};
	append(expect, inverse_word(inner));
	expect.push_back(x1);
	append(expect, inner);
	Word got = nested_commutator(std::vector<Letter>{x1, x2, x3});
	EXPECT_EQ(got, expect);
	EXPECT_EQ(got.size(), 10u);
}

TEST(Word, Powers)
{
	EXPECT_EQ(letter_power(x1, -3), (Word{X1, X1, X1}));
	EXPECT_TRUE(letter_power(x1, 0).empty());
	EXPECT_EQ(power(Word{x1, x2}, -2), (Word{X2, X1, X2, X1}));
}

TEST(Word, RotationRoundTrip)
{
	Word w{x1, x2, X1, x3};
	for (std::size_t k = 0; k < w.size(); ++k)
		EXPECT_EQ(rotate(rotate(w, k), (w.size() - k) % w.size()), w);
	EXPECT_EQ(rotate(w, 1), (Word{x2, X1, x3, x1}));
}

TEST(Word, LeastRotationIsCanonical)
{
	std::mt19937_64 rng(11);
	for (int t = 0; t < 100; ++t)
	{
		Word w = random_word(rng, 1 + rng() % 12, 2);
		Word best = rotate(w, least_rotation(w));
		for (std::size_t k = 0; k < w.size(); ++k)
		{
			Word r = rotate(w, k);
			EXPECT_LE(best, r);
			EXPECT_EQ(rotate(r, least_rotation(r)), best);
		}
	}
}

TEST(Word, TextRoundTrip)
{
	Presentation p = build_chain_presentation(3, 1);
	Word w = parse_word("x1^-2 x2 x2 x3^3 x1", p);
	EXPECT_EQ(w.size(), 8u);
	EXPECT_EQ(format_word(w, p), "x1^-2 x2^2 x3^3 x1");
	EXPECT_EQ(parse_word(format_word(w, p), p), w);
	EXPECT_TRUE(parse_word("", p).empty());
}

TEST(Word, ParseErrors)
{
	Presentation p = build_chain_presentation(2, 1);
	EXPECT_THROW(parse_word("y1", p), ParseError);
	EXPECT_THROW(parse_word("x1^0", p), ParseError);
	EXPECT_THROW(parse_word("x1^", p), ParseError);
	EXPECT_THROW(parse_letter("x1^2", p), ParseError);
}
