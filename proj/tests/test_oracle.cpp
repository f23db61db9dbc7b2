#include "nilp/compression.hpp"
#include "nilp/filler.hpp"
#include "nilp/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nilp;

namespace {

Word random_word(std::mt19937_64 &rng, std::size_t len, int gens)
{
	Word w;
	for (std::size_t i = 0; i < len; ++i)
		w.push_back(Letter(static_cast<int>(rng() % gens), rng() % 2 ? 1 : -1));
	return w;
}

std::size_t witt(int m, int d)
{
	auto mobius = [](int n) {
		int r = 1;
		for (int p = 2; p * p <= n; ++p)
			if (n % p == 0)
			{
				n /= p;
				if (n % p == 0)
					return 0;
				r = -r;
			}
		return n > 1 ? -r : r;
	};
	long long s = 0;
	for (int e = 1; e <= d; ++e)
		if (d % e == 0)
		{
			long long pw = 1;
			for (int i = 0; i < d / e; ++i)
				pw *= m;
			s += mobius(e) * pw;
		}
	return static_cast<std::size_t>(s / d);
}

} // namespace

TEST(Oracle, EmptyAndInversePair)
{
	Presentation p = build_chain_presentation(3, 1);
	for (int c = 1; c <= 4; ++c)
	{
		Oracle o(p, c);
		EXPECT_TRUE(o.eval(Word{}).is_one());
		EXPECT_TRUE(o.is_identity(Word{gen(0), inv(0)}));
		EXPECT_TRUE(o.is_identity(Word{inv(2), gen(2)}));
	}
}

TEST(Oracle, CommutatorSeries)
{
	Presentation p = build_chain_presentation(2, 1);
	Oracle o(p, 2);
	TruncatedSeries s = o.eval(commutator(Word{gen(0)}, Word{gen(1)}));
	const std::vector<int> x1x2{0, 1}, x2x1{1, 0}, x1x1{0, 0}, x1{0};
	EXPECT_EQ(s.coefficient(x1x2), 1);
	EXPECT_EQ(s.coefficient(x2x1), -1);
	EXPECT_EQ(s.coefficient(x1x1), 0);
	EXPECT_EQ(s.coefficient(x1), 0);
	EXPECT_FALSE(s.is_one());
	EXPECT_EQ(s.lowest_nonconstant_degree(), 2);
}

TEST(Oracle, CommutatorIsCentralAtClassTwo)
{
	Presentation p = build_chain_presentation(2, 1);
	Word w = commutator(Word{gen(0)}, commutator(Word{gen(0)}, Word{gen(1)}));
	EXPECT_TRUE(is_identity(w, p, 2));
	EXPECT_FALSE(is_identity(w, p, 3));
}

TEST(Oracle, EvalCommutesWithFreeReduction)
{
	Presentation p = build_filler_presentation(2, 2);
	Oracle o(p, 3);
	std::mt19937_64 rng(21);
	for (int t = 0; t < 300; ++t)
	{
		Word w = random_word(rng, rng() % 24, p.generator_count());
		ASSERT_EQ(o.eval(w), o.eval(free_reduce(w)));
	}
}

TEST(Oracle, EvalIsMultiplicative)
{
	Presentation p = build_chain_presentation(3, 1);
	Oracle o(p, 3);
	std::mt19937_64 rng(8);
	for (int t = 0; t < 100; ++t)
	{
		Word a = random_word(rng, rng() % 10, 3), b = random_word(rng, rng() % 10, 3);
		ASSERT_EQ(o.eval(concat(a, b)), o.eval(a) * o.eval(b));
	}
}

TEST(Oracle, DefinitionLettersExpand)
{
	Presentation p = build_filler_presentation(2, 2);
	Oracle o(p, 2);
	const int g12 = p.find_generator("g1_2");
	Word w{gen(g12)};
	append(w, inverse_word(commutator(Word{gen(0)}, Word{gen(1)})));
	EXPECT_TRUE(o.is_identity(w));
}

TEST(Lyndon, SmallBases)
{
	LyndonBasis b22(2, 2);
	EXPECT_EQ(b22.words(), (std::vector<std::vector<int>>{{0, 1}}));
	LyndonBasis b23(2, 3);
	EXPECT_EQ(b23.words(), (std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 1}}));
	for (int d = 2; d <= 5; ++d)
		EXPECT_EQ(LyndonBasis(1, d).size(), 0u);
}

TEST(Lyndon, SizesAreWittNumbers)
{
	EXPECT_EQ(witt(2, 3), 2u);
	EXPECT_EQ(witt(3, 4), 18u);
	for (int m = 1; m <= 3; ++m)
		for (int d = 1; d <= 4; ++d)
			EXPECT_EQ(LyndonBasis(m, d).size(), witt(m, d)) << m << " " << d;
}

TEST(WeightExponents, Commutator)
{
	Presentation p = build_chain_presentation(2, 1);
	Oracle o(p, 2);
	LyndonBasis b(2, 2);
	EXPECT_EQ(weight_exponents(Word{}, o, b), IntVector{0});
	EXPECT_EQ(weight_exponents(commutator(Word{gen(0)}, Word{gen(1)}), o, b), IntVector{1});
	EXPECT_EQ(weight_exponents(commutator(Word{gen(1)}, Word{gen(0)}), o, b), IntVector{-1});
	EXPECT_THROW(weight_exponents(Word{gen(0)}, o, b), NotInGammaC);
}

TEST(WeightExponents, PowersOfChainCommutator)
{
	for (int c = 2; c <= 3; ++c)
	{
		Presentation p = build_chain_presentation(c, 1);
		Oracle o(p, c);
		LyndonBasis b(c, c);
		const Word z = z_word(chain_spec(c), 1);
		IntVector unit = weight_exponents(z, o, b);
		for (long long s = 0; s <= 16; ++s)
		{
			IntVector v = weight_exponents(power(z, s), o, b);
			for (std::size_t i = 0; i < v.size(); ++i)
				ASSERT_EQ(v[i], unit[i] * s);
		}
	}
}

TEST(Solve, BasisCoefficients)
{
	const std::vector<IntVector> basis{{1, 0, 2}, {0, 1, 1}};
	EXPECT_EQ(*solve_in_basis({1, 0, 2}, basis), (IntVector{1, 0}));
	EXPECT_EQ(*solve_in_basis({0, 0, 0}, basis), (IntVector{0, 0}));
	EXPECT_EQ(*solve_in_basis({2, -3, 1}, basis), (IntVector{2, -3}));
	EXPECT_FALSE(solve_in_basis({1, 1, 0}, basis).has_value());
	EXPECT_FALSE(solve_in_basis({1}, {IntVector{2}}).has_value());
	EXPECT_EQ(rational_rank({{1, 2}, {2, 4}, {0, 1}}), 2u);
}

TEST(Solve, AntisymmetricLetter)
{
	Presentation p = build_filler_presentation(2, 2);
	Oracle o(p, 2);
	LyndonBasis b(2, 2);
	IntVector v12 = weight_exponents(Word{gen(p.find_generator("g1_2"))}, o, b);
	IntVector v21 = weight_exponents(Word{gen(p.find_generator("g2_1"))}, o, b);
	EXPECT_EQ(*solve_in_basis(v21, {v12}), IntVector{-1});
}
