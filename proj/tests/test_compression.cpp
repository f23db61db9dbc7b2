#include "nilp/compression.hpp"
#include "nilp/oracle.hpp"

#include <gtest/gtest.h>

using namespace nilp;

namespace {

PresentationPtr chain(int c)
{
	return std::make_shared<const Presentation>(build_chain_presentation(c, 1));
}

} // namespace

TEST(Digits, Expansions)
{
	EXPECT_EQ(digits(0, 3, 2).digits, (std::vector<uint64_t>{0, 0}));
	EXPECT_EQ(digits(26, 3, 3).digits, (std::vector<uint64_t>{2, 2, 2}));
	EXPECT_EQ(digits(5, 2, 3).digits, (std::vector<uint64_t>{1, 0, 1}));
	EXPECT_THROW(digits(8, 2, 3), OutOfRange);
	EXPECT_EQ(power_of(10, 3), 1000u);
	EXPECT_THROW(power_of(1ull << 32, 3), OutOfRange);
}

TEST(CompressionWord, KnownForms)
{
	auto p = chain(2);
	const CommutatorSpec s1 = chain_spec(1);
	EXPECT_EQ(compression_word(s1, 3, 2), (Word{gen(0), gen(0)}));
	const CommutatorSpec s2 = chain_spec(2);
	EXPECT_EQ(format_word(compression_word(s2, 2, 4), *p), "x1^-2 x2^-2 x1^2 x2^2");
	EXPECT_EQ(format_word(compression_word(s2, 2, 3), *p), "x1^-1 x2^-1 x1 x2 x1^-2 x2^-1 x1^2 x2");
	EXPECT_TRUE(free_reduce(compression_word(s2, 2, 0)).empty());
	EXPECT_THROW(compression_word(s2, 2, 5), OutOfRange);
}

TEST(CompressionWord, EqualsPowerOfCommutator)
{
	for (int c = 1; c <= 3; ++c)
	{
		auto p = chain(c);
		Oracle o(*p, c);
		const CommutatorSpec spec = chain_spec(c);
		const Word z = z_word(spec, 1);
		for (uint64_t n = 2; n <= 4; ++n)
			for (uint64_t s = 0; s <= power_of(n, c); ++s)
			{
				Word w = compression_word(spec, n, s);
				append(w, power(z, -static_cast<long long>(s)));
				ASSERT_TRUE(o.is_identity(w)) << c << " " << n << " " << s;
			}
	}
}

TEST(Increment, NoCarryIsLiteral)
{
	auto p = chain(2);
	Compressor comp(chain_spec(2), 2, p);
	PSequence s0 = comp.increment_sequence(0);
	EXPECT_EQ(replay(s0).metrics.area, 0u);
	Compressor comp3(chain_spec(2), 3, p);
	EXPECT_TRUE(comp3.increment(0).empty());
	EXPECT_TRUE(comp3.increment(1).empty());
}

TEST(Increment, FrozenAreas)
{
	auto p = chain(2);
	const std::vector<std::pair<uint64_t, std::vector<std::size_t>>> expect{
	    {2, {0, 11, 0, 13}},
	    {3, {0, 0, 21, 0, 0, 24, 0, 0, 27}},
	    {4, {0, 0, 0, 34, 0, 0, 0, 38, 0, 0, 0, 42, 0, 0, 0, 46}},
	};
	for (const auto &[n, areas] : expect)
	{
		Compressor comp(chain_spec(2), n, p);
		for (uint64_t s = 0; s < comp.block(); ++s)
		{
			PSequence seq = comp.increment_sequence(s);
			ReplayResult r = replay(seq);
			EXPECT_EQ(r.metrics.area, areas[s]) << n << " " << s;
			EXPECT_EQ(r.final_word, comp.word(s + 1));
			Word start = comp.z();
			append(start, comp.word(s));
			EXPECT_EQ(seq.initial, start);
		}
	}
}

TEST(Increment, ClassThreeEndpoints)
{
	auto p = chain(3);
	Oracle o(*p, 3);
	Compressor comp(chain_spec(3), 3, p);
	for (uint64_t s = 0; s < comp.block(); ++s)
	{
		PSequence seq = comp.increment_sequence(s);
		ReplayResult r = replay(seq);
		ASSERT_EQ(r.final_word, comp.word(s + 1)) << s;
		Word both = seq.initial;
		append(both, inverse_word(r.final_word));
		ASSERT_TRUE(o.is_identity(both));
	}
}

TEST(Transport, CentralWordPastLetter)
{
	auto p = chain(2);
	const Word z = z_word(chain_spec(2), 1);
	for (Letter a : {gen(0), inv(0), gen(1), inv(1)})
	{
		PSequence left = transport_central(z, a, Direction::Left, p);
		ReplayResult r = replay(left);
		Word expect = z;
		expect.push_back(a);
		EXPECT_EQ(r.final_word, expect);
		EXPECT_EQ(r.metrics.area, 1u);
		PSequence right = transport_central(z, a, Direction::Right, p);
		EXPECT_EQ(right.initial, expect);
		EXPECT_EQ(replay(right).metrics.area, 1u);
	}
}

TEST(PowerCompression, FrozenAreas)
{
	const std::vector<std::tuple<int, uint64_t, std::size_t>> expect{
	    {1, 3, 0}, {2, 2, 24}, {2, 3, 72}, {2, 10, 2200}, {3, 2, 778}, {3, 3, 2997}, {3, 4, 8184},
	};
	for (const auto &[c, n, area] : expect)
	{
		auto p = chain(c);
		Compressor comp(chain_spec(c), n, p);
		PowerCompression pc = comp.power_compression();
		ReplayResult r = replay(pc.sequence);
		EXPECT_EQ(r.metrics.area, area) << c << " " << n;
		EXPECT_EQ(r.metrics, pc.metrics);
		EXPECT_EQ(pc.sequence.initial, power(comp.z(), static_cast<long long>(comp.block())));
		EXPECT_EQ(r.final_word, comp.word(comp.block()));
		EXPECT_LE(pc.working_fl, r.metrics.fl);
	}
}

TEST(PowerCompression, EndpointsAgreeInGroup)
{
	auto p = chain(2);
	PSequence s = power_compression_sequence(chain_spec(2), 2, p);
	Word both = s.initial;
	append(both, inverse_word(replay(s).final_word));
	EXPECT_TRUE(is_identity(both, *p, 2));
	EXPECT_EQ(format_word(replay(s).final_word, *p), "x1^-2 x2^-2 x1^2 x2^2");
}

TEST(Extended, Words)
{
	auto p = chain(2);
	Compressor comp(chain_spec(2), 2, p);
	EXPECT_TRUE(comp.extended_word(0).empty());
	EXPECT_EQ(comp.extended_word(4), comp.word(4));
	Word six = comp.word(2);
	append(six, comp.word(4));
	EXPECT_EQ(comp.extended_word(6), six);
	EXPECT_TRUE(is_identity(concat(six, power(comp.z(), -6)), *p, 2));
	for (uint64_t q = 0; q < 12; ++q)
		EXPECT_EQ(comp.extended_length(q), comp.extended_word(q).size());
}

TEST(Extended, Sequences)
{
	auto p = chain(2);
	for (uint64_t q : {0u, 1u, 5u, 9u})
	{
		ExtendedCompression ec = extended_compression(chain_spec(2), 2, q, p);
		PSequence s = ec.sequence;
		EXPECT_EQ(s.initial, power(z_word(chain_spec(2), 1), static_cast<long long>(q)));
		EXPECT_EQ(free_reduce(replay(s).final_word), free_reduce(ec.word));
	}
}

TEST(Extended, IncrementMovesAndMirror)
{
	auto p = chain(2);
	Compressor comp(chain_spec(2), 3, p);
	for (uint64_t q = 0; q < 20; ++q)
	{
		Word w = comp.z();
		append(w, comp.extended_word(q));
		PSequence fwd{p, w, comp.extended_increment_moves(q)};
		ASSERT_EQ(replay(fwd).final_word, comp.extended_word(q + 1)) << q;

		Word v = inverse_word(comp.extended_word(q));
		append(v, inverse_word(comp.z()));
		const uint64_t a = q % comp.block();
		const std::size_t head = comp.extended_length(q) - (a != 0 ? comp.word_length(a) : 0);
		SequenceBuilder b(p, v);
		b.append_moves(comp.inverse_extended_increment_moves(q), head);
		ASSERT_EQ(b.word(), inverse_word(comp.extended_word(q + 1))) << q;
	}
}

TEST(Compressor, MissingRelators)
{
	auto bare = std::make_shared<const Presentation>(
	    std::vector<Generator>{{"x1", 1}, {"x2", 1}}, std::vector<Word>{}, 2);
	EXPECT_THROW(Compressor(chain_spec(2), 2, bare), NoTransportRelator);
}
