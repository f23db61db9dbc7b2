#include "nilp/filler.hpp"
#include "nilp/oracle.hpp"
#include "nilp/parallel.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nilp;

namespace {

Filler &filler(int c)
{
	static Filler f1(1, 2), f2(2, 2), f3(3, 2);
	return c == 1 ? f1 : c == 2 ? f2 : f3;
}

Word commutator_power(const Presentation &p, long long k)
{
	Word w = commutator(letter_power(gen(0), k), letter_power(gen(1), k));
	append(w, letter_power(gen(p.find_generator("g1_2")), -k * k));
	return w;
}

} // namespace

TEST(Basis, ClassTwoRewriting)
{
	Presentation p = build_filler_presentation(2, 2);
	BasisSelection b = select_basis(p);
	const int g11 = p.find_generator("g1_1"), g12 = p.find_generator("g1_2");
	const int g21 = p.find_generator("g2_1"), g22 = p.find_generator("g2_2");
	EXPECT_EQ(b.basis, std::vector<int>{g12});
	EXPECT_EQ(b.rewrite.at(g21), Word{inv(g12)});
	EXPECT_TRUE(b.rewrite.at(g11).empty());
	EXPECT_TRUE(b.rewrite.at(g22).empty());
}

TEST(Basis, ClassThreeRank)
{
	const BasisSelection &b = filler(3).basis(3);
	EXPECT_EQ(b.basis.size(), 2u);
	EXPECT_EQ(b.basis.size() + b.others.size(), 8u);
	const Presentation &p = *filler(3).presentation(3);
	Oracle o(p, 3);
	for (const auto &[g, w] : b.rewrite)
		EXPECT_TRUE(o.is_identity(concat(Word{gen(g)}, inverse_word(w)))) << p.generator_name(g);
}

TEST(Basis, SelectionOnAbelianLevel)
{
	BasisSelection b = select_basis(build_filler_presentation(1, 3));
	EXPECT_EQ(b.basis, (std::vector<int>{0, 1, 2}));
	EXPECT_TRUE(b.others.empty());
}

TEST(Project, DeletesTopLetters)
{
	const Presentation &p = *filler(2).presentation(2);
	const Word a{gen(0), inv(1), gen(0)};
	EXPECT_EQ(project_word(a, p), a);
	const int g12 = p.find_generator("g1_2");
	EXPECT_TRUE(project_word(letter_power(gen(g12), 5), p).empty());
	EXPECT_EQ(project_word(commutator_power(p, 3), p), commutator(letter_power(gen(0), 3), letter_power(gen(1), 3)));
}

TEST(Lifts, RelatorsOfLowerClass)
{
	for (int c = 2; c <= 3; ++c)
	{
		const Presentation &hi = *filler(c).presentation(c);
		const Presentation &lo = *filler(c).presentation(c - 1);
		for (uint32_t id = 0; id < lo.relators().size(); ++id)
		{
			const Word &lifted = hi.relator(filler(c).lift_id(c, id));
			ASSERT_EQ(project_word(lifted, hi), lo.relator(id));
		}
	}
}

TEST(Fill, EmptyWord)
{
	for (int c = 1; c <= 3; ++c)
	{
		FillResult r = filler(c).fill({});
		EXPECT_TRUE(r.sequence.moves.empty());
		EXPECT_EQ(r.metrics.area, 0u);
	}
}

TEST(Fill, RejectsNonNullWords)
{
	EXPECT_THROW(filler(2).fill(commutator(Word{gen(0)}, Word{gen(1)})), NotNullHomotopic);
	EXPECT_THROW(filler(1).fill(Word{gen(0)}), NotNullHomotopic);
	EXPECT_THROW(filler(3).fill(Word{gen(0), gen(1), inv(0)}), NotNullHomotopic);
}

TEST(Fill, AbelianBase)
{
	const Presentation &p = *filler(1).presentation(1);
	for (const Word &w : corpus_generate(p, 30, 100, 9))
	{
		FillResult r = filler(1).fill(w);
		Metrics m = validate_null(r.sequence);
		EXPECT_LE(m.area, w.size() * w.size());
		EXPECT_LE(m.fl, w.size());
	}
}

TEST(Fill, EverySingleRelator)
{
	for (int c = 2; c <= 3; ++c)
	{
		const Presentation &p = *filler(c).presentation(c);
		for (uint32_t id = 0; id < p.relators().size(); ++id)
		{
			FillResult r = filler(c).fill(p.relator(id));
			ASSERT_NO_THROW(validate_null(r.sequence)) << c << " " << id;
			for (const LevelStats &lv : r.levels)
				EXPECT_LE(lv.max_register, 2 * lv.max_weight_letters * lv.recursive_area);
		}
	}
}

TEST(Fill, CommutatorPowerFamily)
{
	const Presentation &p = *filler(2).presentation(2);
	// frozen (area, fl) for k = 2..6
	const std::vector<std::pair<std::size_t, std::size_t>> expect{{60, 90}, {189, 168}, {432, 270}, {825, 396}, {1404, 546}};
	for (long long k = 2; k <= 10; ++k)
	{
		Word w = commutator_power(p, k);
		FillResult r = filler(2).fill(w);
		Metrics m = validate_null(r.sequence);
		const double l = static_cast<double>(w.size());
		EXPECT_LE(static_cast<double>(m.area), 0.05 * l * l * l);
		EXPECT_LE(static_cast<double>(m.fl), 12 * l);
		EXPECT_EQ(r.levels.front().max_register, static_cast<uint64_t>(k * k));
		if (k <= 6)
		{
			EXPECT_EQ(m.area, expect[static_cast<std::size_t>(k - 2)].first);
			EXPECT_EQ(m.fl, expect[static_cast<std::size_t>(k - 2)].second);
		}
	}
}

TEST(Fill, LevelStatsShape)
{
	const Presentation &p = *filler(3).presentation(3);
	Word w = corpus_generate(p, 16, 1, 5).front();
	FillResult r = filler(3).fill(w);
	ASSERT_EQ(r.levels.size(), 3u);
	EXPECT_EQ(r.levels[0].c, 3);
	EXPECT_EQ(r.levels[2].c, 1);
	EXPECT_EQ(r.levels[0].word_length, w.size());
	EXPECT_EQ(r.metrics, validate_null(r.sequence));
}

TEST(Fill, FreeFunctionMatchesFiller)
{
	auto p = filler(2).presentation(2);
	Word w = commutator_power(*p, 3);
	EXPECT_EQ(fill(w, p).sequence.moves, filler(2).fill(w).sequence.moves);
}

TEST(Corpus, Contract)
{
	const Presentation &p = *filler(2).presentation(2);
	EXPECT_TRUE(corpus_generate(p, 10, 0, 1).empty());
	auto a = corpus_generate(p, 24, 50, 42), b = corpus_generate(p, 24, 50, 42);
	EXPECT_EQ(a, b);
	Oracle o(p, 2);
	for (const Word &w : a)
	{
		EXPECT_LE(w.size(), 24u);
		EXPECT_TRUE(is_freely_reduced(w));
		EXPECT_TRUE(o.is_identity(w));
	}
	EXPECT_NE(a, corpus_generate(p, 24, 50, 43));
}

TEST(Certificate, Conventions)
{
	AflCertificate empty = certify_afl_pair({{0, Metrics{}}}, 2);
	EXPECT_EQ(empty.lambda, 0);
	EXPECT_EQ(empty.count, 0u);
	AflCertificate c = certify_afl_pair({{2, Metrics{16, 4, 20, 0}}, {4, Metrics{8, 20, 30, 0}}}, 2);
	EXPECT_DOUBLE_EQ(c.lambda_area, 2.0);
	EXPECT_DOUBLE_EQ(c.lambda_fl, 5.0);
	EXPECT_DOUBLE_EQ(c.lambda, 5.0);
	EXPECT_EQ(c.worst_area_index, 0u);
	EXPECT_EQ(c.worst_fl_index, 1u);
}

TEST(Parallel, MatchesSerial)
{
	const Presentation &p = *filler(3).presentation(3);
	auto words = corpus_generate(p, 16, 40, 6);
	auto par = fill_corpus(3, 2, words), ser = fill_corpus_serial(3, 2, words);
	ASSERT_EQ(par.size(), ser.size());
	std::vector<PSequence> seqs;
	for (std::size_t i = 0; i < par.size(); ++i)
	{
		EXPECT_EQ(par[i].sequence.moves, ser[i].sequence.moves);
		EXPECT_EQ(par[i].metrics, ser[i].metrics);
		seqs.push_back(par[i].sequence);
	}
	auto v1 = validate_all(seqs), v2 = validate_all_serial(seqs);
	EXPECT_EQ(v1, v2);
	for (const std::string &e : v1)
		EXPECT_TRUE(e.empty()) << e;
}

TEST(Parallel, PropagatesErrors)
{
	std::vector<Word> words{Word{}, Word{gen(0)}};
	EXPECT_THROW(fill_corpus(2, 2, words), NotNullHomotopic);
}
