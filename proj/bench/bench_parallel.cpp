#include "nilp/parallel.hpp"

#include <benchmark/benchmark.h>

using namespace nilp;

namespace {

const std::vector<Word> &corpus(int c)
{
	static std::vector<Word> words[4];
	if (words[c].empty())
		words[c] = corpus_generate(build_filler_presentation(c, 2), c == 3 ? 16 : 40, 200, 11);
	return words[c];
}

void BM_FillSerial(benchmark::State &state)
{
	const int c = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(fill_corpus_serial(c, 2, corpus(c)));
}

void BM_FillParallel(benchmark::State &state)
{
	const int c = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(fill_corpus(c, 2, corpus(c)));
}

std::vector<PSequence> sequences(int c)
{
	std::vector<PSequence> out;
	for (FillResult &r : fill_corpus(c, 2, corpus(c)))
		out.push_back(std::move(r.sequence));
	return out;
}

void BM_ValidateSerial(benchmark::State &state)
{
	auto seqs = sequences(static_cast<int>(state.range(0)));
	for (auto _ : state)
		benchmark::DoNotOptimize(validate_all_serial(seqs));
}

void BM_ValidateParallel(benchmark::State &state)
{
	auto seqs = sequences(static_cast<int>(state.range(0)));
	for (auto _ : state)
		benchmark::DoNotOptimize(validate_all(seqs));
}

} // namespace

BENCHMARK(BM_FillSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FillParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
