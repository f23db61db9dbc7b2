#include "nilp/parallel.hpp"

#include <exception>

namespace nilp {

namespace {

std::string validation_error(const PSequence &s)
{
	try
	{
		validate_null(s);
		return {};
	}
	catch (const std::exception &e)
	{
		return e.what();
	}
}

} // namespace

std::vector<FillResult> fill_corpus(int c, int m, const std::vector<Word> &words)
{
	std::vector<FillResult> out(words.size());
	std::exception_ptr error;
#pragma omp parallel
	{
		Filler filler(c, m);
#pragma omp for schedule(dynamic)
		for (std::size_t i = 0; i < words.size(); ++i)
		{
			try
			{
				out[i] = filler.fill(words[i]);
			}
			catch (...)
			{
#pragma omp critical
				if (!error)
					error = std::current_exception();
			}
		}
	}
	if (error)
		std::rethrow_exception(error);
	return out;
}

std::vector<FillResult> fill_corpus_serial(int c, int m, const std::vector<Word> &words)
{
	Filler filler(c, m);
	std::vector<FillResult> out;
	out.reserve(words.size());
	for (const Word &w : words)
		out.push_back(filler.fill(w));
	return out;
}

std::vector<std::string> validate_all(const std::vector<PSequence> &sequences)
{
	std::vector<std::string> out(sequences.size());
#pragma omp parallel for schedule(dynamic)
	for (std::size_t i = 0; i < sequences.size(); ++i)
		out[i] = validation_error(sequences[i]);
	return out;
}

std::vector<std::string> validate_all_serial(const std::vector<PSequence> &sequences)
{
	std::vector<std::string> out;
	out.reserve(sequences.size());
	for (const PSequence &s : sequences)
		out.push_back(validation_error(s));
	return out;
}

} // namespace nilp
