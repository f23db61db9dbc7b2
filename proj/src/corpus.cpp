#include "nilp/filler.hpp"

#include <optional>
#include <random>

namespace nilp {

namespace {

std::vector<int> weight_one(const Presentation &p)
{
	std::vector<int> out;
	for (int g = 0; g < p.generator_count(); ++g)
		if (p.weight(g) == 1)
			out.push_back(g);
	return out;
}

// [x^k, y^k] g^-k^2 for g = [x, y], when the class is 2
std::optional<Word> commutator_power(const Presentation &p, const std::vector<int> &ones, std::size_t k)
{
	if (p.nilpotency_class() != 2 || ones.size() < 2)
		return std::nullopt;
	const int g = p.find_generator("g1_2");
	if (g < 0)
		return std::nullopt;
	const long long kk = static_cast<long long>(k);
	Word w = commutator(letter_power(gen(ones[0]), kk), letter_power(gen(ones[1]), kk));
	append(w, letter_power(gen(g), -kk * kk));
	return w;
}

} // namespace

std::vector<Word> corpus_generate(const Presentation &p, std::size_t n, std::size_t count, uint64_t seed)
{
	if (n < 1)
		throw std::invalid_argument("corpus length bound must be at least 1");
	std::vector<Word> out;
	out.reserve(count);
	if (count == 0)
		return out;
	std::mt19937_64 rng(seed);
	const std::vector<int> ones = weight_one(p);
	std::vector<std::size_t> short_rels;
	for (std::size_t id = 0; id < p.relators().size(); ++id)
		if (p.relator(id).size() <= n)
			short_rels.push_back(id);

	std::size_t kmax = 0;
	while (commutator_power(p, ones, kmax + 1) && commutator_power(p, ones, kmax + 1)->size() <= n)
		++kmax;

	Oracle oracle(p, p.nilpotency_class());
	while (out.size() < count)
	{
		Word w;
		if (kmax > 0 && rng() % 4 == 0)
			w = *commutator_power(p, ones, 1 + rng() % kmax);
		else if (!short_rels.empty())
		{
			const std::size_t factors = 1 + rng() % 4;
			for (std::size_t f = 0; f < factors; ++f)
			{
				Word r = p.relator(short_rels[rng() % short_rels.size()]);
				if (rng() % 2)
					r = inverse_word(r);
				r = rotate(r, rng() % r.size());
				Word u;
				const std::size_t ulen = rng() % 4;
				for (std::size_t i = 0; i < ulen; ++i)
					u.push_back(Letter(ones[rng() % ones.size()], rng() % 2 ? 1 : -1));
				Word factor = u;
				append(factor, r);
				append(factor, inverse_word(u));
				Word next = free_reduce(concat(w, factor));
				if (next.size() > n)
					break;
				w = std::move(next);
			}
		}
		if (!oracle.is_identity(w))
			throw std::logic_error("generated corpus word is not null-homotopic");
		out.push_back(std::move(w));
	}
	return out;
}

} // namespace nilp
