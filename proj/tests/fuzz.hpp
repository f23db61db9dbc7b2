#pragma once

#include "nilp/sequence.hpp"

#include <random>

namespace nilp::fuzz {

// Random applicable sequence: free expansions, free reductions and relator
// applications of any split that matches the current word.
inline PSequence random_sequence(const PresentationPtr &p, std::mt19937_64 &rng, std::size_t start_len,
                                 std::size_t moves)
{
	const int gens = p->generator_count();
	PSequence s{p, {}, {}};
	for (std::size_t i = 0; i < start_len; ++i)
		s.initial.push_back(Letter(static_cast<int>(rng() % gens), rng() % 2 ? 1 : -1));
	Word w = s.initial;
	for (std::size_t k = 0; k < moves; ++k)
	{
		const unsigned kind = rng() % 3;
		Move m;
		if (kind == 0 || w.size() < 2)
			m = FreeExpansion{static_cast<uint32_t>(rng() % (w.size() + 1)),
			                  Letter(static_cast<int>(rng() % gens), rng() % 2 ? 1 : -1)};
		else if (kind == 1)
		{
			std::vector<uint32_t> spots;
			for (std::size_t i = 0; i + 1 < w.size(); ++i)
				if (w[i + 1] == w[i].inverse())
					spots.push_back(static_cast<uint32_t>(i));
			if (spots.empty())
			{
				--k;
				continue;
			}
			m = FreeReduction{spots[rng() % spots.size()]};
		}
		else
		{
			const uint32_t pos = static_cast<uint32_t>(rng() % (w.size() + 1));
			std::vector<RelatorApplication> cands, inserts;
			for (uint32_t id = 0; id < p->relators().size(); ++id)
			{
				const std::size_t L = p->relator(id).size();
				for (uint16_t shift = 0; shift < L; ++shift)
					for (bool invd : {false, true})
					{
						const Word r = rotate(invd ? p->inverse_relator(id) : p->relator(id), shift);
						for (uint16_t split = 0; split <= L && pos + split <= w.size(); ++split)
						{
							if (split > 0 && r[split - 1] != w[pos + split - 1])
								break;
							(split == 0 ? inserts : cands).push_back({pos, id, shift, split, invd});
						}
					}
			}
			if (cands.empty() || rng() % 2)
				m = inserts[rng() % inserts.size()];
			else
				m = cands[rng() % cands.size()];
		}
		apply_move_in_place(w, m, *p);
		s.moves.push_back(m);
	}
	return s;
}

} // namespace nilp::fuzz
