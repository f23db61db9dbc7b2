#include "nilp/sequence.hpp"

#include <algorithm>

namespace nilp {

namespace {

const Word &signed_relator(const Presentation &p, uint32_t id, bool inverted)
{
	return inverted ? p.inverse_relator(id) : p.relator(id);
}

} // namespace

Word applied_relator_word(const RelatorApplication &ra, const Presentation &p)
{
	return rotate(signed_relator(p, ra.relator_id, ra.inverted), ra.shift);
}

void apply_move_in_place(Word &w, const Move &m, const Presentation &p)
{
	if (const auto *fr = std::get_if<FreeReduction>(&m))
	{
		std::size_t pos = fr->pos;
		if (pos + 1 >= w.size())
			throw std::invalid_argument("free reduction position out of range");
		if (w[pos + 1] != w[pos].inverse())
			throw std::invalid_argument("letters at free reduction position are not inverse");
		w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
	}
	else if (const auto *fe = std::get_if<FreeExpansion>(&m))
	{
		std::size_t pos = fe->pos;
		if (pos > w.size())
			throw std::invalid_argument("free expansion position out of range");
		if (fe->letter.generator() >= p.generator_count())
			throw std::invalid_argument("free expansion letter outside presentation");
		Letter pair[2] = {fe->letter, fe->letter.inverse()};
		w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), pair, pair + 2);
	}
	else
	{
		const auto &ra = std::get<RelatorApplication>(m);
		if (ra.relator_id >= p.relators().size())
			throw std::invalid_argument("relator id out of range");
		const Word &r = signed_relator(p, ra.relator_id, ra.inverted);
		const std::size_t len = r.size();
		if (ra.shift >= len)
			throw std::invalid_argument("relator shift out of range");
		if (ra.split > len)
			throw std::invalid_argument("relator split out of range");
		const std::size_t pos = ra.pos;
		const std::size_t split = ra.split;
		if (pos + split > w.size())
			throw std::invalid_argument("relator prefix runs past the end of the word");
		for (std::size_t i = 0; i < split; ++i)
			if (w[pos + i] != r[(ra.shift + i) % len])
				throw std::invalid_argument("relator prefix does not occur at position");
		// v = inverse of the suffix r'[split..]
		Word v;
		v.reserve(len - split);
		for (std::size_t j = len; j-- > split;)
			v.push_back(r[(ra.shift + j) % len].inverse());
		auto first = w.begin() + static_cast<std::ptrdiff_t>(pos);
		if (v.size() >= split)
		{
			std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(split), first);
			w.insert(first + static_cast<std::ptrdiff_t>(split), v.begin() + static_cast<std::ptrdiff_t>(split), v.end());
		}
		else
		{
			std::copy(v.begin(), v.end(), first);
			w.erase(first + static_cast<std::ptrdiff_t>(v.size()), first + static_cast<std::ptrdiff_t>(split));
		}
	}
}

Word apply_move(const Word &w, const Move &m, const Presentation &p)
{
	Word out = w;
	apply_move_in_place(out, m, p);
	return out;
}

ReplayResult replay(const PSequence &t)
{
	return replay_visit(t, [](std::size_t, const Word &) {});
}

Metrics validate_null(const PSequence &t)
{
	ReplayResult r = replay(t);
	if (!r.final_word.empty())
		throw NotNull(r.final_word.size());
	return r.metrics;
}

PSequence normalize_insertions(const PSequence &t)
{
	replay(t);
	const Presentation &p = *t.presentation;
	PSequence out{t.presentation, t.initial, {}};
	out.moves.reserve(t.moves.size());
	for (const Move &m : t.moves)
	{
		const auto *ra = std::get_if<RelatorApplication>(&m);
		if (!ra || ra->split == 0)
		{
			out.moves.push_back(m);
			continue;
		}
		const std::size_t len = p.relator(ra->relator_id).size();
		RelatorApplication whole = *ra;
		whole.split = 0;
		if (ra->shift == 0 && ra->split < len)
		{
			// insert v u^-1 before u, then cancel u^-1 u; keeps the literal relator
			whole.shift = 0;
			out.moves.push_back(whole);
			for (std::size_t j = 0; j < ra->split; ++j)
				out.moves.push_back(FreeReduction{static_cast<uint32_t>(ra->pos + len - 1 - j)});
			continue;
		}
		// insert u^-1 v after u, then cancel u u^-1
		whole.pos = ra->pos + ra->split;
		whole.shift = static_cast<uint16_t>((ra->shift + ra->split) % len);
		out.moves.push_back(whole);
		for (std::size_t j = 0; j < ra->split; ++j)
			out.moves.push_back(FreeReduction{static_cast<uint32_t>(ra->pos + ra->split - 1 - j)});
	}
	return out;
}

PSequence invert_sequence(const PSequence &t)
{
	const Presentation &p = *t.presentation;
	PSequence out{t.presentation, inverse_word(t.initial), {}};
	out.moves.reserve(t.moves.size());
	Word w = t.initial;
	for (std::size_t i = 0; i < t.moves.size(); ++i)
	{
		const Move &m = t.moves[i];
		const std::size_t len = w.size();
		if (const auto *fr = std::get_if<FreeReduction>(&m))
		{
			if (fr->pos + 2 > len)
				throw NotApplicable(i, "free reduction position out of range");
			out.moves.push_back(FreeReduction{static_cast<uint32_t>(len - 2 - fr->pos)});
		}
		else if (const auto *fe = std::get_if<FreeExpansion>(&m))
		{
			if (fe->pos > len)
				throw NotApplicable(i, "free expansion position out of range");
			out.moves.push_back(FreeExpansion{static_cast<uint32_t>(len - fe->pos), fe->letter});
		}
		else
		{
			const auto &ra = std::get<RelatorApplication>(m);
			if (ra.relator_id >= p.relators().size())
				throw NotApplicable(i, "relator id out of range");
			const std::size_t rlen = p.relator(ra.relator_id).size();
			if (ra.pos + ra.split > len)
				throw NotApplicable(i, "relator prefix runs past the end of the word");
			RelatorApplication mirrored;
			mirrored.pos = static_cast<uint32_t>(len - ra.pos - ra.split);
			mirrored.relator_id = ra.relator_id;
			mirrored.shift = static_cast<uint16_t>((rlen - (ra.shift + ra.split) % rlen) % rlen);
			mirrored.split = ra.split;
			mirrored.inverted = !ra.inverted;
			out.moves.push_back(mirrored);
		}
		try
		{
			apply_move_in_place(w, m, p);
		}
		catch (const std::invalid_argument &e)
		{
			throw NotApplicable(i, e.what());
		}
	}
	return out;
}

PSequence concatenate(const PSequence &a, const PSequence &b)
{
	if (a.presentation.get() != b.presentation.get())
		throw EndpointMismatch("sequences use different presentations");
	ReplayResult ra = replay(a);
	if (ra.final_word != b.initial)
		throw EndpointMismatch("final word of the first sequence differs from the initial word of the second");
	PSequence out{a.presentation, a.initial, a.moves};
	out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
	return out;
}

PSequence null_closure(const PSequence &t)
{
	ReplayResult r = replay(t);
	const std::size_t len = r.final_word.size();
	PSequence out{t.presentation, t.initial, t.moves};
	append(out.initial, inverse_word(r.final_word));
	for (std::size_t j = 0; j < len; ++j)
		out.moves.push_back(FreeReduction{static_cast<uint32_t>(len - 1 - j)});
	return out;
}

std::vector<Move> expansion_moves(const Word &w)
{
	Word cur = w;
	std::vector<Move> reductions;
	std::size_t hint = 0;
	while (!cur.empty())
	{
		std::size_t i = hint > 0 ? hint - 1 : 0;
		while (i + 1 < cur.size() && cur[i + 1] != cur[i].inverse())
			++i;
		if (i + 1 >= cur.size())
			throw std::invalid_argument("word does not freely reduce to the empty word");
		reductions.push_back(FreeExpansion{static_cast<uint32_t>(i), cur[i]});
		cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.begin() + static_cast<std::ptrdiff_t>(i) + 2);
		hint = i;
	}
	std::reverse(reductions.begin(), reductions.end());
	return reductions;
}

Move shifted(const Move &m, std::size_t offset)
{
	return std::visit(
	    [offset](auto mv) -> Move {
		    mv.pos = static_cast<uint32_t>(mv.pos + offset);
		    return mv;
	    },
	    m);
}

SequenceBuilder::SequenceBuilder(PresentationPtr p, Word initial)
    : presentation_(std::move(p)), initial_(initial), word_(std::move(initial))
{
	metrics_.fl = word_.size();
	metrics_.final_length = word_.size();
	peak_ = word_.size();
}

void SequenceBuilder::push(const Move &m)
{
	try
	{
		apply_move_in_place(word_, m, *presentation_);
	}
	catch (const std::invalid_argument &e)
	{
		throw std::logic_error("builder produced an inapplicable move " + std::to_string(moves_.size()) + ": " +
		                       e.what());
	}
	moves_.push_back(m);
	if (std::holds_alternative<RelatorApplication>(m))
		++metrics_.area;
	++metrics_.height;
	metrics_.fl = std::max(metrics_.fl, word_.size());
	metrics_.final_length = word_.size();
	peak_ = std::max(peak_, word_.size());
}

void SequenceBuilder::replace(std::size_t pos, std::size_t u_len, const Word &v)
{
	if (pos + u_len > word_.size())
		throw std::logic_error("replace: range past end of word");
	Word target(word_.begin() + static_cast<std::ptrdiff_t>(pos),
	            word_.begin() + static_cast<std::ptrdiff_t>(pos + u_len));
	nilp::append(target, inverse_word(v));
	auto match = presentation_->index().find(target);
	if (!match)
		throw std::logic_error("replace: no relator realises " + format_word(target, *presentation_));
	RelatorApplication ra;
	ra.pos = static_cast<uint32_t>(pos);
	ra.relator_id = match->relator_id;
	ra.shift = static_cast<uint16_t>(match->shift);
	ra.split = static_cast<uint16_t>(u_len);
	ra.inverted = match->inverted;
	push(ra);
}

void SequenceBuilder::swap_blocks(std::size_t pos, std::size_t a_len, std::size_t b_len)
{
	if (pos + a_len + b_len > word_.size())
		throw std::logic_error("swap_blocks: range past end of word");
	auto first = word_.begin() + static_cast<std::ptrdiff_t>(pos);
	Word v(first + static_cast<std::ptrdiff_t>(a_len), first + static_cast<std::ptrdiff_t>(a_len + b_len));
	v.insert(v.end(), first, first + static_cast<std::ptrdiff_t>(a_len));
	replace(pos, a_len + b_len, v);
}

void SequenceBuilder::insert_trivial(std::size_t pos, const Word &y)
{
	for (std::size_t j = 0; j < y.size(); ++j)
		free_expand_at(pos + j, y[j]);
}

void SequenceBuilder::reduce_at_boundary(std::size_t pos, std::size_t pairs)
{
	for (std::size_t j = 0; j < pairs; ++j)
		free_reduce_at(pos - 1 - j);
}

void SequenceBuilder::append(const PSequence &fragment, std::size_t offset)
{
	if (offset + fragment.initial.size() > word_.size() ||
	    !std::equal(fragment.initial.begin(), fragment.initial.end(),
	                word_.begin() + static_cast<std::ptrdiff_t>(offset)))
		throw std::logic_error("append: fragment initial word does not occur at offset");
	append_moves(fragment.moves, offset);
}

void SequenceBuilder::append_moves(const std::vector<Move> &moves, std::size_t offset)
{
	for (const Move &m : moves)
		push(shifted(m, offset));
}

PSequence SequenceBuilder::finish() &&
{
	return PSequence{std::move(presentation_), std::move(initial_), std::move(moves_)};
}

PSequence SequenceBuilder::snapshot() const { return PSequence{presentation_, initial_, moves_}; }

} // namespace nilp
