#include "nilp/compression.hpp"

#include <functional>
#include <limits>

namespace nilp {

CommutatorSpec chain_spec(int c)
{
	CommutatorSpec spec;
	for (int i = 0; i < c; ++i)
		spec.chain.push_back(gen(i));
	return spec;
}

Word z_word(const CommutatorSpec &spec, int k)
{
	if (k < 1 || k > spec.c())
		throw OutOfRange("z_k needs 1 <= k <= c");
	return nested_commutator(std::span<const Letter>(spec.chain).subspan(static_cast<std::size_t>(k - 1)));
}

uint64_t power_of(uint64_t n, int c)
{
	uint64_t r = 1;
	for (int i = 0; i < c; ++i)
	{
		if (r > std::numeric_limits<uint64_t>::max() / n)
			throw OutOfRange("n^c overflows");
		r *= n;
	}
	return r;
}

DigitExpansion digits(uint64_t s, uint64_t n, int c)
{
	if (n < 2)
		throw OutOfRange("base must be at least 2");
	if (c < 1)
		throw OutOfRange("class must be positive");
	if (s >= power_of(n, c))
		throw OutOfRange("s must be below n^c");
	DigitExpansion d;
	d.n = n;
	d.value = s;
	for (int i = 0; i < c; ++i)
	{
		d.digits.push_back(s % n);
		s /= n;
	}
	return d;
}

PSequence transport_central(const Word &w, Letter a, Direction direction, const PresentationPtr &p)
{
	Word initial;
	Word target;
	if (direction == Direction::Left)
	{
		initial.push_back(a);
		append(initial, w);
		target = w;
		target.push_back(a);
	}
	else
	{
		initial = w;
		initial.push_back(a);
		target.push_back(a);
		append(target, w);
	}
	Word cyc = initial;
	append(cyc, inverse_word(target));
	auto match = p->index().find(cyc);
	if (!match)
		throw NoTransportRelator("no relator moves " + format_word(w, *p) + " past " + format_letter(a, *p));
	RelatorApplication ra;
	ra.relator_id = match->relator_id;
	ra.shift = static_cast<uint16_t>(match->shift);
	ra.inverted = match->inverted;
	ra.split = static_cast<uint16_t>(initial.size());
	PSequence out{p, initial, {ra}};
	replay(out);
	return out;
}

Compressor::Compressor(CommutatorSpec spec, uint64_t n, PresentationPtr p) : spec_(std::move(spec)), n_(n)
{
	const int c = spec_.c();
	if (c < 1)
		throw OutOfRange("spec needs at least one letter");
	if (n < 2)
		throw OutOfRange("base must be at least 2");
	block_ = power_of(n, c);
	for (Letter l : spec_.chain)
		if (l.generator() >= p->generator_count())
			throw std::invalid_argument("spec letter outside presentation");
	levels_.resize(static_cast<std::size_t>(c));
	for (int i = 0; i < c; ++i)
	{
		Level &lv = levels_[static_cast<std::size_t>(i)];
		lv.letters.assign(spec_.chain.begin() + i, spec_.chain.end());
		lv.z = nested_commutator(std::span<const Letter>(lv.letters));
		lv.block = power_of(n, c - i);
		if (i == 0)
			lv.presentation = p;
		else
		{
			std::vector<int> ids;
			for (Letter l : lv.letters)
				ids.push_back(l.generator());
			lv.presentation = std::make_shared<const Presentation>(
			    build_commutator_presentation(p->generators(), ids, c - i + 1, c - i));
		}
		if (lv.letters.size() >= 2)
		{
			for (Letter y : lv.letters)
				for (Letter s : {y, y.inverse()})
				{
					Word t{s};
					append(t, inverse_word(lv.z));
					t.push_back(s.inverse());
					append(t, lv.z);
					if (!lv.presentation->index().find(t))
						throw NoTransportRelator("presentation lacks the commutator of " +
						                         format_letter(s, *p) + " with z");
				}
		}
	}
}

Word Compressor::level_word(std::size_t level, uint64_t s) const
{
	const Level &lv = levels_[level];
	if (lv.letters.size() == 1)
		return letter_power(lv.letters[0], static_cast<long long>(s));
	Word w = power(lv.z, static_cast<long long>(s % n_));
	Word an = letter_power(lv.letters[0], static_cast<long long>(n_));
	append(w, commutator(an, level_word(level + 1, s / n_)));
	return w;
}

Word Compressor::word(uint64_t s) const
{
	if (s > block_)
		throw OutOfRange("s must be at most n^c");
	return level_word(0, s);
}

Word Compressor::extended_word(uint64_t q) const
{
	Word w;
	if (q % block_ != 0)
		w = word(q % block_);
	Word full = word(block_);
	for (uint64_t b = 0; b < q / block_; ++b)
		append(w, full);
	return w;
}

const std::vector<Move> &Compressor::increment(uint64_t s)
{
	if (s >= block_)
		throw OutOfRange("s must be below n^c");
	return level_increment(0, s);
}

PSequence Compressor::increment_sequence(uint64_t s)
{
	const std::vector<Move> &moves = increment(s);
	Word initial = z();
	append(initial, word(s));
	return PSequence{presentation(), std::move(initial), moves};
}

const std::vector<Move> &Compressor::level_increment(std::size_t level, uint64_t s)
{
	Level &lv = levels_[level];
	if (lv.letters.size() == 1 || s % n_ + 1 < n_)
		return empty_;
	auto it = lv.raw.find(s);
	if (it == lv.raw.end())
		it = lv.raw.emplace(s, std::make_shared<const std::vector<Move>>(build_increment(level, s))).first;
	return *it->second;
}

const PSequence &Compressor::normalized_increment(std::size_t level, uint64_t s)
{
	Level &lv = levels_[level];
	auto it = lv.normalized.find(s);
	if (it == lv.normalized.end())
	{
		Word initial = lv.z;
		append(initial, level_word(level, s));
		PSequence raw{lv.presentation, std::move(initial), level_increment(level, s)};
		it = lv.normalized.emplace(s, std::make_shared<const PSequence>(normalize_insertions(raw))).first;
	}
	return *it->second;
}

std::vector<Move> Compressor::build_increment(std::size_t level, uint64_t s)
{
	const Level &lv = levels_[level];
	const std::size_t n = n_;
	const uint64_t t = s / n_;
	const Letter a = lv.letters[0];
	const Word &z = lv.z;
	const Word &z2 = levels_[level + 1].z;
	const Word wt = level_word(level + 1, t);
	const std::size_t lz = z.size();
	const std::size_t lz2 = z2.size();
	const std::size_t lw = wt.size();

	Word initial = power(z, static_cast<long long>(n));
	append(initial, commutator(letter_power(a, static_cast<long long>(n)), wt));
	SequenceBuilder b(lv.presentation, initial);

	// z^n a^-n Wt^-1 | z2^-1 z2 | a^n Wt
	b.insert_trivial(n * lz + n + lw, inverse_word(z2));

	// commute z2 past each a, releasing one z^-1 per letter and cancelling
	// it against the z-prefix
	Word az2{a};
	append(az2, z2);
	for (std::size_t it = 0; it < n; ++it)
	{
		const std::size_t prefix = (n - it) * lz;
		const std::size_t p = prefix + n + lw + lz2 + it;
		b.insert_trivial(p, az2);
		std::size_t q = p + 1 + lz2;
		while (q > prefix)
		{
			b.swap_blocks(q - 1, 1, lz);
			--q;
		}
		b.reduce_at_boundary(prefix, lz);
	}

	// a^-n L a^n R with L = R^-1 = Wt^-1 z2^-1; run the inner increment on R
	// and its mirror image on L
	const PSequence &inner = normalized_increment(level + 1, t);
	const Presentation &ip = *inner.presentation;
	const std::size_t left = n;
	std::size_t len = lz2 + lw;
	for (const Move &m : inner.moves)
	{
		const std::size_t right = 2 * n + len;
		if (const auto *fr = std::get_if<FreeReduction>(&m))
		{
			b.free_reduce_at(right + fr->pos);
			b.free_reduce_at(left + len - 2 - fr->pos);
			len -= 2;
		}
		else if (const auto *fe = std::get_if<FreeExpansion>(&m))
		{
			b.free_expand_at(right + fe->pos, fe->letter);
			b.free_expand_at(left + len - fe->pos, fe->letter);
			len += 2;
		}
		else
		{
			const auto &ra = std::get<RelatorApplication>(m);
			if (ra.split != 0)
				throw std::logic_error("inner increment not normalized");
			// inserted word is rot(Y, k) = beta alpha with Y = rho^{-sigma};
			// conjugate Y by the shorter of beta and alpha^-1
			const Word &y = ra.inverted ? ip.relator(ra.relator_id) : ip.inverse_relator(ra.relator_id);
			const std::size_t lr = y.size();
			const std::size_t k = (lr - ra.shift) % lr;
			const bool by_beta = lr - k <= k;
			Word g = by_beta ? Word(y.begin() + static_cast<std::ptrdiff_t>(k), y.end())
			                 : inverse_word(std::span<const Letter>(y).first(k));
			const std::size_t lg = g.size();
			const std::size_t q0 = left + len - ra.pos;
			b.insert_trivial(q0, g);
			const std::size_t p0 = right + 2 * lg + ra.pos;
			Word carrier = g;
			append(carrier, inverse_word(y));
			b.insert_trivial(p0, carrier);
			// p0: g Y^-1 Y g^-1; move Y^-1 to the left copy
			std::size_t q = p0 + lg;
			while (q > q0 + lg)
			{
				b.swap_blocks(q - 1, 1, lr);
				--q;
			}
			b.reduce_at_boundary(by_beta ? q0 + lg : q0 + lg + lr, lg);
			const std::size_t pg = p0 + lr - 2 * lg;
			b.reduce_at_boundary(by_beta ? pg + lg + lr : pg + lg, lg);
			len += lr;
		}
	}
	Word expected = level_word(level, s + 1);
	if (b.word() != expected)
		throw std::logic_error("increment did not reach the next compression word");
	return std::move(b).finish().moves;
}

std::size_t Compressor::level_length(std::size_t level, uint64_t s) const
{
	const Level &lv = levels_[level];
	if (lv.letters.size() == 1)
		return static_cast<std::size_t>(s);
	return static_cast<std::size_t>(s % n_) * lv.z.size() + 2 * static_cast<std::size_t>(n_) +
	       2 * level_length(level + 1, s / n_);
}

std::size_t Compressor::word_length(uint64_t s) const
{
	if (s > block_)
		throw OutOfRange("s must be at most n^c");
	return level_length(0, s);
}

std::size_t Compressor::extended_length(uint64_t q) const
{
	std::size_t len = q % block_ != 0 ? word_length(q % block_) : 0;
	return len + static_cast<std::size_t>(q / block_) * word_length(block_);
}

const std::vector<Move> &Compressor::extended_increment_moves(uint64_t q)
{
	const uint64_t a = q % block_;
	auto it = extended_.find(a);
	if (it != extended_.end())
		return *it->second;
	std::vector<Move> moves;
	if (a == 0)
		for (const Move &m : expansion_moves(word(0)))
			moves.push_back(shifted(m, z().size()));
	const std::vector<Move> &inc = increment(a);
	moves.insert(moves.end(), inc.begin(), inc.end());
	return *extended_.emplace(a, std::make_shared<const std::vector<Move>>(std::move(moves))).first->second;
}

const std::vector<Move> &Compressor::inverse_extended_increment_moves(uint64_t q)
{
	const uint64_t a = q % block_;
	auto it = inverse_extended_.find(a);
	if (it != inverse_extended_.end())
		return *it->second;
	Word initial = z();
	if (a != 0)
		append(initial, word(a));
	PSequence fwd{presentation(), std::move(initial), extended_increment_moves(q)};
	PSequence inv = invert_sequence(fwd);
	return *inverse_extended_.emplace(a, std::make_shared<const std::vector<Move>>(std::move(inv.moves)))
	            .first->second;
}

void Compressor::apply_extended_increment(SequenceBuilder &b, std::size_t offset, uint64_t q)
{
	b.append_moves(extended_increment_moves(q), offset);
}

PowerCompression Compressor::power_compression()
{
	const std::size_t lz = z().size();
	SequenceBuilder b(presentation(), power(z(), static_cast<long long>(block_)));
	PowerCompression out;
	for (uint64_t s = 0; s < block_; ++s)
	{
		const std::size_t prefix = static_cast<std::size_t>(block_ - 1 - s) * lz;
		b.reset_peak();
		if (s == 0)
			b.append_moves(expansion_moves(word(0)), prefix + lz);
		b.append_moves(increment(s), prefix);
		out.working_fl = std::max(out.working_fl, b.peak() - prefix);
	}
	if (b.word() != word(block_))
		throw std::logic_error("power compression did not reach z~^{n^c}");
	out.metrics = b.metrics();
	out.sequence = std::move(b).finish();
	return out;
}

PSequence Compressor::extended_sequence(uint64_t q)
{
	const std::size_t lz = z().size();
	SequenceBuilder b(presentation(), power(z(), static_cast<long long>(q)));
	for (uint64_t s = 0; s < q; ++s)
		apply_extended_increment(b, static_cast<std::size_t>(q - 1 - s) * lz, s);
	if (b.word() != extended_word(q))
		throw std::logic_error("extended compression did not reach its word");
	return std::move(b).finish();
}

Word compression_word(const CommutatorSpec &spec, uint64_t n, uint64_t s)
{
	if (n < 2)
		throw OutOfRange("base must be at least 2");
	if (spec.c() < 1)
		throw OutOfRange("spec needs at least one letter");
	if (s > power_of(n, spec.c()))
		throw OutOfRange("s must be at most n^c");
	// mirrors Compressor::level_word without building presentations
	std::function<Word(std::size_t, uint64_t)> rec = [&](std::size_t i, uint64_t v) -> Word {
		std::span<const Letter> letters = std::span<const Letter>(spec.chain).subspan(i);
		if (letters.size() == 1)
			return letter_power(letters[0], static_cast<long long>(v));
		Word w = power(nested_commutator(letters), static_cast<long long>(v % n));
		append(w, commutator(letter_power(letters[0], static_cast<long long>(n)), rec(i + 1, v / n)));
		return w;
	};
	return rec(0, s);
}

PSequence increment_sequence(const CommutatorSpec &spec, uint64_t n, uint64_t s, const PresentationPtr &p)
{
	Compressor comp(spec, n, p);
	return comp.increment_sequence(s);
}

PSequence power_compression_sequence(const CommutatorSpec &spec, uint64_t n, const PresentationPtr &p)
{
	Compressor comp(spec, n, p);
	return comp.power_compression().sequence;
}

ExtendedCompression extended_compression(const CommutatorSpec &spec, uint64_t n, uint64_t q,
                                         const PresentationPtr &p)
{
	Compressor comp(spec, n, p);
	return ExtendedCompression{comp.extended_word(q), comp.extended_sequence(q)};
}

} // namespace nilp
