#include "nilp/filler.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace nilp {

namespace {

Word basis_word(const std::vector<int> &basis, const IntVector &coeffs)
{
	Word w;
	for (std::size_t j = 0; j < basis.size(); ++j)
		append(w, letter_power(gen(basis[j]), coeffs[j].convert_to<long long>()));
	return w;
}

struct LiftContext {
	Oracle oracle;
	LyndonBasis lyndon;
	const BasisSelection &basis;
};

// r v^-1 with v over the basis letters cancelling the weight-c part of r
Word lift_relator(const Word &r, const LiftContext &ctx)
{
	IntVector vec = weight_exponents(r, ctx.oracle, ctx.lyndon);
	auto coeffs = solve_in_basis(vec, ctx.basis.vectors);
	if (!coeffs)
		throw UnsupportedIndex("relator lift has no integral rewriting over the basis");
	Word lifted = r;
	append(lifted, inverse_word(basis_word(ctx.basis.basis, *coeffs)));
	return lifted;
}

int count_weight1(const Presentation &p)
{
	int m = 0;
	for (const Generator &g : p.generators())
		if (g.weight == 1)
			++m;
	return m;
}

} // namespace

BasisSelection select_basis(const Presentation &p)
{
	const int c = p.nilpotency_class();
	const int m = count_weight1(p);
	Oracle oracle(p, c);
	LyndonBasis lyndon(m, c);
	BasisSelection sel;
	std::vector<std::pair<int, IntVector>> rest;
	for (int g = 0; g < p.generator_count(); ++g)
	{
		if (p.weight(g) != c)
			continue;
		IntVector vec = weight_exponents(Word{gen(g)}, oracle, lyndon);
		std::vector<IntVector> trial = sel.vectors;
		trial.push_back(vec);
		if (rational_rank(trial) > sel.vectors.size())
		{
			sel.basis.push_back(g);
			sel.vectors.push_back(std::move(vec));
		}
		else
			rest.emplace_back(g, std::move(vec));
	}
	for (auto &[g, vec] : rest)
	{
		auto coeffs = solve_in_basis(vec, sel.vectors);
		if (!coeffs)
			throw UnsupportedIndex("generator " + p.generator_name(g) +
			                       " is not an integral combination of the basis (index > 1)");
		sel.others.push_back(g);
		sel.rewrite[g] = basis_word(sel.basis, *coeffs);
	}
	return sel;
}

Presentation build_filler_presentation(int c, int m)
{
	if (c < 1 || m < 1)
		throw std::invalid_argument("filler presentation needs c >= 1 and m >= 1");
	std::vector<Generator> gens;
	std::vector<std::string> suffix;
	std::vector<std::vector<int>> by_weight(static_cast<std::size_t>(c));
	for (int i = 1; i <= m; ++i)
	{
		by_weight[0].push_back(static_cast<int>(gens.size()));
		gens.push_back({"x" + std::to_string(i), 1});
		suffix.push_back(std::to_string(i));
	}
	std::vector<Word> defs;
	for (int w = 1; w < c; ++w)
	{
		for (int a = 0; a < m; ++a)
			for (int y : by_weight[static_cast<std::size_t>(w - 1)])
			{
				int g = static_cast<int>(gens.size());
				std::string s = std::to_string(a + 1) + "_" + suffix[static_cast<std::size_t>(y)];
				gens.push_back({"g" + s, w + 1});
				suffix.push_back(s);
				by_weight[static_cast<std::size_t>(w)].push_back(g);
				defs.push_back(Word{inv(g), inv(a), inv(y), gen(a), gen(y)});
			}
	}
	std::vector<Word> rels = defs;
	for (Word &r : commutator_family(by_weight[0], c + 1))
		rels.push_back(std::move(r));
	const auto &top = by_weight[static_cast<std::size_t>(c - 1)];
	for (int x = 0; x < static_cast<int>(gens.size()); ++x)
		for (int z : top)
			for (Letter lx : {gen(x), inv(x)})
				for (Letter lz : {gen(z), inv(z)})
					rels.push_back(commutator(Word{lx}, Word{lz}));

	Presentation partial(gens, prune_relators(rels), c);
	BasisSelection sel = select_basis(partial);
	for (int a : sel.others)
	{
		Word r{gen(a)};
		append(r, inverse_word(sel.rewrite.at(a)));
		rels.push_back(std::move(r));
	}
	if (c >= 2)
	{
		Presentation lower = build_filler_presentation(c - 1, m);
		LiftContext ctx{Oracle(partial, c), LyndonBasis(m, c), sel};
		for (const Word &r : lower.relators())
			rels.push_back(lift_relator(r, ctx));
	}
	return Presentation(std::move(gens), prune_relators(std::move(rels)), c);
}

Word project_word(std::span<const Letter> w, const Presentation &p)
{
	Word out;
	out.reserve(w.size());
	const int c = p.nilpotency_class();
	for (Letter l : w)
		if (p.weight(l.generator()) != c)
			out.push_back(l);
	return out;
}

Filler::Filler(int c, int m) { init(c, m, nullptr); }

Filler::Filler(PresentationPtr top)
{
	init(top->nilpotency_class(), count_weight1(*top), top);
}

void Filler::init(int c, int m, PresentationPtr top)
{
	if (c < 1 || m < 1)
		throw std::invalid_argument("filler needs c >= 1 and m >= 1");
	m_ = m;
	levels_.resize(static_cast<std::size_t>(c));
	for (int k = 1; k <= c; ++k)
	{
		Level &lv = levels_[static_cast<std::size_t>(k - 1)];
		auto built = std::make_shared<const Presentation>(build_filler_presentation(k, m));
		if (k == c && top)
		{
			if (top->relators() != built->relators() || top->generator_count() != built->generator_count())
				throw std::invalid_argument("presentation is not the filler presentation of its class");
			lv.p = top;
		}
		else
			lv.p = built;
		const Presentation &p = *lv.p;
		lv.basis = select_basis(p);
		lv.basis_slot.assign(static_cast<std::size_t>(p.generator_count()), -1);
		for (std::size_t j = 0; j < lv.basis.basis.size(); ++j)
			lv.basis_slot[static_cast<std::size_t>(lv.basis.basis[j])] = static_cast<int>(j);
		for (const Word &r : p.relators())
			lv.M = std::max(lv.M, count_if_generator(r, [&](int g) { return p.weight(g) == k; }));
		if (k == 1)
			continue;
		for (int z : lv.basis.basis)
		{
			CommutatorSpec spec;
			int g = z;
			while (p.weight(g) > 1)
			{
				const auto &def = p.definition(g);
				spec.chain.push_back(def->first);
				g = def->second.generator();
			}
			spec.chain.push_back(gen(g));
			lv.specs.push_back(std::move(spec));
		}
		std::unordered_map<Word, uint32_t, WordHash> ids;
		for (uint32_t id = 0; id < p.relators().size(); ++id)
			ids.emplace(p.relator(id), id);
		const Presentation &lower = *levels_[static_cast<std::size_t>(k - 2)].p;
		LiftContext ctx{Oracle(p, k), LyndonBasis(m, k), lv.basis};
		for (const Word &r : lower.relators())
		{
			auto it = ids.find(lift_relator(r, ctx));
			if (it == ids.end())
				throw std::logic_error("lifted relator missing from presentation");
			lv.lift.push_back(it->second);
		}
	}
}

FillResult fill(const Word &w, const PresentationPtr &p)
{
	Filler f(p);
	return f.fill(w);
}

FillResult Filler::fill(const Word &w)
{
	const int c = nilpotency_class();
	const Presentation &p = *presentation(c);
	for (Letter l : w)
		if (l.generator() < 0 || l.generator() >= p.generator_count())
			throw std::invalid_argument("word uses a letter outside the presentation");
	if (!Oracle(p, c).is_identity(w))
		throw NotNullHomotopic("word is not the identity in the free nilpotent group of class " +
		                       std::to_string(c));
	return fill_level(c, w);
}

FillResult Filler::fill_abelian(const Word &w)
{
	SequenceBuilder b(levels_.front().p, w);
	// insertion sort by generator, cancelling inverse pairs as they meet
	std::size_t sorted = 0;
	while (sorted < b.length())
	{
		std::size_t pos = sorted;
		bool cancelled = false;
		while (pos > 0)
		{
			const Letter prev = b.word()[pos - 1];
			const Letter cur = b.word()[pos];
			if (prev == cur.inverse())
			{
				b.free_reduce_at(pos - 1);
				cancelled = true;
				break;
			}
			if (prev.generator() <= cur.generator())
				break;
			b.swap_blocks(pos - 1, 1, 1);
			--pos;
		}
		sorted = cancelled ? sorted - 1 : sorted + 1;
	}
	if (b.length() != 0)
		throw std::logic_error("abelian collection left a nonempty word");
	FillResult out;
	LevelStats st;
	st.c = 1;
	st.word_length = w.size();
	st.metrics = b.metrics();
	out.metrics = b.metrics();
	out.sequence = std::move(b).finish();
	out.levels.push_back(st);
	return out;
}

namespace {

// Replaces the letter at pos by its expansion over weight-1 letters through
// definition relators.
void expand_letter(SequenceBuilder &b, std::size_t pos)
{
	const Presentation &p = b.presentation();
	const Letter l = b.word()[pos];
	const auto &def = p.definition(l.generator());
	if (!def)
		return;
	Word v = commutator(Word{def->first}, Word{def->second});
	if (l.sign() < 0)
		v = inverse_word(v);
	b.replace(pos, 1, v);
	for (std::size_t i = 4; i-- > 0;)
		if (p.weight(b.word()[pos + i].generator()) > 1)
			expand_letter(b, pos + i);
}

} // namespace

FillResult Filler::fill_level(int c, const Word &w)
{
	if (c == 1)
		return fill_abelian(w);
	Level &lv = levels_[static_cast<std::size_t>(c - 1)];
	const Presentation &p = *lv.p;
	const Presentation &lower = *levels_[static_cast<std::size_t>(c - 2)].p;
	const uint64_t n = std::max<uint64_t>(2, w.size());
	const std::size_t k = lv.basis.basis.size();

	std::vector<Compressor> comps;
	comps.reserve(k);
	for (std::size_t j = 0; j < k; ++j)
		comps.emplace_back(lv.specs[j], n, lv.p);

	const Word wbar = project_word(w, p);
	FillResult rec = fill_level(c - 1, wbar);
	const PSequence sbar = normalize_insertions(rec.sequence);

	SequenceBuilder b(lv.p, w);
	std::vector<uint64_t> qp(k, 0), qm(k, 0);
	std::vector<std::size_t> lp(k, 0), lm(k, 0);
	std::size_t mid_len = w.size();
	uint64_t max_register = 0;

	auto left_total = [&] {
		std::size_t s = 0;
		for (std::size_t x : lm)
			s += x;
		return s;
	};
	auto is_top = [&](Letter l) { return p.weight(l.generator()) == c; };
	auto move_right = [&](std::size_t pos, std::size_t dest) {
		for (; pos < dest; ++pos)
			b.swap_blocks(pos, 1, 1);
	};
	auto move_left = [&](std::size_t pos, std::size_t dest) {
		for (; pos > dest; --pos)
			b.swap_blocks(pos - 1, 1, 1);
	};
	// the last middle letter, z_j, joins the right register j
	auto absorb_right = [&](std::size_t j) {
		std::size_t pos = left_total() + mid_len - 1;
		--mid_len;
		std::size_t dest = pos;
		for (std::size_t i = 0; i < j; ++i)
			dest += lp[i];
		move_right(pos, dest);
		expand_letter(b, dest);
		comps[j].apply_extended_increment(b, dest, qp[j]);
		++qp[j];
		lp[j] = comps[j].extended_length(qp[j]);
		max_register = std::max(max_register, qp[j]);
	};
	// the first middle letter, z_j^-1, joins the left register j
	auto absorb_left = [&](std::size_t j) {
		std::size_t pos = left_total();
		--mid_len;
		std::size_t dest = 0;
		for (std::size_t i = j; i < k; ++i)
			dest += lm[i];
		move_left(pos, dest);
		expand_letter(b, dest);
		const uint64_t a = qm[j] % comps[j].block();
		const std::size_t tail = a != 0 ? comps[j].word_length(a) : 0;
		b.append_moves(comps[j].inverse_extended_increment_moves(qm[j]), dest - tail);
		++qm[j];
		lm[j] = comps[j].extended_length(qm[j]);
		max_register = std::max(max_register, qm[j]);
	};
	auto check_middle = [&](const Word &expected) {
		const std::size_t start = left_total();
		if (mid_len != expected.size() ||
		    !std::equal(expected.begin(), expected.end(), b.word().begin() + static_cast<std::ptrdiff_t>(start)))
			throw std::logic_error("collector shape invariant violated");
	};

	// rewrite non-basis top letters over the basis
	for (std::size_t i = 0; i < mid_len;)
	{
		const Letter l = b.word()[i];
		if (is_top(l) && lv.basis_slot[static_cast<std::size_t>(l.generator())] < 0)
		{
			Word v = lv.basis.rewrite.at(l.generator());
			if (l.sign() < 0)
				v = inverse_word(v);
			b.replace(i, 1, v);
			mid_len = mid_len + v.size() - 1;
			i += v.size();
		}
		else
			++i;
	}
	// collect each basis letter at the end of the middle, cancelling pairs
	for (std::size_t j = 0; j < k; ++j)
	{
		const int g = lv.basis.basis[j];
		const std::size_t s0 = left_total();
		std::size_t block = 0;
		int block_sign = 0;
		while (true)
		{
			const std::size_t body_end = s0 + mid_len - block;
			std::size_t idx = body_end;
			for (std::size_t i = body_end; i-- > s0;)
				if (b.word()[i].generator() == g)
				{
					idx = i;
					break;
				}
			if (idx == body_end)
				break;
			move_right(idx, body_end - 1);
			const Letter l = b.word()[body_end - 1];
			if (block > 0 && l.sign() != block_sign)
			{
				b.free_reduce_at(body_end - 1);
				mid_len -= 2;
				--block;
			}
			else
			{
				++block;
				block_sign = l.sign();
			}
		}
		for (; block > 0; --block)
		{
			if (block_sign > 0)
				absorb_right(j);
			else
			{
				move_left(left_total() + mid_len - block, left_total());
				absorb_left(j);
			}
		}
	}
	check_middle(sbar.initial);

	Word current = sbar.initial;
	for (const Move &m : sbar.moves)
	{
		const std::size_t start = left_total();
		if (const auto *ra = std::get_if<RelatorApplication>(&m))
		{
			if (ra->split != 0)
				throw std::logic_error("recursive sequence not normalized");
			const uint32_t id = lv.lift.at(ra->relator_id);
			const std::size_t lr = p.relator(id).size();
			const std::size_t vlen = lr - lower.relator(ra->relator_id).size();
			RelatorApplication lifted = *ra;
			lifted.pos = static_cast<uint32_t>(start + ra->pos);
			lifted.relator_id = id;
			lifted.shift = static_cast<uint16_t>(ra->inverted ? vlen + ra->shift : ra->shift);
			b.push(lifted);
			mid_len += lr;
			while (true)
			{
				const std::size_t s0 = left_total();
				std::size_t idx = mid_len;
				for (std::size_t i = mid_len; i-- > 0;)
				{
					const Letter l = b.word()[s0 + i];
					if (is_top(l) && l.sign() > 0)
					{
						idx = i;
						break;
					}
				}
				if (idx == mid_len)
					break;
				const Letter l = b.word()[s0 + idx];
				move_right(s0 + idx, s0 + mid_len - 1);
				absorb_right(static_cast<std::size_t>(lv.basis_slot[static_cast<std::size_t>(l.generator())]));
			}
			while (true)
			{
				const std::size_t s0 = left_total();
				std::size_t idx = mid_len;
				for (std::size_t i = 0; i < mid_len; ++i)
				{
					const Letter l = b.word()[s0 + i];
					if (is_top(l))
					{
						idx = i;
						break;
					}
				}
				if (idx == mid_len)
					break;
				const Letter l = b.word()[s0 + idx];
				move_left(s0 + idx, s0);
				absorb_left(static_cast<std::size_t>(lv.basis_slot[static_cast<std::size_t>(l.generator())]));
			}
		}
		else
		{
			b.push(shifted(m, start));
			mid_len = std::holds_alternative<FreeReduction>(m) ? mid_len - 2 : mid_len + 2;
		}
		apply_move_in_place(current, m, lower);
		check_middle(current);
	}

	if (mid_len != 0 || qp != qm)
		throw std::logic_error("registers not balanced at the end of collection");
	const std::size_t half = left_total();
	b.reduce_at_boundary(half, half);
	if (b.length() != 0)
		throw std::logic_error("collected word did not reduce to the empty word");

	const std::size_t bound = 2 * lv.M * rec.metrics.area;
	if (max_register > bound)
		throw std::logic_error("register bound violated: " + std::to_string(max_register) + " > " +
		                       std::to_string(bound));

	FillResult out;
	LevelStats st;
	st.c = c;
	st.word_length = w.size();
	st.base = n;
	st.max_register = max_register;
	st.recursive_area = rec.metrics.area;
	st.max_weight_letters = lv.M;
	st.metrics = b.metrics();
	out.metrics = b.metrics();
	out.sequence = std::move(b).finish();
	out.levels.push_back(st);
	out.levels.insert(out.levels.end(), rec.levels.begin(), rec.levels.end());
	return out;
}

AflCertificate certify_afl_pair(const std::vector<std::pair<std::size_t, Metrics>> &results, int c)
{
	AflCertificate cert;
	for (std::size_t i = 0; i < results.size(); ++i)
	{
		const auto &[len, m] = results[i];
		if (len == 0)
			continue;
		++cert.count;
		const double l = static_cast<double>(len);
		double la = static_cast<double>(m.area) / std::pow(l, c + 1);
		double lf = static_cast<double>(m.fl) / l;
		if (la > cert.lambda_area)
		{
			cert.lambda_area = la;
			cert.worst_area_index = i;
		}
		if (lf > cert.lambda_fl)
		{
			cert.lambda_fl = lf;
			cert.worst_fl_index = i;
		}
	}
	cert.lambda = std::max(cert.lambda_area, cert.lambda_fl);
	return cert;
}

} // namespace nilp
