#include "nilp/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace nilp {

RelatorIndex::RelatorIndex(const std::vector<Word> &relators)
{
	for (uint32_t id = 0; id < relators.size(); ++id)
	{
		for (bool inverted : {false, true})
		{
			Word r = inverted ? inverse_word(relators[id]) : relators[id];
			if (r.empty())
				continue;
			auto offset = static_cast<uint32_t>(least_rotation(r));
			by_canonical_[rotate(r, offset)].push_back({id, offset, inverted});
		}
	}
}

std::optional<RelatorMatch> RelatorIndex::find(std::span<const Letter> target) const
{
	if (target.empty())
		return std::nullopt;
	const std::size_t len = target.size();
	std::size_t j = least_rotation(target);
	auto it = by_canonical_.find(rotate(target, j));
	if (it == by_canonical_.end())
		return std::nullopt;
	const Entry &e = it->second.front();
	// rotate(r, offset) == canon and target == rotate(canon, len - j)
	auto shift = static_cast<uint32_t>((e.offset + (len - j)) % len);
	return RelatorMatch{e.relator_id, shift, e.inverted};
}

Presentation::Presentation(std::vector<Generator> generators, std::vector<Word> relators,
                           int nilpotency_class)
    : generators_(std::move(generators)), relators_(std::move(relators)),
      class_(nilpotency_class)
{
	if (class_ < 1)
		throw std::invalid_argument("presentation class must be positive");
	for (int i = 0; i < generator_count(); ++i)
	{
		const Generator &g = generators_[i];
		if (!is_valid_generator_name(g.name))
			throw std::invalid_argument("invalid generator name '" + g.name + "'");
		if (g.weight < 1)
			throw std::invalid_argument("generator weight must be positive: " + g.name);
		if (!by_name_.emplace(g.name, i).second)
			throw std::invalid_argument("duplicate generator '" + g.name + "'");
	}
	definitions_.resize(generators_.size());
	inverse_relators_.reserve(relators_.size());
	for (const Word &r : relators_)
	{
		for (Letter l : r)
			if (l.generator() < 0 || l.generator() >= generator_count())
				throw std::invalid_argument("relator uses undeclared generator");
		max_relator_length_ = std::max(max_relator_length_, r.size());
		inverse_relators_.push_back(inverse_word(r));
		// definition relator g^-1 x^-1 y^-1 x y
		if (r.size() == 5 && r[0].sign() < 0 && weight(r[0].generator()) >= 2 &&
		    r[1].sign() < 0 && r[2].sign() < 0 && r[3] == r[1].inverse() &&
		    r[4] == r[2].inverse() && !definitions_[r[0].generator()])
		{
			definitions_[r[0].generator()] = std::make_pair(r[3], r[4]);
		}
	}
	index_ = RelatorIndex(relators_);
}

int Presentation::find_generator(const std::string &name) const
{
	auto it = by_name_.find(name);
	return it == by_name_.end() ? -1 : it->second;
}

std::vector<Word> prune_relators(std::vector<Word> relators)
{
	std::unordered_set<Word, WordHash> seen;
	std::vector<Word> out;
	out.reserve(relators.size());
	for (Word &r : relators)
	{
		if (free_reduce(r).empty())
			continue;
		if (seen.insert(r).second)
			out.push_back(std::move(r));
	}
	return out;
}

std::vector<Word> commutator_family(std::span<const int> generators, int arity)
{
	if (arity < 1)
		throw std::invalid_argument("commutator arity must be positive");
	std::vector<Letter> signed_letters;
	for (int g : generators)
	{
		signed_letters.push_back(gen(g));
		signed_letters.push_back(inv(g));
	}
	std::vector<Word> out;
	if (signed_letters.empty())
		return out;
	const std::size_t base = signed_letters.size();
	std::vector<std::size_t> digits(static_cast<std::size_t>(arity), 0);
	std::vector<Letter> tuple(static_cast<std::size_t>(arity));
	while (true)
	{
		for (std::size_t i = 0; i < digits.size(); ++i)
			tuple[i] = signed_letters[digits[i]];
		out.push_back(nested_commutator(std::span<const Letter>(tuple)));
		std::size_t pos = digits.size();
		while (pos > 0)
		{
			--pos;
			if (++digits[pos] < base)
				break;
			digits[pos] = 0;
			if (pos == 0)
				return out;
		}
	}
}

Presentation build_chain_presentation(int c, int k)
{
	if (c < 1 || k < 1 || k > c)
		throw std::invalid_argument("chain presentation needs 1 <= k <= c");
	std::vector<Generator> gens;
	std::vector<int> ids;
	for (int i = k; i <= c; ++i)
	{
		gens.push_back({"x" + std::to_string(i), 1});
		ids.push_back(i - k);
	}
	auto rels = prune_relators(commutator_family(ids, c + 2 - k));
	return Presentation(std::move(gens), std::move(rels), c + 1 - k);
}

Presentation build_commutator_presentation(const std::vector<Generator> &alphabet,
                                           std::span<const int> letters, int arity,
                                           int nilpotency_class)
{
	std::vector<int> distinct(letters.begin(), letters.end());
	std::sort(distinct.begin(), distinct.end());
	distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
	auto rels = prune_relators(commutator_family(distinct, arity));
	return Presentation(alphabet, std::move(rels), nilpotency_class);
}

namespace {

std::string strip_comment(const std::string &line)
{
	auto hash = line.find('#');
	return hash == std::string::npos ? line : line.substr(0, hash);
}

} // namespace

Presentation parse_presentation(std::istream &in)
{
	std::vector<Generator> gens;
	std::vector<std::string> relator_texts;
	std::vector<int> relator_lines;
	int cls = 0;
	std::string line;
	int lineno = 0;
	while (std::getline(in, line))
	{
		++lineno;
		std::istringstream ls(strip_comment(line));
		std::string key;
		if (!(ls >> key))
			continue;
		if (key == "gen")
		{
			Generator g;
			if (!(ls >> g.name >> g.weight))
				throw ParseError("line " + std::to_string(lineno) + ": expected gen NAME WEIGHT");
			gens.push_back(g);
		}
		else if (key == "rel")
		{
			std::string rest;
			std::getline(ls, rest);
			relator_texts.push_back(rest);
			relator_lines.push_back(lineno);
		}
		else if (key == "class")
		{
			if (!(ls >> cls) || cls < 1)
				throw ParseError("line " + std::to_string(lineno) + ": bad class");
		}
		else
		{
			throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
		}
	}
	if (cls == 0)
	{
		for (const Generator &g : gens)
			cls = std::max(cls, g.weight);
		cls = std::max(cls, 1);
	}
	// words are parsed against the generator table alone
	Presentation names_only(gens, {}, cls);
	std::vector<Word> rels;
	for (std::size_t i = 0; i < relator_texts.size(); ++i)
	{
		try
		{
			rels.push_back(parse_word(relator_texts[i], names_only));
		}
		catch (const ParseError &e)
		{
			throw ParseError("line " + std::to_string(relator_lines[i]) + ": " + e.what());
		}
	}
	return Presentation(std::move(gens), std::move(rels), cls);
}

Presentation read_presentation_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open presentation file " + path);
	return parse_presentation(in);
}

void write_presentation(std::ostream &out, const Presentation &p)
{
	out << "class " << p.nilpotency_class() << "\n";
	for (const Generator &g : p.generators())
		out << "gen " << g.name << " " << g.weight << "\n";
	for (const Word &r : p.relators())
		out << "rel " << format_word(r, p) << "\n";
}

void write_presentation_file(const std::string &path, const Presentation &p)
{
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write presentation file " + path);
	write_presentation(out, p);
}

} // namespace nilp
