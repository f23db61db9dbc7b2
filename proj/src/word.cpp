#include "nilp/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nilp {

Word free_reduce(std::span<const Letter> w)
{
	Word out;
	out.reserve(w.size());
	for (Letter l : w)
	{
		if (!out.empty() && out.back() == l.inverse())
			out.pop_back();
		else
			out.push_back(l);
	}
	return out;
}

bool is_freely_reduced(std::span<const Letter> w)
{
	for (std::size_t i = 0; i + 1 < w.size(); ++i)
		if (w[i] == w[i + 1].inverse())
			return false;
	return true;
}

Word inverse_word(std::span<const Letter> w)
{
	Word out(w.size());
	for (std::size_t i = 0; i < w.size(); ++i)
		out[w.size() - 1 - i] = w[i].inverse();
	return out;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b)
{
	Word out(a.begin(), a.end());
	out.insert(out.end(), b.begin(), b.end());
	return out;
}

void append(Word &dst, std::span<const Letter> src)
{
	dst.insert(dst.end(), src.begin(), src.end());
}

Word power(std::span<const Letter> w, long long exponent)
{
	Word base = exponent >= 0 ? Word(w.begin(), w.end()) : inverse_word(w);
	long long k = exponent >= 0 ? exponent : -exponent;
	Word out;
	out.reserve(base.size() * static_cast<std::size_t>(k));
	for (long long i = 0; i < k; ++i)
		append(out, base);
	return out;
}

Word letter_power(Letter a, long long exponent)
{
	Letter l = exponent >= 0 ? a : a.inverse();
	return Word(static_cast<std::size_t>(exponent >= 0 ? exponent : -exponent), l);
}

Word commutator(std::span<const Letter> a, std::span<const Letter> b)
{
	Word out = inverse_word(a);
	append(out, inverse_word(b));
	append(out, a);
	append(out, b);
	return out;
}

Word nested_commutator(std::span<const Word> entries)
{
	if (entries.empty())
		throw std::invalid_argument("nested_commutator: empty entry list");
	Word acc = entries.back();
	for (std::size_t i = entries.size() - 1; i-- > 0;)
		acc = commutator(entries[i], acc);
	return acc;
}

Word nested_commutator(std::span<const Letter> letters)
{
	std::vector<Word> entries;
	entries.reserve(letters.size());
	for (Letter l : letters)
		entries.push_back(Word{l});
	return nested_commutator(std::span<const Word>(entries));
}

Word rotate(std::span<const Letter> w, std::size_t shift)
{
	Word out;
	out.reserve(w.size());
	if (w.empty())
		return out;
	shift %= w.size();
	out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(shift), w.end());
	out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(shift));
	return out;
}

std::size_t least_rotation(std::span<const Letter> w)
{
	// two-pointer minimum-expression scan
	const std::size_t n = w.size();
	std::size_t i = 0, j = 1, k = 0;
	while (i < n && j < n && k < n)
	{
		int32_t a = w[(i + k) % n].code();
		int32_t b = w[(j + k) % n].code();
		if (a == b)
		{
			++k;
			continue;
		}
		if (a > b)
			i += k + 1;
		else
			j += k + 1;
		if (i == j)
			++j;
		k = 0;
	}
	return n == 0 ? 0 : std::min(i, j);
}

std::size_t count_if_generator(std::span<const Letter> w,
                               const std::function<bool(int)> &pred)
{
	return static_cast<std::size_t>(
	    std::count_if(w.begin(), w.end(), [&](Letter l) { return pred(l.generator()); }));
}

std::size_t WordHash::operator()(const Word &w) const noexcept
{
	std::size_t h = 1469598103934665603ull;
	for (Letter l : w)
	{
		h ^= static_cast<std::size_t>(static_cast<uint32_t>(l.code()));
		h *= 1099511628211ull;
	}
	return h;
}

bool is_valid_generator_name(const std::string &name)
{
	if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z'))
		return false;
	return std::all_of(name.begin(), name.end(), [](char ch) {
		return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
	});
}

namespace {

struct Token {
	std::string name;
	long long exponent = 1;
};

Token split_token(const std::string &token)
{
	Token t;
	auto caret = token.find('^');
	t.name = token.substr(0, caret);
	if (caret != std::string::npos)
	{
		std::string exp = token.substr(caret + 1);
		// accept the unicode minus some texts carry
		if (exp.rfind("\xe2\x88\x92", 0) == 0)
			exp = "-" + exp.substr(3);
		std::size_t used = 0;
		try
		{
			t.exponent = std::stoll(exp, &used);
		}
		catch (const std::exception &)
		{
			throw ParseError("bad exponent in token '" + token + "'");
		}
		if (used != exp.size() || t.exponent == 0)
			throw ParseError("bad exponent in token '" + token + "'");
	}
	if (!is_valid_generator_name(t.name))
		throw ParseError("bad generator name in token '" + token + "'");
	return t;
}

} // namespace

Letter parse_letter(const std::string &token, const Alphabet &alphabet)
{
	Token t = split_token(token);
	if (t.exponent != 1 && t.exponent != -1)
		throw ParseError("letter token must have exponent 1 or -1: '" + token + "'");
	int id = alphabet.find_generator(t.name);
	if (id < 0)
		throw ParseError("unknown generator '" + t.name + "'");
	return Letter(id, static_cast<int>(t.exponent));
}

Word parse_word(const std::string &text, const Alphabet &alphabet)
{
	std::istringstream in(text);
	std::string token;
	Word w;
	while (in >> token)
	{
		Token t = split_token(token);
		int id = alphabet.find_generator(t.name);
		if (id < 0)
			throw ParseError("unknown generator '" + t.name + "'");
		append(w, letter_power(gen(id), t.exponent));
	}
	return w;
}

std::string format_letter(Letter l, const Alphabet &alphabet)
{
	const std::string &name = alphabet.generator_name(l.generator());
	return l.sign() > 0 ? name : name + "^-1";
}

std::string format_word(std::span<const Letter> w, const Alphabet &alphabet)
{
	std::string out;
	for (std::size_t i = 0; i < w.size();)
	{
		std::size_t j = i;
		while (j < w.size() && w[j] == w[i])
			++j;
		long long run = static_cast<long long>(j - i) * w[i].sign();
		if (!out.empty())
			out += ' ';
		out += alphabet.generator_name(w[i].generator());
		if (run != 1)
			out += "^" + std::to_string(run);
		i = j;
	}
	return out;
}

} // namespace nilp
