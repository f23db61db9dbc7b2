#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilp {

/// A signed generator letter. Generator ids are 0-based indices into a
/// presentation's generator list; the sign is +1 or -1.
class Letter {
public:
	constexpr Letter() = default;
	constexpr Letter(int generator, int sign)
	    : code_(sign > 0 ? generator + 1 : -(generator + 1))
	{
	}

	static constexpr Letter from_code(int32_t code)
	{
		Letter l;
		l.code_ = code;
		return l;
	}

	constexpr int generator() const { return (code_ > 0 ? code_ : -code_) - 1; }
	constexpr int sign() const { return code_ > 0 ? 1 : -1; }
	constexpr int32_t code() const { return code_; }
	constexpr Letter inverse() const { return from_code(-code_); }

	friend constexpr bool operator==(Letter, Letter) = default;
	friend constexpr auto operator<=>(Letter, Letter) = default;

private:
	int32_t code_ = 1;
};

using Word = std::vector<Letter>;

/// Thrown when a word or presentation text does not follow the grammar.
class ParseError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

constexpr Letter gen(int g) { return Letter(g, 1); }
constexpr Letter inv(int g) { return Letter(g, -1); }

Word free_reduce(std::span<const Letter> w);
bool is_freely_reduced(std::span<const Letter> w);
Word inverse_word(std::span<const Letter> w);
Word concat(std::span<const Letter> a, std::span<const Letter> b);
Word power(std::span<const Letter> w, long long exponent);
Word letter_power(Letter a, long long exponent);
void append(Word &dst, std::span<const Letter> src);

/// [a, b] := a^-1 b^-1 a b, fully expanded with no reduction.
Word commutator(std::span<const Letter> a, std::span<const Letter> b);

/// [a_1, ..., a_c] := [a_1, [a_2, ..., [a_{c-1}, a_c]...]]; [a] := a.
Word nested_commutator(std::span<const Letter> letters);
Word nested_commutator(std::span<const Word> entries);

/// Cyclic rotation: result starts at index `shift` of `w`.
Word rotate(std::span<const Letter> w, std::size_t shift);

/// Index of the lexicographically least rotation (Booth).
std::size_t least_rotation(std::span<const Letter> w);

/// Number of letters whose generator satisfies `pred`.
std::size_t count_if_generator(std::span<const Letter> w,
                               const std::function<bool(int)> &pred);

struct WordHash {
	std::size_t operator()(const Word &w) const noexcept;
};

/// Maps generator names to ids and back; used by the text grammar.
class Alphabet {
public:
	virtual ~Alphabet() = default;
	virtual int generator_count() const = 0;
	virtual const std::string &generator_name(int id) const = 0;
	virtual int find_generator(const std::string &name) const = 0; // -1 if absent
};

bool is_valid_generator_name(const std::string &name);

/// Parses whitespace-separated tokens NAME or NAME^INT (INT nonzero).
Word parse_word(const std::string &text, const Alphabet &alphabet);
Letter parse_letter(const std::string &token, const Alphabet &alphabet);

/// Canonical text form: maximal runs collapse to NAME^k, k = 1 omitted.
std::string format_word(std::span<const Letter> w, const Alphabet &alphabet);
std::string format_letter(Letter l, const Alphabet &alphabet);

} // namespace nilp
