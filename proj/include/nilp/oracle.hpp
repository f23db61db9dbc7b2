#pragma once

#include "nilp/presentation.hpp"
#include "nilp/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilp {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

/// Element of the free associative ring Z<X_1..X_m> modulo terms of degree
/// greater than the cap. Coefficients are stored densely, indexed by degree
/// then by the base-m value of the monomial.
class TruncatedSeries {
public:
	TruncatedSeries(int symbols, int degree_cap);

	static TruncatedSeries one(int symbols, int degree_cap);

	int symbols() const { return symbols_; }
	int degree_cap() const { return cap_; }

	/// this := this * (1 + X_a)^{sign}
	void multiply_letter(int symbol, int sign);
	TruncatedSeries operator*(const TruncatedSeries &rhs) const;
	TruncatedSeries &operator*=(const TruncatedSeries &rhs);
	friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

	bool is_one() const;
	/// Lowest positive degree carrying a nonzero coefficient, or 0 if none.
	int lowest_nonconstant_degree() const;

	const BigInt &coefficient(std::span<const int> monomial) const;
	BigInt &coefficient(std::span<const int> monomial);
	/// Dense coefficients of the homogeneous degree-d part, base-m indexed.
	IntVector homogeneous_part(int degree) const;

	/// Visits nonzero coefficients in canonical order: by degree, then
	/// lexicographically by symbol index.
	template <typename F> void for_each_nonzero(F &&f) const
	{
		std::vector<int> mono;
		for (int d = 0; d <= cap_; ++d)
		{
			std::size_t count = pow_[static_cast<std::size_t>(d)];
			for (std::size_t v = 0; v < count; ++v)
			{
				const BigInt &coef = coeffs_[offset_[static_cast<std::size_t>(d)] + v];
				if (coef.is_zero())
					continue;
				mono.assign(static_cast<std::size_t>(d), 0);
				std::size_t x = v;
				for (int i = d - 1; i >= 0; --i)
				{
					mono[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::size_t>(symbols_));
					x /= static_cast<std::size_t>(symbols_);
				}
				f(static_cast<const std::vector<int> &>(mono), coef);
			}
		}
	}

private:
	std::size_t index_of(std::span<const int> monomial) const;

	int symbols_;
	int cap_;
	std::vector<std::size_t> pow_;    // m^d
	std::vector<std::size_t> offset_; // start of degree d
	std::vector<BigInt> coeffs_;
};

/// Evaluates words of a presentation in the free nilpotent group of the
/// given class through x -> 1 + X. Weight-1 generators are the symbols;
/// heavier generators expand through their definition relators.
class Oracle {
public:
	Oracle(const Presentation &p, int nilpotency_class);
	explicit Oracle(const Presentation &p) : Oracle(p, p.nilpotency_class()) {}

	int nilpotency_class() const { return class_; }
	int symbol_count() const { return symbols_; }
	int symbol_of(int generator) const { return symbol_of_.at(static_cast<std::size_t>(generator)); }
	/// Expansion of a generator as a word over weight-1 generators.
	const Word &expansion(int generator) const { return expansion_.at(static_cast<std::size_t>(generator)); }

	TruncatedSeries eval(std::span<const Letter> w) const;
	bool is_identity(std::span<const Letter> w) const { return eval(w).is_one(); }

private:
	int class_;
	int symbols_ = 0;
	std::vector<int> symbol_of_;
	std::vector<Word> expansion_;
	std::vector<TruncatedSeries> image_;
	std::vector<TruncatedSeries> inverse_image_;
};

TruncatedSeries eval_word(std::span<const Letter> w, const Presentation &p, int nilpotency_class);
bool is_identity(std::span<const Letter> w, const Presentation &p, int nilpotency_class);

class NotInGammaC : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Lyndon words of one length with their standard bracketings expanded as
/// homogeneous polynomials; the coordinate system on the top Lie component.
class LyndonBasis {
public:
	LyndonBasis(int symbols, int degree);

	int symbols() const { return symbols_; }
	int degree() const { return degree_; }
	std::size_t size() const { return words_.size(); }
	const std::vector<std::vector<int>> &words() const { return words_; }
	/// Dense base-m coefficient vector of the bracketing of words()[i].
	const IntVector &bracketing(std::size_t i) const { return bracketings_.at(i); }
	std::string bracket_text(std::size_t i) const;

	/// Coordinates of a homogeneous Lie element given densely.
	IntVector coordinates(const IntVector &homogeneous) const;

private:
	int symbols_;
	int degree_;
	std::vector<std::vector<int>> words_;
	std::vector<IntVector> bracketings_;
	std::vector<std::size_t> split_;
};

LyndonBasis lyndon_basis(int symbols, int degree);

/// Coordinates on the Lyndon basis of the image of w, which must be 1 plus
/// terms of degree exactly basis.degree().
IntVector weight_exponents(const TruncatedSeries &image, const LyndonBasis &basis);
IntVector weight_exponents(std::span<const Letter> w, const Oracle &oracle, const LyndonBasis &basis);

/// Integer x with sum_i x_i basis[i] == target, or nullopt when no integer
/// solution exists. Basis vectors must be independent.
std::optional<IntVector> solve_in_basis(const IntVector &target, const std::vector<IntVector> &basis);

/// Rank over the rationals.
std::size_t rational_rank(const std::vector<IntVector> &vectors);

} // namespace nilp
