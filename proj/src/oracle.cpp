#include "nilp/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace nilp {

using Rational = boost::multiprecision::cpp_rational;

TruncatedSeries::TruncatedSeries(int symbols, int degree_cap) : symbols_(symbols), cap_(degree_cap)
{
	if (symbols < 1 || degree_cap < 0)
		throw std::invalid_argument("TruncatedSeries needs m >= 1 and cap >= 0");
	std::size_t total = 0;
	std::size_t p = 1;
	for (int d = 0; d <= cap_; ++d)
	{
		pow_.push_back(p);
		offset_.push_back(total);
		total += p;
		p *= static_cast<std::size_t>(symbols);
	}
	coeffs_.assign(total, BigInt(0));
}

TruncatedSeries TruncatedSeries::one(int symbols, int degree_cap)
{
	TruncatedSeries s(symbols, degree_cap);
	s.coeffs_[0] = 1;
	return s;
}

std::size_t TruncatedSeries::index_of(std::span<const int> monomial) const
{
	if (static_cast<int>(monomial.size()) > cap_)
		throw std::out_of_range("monomial degree exceeds truncation");
	std::size_t v = 0;
	for (int s : monomial)
	{
		if (s < 0 || s >= symbols_)
			throw std::out_of_range("monomial symbol out of range");
		v = v * static_cast<std::size_t>(symbols_) + static_cast<std::size_t>(s);
	}
	return offset_[monomial.size()] + v;
}

const BigInt &TruncatedSeries::coefficient(std::span<const int> monomial) const
{
	return coeffs_[index_of(monomial)];
}

BigInt &TruncatedSeries::coefficient(std::span<const int> monomial)
{
	return coeffs_[index_of(monomial)];
}

void TruncatedSeries::multiply_letter(int symbol, int sign)
{
	const auto m = static_cast<std::size_t>(symbols_);
	const auto a = static_cast<std::size_t>(symbol);
	if (sign > 0)
	{
		// s (1 + X): descending degree keeps sources unmodified
		for (int d = cap_ - 1; d >= 0; --d)
		{
			std::size_t src = offset_[static_cast<std::size_t>(d)];
			std::size_t dst = offset_[static_cast<std::size_t>(d) + 1];
			for (std::size_t v = 0; v < pow_[static_cast<std::size_t>(d)]; ++v)
			{
				const BigInt &c = coeffs_[src + v];
				if (!c.is_zero())
					coeffs_[dst + v * m + a] += c;
			}
		}
	}
	else
	{
		// t (1 + X) = s  =>  t[u a] = s[u a] - t[u], ascending degree
		for (int d = 0; d < cap_; ++d)
		{
			std::size_t src = offset_[static_cast<std::size_t>(d)];
			std::size_t dst = offset_[static_cast<std::size_t>(d) + 1];
			for (std::size_t v = 0; v < pow_[static_cast<std::size_t>(d)]; ++v)
			{
				const BigInt &c = coeffs_[src + v];
				if (!c.is_zero())
					coeffs_[dst + v * m + a] -= c;
			}
		}
	}
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &rhs) const
{
	if (symbols_ != rhs.symbols_ || cap_ != rhs.cap_)
		throw std::invalid_argument("series shape mismatch");
	TruncatedSeries out(symbols_, cap_);
	for (int d1 = 0; d1 <= cap_; ++d1)
	{
		for (std::size_t v1 = 0; v1 < pow_[static_cast<std::size_t>(d1)]; ++v1)
		{
			const BigInt &c1 = coeffs_[offset_[static_cast<std::size_t>(d1)] + v1];
			if (c1.is_zero())
				continue;
			for (int d2 = 0; d1 + d2 <= cap_; ++d2)
			{
				std::size_t base = offset_[static_cast<std::size_t>(d1 + d2)] + v1 * pow_[static_cast<std::size_t>(d2)];
				for (std::size_t v2 = 0; v2 < pow_[static_cast<std::size_t>(d2)]; ++v2)
				{
					const BigInt &c2 = rhs.coeffs_[rhs.offset_[static_cast<std::size_t>(d2)] + v2];
					if (!c2.is_zero())
						out.coeffs_[base + v2] += c1 * c2;
				}
			}
		}
	}
	return out;
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &rhs)
{
	*this = *this * rhs;
	return *this;
}

bool TruncatedSeries::is_one() const
{
	if (coeffs_[0] != 1)
		return false;
	return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const BigInt &c) { return c.is_zero(); });
}

int TruncatedSeries::lowest_nonconstant_degree() const
{
	for (int d = 1; d <= cap_; ++d)
	{
		auto first = coeffs_.begin() + static_cast<std::ptrdiff_t>(offset_[static_cast<std::size_t>(d)]);
		auto last = first + static_cast<std::ptrdiff_t>(pow_[static_cast<std::size_t>(d)]);
		if (std::any_of(first, last, [](const BigInt &c) { return !c.is_zero(); }))
			return d;
	}
	return 0;
}

IntVector TruncatedSeries::homogeneous_part(int degree) const
{
	if (degree < 0 || degree > cap_)
		throw std::out_of_range("degree outside truncation");
	auto first = coeffs_.begin() + static_cast<std::ptrdiff_t>(offset_[static_cast<std::size_t>(degree)]);
	return IntVector(first, first + static_cast<std::ptrdiff_t>(pow_[static_cast<std::size_t>(degree)]));
}

Oracle::Oracle(const Presentation &p, int nilpotency_class) : class_(nilpotency_class)
{
	if (class_ < 1)
		throw std::invalid_argument("oracle class must be positive");
	const auto n = static_cast<std::size_t>(p.generator_count());
	symbol_of_.assign(n, -1);
	for (std::size_t g = 0; g < n; ++g)
		if (p.weight(static_cast<int>(g)) == 1)
			symbol_of_[g] = symbols_++;
	if (symbols_ == 0)
		throw std::invalid_argument("presentation has no weight-1 generators");

	expansion_.assign(n, Word{});
	std::vector<int> state(n, 0); // 0 new, 1 visiting, 2 done
	std::function<void(int)> expand = [&](int g) {
		auto gi = static_cast<std::size_t>(g);
		if (state[gi] == 2)
			return;
		if (state[gi] == 1)
			throw std::invalid_argument("cyclic generator definitions");
		state[gi] = 1;
		if (p.weight(g) == 1)
		{
			expansion_[gi] = Word{gen(g)};
		}
		else
		{
			const auto &def = p.definition(g);
			if (!def)
				throw std::invalid_argument("generator " + p.generator_name(g) + " has no definition relator");
			expand(def->first.generator());
			expand(def->second.generator());
			auto signed_expansion = [&](Letter l) {
				const Word &e = expansion_[static_cast<std::size_t>(l.generator())];
				return l.sign() > 0 ? e : inverse_word(e);
			};
			expansion_[gi] = commutator(signed_expansion(def->first), signed_expansion(def->second));
		}
		state[gi] = 2;
	};
	for (std::size_t g = 0; g < n; ++g)
		expand(static_cast<int>(g));

	for (std::size_t g = 0; g < n; ++g)
	{
		TruncatedSeries fwd = TruncatedSeries::one(symbols_, class_);
		TruncatedSeries bwd = TruncatedSeries::one(symbols_, class_);
		if (p.weight(static_cast<int>(g)) != 1)
		{
			for (Letter l : expansion_[g])
				fwd.multiply_letter(symbol_of_[static_cast<std::size_t>(l.generator())], l.sign());
			for (Letter l : inverse_word(expansion_[g]))
				bwd.multiply_letter(symbol_of_[static_cast<std::size_t>(l.generator())], l.sign());
		}
		image_.push_back(std::move(fwd));
		inverse_image_.push_back(std::move(bwd));
	}
}

TruncatedSeries Oracle::eval(std::span<const Letter> w) const
{
	TruncatedSeries s = TruncatedSeries::one(symbols_, class_);
	for (Letter l : w)
	{
		auto g = static_cast<std::size_t>(l.generator());
		if (g >= symbol_of_.size())
			throw std::out_of_range("letter outside presentation");
		if (symbol_of_[g] >= 0)
			s.multiply_letter(symbol_of_[g], l.sign());
		else
			s *= l.sign() > 0 ? image_[g] : inverse_image_[g];
	}
	return s;
}

TruncatedSeries eval_word(std::span<const Letter> w, const Presentation &p, int nilpotency_class)
{
	return Oracle(p, nilpotency_class).eval(w);
}

bool is_identity(std::span<const Letter> w, const Presentation &p, int nilpotency_class)
{
	return Oracle(p, nilpotency_class).is_identity(w);
}

namespace {

// Duval's generation of Lyndon words of length <= n, filtered to n.
std::vector<std::vector<int>> lyndon_words(int m, int n)
{
	std::vector<std::vector<int>> out;
	std::vector<int> w{-1};
	while (!w.empty())
	{
		++w.back();
		if (static_cast<int>(w.size()) == n)
			out.push_back(w);
		std::size_t len = w.size();
		while (static_cast<int>(w.size()) < n)
			w.push_back(w[w.size() - len]);
		while (!w.empty() && w.back() == m - 1)
			w.pop_back();
	}
	return out;
}

bool is_lyndon(std::span<const int> w)
{
	// strictly smaller than every proper rotation
	for (std::size_t k = 1; k < w.size(); ++k)
	{
		std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
		rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
		if (!std::lexicographical_compare(w.begin(), w.end(), rot.begin(), rot.end()))
			return false;
	}
	return true;
}

// homogeneous polynomial: dense over m^d
struct Homogeneous {
	int degree = 0;
	IntVector coeffs;
};

Homogeneous bracket_of(std::span<const int> w, int m)
{
	if (w.size() == 1)
	{
		Homogeneous h{1, IntVector(static_cast<std::size_t>(m), BigInt(0))};
		h.coeffs[static_cast<std::size_t>(w[0])] = 1;
		return h;
	}
	// standard factorisation: longest proper Lyndon suffix
	std::size_t split = w.size() - 1;
	for (std::size_t k = 1; k < w.size(); ++k)
	{
		if (is_lyndon(w.subspan(k)))
		{
			split = k;
			break;
		}
	}
	Homogeneous u = bracket_of(w.subspan(0, split), m);
	Homogeneous v = bracket_of(w.subspan(split), m);
	std::size_t pu = u.coeffs.size(), pv = v.coeffs.size();
	Homogeneous out{u.degree + v.degree, IntVector(pu * pv, BigInt(0))};
	for (std::size_t i = 0; i < pu; ++i)
	{
		if (u.coeffs[i].is_zero())
			continue;
		for (std::size_t j = 0; j < pv; ++j)
		{
			if (v.coeffs[j].is_zero())
				continue;
			BigInt prod = u.coeffs[i] * v.coeffs[j];
			out.coeffs[i * pv + j] += prod; // uv
			out.coeffs[j * pu + i] -= prod; // vu
		}
	}
	return out;
}

std::size_t dense_index(std::span<const int> w, int m)
{
	std::size_t v = 0;
	for (int s : w)
		v = v * static_cast<std::size_t>(m) + static_cast<std::size_t>(s);
	return v;
}

} // namespace

LyndonBasis::LyndonBasis(int symbols, int degree) : symbols_(symbols), degree_(degree)
{
	if (symbols < 1 || degree < 1)
		throw std::invalid_argument("Lyndon basis needs m >= 1, c >= 1");
	words_ = lyndon_words(symbols, degree);
	for (const auto &w : words_)
	{
		Homogeneous h = bracket_of(w, symbols);
		// unit diagonal and only larger monomials below it
		std::size_t self = dense_index(w, symbols);
		if (h.coeffs[self] != 1)
			throw std::logic_error("Lyndon bracketing lacks unit leading coefficient");
		for (std::size_t v = 0; v < self; ++v)
			if (!h.coeffs[v].is_zero())
				throw std::logic_error("Lyndon bracketing not triangular");
		bracketings_.push_back(std::move(h.coeffs));
	}
}

std::string LyndonBasis::bracket_text(std::size_t i) const
{
	std::function<std::string(std::span<const int>)> text = [&](std::span<const int> w) -> std::string {
		if (w.size() == 1)
			return "x" + std::to_string(w[0] + 1);
		for (std::size_t k = 1; k < w.size(); ++k)
			if (is_lyndon(w.subspan(k)))
				return "[" + text(w.subspan(0, k)) + "," + text(w.subspan(k)) + "]";
		return "?";
	};
	return text(words_.at(i));
}

IntVector LyndonBasis::coordinates(const IntVector &homogeneous) const
{
	IntVector residual = homogeneous;
	IntVector coords(words_.size(), BigInt(0));
	for (std::size_t i = 0; i < words_.size(); ++i)
	{
		std::size_t self = dense_index(words_[i], symbols_);
		BigInt a = residual[self];
		if (a.is_zero())
			continue;
		coords[i] = a;
		const IntVector &b = bracketings_[i];
		for (std::size_t v = self; v < b.size(); ++v)
			if (!b[v].is_zero())
				residual[v] -= a * b[v];
	}
	if (!std::all_of(residual.begin(), residual.end(), [](const BigInt &c) { return c.is_zero(); }))
		throw std::logic_error("NonIntegralDecomposition: element is not in the Lie span");
	return coords;
}

LyndonBasis lyndon_basis(int symbols, int degree) { return LyndonBasis(symbols, degree); }

IntVector weight_exponents(const TruncatedSeries &image, const LyndonBasis &basis)
{
	int low = image.lowest_nonconstant_degree();
	if (low != 0 && low < basis.degree())
		throw NotInGammaC("element has nonzero terms below degree " + std::to_string(basis.degree()));
	return basis.coordinates(image.homogeneous_part(basis.degree()));
}

IntVector weight_exponents(std::span<const Letter> w, const Oracle &oracle, const LyndonBasis &basis)
{
	return weight_exponents(oracle.eval(w), basis);
}

namespace {

// Row-reduces columns = vectors; returns pivot columns.
std::vector<std::vector<Rational>> to_rational_rows(const std::vector<IntVector> &cols, std::size_t rows,
                                                    const IntVector *rhs)
{
	std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols.size() + (rhs ? 1 : 0)));
	for (std::size_t j = 0; j < cols.size(); ++j)
		for (std::size_t i = 0; i < rows; ++i)
			a[i][j] = Rational(cols[j].at(i));
	if (rhs)
		for (std::size_t i = 0; i < rows; ++i)
			a[i][cols.size()] = Rational(rhs->at(i));
	return a;
}

std::size_t eliminate(std::vector<std::vector<Rational>> &a, std::size_t ncols, std::vector<std::size_t> &pivots)
{
	std::size_t r = 0;
	for (std::size_t j = 0; j < ncols && r < a.size(); ++j)
	{
		std::size_t p = r;
		while (p < a.size() && a[p][j] == 0)
			++p;
		if (p == a.size())
			continue;
		std::swap(a[p], a[r]);
		Rational piv = a[r][j];
		for (auto &x : a[r])
			x /= piv;
		for (std::size_t i = 0; i < a.size(); ++i)
		{
			if (i == r || a[i][j] == 0)
				continue;
			Rational f = a[i][j];
			for (std::size_t k = 0; k < a[i].size(); ++k)
				a[i][k] -= f * a[r][k];
		}
		pivots.push_back(j);
		++r;
	}
	return r;
}

} // namespace

std::size_t rational_rank(const std::vector<IntVector> &vectors)
{
	if (vectors.empty())
		return 0;
	auto a = to_rational_rows(vectors, vectors.front().size(), nullptr);
	std::vector<std::size_t> pivots;
	return eliminate(a, vectors.size(), pivots);
}

std::optional<IntVector> solve_in_basis(const IntVector &target, const std::vector<IntVector> &basis)
{
	if (basis.empty())
	{
		if (std::all_of(target.begin(), target.end(), [](const BigInt &c) { return c.is_zero(); }))
			return IntVector{};
		return std::nullopt;
	}
	auto a = to_rational_rows(basis, target.size(), &target);
	std::vector<std::size_t> pivots;
	std::size_t rank = eliminate(a, basis.size(), pivots);
	if (rank != basis.size())
		throw std::invalid_argument("solve_in_basis: basis vectors are dependent");
	// inconsistent rows
	for (std::size_t i = rank; i < a.size(); ++i)
		if (a[i][basis.size()] != 0)
			return std::nullopt;
	IntVector x(basis.size());
	for (std::size_t r = 0; r < rank; ++r)
	{
		const Rational &v = a[r][basis.size()];
		if (boost::multiprecision::denominator(v) != 1)
			return std::nullopt;
		x[pivots[r]] = boost::multiprecision::numerator(v);
	}
	return x;
}

} // namespace nilp
