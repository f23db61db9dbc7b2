#pragma once

#include "nilp/compression.hpp"
#include "nilp/oracle.hpp"
#include "nilp/presentation.hpp"
#include "nilp/sequence.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace nilp {

class UnsupportedIndex : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class NotNullHomotopic : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Split of the top-weight letters into a basis (A_c2) and the rest (A_c1),
/// with the rewriting of each remaining letter over the basis.
struct BasisSelection {
	std::vector<int> basis;
	std::vector<int> others;
	std::map<int, Word> rewrite;
	std::vector<IntVector> vectors; // Lie vectors of the basis letters
	int index = 1;
};

/// Greedy choice over the weight-c letters of p in generator order.
BasisSelection select_basis(const Presentation &p);

/// Generators x1..xm, then weight-(i+1) letters g<i>_<...> = [x_i, y] for
/// y of weight i. Relators: definitions, all (c+1)-fold commutators over
/// the weight-1 letters, centrality of the weight-c letters, basis rewriting
/// of the non-basis weight-c letters, and lifts of the class-(c-1) relators.
Presentation build_filler_presentation(int c, int m);

/// Deletes the letters of weight equal to the presentation's class.
Word project_word(std::span<const Letter> w, const Presentation &p);

struct LevelStats {
	int c = 0;
	std::size_t word_length = 0;
	uint64_t base = 0;
	uint64_t max_register = 0;
	std::size_t recursive_area = 0;
	std::size_t max_weight_letters = 0; // M
	Metrics metrics;
};

struct FillResult {
	PSequence sequence;
	Metrics metrics;
	/// One entry per class from c down to 1.
	std::vector<LevelStats> levels;
};

/// Filling machinery for the filler presentations of classes 1..c on m
/// letters. Holds caches; one instance per thread.
class Filler {
public:
	Filler(int c, int m);
	/// Uses `top` as the class-c presentation; it must match
	/// build_filler_presentation(c, m) relator for relator.
	explicit Filler(PresentationPtr top);

	int nilpotency_class() const { return static_cast<int>(levels_.size()); }
	int letters() const { return m_; }
	const PresentationPtr &presentation(int c) const { return levels_.at(static_cast<std::size_t>(c - 1)).p; }
	const BasisSelection &basis(int c) const { return levels_.at(static_cast<std::size_t>(c - 1)).basis; }
	/// Id in P(c) of the lift of relator `id` of P(c - 1).
	uint32_t lift_id(int c, uint32_t id) const { return levels_.at(static_cast<std::size_t>(c - 1)).lift.at(id); }
	std::size_t max_weight_letters(int c) const { return levels_.at(static_cast<std::size_t>(c - 1)).M; }

	FillResult fill(const Word &w);

private:
	struct Level {
		PresentationPtr p;
		BasisSelection basis;
		std::vector<uint32_t> lift;
		std::vector<int> basis_slot; // generator -> basis index or -1
		std::vector<CommutatorSpec> specs;
		std::size_t M = 0;
	};

	void init(int c, int m, PresentationPtr top);
	FillResult fill_level(int c, const Word &w);
	FillResult fill_abelian(const Word &w);

	int m_ = 0;
	std::vector<Level> levels_;
};

FillResult fill(const Word &w, const PresentationPtr &p);

struct AflCertificate {
	double lambda = 0;
	double lambda_area = 0;
	double lambda_fl = 0;
	std::size_t worst_area_index = 0;
	std::size_t worst_fl_index = 0;
	std::size_t count = 0;
};

/// Smallest lambda with Area <= lambda l^{c+1} and FL <= lambda l over the
/// results; empty words are skipped.
AflCertificate certify_afl_pair(const std::vector<std::pair<std::size_t, Metrics>> &results, int c);

/// Deterministic null-homotopic words of length at most n.
std::vector<Word> corpus_generate(const Presentation &p, std::size_t n, std::size_t count, uint64_t seed);

} // namespace nilp
