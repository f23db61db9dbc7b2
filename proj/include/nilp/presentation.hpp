#pragma once

#include "nilp/word.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nilp {

struct Generator {
	std::string name;
	int weight = 1;
};

/// Locates a relator application by the cyclic word u v^-1 it realises.
struct RelatorMatch {
	uint32_t relator_id = 0;
	uint32_t shift = 0;
	bool inverted = false;
};

class RelatorIndex {
public:
	RelatorIndex() = default;
	explicit RelatorIndex(const std::vector<Word> &relators);

	/// Finds (id, shift, inverted) with rotate(r^{+-1}, shift) == target.
	std::optional<RelatorMatch> find(std::span<const Letter> target) const;

private:
	struct Entry {
		uint32_t relator_id;
		uint32_t offset;
		bool inverted;
	};
	std::unordered_map<Word, std::vector<Entry>, WordHash> by_canonical_;
};

/// A finite presentation <A | R> with weight-annotated generators.
/// Immutable after construction.
class Presentation final : public Alphabet {
public:
	Presentation(std::vector<Generator> generators, std::vector<Word> relators,
	             int nilpotency_class);

	int generator_count() const override { return static_cast<int>(generators_.size()); }
	const std::string &generator_name(int id) const override { return generators_.at(id).name; }
	int find_generator(const std::string &name) const override;

	const std::vector<Generator> &generators() const { return generators_; }
	const std::vector<Word> &relators() const { return relators_; }
	const Word &relator(std::size_t id) const { return relators_.at(id); }
	const Word &inverse_relator(std::size_t id) const { return inverse_relators_.at(id); }
	std::size_t max_relator_length() const { return max_relator_length_; }
	int nilpotency_class() const { return class_; }
	int weight(int generator) const { return generators_.at(generator).weight; }

	/// For a generator of weight >= 2, the pair (x, y) of a relator
	/// g^-1 x^-1 y^-1 x y, if the presentation carries one.
	const std::optional<std::pair<Letter, Letter>> &definition(int generator) const
	{
		return definitions_.at(generator);
	}

	const RelatorIndex &index() const { return index_; }

private:
	std::vector<Generator> generators_;
	std::vector<Word> relators_;
	std::vector<Word> inverse_relators_;
	std::vector<std::optional<std::pair<Letter, Letter>>> definitions_;
	std::unordered_map<std::string, int> by_name_;
	std::size_t max_relator_length_ = 0;
	int class_ = 1;
	RelatorIndex index_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Drops relators that freely reduce to the empty word and duplicates
/// (as literal words), keeping first occurrences in order.
std::vector<Word> prune_relators(std::vector<Word> relators);

/// All [y_1, ..., y_arity] with every y_j ranging over letters^{+-1},
/// enumerated in lexicographic order of the tuple, before pruning.
std::vector<Word> commutator_family(std::span<const int> generators, int arity);

/// Chain presentation P_k for class c: generators x_k..x_c, relators all
/// nested commutators of length c + 2 - k over X_k^{+-1}, pruned.
Presentation build_chain_presentation(int c, int k);

/// A presentation sharing `alphabet`'s generators whose relators are the
/// pruned commutator family of the given arity over `letters`.
Presentation build_commutator_presentation(const std::vector<Generator> &alphabet,
                                           std::span<const int> letters, int arity,
                                           int nilpotency_class);

/// Text format: `gen NAME WEIGHT`, `rel WORD`, `class C`, `#` comments.
Presentation parse_presentation(std::istream &in);
Presentation read_presentation_file(const std::string &path);
void write_presentation(std::ostream &out, const Presentation &p);
void write_presentation_file(const std::string &path, const Presentation &p);

} // namespace nilp
