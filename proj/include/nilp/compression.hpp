#pragma once

#include "nilp/presentation.hpp"
#include "nilp/sequence.hpp"
#include "nilp/word.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace nilp {

class OutOfRange : public std::out_of_range {
public:
	using std::out_of_range::out_of_range;
};

class NoTransportRelator : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Letters a_1..a_c of weight 1; z_k = [a_k, ..., a_c].
struct CommutatorSpec {
	std::vector<Letter> chain;
	int c() const { return static_cast<int>(chain.size()); }
};

/// x1..xc of build_chain_presentation(c, 1).
CommutatorSpec chain_spec(int c);

/// z_k for k in 1..c.
Word z_word(const CommutatorSpec &spec, int k);

struct DigitExpansion {
	uint64_t n = 2;
	std::vector<uint64_t> digits; // little-endian, c of them
	uint64_t value = 0;
};

DigitExpansion digits(uint64_t s, uint64_t n, int c);

/// n^c, throwing OutOfRange on overflow.
uint64_t power_of(uint64_t n, int c);

/// Transports a central block W across one letter a, as a one-move fragment:
/// towards the left turns a W into W a, otherwise W a into a W.
enum class Direction { Left, Right };
PSequence transport_central(const Word &w, Letter a, Direction direction, const PresentationPtr &p);

struct PowerCompression {
	PSequence sequence;
	Metrics metrics;
	/// FL ignoring the not yet consumed z-prefix.
	std::size_t working_fl = 0;
};

/// Compression words and increment sequences for one spec and base n.
/// Relator applications at the top level use `p`, which must contain every
/// (c+1)-fold nested commutator over the spec's letters; deeper levels use
/// their own commutator presentations. Caches increments, so an instance
/// must not be shared between threads.
class Compressor {
public:
	Compressor(CommutatorSpec spec, uint64_t n, PresentationPtr p);

	const CommutatorSpec &spec() const { return spec_; }
	uint64_t base() const { return n_; }
	/// n^c
	uint64_t block() const { return block_; }
	const PresentationPtr &presentation() const { return levels_.front().presentation; }
	const Word &z() const { return levels_.front().z; }

	/// z~^s for 0 <= s <= n^c.
	Word word(uint64_t s) const;
	/// z~^A (z~^{n^c})^B for q = A + B n^c, with the A = 0 factor omitted.
	Word extended_word(uint64_t q) const;

	/// Moves taking z z~^s to z~^{s+1}, for 0 <= s < n^c.
	const std::vector<Move> &increment(uint64_t s);
	PSequence increment_sequence(uint64_t s);

	std::size_t word_length(uint64_t s) const;
	std::size_t extended_length(uint64_t q) const;

	/// Moves turning z . extended_word(q) into extended_word(q + 1); they
	/// only touch the leading z~^A factor, so depend on A = q mod n^c alone.
	const std::vector<Move> &extended_increment_moves(uint64_t q);
	/// The mirror image: extended_word(q)^-1 z^-1 into extended_word(q + 1)^-1,
	/// positions relative to the start of the trailing (z~^A)^-1 factor.
	const std::vector<Move> &inverse_extended_increment_moves(uint64_t q);

	/// Appends to `b` the moves turning z . extended_word(q), sitting at
	/// `offset`, into extended_word(q + 1).
	void apply_extended_increment(SequenceBuilder &b, std::size_t offset, uint64_t q);

	PowerCompression power_compression();
	/// From z^q to extended_word(q).
	PSequence extended_sequence(uint64_t q);

private:
	struct Level {
		PresentationPtr presentation;
		std::vector<Letter> letters;
		Word z;
		uint64_t block = 1;
		std::unordered_map<uint64_t, std::shared_ptr<const std::vector<Move>>> raw;
		std::unordered_map<uint64_t, std::shared_ptr<const PSequence>> normalized;
	};

	Word level_word(std::size_t level, uint64_t s) const;
	std::size_t level_length(std::size_t level, uint64_t s) const;
	const std::vector<Move> &level_increment(std::size_t level, uint64_t s);
	const PSequence &normalized_increment(std::size_t level, uint64_t s);
	std::vector<Move> build_increment(std::size_t level, uint64_t s);

	CommutatorSpec spec_;
	uint64_t n_;
	uint64_t block_;
	std::vector<Level> levels_;
	std::vector<Move> empty_;
	std::unordered_map<uint64_t, std::shared_ptr<const std::vector<Move>>> extended_;
	std::unordered_map<uint64_t, std::shared_ptr<const std::vector<Move>>> inverse_extended_;
};

Word compression_word(const CommutatorSpec &spec, uint64_t n, uint64_t s);
PSequence increment_sequence(const CommutatorSpec &spec, uint64_t n, uint64_t s, const PresentationPtr &p);
PSequence power_compression_sequence(const CommutatorSpec &spec, uint64_t n, const PresentationPtr &p);

struct ExtendedCompression {
	Word word;
	PSequence sequence;
};
ExtendedCompression extended_compression(const CommutatorSpec &spec, uint64_t n, uint64_t q,
                                         const PresentationPtr &p);

} // namespace nilp
