#pragma once

#include "nilp/presentation.hpp"
#include "nilp/word.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace nilp {

// Positions are 0-based letter indices into the current word.

struct FreeReduction {
	uint32_t pos = 0;
	friend bool operator==(const FreeReduction &, const FreeReduction &) = default;
};

struct FreeExpansion {
	uint32_t pos = 0;
	Letter letter;
	friend bool operator==(const FreeExpansion &, const FreeExpansion &) = default;
};

/// Replaces u by v where u v^-1 = rotate(r^{+-1}, shift) and u is its first
/// `split` letters.
struct RelatorApplication {
	uint32_t pos = 0;
	uint32_t relator_id = 0;
	uint16_t shift = 0;
	uint16_t split = 0;
	bool inverted = false;
	friend bool operator==(const RelatorApplication &, const RelatorApplication &) = default;
};

using Move = std::variant<FreeReduction, FreeExpansion, RelatorApplication>;

struct PSequence {
	PresentationPtr presentation;
	Word initial;
	std::vector<Move> moves;
};

struct Metrics {
	std::size_t area = 0;
	std::size_t fl = 0;
	std::size_t height = 0;
	std::size_t final_length = 0;
	friend bool operator==(const Metrics &, const Metrics &) = default;
};

class NotApplicable : public std::runtime_error {
public:
	NotApplicable(std::size_t move_index, const std::string &reason)
	    : std::runtime_error("move " + std::to_string(move_index) + ": " + reason), move_index_(move_index),
	      reason_(reason)
	{
	}
	std::size_t move_index() const { return move_index_; }
	const std::string &reason() const { return reason_; }

private:
	std::size_t move_index_;
	std::string reason_;
};

class NotNull : public std::runtime_error {
public:
	explicit NotNull(std::size_t final_length)
	    : std::runtime_error("final word is not empty (length " + std::to_string(final_length) + ")"),
	      final_length_(final_length)
	{
	}
	std::size_t final_length() const { return final_length_; }

private:
	std::size_t final_length_;
};

class EndpointMismatch : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// The cyclic word u v^-1 a relator application realises.
Word applied_relator_word(const RelatorApplication &ra, const Presentation &p);

/// In-place application; throws std::invalid_argument with a reason when the
/// move does not apply.
void apply_move_in_place(Word &w, const Move &m, const Presentation &p);
Word apply_move(const Word &w, const Move &m, const Presentation &p);

struct ReplayResult {
	Metrics metrics;
	Word final_word;
};

ReplayResult replay(const PSequence &t);
/// Visits w_0, ..., w_m; the callback sees (index, word).
template <typename F> ReplayResult replay_visit(const PSequence &t, F &&visit);

Metrics validate_null(const PSequence &t);

PSequence normalize_insertions(const PSequence &t);
PSequence invert_sequence(const PSequence &t);
PSequence concatenate(const PSequence &a, const PSequence &b);

/// From w u^-1 to the empty word, where t takes w to u: the moves of t
/// followed by cancelling u against u^-1.
PSequence null_closure(const PSequence &t);

/// Free expansions building `w` from the empty word; w must freely reduce to
/// the empty word.
std::vector<Move> expansion_moves(const Word &w);

/// Applies moves as they are recorded, verifying each, and tracks metrics.
class SequenceBuilder {
public:
	SequenceBuilder(PresentationPtr p, Word initial);

	const Word &word() const { return word_; }
	std::size_t length() const { return word_.size(); }
	const Presentation &presentation() const { return *presentation_; }
	const Metrics &metrics() const { return metrics_; }
	/// Longest word seen since the last reset_peak().
	std::size_t peak() const { return peak_; }
	void reset_peak() { peak_ = word_.size(); }

	void push(const Move &m);
	void free_reduce_at(std::size_t pos) { push(FreeReduction{static_cast<uint32_t>(pos)}); }
	void free_expand_at(std::size_t pos, Letter a)
	{
		push(FreeExpansion{static_cast<uint32_t>(pos), a});
	}
	/// Replace the `u_len` letters at pos by v, via the relator realising
	/// u v^-1. Throws std::logic_error when no relator matches.
	void replace(std::size_t pos, std::size_t u_len, const Word &v);
	/// Swap the block [pos, pos + a_len) with the block after it of length b_len.
	void swap_blocks(std::size_t pos, std::size_t a_len, std::size_t b_len);
	/// Insert y y^-1 at pos using free expansions.
	void insert_trivial(std::size_t pos, const Word &y);
	/// Reduce `pairs` nested inverse pairs meeting at the boundary pos.
	void reduce_at_boundary(std::size_t pos, std::size_t pairs);
	/// Replays a fragment whose initial word sits at `offset`.
	void append(const PSequence &fragment, std::size_t offset);
	void append_moves(const std::vector<Move> &moves, std::size_t offset);

	PSequence finish() &&;
	PSequence snapshot() const;

private:
	PresentationPtr presentation_;
	Word initial_;
	Word word_;
	std::vector<Move> moves_;
	Metrics metrics_;
	std::size_t peak_ = 0;
};

Move shifted(const Move &m, std::size_t offset);

// --- text trace format -----------------------------------------------------

std::string format_move(const Move &m, const Presentation &p);

/// Writes `word:`, `presentation:`, the moves, then `qed`.
void write_trace(std::ostream &out, const PSequence &t, const std::string &presentation_path);
void write_trace_file(const std::string &path, const PSequence &t, const std::string &presentation_path);

struct ParsedTrace {
	std::string presentation_path;
	std::string word_text;
	std::vector<std::string> move_lines;
	std::vector<int> move_line_numbers;
	bool terminated = false;
};

ParsedTrace read_trace_text(std::istream &in);

/// Validates a trace as a null-sequence. Returns the validator's single
/// output line, `ok area=.. fl=.. height=..` or `error line=N reason`.
struct ValidationOutcome {
	bool ok = false;
	Metrics metrics;
	std::string line;
};
ValidationOutcome validate_trace(std::istream &trace, const PresentationPtr &p);
ValidationOutcome validate_trace_file(const std::string &trace_path, const std::string &presentation_path);

/// Parses a trace fully into a PSequence (throws ParseError with line info).
PSequence parse_trace(std::istream &in, const PresentationPtr &p);

// --- template implementation ------------------------------------------------

template <typename F> ReplayResult replay_visit(const PSequence &t, F &&visit)
{
	ReplayResult r;
	Word w = t.initial;
	r.metrics.fl = w.size();
	visit(std::size_t{0}, static_cast<const Word &>(w));
	for (std::size_t i = 0; i < t.moves.size(); ++i)
	{
		try
		{
			apply_move_in_place(w, t.moves[i], *t.presentation);
		}
		catch (const std::invalid_argument &e)
		{
			throw NotApplicable(i, e.what());
		}
		if (std::holds_alternative<RelatorApplication>(t.moves[i]))
			++r.metrics.area;
		r.metrics.fl = std::max(r.metrics.fl, w.size());
		visit(i + 1, static_cast<const Word &>(w));
	}
	r.metrics.height = t.moves.size();
	r.metrics.final_length = w.size();
	r.final_word = std::move(w);
	return r;
}

} // namespace nilp
