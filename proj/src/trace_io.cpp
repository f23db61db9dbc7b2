#include "nilp/sequence.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace nilp {

std::string format_move(const Move &m, const Presentation &p)
{
	std::ostringstream os;
	if (const auto *fr = std::get_if<FreeReduction>(&m))
		os << "fr " << fr->pos;
	else if (const auto *fe = std::get_if<FreeExpansion>(&m))
		os << "fe " << fe->pos << " " << format_letter(fe->letter, p);
	else
	{
		const auto &ra = std::get<RelatorApplication>(m);
		os << "ar " << ra.pos << " " << ra.relator_id << " " << ra.shift << " " << (ra.inverted ? 1 : 0) << " "
		   << ra.split;
	}
	return os.str();
}

void write_trace(std::ostream &out, const PSequence &t, const std::string &presentation_path)
{
	const Presentation &p = *t.presentation;
	out << "word: " << format_word(t.initial, p) << "\n";
	out << "presentation: " << presentation_path << "\n";
	for (const Move &m : t.moves)
		out << format_move(m, p) << "\n";
	out << "qed\n";
}

void write_trace_file(const std::string &path, const PSequence &t, const std::string &presentation_path)
{
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write trace file " + path);
	write_trace(out, t, presentation_path);
}

namespace {

std::string trim(const std::string &s)
{
	auto b = s.find_first_not_of(" \t\r");
	if (b == std::string::npos)
		return {};
	auto e = s.find_last_not_of(" \t\r");
	return s.substr(b, e - b + 1);
}

bool starts_with_key(const std::string &line, const std::string &key, std::string &rest)
{
	if (line.rfind(key, 0) != 0)
		return false;
	rest = trim(line.substr(key.size()));
	return true;
}

uint32_t parse_uint(const std::string &tok, const char *what)
{
	uint32_t v = 0;
	auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
	if (ec != std::errc() || ptr != tok.data() + tok.size())
		throw ParseError(std::string("bad ") + what + " '" + tok + "'");
	return v;
}

Move parse_move_line(const std::string &line, const Presentation &p)
{
	std::istringstream ls(line);
	std::string kind;
	ls >> kind;
	std::vector<std::string> toks;
	for (std::string t; ls >> t;)
		toks.push_back(t);
	if (kind == "fr")
	{
		if (toks.size() != 1)
			throw ParseError("fr expects 1 argument");
		return FreeReduction{parse_uint(toks[0], "position")};
	}
	if (kind == "fe")
	{
		if (toks.size() != 2)
			throw ParseError("fe expects 2 arguments");
		return FreeExpansion{parse_uint(toks[0], "position"), parse_letter(toks[1], p)};
	}
	if (kind == "ar")
	{
		if (toks.size() != 5)
			throw ParseError("ar expects 5 arguments");
		RelatorApplication ra;
		ra.pos = parse_uint(toks[0], "position");
		ra.relator_id = parse_uint(toks[1], "relator id");
		uint32_t shift = parse_uint(toks[2], "shift");
		uint32_t invflag = parse_uint(toks[3], "inversion flag");
		uint32_t split = parse_uint(toks[4], "split");
		if (invflag > 1)
			throw ParseError("inversion flag must be 0 or 1");
		if (shift > 0xffff || split > 0xffff)
			throw ParseError("shift or split too large");
		ra.shift = static_cast<uint16_t>(shift);
		ra.split = static_cast<uint16_t>(split);
		ra.inverted = invflag == 1;
		return ra;
	}
	throw ParseError("unknown move '" + kind + "'");
}

} // namespace

ParsedTrace read_trace_text(std::istream &in)
{
	ParsedTrace t;
	std::string raw;
	int lineno = 0;
	bool have_word = false;
	while (std::getline(in, raw))
	{
		++lineno;
		std::string line = trim(raw);
		if (line.empty() || line[0] == '#')
			continue;
		if (t.terminated)
			throw ParseError("line " + std::to_string(lineno) + ": content after qed");
		std::string rest;
		if (starts_with_key(line, "word:", rest))
		{
			if (have_word)
				throw ParseError("line " + std::to_string(lineno) + ": duplicate word header");
			t.word_text = rest;
			have_word = true;
		}
		else if (starts_with_key(line, "presentation:", rest))
			t.presentation_path = rest;
		else if (line == "qed")
			t.terminated = true;
		else
		{
			if (!have_word)
				throw ParseError("line " + std::to_string(lineno) + ": move before word header");
			t.move_lines.push_back(line);
			t.move_line_numbers.push_back(lineno);
		}
	}
	if (!have_word)
		throw ParseError("line " + std::to_string(lineno) + ": missing word header");
	return t;
}

namespace {

int parse_error_line(const std::string &msg, int fallback)
{
	if (msg.rfind("line ", 0) == 0)
	{
		int v = 0;
		auto [ptr, ec] = std::from_chars(msg.data() + 5, msg.data() + msg.size(), v);
		if (ec == std::errc())
			return v;
	}
	return fallback;
}

std::string strip_line_prefix(const std::string &msg)
{
	if (msg.rfind("line ", 0) == 0)
	{
		auto colon = msg.find(": ");
		if (colon != std::string::npos)
			return msg.substr(colon + 2);
	}
	return msg;
}

ValidationOutcome error_at(int line, const std::string &reason)
{
	ValidationOutcome out;
	out.line = "error line=" + std::to_string(line) + " " + reason;
	return out;
}

} // namespace

ValidationOutcome validate_trace(std::istream &trace, const PresentationPtr &p)
{
	ParsedTrace t;
	try
	{
		t = read_trace_text(trace);
	}
	catch (const ParseError &e)
	{
		std::string msg = e.what();
		return error_at(parse_error_line(msg, 1), strip_line_prefix(msg));
	}
	Word w;
	try
	{
		w = parse_word(t.word_text, *p);
	}
	catch (const ParseError &e)
	{
		return error_at(1, std::string("bad word: ") + e.what());
	}
	Metrics m;
	m.fl = w.size();
	for (std::size_t i = 0; i < t.move_lines.size(); ++i)
	{
		int ln = t.move_line_numbers[i];
		Move mv;
		try
		{
			mv = parse_move_line(t.move_lines[i], *p);
		}
		catch (const ParseError &e)
		{
			return error_at(ln, e.what());
		}
		try
		{
			apply_move_in_place(w, mv, *p);
		}
		catch (const std::invalid_argument &e)
		{
			return error_at(ln, e.what());
		}
		if (std::holds_alternative<RelatorApplication>(mv))
			++m.area;
		++m.height;
		m.fl = std::max(m.fl, w.size());
	}
	int end_line = t.move_line_numbers.empty() ? 2 : t.move_line_numbers.back() + 1;
	if (!t.terminated)
		return error_at(end_line, "missing qed");
	if (!w.empty())
		return error_at(end_line, "final word is not empty (length " + std::to_string(w.size()) + ")");
	m.final_length = 0;
	ValidationOutcome ok;
	ok.ok = true;
	ok.metrics = m;
	ok.line = "ok area=" + std::to_string(m.area) + " fl=" + std::to_string(m.fl) + " height=" +
	          std::to_string(m.height);
	return ok;
}

ValidationOutcome validate_trace_file(const std::string &trace_path, const std::string &presentation_path)
{
	auto p = std::make_shared<const Presentation>(read_presentation_file(presentation_path));
	std::ifstream in(trace_path);
	if (!in)
		throw std::runtime_error("cannot open trace file " + trace_path);
	return validate_trace(in, p);
}

PSequence parse_trace(std::istream &in, const PresentationPtr &p)
{
	ParsedTrace t = read_trace_text(in);
	PSequence s{p, parse_word(t.word_text, *p), {}};
	for (std::size_t i = 0; i < t.move_lines.size(); ++i)
	{
		try
		{
			s.moves.push_back(parse_move_line(t.move_lines[i], *p));
		}
		catch (const ParseError &e)
		{
			throw ParseError("line " + std::to_string(t.move_line_numbers[i]) + ": " + e.what());
		}
	}
	return s;
}

} // namespace nilp
