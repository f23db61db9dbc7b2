#include "nilp/bench.hpp"
#include "nilp/compression.hpp"
#include "nilp/filler.hpp"
#include "nilp/oracle.hpp"
#include "nilp/presentation.hpp"
#include "nilp/sequence.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace nilp;

namespace {

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::string metrics_line(const Metrics &m)
{
	return "area=" + std::to_string(m.area) + " fl=" + std::to_string(m.fl) + " height=" + std::to_string(m.height);
}

std::string presentation_path_for(const std::string &trace)
{
	return trace + ".pres";
}

std::string read_word_arg(const std::string &arg)
{
	if (std::filesystem::is_regular_file(arg))
	{
		std::ifstream in(arg);
		std::stringstream ss;
		ss << in.rdbuf();
		return ss.str();
	}
	return arg;
}

std::vector<uint64_t> range(uint64_t lo, uint64_t hi)
{
	if (lo > hi)
		throw UsageError("empty n range");
	std::vector<uint64_t> v(hi - lo + 1);
	std::iota(v.begin(), v.end(), lo);
	return v;
}

void write_csv_file(const std::string &path, const std::vector<BenchRecord> &records, bool timing)
{
	if (path.empty() || path == "-")
	{
		write_csv(std::cout, records, timing);
		return;
	}
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write " + path);
	write_csv(out, records, timing);
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Null-sequences in free nilpotent groups"};
	app.require_subcommand(1);

	int cls = 2;
	int chain = 0;
	int gens = 2;
	std::string out_path;
	auto *present = app.add_subcommand("present", "write a presentation");
	present->add_option("--class", cls)->required();
	auto *chain_opt = present->add_option("--chain", chain, "chain presentation on k letters");
	auto *gens_opt = present->add_option("--gens", gens, "filler presentation on m letters");
	chain_opt->excludes(gens_opt);
	present->add_option("--out", out_path)->required();

	uint64_t n = 2;
	std::string spec_text;
	std::string trace_path;
	auto *compress = app.add_subcommand("compress", "power compression z^(n^c) to its compressed form");
	compress->add_option("--class", cls)->required();
	compress->add_option("--n", n)->required()->check(CLI::Range(uint64_t{2}, uint64_t{1000}));
	compress->add_option("--spec", spec_text, "chain letters, e.g. \"x1 x2 x1\"");
	compress->add_option("--trace", trace_path)->required();

	std::string word_arg;
	auto *fill_cmd = app.add_subcommand("fill", "null-sequence for a word");
	fill_cmd->add_option("--class", cls)->required();
	fill_cmd->add_option("--gens", gens)->required();
	fill_cmd->add_option("--word", word_arg, "file or word text")->required();
	fill_cmd->add_option("--trace", trace_path)->required();

	std::string pres_path;
	auto *validate = app.add_subcommand("validate", "check a trace");
	validate->add_option("--trace", trace_path)->required();
	validate->add_option("--presentation", pres_path)->required();

	std::size_t count = 10;
	uint64_t seed = 1;
	auto *corpus = app.add_subcommand("corpus", "generate null-homotopic words");
	corpus->add_option("--class", cls)->required();
	corpus->add_option("--gens", gens)->required();
	corpus->add_option("--n", n)->required();
	corpus->add_option("--count", count)->required();
	corpus->add_option("--seed", seed)->required();

	auto *oracle = app.add_subcommand("oracle", "evaluate words in the free nilpotent group");
	oracle->require_subcommand(1);
	std::string oracle_word;
	auto *oeval = oracle->add_subcommand("eval", "print the truncated series");
	auto *ocheck = oracle->add_subcommand("check", "exit 0 when the word is the identity");
	for (auto *sub : {oeval, ocheck})
	{
		sub->add_option("--class", cls)->required();
		sub->add_option("--gens", gens, "letters of the filler presentation")->capture_default_str();
		sub->add_option("word", oracle_word)->required();
	}

	auto *bench = app.add_subcommand("bench", "benchmark grids");
	bench->require_subcommand(1);
	std::string csv_path;
	bool no_timing = false;
	uint64_t n_min = 2, n_max = 0;
	std::string trace_dir = "bench_traces";
	auto *bcomp = bench->add_subcommand("compression", "power compression grid");
	auto *bfill = bench->add_subcommand("fill", "filler grid");
	for (auto *sub : {bcomp, bfill})
	{
		sub->add_option("--class", cls)->required();
		sub->add_option("--csv", csv_path, "output file, - for stdout");
		sub->add_option("--n-min", n_min)->capture_default_str();
		sub->add_option("--n-max", n_max);
		sub->add_flag("--no-timing", no_timing, "write 0 seconds so reruns are byte-identical");
	}
	bcomp->add_option("--trace-dir", trace_dir)->capture_default_str();
	bfill->add_option("--gens", gens)->capture_default_str();
	bfill->add_option("--count", count)->capture_default_str();
	bfill->add_option("--seed", seed)->capture_default_str();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		int rc = app.exit(e);
		return rc == 0 ? 0 : 2;
	}

	try
	{
		if (*present)
		{
			Presentation p = chain_opt->count() ? build_chain_presentation(cls, chain) : build_filler_presentation(cls, gens);
			write_presentation_file(out_path, p);
			std::cout << "generators=" << p.generator_count() << " relators=" << p.relators().size() << "\n";
		}
		else if (*compress)
		{
			int k = 1;
			CommutatorSpec spec = chain_spec(cls);
			Presentation chain_p = build_chain_presentation(cls, 1);
			if (!spec_text.empty())
			{
				// letters x1..xk; the chain presentation on k letters holds every commutator
				std::istringstream ss(spec_text);
				std::vector<std::string> names;
				for (std::string t; ss >> t;)
					names.push_back(t);
				if (static_cast<int>(names.size()) != cls)
					throw UsageError("--spec needs exactly " + std::to_string(cls) + " letters");
				for (const std::string &name : names)
				{
					if (name.size() < 2 || name[0] != 'x')
						throw UsageError("spec letters are x1, x2, ...");
					k = std::max(k, std::stoi(name.substr(1)));
				}
				chain_p = build_chain_presentation(cls, k);
				spec.chain.clear();
				for (const std::string &name : names)
					spec.chain.push_back(parse_letter(name, chain_p));
			}
			auto p = std::make_shared<const Presentation>(std::move(chain_p));
			Compressor comp(spec, n, p);
			PowerCompression pc = comp.power_compression();
			const std::string pp = presentation_path_for(trace_path);
			write_presentation_file(pp, *p);
			write_trace_file(trace_path, null_closure(pc.sequence), pp);
			std::cout << metrics_line(pc.metrics) << " working_fl=" << pc.working_fl << "\n";
		}
		else if (*fill_cmd)
		{
			Filler filler(cls, gens);
			auto p = filler.presentation(cls);
			Word w = parse_word(read_word_arg(word_arg), *p);
			FillResult r = filler.fill(w);
			const std::string pp = presentation_path_for(trace_path);
			write_presentation_file(pp, *p);
			write_trace_file(trace_path, r.sequence, pp);
			std::cout << "length=" << w.size() << " " << metrics_line(r.metrics) << "\n";
		}
		else if (*validate)
		{
			ValidationOutcome v = validate_trace_file(trace_path, pres_path);
			std::cout << v.line << "\n";
			return v.ok ? 0 : 1;
		}
		else if (*corpus)
		{
			Presentation p = build_filler_presentation(cls, gens);
			for (const Word &w : corpus_generate(p, n, count, seed))
				std::cout << format_word(w, p) << "\n";
		}
		else if (*oracle)
		{
			Presentation p = build_filler_presentation(cls, gens);
			Oracle o(p, cls);
			Word w = parse_word(oracle_word, p);
			TruncatedSeries s = o.eval(w);
			if (*ocheck)
			{
				std::cout << (s.is_one() ? "identity" : "not identity") << "\n";
				return s.is_one() ? 0 : 1;
			}
			bool any = false;
			s.for_each_nonzero([&](const std::vector<int> &mono, const BigInt &coef) {
				if (mono.empty())
					return;
				any = true;
				std::cout << coef;
				for (int x : mono)
					std::cout << " X" << x + 1;
				std::cout << "\n";
			});
			if (!any)
				std::cout << "1\n";
		}
		else if (*bcomp)
		{
			if (n_max == 0)
				n_max = cls == 3 ? 5 : 10;
			CompressionBench b = bench_compression(cls, range(n_min, n_max), trace_dir);
			write_csv_file(csv_path, b.records, !no_timing);
			std::cerr << "max_fl_ratio=" << b.max_fl_ratio;
			if (b.fitted)
				std::cerr << " slope=" << b.fit.slope << " residual=" << b.fit.residual;
			std::cerr << "\n";
		}
		else if (*bfill)
		{
			if (n_max == 0)
				n_max = cls == 3 ? 16 : 40;
			std::vector<uint64_t> ns;
			for (uint64_t x = std::max<uint64_t>(n_min, 1); x <= n_max; x *= 2)
				ns.push_back(x);
			if (ns.empty() || ns.back() != n_max)
				ns.push_back(n_max);
			FillBench b = bench_fill(cls, gens, ns, count, seed);
			write_csv_file(csv_path, b.records, !no_timing);
			std::cerr << "lambda=" << b.certificate.lambda << " lambda_area=" << b.certificate.lambda_area
			          << " lambda_fl=" << b.certificate.lambda_fl << " max_register=" << b.max_register << "\n";
		}
	}
	catch (const UsageError &e)
	{
		std::cerr << "usage error: " << e.what() << "\n";
		return 2;
	}
	catch (const ParseError &e)
	{
		std::cerr << "parse error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
