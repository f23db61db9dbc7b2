#include "nilp/bench.hpp"

#include "nilp/parallel.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace nilp {

FitResult fit_exponent(const std::vector<std::pair<double, double>> &points)
{
	if (points.size() < 4)
		throw InsufficientData("fit needs at least 4 points");
	for (std::size_t i = 0; i < points.size(); ++i)
	{
		if (points[i].first <= 0 || points[i].second <= 0)
			throw InsufficientData("fit needs positive values");
		if (i > 0 && points[i].first <= points[i - 1].first)
			throw InsufficientData("fit needs strictly increasing x");
	}
	const double k = static_cast<double>(points.size());
	double sx = 0, sy = 0, sxx = 0, sxy = 0;
	for (auto [x, y] : points)
	{
		const double lx = std::log(x), ly = std::log(y);
		sx += lx;
		sy += ly;
		sxx += lx * lx;
		sxy += lx * ly;
	}
	FitResult f;
	f.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
	f.intercept = (sy - f.slope * sx) / k;
	double ss = 0;
	for (auto [x, y] : points)
	{
		const double e = std::log(y) - (f.intercept + f.slope * std::log(x));
		ss += e * e;
	}
	f.residual = std::sqrt(ss / k);
	f.n_min = points.front().first;
	f.n_max = points.back().first;
	return f;
}

namespace {

double since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

CompressionBench bench_compression(int c, const std::vector<uint64_t> &ns, const std::string &trace_dir)
{
	if (c < 1 || c > 3)
		throw std::invalid_argument("compression bench supports c in 1..3");
	namespace fs = std::filesystem;
	fs::create_directories(trace_dir);
	auto p = std::make_shared<const Presentation>(build_chain_presentation(c, 1));
	const std::string pres_path = (fs::path(trace_dir) / ("chain_c" + std::to_string(c) + ".pres")).string();
	write_presentation_file(pres_path, *p);

	CompressionBench out;
	std::vector<std::pair<double, double>> points;
	for (uint64_t n : ns)
	{
		const auto t0 = std::chrono::steady_clock::now();
		Compressor comp(chain_spec(c), n, p);
		PowerCompression pc = comp.power_compression();
		const double seconds = since(t0);

		const std::string path =
		    (fs::path(trace_dir) / ("compress_c" + std::to_string(c) + "_n" + std::to_string(n) + ".trace")).string();
		write_trace_file(path, null_closure(pc.sequence), pres_path);
		ValidationOutcome v = validate_trace_file(path, pres_path);
		if (!v.ok)
			throw std::runtime_error("trace " + path + " failed validation: " + v.line);

		BenchRecord r;
		r.c = c;
		r.n = n;
		r.op = "compress";
		r.len_initial = pc.sequence.initial.size();
		r.area = v.metrics.area;
		r.fl = v.metrics.fl;
		r.height = v.metrics.height;
		r.seconds = seconds;
		out.records.push_back(r);
		out.max_fl_ratio = std::max(out.max_fl_ratio, static_cast<double>(pc.working_fl) / static_cast<double>(n));
		if (r.area > 0)
			points.emplace_back(static_cast<double>(n), static_cast<double>(r.area));
	}
	if (points.size() >= 4)
	{
		out.fit = fit_exponent(points);
		out.fitted = true;
	}
	return out;
}

FillBench bench_fill(int c, int m, const std::vector<uint64_t> &ns, std::size_t corpus_size, uint64_t seed)
{
	Filler filler(c, m);
	const Presentation &p = *filler.presentation(c);
	FillBench out;
	std::vector<std::pair<std::size_t, Metrics>> results;
	for (uint64_t n : ns)
	{
		std::vector<Word> words = corpus_generate(p, n, corpus_size, seed + n);
		const auto t0 = std::chrono::steady_clock::now();
		std::vector<FillResult> filled = fill_corpus(c, m, words);
		const double seconds = since(t0) / static_cast<double>(std::max<std::size_t>(1, words.size()));
		for (std::size_t i = 0; i < words.size(); ++i)
		{
			Metrics mt = validate_null(filled[i].sequence);
			BenchRecord r;
			r.c = c;
			r.n = n;
			r.op = "fill";
			r.len_initial = words[i].size();
			r.area = mt.area;
			r.fl = mt.fl;
			r.height = mt.height;
			r.seconds = seconds;
			out.records.push_back(r);
			results.emplace_back(words[i].size(), mt);
			for (const LevelStats &lv : filled[i].levels)
				out.max_register = std::max(out.max_register, lv.max_register);
		}
	}
	out.certificate = certify_afl_pair(results, c);
	return out;
}

void write_csv(std::ostream &out, const std::vector<BenchRecord> &records, bool timing)
{
	out << "c,n,op,len_initial,area,fl,height,seconds\n";
	for (const BenchRecord &r : records)
		out << r.c << ',' << r.n << ',' << r.op << ',' << r.len_initial << ',' << r.area << ',' << r.fl << ','
		    << r.height << ',' << (timing ? r.seconds : 0.0) << '\n';
}

} // namespace nilp
