#pragma once

#include "nilp/filler.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilp {

class InsufficientData : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

struct BenchRecord {
	int c = 0;
	uint64_t n = 0;
	std::string op;
	std::size_t len_initial = 0;
	std::size_t area = 0;
	std::size_t fl = 0;
	std::size_t height = 0;
	double seconds = 0;
};

struct FitResult {
	double slope = 0;
	double intercept = 0;
	double residual = 0; // root mean square, log scale
	double n_min = 0;
	double n_max = 0;
};

/// Least squares on (log x, log y); needs >= 4 points, x strictly increasing.
FitResult fit_exponent(const std::vector<std::pair<double, double>> &points);

struct CompressionBench {
	std::vector<BenchRecord> records;
	FitResult fit;
	bool fitted = false;
	/// max over the grid of working FL / n
	double max_fl_ratio = 0;
};

/// Power compression on the chain presentation for each n. Each trace is
/// written under `trace_dir` and validated again from the file.
CompressionBench bench_compression(int c, const std::vector<uint64_t> &ns, const std::string &trace_dir);

struct FillBench {
	std::vector<BenchRecord> records;
	AflCertificate certificate;
	uint64_t max_register = 0;
};

FillBench bench_fill(int c, int m, const std::vector<uint64_t> &ns, std::size_t corpus_size, uint64_t seed);

/// CSV with header c,n,op,len_initial,area,fl,height,seconds; seconds are
/// written as 0 when timing is off.
void write_csv(std::ostream &out, const std::vector<BenchRecord> &records, bool timing = true);

} // namespace nilp
