#include "nilp/bench.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

using namespace nilp;

TEST(Fit, ExactPowers)
{
	std::vector<std::pair<double, double>> cubic, linear;
	for (double n = 2; n <= 10; ++n)
	{
		cubic.emplace_back(n, n * n * n);
		linear.emplace_back(n, 7 * n);
	}
	FitResult c = fit_exponent(cubic);
	EXPECT_NEAR(c.slope, 3.0, 1e-9);
	EXPECT_NEAR(c.residual, 0.0, 1e-9);
	EXPECT_NEAR(fit_exponent(linear).slope, 1.0, 1e-9);
	EXPECT_NEAR(fit_exponent(linear).intercept, std::log(7.0), 1e-9);
}

TEST(Fit, PerturbedCubic)
{
	std::mt19937_64 rng(17);
	std::uniform_real_distribution<double> noise(-0.05, 0.05);
	for (int t = 0; t < 50; ++t)
	{
		std::vector<std::pair<double, double>> pts;
		for (double n = 2; n <= 10; ++n)
			pts.emplace_back(n, n * n * n * (1 + noise(rng)));
		double s = fit_exponent(pts).slope;
		EXPECT_GE(s, 2.9);
		EXPECT_LE(s, 3.1);
	}
}

TEST(Fit, InsufficientData)
{
	EXPECT_THROW(fit_exponent({{1, 1}, {2, 8}, {3, 27}}), InsufficientData);
	EXPECT_THROW(fit_exponent({{1, 1}, {2, 8}, {2, 27}, {4, 64}}), InsufficientData);
	EXPECT_THROW(fit_exponent({{1, 1}, {2, 0}, {3, 27}, {4, 64}}), InsufficientData);
}

TEST(BenchCompression, AbelianChainHasNoArea)
{
	auto dir = std::filesystem::temp_directory_path() / "nilp_bench_c1";
	CompressionBench b = bench_compression(1, {2, 3, 4, 5}, dir.string());
	for (const BenchRecord &r : b.records)
		EXPECT_EQ(r.area, 0u);
	EXPECT_FALSE(b.fitted);
}

TEST(BenchCompression, ClassTwoSlope)
{
	auto dir = std::filesystem::temp_directory_path() / "nilp_bench_c2";
	CompressionBench b = bench_compression(2, {2, 3, 4, 5, 6, 7, 8, 9, 10}, dir.string());
	ASSERT_TRUE(b.fitted);
	EXPECT_GE(b.fit.slope, 2.6);
	EXPECT_LE(b.fit.slope, 3.2);
	EXPECT_EQ(b.records.back().area, 2200u);
	for (const BenchRecord &r : b.records)
		EXPECT_LE(r.area, r.height);
}

TEST(BenchFill, CsvIsDeterministic)
{
	FillBench a = bench_fill(2, 2, {8, 16}, 20, 3);
	FillBench b = bench_fill(2, 2, {8, 16}, 20, 3);
	std::ostringstream sa, sb;
	write_csv(sa, a.records, false);
	write_csv(sb, b.records, false);
	EXPECT_EQ(sa.str(), sb.str());
	EXPECT_EQ(sa.str().rfind("c,n,op,len_initial,area,fl,height,seconds\n", 0), 0u);
	EXPECT_EQ(a.records.size(), 40u);
	EXPECT_GT(a.certificate.lambda, 0);
}

TEST(BenchFill, AbelianLambda)
{
	FillBench b = bench_fill(1, 2, {8, 16, 32}, 30, 5);
	for (const BenchRecord &r : b.records)
		EXPECT_LE(r.area, r.len_initial * r.len_initial);
	EXPECT_LE(b.certificate.lambda_area, 1.0);
}
