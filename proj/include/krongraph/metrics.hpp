#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "krongraph/graph.hpp"

namespace krongraph {

struct ClusteringClass {
  double mean_cc = 0.0;
  std::uint64_t vertex_count = 0;  // degree >= 2 vertices in the class
};

struct CoreDecomposition {
  std::vector<std::uint64_t> core_numbers;       // per vertex
  std::map<std::uint64_t, std::uint64_t> core_sizes;  // k -> |k-core|, k = 1..max
};

// Exact counts per degree, isolated vertices included at degree 0.
std::map<std::uint64_t, std::uint64_t> degree_distribution(const Graph& g);

// Mean over degree-d vertices of 2*triangles/(d*(d-1)); vertices of degree
// < 2 are excluded (undefined wedge count).
std::map<std::uint64_t, ClusteringClass> clustering_by_degree(const Graph& g);

// X_d: mean over degree-d vertices of the mean neighbor degree; degree-0
// vertices excluded.
std::map<std::uint64_t, double> assortativity_profile(const Graph& g);

// Bucket peeling in O(n + m).
CoreDecomposition core_decomposition(const Graph& g);

struct MetricReport {
  std::map<std::uint64_t, std::uint64_t> degree_histogram;
  std::map<std::uint64_t, ClusteringClass> clustering;
  std::vector<double> top_eigenvalues;
  std::map<std::uint64_t, double> assortativity;
  CoreDecomposition cores;
};

struct ComparisonSummary {
  std::map<std::uint64_t, double> cc_gaps;      // shared degrees only
  double max_cc_gap = 0.0;
  std::vector<double> eigenvalue_rel_gaps;      // per shared rank
  double max_eigenvalue_rel_gap = 0.0;
  double max_core_size_rel_gap = 0.0;           // over shared k
  double degree_tv_distance = 0.0;              // histograms normalized per graph
};

ComparisonSummary compare_reports(const MetricReport& a, const MetricReport& b);

// Max clustering gap restricted to degrees whose class holds at least
// min_class_size vertices in both reports.
double max_clustering_gap(const MetricReport& a, const MetricReport& b,
                          std::uint64_t min_class_size);

}  // namespace krongraph
