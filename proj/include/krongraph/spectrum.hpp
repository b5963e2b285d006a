#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "krongraph/generator_matrix.hpp"

namespace krongraph {

// Multiplicities are exact: 4^l overflows 64 bits for l > 31.
using BigInt = boost::multiprecision::cpp_int;

enum class ModelKind { skg, cl };

inline constexpr int kMaxSpectrumLevels = 40;

// One (z_i, z_j, c_z) class of the SKG matrix, or a (z_i, z_j) class of the
// CL matrix (common_zeros = -1 there).
struct SpectrumClass {
  int source_zeros = 0;
  int sink_zeros = 0;
  int common_zeros = -1;
  double value = 0.0;
  double log_value = 0.0;
  BigInt multiplicity;
};

// A distinct matrix value with its exact multiplicity. The label is the
// class the value came from (first contributor when classes merged).
struct SpectrumEntry {
  double value = 0.0;
  double log_value = 0.0;
  BigInt multiplicity;
  int source_zeros = 0;
  int sink_zeros = 0;
  int common_zeros = -1;
};

struct ValueSpectrum {
  ModelKind model = ModelKind::skg;
  int levels = 0;
  std::vector<SpectrumEntry> entries;   // values sorted descending
  std::vector<SpectrumClass> classes;   // per-class breakdown, unmerged

  BigInt total_multiplicity() const;
  double total_mass() const;  // sum of value * multiplicity
};

// One entry per feasible (z_i, z_j, c_z); multiplicity is the multinomial
// l! / (c_z! (z_i-c_z)! (z_j-c_z)! (l-z_i-z_j+c_z)!). Throws
// InvalidParamsError when levels is outside [1, kMaxSpectrumLevels].
ValueSpectrum skg_spectrum(const GeneratorMatrix& t, int levels);

// One class per (z_i, z_j) with multiplicity C(l, z_i) * C(l, z_j); at most
// (l+1)^2 classes before merging.
ValueSpectrum cl_spectrum(const GeneratorMatrix& t, int levels);

// Sum of value * multiplicity over entries with value < threshold.
double mass_below(const ValueSpectrum& spectrum, double threshold);

// Max over all (z_i, z_j, c_z) classes of |SKG value - CL value|; O(l^3)
// closed-form evaluations, never n^2.
double theorem_gap(const GeneratorMatrix& t, int levels);

struct BinRow {
  double bin_value = 0.0;    // the distinct CL value owning this bin
  BigInt cl_multiplicity;
  BigInt skg_count;          // SKG entries assigned here by nearest value
  double cl_mass = 0.0;
  double skg_mass = 0.0;
};

struct BinReport {
  int levels = 0;
  std::vector<BinRow> bins;  // ordered by descending bin value
  BigInt skg_total_count;
  double skg_total_mass = 0.0;
  double cl_total_mass = 0.0;
};

// Assigns every SKG value to the CL bin minimizing |v - bin|; equidistant
// ties go to the larger bin value. Throws MismatchedLevelsError when the two
// spectra disagree on l.
BinReport bin_skg_into_cl(const ValueSpectrum& skg, const ValueSpectrum& cl);

}  // namespace krongraph
