#include "krongraph/spectrum.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "krongraph/chung_lu.hpp"
#include "krongraph/errors.hpp"
#include "krongraph/skg.hpp"

namespace krongraph {

namespace {

void check_levels(int levels) {
  if (levels < 1 || levels > kMaxSpectrumLevels) {
    throw InvalidParamsError("spectrum levels must be in [1, " +
                             std::to_string(kMaxSpectrumLevels) + "], got " +
                             std::to_string(levels));
  }
}

std::vector<BigInt> factorial_table(int levels) {
  std::vector<BigInt> fact(static_cast<std::size_t>(levels) + 1);
  fact[0] = 1;
  for (int k = 1; k <= levels; ++k) fact[k] = fact[k - 1] * k;
  return fact;
}

// Two spectrum values are "the same" when they agree to 1e-15 relative; the
// comparison moves to log space once the values leave the normal double
// range, so classes that only underflow to equal doubles stay distinct.
bool values_equal(double va, double la, double vb, double lb) {
  if (std::isinf(la) || std::isinf(lb)) return la == lb;  // exact zeros
  if (va >= DBL_MIN && vb >= DBL_MIN) {
    return va == vb || std::abs(va - vb) <= 1e-15 * std::max(va, vb);
  }
  return std::abs(la - lb) <= 1e-15;
}

ValueSpectrum finalize(ModelKind model, int levels, std::vector<SpectrumClass> classes) {
  ValueSpectrum spectrum;
  spectrum.model = model;
  spectrum.levels = levels;

  std::vector<std::size_t> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (classes[a].log_value != classes[b].log_value)
      return classes[a].log_value > classes[b].log_value;
    if (classes[a].source_zeros != classes[b].source_zeros)
      return classes[a].source_zeros < classes[b].source_zeros;
    if (classes[a].sink_zeros != classes[b].sink_zeros)
      return classes[a].sink_zeros < classes[b].sink_zeros;
    return classes[a].common_zeros < classes[b].common_zeros;
  });

  for (std::size_t idx : order) {
    const SpectrumClass& c = classes[idx];
    if (!spectrum.entries.empty()) {
      SpectrumEntry& last = spectrum.entries.back();
      if (values_equal(last.value, last.log_value, c.value, c.log_value)) {
        last.multiplicity += c.multiplicity;
        continue;
      }
    }
    spectrum.entries.push_back(SpectrumEntry{c.value, c.log_value, c.multiplicity, c.source_zeros,
                                             c.sink_zeros, c.common_zeros});
  }
  spectrum.classes = std::move(classes);
  return spectrum;
}

}  // namespace

BigInt ValueSpectrum::total_multiplicity() const {
  BigInt total = 0;
  for (const SpectrumEntry& e : entries) total += e.multiplicity;
  return total;
}

double ValueSpectrum::total_mass() const {
  double mass = 0.0;
  // Ascending values so the tiny terms accumulate first.
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    mass += it->value * it->multiplicity.convert_to<double>();
  }
  return mass;
}

ValueSpectrum skg_spectrum(const GeneratorMatrix& t, int levels) {
  check_levels(levels);
  const SkgEntryEvaluator entry(t, levels);
  const std::vector<BigInt> fact = factorial_table(levels);

  std::vector<SpectrumClass> classes;
  for (int zi = 0; zi <= levels; ++zi) {
    for (int zj = 0; zj <= levels; ++zj) {
      const int cz_min = std::max(0, zi + zj - levels);
      const int cz_max = std::min(zi, zj);
      for (int cz = cz_min; cz <= cz_max; ++cz) {
        const BitProfile profile{zi, zj, cz};
        SpectrumClass c;
        c.source_zeros = zi;
        c.sink_zeros = zj;
        c.common_zeros = cz;
        c.value = entry.class_value(profile);
        c.log_value = entry.class_log_value(profile);
        c.multiplicity =
            fact[levels] / (fact[cz] * fact[zi - cz] * fact[zj - cz] * fact[levels - zi - zj + cz]);
        classes.push_back(std::move(c));
      }
    }
  }
  return finalize(ModelKind::skg, levels, std::move(classes));
}

ValueSpectrum cl_spectrum(const GeneratorMatrix& t, int levels) {
  check_levels(levels);
  const ClEntryEvaluator entry(t, levels);
  const std::vector<BigInt> fact = factorial_table(levels);
  auto choose = [&](int k) { return fact[levels] / (fact[k] * fact[levels - k]); };

  std::vector<SpectrumClass> classes;
  for (int zi = 0; zi <= levels; ++zi) {
    for (int zj = 0; zj <= levels; ++zj) {
      SpectrumClass c;
      c.source_zeros = zi;
      c.sink_zeros = zj;
      c.common_zeros = -1;
      c.value = entry.class_value(zi, zj);
      c.log_value = entry.class_log_value(zi, zj);
      c.multiplicity = choose(zi) * choose(zj);
      classes.push_back(std::move(c));
    }
  }
  return finalize(ModelKind::cl, levels, std::move(classes));
}

double mass_below(const ValueSpectrum& spectrum, double threshold) {
  double mass = 0.0;
  for (auto it = spectrum.entries.rbegin(); it != spectrum.entries.rend(); ++it) {
    if (it->value >= threshold) break;  // entries are sorted descending
    mass += it->value * it->multiplicity.convert_to<double>();
  }
  return mass;
}

double theorem_gap(const GeneratorMatrix& t, int levels) {
  check_levels(levels);
  const SkgEntryEvaluator skg(t, levels);
  const ClEntryEvaluator cl(t, levels);
  double gap = 0.0;
  for (int zi = 0; zi <= levels; ++zi) {
    for (int zj = 0; zj <= levels; ++zj) {
      const double cl_value = cl.class_value(zi, zj);
      const int cz_min = std::max(0, zi + zj - levels);
      const int cz_max = std::min(zi, zj);
      for (int cz = cz_min; cz <= cz_max; ++cz) {
        gap = std::max(gap, std::abs(skg.class_value(BitProfile{zi, zj, cz}) - cl_value));
      }
    }
  }
  return gap;
}

BinReport bin_skg_into_cl(const ValueSpectrum& skg, const ValueSpectrum& cl) {
  if (skg.levels != cl.levels) {
    throw MismatchedLevelsError("spectra disagree on levels: " + std::to_string(skg.levels) +
                                " vs " + std::to_string(cl.levels));
  }
  BinReport report;
  report.levels = skg.levels;
  report.bins.reserve(cl.entries.size());
  for (const SpectrumEntry& e : cl.entries) {
    BinRow row;
    row.bin_value = e.value;
    row.cl_multiplicity = e.multiplicity;
    row.cl_mass = e.value * e.multiplicity.convert_to<double>();
    report.bins.push_back(std::move(row));
  }

  // Nearest-bin lookup over the ascending view; equidistant ties resolve
  // toward the larger bin value.
  const std::size_t bin_count = report.bins.size();
  std::vector<double> ascending(bin_count);
  for (std::size_t i = 0; i < bin_count; ++i) {
    ascending[i] = report.bins[bin_count - 1 - i].bin_value;
  }
  for (const SpectrumEntry& e : skg.entries) {
    const std::size_t up =
        std::lower_bound(ascending.begin(), ascending.end(), e.value) - ascending.begin();
    std::size_t pick;
    if (up == bin_count) {
      pick = bin_count - 1;
    } else if (up == 0) {
      pick = 0;
    } else {
      const double d_up = ascending[up] - e.value;
      const double d_down = e.value - ascending[up - 1];
      pick = d_up <= d_down ? up : up - 1;
    }
    BinRow& bin = report.bins[bin_count - 1 - pick];
    bin.skg_count += e.multiplicity;
    bin.skg_mass += e.value * e.multiplicity.convert_to<double>();
  }

  for (const BinRow& row : report.bins) {
    report.skg_total_count += row.skg_count;
    report.skg_total_mass += row.skg_mass;
    report.cl_total_mass += row.cl_mass;
  }
  return report;
}

}  // namespace krongraph
