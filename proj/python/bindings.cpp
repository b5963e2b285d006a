#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <utility>
#include <vector>

#include "krongraph/chung_lu.hpp"
#include "krongraph/commands.hpp"
#include "krongraph/edge_io.hpp"
#include "krongraph/eigenvalues.hpp"
#include "krongraph/errors.hpp"
#include "krongraph/graph.hpp"
#include "krongraph/metrics.hpp"
#include "krongraph/presets.hpp"
#include "krongraph/raster.hpp"
#include "krongraph/skg.hpp"
#include "krongraph/spectrum.hpp"

namespace py = pybind11;
using namespace krongraph;

namespace {

using PyEdge = std::pair<VertexId, VertexId>;

EdgeList to_edges(const std::vector<PyEdge>& pairs) {
  EdgeList edges;
  edges.reserve(pairs.size());
  for (const PyEdge& e : pairs) edges.push_back(Edge{e.first, e.second});
  return edges;
}

std::vector<PyEdge> from_edges(const EdgeList& edges) {
  std::vector<PyEdge> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.source, e.sink);
  return pairs;
}

py::object big_int(const BigInt& value) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

GenerateOptions options_from(std::uint64_t chunk_size, int threads) {
  GenerateOptions options;
  options.chunk_size = chunk_size;
  options.threads = threads;
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stochastic Kronecker and Chung-Lu graph models, metrics, and "
            "probability-matrix spectra";
  m.attr("__version__") = kToolVersion;

  py::class_<GeneratorMatrix>(m, "GeneratorMatrix")
      .def(py::init([](double t1, double t2, double t3, double t4) {
             return validate_generator(t1, t2, t3, t4);
           }),
           py::arg("t1"), py::arg("t2"), py::arg("t3"), py::arg("t4"))
      .def_readonly("t1", &GeneratorMatrix::t1)
      .def_readonly("t2", &GeneratorMatrix::t2)
      .def_readonly("t3", &GeneratorMatrix::t3)
      .def_readonly("t4", &GeneratorMatrix::t4)
      .def("__repr__", [](const GeneratorMatrix& t) {
        return "GeneratorMatrix(" + format_double(t.t1) + ", " + format_double(t.t2) + ", " +
               format_double(t.t3) + ", " + format_double(t.t4) + ")";
      });

  m.def("validate_generator", &validate_generator, py::arg("t1"), py::arg("t2"), py::arg("t3"),
        py::arg("t4"));
  m.def("check_ratio_condition", &check_ratio_condition, py::arg("t"), py::arg("tol"));

  py::class_<Preset>(m, "Preset")
      .def_readonly("name", &Preset::name)
      .def_readonly("generator", &Preset::generator)
      .def_readonly("default_levels", &Preset::default_levels)
      .def_readonly("listed_levels", &Preset::listed_levels)
      .def_readonly("noise", &Preset::noise)
      .def("edge_count", &preset_edge_count, py::arg("levels"));
  m.def("presets", [] { return builtin_presets(); });

  m.def("skg_entry", &skg_entry, py::arg("t"), py::arg("levels"), py::arg("i"), py::arg("j"));
  m.def(
      "cl_entry_closed",
      [](const GeneratorMatrix& t, int levels, VertexId i, VertexId j) {
        return ClEntryEvaluator(t, levels)(i, j);
      },
      py::arg("t"), py::arg("levels"), py::arg("i"), py::arg("j"));

  py::class_<DegreeSequence>(m, "DegreeSequence")
      .def_readonly("out_weights", &DegreeSequence::out_weights)
      .def_readonly("in_weights", &DegreeSequence::in_weights)
      .def_readonly("total", &DegreeSequence::total);
  m.def("expected_degrees", &expected_degrees, py::arg("t"), py::arg("levels"), py::arg("edges"));
  m.def("associated_cl", &associated_cl, py::arg("t"), py::arg("levels"), py::arg("edges"));
  m.def("cl_entry", &cl_entry, py::arg("degrees"), py::arg("i"), py::arg("j"));

  m.def(
      "generate_skg",
      [](const GeneratorMatrix& t, int levels, std::uint64_t edges, std::uint64_t seed,
         std::uint64_t chunk_size, int threads) {
        return from_edges(generate_skg(make_skg_params(t, levels, edges), seed,
                                       options_from(chunk_size, threads)));
      },
      py::arg("t"), py::arg("levels"), py::arg("edges"), py::arg("seed") = 1,
      py::arg("chunk_size") = std::uint64_t{1} << 16, py::arg("threads") = 1);
  m.def(
      "generate_nskg",
      [](const GeneratorMatrix& t, int levels, std::uint64_t edges, double noise,
         std::uint64_t seed, std::uint64_t chunk_size, int threads) {
        auto [schedule, generated] = generate_nskg(make_skg_params(t, levels, edges), noise, seed,
                                                   options_from(chunk_size, threads));
        return py::make_tuple(schedule.per_level, from_edges(generated));
      },
      py::arg("t"), py::arg("levels"), py::arg("edges"), py::arg("noise"), py::arg("seed") = 1,
      py::arg("chunk_size") = std::uint64_t{1} << 16, py::arg("threads") = 1);
  m.def(
      "generate_cl",
      [](const DegreeSequence& degrees, std::uint64_t edges, std::uint64_t seed,
         std::uint64_t chunk_size, int threads) {
        return from_edges(generate_cl(degrees, edges, seed, options_from(chunk_size, threads)));
      },
      py::arg("degrees"), py::arg("edges"), py::arg("seed") = 1,
      py::arg("chunk_size") = std::uint64_t{1} << 16, py::arg("threads") = 1);

  py::class_<Graph>(m, "Graph")
      .def_readonly("n", &Graph::n)
      .def_readonly("edge_count", &Graph::edge_count)
      .def_readonly("self_loops_dropped", &Graph::self_loops_dropped)
      .def_readonly("duplicates_dropped", &Graph::duplicates_dropped)
      .def(
          "degree", [](const Graph& g, VertexId v) { return g.degree(v); }, py::arg("v"))
      .def(
          "neighbors",
          [](const Graph& g, VertexId v) {
            const auto span = g.neighbors(v);
            return std::vector<VertexId>(span.begin(), span.end());
          },
          py::arg("v"));
  m.def(
      "symmetrize",
      [](const std::vector<PyEdge>& edges, VertexId n) { return symmetrize(to_edges(edges), n); },
      py::arg("edges"), py::arg("n"));
  m.def("observed_degrees", &observed_degrees, py::arg("graph"));

  m.def("degree_distribution", &degree_distribution, py::arg("graph"));
  m.def(
      "clustering_by_degree",
      [](const Graph& g) {
        py::dict result;
        for (const auto& [d, cls] : clustering_by_degree(g)) {
          result[py::cast(d)] = py::make_tuple(cls.mean_cc, cls.vertex_count);
        }
        return result;
      },
      py::arg("graph"));
  m.def("assortativity_profile", &assortativity_profile, py::arg("graph"));
  m.def(
      "core_decomposition",
      [](const Graph& g) {
        const CoreDecomposition cores = core_decomposition(g);
        return py::make_tuple(cores.core_numbers, cores.core_sizes);
      },
      py::arg("graph"));
  m.def(
      "top_eigenvalues",
      [](const Graph& g, int k, std::uint64_t seed) {
        EigenOptions options;
        options.seed = seed;
        return top_eigenvalues(g, k, options);
      },
      py::arg("graph"), py::arg("k"), py::arg("seed") = 0);

  py::class_<ValueSpectrum>(m, "ValueSpectrum")
      .def_property_readonly("levels", [](const ValueSpectrum& s) { return s.levels; })
      .def_property_readonly(
          "model",
          [](const ValueSpectrum& s) { return s.model == ModelKind::skg ? "skg" : "cl"; })
      .def("entries",
           [](const ValueSpectrum& s) {
             py::list rows;
             for (const SpectrumEntry& e : s.entries) {
               rows.append(py::make_tuple(
                   e.value, big_int(e.multiplicity),
                   py::make_tuple(e.source_zeros, e.sink_zeros, e.common_zeros)));
             }
             return rows;
           })
      .def("total_multiplicity",
           [](const ValueSpectrum& s) { return big_int(s.total_multiplicity()); })
      .def("total_mass", &ValueSpectrum::total_mass);
  m.def("skg_spectrum", &skg_spectrum, py::arg("t"), py::arg("levels"));
  m.def("cl_spectrum", &cl_spectrum, py::arg("t"), py::arg("levels"));
  m.def("mass_below", &mass_below, py::arg("spectrum"), py::arg("threshold"));
  m.def("theorem_gap", &theorem_gap, py::arg("t"), py::arg("levels"));
  m.def(
      "bin_skg_into_cl",
      [](const ValueSpectrum& skg, const ValueSpectrum& cl) {
        const BinReport report = bin_skg_into_cl(skg, cl);
        py::list rows;
        for (const BinRow& row : report.bins) {
          rows.append(py::make_tuple(row.bin_value, big_int(row.cl_multiplicity),
                                     big_int(row.skg_count), row.cl_mass, row.skg_mass));
        }
        return rows;
      },
      py::arg("skg"), py::arg("cl"));

  m.def(
      "spy_raster",
      [](const std::vector<PyEdge>& edges, VertexId n, std::uint64_t resolution) {
        return spy_raster(to_edges(edges), n, resolution);
      },
      py::arg("edges"), py::arg("n"), py::arg("resolution"));

  m.def(
      "parse_edge_list",
      [](const std::filesystem::path& path) {
        const ParsedEdgeList parsed = parse_edge_list_file(path);
        return py::make_tuple(from_edges(parsed.edges), parsed.vertex_count);
      },
      py::arg("path"));

  py::register_exception<Error>(m, "KrongraphError", PyExc_ValueError);
}
