#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sylvan/approx.hpp"
#include "sylvan/atlas.hpp"
#include "sylvan/campaign.hpp"
#include "sylvan/canonical.hpp"
#include "sylvan/enumerate.hpp"
#include "sylvan/errors.hpp"
#include "sylvan/factors.hpp"
#include "sylvan/hcoloring.hpp"
#include "sylvan/io.hpp"
#include "sylvan/s4.hpp"
#include "sylvan/structure.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace sylvan;

namespace {

GraphClass parse_class(const std::string& s) {
  if (s == "simple") return GraphClass::kSimple;
  if (s == "multi" || s == "multigraph") return GraphClass::kMultigraph;
  if (s == "pseudo" || s == "pseudograph") return GraphClass::kPseudograph;
  throw PreconditionError("unknown graph class: " + s);
}

AtlasName parse_name(const std::string& s) {
  const auto n = parse_atlas_name(s);
  if (!n) throw PreconditionError("unknown atlas graph: " + s);
  return *n;
}

std::shared_ptr<const PseudoGraph> share(const PseudoGraph& g) { return std::make_shared<const PseudoGraph>(g); }

// Assignment as a list: an int per ordinary edge, a pair per loop.
py::list images_to_py(const EdgeMapping& f) {
  py::list out;
  for (const EdgeRecord& e : f.target->edges()) {
    const auto& img = f.images[static_cast<std::size_t>(e.id)];
    if (e.is_loop()) {
      out.append(py::make_tuple(img[0], img[1]));
    } else {
      out.append(img[0]);
    }
  }
  return out;
}

EdgeMapping mapping_from_py(const PseudoGraph& target, const PseudoGraph& host, const py::sequence& images) {
  EdgeMapping f = EdgeMapping::blank(share(target), share(host));
  if (py::len(images) != static_cast<std::size_t>(target.edge_count())) {
    throw PreconditionError("need one image per target edge");
  }
  for (EdgeId e = 0; e < target.edge_count(); ++e) {
    const py::handle item = images[static_cast<std::size_t>(e)];
    auto& img = f.images[static_cast<std::size_t>(e)];
    if (target.edge(e).is_loop()) {
      const auto pair = item.cast<std::pair<EdgeId, EdgeId>>();
      img = {std::min(pair.first, pair.second), std::max(pair.first, pair.second)};
    } else {
      img[0] = item.cast<EdgeId>();
    }
  }
  return f;
}

py::dict report_to_py(const SatisfactionReport& r) {
  py::list failures;
  for (const VertexFailure& f : r.failures) failures.append(py::dict("vertex"_a = f.vertex, "seen"_a = f.seen));
  return py::dict("satisfied"_a = r.satisfied, "failures"_a = failures, "complete"_a = r.complete());
}

}  // namespace

PYBIND11_MODULE(_sylvan, m) {
  m.doc() = "H-colourings of cubic graphs";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<PseudoGraph>(m, "Graph")
      .def(py::init<int>(), "n"_a = 0)
      .def(py::init([](int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
             return PseudoGraph(n, edges);
           }),
           "n"_a, "edges"_a)
      .def("add_edge", [](PseudoGraph& g, VertexId u, VertexId v) {
        if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw py::index_error("vertex out of range");
        return g.add_edge(u, v);
      })
      .def_property_readonly("n", &PseudoGraph::vertex_count)
      .def_property_readonly("m", &PseudoGraph::edge_count)
      .def_property_readonly("edges", [](const PseudoGraph& g) {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (const EdgeRecord& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def_property_readonly("graph_class", [](const PseudoGraph& g) { return std::string(to_string(g.graph_class())); })
      .def("is_cubic", [](const PseudoGraph& g) { return is_cubic(g); })
      .def("is_connected", [](const PseudoGraph& g) { return is_connected(g); })
      .def("bridges", [](const PseudoGraph& g) { return bridges(g); })
      .def("__eq__", [](const PseudoGraph& a, const PseudoGraph& b) { return a == b; })
      .def("__repr__", [](const PseudoGraph& g) { return "Graph(" + write_pgf(g) + ")"; });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("parse_sparse6", [](const std::string& s) { return parse_sparse6(s); });
  m.def("parse_pgf", [](const std::string& s) { return parse_pgf(s); });
  m.def("write_graph6", &write_graph6);
  m.def("write_sparse6", &write_sparse6);
  m.def("write_pgf", &write_pgf);

  m.def("atlas", [](const std::string& name) { return atlas(parse_name(name)).graph; }, "name"_a);
  m.def("atlas_labels", [](const std::string& name) { return atlas(parse_name(name)).edge_labels; }, "name"_a);
  m.def("atlas_names", [] {
    std::vector<std::string> out;
    for (AtlasName n : all_atlas_names()) out.emplace_back(to_string(n));
    return out;
  });

  m.def("canonical_code", [](const PseudoGraph& g) {
    const CanonicalCode c = canonical_code(g);
    return py::bytes(reinterpret_cast<const char*>(c.data()), c.size());
  });
  m.def("is_isomorphic", &is_isomorphic);
  m.def("automorphism_count", [](const PseudoGraph& g) { return automorphisms(g).size(); });

  m.def("enumerate_cubic",
        [](int n, const std::string& cls) {
          py::gil_scoped_release release;
          return enumerate_cubic(n, parse_class(cls));
        },
        "n"_a, "graph_class"_a = "simple");

  m.def("perfect_matching", [](const PseudoGraph& g) -> std::optional<std::vector<EdgeId>> {
    auto f = find_1_factor(g);
    if (!f) return std::nullopt;
    return f->edges;
  });
  m.def("chromatic_index", [](const PseudoGraph& g) { return chromatic_index_cubic(g).value; });

  m.def(
      "find_h_coloring",
      [](const PseudoGraph& target, const PseudoGraph& host, bool count, std::uint64_t budget, bool symmetry) {
        SearchOptions o;
        o.mode = count ? SearchMode::kCount : SearchMode::kFirst;
        o.node_budget = budget;
        o.break_symmetry = symmetry;
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = search_h_colorings(target, host, o);
        }
        py::dict out("status"_a = to_string(r.status), "nodes"_a = r.nodes);
        out["mapping"] = r.mapping ? py::object(images_to_py(*r.mapping)) : py::none();
        if (count) out["solutions"] = r.solution_count;
        return out;
      },
      "target"_a, "host"_a, "count"_a = false, "budget"_a = 0, "symmetry"_a = false);

  m.def(
      "check_h_coloring",
      [](const PseudoGraph& target, const PseudoGraph& host, const py::sequence& images) {
        return report_to_py(satisfaction(mapping_from_py(target, host, images)));
      },
      "target"_a, "host"_a, "images"_a);

  m.def("s4_color", [](const PseudoGraph& g) {
    S4Stats st;
    const S4Coloring c = s4_color(g, &st);
    py::list colours;
    for (const auto& cs : c.colours) {
      py::list names;
      for (S4Color x : cs) names.append(to_string(x));
      colours.append(cs.size() == 1 ? py::object(names[0]) : py::object(py::tuple(names)));
    }
    py::dict stats("loop_eliminations"_a = st.loop_eliminations, "one_factor_steps"_a = st.one_factor_steps,
                   "case1"_a = st.case1, "case21"_a = st.case21, "case22"_a = st.case22);
    return py::dict("colours"_a = colours, "valid"_a = validate_s4(g, c).complete(), "stats"_a = stats);
  });

  m.def("approx_s_coloring", [](const PseudoGraph& g) {
    const ApproxResult r = approx_s_coloring(g);
    py::list witnesses;
    for (const FailureWitness& w : failure_witnesses(r)) {
      witnesses.append(py::dict("vertex"_a = w.vertex, "edges"_a = py::make_tuple(w.edges[0], w.edges[1])));
    }
    return py::dict("images"_a = images_to_py(r.mapping), "satisfied"_a = r.satisfied(), "bound"_a = r.bound(),
                    "uncolored"_a = r.stats.uncolored, "witnesses"_a = witnesses);
  });

  m.def("near_3_edge_coloring", [](const PseudoGraph& g) {
    const PartialThreeColoring c = near_3_edge_coloring(g);
    py::list gaps;
    for (const auto& gap : c.gaps) gaps.append(py::dict("edge"_a = gap.edge, "cycle"_a = gap.cycle));
    return py::dict("colour"_a = c.colour, "gaps"_a = gaps, "problems"_a = check_partial_coloring(g, c));
  });

  m.def(
      "run_campaign",
      [](const std::string& name, int max_n, std::optional<std::string> cls, int jobs, std::uint64_t budget,
         int samples) {
        const auto id = parse_campaign(name);
        if (!id) throw PreconditionError("unknown campaign: " + name);
        CampaignParams p;
        p.id = *id;
        p.max_n = max_n;
        if (cls) p.graph_class = parse_class(*cls);
        p.jobs = jobs;
        p.budget = budget;
        p.samples = samples;
        p.timing = false;
        CampaignResult r;
        {
          py::gil_scoped_release release;
          r = run_campaign(p);
        }
        std::vector<std::string> lines;
        for (const ReportLine& l : r.lines) lines.push_back(l.to_json(false));
        return py::make_tuple(std::string(to_string(r.verdict)), r.summary_json, lines);
      },
      "name"_a, "max_n"_a = 0, "graph_class"_a = py::none(), "jobs"_a = 1, "budget"_a = 0, "samples"_a = 1000);
}
