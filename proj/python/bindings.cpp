// Rationals cross the boundary as "p/q" strings; the Python package turns
// them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qf/io.hpp"
#include "qf/oracle.hpp"
#include "qf/polytope.hpp"
#include "qf/seqprops.hpp"
#include "qf/steiner.hpp"
#include "qf/verify.hpp"

namespace py = pybind11;
using namespace qf;

namespace {

std::vector<Rat> to_rats(const std::vector<std::string>& xs) {
  std::vector<Rat> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(Rat::parse(x));
  return out;
}

std::vector<std::string> to_strs(const std::vector<Rat>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

QuermassSeq to_seq(const std::vector<std::string>& xs) {
  if (xs.empty()) throw Error(Errc::EmptyInput, "empty sequence");
  return QuermassSeq(static_cast<int>(xs.size()) - 1, to_rats(xs));
}

Polytope make_polytope(const std::vector<std::vector<std::string>>& points, int dim) {
  std::vector<Point> pts;
  for (const auto& p : points) pts.push_back(to_rats(p));
  return convex_hull(pts, dim);
}

py::dict verdict_dict(const SeqVerdict& v) {
  py::list witnesses;
  for (const auto& w : v.witnesses) witnesses.append(py::make_tuple(w.indices, w.slack.str()));
  py::dict d;
  d["holds"] = v.holds;
  d["witnesses"] = witnesses;
  d["equality_indices"] = v.equality_indices;
  return d;
}

std::string reports_json(const std::vector<InequalityReport>& reports) { return reports_to_json(reports).dump(); }

}  // namespace

PYBIND11_MODULE(_quermass, m) {
  m.doc() = "Exact relative quermassintegrals of convex polytopes";

  // messages start with the error code name, e.g. "ParseError: ..."
  py::register_exception<Error>(m, "QuermassError", PyExc_ValueError);

  py::class_<Polytope>(m, "Polytope")
      .def(py::init(&make_polytope), py::arg("points"), py::arg("dim"))
      .def_property_readonly("ambient_dim", &Polytope::ambient_dim)
      .def_property_readonly("affine_dim", &Polytope::affine_dim)
      .def_property_readonly("vertices",
                             [](const Polytope& p) {
                               std::vector<std::vector<std::string>> out;
                               for (const auto& v : p.vertices()) out.push_back(to_strs(v));
                               return out;
                             })
      .def("to_json", [](const Polytope& p) { return body_to_json(p).dump(); })
      .def("__eq__", [](const Polytope& a, const Polytope& b) { return a == b; })
      .def("__repr__", [](const Polytope& p) {
        return "Polytope(dim=" + std::to_string(p.ambient_dim()) + ", vertices=" +
               std::to_string(p.vertices().size()) + ")";
      });

  m.def("load_body", [](const std::string& spec) { return load_body(spec); }, py::arg("spec"));
  m.def("minkowski_sum", &minkowski_sum);
  m.def("scale", [](const Polytope& p, const std::string& f) { return scale(p, Rat::parse(f)); });
  m.def("translate", [](const Polytope& p, const std::vector<std::string>& t) { return translate(p, to_rats(t)); });
  m.def("volume", [](const Polytope& p) { return volume(p).str(); });
  m.def("minkowski_difference", &minkowski_difference);
  m.def("is_summand", &is_summand, py::arg("e"), py::arg("k"));
  m.def("relative_inradius", [](const Polytope& k, const Polytope& e) { return relative_inradius(k, e).str(); });
  m.def("is_homothetic", &is_homothetic);

  m.def("quermassintegrals", [](const Polytope& k, const Polytope& e) { return to_strs(quermassintegrals(k, e).values); });
  m.def("steiner_eval",
        [](const std::vector<std::string>& w, const std::string& lam) { return steiner_eval(to_seq(w), Rat::parse(lam)).str(); });
  m.def("parallel_body_seq", [](const std::vector<std::string>& w, const std::string& lam) {
    return to_strs(parallel_body_seq(to_seq(w), Rat::parse(lam)).values);
  });
  m.def("f_ij", [](const std::vector<std::string>& w, int i, int j) { return f_ij(to_seq(w), i, j).str(); });

  m.def("is_concave", [](const std::vector<std::string>& a) { return verdict_dict(is_concave(to_rats(a))); });
  m.def("is_convex", [](const std::vector<std::string>& a) { return verdict_dict(is_convex(to_rats(a))); });
  m.def("is_log_concave", [](const std::vector<std::string>& a) { return verdict_dict(is_log_concave(to_rats(a))); });

  m.def(
      "verify_pair",
      [](const Polytope& mb, const Polytope& e, const std::string& checks) {
        return reports_json(verify_summand_case(make_summand_case(mb, e), parse_check_list(checks)));
      },
      py::arg("m"), py::arg("e"), py::arg("checks") = "all");
  m.def(
      "verify_sequence",
      [](const std::vector<std::string>& w, std::optional<int> dim_m, const std::string& checks) {
        SuiteInput in{to_seq(w), dim_m, std::nullopt, nullptr, nullptr};
        return reports_json(run_suite(in, parse_check_list(checks)));
      },
      py::arg("kseq"), py::arg("dim_m") = py::none(), py::arg("checks") = "all");
  m.def(
      "run_campaign",
      [](int dim, int trials, std::uint64_t seed, const std::string& mode, const std::string& checks) {
        CampaignConfig cfg;
        cfg.ambient_dim = dim;
        cfg.trials = trials;
        cfg.seed = seed;
        if (mode == "summand") cfg.mode = CampaignMode::SummandPairs;
        else if (mode == "arbitrary") cfg.mode = CampaignMode::ArbitraryPairs;
        else throw Error(Errc::InvalidArgument, "mode must be summand or arbitrary");
        cfg.checks = parse_check_list(checks);
        CampaignSummary s;
        {
          py::gil_scoped_release release;
          s = run_campaign(cfg);
        }
        return campaign_to_json(s).dump();
      },
      py::arg("dim"), py::arg("trials"), py::arg("seed"), py::arg("mode") = "summand", py::arg("checks") = "all");
  m.def(
      "cross_check",
      [](const Polytope& k, const Polytope& e, std::uint64_t samples, std::uint64_t seed) {
        CrossCheckReport r;
        {
          py::gil_scoped_release release;
          r = cross_check(k, e, samples, seed);
        }
        return cross_check_to_json(r).dump();
      },
      py::arg("k"), py::arg("e"), py::arg("samples"), py::arg("seed"));
}
