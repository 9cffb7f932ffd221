#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hend/generators.hpp"
#include "hend/instance_io.hpp"

namespace py = pybind11;
using namespace hend;

namespace {

SpacePtr space_of(const StepFuzzySet& u) { return u.space(); }

StepFuzzySet fuzzy_from_interval_cuts(std::vector<double> levels,
                                      std::vector<std::pair<double, double>> cuts) {
    std::vector<GroundSet> gs;
    for (const auto& [lo, hi] : cuts) gs.push_back(GroundSet::interval(lo, hi));
    return StepFuzzySet::from_cuts(make_real_line(), std::move(levels), std::move(gs));
}

StepFuzzySet fuzzy_from_point_cuts(std::size_t dim, std::vector<double> levels,
                                   std::vector<std::vector<std::vector<double>>> cuts) {
    const SpacePtr space = dim == 1 ? make_real_line() : make_euclidean(dim);
    std::vector<GroundSet> gs;
    for (const auto& cut : cuts) {
        std::vector<Point> pts;
        for (const auto& coords : cut) pts.push_back(Point{0, coords});
        gs.push_back(GroundSet::points(std::move(pts)));
    }
    return StepFuzzySet::from_cuts(space, std::move(levels), std::move(gs));
}

}  // namespace

PYBIND11_MODULE(_hend, m) {
    m.doc() = "endograph metric toolkit";

    py::class_<StepFuzzySet>(m, "FuzzySet")
        .def_static("from_interval_cuts", &fuzzy_from_interval_cuts, py::arg("levels"),
                    py::arg("cuts"))
        .def_static("from_point_cuts", &fuzzy_from_point_cuts, py::arg("dim"),
                    py::arg("levels"), py::arg("cuts"))
        .def("height", &StepFuzzySet::height)
        .def("levels", &StepFuzzySet::levels)
        .def("membership_real",
             [](const StepFuzzySet& u, double x) { return u.membership(Point::real(x)); })
        .def("__eq__", [](const StepFuzzySet& a, const StepFuzzySet& b) { return a == b; });

    m.def(
        "endograph_dist",
        [](const StepFuzzySet& u, const StepFuzzySet& v, const std::string& variant) {
            if (!space_of(u)->same(*space_of(v)))
                throw py::value_error("mismatched ground spaces");
            return endograph_dist(
                variant == "max" ? ProductMetricVariant::Max : ProductMetricVariant::Sum, u,
                v);
        },
        py::arg("u"), py::arg("v"), py::arg("variant") = "sum");

    m.def("gamma_limit_check", [](const std::vector<StepFuzzySet>& members,
                                  std::size_t tail_start, const StepFuzzySet& u, double eps) {
        const GammaVerdict v = gamma_limit_check(FuzzySeqWindow{members, tail_start}, u, eps);
        return v.pass;
    });

    m.def("tb_audit", [](const std::vector<StepFuzzySet>& members, double eps,
                         const std::vector<double>& grid, std::size_t budget) {
        const TbReport t = tb_audit(FuzzyFamily{members, std::nullopt}, eps, grid, budget);
        py::dict d;
        d["pass"] = t.pass;
        d["family_net_ok"] = t.family_net_ok;
        d["family_net_size"] = t.family_net_size;
        d["forward_pass"] = t.forward_pass;
        d["backward_pass"] = t.backward_pass;
        d["eps_prime"] = t.eps_prime;
        return d;
    });

    m.def("diagonal_extract",
          [](const std::vector<StepFuzzySet>& members, double xi,
             const std::vector<double>& alpha, const std::vector<double>& eps,
             std::size_t budget) {
              DiagonalSchedule s{xi, alpha, eps, budget};
              const ExtractionResult r = diagonal_extract(FuzzySeqWindow{members, 1}, s);
              py::dict d;
              d["ok"] = r.ok;
              d["subsequence"] = r.subsequence;
              d["final_residuals"] = r.final_residuals;
              return d;
          });

    m.def("classify", [](const StepFuzzySet& u) {
        const ClassReport c = classify(u);
        py::dict d;
        d["is_usc"] = c.is_usc;
        d["is_uscg"] = c.is_uscg;
        d["is_uscb"] = c.is_uscb;
        d["is_normal"] = c.is_normal;
        return d;
    });

    m.def("gen_escaping", [](std::size_t n, double spacing) {
        return gen_escaping(n, spacing).members;
    });
    m.def("gen_random_family", [](std::size_t members, std::uint64_t seed) {
        RandomFamilySpec spec;
        spec.member_count = members;
        return gen_random_family(spec, seed).members;
    });
    m.def("gen_example_rnce", [](double r, std::size_t n, double mesh) {
        auto [w, u] = gen_example_rnce(r, n, mesh);
        return py::make_tuple(w.members, u);
    });
}
