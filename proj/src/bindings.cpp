#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsc/coding.hpp"
#include "qsc/core.hpp"
#include "qsc/experiment.hpp"
#include "qsc/optics.hpp"
#include "qsc/runner.hpp"

namespace py = pybind11;

namespace {

std::vector<qsc::Amplitude> state_amps(const qsc::PureState& s) { return s.amps(); }

qsc::SevenOutcome py_outcome_distribution(double alpha_sq, const std::string& label,
                                          double visibility) {
    qsc::ImperfectionConfig imp;
    imp.visibility = visibility;
    return qsc::outcome_distribution(qsc::SourceParam::from_alpha_sq(alpha_sq),
                                     qsc::BlockLabel::from_string(label), imp);
}

qsc::DetectorConfig make_detector(double efficiency, double dark_rate, double gate_time,
                                  double signal_rate) {
    qsc::DetectorConfig d{efficiency, dark_rate, gate_time, signal_rate};
    d.validate();
    return d;
}

qsc::ImperfectionConfig make_imperfections(double visibility, double second_step_accuracy) {
    qsc::ImperfectionConfig imp{visibility, second_step_accuracy};
    imp.validate();
    return imp;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum source coding simulator: block codewords, compression protocols, "
              "linear-optics model and Monte Carlo photon counting";

    py::class_<qsc::SevenOutcome>(m, "SevenOutcome")
        .def_property_readonly("probs",
                               [](const qsc::SevenOutcome& o) {
                                   return std::vector<double>(o.probs.begin(), o.probs.end());
                               })
        .def("yes", &qsc::SevenOutcome::yes)
        .def("sum", &qsc::SevenOutcome::sum)
        .def("__getitem__",
             [](const qsc::SevenOutcome& o, std::size_t j) { return o.probs.at(j); });

    py::class_<qsc::CountRecord>(m, "CountRecord")
        .def(py::init<>())
        .def("count",
             [](const qsc::CountRecord& r, std::size_t label, std::size_t det) {
                 return r.at(label, det);
             },
             py::arg("label"), py::arg("detector"))
        .def("label_total", &qsc::CountRecord::label_total)
        .def_property_readonly("merged_45", &qsc::CountRecord::merged_45)
        .def("with_merged_45", &qsc::CountRecord::with_merged_45)
        .def("to_csv", &qsc::CountRecord::to_csv)
        .def_static("from_csv", &qsc::CountRecord::from_csv)
        .def("__eq__", [](const qsc::CountRecord& a, const qsc::CountRecord& b) { return a == b; });

    py::class_<qsc::FidelityEstimate>(m, "FidelityEstimate")
        .def_readonly("value", &qsc::FidelityEstimate::value)
        .def_readonly("std_error", &qsc::FidelityEstimate::std_error)
        .def_readonly("n_trials", &qsc::FidelityEstimate::n_trials)
        .def("__repr__", [](const qsc::FidelityEstimate& e) {
            return "FidelityEstimate(" + e.to_csv_row() + ")";
        });

    m.def("shannon_entropy", &qsc::shannon_entropy, py::arg("probs"),
          "Shannon entropy in bits of a probability vector");
    m.def("von_neumann_entropy_letter", &qsc::von_neumann_entropy_letter, py::arg("alpha_sq"),
          "Entropy in bits of the average letter state");

    m.def("block_labels", [] {
        std::vector<std::string> out;
        for (const auto& l : qsc::BlockLabel::all()) out.push_back(l.to_string());
        return out;
    });

    m.def("letter_amplitudes",
          [](double alpha_sq, const std::string& sign) {
              auto s = sign == "+" ? qsc::LetterSign::Plus : qsc::LetterSign::Minus;
              return state_amps(qsc::letter_state(qsc::SourceParam::from_alpha_sq(alpha_sq), s));
          },
          py::arg("alpha_sq"), py::arg("sign"));

    m.def("block_amplitudes",
          [](double alpha_sq, const std::string& label) {
              return state_amps(qsc::block_state(qsc::SourceParam::from_alpha_sq(alpha_sq),
                                                 qsc::BlockLabel::from_string(label)));
          },
          py::arg("alpha_sq"), py::arg("label"),
          "Amplitudes of one codeword over |000>..|111>");

    m.def("success_probability",
          [](double alpha_sq) {
              return qsc::encode(qsc::SourceParam::from_alpha_sq(alpha_sq),
                                 qsc::BlockLabel::from_index(0), qsc::Protocol::P1)
                  .success_prob;
          },
          py::arg("alpha_sq"), "Coding success probability alpha^4 (1 + 2 beta^2)");

    m.def("analytic_fidelity",
          [](double alpha_sq, const std::string& protocol) {
              return qsc::analytic_fidelity(qsc::SourceParam::from_alpha_sq(alpha_sq),
                                            qsc::protocol_from_string(protocol));
          },
          py::arg("alpha_sq"), py::arg("protocol"));

    m.def("numeric_fidelity",
          [](double alpha_sq, const std::string& protocol) {
              return qsc::numeric_fidelity(qsc::SourceParam::from_alpha_sq(alpha_sq),
                                           qsc::protocol_from_string(protocol));
          },
          py::arg("alpha_sq"), py::arg("protocol"));

    m.def("outcome_distribution", &py_outcome_distribution, py::arg("alpha_sq"), py::arg("label"),
          py::arg("visibility") = 1.0,
          "Seven-outcome distribution of the full pipeline for one codeword");

    m.def("simulate_counts",
          [](double alpha_sq, std::int64_t trials_per_label, std::uint64_t seed, double efficiency,
             double dark_rate, double gate_time, double signal_rate, double visibility,
             double second_step_accuracy) {
              return qsc::simulate_counts(
                  qsc::SourceParam::from_alpha_sq(alpha_sq),
                  make_detector(efficiency, dark_rate, gate_time, signal_rate),
                  make_imperfections(visibility, second_step_accuracy), trials_per_label, seed);
          },
          py::arg("alpha_sq"), py::arg("trials_per_label"), py::arg("seed") = 0,
          py::arg("efficiency") = 0.7, py::arg("dark_rate") = 100.0, py::arg("gate_time") = 5.0,
          py::arg("signal_rate") = 1e5, py::arg("visibility") = 0.98,
          py::arg("second_step_accuracy") = 0.03);

    m.def("simulate_second_step",
          [](double alpha_sq, const qsc::CountRecord& first_step, std::uint64_t seed,
             double efficiency, double dark_rate, double gate_time, double signal_rate,
             double visibility, double second_step_accuracy) {
              return qsc::simulate_second_step(
                  qsc::SourceParam::from_alpha_sq(alpha_sq),
                  make_detector(efficiency, dark_rate, gate_time, signal_rate),
                  make_imperfections(visibility, second_step_accuracy), first_step, seed);
          },
          py::arg("alpha_sq"), py::arg("first_step"), py::arg("seed") = 0,
          py::arg("efficiency") = 0.7, py::arg("dark_rate") = 100.0, py::arg("gate_time") = 5.0,
          py::arg("signal_rate") = 1e5, py::arg("visibility") = 0.98,
          py::arg("second_step_accuracy") = 0.03);

    m.def("estimate_f1", &qsc::estimate_f1, py::arg("counts"));
    m.def("estimate_f2", &qsc::estimate_f2, py::arg("counts"), py::arg("second_step"));

#ifdef QSCSIM_VERSION
    m.attr("__version__") = QSCSIM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
