#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcs/lcs.hpp"

namespace py = pybind11;
using lcs::Complex;
using lcs::Signal;
using lcs::SubsamplingPattern;
using lcs::TransformOperator;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;
using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

Signal to_signal(const ComplexArray& a) {
  return Signal(a.data(), a.data() + a.size());
}

// [m, ...] array -> m flattened signals.
std::vector<Signal> to_signals(const ComplexArray& a) {
  if (a.ndim() < 2) throw py::value_error("expected an array of shape [m, ...]");
  const auto m = static_cast<std::size_t>(a.shape(0));
  const std::size_t p = m == 0 ? 0 : static_cast<std::size_t>(a.size()) / m;
  std::vector<Signal> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i].assign(a.data() + i * p, a.data() + (i + 1) * p);
  return out;
}

ComplexArray to_array(const std::vector<Complex>& v, const std::vector<std::size_t>& shape) {
  std::vector<py::ssize_t> dims(shape.begin(), shape.end());
  if (dims.empty()) dims.push_back(static_cast<py::ssize_t>(v.size()));
  ComplexArray out(dims);
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

RealArray to_real_array(const std::vector<double>& v) {
  RealArray out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

lcs::ScoreNormalization parse_normalization(const std::string& name) {
  if (name == "per_signal") return lcs::ScoreNormalization::per_signal;
  if (name == "none") return lcs::ScoreNormalization::none;
  throw py::value_error("normalization must be 'per_signal' or 'none'");
}

py::dict report_dict(const lcs::EvalReport& r) {
  py::list psnr, err, captured;
  for (const auto& s : r.signals) {
    psnr.append(s.psnr);
    err.append(s.normalized_error);
    captured.append(s.captured_fraction);
  }
  py::dict d;
  d["n"] = r.n;
  d["p"] = r.p;
  d["mean_psnr"] = r.mean_psnr;
  d["infinite_psnr_count"] = r.infinite_psnr_count;
  d["mean_normalized_error"] = r.mean_normalized_error;
  d["mean_captured_fraction"] = r.mean_captured_fraction;
  d["psnr"] = psnr;
  d["normalized_error"] = err;
  d["captured_fraction"] = captured;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Learned compressive sampling core";

  static py::exception<lcs::Error> error(m, "LcsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const lcs::Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<TransformOperator>(m, "Transform")
      .def_static("dft1d", &TransformOperator::dft1d, py::arg("p"))
      .def_static("dft2d", &TransformOperator::dft2d, py::arg("rows"), py::arg("cols"))
      .def_static("hadamard", &TransformOperator::hadamard, py::arg("p"))
      .def_property_readonly("kind", [](const TransformOperator& op) { return std::string(lcs::to_string(op.kind())); })
      .def_property_readonly("shape", &TransformOperator::shape)
      .def_property_readonly("size", &TransformOperator::size)
      .def("forward", [](const TransformOperator& op, const ComplexArray& x) {
        return to_array(op.forward(to_signal(x)), op.shape());
      }, py::arg("x"))
      .def("adjoint", [](const TransformOperator& op, const ComplexArray& s) {
        return to_array(op.adjoint(to_signal(s)), op.shape());
      }, py::arg("s"));

  py::class_<SubsamplingPattern>(m, "Pattern")
      .def(py::init<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>(), py::arg("p"),
           py::arg("indices"), py::arg("dims") = std::vector<std::size_t>{})
      .def_property_readonly("universe", &SubsamplingPattern::universe)
      .def_property_readonly("indices", &SubsamplingPattern::indices)
      .def_property_readonly("dims", &SubsamplingPattern::dims)
      .def_property_readonly("rate", [](const SubsamplingPattern& pat) {
        const auto r = pat.rate();
        return py::make_tuple(r.numerator, r.denominator);
      })
      .def("__len__", &SubsamplingPattern::count)
      .def("__contains__", &SubsamplingPattern::contains)
      .def("__eq__", [](const SubsamplingPattern& a, const SubsamplingPattern& b) { return a == b; })
      .def("mask", [](const SubsamplingPattern& pat) {
        const auto mask = pat.mask();
        py::array_t<bool> out(static_cast<py::ssize_t>(mask.size()));
        std::copy(mask.begin(), mask.end(), out.mutable_data());
        return out;
      });

  m.def("compute_scores", [](const TransformOperator& op, const ComplexArray& signals, const std::string& norm) {
    const auto train = to_signals(signals);
    return to_real_array(lcs::compute_scores(op, train, parse_normalization(norm)).scores);
  }, py::arg("op"), py::arg("signals"), py::arg("normalization") = "per_signal",
     "Mean per-index captured energy over signals of shape [m, ...].");

  m.def("learn_pattern", [](const RealArray& scores, std::size_t n, std::vector<std::size_t> dims) {
    lcs::ScoreVector v{std::vector<double>(scores.data(), scores.data() + scores.size()), 0};
    return lcs::learn_pattern(v, n, std::move(dims));
  }, py::arg("scores"), py::arg("n"), py::arg("dims") = std::vector<std::size_t>{});

  m.def("learn", [](const TransformOperator& op, const ComplexArray& signals, std::size_t n) {
    const auto train = to_signals(signals);
    return lcs::learn_pattern(lcs::compute_scores(op, train), n, op.shape().size() > 1 ? op.shape() : std::vector<std::size_t>{});
  }, py::arg("op"), py::arg("signals"), py::arg("n"), "Scores and top-n selection in one step.");

  m.def("reconstruct", [](const TransformOperator& op, const SubsamplingPattern& pat, const ComplexArray& x) {
    const auto rec = lcs::simulate(op, pat, to_signal(x));
    return py::make_tuple(to_array(rec.estimate, op.shape()), rec.captured_fraction);
  }, py::arg("op"), py::arg("pattern"), py::arg("x"),
     "Measure x on the pattern and decode by the adjoint; returns (estimate, captured_fraction).");

  m.def("captured_fraction", [](const TransformOperator& op, const SubsamplingPattern& pat, const ComplexArray& x) {
    return lcs::captured_fraction(op, pat, to_signal(x));
  }, py::arg("op"), py::arg("pattern"), py::arg("x"));

  m.def("normalized_error", [](const ComplexArray& estimate, const ComplexArray& truth) {
    return lcs::normalized_error(to_signal(estimate), to_signal(truth));
  }, py::arg("estimate"), py::arg("truth"));

  m.def("psnr", [](const ComplexArray& reference, const ComplexArray& estimate) {
    return lcs::psnr(to_signal(reference), to_signal(estimate));
  }, py::arg("reference"), py::arg("estimate"));

  m.def("generalization_bound", [](std::size_t m_, std::size_t p, std::size_t n, double beta) {
    return lcs::generalization_bound({m_, p, n, beta});
  }, py::arg("m"), py::arg("p"), py::arg("n"), py::arg("beta"));

  m.def("log_binomial", &lcs::log_binomial, py::arg("p"), py::arg("n"));

  m.def("best_n_pattern", [](const TransformOperator& op, const ComplexArray& x, std::size_t n) {
    return lcs::best_n_pattern(op, to_signal(x), n);
  }, py::arg("op"), py::arg("x"), py::arg("n"));

  m.def("sample_uniform", &lcs::sample_uniform, py::arg("p"), py::arg("n"), py::arg("seed"),
        py::arg("dims") = std::vector<std::size_t>{});

  m.def("sample_variable_density", [](std::vector<std::size_t> dims, double r, double d, std::size_t n,
                                      std::uint64_t seed) {
    return lcs::sample_variable_density(dims, {r, d, seed, n});
  }, py::arg("dims"), py::arg("r"), py::arg("d"), py::arg("n"), py::arg("seed"));

  m.def("tune_variable_density", [](const TransformOperator& op, const ComplexArray& signals, std::size_t n,
                                    std::vector<double> radii, std::vector<double> degrees, std::uint64_t seed) {
    const auto train = to_signals(signals);
    const auto result = lcs::tune_variable_density(op, train, n, lcs::make_grid(radii, degrees), seed);
    return py::make_tuple(result.pattern, result.best.r, result.best.d);
  }, py::arg("op"), py::arg("signals"), py::arg("n"),
     py::arg("radii") = std::vector<double>{0.0, 0.02, 0.05, 0.1, 0.2},
     py::arg("degrees") = std::vector<double>{0.0, 1.0, 2.0, 4.0, 8.0}, py::arg("seed") = 0,
     "Returns (pattern, r, d) of the best grid point on the given signals.");

  m.def("evaluate", [](const TransformOperator& op, const SubsamplingPattern& pat, const ComplexArray& signals) {
    const auto test = to_signals(signals);
    return report_dict(lcs::evaluate(op, pat, test));
  }, py::arg("op"), py::arg("pattern"), py::arg("signals"));

  m.def("lowpass_signals", [](std::vector<std::size_t> dims, double decay, std::size_t count, std::uint64_t seed) {
    const auto ens = lcs::generate_lowpass_ensemble(dims, decay, count, seed);
    std::vector<Complex> flat;
    for (const auto& a : ens.atoms) flat.insert(flat.end(), a.begin(), a.end());
    std::vector<std::size_t> shape{count};
    shape.insert(shape.end(), dims.begin(), dims.end());
    return to_array(flat, shape);
  }, py::arg("dims"), py::arg("decay"), py::arg("count"), py::arg("seed"),
     "Random low-pass test signals of shape [count, dims...].");
}
