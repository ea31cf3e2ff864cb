// Copyright 2026 The SQNN Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "sqnn/checkpoint.hpp"
#include "sqnn/config.hpp"
#include "sqnn/encoding.hpp"
#include "sqnn/error.hpp"
#include "sqnn/experiment.hpp"
#include "sqnn/gradients.hpp"
#include "sqnn/model.hpp"
#include "sqnn/rng.hpp"
#include "sqnn/training.hpp"

namespace py = pybind11;
using namespace sqnn;

namespace {

using Doubles = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<Complex>;

std::vector<double> to_vector(const Doubles &a) {
    return {a.data(), a.data() + a.size()};
}

py::array_t<double> to_array(const std::vector<double> &v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

template <std::size_t N>
ComplexArray matrix(const SquareMatrix<N> &m) {
    ComplexArray out({static_cast<py::ssize_t>(N), static_cast<py::ssize_t>(N)});
    auto w = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            w(r, c) = m(r, c);
        }
    }
    return out;
}

ComplexArray amplitudes(const Statevector &s) {
    const auto a = s.amplitudes();
    ComplexArray out(static_cast<py::ssize_t>(a.size()));
    std::copy(a.begin(), a.end(), out.mutable_data());
    return out;
}

ExperimentConfig config_of(const py::object &config) {
    if (py::isinstance<py::str>(config)) {
        const auto text = config.cast<std::string>();
        return text.find('{') == std::string::npos ? preset(text) : parse_config(text);
    }
    // Any JSON-serializable mapping.
    const auto dumps = py::module_::import("json").attr("dumps");
    return parse_config(dumps(config).cast<std::string>());
}

ImageSet image_set(const Doubles &images, const py::array_t<int> &labels) {
    if (images.ndim() != 3) {
        throw ShapeError("images must have shape (n, height, width)");
    }
    ImageSet s;
    s.shape = {static_cast<int>(images.shape(1)), static_cast<int>(images.shape(2))};
    s.pixels = to_vector(images);
    const auto l = labels.unchecked<1>();
    for (py::ssize_t i = 0; i < l.shape(0); ++i) {
        s.labels.push_back(l(i));
        s.source_index.push_back(static_cast<std::size_t>(i));
    }
    s.validate();
    return s;
}

std::vector<double> flat_params(const SqnnModel &m) {
    std::vector<double> out;
    for (const auto &e : m.extractors) {
        out.insert(out.end(), e.params.values.begin(), e.params.values.end());
    }
    if (m.predictor) {
        out.insert(out.end(), m.predictor->params.values.begin(), m.predictor->params.values.end());
    }
    return out;
}

void set_flat_params(SqnnModel &m, const std::vector<double> &v) {
    if (v.size() != m.num_params()) {
        throw ShapeError("expected " + std::to_string(m.num_params()) + " parameters, got " +
                         std::to_string(v.size()));
    }
    auto it = v.begin();
    auto fill = [&](ParamVector &p) {
        std::copy(it, it + static_cast<std::ptrdiff_t>(p.size()), p.values.begin());
        it += static_cast<std::ptrdiff_t>(p.size());
    };
    for (auto &e : m.extractors) {
        fill(e.params);
    }
    if (m.predictor) {
        fill(m.predictor->params);
    }
}

py::list history_list(const std::vector<EpochMetrics> &history) {
    py::list out;
    for (const auto &h : history) {
        py::dict d;
        d["epoch"] = h.epoch;
        d["mean_train_loss"] = h.mean_train_loss;
        d["val_accuracy"] = h.val_accuracy;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statevector simulator and trainer for partitioned quantum neural networks";

    // Later registrations are tried first, so the base class goes first.
    const auto base = py::register_exception<Error>(m, "SqnnError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<DataError>(m, "DataError", base.ptr());
    py::register_exception<CheckpointError>(m, "CheckpointError", base.ptr());

    py::enum_<Axis>(m, "Axis").value("X", Axis::X).value("Y", Axis::Y).value("Z", Axis::Z);
    py::enum_<ReadoutPrep>(m, "ReadoutPrep")
        .value("ZERO", ReadoutPrep::ZeroState)
        .value("PLUS", ReadoutPrep::PlusState);
    py::enum_<Backend>(m, "Backend")
        .value("DENSE", Backend::Dense)
        .value("FACTORED", Backend::Factored);

    m.def("rotation", [](Axis a, double theta) { return matrix(rotation(a, theta)); },
          py::arg("axis"), py::arg("theta"));
    m.def("ising", [](Axis a, double theta) { return matrix(ising(a, theta)); },
          py::arg("axis"), py::arg("theta"));
    m.def("basis_encode",
          [](const Doubles &x, double threshold) {
              return amplitudes(basis_encode(to_vector(x), threshold));
          },
          py::arg("x"), py::arg("threshold") = 0.5);
    m.def("angle_encode",
          [](const Doubles &x, Axis axis, double scale) {
              return amplitudes(angle_encode(to_vector(x), {axis, scale}));
          },
          py::arg("x"), py::arg("axis") = Axis::X, py::arg("scale") = std::numbers::pi);

    py::class_<CircuitSpec>(m, "Circuit")
        .def(py::init([](int n_data, int n_blocks, std::vector<Axis> axes, ReadoutPrep prep) {
                 if (axes.empty()) {
                     const auto d = default_axis_sequence();
                     axes.assign(d.begin(), d.end());
                 }
                 return build_basic_model(n_data, n_blocks, axes, prep);
             }),
             py::arg("n_data"), py::arg("n_blocks"), py::arg("axes") = std::vector<Axis>{},
             py::arg("readout_prep") = ReadoutPrep::PlusState)
        .def_property_readonly("num_data_qubits", [](const CircuitSpec &c) { return c.num_data_qubits; })
        .def_property_readonly("num_params", &CircuitSpec::num_params)
        .def(
            "evaluate",
            [](const CircuitSpec &c, const Doubles &params, const Doubles &angles, Axis axis,
               Backend backend) {
                return evaluate_angles(c, ParamVector{to_vector(params)}, to_vector(angles), axis,
                                       backend);
            },
            py::arg("params"), py::arg("angles"), py::arg("axis") = Axis::X,
            py::arg("backend") = Backend::Factored,
            "Readout <Z> for the product input (x) R_axis(angle_j)|0>.")
        .def(
            "evaluate_state",
            [](const CircuitSpec &c, const Doubles &params, const ComplexArray &state) {
                std::vector<Complex> amps(state.data(), state.data() + state.size());
                return evaluate(c, ParamVector{to_vector(params)},
                                Statevector::from_amplitudes(std::move(amps)));
            },
            py::arg("params"), py::arg("state"))
        .def(
            "gradient",
            [](const CircuitSpec &c, const Doubles &params, const Doubles &angles, Axis axis) {
                const auto input = encode_angles(to_vector(angles), axis);
                return to_array(full_gradient(c, ParamVector{to_vector(params)}, input).values);
            },
            py::arg("params"), py::arg("angles"), py::arg("axis") = Axis::X,
            "Parameter-shift gradient with respect to every parameter.")
        .def(
            "input_gradient",
            [](const CircuitSpec &c, const Doubles &params, const Doubles &angles, Axis axis) {
                return to_array(
                    input_gradient(c, ParamVector{to_vector(params)}, to_vector(angles), axis).values);
            },
            py::arg("params"), py::arg("angles"), py::arg("axis") = Axis::X);

    m.def(
        "partition",
        [](int height, int width, const std::vector<int> &capacities, const std::string &strategy) {
            std::vector<DeviceSpec> devices;
            for (std::size_t i = 0; i < capacities.size(); ++i) {
                devices.push_back({"extractor" + std::to_string(i), capacities[i], DeviceRole::Extractor});
            }
            return make_partition({height, width}, devices, parse_strategy(strategy)).segments;
        },
        py::arg("height"), py::arg("width"), py::arg("capacities"), py::arg("strategy") = "even",
        "Row-major pixel indices of each segment.");

    m.def("preset_names", &preset_names);
    m.def(
        "resolve_config",
        [](const py::object &config) { return to_json(config_of(config)).dump(); },
        py::arg("config"), "Preset name, JSON text or mapping to canonical JSON text.");

    py::class_<SqnnModel>(m, "Model")
        .def(py::init([](const py::object &config) { return make_model(config_of(config).model); }),
             py::arg("config"))
        .def_property_readonly("num_params", &SqnnModel::num_params)
        .def_property_readonly("num_extractors", &SqnnModel::num_features)
        .def_property("parameters", [](const SqnnModel &s) { return to_array(flat_params(s)); },
                      [](SqnnModel &s, const Doubles &v) { set_flat_params(s, to_vector(v)); })
        .def(
            "initialize",
            [](SqnnModel &s, std::uint64_t seed) {
                Rng rng(seed, 0);
                initialize_parameters(s, rng);
            },
            py::arg("seed"))
        .def(
            "forward",
            [](const SqnnModel &s, const Doubles &image) {
                const auto r = forward(s, to_vector(image));
                return py::make_tuple(to_array(r.features.values), r.output);
            },
            py::arg("image"), "(features, output) for one row-major image.")
        .def(
            "accuracy",
            [](const SqnnModel &s, const Doubles &images, const py::array_t<int> &labels, int threads) {
                const auto set = image_set(images, labels);
                py::gil_scoped_release release;
                return evaluate_accuracy(s, set, threads);
            },
            py::arg("images"), py::arg("labels"), py::arg("threads") = 1);

    m.def(
        "train",
        [](const py::object &config, const Doubles &train_x, const py::array_t<int> &train_y,
           const Doubles &val_x, const py::array_t<int> &val_y) {
            const auto c = config_of(config);
            const auto tr = image_set(train_x, train_y);
            const auto va = image_set(val_x, val_y);
            TrainingState state;
            {
                py::gil_scoped_release release;
                state = train(start_training(make_model(c.model), c.training), tr, va, c.training);
            }
            py::dict out;
            out["model"] = state.model;
            out["best_model"] = state.best_model;
            out["best_accuracy"] = state.best_accuracy;
            out["best_epoch"] = state.best_epoch;
            out["history"] = history_list(state.history);
            return out;
        },
        py::arg("config"), py::arg("train_images"), py::arg("train_labels"), py::arg("val_images"),
        py::arg("val_labels"));

    m.def(
        "load_split",
        [](const py::object &config, const std::string &data_dir, const std::string &split,
           std::optional<std::size_t> limit) {
            const auto c = config_of(config);
            const auto set = load_split(c, resolve_data_dir(c, data_dir), parse_split(split), limit);
            Doubles images({static_cast<py::ssize_t>(set.size()),
                            static_cast<py::ssize_t>(set.shape.height),
                            static_cast<py::ssize_t>(set.shape.width)});
            std::copy(set.pixels.begin(), set.pixels.end(), images.mutable_data());
            py::array_t<int> labels(static_cast<py::ssize_t>(set.size()));
            std::copy(set.labels.begin(), set.labels.end(), labels.mutable_data());
            return py::make_tuple(images, labels);
        },
        py::arg("config"), py::arg("data_dir") = "", py::arg("split") = "test",
        py::arg("limit") = py::none(),
        "Filtered, subset and downscaled images with labels -1 (first digit) and +1.");

    m.def(
        "load_checkpoint",
        [](const std::string &path) {
            const auto c = load_checkpoint(path);
            py::dict out;
            out["config"] = to_json(c.config).dump();
            out["model"] = c.model;
            out["epochs_done"] = c.epochs_done;
            out["best_accuracy"] = c.best_accuracy;
            out["best_epoch"] = c.best_epoch;
            out["history"] = history_list(c.history);
            return out;
        },
        py::arg("path"));
}
