// Copyright 2026 The ccxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccx/tomography.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "ccx/error.hpp"

namespace ccx {

namespace {

std::size_t pow_int(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// Pauli letters by qubit for base-4 index (0 = I, 1 = X, 2 = Y, 3 = Z).
std::string pauli_letters(std::size_t index, std::size_t k) {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::string s(k, 'I');
    for (std::size_t q = 0; q < k; ++q) {
        s[q] = kLetters[index % 4];
        index /= 4;
    }
    return s;
}

std::size_t pauli_index(std::string_view by_qubit) {
    std::size_t idx = 0;
    for (std::size_t q = by_qubit.size(); q-- > 0;) {
        const char c = by_qubit[q];
        idx = idx * 4 + (c == 'X' ? 1 : c == 'Y' ? 2 : c == 'Z' ? 3 : 0);
    }
    return idx;
}

std::vector<ComplexMatrix> pauli_basis(std::size_t k) {
    const std::size_t n = pow_int(4, k);
    std::vector<ComplexMatrix> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(pauli_product(pauli_letters(i, k)));
    return out;
}

void check_k(std::size_t k, std::size_t max_k) {
    if (k < 1 || k > max_k) {
        throw usage_error("KOutOfRange", "k = " + std::to_string(k) + " outside [1, " +
                                             std::to_string(max_k) + "]");
    }
}

QstProbabilities to_frequencies(const QstCounts &data) {
    QstProbabilities out;
    for (const auto &[setting, counts] : data) out.emplace(setting, counts.frequencies());
    return out;
}

QptProbabilities to_frequencies(const QptCounts &data) {
    QptProbabilities out;
    for (const auto &[key, counts] : data) out.emplace(key, counts.frequencies());
    return out;
}

}  // namespace

// ---- Choi matrices

ChoiMatrix::ChoiMatrix(ComplexMatrix m) : m_(std::move(m)) {
    const auto n = static_cast<std::size_t>(m_.rows());
    if (m_.rows() != m_.cols() || n < 4 || !std::has_single_bit(n) ||
        (std::countr_zero(n) % 2) != 0) {
        throw numerical_error("NotChoi", "Choi matrix must be Gamma^2 x Gamma^2");
    }
    if (hermiticity_error(m_) > tol::kAlgebraic) {
        throw numerical_error("NotChoi", "Choi matrix is not Hermitian");
    }
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > tol::kAlgebraic) {
        throw numerical_error("NotChoi", "Choi trace " + std::to_string(tr) + " != 1");
    }
    const HermitianEigen eig = hermitian_eigen(m_);
    if (eig.values.minCoeff() < -tol::kValidation) {
        throw numerical_error("NotChoi", "Choi matrix has eigenvalue " +
                                             std::to_string(eig.values.minCoeff()));
    }
}

std::size_t ChoiMatrix::gamma() const noexcept {
    return std::size_t{1} << (std::countr_zero(dim()) / 2);
}

double ChoiMatrix::purity() const { return (m_ * m_).trace().real(); }

double ChoiMatrix::trace_preservation_deviation() const {
    const auto g = static_cast<Eigen::Index>(gamma());
    ComplexMatrix reduced = ComplexMatrix::Zero(g, g);
    for (Eigen::Index i = 0; i < g; ++i) {
        for (Eigen::Index j = 0; j < g; ++j) {
            Complex acc = 0.0;
            for (Eigen::Index r = 0; r < g; ++r) acc += m_(i * g + r, j * g + r);
            reduced(i, j) = acc;
        }
    }
    return max_abs_diff(static_cast<double>(g) * reduced, ComplexMatrix::Identity(g, g));
}

ChoiMatrix choi_of_unitary(const ComplexMatrix &u) {
    if (u.rows() != u.cols() || max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(u.rows(), u.cols())) >
                                     tol::kValidation) {
        throw numerical_error("NotUnitary", "choi_of_unitary needs a unitary matrix");
    }
    const Eigen::Index g = u.rows();
    ComplexVector v(g * g);
    const double scale = 1.0 / std::sqrt(static_cast<double>(g));
    for (Eigen::Index i = 0; i < g; ++i) {
        for (Eigen::Index r = 0; r < g; ++r) v(i * g + r) = scale * u(r, i);
    }
    ComplexMatrix m = v * v.adjoint();
    return ChoiMatrix(std::move(m));
}

ChoiMatrix choi_of_unitary(const UnitaryMatrix &u) { return choi_of_unitary(u.matrix()); }

ChoiMatrix choi_of_channel(const KrausChannel &ch) {
    const auto g = static_cast<Eigen::Index>(ch.dim());
    ComplexMatrix xi = ComplexMatrix::Zero(g * g, g * g);
    for (Eigen::Index i = 0; i < g; ++i) {
        for (Eigen::Index j = 0; j < g; ++j) {
            ComplexMatrix unit = ComplexMatrix::Zero(g, g);
            unit(i, j) = 1.0;
            xi.block(i * g, j * g, g, g) = ch.apply(unit);
        }
    }
    xi /= static_cast<double>(g);
    return ChoiMatrix(0.5 * (xi + xi.adjoint()));
}

double process_fidelity(const ChoiMatrix &a, const ChoiMatrix &b) {
    if (a.dim() != b.dim()) {
        throw numerical_error("DimensionMismatch", "process_fidelity: Choi dimensions differ");
    }
    return uhlmann_fidelity(a.matrix(), b.matrix());
}

double average_gate_fidelity(double f_pro, std::size_t k) {
    const double g = std::ldexp(1.0, static_cast<int>(k));
    return (g * f_pro + 1.0) / (g + 1.0);
}

std::string pauli_basis_label(std::size_t index, std::size_t k) {
    std::string s = pauli_letters(index, k);
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

template <class Apply>
Eigen::MatrixXd ptm_from(std::size_t gamma, Apply &&apply) {
    const std::size_t k = qubits_for_dim(gamma);
    const auto basis = pauli_basis(k);
    const auto n = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd s(n, n);
    for (Eigen::Index b = 0; b < n; ++b) {
        const ComplexMatrix out = apply(basis[static_cast<std::size_t>(b)]);
        for (Eigen::Index a = 0; a < n; ++a) {
            s(a, b) = (basis[static_cast<std::size_t>(a)] * out).trace().real() /
                      static_cast<double>(gamma);
        }
    }
    return s;
}

}  // namespace

Eigen::MatrixXd pauli_transfer_matrix(const KrausChannel &ch) {
    return ptm_from(ch.dim(), [&](const ComplexMatrix &p) { return ch.apply(p); });
}

Eigen::MatrixXd pauli_transfer_matrix(const UnitaryMatrix &u) {
    const ComplexMatrix &m = u.matrix();
    return ptm_from(u.dim(), [&](const ComplexMatrix &p) -> ComplexMatrix {
        return m * p * m.adjoint();
    });
}

double process_fidelity_superop(const ComplexMatrix &channel_superop,
                                const UnitaryMatrix &target) {
    const auto g2 = static_cast<Eigen::Index>(target.dim() * target.dim());
    if (channel_superop.rows() != g2 || channel_superop.cols() != g2) {
        throw numerical_error("DimensionMismatch",
                              "superoperator must be Gamma^2 x Gamma^2 for the target");
    }
    const ComplexMatrix sw = pauli_transfer_matrix(target).cast<Complex>();
    return (sw.adjoint() * channel_superop).trace().real() / static_cast<double>(g2);
}

// ---- state tomography

ComplexMatrix qst_linear_inversion(const QstProbabilities &data, std::size_t k) {
    check_k(k, 4);
    const auto settings = qst_settings(k);
    std::vector<std::string> missing;
    for (const auto &s : settings) {
        if (!data.contains(s)) missing.push_back(s.label());
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto &m : missing) list += (list.empty() ? "" : ",") + m;
        throw usage_error("MissingSetting", "missing settings: " + list);
    }

    const std::size_t npauli = pow_int(4, k);
    const std::size_t nout = std::size_t{1} << k;
    std::vector<double> sum(npauli, 0.0);
    std::vector<std::size_t> hits(npauli, 0);
    for (const auto &setting : settings) {
        const Eigen::VectorXd &f = data.at(setting);
        if (static_cast<std::size_t>(f.size()) != nout) {
            throw schema_error("SchemaError", "setting " + setting.label() +
                                                  " has a distribution of the wrong width");
        }
        for (std::size_t mask = 0; mask < nout; ++mask) {
            std::string letters(k, 'I');
            for (std::size_t q = 0; q < k; ++q) {
                if ((mask >> q) & 1U) letters[q] = setting[q];
            }
            double e = 0.0;
            for (std::size_t b = 0; b < nout; ++b) {
                const double sign = (std::popcount(b & mask) % 2) ? -1.0 : 1.0;
                e += sign * f(static_cast<Eigen::Index>(b));
            }
            const std::size_t idx = pauli_index(letters);
            sum[idx] += e;
            ++hits[idx];
        }
    }
    const auto basis = pauli_basis(k);
    const auto dim = static_cast<Eigen::Index>(nout);
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < npauli; ++i) {
        // identity expectation is exactly 1 for a normalized state
        const double e = i == 0 ? 1.0 : sum[i] / static_cast<double>(hits[i]);
        rho += e * basis[i];
    }
    rho /= static_cast<double>(nout);
    return 0.5 * (rho + rho.adjoint());
}

DensityMatrix qst_reconstruct(const QstProbabilities &data, std::size_t k) {
    return project_to_density(qst_linear_inversion(data, k));
}

DensityMatrix qst_reconstruct(const QstCounts &data, std::size_t k) {
    return qst_reconstruct(to_frequencies(data), k);
}

QstProbabilities exact_qst_probabilities(const QuantumState &state) {
    const std::size_t k =
        std::visit([](const auto &s) { return s.num_qubits(); }, state);
    QstProbabilities out;
    for (const auto &setting : qst_settings(k)) {
        out.emplace(setting, std::visit(
                                 [&](const auto &s) { return measurement_probabilities(s, setting); },
                                 state));
    }
    return out;
}

// ---- process tomography

std::vector<TomographyJob> qpt_jobs(const Circuit &gate_circuit, std::size_t k,
                                    std::uint64_t shots, std::uint64_t master_seed) {
    check_k(k, 3);
    if (gate_circuit.num_qubits() != k) {
        throw usage_error("DimensionMismatch", "gate circuit width " +
                                                   std::to_string(gate_circuit.num_qubits()) +
                                                   " differs from k = " + std::to_string(k));
    }
    if (shots == 0) throw usage_error("InvalidShots", "shots must be positive");
    std::vector<TomographyJob> jobs;
    const auto probes = qpt_probes(k);
    const auto settings = qst_settings(k);
    jobs.reserve(probes.size() * settings.size());
    for (const auto &probe : probes) {
        for (const auto &setting : settings) {
            const std::size_t index = jobs.size();
            Circuit c(k);
            c.append(probe_preparation(probe)).append(gate_circuit).append(
                measurement_rotation(setting));
            jobs.push_back(TomographyJob{index, probe, setting, shots,
                                         derive_seed(master_seed, index), std::move(c)});
        }
    }
    return jobs;
}

Eigen::Matrix4cd probe_dual_coefficients() {
    // column p holds the entries of rho_p in the order (00, 01, 10, 11)
    Eigen::Matrix4cd a;
    for (int p = 0; p < 4; ++p) {
        const ComplexVector v = probe_state(static_cast<Probe>(p));
        const ComplexMatrix rho = v * v.adjoint();
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) a(2 * i + j, p) = rho(i, j);
        }
    }
    return a.inverse().transpose();
}

ChoiMatrix qpt_reconstruct(const QptProbabilities &data, std::size_t k) {
    check_k(k, 3);
    const auto probes = qpt_probes(k);
    const auto settings = qst_settings(k);
    std::vector<std::string> missing;
    std::vector<ComplexMatrix> outputs;
    outputs.reserve(probes.size());
    for (const auto &probe : probes) {
        QstProbabilities cell;
        for (const auto &setting : settings) {
            auto it = data.find(QptKey{probe, setting});
            if (it == data.end()) {
                missing.push_back(probe.label() + "/" + setting.label());
                continue;
            }
            cell.emplace(setting, it->second);
        }
        if (cell.size() == settings.size()) {
            outputs.push_back(qst_reconstruct(cell, k).matrix());
        }
    }
    if (!missing.empty()) {
        std::string list;
        for (std::size_t i = 0; i < missing.size() && i < 8; ++i) {
            list += (i ? "," : "") + missing[i];
        }
        if (missing.size() > 8) list += ",... (" + std::to_string(missing.size()) + " total)";
        throw usage_error("MissingCell", "missing cells: " + list);
    }

    const Eigen::Matrix4cd dual = probe_dual_coefficients();
    const auto g = Eigen::Index{1} << k;
    ComplexMatrix xi = ComplexMatrix::Zero(g * g, g * g);
    for (Eigen::Index i = 0; i < g; ++i) {
        for (Eigen::Index j = 0; j < g; ++j) {
            ComplexMatrix block = ComplexMatrix::Zero(g, g);
            for (std::size_t p = 0; p < probes.size(); ++p) {
                Complex coeff = 1.0;
                for (std::size_t q = 0; q < k; ++q) {
                    const auto row = 2 * ((i >> q) & 1) + ((j >> q) & 1);
                    coeff *= dual(row, static_cast<int>(probes[p][q]));
                }
                block += coeff * outputs[p];
            }
            xi.block(i * g, j * g, g, g) = block;
        }
    }
    xi /= static_cast<double>(g);
    return ChoiMatrix(project_to_density(xi).matrix());
}

ChoiMatrix qpt_reconstruct(const QptCounts &data, std::size_t k) {
    return qpt_reconstruct(to_frequencies(data), k);
}

// ---- dataset files

std::string qpt_dataset_to_json(const QptDataset &d) {
    nlohmann::ordered_json j;
    j["schema"] = "ccxlab.qpt-dataset/1";
    j["k"] = d.k;
    j["shots"] = d.shots;
    j["master_seed"] = d.master_seed;
    j["circuit"] = d.circuit_text;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto &[key, counts] : d.cells) {
        nlohmann::ordered_json c;
        c["probe"] = key.probe.label();
        c["setting"] = key.setting.label();
        nlohmann::ordered_json outcomes = nlohmann::ordered_json::object();
        for (const auto &[bits, n] : counts.outcomes) outcomes[bits] = n;
        c["counts"] = std::move(outcomes);
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    return j.dump(1) + "\n";
}

namespace {

[[noreturn]] void dataset_error(const std::string &path, const std::string &what) {
    throw schema_error("SchemaError", path + ": " + what);
}

const nlohmann::json &field(const nlohmann::json &obj, const std::string &name,
                            const std::string &path) {
    if (!obj.is_object() || !obj.contains(name)) dataset_error(path + "." + name, "missing field");
    return obj.at(name);
}

std::uint64_t as_count(const nlohmann::json &v, const std::string &path) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        dataset_error(path, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string as_string(const nlohmann::json &v, const std::string &path) {
    if (!v.is_string()) dataset_error(path, "expected a string");
    return v.get<std::string>();
}

}  // namespace

QptDataset qpt_dataset_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw schema_error("SchemaError", std::string("$: invalid JSON: ") + e.what());
    }
    QptDataset d;
    if (as_string(field(j, "schema", "$"), "$.schema") != "ccxlab.qpt-dataset/1") {
        dataset_error("$.schema", "unsupported dataset schema");
    }
    d.k = static_cast<std::size_t>(as_count(field(j, "k", "$"), "$.k"));
    d.shots = as_count(field(j, "shots", "$"), "$.shots");
    d.master_seed = as_count(field(j, "master_seed", "$"), "$.master_seed");
    d.circuit_text = as_string(field(j, "circuit", "$"), "$.circuit");
    const auto &cells = field(j, "cells", "$");
    if (!cells.is_array()) dataset_error("$.cells", "expected an array");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string path = "$.cells[" + std::to_string(i) + "]";
        const auto &c = cells[i];
        std::optional<QptKey> key;
        try {
            key.emplace(QptKey{ProbeLabel::parse(as_string(field(c, "probe", path), path + ".probe")),
                               PauliString(as_string(field(c, "setting", path), path + ".setting"))});
        } catch (const Error &e) {
            if (e.category() == ErrorCategory::Schema) throw;
            dataset_error(path, e.what());
        }
        const auto &outcomes = field(c, "counts", path);
        if (!outcomes.is_object()) dataset_error(path + ".counts", "expected an object");
        CountsMap counts;
        counts.num_qubits = key->setting.size();
        for (const auto &[bits, n] : outcomes.items()) {
            const std::string p = path + ".counts." + bits;
            if (bits.size() != counts.num_qubits ||
                bits.find_first_not_of("01") != std::string::npos) {
                dataset_error(p, "malformed bitstring");
            }
            const std::uint64_t v = as_count(n, p);
            counts.outcomes[bits] = v;
            counts.shots += v;
        }
        d.cells.emplace(std::move(*key), std::move(counts));
    }
    return d;
}

}  // namespace ccx
