// Copyright 2026 The Naimark Authors
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

#include "naimark/json_io.hpp"

#include <fstream>
#include <sstream>

namespace naimark {

namespace {

FactorMode mode_from_string(const std::string &s) {
    if (s == "thin") {
        return FactorMode::Thin;
    }
    if (s == "hermitian") {
        return FactorMode::Hermitian;
    }
    throw Error("unknown factor mode: " + s);
}

std::string mode_to_string(FactorMode mode) {
    return mode == FactorMode::Thin ? "thin" : "hermitian";
}

json tolerances_to_json(const ToleranceConfig &cfg) {
    json j;
    j["rank_tol"] = cfg.rank_tol;
    j["check_tol"] = cfg.check_tol;
    j["verify_tol"] = cfg.verify_tol;
    j["phase_tol"] = cfg.phase_tol;
    return j;
}

ToleranceConfig tolerances_from_json(const json &j) {
    ToleranceConfig cfg;
    cfg.rank_tol = j.at("rank_tol").get<double>();
    cfg.check_tol = j.at("check_tol").get<double>();
    cfg.verify_tol = j.at("verify_tol").get<double>();
    cfg.phase_tol = j.at("phase_tol").get<double>();
    return cfg;
}

}  // namespace

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array()) {
        throw Error("matrix: expected an array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json &row = j.at(i);
        if (!row.is_array() || row.size() != cols) {
            throw Error("matrix: ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const json &entry = row.at(c);
            if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
                !entry.at(1).is_number()) {
                throw Error("matrix: each entry must be a [re, im] pair of numbers");
            }
            out(i, c) = cdouble{entry.at(0).get<double>(), entry.at(1).get<double>()};
        }
    }
    if (!out.all_finite()) {
        throw NonFinite("matrix: entries must be finite");
    }
    return out;
}

json povm_to_json(const Povm &povm) {
    json j;
    j["dim"] = povm.dim;
    json elements = json::array();
    for (const PovmElement &e : povm.elements) {
        json el;
        el["label"] = e.label;
        el["matrix"] = matrix_to_json(e.matrix);
        elements.push_back(std::move(el));
    }
    j["elements"] = std::move(elements);
    return j;
}

Povm povm_from_json(const json &j) {
    Povm out;
    out.dim = j.at("dim").get<std::size_t>();
    if (out.dim < 1) {
        throw Error("povm: dim must be at least 1");
    }
    const json &elements = j.at("elements");
    if (!elements.is_array() || elements.empty()) {
        throw Error("povm: need a non-empty elements array");
    }
    for (const json &el : elements) {
        PovmElement e;
        e.label = el.at("label").get<std::string>();
        e.matrix = matrix_from_json(el.at("matrix"));
        if (e.matrix.rows() != out.dim || e.matrix.cols() != out.dim) {
            throw Error("povm: element '" + e.label + "' is not dim×dim");
        }
        out.elements.push_back(std::move(e));
    }
    return out;
}

json extension_to_json(const NaimarkExtension &ext) {
    json j;
    j["system_dim"] = ext.system_dim;
    j["total_dim"] = ext.total_dim;
    j["ancilla_dim"] = ext.ancilla_dim;
    j["band_widths"] = ext.band_widths;
    json conv;
    conv["factor_mode"] = mode_to_string(ext.conventions.factor_mode);
    conv["phase"] = ext.conventions.phase;
    conv["tolerances"] = tolerances_to_json(ext.conventions.tolerances);
    j["conventions"] = std::move(conv);
    json projectors = json::array();
    for (const PovmElement &p : ext.projectors) {
        json el;
        el["label"] = p.label;
        el["matrix"] = matrix_to_json(p.matrix);
        projectors.push_back(std::move(el));
    }
    j["projectors"] = std::move(projectors);
    return j;
}

NaimarkExtension extension_from_json(const json &j) {
    NaimarkExtension out;
    out.system_dim = j.at("system_dim").get<std::size_t>();
    out.total_dim = j.at("total_dim").get<std::size_t>();
    out.ancilla_dim = j.at("ancilla_dim").get<std::size_t>();
    out.band_widths = j.at("band_widths").get<std::vector<std::size_t>>();
    const json &conv = j.at("conventions");
    out.conventions.factor_mode = mode_from_string(conv.at("factor_mode").get<std::string>());
    out.conventions.phase = conv.at("phase").get<std::string>();
    out.conventions.tolerances = tolerances_from_json(conv.at("tolerances"));
    for (const json &el : j.at("projectors")) {
        PovmElement p;
        p.label = el.at("label").get<std::string>();
        p.matrix = matrix_from_json(el.at("matrix"));
        if (p.matrix.rows() != out.total_dim || p.matrix.cols() != out.total_dim) {
            throw Error("extension: projector '" + p.label + "' is not total_dim×total_dim");
        }
        out.projectors.push_back(std::move(p));
    }
    return out;
}

json report_to_json(const VerificationReport &report) {
    json j;
    j["pass"] = report.pass();
    j["tolerance"] = report.tolerance;
    j["samples"] = report.samples;
    j["seed"] = report.seed;

    json checks;
    {
        json c;
        c["pass"] = report.idempotence_pass;
        c["max_residual"] = report.max_idempotence();
        json per = json::array();
        for (const ProjectorResidual &r : report.projectors) {
            per.push_back(r.idempotence);
        }
        c["per_projector"] = std::move(per);
        checks["idempotence"] = std::move(c);
    }
    {
        json c;
        c["pass"] = report.hermiticity_pass;
        c["max_residual"] = report.max_hermiticity();
        json per = json::array();
        for (const ProjectorResidual &r : report.projectors) {
            per.push_back(r.hermiticity);
        }
        c["per_projector"] = std::move(per);
        checks["hermiticity"] = std::move(c);
    }
    {
        json c;
        c["pass"] = report.orthogonality_pass;
        c["max_residual"] = report.max_orthogonality();
        json pairs = json::array();
        for (const VerificationReport::PairResidual &r : report.orthogonality) {
            json p;
            p["m"] = r.m;
            p["n"] = r.n;
            p["residual"] = r.residual;
            pairs.push_back(std::move(p));
        }
        c["pairs"] = std::move(pairs);
        checks["orthogonality"] = std::move(c);
    }
    {
        json c;
        c["pass"] = report.block_recovery_pass;
        c["max_residual"] = report.max_block_recovery();
        c["per_projector"] = report.block_recovery;
        checks["block_recovery"] = std::move(c);
    }
    {
        json c;
        c["pass"] = report.born_rule_pass;
        c["max_residual"] = report.born_rule_max;
        checks["born_rule"] = std::move(c);
    }
    j["checks"] = std::move(checks);
    return j;
}

json parse_json_text(const std::string &text, const std::string &origin) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        // nlohmann reports a byte offset; convert it to line/column.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(origin + ": parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + e.what());
    }
}

json load_json_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path);
}

void save_json_file(const std::string &path, const json &j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw Error("write failed for " + path);
    }
}

}  // namespace naimark
