#pragma once

// JSON / CSV emission. Complex numbers serialize as two-element [re, im]
// arrays in JSON and paired re/im columns in CSV; JSON objects keep insertion
// order; all text output uses LF line endings.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heunc/connection.hpp"
#include "heunc/oracle.hpp"
#include "heunc/scalar.hpp"

namespace heunc {

using Json = nlohmann::ordered_json;

inline Json to_json(Cx z) { return Json::array({z.real(), z.imag()}); }

inline Cx complex_from_json(const Json& j) {
    return Cx(j.at(0).get<double>(), j.at(1).get<double>());
}

inline Json to_json(const ConnectionPair& p) {
    Json j;
    j["c11"] = to_json(p.c11);
    j["c12"] = to_json(p.c12);
    return j;
}

inline Json to_json(const ConnectionMatrix& m) {
    Json j;
    j["kind"] = to_string(m.kind);
    j["branch_tag"] = to_string(m.branch_tag);
    Json entries = Json::array();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) entries.push_back(to_json(m.entries[r][c]));
    j["entries"] = entries;
    Json rows = Json::array();
    for (const RowTriple& t : m.rows) {
        Json row;
        row["alpha"] = to_json(t.alpha);
        row["beta"] = to_json(t.beta);
        row["gamma"] = to_json(t.gamma);
        row["domain_ok"] = t.domain_ok;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

inline ConnectionMatrix matrix_from_json(const Json& j) {
    ConnectionMatrix m;
    m.kind = parse_matrix_kind(j.at("kind").get<std::string>());
    m.branch_tag = j.at("branch_tag").get<std::string>() == "plus"
                       ? BranchTag::phase_plus
                       : BranchTag::phase_minus;
    const Json& e = j.at("entries");
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m.entries[r][c] = complex_from_json(e.at(2 * r + c));
    const Json& rows = j.at("rows");
    for (int r = 0; r < 2; ++r) {
        m.rows[r].alpha = complex_from_json(rows.at(r).at("alpha"));
        m.rows[r].beta = complex_from_json(rows.at(r).at("beta"));
        m.rows[r].gamma = complex_from_json(rows.at(r).at("gamma"));
        m.rows[r].domain_ok = rows.at(r).at("domain_ok").get<bool>();
    }
    return m;
}

inline Json to_json(const RowResidual& r) {
    Json j;
    j["max_residual"] = r.max_residual;
    j["mean_residual"] = r.mean_residual;
    j["n_points"] = r.n_points;
    return j;
}

inline Json to_json(const MatrixResidualReport& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    j["branch_tag"] = to_string(r.branch_tag);
    j["rows"] = Json::array({to_json(r.rows[0]), to_json(r.rows[1])});
    j["max_residual"] = r.max_residual;
    return j;
}

// -------------------------------- CSV ---------------------------------

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out_ << ',';
            out_ << header[i];
        }
        out_ << '\n';
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

/// Shortest-round-trip double formatting (matches the JSON emitter).
/// Negative zero is normalized away.
inline std::string format_double(double v) {
    if (v == 0.0) return "0";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace heunc
