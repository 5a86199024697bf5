#include "wseq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wseq/families.hpp"

namespace wseq {

namespace {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "\"+inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    // keep doubles recognizable as floats
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

void write(std::ostringstream& os, const json& j, int indent, int depth) {
    const std::string pad = indent > 0 ? std::string(std::size_t(indent * (depth + 1)), ' ') : "";
    const std::string pad_end = indent > 0 ? std::string(std::size_t(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << '{' << nl;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ',' << nl;
                first = false;
                os << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
                write(os, it.value(), indent, depth + 1);
            }
            os << nl << pad_end << '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // flat numeric arrays stay on one line
            bool flat = true;
            for (const auto& e : j)
                if (e.is_structured()) flat = false;
            os << '[';
            if (!flat) os << nl;
            bool first = true;
            for (const auto& e : j) {
                if (!first) os << ',' << (flat ? (indent > 0 ? " " : "") : nl);
                first = false;
                if (!flat) os << pad;
                write(os, e, indent, depth + 1);
            }
            if (!flat) os << nl << pad_end;
            os << ']';
            return;
        }
        case json::value_t::number_float: os << fmt_double(j.get<double>()); return;
        default: os << j.dump(); return;
    }
}

bool matches(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > 1e-9 * (1.0 + std::fabs(b[i]))) return false;
    return true;
}

bool catalog_sequence_id(const std::string& id) {
    try {
        return FamilyDescriptor{id, json::object()}.kind() == "sequence";
    } catch (const DomainError&) {
        return false;
    }
}

}  // namespace

std::string dump_json(const json& j, int indent) {
    std::ostringstream os;
    write(os, j, indent, 0);
    os << '\n';
    return os.str();
}

json to_json(const WeightSequence& M) {
    return json{{"family", M.family}, {"params", M.params}, {"J", M.J()}, {"log_values", M.log_values}};
}

json to_json(const WeightMatrix& M) {
    json seqs = json::array();
    for (const auto& s : M.sequences) seqs.push_back(to_json(s));
    return json{{"family", M.family}, {"params", M.params}, {"indices", M.indices}, {"sequences", seqs}};
}

json to_json(const WeightFunction& w) {
    json params = w.params();
    json out = {{"kind", w.kind_name()}, {"family", w.family()}};
    if (w.kind() == WeightFunction::Kind::Table) {
        out["t_grid"] = params["t_grid"];
        out["values"] = params["values"];
        params.erase("t_grid");
        params.erase("values");
    }
    out["params"] = params;
    return out;
}

WeightSequence sequence_from_json(const json& j, int J) {
    if (j.contains("id")) {
        FamilyDescriptor d = descriptor_from_json(j);
        return make_sequence(d, J > 0 ? J : default_config().J);
    }
    if (!j.contains("log_values")) throw DomainError("sequence JSON needs \"log_values\" or a descriptor \"id\"");
    std::vector<double> v;
    for (const auto& e : j.at("log_values")) {
        if (!e.is_number()) throw DomainError("log_values must be numeric");
        v.push_back(e.get<double>());
    }
    if (v.size() < 3) throw DomainError("sequence needs J >= 2");
    const std::string family = j.value("family", std::string("table"));
    const json params = j.value("params", json::object());
    if (catalog_sequence_id(family)) {
        try {
            WeightSequence g = make_sequence(FamilyDescriptor{family, params}, int(v.size()) - 1);
            if (matches(g.log_values, v)) return J > 0 ? extended(g, J) : g;
        } catch (const DomainError&) {
        }
    }
    WeightSequence s = sequence_from_logs(std::move(v), family, params);
    return J > 0 && J < s.J() ? extended(s, J) : s;
}

WeightMatrix matrix_from_json(const json& j, const Config& cfg) {
    if (j.contains("id")) return make_weight_matrix(descriptor_from_json(j), cfg);
    if (!j.contains("indices") || !j.contains("sequences"))
        throw DomainError("matrix JSON needs \"indices\" and \"sequences\" or a descriptor \"id\"");
    std::vector<double> idx = j.at("indices").get<std::vector<double>>();
    std::vector<WeightSequence> seqs;
    for (const auto& s : j.at("sequences")) seqs.push_back(sequence_from_json(s));
    const std::string family = j.value("family", std::string("table"));
    const json params = j.value("params", json::object());
    // catalog matrices regain their generator when the stored entries match it
    try {
        FamilyDescriptor d;
        if (family == "single" && params.contains("sequence"))
            d = descriptor_from_json(params["sequence"]);
        else
            d = FamilyDescriptor{family, params};
        if (d.kind() == "matrix" || family == "single") {
            Config c = cfg;
            c.J = seqs.front().J();
            WeightMatrix g = make_weight_matrix(d, c);
            bool same = g.indices == idx;
            for (std::size_t i = 0; same && i < seqs.size(); ++i)
                same = matches(g.sequences[i].log_values, seqs[i].log_values);
            if (same) return g;
        }
    } catch (const DomainError&) {
    }
    return make_matrix(std::move(idx), std::move(seqs), family, params);
}

WeightFunction weight_from_json(const json& j, const Config& cfg) {
    if (j.contains("id")) return make_weight(descriptor_from_json(j), cfg);
    const std::string kind = j.value("kind", std::string("table"));
    if (kind == "table" || j.contains("t_grid")) {
        return table_weight(j.at("t_grid").get<std::vector<double>>(), j.at("values").get<std::vector<double>>(),
                            j.value("family", std::string("table")), j.value("params", json::object()));
    }
    const json params = j.value("params", json::object());
    if (kind == "associated") {
        if (j.contains("source")) return associated_weight(sequence_from_json(j["source"]));
        FamilyDescriptor d{params.at("source_family").get<std::string>(), params.value("source_params", json::object())};
        return associated_weight(make_sequence(d, params.value("J", cfg.J_eval)));
    }
    return make_weight(FamilyDescriptor{j.at("family").get<std::string>(), params}, cfg);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + path + "'");
    out << text;
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns) {
    if (header.size() != columns.size()) throw DomainError("csv: header/column count mismatch");
    std::ostringstream os;
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << '\n';
    const std::size_t n = columns.empty() ? 0 : columns.front().size();
    for (const auto& col : columns)
        if (col.size() != n) throw DomainError("csv: ragged columns");
    char buf[40];
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const double v = columns[c][r];
            if (std::isfinite(v))
                std::snprintf(buf, sizeof buf, "%.17g", v);
            else
                std::snprintf(buf, sizeof buf, "%s", std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf"));
            os << (c ? "," : "") << buf;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace wseq
