#include "wseq/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "wseq/conjugation.hpp"

namespace wseq {

namespace {

const std::vector<std::string> kSequenceIds = {"gevrey", "qgevrey", "geom-shift", "from-mu", "slowvar"};
const std::vector<std::string> kWeightIds = {"power", "logpower"};
const std::vector<std::string> kMatrixIds = {"gevrey-matrix", "bmt-matrix", "geom-matrix"};

bool has(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

json parse_value(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    return s;
}

}  // namespace

std::string FamilyDescriptor::kind() const {
    if (has(kSequenceIds, id)) return "sequence";
    if (has(kWeightIds, id)) return "weight";
    if (has(kMatrixIds, id)) return "matrix";
    throw DomainError("unknown family '" + id + "'");
}

double FamilyDescriptor::num(const std::string& key, double def) const {
    if (!params.contains(key)) return def;
    const json& v = params[key];
    if (v.is_number()) return v.get<double>();
    throw DomainError("parameter '" + key + "' of '" + id + "' must be a single number");
}

std::vector<double> FamilyDescriptor::list(const std::string& key, std::vector<double> def) const {
    if (!params.contains(key)) return def;
    const json& v = params[key];
    if (v.is_number()) return {v.get<double>()};
    std::vector<double> out;
    if (v.is_array())
        for (const auto& e : v) {
            if (!e.is_number()) throw DomainError("parameter '" + key + "' must be numeric");
            out.push_back(e.get<double>());
        }
    else
        throw DomainError("parameter '" + key + "' must be numeric");
    return out;
}

std::string FamilyDescriptor::str(const std::string& key, const std::string& def) const {
    if (!params.contains(key)) return def;
    const json& v = params[key];
    if (v.is_string()) return v.get<std::string>();
    throw DomainError("parameter '" + key + "' of '" + id + "' must be a name");
}

json to_json(const FamilyDescriptor& d) { return json{{"id", d.id}, {"params", d.params}}; }

FamilyDescriptor descriptor_from_json(const json& j) {
    FamilyDescriptor d;
    d.id = j.at("id").get<std::string>();
    if (j.contains("params")) d.params = j["params"];
    d.kind();
    return d;
}

FamilyDescriptor parse_descriptor(const std::string& spec) {
    FamilyDescriptor d;
    auto colon = spec.find(':');
    d.id = spec.substr(0, colon);
    if (d.id.empty()) throw DomainError("empty family spec");
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok, key;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw DomainError("empty token in family spec '" + spec + "'");
            auto eq = tok.find('=');
            if (eq != std::string::npos) {
                key = tok.substr(0, eq);
                if (key.empty()) throw DomainError("empty key in family spec '" + spec + "'");
                d.params[key] = parse_value(tok.substr(eq + 1));
            } else {
                if (key.empty()) throw DomainError("value without key in family spec '" + spec + "'");
                json& cur = d.params[key];
                if (!cur.is_array()) cur = json::array({cur});
                cur.push_back(parse_value(tok));
            }
        }
    }
    if (d.id == "slowvar") {
        d.id = "from-mu";
        d.params["kind"] = "slowvar";
    }
    d.kind();
    return d;
}

std::string to_string(const FamilyDescriptor& d) {
    std::string s = d.id;
    bool first = true;
    for (auto it = d.params.begin(); it != d.params.end(); ++it) {
        s += first ? ":" : ",";
        first = false;
        s += it.key() + "=";
        auto one = [](const json& v) {
            if (v.is_string()) return v.get<std::string>();
            if (!v.is_number()) return v.dump();
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
            return std::string(buf);
        };
        if (it.value().is_array()) {
            bool f2 = true;
            for (const auto& e : it.value()) {
                if (!f2) s += ",";
                f2 = false;
                s += one(e);
            }
        } else {
            s += one(it.value());
        }
    }
    return s;
}

std::vector<FamilyDescriptor> catalog_list() {
    const char* specs[] = {"gevrey:s=0.5",      "gevrey:s=1",         "gevrey:s=2",
                           "qgevrey:q=2",       "from-mu:kind=slowvar", "geom-shift:C=4",
                           "power:rho=0.5",     "power:rho=1",        "logpower:s=2",
                           "gevrey-matrix:xs=0.5,1,2,4", "bmt-matrix:weight=power,rho=0.5",
                           "geom-matrix:Cs=1,2,4"};
    std::vector<FamilyDescriptor> out;
    for (const char* s : specs) out.push_back(parse_descriptor(s));
    return out;
}

namespace {

SeqGenerator sequence_generator(const FamilyDescriptor& d) {
    if (d.id == "gevrey") {
        double s = d.num("s", 1.0);
        if (!(s > 0)) throw DomainError("gevrey needs s > 0");
        return [s](int J) {
            std::vector<double> v(std::size_t(J) + 1);
            for (int j = 0; j <= J; ++j) v[std::size_t(j)] = s * std::lgamma(j + 1.0);
            return v;
        };
    }
    if (d.id == "qgevrey") {
        double q = d.num("q", 2.0);
        if (!(q > 1)) throw DomainError("qgevrey needs q > 1");
        const double lq = std::log(q);
        return [lq](int J) {
            std::vector<double> v(std::size_t(J) + 1);
            for (int j = 0; j <= J; ++j) v[std::size_t(j)] = double(j) * j * lq;
            return v;
        };
    }
    if (d.id == "from-mu") {
        std::string k = d.str("kind", "slowvar");
        if (k != "slowvar") throw DomainError("from-mu: unknown kind '" + k + "'");
        return [](int J) {
            std::vector<double> v(std::size_t(J) + 1, 0.0);
            for (int j = 1; j <= J; ++j) v[std::size_t(j)] = v[std::size_t(j - 1)] + std::sqrt(std::log1p(j));
            return v;
        };
    }
    if (d.id == "geom-shift") {
        double C = d.num("C", 2.0);
        if (!(C >= 1)) throw DomainError("geom-shift needs C >= 1");
        FamilyDescriptor base;
        base.id = d.str("base", "gevrey");
        base.params = d.params;
        base.params.erase("C");
        base.params.erase("base");
        if (base.id == "geom-shift" || !has(kSequenceIds, base.id))
            throw DomainError("geom-shift: base must be a plain sequence family");
        SeqGenerator inner = sequence_generator(base);
        const double lc = std::log(C);
        return [inner, lc](int J) {
            std::vector<double> v = inner(J);
            for (int j = 0; j <= J; ++j) v[std::size_t(j)] += j * lc;
            return v;
        };
    }
    throw DomainError("'" + d.id + "' is not a sequence family");
}

}  // namespace

WeightSequence make_sequence(const FamilyDescriptor& d, int J) {
    if (J < 2) throw DomainError("J must be at least 2");
    return sequence_from_generator(d.id, d.params, sequence_generator(d), J);
}

WeightSequence make_sequence(const std::string& spec, int J) { return make_sequence(parse_descriptor(spec), J); }

WeightFunction make_weight(const FamilyDescriptor& d, const Config& cfg) {
    if (d.id == "power") return power_weight(d.num("rho", 1.0));
    if (d.id == "logpower") return logpower_weight(d.num("s", 2.0));
    if (d.kind() == "sequence") return associated_weight(make_sequence(d, cfg.J_eval));
    throw DomainError("'" + d.id + "' is not a weight family");
}

WeightFunction make_weight(const std::string& spec, const Config& cfg) {
    return make_weight(parse_descriptor(spec), cfg);
}

WeightMatrix make_weight_matrix(const FamilyDescriptor& d, const Config& cfg) {
    const int J = cfg.J;
    if (d.kind() == "sequence") {
        WeightMatrix m = make_matrix({1.0}, {make_sequence(d, J)}, "single", {{"sequence", to_json(d)}});
        return m;
    }
    if (d.id == "gevrey-matrix") {
        std::vector<double> xs = d.list("xs", {0.5, 1, 2, 4});
        std::sort(xs.begin(), xs.end());
        auto gen = [](double x, int Jn) {
            FamilyDescriptor g{"gevrey", {{"s", x}}};
            return make_sequence(g, Jn);
        };
        std::vector<WeightSequence> seqs;
        for (double x : xs) seqs.push_back(gen(x, J));
        WeightMatrix m = make_matrix(xs, std::move(seqs), d.id, d.params);
        m.generator = std::make_shared<const MatrixGenerator>(gen);
        return m;
    }
    if (d.id == "geom-matrix") {
        std::vector<double> Cs = d.list("Cs", {1, 2, 4});
        std::sort(Cs.begin(), Cs.end());
        json base = d.params;
        base.erase("Cs");
        auto gen = [base](double C, int Jn) {
            FamilyDescriptor g{"geom-shift", base};
            g.params["C"] = C;
            return make_sequence(g, Jn);
        };
        std::vector<WeightSequence> seqs;
        for (double C : Cs) seqs.push_back(gen(C, J));
        WeightMatrix m = make_matrix(Cs, std::move(seqs), d.id, d.params);
        m.generator = std::make_shared<const MatrixGenerator>(gen);
        return m;
    }
    if (d.id == "bmt-matrix") {
        FamilyDescriptor w;
        w.id = d.str("weight", "power");
        w.params = d.params;
        w.params.erase("weight");
        w.params.erase("ls");
        std::vector<double> ls = d.list("ls", cfg.l_grid);
        WeightMatrix m = associated_matrix(make_weight(w, cfg), ls, J);
        m.family = d.id;
        m.params = d.params;
        return m;
    }
    throw DomainError("'" + d.id + "' does not describe a matrix");
}

WeightMatrix make_weight_matrix(const std::string& spec, const Config& cfg) {
    return make_weight_matrix(parse_descriptor(spec), cfg);
}

json to_json(const ThetaBound& b) {
    return json{{"j", b.j},           {"K_trunc", b.K_trunc},
                {"log_s", b.log_s},   {"log_N", b.log_N},
                {"log_margin", b.log_margin}, {"log_tail_bound", b.log_tail_bound},
                {"verdict", to_string(b.verdict)}};
}

ThetaBound theta_derivative_bound(const WeightSequence& N0, int j, int K_trunc) {
    if (j < 0) throw DomainError("theta bound needs j >= 0");
    if (K_trunc < j + 16) throw DomainError("theta bound needs K_trunc >= j + 16");
    WeightSequence N = N0.J() >= K_trunc ? N0 : extended(N0, K_trunc);
    if (!is_log_convex(N) || std::fabs(N.log_M(0)) > 1e-12)
        throw DomainError("theta bound needs a normalized log-convex sequence");
    const double l2 = std::log(2.0);
    std::vector<double> terms;
    for (int k = 0; k <= K_trunc; ++k) {
        double lnu = k == 0 ? 0.0 : N.log_M(k) - N.log_M(k - 1);
        terms.push_back(N.log_M(k) + double(j - k) * (l2 + lnu));
    }
    double mx = *std::max_element(terms.begin(), terms.end());
    double acc = 0;
    for (double t : terms) acc += std::exp(t - mx);
    ThetaBound b;
    b.j = j;
    b.K_trunc = K_trunc;
    b.log_s = mx + std::log(acc);
    b.log_N = N.log_M(j);
    b.log_margin = b.log_s - b.log_N;
    // For k >= j consecutive terms shrink at least by 1/2 when nu is nondecreasing,
    // so the omitted tail is at most the last kept term.
    b.log_tail_bound = terms.back();
    const bool tail_small = b.log_tail_bound - b.log_s <= std::log(1e-8);
    b.verdict = !tail_small ? Verdict::Inconclusive : verdict_from_bool(b.log_margin >= 0);
    return b;
}

}  // namespace wseq
