#include "casimir/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

Json structure_json(const std::string& name, const StructureConstants& f,
                    const KillingMetric& metric) {
    Json j;
    j["algebra"] = name;
    j["dim"] = f.dim;
    Json fj = Json::array();
    for (const auto& [a, b, c, v] : f.entries())
        fj.push_back(Json::array({a, b, c, rat_to_string(v)}));
    j["f"] = std::move(fj);
    Json gj = Json::array();
    for (const auto& row : metric.g) {
        Json rj = Json::array();
        for (const auto& v : row) rj.push_back(rat_to_string(v));
        gj.push_back(std::move(rj));
    }
    j["g"] = std::move(gj);
    return j;
}

Json casimir_tensor_json(const SplitCasimir& C) {
    Json j = Json::array();
    for (const auto& [a, b, c, d, v] : C.quadruples())
        j.push_back(Json::array({a, b, c, d, rat_to_string(v)}));
    return j;
}

Json trace_table_json(const TraceTableReport& rep) {
    Json j;
    j["algebra"] = rep.algebra;
    j["n"] = rep.n;
    j["size"] = rep.size;
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json row;
        row["k"] = r.k;
        row["value"] = rat_to_string(r.value);
        if (r.formula)
            row["formula"] = rat_to_string(*r.formula);
        else
            row["formula"] = nullptr;
        row["match"] = r.match;
        rows.push_back(std::move(row));
    }
    j["traces"] = std::move(rows);
    return j;
}

Json decomposition_json(const DecompositionReport& rep) {
    Json j;
    j["algebra"] = rep.algebra;
    j["n"] = rep.n;
    j["size"] = rep.size;
    Json primes = Json::array();
    for (auto p : rep.primes) primes.push_back(std::to_string(p));
    j["primes"] = std::move(primes);
    Json spectrum = Json::array();
    for (const auto& g : rep.groups) {
        Json sj;
        sj["lambda"] = rat_to_string(g.lambda);
        sj["mult"] = g.observed;
        spectrum.push_back(std::move(sj));
    }
    j["spectrum"] = std::move(spectrum);
    Json groups = Json::array();
    for (const auto& g : rep.groups) {
        Json gj;
        gj["lambda"] = rat_to_string(g.lambda);
        gj["expected"] = g.expected_str();
        gj["observed"] = g.observed;
        gj["status"] = g.status;
        if (g.solved_label) {
            gj["solved_label"] = *g.solved_label;
            gj["solved_dim"] = rat_to_string(*g.solved_dim);
        }
        Json members = Json::array();
        for (const auto& m : g.members) {
            Json mj;
            mj["label"] = m.label;
            mj["mult"] = m.mult;
            mj["dim"] = m.dim ? Json(rat_to_string(*m.dim)) : Json(nullptr);
            members.push_back(std::move(mj));
        }
        gj["members"] = std::move(members);
        groups.push_back(std::move(gj));
    }
    j["groups"] = std::move(groups);
    return j;
}

Json verify_all_json(const VerifyAllReport& rep) {
    Json j;
    Json cj;
    cj["algebras"] = rep.config.algebras;
    cj["n_values"] = rep.config.n_values;
    cj["k_max"] = rep.config.k_max;
    cj["max_wedge_dim"] = rep.config.max_wedge_dim;
    cj["max_full_tensor_dim"] = rep.config.max_full_tensor_dim;
    cj["primes"] = rep.config.primes;
    cj["seed"] = rep.config.seed;
    j["config"] = std::move(cj);
    Json primes = Json::array();
    for (auto p : rep.primes) primes.push_back(std::to_string(p));
    j["primes"] = std::move(primes);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json cjj;
        cjj["name"] = c.name;
        cjj["status"] = c.pass ? "pass" : "fail";
        if (!c.detail.empty()) cjj["detail"] = c.detail;
        checks.push_back(std::move(cjj));
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"pass", rep.passed()}, {"fail", rep.failed()}};
    return j;
}

Json catalog_json(const Catalog& catalog, int n, Scope scope,
                  const VogelPoint* point) {
    Json j = Json::array();
    for (const auto& e : catalog.entries(n, scope)) {
        Json ej;
        ej["label"] = e.label;
        ej["n"] = n;
        if (point)
            ej["lambda"] = rat_to_string(e.lambda.eval(*point));
        else
            ej["lambda"] = e.lambda.str();
        ej["mult"] = e.mult;
        const Table2Row* row = catalog.find_row(e.label);
        std::string dim = "none";
        if (row && row->dim_kind == DimKind::RatAlpha) dim = "table2";
        else if (row && row->dim_kind != DimKind::None) dim = "poly";
        else if (e.label == "X5" || e.label == "M3") dim = "poly";
        ej["dim"] = dim;
        j.push_back(std::move(ej));
    }
    return j;
}

namespace {

std::string render_csv(const Json& j) {
    std::ostringstream out;
    if (j.contains("traces")) {
        out << "k,value,formula,match\n";
        for (const auto& r : j["traces"])
            out << r["k"] << "," << r["value"].get<std::string>() << ","
                << (r["formula"].is_null() ? ""
                                           : r["formula"].get<std::string>())
                << "," << (r["match"].get<bool>() ? "true" : "false") << "\n";
    } else if (j.contains("groups")) {
        out << "lambda,expected,observed,status\n";
        for (const auto& g : j["groups"])
            out << g["lambda"].get<std::string>() << ","
                << g["expected"].get<std::string>() << "," << g["observed"]
                << "," << g["status"].get<std::string>() << "\n";
    } else if (j.contains("checks")) {
        out << "name,status\n";
        for (const auto& c : j["checks"])
            out << c["name"].get<std::string>() << ","
                << c["status"].get<std::string>() << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return out.str();
}

std::string render_text(const Json& j) {
    std::ostringstream out;
    if (j.contains("traces")) {
        out << j["algebra"].get<std::string>() << " n=" << j["n"]
            << " size=" << j["size"] << "\n";
        for (const auto& r : j["traces"]) {
            out << "  k=" << r["k"] << "  " << r["value"].get<std::string>();
            if (!r["formula"].is_null())
                out << "  formula=" << r["formula"].get<std::string>()
                    << (r["match"].get<bool>() ? "  ok" : "  MISMATCH");
            out << "\n";
        }
    } else if (j.contains("groups")) {
        out << j["algebra"].get<std::string>() << " n=" << j["n"]
            << " size=" << j["size"] << "\n";
        for (const auto& g : j["groups"])
            out << "  lambda=" << g["lambda"].get<std::string>()
                << "  observed=" << g["observed"] << "  "
                << g["status"].get<std::string>() << "  ["
                << g["expected"].get<std::string>() << "]\n";
    } else if (j.contains("checks")) {
        for (const auto& c : j["checks"])
            out << (c["status"] == "pass" ? "[PASS] " : "[FAIL] ")
                << c["name"].get<std::string>() << "\n";
        out << "pass " << j["summary"]["pass"] << ", fail "
            << j["summary"]["fail"] << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return out.str();
}

}  // namespace

std::string render(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    if (format == "csv") return render_csv(j);
    if (format == "text") return render_text(j);
    throw Error(ErrorCode::Usage, "unknown format: " + format);
}

void write_output(const Json& j, const std::string& out,
                  const std::string& format) {
    std::string payload = render(j, format);
    if (out.empty() || out == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw Error(ErrorCode::Usage, "cannot open output file: " + out);
    f << payload;
}

}  // namespace casimir
