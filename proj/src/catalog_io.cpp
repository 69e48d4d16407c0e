#include "mlk/catalog_io.hpp"

#include "json.hpp"

namespace mlk {

using nlohmann::ordered_json;

std::string catalog_to_json(const std::vector<FamilySpec>& entries, int indent) {
    ordered_json root;
    root["families"] = ordered_json::array();
    for (const auto& f : entries) {
        ordered_json e;
        e["series"] = series_name(f.series);
        e["p"] = f.p;
        e["p_rule"] = (f.p == 0) ? "p=0" : "p>=1";
        e["id"] = f.id;
        e["edges"] = ordered_json::array();
        for (const auto& [i, j, s] : f.edges) e["edges"].push_back({i, j, s});
        e["betas"] = ordered_json::array();
        for (const auto& b : f.betas) {
            ordered_json v = ordered_json::array();
            for (const auto& x : b) v.push_back(x.get_si());
            e["betas"].push_back(v);
        }
        ordered_json exp;
        exp["mu"] = f.mu;
        exp["b"] = ordered_json::array();
        for (const auto& idx : f.b) {
            ordered_json v = ordered_json::array();
            for (long n : idx) v.push_back(n);
            exp["b"].push_back(v);
        }
        exp["m"] = f.m;
        exp["m2"] = f.m2;
        exp["rI"] = f.r_I;
        e["expected"] = exp;
        if (f.weights) {
            ordered_json w = ordered_json::array();
            for (const auto& x : *f.weights) w.push_back(x.get_str());
            e["weights"] = w;
        }
        if (f.triangle) e["triangle"] = {(*f.triangle)[0], (*f.triangle)[1], (*f.triangle)[2]};
        root["families"].push_back(e);
    }
    return root.dump(indent);
}

std::vector<FamilySpec> catalog_from_json(const std::string& text) {
    ordered_json root = ordered_json::parse(text);
    std::vector<FamilySpec> out;
    for (const auto& e : root.at("families")) {
        FamilySpec f;
        f.series = parse_series(e.at("series").get<std::string>());
        f.p = e.at("p").get<long>();
        f.id = e.at("id").get<std::string>();
        const auto& exp = e.at("expected");
        f.mu = exp.at("mu").get<long>();
        f.m = exp.at("m").get<long>();
        f.m2 = exp.at("m2").get<long>();
        f.r_I = exp.at("rI").get<long>();
        for (const auto& idx : exp.at("b")) {
            std::multiset<long> ms;
            for (const auto& n : idx) ms.insert(n.get<long>());
            f.b.push_back(ms);
        }
        for (const auto& ed : e.at("edges"))
            f.edges.push_back({ed.at(0).get<long>(), ed.at(1).get<long>(), ed.at(2).get<long>()});
        for (const auto& b : e.at("betas")) {
            std::vector<Int> v;
            for (const auto& x : b) v.push_back(Int(x.get<long>()));
            f.betas.push_back(v);
        }
        if (e.contains("weights")) {
            std::array<Rat, 3> w;
            for (int i = 0; i < 3; ++i) w[i] = Rat(e.at("weights").at(i).get<std::string>());
            f.weights = w;
        }
        if (e.contains("triangle"))
            f.triangle = {e.at("triangle").at(0).get<long>(), e.at("triangle").at(1).get<long>(),
                          e.at("triangle").at(2).get<long>()};
        out.push_back(std::move(f));
    }
    return out;
}

const FamilySpec* catalog_find(const std::vector<FamilySpec>& entries, Series s, long p) {
    for (const auto& f : entries)
        if (f.series == s && f.p == p) return &f;
    return nullptr;
}

std::string matrix_to_json(const IntMat& m, int indent) {
    ordered_json j;
    j["rank"] = m.rows();
    j["rows"] = ordered_json::array();
    for (long i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (long c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).get_str());
        j["rows"].push_back(row);
    }
    return j.dump(indent);
}

IntMat matrix_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    long n = j.at("rank").get<long>();
    const auto& rows = j.at("rows");
    if (static_cast<long>(rows.size()) != n) throw error("matrix rank/rows mismatch");
    IntMat m(n, n);
    for (long i = 0; i < n; ++i)
        for (long c = 0; c < n; ++c) {
            const auto& v = rows.at(i).at(c);
            m.at(i, c) = v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long>());
        }
    return m;
}

}  // namespace mlk
