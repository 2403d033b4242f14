#include "ecclab/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "ecclab/error.hpp"

namespace ecclab {

using nlohmann::json;

OutputFormat parse_format(std::string_view text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "text") return OutputFormat::text;
    throw InvalidArgument("unknown output format '" + std::string(text) + "' (json, csv, text)");
}

namespace {

std::string num(double d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

void put(json& j, const std::string& key, const Rational& r) {
    j[key] = r.str();
    j[key + "_float"] = r.to_double();
}

void put(json& j, const std::string& key, const std::optional<Quantity>& q) {
    if (!q) {
        j[key] = nullptr;
        j[key + "_float"] = nullptr;
        return;
    }
    j[key] = q->exact ? json(q->exact->str()) : json(nullptr);
    j[key + "_float"] = q->approx;
}

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json witness_json(const Witness& w) {
    json j;
    j["n"] = w.n;
    j["graph6"] = w.graph6;
    j["status"] = std::string(to_string(w.status));
    put(j, "value", std::optional<Quantity>(w.value));
    put(j, "bound", w.bound);
    put(j, "slack", w.slack);
    return j;
}

json witnesses(const std::vector<Witness>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(witness_json(w));
    return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_quantity(const std::optional<Quantity>& q) { return q ? q->str() : ""; }

}  // namespace

json to_json(const InvariantReport& r, const std::string& graph6) {
    json j;
    j["graph6"] = graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["min_degree"] = r.min_degree;
    j["max_degree"] = r.max_degree;
    j["radius"] = r.radius;
    j["diameter"] = r.diameter;
    put(j, "ecc", r.average_eccentricity);
    j["eccentric_connectivity"] = r.eccentric_connectivity;
    j["wiener"] = r.wiener;
    j["randic"] = opt(r.randic);
    j["independence"] = opt(r.independence);
    j["clique"] = opt(r.clique);
    j["domination"] = opt(r.domination);
    j["chromatic"] = opt(r.chromatic);
    j["spectral_radius"] = r.spectral_radius;
    return j;
}

json to_json(const ScanReport& r) {
    json j;
    j["conjecture"] = r.id;
    j["paper_label"] = r.paper_label;
    j["standing"] = std::string(to_string(r.standing));
    j["class"] = r.graph_class;
    j["n_min"] = r.n_min;
    j["n_max"] = r.n_max;
    j["scanned"] = r.scanned;
    j["violations"] = witnesses(r.violations);
    j["equality"] = witnesses(r.equality_graphs);
    j["near_equality"] = witnesses(r.near_equality_graphs);
    json per = json::array();
    for (const auto& s : r.per_n) {
        json o;
        o["n"] = s.n;
        o["scanned"] = s.scanned;
        o["violations"] = s.violations;
        o["equalities"] = s.equalities;
        o["near_equalities"] = s.near_equalities;
        o["indeterminate"] = s.indeterminate;
        put(o, "extremal_value", s.extremal_value);
        o["extremal_graphs"] = witnesses(s.extremal_graphs);
        o["family_member"] = opt(s.family_member);
        per.push_back(std::move(o));
    }
    j["per_n"] = std::move(per);
    return j;
}

json to_json(std::span<const A100Row> rows) {
    json a = json::array();
    for (const auto& r : rows) {
        json j;
        j["k"] = r.k;
        j["delta"] = r.delta;
        j["n"] = r.n;
        j["min_degree"] = r.min_degree;
        put(j, "ecc_closed_form", r.ecc_closed_form);
        put(j, "ecc_bfs", r.ecc_bfs);
        j["forms_agree"] = r.forms_agree;
        put(j, "product", r.product);
        put(j, "bound", r.bound);
        put(j, "margin", r.margin);
        j["criterion"] = r.criterion;
        j["violated"] = r.violated;
        a.push_back(std::move(j));
    }
    return a;
}

json to_json(std::span<const FormulaRow> rows) {
    json a = json::array();
    for (const auto& r : rows) {
        json j;
        j["family"] = r.family;
        j["n"] = r.n;
        put(j, "closed_form", r.closed_form);
        put(j, "bfs", r.bfs);
        j["agree"] = r.agree();
        a.push_back(std::move(j));
    }
    return a;
}

std::string render(const InvariantReport& r, const std::string& graph6, OutputFormat f) {
    if (f == OutputFormat::json) return dump(to_json(r, graph6));
    auto o = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    std::ostringstream out;
    if (f == OutputFormat::csv) {
        out << "graph6,n,m,min_degree,max_degree,radius,diameter,ecc,ecc_float,eccentric_connectivity,wiener,"
               "randic,independence,clique,domination,chromatic,spectral_radius\n";
        out << graph6 << ',' << r.n << ',' << r.m << ',' << r.min_degree << ',' << r.max_degree << ',' << r.radius << ','
            << r.diameter << ',' << r.average_eccentricity.str() << ',' << num(r.average_eccentricity.to_double()) << ','
            << r.eccentric_connectivity << ',' << r.wiener << ',' << (r.randic ? num(*r.randic) : "") << ','
            << o(r.independence) << ',' << o(r.clique) << ',' << o(r.domination) << ',' << o(r.chromatic) << ','
            << num(r.spectral_radius) << '\n';
        return out.str();
    }
    auto line = [&](const char* k, const std::string& v) { out << k << ": " << (v.empty() ? "-" : v) << '\n'; };
    line("graph6", graph6);
    line("n", std::to_string(r.n));
    line("m", std::to_string(r.m));
    line("degree", std::to_string(r.min_degree) + ".." + std::to_string(r.max_degree));
    line("radius", std::to_string(r.radius));
    line("diameter", std::to_string(r.diameter));
    line("ecc", r.average_eccentricity.str() + " (" + num(r.average_eccentricity.to_double()) + ")");
    line("eccentric connectivity", std::to_string(r.eccentric_connectivity));
    line("wiener", std::to_string(r.wiener));
    line("randic", r.randic ? num(*r.randic) : "");
    line("independence", o(r.independence));
    line("clique", o(r.clique));
    line("domination", o(r.domination));
    line("chromatic", o(r.chromatic));
    line("spectral radius", num(r.spectral_radius));
    return out.str();
}

std::string render(const ScanReport& r, OutputFormat f) {
    if (f == OutputFormat::json) return dump(to_json(r));
    std::ostringstream out;
    if (f == OutputFormat::csv) {
        out << "conjecture,n,row,graph6,value,bound,slack,status,scanned\n";
        auto emit = [&](const char* row, const Witness& w, std::size_t scanned) {
            out << r.id << ',' << w.n << ',' << row << ',' << w.graph6 << ',' << w.value.str() << ','
                << csv_quantity(w.bound) << ',' << csv_quantity(w.slack) << ',' << to_string(w.status) << ','
                << scanned << '\n';
        };
        for (const auto& s : r.per_n) {
            auto at = [&](const std::vector<Witness>& ws, const char* row) {
                for (const auto& w : ws)
                    if (w.n == s.n) emit(row, w, s.scanned);
            };
            at(r.violations, "violation");
            at(r.equality_graphs, "equality");
            at(r.near_equality_graphs, "near_equality");
            for (const auto& w : s.extremal_graphs) emit("extremal", w, s.scanned);
        }
        return out.str();
    }
    out << r.id << " (" << r.paper_label << ", " << to_string(r.standing) << ") on " << r.graph_class << ", n = " << r.n_min
        << ".." << r.n_max << ": " << r.scanned << " graphs, " << r.violations.size() << " violations\n";
    for (const auto& s : r.per_n) {
        out << "  n=" << s.n << " scanned=" << s.scanned << " violations=" << s.violations << " equality=" << s.equalities
            << " near=" << s.near_equalities;
        if (s.extremal_value) out << " extremal=" << s.extremal_value->str();
        if (s.family_member) out << " family_member=" << (*s.family_member ? "yes" : "no");
        out << '\n';
        for (const auto& w : s.extremal_graphs) out << "    extremal " << w.graph6 << '\n';
    }
    for (const auto& w : r.violations)
        out << "  VIOLATION n=" << w.n << ' ' << w.graph6 << " value=" << w.value.str() << " bound=" << csv_quantity(w.bound)
            << '\n';
    return out.str();
}

std::string render(std::span<const A100Row> rows, OutputFormat f) {
    if (f == OutputFormat::json) return dump(to_json(rows));
    std::ostringstream out;
    if (f == OutputFormat::csv) {
        out << "k,delta,n,min_degree,ecc_closed_form,ecc_bfs,forms_agree,product,bound,margin,margin_float,criterion,violated\n";
        for (const auto& r : rows)
            out << r.k << ',' << r.delta << ',' << r.n << ',' << r.min_degree << ',' << r.ecc_closed_form.str() << ','
                << r.ecc_bfs.str() << ',' << (r.forms_agree ? "true" : "false") << ',' << r.product.str() << ','
                << r.bound.str() << ',' << r.margin.str() << ',' << num(r.margin.to_double()) << ',' << r.criterion << ','
                << (r.violated ? "true" : "false") << '\n';
        return out.str();
    }
    for (const auto& r : rows)
        out << "k=" << r.k << " delta=" << r.delta << " n=" << r.n << " ecc=" << r.ecc_bfs.str()
            << (r.forms_agree ? "" : " (closed form disagrees)") << " delta*ecc=" << r.product.str() << " ("
            << num(r.product.to_double()) << ") 2n-2=" << r.bound.str() << " margin=" << num(r.margin.to_double())
            << (r.violated ? " VIOLATED" : " ok") << '\n';
    return out.str();
}

std::string render(std::span<const FormulaRow> rows, OutputFormat f) {
    if (f == OutputFormat::json) return dump(to_json(rows));
    std::ostringstream out;
    if (f == OutputFormat::csv) {
        out << "family,n,closed_form,bfs,agree\n";
        for (const auto& r : rows)
            out << r.family << ',' << r.n << ',' << r.closed_form.str() << ',' << r.bfs.str() << ','
                << (r.agree() ? "true" : "false") << '\n';
        return out.str();
    }
    for (const auto& r : rows)
        out << r.family << '\t' << r.closed_form.str() << '\t' << r.bfs.str() << (r.agree() ? "" : "\tMISMATCH") << '\n';
    return out.str();
}

}  // namespace ecclab
