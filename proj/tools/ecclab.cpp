#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ecclab/conjectures.hpp"
#include "ecclab/enumeration.hpp"
#include "ecclab/error.hpp"
#include "ecclab/families.hpp"
#include "ecclab/invariants.hpp"
#include "ecclab/report_io.hpp"
#include "ecclab/transforms.hpp"

using namespace ecclab;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kComputation = 2;
constexpr int kOpenViolation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw UsageError("");
        return v;
    } catch (...) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

// "4..12", "7", "2,4,6" and mixtures such as "2..4,8".
std::vector<int> parse_range(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_int(part));
            continue;
        }
        int lo = to_int(part.substr(0, dots)), hi = to_int(part.substr(dots + 2));
        if (hi < lo) throw UsageError("empty range '" + part + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty range");
    return out;
}

std::vector<Graph> read_graphs(const std::string& g6, const std::string& input) {
    if (!g6.empty() && !input.empty()) throw UsageError("give either --g6 or --input, not both");
    if (g6 == "-") return read_graph6_stream(std::cin);
    if (!g6.empty()) return {decode_graph6(g6)};
    if (input.empty()) throw UsageError("no input graph (use --g6 or --input)");
    std::ifstream in(input);
    if (!in) throw UsageError("cannot open '" + input + "'");
    return read_graph6_stream(in);
}

Graph read_one(const std::string& g6, const std::string& input) {
    auto gs = read_graphs(g6, input);
    if (gs.size() != 1) throw UsageError("expected exactly one graph, got " + std::to_string(gs.size()));
    return gs.front();
}

// Renders many reports in one format: one JSON array, one CSV header.
template <class Fn>
std::string render_many(std::size_t count, OutputFormat f, Fn one) {
    if (count == 1) return one(0);
    std::string out;
    if (f == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < count; ++i) arr.push_back(nlohmann::json::parse(one(i)));
        return arr.dump(2) + "\n";
    }
    for (std::size_t i = 0; i < count; ++i) {
        std::string s = one(i);
        if (f == OutputFormat::csv && i > 0) s = s.substr(s.find('\n') + 1);
        if (f == OutputFormat::text && i > 0) out += "\n";
        out += s;
    }
    return out;
}

std::string ecc_summary(const Graph& g) {
    auto p = eccentricity_profile(g);
    return p.average.str() + " (" + std::to_string(p.average.to_double()) + ")";
}

std::string transform_report(const Graph& before, const Graph& after, OutputFormat f) {
    auto eb = average_eccentricity(before), ea = average_eccentricity(after);
    if (f == OutputFormat::json) {
        nlohmann::json j;
        j["before"] = encode_graph6(before);
        j["after"] = encode_graph6(after);
        j["ecc_before"] = eb.str();
        j["ecc_before_float"] = eb.to_double();
        j["ecc_after"] = ea.str();
        j["ecc_after_float"] = ea.to_double();
        j["delta"] = (ea - eb).str();
        return j.dump(2) + "\n";
    }
    if (f == OutputFormat::csv)
        return "before,after,ecc_before,ecc_after,delta\n" + encode_graph6(before) + "," + encode_graph6(after) + "," +
               eb.str() + "," + ea.str() + "," + (ea - eb).str() + "\n";
    return encode_graph6(after) + "\nbefore: " + encode_graph6(before) + " ecc " + ecc_summary(before) +
           "\nafter:  " + encode_graph6(after) + " ecc " + ecc_summary(after) + "\nchange: " + (ea - eb).str() + "\n";
}

Edge parse_edge(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--edge expects u,v");
    return {to_int(text.substr(0, comma)), to_int(text.substr(comma + 1))};
}

void warn_paper_scale() {
    std::cerr << "warning: --paper-scale enumerates all graphs up to n=10 and trees up to n=20; "
                 "expect long runtimes and large memory use\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Average eccentricity toolkit: invariants, families, transformations, enumeration, conjecture scans"};
    app.require_subcommand(1);

    std::string format_text = "json";
    int threads = 0;
    bool paper_scale = false;
    app.add_option("--format", format_text, "Output format: json, csv, text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", threads, "Worker threads for scans (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    app.add_flag("--paper-scale", paper_scale, "Raise enumeration caps to n<=10 graphs, n<=20 trees");

    std::string g6, input;

    auto* inv = app.add_subcommand("invariants", "Invariant report for graph6 input");
    inv->add_option("--g6", g6, "graph6 string, or - for stdin");
    inv->add_option("--input", input, "File with one graph6 per line");

    std::vector<std::string> family_words;
    bool edges_out = false;
    auto* fam = app.add_subcommand("family", "Build a named family member, e.g. 'family broom n=11 delta=6'");
    fam->add_option("spec", family_words, "Family kind and key=value parameters")->required();
    fam->add_flag("--edges", edges_out, "Emit an edge list instead of graph6");

    auto* tr = app.add_subcommand("transform", "Apply a transformation to a graph");
    tr->require_subcommand(1);
    int w = -1, longer = 0, shorter = 1;
    std::string edge_text;
    auto* pi = tr->add_subcommand("pi", "Move one vertex from a shorter pendant path at w to a longer one");
    pi->add_option("--g6", g6, "graph6 string, or - for stdin")->required();
    pi->add_option("--w", w, "Branching vertex")->required();
    pi->add_option("--longer", longer, "Index of the longer path among the paths at w, longest first");
    pi->add_option("--shorter", shorter, "Index of the shorter path");
    auto* sigma = tr->add_subcommand("sigma", "Contract a bridge and re-attach it as a pendant edge");
    sigma->add_option("--g6", g6, "graph6 string, or - for stdin")->required();
    sigma->add_option("--edge", edge_text, "Bridge u,v (v becomes a pendant of u)")->required();
    auto* pendant = tr->add_subcommand("pendant", "Remove a pendant vertex that leaves every other eccentricity unchanged");
    pendant->add_option("--g6", g6, "graph6 string of a tree, or - for stdin")->required();

    std::string class_text, n_text, out_path;
    std::optional<int> max_degree, arms;
    bool chemical = false;
    auto* en = app.add_subcommand("enumerate", "Dump a graph class as graph6, one per line");
    en->add_option("class", class_text, "trees, connected_graphs, unicyclic, starlike")->required();
    en->add_option("--n", n_text, "Order or range, e.g. 10 or 4..8")->required();
    en->add_option("--out", out_path, "Output file (default stdout)");
    en->add_option("--max-degree", max_degree, "Keep graphs with maximum degree at most this");
    en->add_flag("--chemical", chemical, "Keep graphs with maximum degree at most 4");
    en->add_option("--arms", arms, "Starlike only: exact number of arms");

    std::string conjecture;
    bool serial = false, list = false;
    auto* sc = app.add_subcommand("scan", "Check a conjecture over an enumerated class or a graph6 catalogue");
    sc->add_option("--conjecture", conjecture, "Conjecture id, e.g. A.478-U");
    sc->add_option("--class", class_text, "trees, connected_graphs, unicyclic, starlike");
    sc->add_option("--n", n_text, "Order range, e.g. 4..12");
    sc->add_option("--input", input, "graph6 catalogue instead of an enumerated class");
    sc->add_option("--max-degree", max_degree, "Keep graphs with maximum degree at most this");
    sc->add_flag("--chemical", chemical, "Keep graphs with maximum degree at most 4");
    sc->add_flag("--serial", serial, "Use the serial reference loop");
    sc->add_flag("--list", list, "List the registered conjectures and exit");

    std::string k_text = "20", delta_text = "20";
    auto* ra = app.add_subcommand("refute-a100", "Evaluate delta*ecc against 2n-2 on the path-of-cliques family");
    ra->add_option("--k", k_text, "Even k values, e.g. 20 or 4..20");
    ra->add_option("--delta", delta_text, "Delta values, e.g. 20 or 3..20");

    std::string family_name_text;
    std::map<std::string, std::string> ranges;
    auto* fo = app.add_subcommand("formulas", "Closed-form average eccentricity against BFS");
    fo->add_option("--family", family_name_text, "Family kind")->required();
    for (const char* key : {"n", "k", "delta", "a", "b", "d", "k1", "k2", "len"})
        fo->add_option(std::string("--") + key, ranges[key], std::string("Range for parameter ") + key);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, std::cerr, std::cerr);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const OutputFormat format = parse_format(format_text);
        EnumerationLimits limits = paper_scale ? EnumerationLimits::paper_scale() : EnumerationLimits{};
        if (paper_scale) warn_paper_scale();
        std::string out;
        int code = kOk;

        if (*inv) {
            auto graphs = read_graphs(g6, input);
            if (graphs.empty()) throw UsageError("no graphs in input");
            out = render_many(graphs.size(), format, [&](std::size_t i) {
                return render(compute_invariant_report(graphs[i]), encode_graph6(graphs[i]), format);
            });
        } else if (*fam) {
            std::string text;
            for (const auto& word : family_words) text += word + " ";
            Graph g = make(parse_family(text));
            out = edges_out ? write_edge_list(g) : encode_graph6(g) + "\n";
        } else if (*tr) {
            Graph g = read_one(g6, "");
            if (*pi) {
                auto paths = pendant_paths_at(g, w);
                auto pick = [&](int i) -> const PendantPath& {
                    if (i < 0 || i >= static_cast<int>(paths.size()))
                        throw UsageError("vertex " + std::to_string(w) + " has " + std::to_string(paths.size()) +
                                         " pendant paths; index " + std::to_string(i) + " is out of range");
                    return paths[i];
                };
                out = transform_report(g, pi_transform(g, w, pick(longer), pick(shorter)), format);
            } else if (*sigma) {
                out = transform_report(g, sigma_transform(g, parse_edge(edge_text)), format);
            } else {
                Vertex v = removable_pendant(g);
                Graph h = g.with_vertex_removed(v);
                std::cerr << "removed vertex " << v << "\n";
                out = transform_report(g, h, format);
            }
        } else if (*en) {
            GraphClass c = parse_class(class_text);
            std::ostringstream buf;
            for (int n : parse_range(n_text)) {
                EnumerationQuery q{c, n, max_degree, chemical, arms, threads};
                for (const Graph& g : enumerate(q, limits)) buf << encode_graph6(g) << '\n';
            }
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw UsageError("cannot write '" + out_path + "'");
                f << buf.str();
            } else {
                out = buf.str();
            }
        } else if (*sc) {
            if (list) {
                for (const auto& s : registry())
                    out += s.id + "\t" + std::string(to_string(s.standing)) + "\t" + s.statement + "\n";
            } else {
                if (conjecture.empty()) throw UsageError("scan needs --conjecture (or --list)");
                const ConjectureSpec& spec = find_conjecture(conjecture);
                ScanOptions opts;
                opts.parallel = !serial;
                opts.threads = threads;
                opts.limits = limits;
                opts.max_degree = max_degree;
                opts.chemical = chemical;
                ScanReport report;
                if (!input.empty()) {
                    if (!class_text.empty() || !n_text.empty()) throw UsageError("--input excludes --class and --n");
                    auto graphs = read_graphs("", input);
                    report = scan_catalog(spec, graphs, input, opts);
                } else {
                    if (class_text.empty() || n_text.empty()) throw UsageError("scan needs --class and --n, or --input");
                    auto ns = parse_range(n_text);
                    report = scan(spec, parse_class(class_text), ns.front(), ns.back(), opts);
                }
                out = render(report, format);
                if (!report.violations.empty() && spec.standing == Standing::open) {
                    std::cerr << "open conjecture " << spec.id << " violated by " << report.violations.size()
                              << " graph(s); first witness " << report.violations.front().graph6 << "\n";
                    code = kOpenViolation;
                }
            }
        } else if (*ra) {
            auto ks = parse_range(k_text), ds = parse_range(delta_text);
            out = render(std::span<const A100Row>(refute_a100(ks, ds)), format);
        } else if (*fo) {
            std::vector<std::pair<std::string, std::vector<int>>> axes;
            for (auto& [key, text] : ranges)
                if (!text.empty()) axes.emplace_back(key, parse_range(text));
            std::vector<FormulaRow> rows;
            std::size_t skipped = 0;
            std::vector<std::size_t> idx(axes.size(), 0);
            for (bool more = true; more;) {
                std::string text = family_name_text;
                for (std::size_t i = 0; i < axes.size(); ++i)
                    text += " " + axes[i].first + "=" + std::to_string(axes[i].second[idx[i]]);
                FamilySpec fs = parse_family(text);
                if (has_closed_form(fs)) {
                    Graph g = make(fs);
                    rows.push_back({format_family(fs), g.order(), closed_form_ecc(fs), average_eccentricity(g)});
                } else {
                    ++skipped;
                }
                more = false;
                for (std::size_t i = axes.size(); i-- > 0;) {
                    if (++idx[i] < axes[i].second.size()) {
                        more = true;
                        break;
                    }
                    idx[i] = 0;
                }
            }
            if (rows.empty()) throw UsageError("family '" + family_name_text + "' has no closed form for these parameters");
            if (skipped) std::cerr << "skipped " << skipped << " parameter sets without a closed form\n";
            out = render(std::span<const FormulaRow>(rows), format);
        }
        std::cout << out;
        return code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputation;
    }
}
