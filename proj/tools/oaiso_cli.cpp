// Command-line front end: design file ingestion, pipeline commands, and the
// experiment drivers. Data goes to stdout (or --output); diagnostics go to
// stderr. Exit codes: 0 pass/isomorphic/ok, 1 fail/non-isomorphic/
// counterexample, 2 error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <oaiso/oaiso.hpp>

namespace fs = std::filesystem;
using namespace oaiso;

namespace {

struct NamedDesign {
    std::string id;
    Fraction fraction;
};

// A directory argument expands to its *.txt files in name order.
std::vector<std::string> expand_paths(const std::vector<std::string>& args) {
    std::vector<std::string> paths;
    for (const auto& a : args) {
        if (fs::is_directory(a)) {
            std::vector<std::string> inner;
            for (const auto& e : fs::directory_iterator(a))
                if (e.is_regular_file() && e.path().extension() == ".txt")
                    inner.push_back(e.path().string());
            std::sort(inner.begin(), inner.end());
            paths.insert(paths.end(), inner.begin(), inner.end());
        } else {
            paths.push_back(a);
        }
    }
    return paths;
}

std::vector<NamedDesign> load_designs(const std::vector<std::string>& args) {
    std::vector<NamedDesign> out;
    for (const auto& p : expand_paths(args))
        out.push_back({fs::path(p).stem().string(), read_design_file(p)});
    if (out.empty()) throw std::runtime_error("no design files given");
    return out;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(output);
        if (!f) throw std::runtime_error(output + ": cannot open for writing");
        f << text;
    }
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t value) {
    if (opt->count() > 0) return value;
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed not given; using generated seed " << s << "\n";
    return s;
}

MatchingMode parse_mode(const std::string& s) {
    if (s == "diagonal") return MatchingMode::DiagonalAugmented;
    if (s == "strict") return MatchingMode::StrictBijection;
    throw std::runtime_error("unknown matching mode '" + s + "' (want diagonal|strict)");
}

int cmd_validate(const std::string& path, int t, bool t_given) {
    const Fraction f = read_design_file(path);
    const CountingVector v = counting_vector(f);
    const int ms = max_strength(v);
    std::cout << "N=" << f.runs.size() << " d=" << f.d << " max_strength=" << ms << "\n";
    if (!t_given) return 0;
    if (t < 1 || t > f.d) throw std::runtime_error("t must be in [1, d]");
    const bool pass = check_strength(v, t);
    std::cout << "strength_" << t << "=" << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
}

int cmd_dgm(const std::string& path, const std::string& output) {
    const Fraction f = read_design_file(path);
    const auto dgm = persistence(build_filtration(moments(pmf(counting_vector(f)))));
    emit(to_json(dgm).dump(2), output);
    return 0;
}

int cmd_dist(const std::string& path1, const std::string& path2, const std::string& which,
             MatchingMode mode, const std::string& format, const std::string& output) {
    const Fraction f1 = read_design_file(path1);
    const Fraction f2 = read_design_file(path2);
    if (f1.d != f2.d) throw std::runtime_error("dist: designs have different d");
    if (which == "pmf") {
        const Rational d1 = d1_wasserstein(pmf(counting_vector(f1)), pmf(counting_vector(f2)));
        if (format == "json") {
            Json j{{"which", "pmf"}, {"value", to_string(d1)}, {"value_f", to_double(d1)}};
            emit(j.dump(2), output);
        } else {
            emit(to_string(d1), output);
        }
        return 0;
    }
    if (which != "dgm") throw std::runtime_error("dist: --which must be pmf or dgm");
    const auto dgm1 = persistence(build_filtration(moments(pmf(counting_vector(f1)))));
    const auto dgm2 = persistence(build_filtration(moments(pmf(counting_vector(f2)))));
    const double dist = d2_wasserstein(dgm1, dgm2, mode);
    const bool exact_zero = diagrams_equal(dgm1, dgm2);
    if (format == "json") {
        Json j{{"which", "dgm"}, {"value", dist}, {"exact_zero", exact_zero}};
        emit(j.dump(2), output);
    } else {
        std::ostringstream os;
        os.precision(17);
        os << dist << " exact_zero=" << (exact_zero ? "true" : "false");
        emit(os.str(), output);
    }
    return 0;
}

int cmd_isocheck(const std::string& path1, const std::string& path2, std::int64_t T,
                 std::uint64_t seed, const std::string& search, const std::string& output) {
    const Fraction f1 = read_design_file(path1);
    const Fraction f2 = read_design_file(path2);
    const IsoMode mode = search == "exhaustive" ? IsoMode::Exhaustive : IsoMode::Random;
    Rng rng(seed);
    const IsoVerdict v = iso_check(f1, f2, T, rng, mode);
    Json j = to_json(v);
    j["T"] = T;
    j["seed"] = seed;
    j["search"] = to_string(mode);
    emit(j.dump(2), output);
    return v.isomorphic ? 0 : 1;
}

int cmd_matrix(const std::vector<std::string>& files, const std::string& which, MatchingMode mode,
               bool expect_distinct, const std::string& output) {
    const auto designs = load_designs(files);
    if (designs.size() < 2) throw std::runtime_error("matrix: need at least 2 designs");
    const int d = designs.front().fraction.d;
    std::vector<CountingVector> vs;
    std::vector<std::string> ids;
    for (const auto& nd : designs) {
        if (nd.fraction.d != d) throw std::runtime_error("matrix: mixed dimensions");
        vs.push_back(counting_vector(nd.fraction));
        ids.push_back(nd.id);
    }
    int flagged = 0;
    if (which == "pmf") {
        std::vector<Pmf> ps;
        for (const auto& v : vs) ps.push_back(pmf(v));
        std::vector<std::vector<Rational>> m(vs.size(), std::vector<Rational>(vs.size(), Rational(0)));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                m[i][j] = m[j][i] = d1_wasserstein(ps[i], ps[j]);
        if (expect_distinct)
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (m[i][j] == Rational(0) && !are_isomorphic_exact(vs[i], vs[j])) {
                        std::cerr << "d1 fails to discriminate non-isomorphic pair (" << ids[i]
                                  << ", " << ids[j] << ")\n";
                        ++flagged;
                    }
        emit(matrix_csv(ids, m), output);
    } else if (which == "dgm") {
        std::vector<PersistenceDiagram> dgms;
        for (const auto& v : vs) dgms.push_back(persistence(build_filtration(moments(pmf(v)))));
        std::vector<std::vector<double>> m(vs.size(), std::vector<double>(vs.size(), 0.0));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                m[i][j] = m[j][i] = d2_wasserstein(dgms[i], dgms[j], mode);
        if (expect_distinct)
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (diagrams_equal(dgms[i], dgms[j]) && !are_isomorphic_exact(vs[i], vs[j])) {
                        std::cerr << "identical diagrams for non-isomorphic pair (" << ids[i]
                                  << ", " << ids[j] << ")\n";
                        ++flagged;
                    }
        emit(matrix_csv(ids, m), output);
    } else {
        throw std::runtime_error("matrix: --which must be pmf or dgm");
    }
    if (flagged > 0) std::cerr << flagged << " degenerate pair(s) flagged\n";
    return 0;
}

int cmd_enumerate(int d, std::int64_t N, int t, bool classes_only, const std::string& out_dir,
                  const std::string& output) {
    const auto arrays = enumerate_oas(d, N, t);
    const auto reduction = reduce_to_classes(arrays);

    Json summary;
    summary["d"] = d;
    summary["N"] = N;
    summary["t"] = t;
    summary["n_arrays"] = arrays.size();
    summary["n_classes"] = reduction.representatives.size();
    summary["class_sizes"] = reduction.class_sizes;

    const auto& emit_set = classes_only ? reduction.representatives : arrays;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::vector<std::string> written;
        for (std::size_t i = 0; i < emit_set.size(); ++i) {
            std::ostringstream name;
            name << (classes_only ? "class_" : "oa_") << std::setw(3) << std::setfill('0') << i
                 << ".txt";
            const std::string path = (fs::path(out_dir) / name.str()).string();
            write_design_file(to_fraction(emit_set[i]), path);
            written.push_back(name.str());
        }
        summary["files"] = written;
    } else {
        Json list = Json::array();
        for (const auto& v : emit_set) list.push_back(to_json(v));
        summary[classes_only ? "classes" : "arrays"] = std::move(list);
    }
    emit(summary.dump(2), output);
    return 0;
}

int cmd_experiment(const std::vector<std::string>& files, std::size_t n_pairs,
                   std::vector<std::int64_t> T_list, std::uint64_t seed,
                   const std::string& out_dir) {
    const auto designs = load_designs(files);
    std::vector<Fraction> classes;
    for (const auto& nd : designs) classes.push_back(nd.fraction);
    if (T_list.empty()) T_list = {75, 150};

    std::vector<ExperimentReport> reports;
    for (std::int64_t T : T_list) reports.push_back(classification_experiment(classes, n_pairs, T, seed));

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (const auto& r : reports) {
            const std::string path =
                (fs::path(out_dir) / ("report_T" + std::to_string(r.T) + ".json")).string();
            std::ofstream f(path);
            if (!f) throw std::runtime_error(path + ": cannot open for writing");
            f << to_json(r).dump(2) << "\n";
        }
        std::ofstream csv((fs::path(out_dir) / "confusion.csv").string());
        csv << confusion_csv(reports);
    }
    std::cout << confusion_csv(reports);
    std::int64_t errors = 0;
    for (const auto& r : reports)
        errors += r.confusion.false_positive + r.confusion.false_negative;
    std::cerr << "total misclassifications across T values: " << errors << "\n";
    return 0;
}

int cmd_conjecture(const std::vector<std::string>& files, const std::string& output) {
    const auto designs = load_designs(files);
    std::vector<Fraction> reps;
    for (const auto& nd : designs) reps.push_back(nd.fraction);
    const ConjectureReport report = conjecture_scan(reps);
    emit(to_json(report).dump(2), output);
    if (!report.counterexamples.empty()) {
        std::cerr << "CONJECTURE COUNTEREXAMPLE: " << report.counterexamples.size()
                  << " non-isomorphic pair(s) with identical persistence diagrams:\n";
        for (const auto& p : report.counterexamples)
            std::cerr << "  (" << designs[p.i].id << ", " << designs[p.j].id << ")\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oaiso: isomorphism checking for 2-level orthogonal arrays via persistence diagrams"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string mode_str = "diagonal";
    std::string format = "text";
    std::string output;
    auto* seed_opt = app.add_option("--seed", seed, "random seed (generated and echoed when absent)");
    app.add_option("--mode", mode_str, "diagram matching mode: diagonal|strict")
        ->check(CLI::IsMember({"diagonal", "strict"}));
    app.add_option("--format", format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", output, "write data to this file instead of stdout");
    app.fallthrough();

    // validate
    std::string v_path;
    int v_t = 1;
    auto* validate = app.add_subcommand("validate", "parse a design file and check OA strength");
    validate->add_option("file", v_path, "design file")->required();
    auto* v_t_opt = validate->add_option("-t,--strength", v_t, "strength to check");

    // dgm
    std::string g_path;
    auto* dgm = app.add_subcommand("dgm", "persistence diagram of a design, as JSON");
    dgm->add_option("file", g_path, "design file")->required();

    // dist
    std::string di_p1, di_p2, di_which = "pmf";
    auto* dist = app.add_subcommand("dist", "distance between two designs (d1 on pmfs or d2 on diagrams)");
    dist->add_option("file1", di_p1)->required();
    dist->add_option("file2", di_p2)->required();
    dist->add_option("--which", di_which, "pmf|dgm")->check(CLI::IsMember({"pmf", "dgm"}));

    // isocheck
    std::string ic_p1, ic_p2, ic_search = "random";
    std::int64_t ic_T = 150;
    auto* isochk = app.add_subcommand("isocheck", "randomized isomorphism test (exit 0 iso, 1 non-iso)");
    isochk->add_option("file1", ic_p1)->required();
    isochk->add_option("file2", ic_p2)->required();
    isochk->add_option("-T,--iterations", ic_T, "random transforms to try");
    isochk->add_option("--search", ic_search, "random|exhaustive")
        ->check(CLI::IsMember({"random", "exhaustive"}));

    // matrix
    std::vector<std::string> mx_files;
    std::string mx_which = "pmf";
    bool mx_expect = false;
    auto* matrix = app.add_subcommand("matrix", "pairwise distance matrix as CSV");
    matrix->add_option("files", mx_files, "design files or a directory")->required();
    matrix->add_option("--which", mx_which, "pmf|dgm")->check(CLI::IsMember({"pmf", "dgm"}));
    matrix->add_flag("--expect-distinct", mx_expect,
                     "flag degenerate zero-distance pairs of non-isomorphic designs");

    // enumerate
    int en_d = 2, en_t = 1;
    std::int64_t en_N = 4;
    bool en_classes = false;
    std::string en_dir;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate all OAs at desk-scale parameters");
    enumerate->add_option("-d,--factors", en_d, "number of factors")->required();
    enumerate->add_option("-N,--runs", en_N, "number of runs")->required();
    enumerate->add_option("-t,--strength", en_t, "strength")->required();
    enumerate->add_flag("--classes", en_classes, "emit one representative per isomorphism class");
    enumerate->add_option("--out-dir", en_dir, "write design files into this directory");

    // experiment
    std::vector<std::string> ex_files;
    std::size_t ex_pairs = 500;
    std::vector<std::int64_t> ex_T;
    std::string ex_dir;
    auto* experiment = app.add_subcommand("experiment", "classification experiment against the exact oracle");
    experiment->add_option("classes", ex_files, "class representative files or a directory")->required();
    experiment->add_option("--pairs", ex_pairs, "number of sampled pairs");
    experiment->add_option("-T,--iterations", ex_T, "T values (repeatable)");
    experiment->add_option("--out-dir", ex_dir, "write report JSON files + confusion CSV here");

    // conjecture
    std::vector<std::string> cj_files;
    auto* conjecture = app.add_subcommand(
        "conjecture", "pairwise d2 scan over non-isomorphic designs; flags zero hits (exit 1)");
    conjecture->add_option("files", cj_files, "design files or a directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(v_path, v_t, v_t_opt->count() > 0);
        if (dgm->parsed()) return cmd_dgm(g_path, output);
        if (dist->parsed())
            return cmd_dist(di_p1, di_p2, di_which, parse_mode(mode_str), format, output);
        if (isochk->parsed())
            return cmd_isocheck(ic_p1, ic_p2, ic_T, resolve_seed(seed_opt, seed), ic_search, output);
        if (matrix->parsed())
            return cmd_matrix(mx_files, mx_which, parse_mode(mode_str), mx_expect, output);
        if (enumerate->parsed()) return cmd_enumerate(en_d, en_N, en_t, en_classes, en_dir, output);
        if (experiment->parsed())
            return cmd_experiment(ex_files, ex_pairs, ex_T, resolve_seed(seed_opt, seed), ex_dir);
        if (conjecture->parsed()) return cmd_conjecture(cj_files, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
