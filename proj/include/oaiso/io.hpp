#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "design.hpp"
#include "experiment.hpp"
#include "isocheck.hpp"
#include "persistence.hpp"
#include "rational.hpp"

namespace oaiso {

using Json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Design text format: optional first line "N d", then one run per line as
/// d space-separated 0/1 tokens. Headerless files are accepted when every
/// line has the same token count. Blank lines and lines starting with '#'
/// are ignored. Parse errors carry line numbers.
inline Fraction read_design(std::istream& in, const std::string& name = "<stream>") {
    struct Line {
        int number;
        std::vector<long long> tokens;
    };
    std::vector<Line> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<long long> tokens;
        long long x;
        while (ls >> x) tokens.push_back(x);
        if (!ls.eof()) {
            std::string bad;
            ls.clear();
            ls >> bad;
            throw parse_error(name + ":" + std::to_string(lineno) + ": bad token '" + bad + "'");
        }
        if (!tokens.empty()) lines.push_back({lineno, std::move(tokens)});
    }
    if (lines.empty()) throw parse_error(name + ": no runs found");

    // A 2-token first line is a header when it cannot be a run row (a value
    // outside {0,1}) or when the remaining rows are not 2 tokens wide.
    bool has_header = false;
    if (lines.front().tokens.size() == 2 && lines.size() > 1) {
        const auto& h = lines.front().tokens;
        const bool could_be_run = (h[0] == 0 || h[0] == 1) && (h[1] == 0 || h[1] == 1);
        bool rest_are_pairs = true;
        for (std::size_t i = 1; i < lines.size(); ++i)
            if (lines[i].tokens.size() != 2) rest_are_pairs = false;
        has_header = !could_be_run || !rest_are_pairs;
    }

    std::vector<std::vector<int>> rows;
    for (std::size_t li = has_header ? 1 : 0; li < lines.size(); ++li) {
        std::vector<int> row;
        row.reserve(lines[li].tokens.size());
        for (long long t : lines[li].tokens) {
            if (t != 0 && t != 1)
                throw parse_error(name + ":" + std::to_string(lines[li].number) +
                                  ": run entries must be 0 or 1");
            row.push_back(static_cast<int>(t));
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw parse_error(name + ":" + std::to_string(lines[li].number) +
                              ": inconsistent run length");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error(name + ": no runs found");

    const int d = static_cast<int>(rows.front().size());
    if (has_header) {
        const auto& h = lines.front().tokens;
        if (h[1] != d)
            throw parse_error(name + ": header d=" + std::to_string(h[1]) + " but runs have " +
                              std::to_string(d) + " entries");
        if (h[0] != static_cast<long long>(rows.size()))
            throw parse_error(name + ": header N=" + std::to_string(h[0]) + " but found " +
                              std::to_string(rows.size()) + " runs");
    }
    try {
        return make_fraction(d, rows);
    } catch (const std::invalid_argument& e) {
        throw parse_error(name + ": " + e.what());
    }
}

inline Fraction read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    return read_design(in, path);
}

inline void write_design(const Fraction& f, std::ostream& out) {
    validate(f);
    out << f.runs.size() << ' ' << f.d << '\n';
    for (std::uint32_t r : f.runs) {
        const auto row = run_levels(r, f.d);
        for (int i = 0; i < f.d; ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
}

inline void write_design_file(const Fraction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    write_design(f, out);
}

inline Json to_json(const CountingVector& v) {
    Json j;
    j["d"] = v.d;
    j["counts"] = v.counts;
    return j;
}

inline CountingVector counting_vector_from_json(const Json& j) {
    CountingVector v;
    v.d = j.at("d").get<int>();
    v.counts = j.at("counts").get<std::vector<std::int64_t>>();
    validate(v);
    return v;
}

/// Diagram JSON: an object keyed by homology dimension; each point carries
/// the exact rational coordinates as canonical "p/q" strings ("inf" for an
/// essential death) plus float mirrors for plotting.
inline Json to_json(const PersistenceDiagram& dgm) {
    Json j = Json::object();
    for (int k = 0; k < dgm.d; ++k) {
        Json pts = Json::array();
        for (const auto& p : dgm.finite[k]) {
            Json e;
            e["birth"] = to_string(p.birth);
            e["death"] = to_string(p.death);
            e["birth_f"] = to_double(p.birth);
            e["death_f"] = to_double(p.death);
            pts.push_back(std::move(e));
        }
        for (const auto& b : dgm.essential[k]) {
            Json e;
            e["birth"] = to_string(b);
            e["death"] = "inf";
            e["birth_f"] = to_double(b);
            e["death_f"] = nullptr;
            pts.push_back(std::move(e));
        }
        j[std::to_string(k)] = std::move(pts);
    }
    return j;
}

inline Json to_json(const IsoVerdict& v) {
    Json j;
    j["isomorphic"] = v.isomorphic;
    j["certificate"] = to_string(v.certificate);
    if (v.witness) {
        Json w;
        w["sigma"] = v.witness->sigma;
        std::vector<int> flips;
        const int d = static_cast<int>(v.witness->sigma.size());
        for (int i = 0; i < d; ++i) flips.push_back(static_cast<int>((v.witness->flips >> (d - 1 - i)) & 1u));
        w["flips"] = flips;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["iterations_used"] = v.iterations_used;
    j["distinct_transforms"] = v.distinct_transforms;
    return j;
}

inline Json to_json(const ConjectureReport& r) {
    Json j;
    j["n_designs"] = r.n_designs;
    j["n_pairs"] = r.pairs.size();
    j["min_d2"] = r.min_d2;
    j["counterexamples"] = Json::array();
    for (const auto& p : r.counterexamples)
        j["counterexamples"].push_back({{"i", p.i}, {"j", p.j}});
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        Json e;
        e["i"] = p.i;
        e["j"] = p.j;
        e["d2"] = p.d2;
        e["diagrams_identical"] = p.diagrams_identical;
        pairs.push_back(std::move(e));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

inline Json to_json(const ExperimentReport& r) {
    Json j;
    j["parameters"] = {{"d", r.d},      {"N", r.runs},        {"t", r.strength},
                       {"T", r.T},      {"seed", r.seed},     {"n_pairs", r.n_pairs}};
    j["confusion"] = {{"true_positive", r.confusion.true_positive},
                      {"false_negative", r.confusion.false_negative},
                      {"true_negative", r.confusion.true_negative},
                      {"false_positive", r.confusion.false_positive}};
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        Json e;
        e["index"] = p.index;
        e["class_i"] = p.class_i;
        e["class_j"] = p.class_j;
        e["truth"] = p.truth;
        e["verdict"] = p.verdict;
        e["certificate"] = to_string(p.certificate);
        e["iterations_used"] = p.iterations_used;
        pairs.push_back(std::move(e));
    }
    j["pairs"] = std::move(pairs);
    j["wall_seconds"] = r.wall_seconds;
    return j;
}

/// Confusion summary CSV, one row per report.
inline std::string confusion_csv(const std::vector<ExperimentReport>& reports) {
    std::ostringstream out;
    out << "d,N,t,T,seed,n_pairs,true_positive,false_negative,true_negative,false_positive\n";
    for (const auto& r : reports) {
        out << r.d << ',' << r.runs << ',' << r.strength << ',' << r.T << ',' << r.seed << ','
            << r.n_pairs << ',' << r.confusion.true_positive << ',' << r.confusion.false_negative
            << ',' << r.confusion.true_negative << ',' << r.confusion.false_positive << '\n';
    }
    return out.str();
}

namespace detail {

inline std::string csv_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace detail

/// Symmetric distance matrix as CSV with a header row/column of design
/// identifiers. Entries are exact rational strings (d1) or decimal floats
/// (d2), depending on which matrix was computed.
template <typename T>
std::string matrix_csv(const std::vector<std::string>& ids, const std::vector<std::vector<T>>& m) {
    std::ostringstream out;
    out << "id";
    for (const auto& id : ids) out << ',' << id;
    out << '\n';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out << ids[i];
        for (std::size_t j = 0; j < ids.size(); ++j) {
            out << ',';
            if constexpr (std::is_same_v<T, double>)
                out << detail::csv_double(m[i][j]);
            else
                out << to_string(m[i][j]);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace oaiso
