// pwlab: minimum pseudoweights, pseudoredundancy, and bound reports for
// binary linear codes, all in exact arithmetic.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pwlab/pwlab.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pwlab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest(const std::string& data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data.data(), data.size())));
    return buf;
}

std::string float12(double v) {
    std::ostringstream ss;
    ss << std::setprecision(12) << v;
    return ss.str();
}

std::vector<Channel> parse_channels(const std::string& s) {
    if (s == "all") return {Channel::BEC, Channel::AWGNC, Channel::BSC, Channel::MAXFRAC};
    for (Channel c : all_channels())
        if (s == channel_name(c)) return {c};
    throw ParseError("unknown channel: " + s);
}

void emit_report(const json& report, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report.dump(2) << "\n";
        return;
    }
    // text: flattened key/value lines in document order
    std::function<void(const json&, const std::string&)> walk = [&](const json& node,
                                                                    const std::string& prefix) {
        if (node.is_object()) {
            for (auto it = node.begin(); it != node.end(); ++it)
                walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        } else if (node.is_array()) {
            std::string joined;
            for (const auto& v : node)
                joined += (joined.empty() ? "" : " ") +
                          (v.is_string() ? v.get<std::string>() : v.dump());
            out << prefix << ": [" << joined << "]\n";
        } else if (node.is_string()) {
            out << prefix << ": " << node.get<std::string>() << "\n";
        } else {
            out << prefix << ": " << node.dump() << "\n";
        }
    };
    walk(report, "");
}

json witness_json(const RayVec& w) {
    json arr = json::array();
    for (long long v : w) arr.push_back(v);
    return arr;
}

int cmd_pw(const std::string& path, const std::string& channel, const std::string& format) {
    std::string text = read_file(path);
    BinaryMatrix h = parse_matrix_auto(text, path);
    PseudoweightReport rep = min_pseudoweights(h, parse_channels(channel));

    json results;
    results["n"] = rep.n;
    results["m"] = rep.m;
    for (const auto& [ch, cm] : rep.minima) {
        json entry;
        entry["min"] = to_string(cm.value);
        if (cm.witness) entry["witness"] = witness_json(*cm.witness);
        results[channel_name(ch)] = entry;
    }

    json report;
    report["command"] = std::string("pw ") + path + " --channel " + channel;
    report["input_digest"] = digest(text);
    report["results"] = results;
    emit_report(report, format, std::cout);
    return kExitOk;
}

int cmd_redundancy(const std::string& spec, const std::string& channel, std::size_t budget,
                   const std::string& format) {
    LinearCode c = named_code(spec);
    json results;
    results["code"] = spec;
    results["n"] = c.n();
    results["k"] = c.k();
    results["D"] = min_distance(c);
    for (Channel ch : parse_channels(channel)) {
        RedundancyResult r = pseudoredundancy(c, ch, budget);
        json entry;
        if (r.budget_hit) {
            entry["rho"] = "unknown";
            entry["lower_bound"] = r.lower_bound;
            entry["budget_hit"] = true;
        } else if (r.rho) {
            entry["rho"] = *r.rho;
        } else {
            entry["rho"] = "inf";
        }
        entry["matrices_examined"] = r.matrices_examined;
        results[channel_name(ch)] = entry;
    }

    json report;
    report["command"] = std::string("redundancy ") + spec + " --channel " + channel;
    report["input_digest"] = digest(spec);
    report["results"] = results;
    emit_report(report, format, std::cout);
    return kExitOk;
}

json design_section(const BinaryMatrix& h) {
    json sec;
    std::optional<DesignParameters> p = detect_design(h);
    if (!p) {
        sec["detected"] = false;
        return sec;
    }
    sec["detected"] = true;
    sec["kind"] = p->kind == DesignParameters::Kind::Bibd ? "bibd" : "partial";
    sec["w_c"] = p->w_c;
    sec["lambda"] = p->lambda;
    if (p->w_r) sec["w_r"] = *p->w_r;
    sec["lower_bound"] = to_string(design_lower_bound(*p));
    return sec;
}

json eigenvalue_section(const BinaryMatrix& h) {
    json sec;
    try {
        EigenvalueBoundResult r = eigenvalue_bound(h);
        sec["mu1"] = float12(r.mu1);
        sec["mu2"] = float12(r.mu2);
        sec["bound"] = float12(r.bound);
    } catch (const NotRegular&) {
        sec["error"] = "NotRegular";
    } catch (const Disconnected&) {
        sec["error"] = "Disconnected";
    } catch (const DegenerateSpectrum&) {
        sec["error"] = "DegenerateSpectrum";
    }
    return sec;
}

int cmd_bounds(const std::string& target, const std::string& format) {
    json report;
    json results;
    std::ifstream probe(target);
    if (probe.good()) {
        std::string text = read_file(target);
        BinaryMatrix h = parse_matrix_auto(text, target);
        report["command"] = std::string("bounds ") + target;
        report["input_digest"] = digest(text);
        results["n"] = h.n_cols();
        results["m"] = h.n_rows();
        results["design"] = design_section(h);
        results["eigenvalue"] = eigenvalue_section(h);
    } else {
        LinearCode c = named_code(target);
        BoundGapReport r = bound_gap_report(c);
        report["command"] = std::string("bounds ") + target;
        report["input_digest"] = digest(target);
        results["code"] = target;
        results["n"] = r.n;
        results["k"] = r.k;
        results["D"] = r.min_distance;
        results["dual_distance"] = r.dual_distance;
        results["awgnc_upper_bound"] = to_string(r.awgnc_ub);
        results["bsc_upper_bound"] = r.bsc_ub;
        results["rho_awgnc"] = r.awgnc_rho_infinite ? "inf" : "unknown";
        results["rho_bsc"] = r.bsc_rho_infinite ? "inf" : "unknown";
    }
    report["results"] = results;
    emit_report(report, format, std::cout);
    return kExitOk;
}

int cmd_cyclic_scan(std::size_t nmax, std::size_t kmax, const std::string& csv_path) {
    std::vector<CyclicRecord> records = scan(nmax, kmax);
    std::ostringstream out;
    out << "n,k,D,w,connected,mu1,mu2,bound,meets_bound\n";
    for (const CyclicRecord& r : records) {
        out << r.n << "," << r.k << ",";
        if (r.min_distance) out << *r.min_distance;
        out << "," << r.w << "," << (r.connected ? 1 : 0) << ",";
        if (r.mu1) out << float12(*r.mu1);
        out << ",";
        if (r.mu2) out << float12(*r.mu2);
        out << ",";
        if (r.bound) out << float12(*r.bound);
        out << "," << (r.meets_bound ? 1 : 0) << "\n";
    }
    if (csv_path.empty() || csv_path == "-") {
        std::cout << out.str();
    } else {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw ParseError("cannot write " + csv_path);
        f << out.str();
    }
    return kExitOk;
}

int cmd_construct(const std::string& name, const std::string& out_path,
                  const std::string& format) {
    std::istringstream in(name);
    std::string head;
    in >> head;
    std::string rest;
    std::getline(in, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);

    BinaryMatrix h;
    if (head == "all-dual") {
        h = all_dual_codewords_matrix(named_code(rest));
    } else if (head == "weight3-dual") {
        h = weight_w_dual_matrix(named_code(rest), 3);
    } else if (head == "hamming") {
        std::size_t m = 0;
        std::istringstream(rest) >> m;
        h = hamming_parity_check(m);
    } else {
        h = named_code(name).parity_basis();
    }

    std::ostringstream out;
    if (format == "alist")
        emit_alist(out, h);
    else
        emit_dense(out, h);
    if (out_path.empty() || out_path == "-") {
        std::cout << out.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ParseError("cannot write " + out_path);
        f << out.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimum pseudoweights and pseudoredundancy of binary codes"};
    app.require_subcommand(1);

    std::string matrix_path, channel = "all", format = "json";
    auto* pw = app.add_subcommand("pw", "minimum pseudoweights of a parity-check matrix");
    pw->add_option("matrix", matrix_path, "matrix file (dense or alist)")->required();
    pw->add_option("--channel", channel, "bec|awgnc|bsc|maxfrac|all");
    pw->add_option("--format", format, "json|text");

    std::vector<std::string> spec_words;
    std::size_t budget = std::size_t{1} << 24;
    auto* red = app.add_subcommand("redundancy", "pseudocodeword redundancy of a named code");
    red->add_option("code", spec_words, "code spec, e.g. hamming 3")->required();
    red->add_option("--channel", channel, "bec|awgnc|bsc|maxfrac|all");
    red->add_option("--budget", budget, "max matrices to examine");
    red->add_option("--format", format, "json|text");

    std::vector<std::string> target_words;
    auto* bounds = app.add_subcommand("bounds", "design/eigenvalue/gap bounds");
    bounds->add_option("target", target_words, "matrix file or code spec")->required();
    bounds->add_option("--format", format, "json|text");

    std::size_t nmax = 63, kmax = 28;
    std::string csv_path;
    auto* scan_cmd = app.add_subcommand("cyclic-scan", "eigenvalue-bound scan of cyclic codes");
    scan_cmd->add_option("--nmax", nmax, "max code length");
    scan_cmd->add_option("--kmax", kmax, "max dimension for exhaustive D");
    scan_cmd->add_option("--csv", csv_path, "output CSV path (default stdout)");

    std::vector<std::string> construct_words;
    std::string out_path, mat_format = "dense";
    auto* cons = app.add_subcommand("construct", "emit a named parity-check matrix");
    cons->add_option("name", construct_words, "e.g. 'hamming 3', 'all-dual hamming 3'")
        ->required();
    cons->add_option("--out", out_path, "output path (default stdout)");
    cons->add_option("--format", mat_format, "alist|dense");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    auto join = [](const std::vector<std::string>& words) {
        std::string s;
        for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
        return s;
    };

    try {
        if (pw->parsed()) return cmd_pw(matrix_path, channel, format);
        if (red->parsed()) return cmd_redundancy(join(spec_words), channel, budget, format);
        if (bounds->parsed()) return cmd_bounds(join(target_words), format);
        if (scan_cmd->parsed()) return cmd_cyclic_scan(nmax, kmax, csv_path);
        if (cons->parsed()) return cmd_construct(join(construct_words), out_path, mat_format);
        return kExitInput;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const DimensionGuard& e) {
        std::cerr << "dimension guard: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
