#pragma once

// Command-line front end. run_cli() is kept separate from main() so the
// tests can drive it with string arguments and captured streams.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "traceforge/io.hpp"
#include "traceforge/semigroup_tree.hpp"

namespace traceforge::cli {

enum Exit : int { kOk = 0, kInputError = 2, kWorkload = 3, kViolation = 4 };

inline int exit_code_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::WorkloadExceeded:
    case ErrorCode::BoundTooLarge:
        return kWorkload;
    default:
        return kInputError;
    }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    require(static_cast<bool>(f), ErrorCode::InvalidArgument, "cannot write " + path.string());
    f << text;
}

inline unsigned thread_count(int requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    if (const char* env = std::getenv("TRACE_FORGE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// ---- sgp info ---------------------------------------------------------------

inline int cmd_info(const std::string& gens, const std::string& json_path, std::ostream& out) {
    const auto h = parse_semigroup(gens);
    const auto j = semigroup_to_json(h);
    if (h.is_natural()) {
        out << "H = N_0: K[[H]] = K[[t]] is a discrete valuation ring (DVR)\n";
        out << "  Frobenius -1, conductor 0, genus 0; m is not a trace ideal\n";
    } else {
        const int e = h.multiplicity();
        const auto k = kunz_coordinates(h, e);
        const auto cm = cm_type_list_check(h);
        out << "H = " << h.pretty() << "\n";
        out << "  gaps              " << join(h.gaps()) << "\n";
        out << "  Frobenius         " << h.frobenius() << "\n";
        out << "  conductor         " << h.conductor() << "\n";
        out << "  genus             " << h.genus() << "\n";
        out << "  multiplicity      " << e << "\n";
        out << "  embedding dim     " << h.embedding_dimension() << "\n";
        out << "  minimal mult      " << yes_no(h.has_minimal_multiplicity()) << "\n";
        out << "  Apery set (e=" << e << ")   " << join(apery_set(h, e)) << "\n";
        out << "  Kunz vector       (" << join(k.coords) << ") " << to_string(kunz_cone_classify(k)) << "\n";
        const auto kv = canonical_value_set(h);
        out << "  K(H)              " << kv.to_string() << " generated by {" << join(kv.minimal_generators())
            << "}, type " << kv.minimal_generators().size() << "\n";
        out << "  Gorenstein        " << yes_no(is_symmetric(h)) << "\n";
        out << "  Arf               " << yes_no(is_arf(h)) << "\n";
        std::vector<std::string> chain;
        for (const auto& s : lipman_sequence(h)) chain.push_back(s.pretty());
        out << "  blowup chain      " << join(chain, " -> ") << "\n";
        out << "  value-set cond    " << value_set_condition(h).to_string() << "\n";
        out << "  H + K(H)          " << canonical_extension(h).pretty()
            << (cm.listed ? " listed as " + cm.tag : " not in the finite-CM-type list")
            << (cm.substituted ? " (stand-in for the repeated <3,5,7>)" : "") << "\n";
    }
    if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
    return kOk;
}

// ---- trace enum / bijection / probe ------------------------------------------

inline void print_enumeration(const TraceEnumeration& tr, std::ostream& out) {
    out << "Tr(F" << tr.field.characteristic() << "[[" << tr.semigroup.pretty() << "]]): " << tr.total_count()
        << " trace ideals (" << tr.ideals.size() << " nonzero + zero)\n";
    out << "  " << std::left << std::setw(4) << "#" << std::setw(28) << "ideal" << std::setw(5) << "lo"
        << std::setw(6) << "tail" << "flags\n";
    out << "  " << std::setw(4) << 0 << std::setw(28) << "0" << std::setw(5) << "-" << std::setw(6) << "-"
        << "zero\n";
    int idx = 1;
    for (const auto& r : tr.ideals) {
        std::vector<std::string> flags;
        if (r.is_conductor) flags.push_back("conductor");
        if (r.is_maximal_ideal) flags.push_back("maximal");
        if (r.is_unit_ideal) flags.push_back("unit");
        if (r.is_monomial) flags.push_back("monomial");
        out << "  " << std::setw(4) << idx++ << std::setw(28) << ideal_label(r.ideal) << std::setw(5)
            << r.ideal.lo() << std::setw(6) << r.ideal.tail() << join(flags, " ") << "\n";
    }
    out << std::right;
    const auto c = tr.census;
    out << "  census: dim R/c = " << c.quotient_dimension << ", " << c.candidate_ideals
        << " ideals between c and R, " << c.cyclic_modules << " cyclic\n";
}

inline int cmd_trace_enum(const std::string& gens, unsigned p, const std::string& json_path, std::ostream& out) {
    const auto h = parse_semigroup(gens);
    const auto tr = enumerate_trace_ideals(h, p);
    print_enumeration(tr, out);
    const auto j = enumeration_to_json(tr);
    bool ok = true;
    for (const auto& [name, v] : j.at("checks").items()) {
        out << "  check " << name << ": " << (v.get<bool>() ? "ok" : "VIOLATED") << "\n";
        ok = ok && v.get<bool>();
    }
    if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
    return ok ? kOk : kViolation;
}

inline int cmd_trace_bijection(const std::string& gens, unsigned p, std::ostream& out) {
    const auto h = parse_semigroup(gens);
    const auto rep = verify_bijection(h, p);
    if (rep.ok) {
        out << "bijection OK (|Tr(R)\\{R}| = |Tr(B)| = " << rep.left_count + 1 << " including 0) for B = K[["
            << rep.blowup_semigroup.pretty() << "]] over F" << p << "\n";
        return kOk;
    }
    out << "bijection FAILED for " << h.pretty() << " over F" << p << ": " << rep.detail << " (left "
        << rep.left_count << ", right " << rep.right_count << ")\n";
    return kViolation;
}

inline std::vector<Rational> parse_samples(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split(text, ',')) out.push_back(Rational::parse(s));
    require(!out.empty(), ErrorCode::ParseError, "no samples given");
    return out;
}

inline int cmd_trace_probe(const std::string& gens, int n, const std::string& samples, const std::string& json_path,
                           std::ostream& out) {
    const auto h = parse_semigroup(gens);
    const auto ks = parse_samples(samples);
    const auto rep = family_probe(h, n, ks);
    out << "R : R[t^" << n << " + k t^" << n + 1 << "] over Q for H = " << h.pretty() << "\n";
    for (std::size_t i = 0; i < ks.size(); ++i)
        out << "  k = " << std::setw(6) << std::left << ks[i].to_string() << std::right << " "
            << ideal_label(rep.colons[i]) << "\n";
    out << rep.distinct_results << "/" << ks.size() << " distinct"
        << (rep.infinite_family_witness() ? ": infinite family witness" : ": no separation")
        << (rep.all_trace ? "" : " (some colon is NOT a trace ideal)") << "\n";
    if (!json_path.empty()) {
        json j{{"schema_version", kSchemaVersion}, {"tool_version", kToolVersion}, {"kind", "family_probe"},
               {"semigroup", h.to_string()}, {"n", n}};
        json cols = json::array();
        for (std::size_t i = 0; i < ks.size(); ++i) {
            auto c = ideal_to_json(rep.colons[i]);
            c["k"] = ks[i].to_string();
            cols.push_back(c);
        }
        j["colons"] = cols;
        j["distinct_results"] = rep.distinct_results;
        j["all_trace"] = rep.all_trace;
        j["verdict"] = rep.verdict();
        write_file(json_path, j.dump(2) + "\n");
    }
    return rep.all_trace ? kOk : kViolation;
}

// ---- artin --------------------------------------------------------------------

template <ExactScalar E>
ArtinAlgebra<E> artin_preset(const std::string& name, const FieldSpec& f) {
    if (name == "sq0") return square_zero_two_vars<E>(f);
    if (name == "xy") return gorenstein_xy<E>(f);
    if (name.rfind("dvr", 0) == 0) {
        int l = 0;
        try {
            l = std::stoi(name.substr(3));
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "preset dvrN needs an integer N");
        }
        return truncated_dvr<E>(f, l);
    }
    if (name.rfind("quot:", 0) == 0) return semigroup_quotient<E>(f, parse_semigroup(name.substr(5)));
    if (name.rfind("file:", 0) == 0) {
        std::ifstream in(name.substr(5));
        require(static_cast<bool>(in), ErrorCode::InvalidArgument, "cannot read " + name.substr(5));
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            fail(ErrorCode::ParseError, e.what());
        }
        auto a = artin_from_json<E>(j);
        require(a.field() == f, ErrorCode::FieldMismatch, "algebra file is over " + a.field().to_string());
        return a;
    }
    fail(ErrorCode::ParseError, "unknown preset '" + name + "' (sq0, xy, dvrN, quot:GENS, file:PATH)");
}

template <ExactScalar E>
std::string ideal_name(const SubIdeal<E>& i) {
    const auto& a = i.algebra();
    if (i.is_zero()) return "0";
    if (i == SubIdeal<E>::whole(a)) return "R";
    if (i == SubIdeal<E>::maximal(a)) return "m";
    if (i == socle(a)) return "soc = " + i.to_string();
    return i.to_string();
}

inline int cmd_artin(const std::string& preset, unsigned p, bool over_q, const std::string& samples,
                     const std::string& json_path, std::ostream& out) {
    if (over_q) {
        const auto a = artin_preset<Rational>(preset, FieldSpec::rationals());
        const auto soc = socle(a);
        out << "A = " << preset << " over Q, dim " << a.dim() << "\n";
        out << "  socle " << soc.to_string() << " (dim " << soc.dim() << "), Gorenstein "
            << yes_no(is_gorenstein(a)) << "\n";
        json j = artin_to_json(a);
        j["socle"] = subideal_to_json(soc);
        if (!samples.empty()) {
            const auto idx = a.maximal_ideal_indices();
            require(idx.size() >= 2, ErrorCode::DependentGenerators, "maximal ideal needs two basis elements");
            const auto u = a.basis_vector(idx[0]), v = a.basis_vector(idx[1]);
            const auto ks = parse_samples(samples);
            const auto rep = gorenstein_family_separation(a, u, v, ks);
            for (std::size_t i = 0; i < ks.size(); ++i)
                out << "  (" << a.labels()[idx[0]] << " + " << ks[i].to_string() << "*" << a.labels()[idx[1]]
                    << ") = " << rep.ideals[i].to_string() << "\n";
            out << rep.distinct << "/" << ks.size() << " distinct trace ideals"
                << (rep.all_trace ? "" : " (some ideal is NOT a trace ideal)") << "\n";
            j["separation"] = {{"distinct", rep.distinct}, {"all_trace", rep.all_trace}};
            if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
            return rep.all_trace && rep.distinct == ks.size() ? kOk : kViolation;
        }
        if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
        return kOk;
    }
    const FieldSpec f = FieldSpec::prime(p);
    const auto a = artin_preset<Residue>(preset, f);
    const auto ideals = enumerate_ideals(a);
    std::vector<SubIdeal<Residue>> traces;
    for (const auto& i : ideals)
        if (is_trace_ideal(i)) traces.push_back(i);
    const auto soc = socle(a);
    out << "A = " << preset << " over F" << p << ", dim " << a.dim() << ", " << ideals.size() << " ideals, socle "
        << soc.to_string() << ", Gorenstein " << yes_no(is_gorenstein(a)) << "\n";
    std::vector<std::string> names;
    for (const auto& t : traces) names.push_back(ideal_name(t));
    out << "Tr = {" << join(names, ", ") << "}\n";
    bool socle_ok = true;
    for (const auto& t : traces) socle_ok = socle_ok && (t.is_zero() || t.contains(soc));
    out << "  check socle_smallest: " << (socle_ok ? "ok" : "VIOLATED") << "\n";
    if (!json_path.empty()) {
        json j = artin_to_json(a);
        json all = json::array(), tr = json::array();
        for (const auto& i : ideals) all.push_back(subideal_to_json(i));
        for (const auto& i : traces) tr.push_back(subideal_to_json(i));
        j["ideals"] = all;
        j["trace_ideals"] = tr;
        j["socle"] = subideal_to_json(soc);
        write_file(json_path, j.dump(2) + "\n");
    }
    return socle_ok ? kOk : kViolation;
}

// ---- survey -------------------------------------------------------------------

struct SurveyConfig {
    int max_genus = 4;
    unsigned p = 2;
    std::string corpus;
    std::string out_dir;
    std::string samples = "0,1,2,3,5";
    int threads = 0;
};

struct SurveyRecord {
    json data;                           // deterministic per-H report
    std::vector<std::string> violations; // theorem checks that failed
    bool study = false;                  // Fails(n): worth a manual look
    double seconds = 0;
};

inline std::string flag(bool b) { return b ? "true" : "false"; }

/// Every check the survey runs on one semigroup.
inline SurveyRecord survey_one(const NumericalSemigroup& h, const SurveyConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    SurveyRecord rec;
    json j{{"schema_version", kSchemaVersion}, {"tool_version", kToolVersion}, {"kind", "survey_item"}};
    j["semigroup"] = semigroup_to_json(h);
    auto violate = [&](const std::string& what) { rec.violations.push_back(h.to_string() + ": " + what); };

    const auto vs = value_set_condition(h);
    const bool arf = is_arf(h);
    if (arf && !vs.holds()) violate("Arf semigroup fails the value-set condition");
    if (arf != is_arf_by_closure(h)) violate("Arf tests disagree");
    rec.study = !vs.holds();

    json csv{{"gens", h.to_string()},
             {"genus", h.genus()},
             {"mult", h.multiplicity()},
             {"edim", h.embedding_dimension()},
             {"arf", flag(arf)},
             {"kunz_class", h.multiplicity() >= 2
                                ? to_string(kunz_cone_classify(kunz_coordinates(h, h.multiplicity())))
                                : std::string("n/a")},
             {"vs_condition", vs.to_string()},
             {"n_trace_p", "n/a"},
             {"bijection_ok", "n/a"},
             {"family_witness", "n/a"}};
    if (h.multiplicity() >= 2) {
        const auto cls = kunz_cone_classify(kunz_coordinates(h, h.multiplicity()));
        if (cls == KunzClass::Exterior) violate("Kunz point outside the cone");
        if ((cls == KunzClass::Interior) != h.has_minimal_multiplicity())
            violate("Kunz interior does not match minimal multiplicity");
    }

    try {
        const auto tr = enumerate_trace_ideals(h, cfg.p);
        json e = enumeration_to_json(tr);
        for (const auto& [name, v] : e.at("checks").items())
            if (!v.get<bool>()) violate("check " + name);
        csv["n_trace_p"] = std::to_string(tr.total_count());
        j["trace_enumeration"] = e;
        if (h.has_minimal_multiplicity() && !h.is_natural()) {
            const auto b = verify_bijection(h, cfg.p);
            csv["bijection_ok"] = flag(b.ok);
            if (!b.ok) violate("bijection: " + b.detail);
        }
    } catch (const Error& err) {
        if (err.code() != ErrorCode::WorkloadExceeded) throw;
        csv["n_trace_p"] = "workload";
        j["trace_enumeration"] = {{"skipped", err.what()}};
    }

    int probe_n = 0;
    for (int n = 2; n <= h.frobenius() && !probe_n; ++n)
        if (family_probe_applies(h, n)) probe_n = n;
    if (probe_n) {
        const auto rep = family_probe(h, probe_n, parse_samples(cfg.samples));
        csv["family_witness"] = flag(rep.infinite_family_witness());
        j["family_probe"] = {{"n", probe_n},
                             {"distinct_results", rep.distinct_results},
                             {"samples", rep.samples.size()},
                             {"all_trace", rep.all_trace},
                             {"verdict", rep.verdict()}};
        if (!rep.all_trace) violate("a family colon is not a trace ideal");
        if (rep.samples.size() > 1 && !rep.infinite_family_witness())
            violate("family probe colons coincide for distinct parameters");
    }
    j["summary"] = csv;
    j["violations"] = rec.violations;
    rec.data = std::move(j);
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

inline const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols{"gens",         "genus",     "mult",        "edim",
                                               "arf",          "kunz_class", "vs_condition", "n_trace_p",
                                               "bijection_ok", "family_witness"};
    return cols;
}

inline std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"") != std::string::npos) {
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    }
    return s;
}

inline int cmd_survey(const SurveyConfig& cfg, std::ostream& out, std::ostream& err) {
    require(cfg.corpus.empty() ? cfg.max_genus <= 10 : true, ErrorCode::BoundTooLarge, "survey genus bound is 10");
    std::vector<NumericalSemigroup> corpus;
    if (!cfg.corpus.empty()) {
        std::ifstream in(cfg.corpus);
        require(static_cast<bool>(in), ErrorCode::InvalidArgument, "cannot read " + cfg.corpus);
        corpus = parse_corpus(in);
    } else {
        corpus = enumerate_semigroups(cfg.max_genus);
    }
    FieldSpec::prime(cfg.p); // validates p
    parse_samples(cfg.samples);

    std::vector<SurveyRecord> records(corpus.size());
    std::vector<std::string> errors(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            try {
                records[i] = survey_one(corpus[i], cfg);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned nthreads = std::min<unsigned>(thread_count(cfg.threads), std::max<std::size_t>(1, corpus.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // Deterministic reduce in corpus order.
    namespace fs = std::filesystem;
    const fs::path dir = cfg.out_dir;
    std::ostringstream csv;
    csv << join(csv_columns()) << "\n";
    json items = json::array(), violations = json::array(), study = json::array(), failures = json::array();
    json timings = json::object();
    double total = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const std::string name = corpus[i].to_string();
        if (!errors[i].empty()) {
            failures.push_back({{"gens", name}, {"error", errors[i]}});
            continue;
        }
        const auto& r = records[i];
        std::vector<std::string> cells;
        for (const auto& c : csv_columns()) cells.push_back(csv_cell(r.data.at("summary").at(c)));
        csv << join(cells) << "\n";
        json item = r.data.at("summary");
        item["violations"] = r.violations;
        items.push_back(item);
        for (const auto& v : r.violations) violations.push_back(v);
        if (r.study) study.push_back(name);
        timings[name] = r.seconds;
        total += r.seconds;
        if (!dir.empty()) {
            std::string file = name;
            std::replace(file.begin(), file.end(), ',', '_');
            write_file(dir / "semigroups" / ("H_" + file + ".json"), r.data.dump(2) + "\n");
        }
    }
    json run{{"schema_version", kSchemaVersion},
             {"tool_version", kToolVersion},
             {"kind", "survey_run"},
             {"config",
              {{"max_genus", cfg.corpus.empty() ? json(cfg.max_genus) : json(nullptr)},
               {"corpus", cfg.corpus.empty() ? json(nullptr) : json(fs::path(cfg.corpus).filename().string())},
               {"p", cfg.p},
               {"samples", cfg.samples}}},
             {"count", items.size()},
             {"records", items},
             {"violations", violations},
             {"fails_for_study", study},
             {"failures", failures}};
    if (!dir.empty()) {
        write_file(dir / "summary.csv", csv.str());
        write_file(dir / "run.json", run.dump(2) + "\n");
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::ostringstream stamp;
        stamp << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
        json tj{{"timestamp", stamp.str()}, {"threads", nthreads}, {"total_seconds", total}, {"per_semigroup", timings}};
        write_file(dir / "timings.json", tj.dump(2) + "\n");
    }
    out << "survey: " << items.size() << " semigroups over F" << cfg.p << ", " << violations.size()
        << " theorem violations, " << study.size() << " with a failing value-set condition, " << failures.size()
        << " errors\n";
    for (const auto& v : violations) err << "VIOLATION " << v.get<std::string>() << "\n";
    for (const auto& f : failures)
        err << "error on " << f.at("gens").get<std::string>() << ": " << f.at("error").get<std::string>() << "\n";
    if (dir.empty()) out << csv.str();
    return violations.empty() ? kOk : kViolation;
}

// ---- dispatch -----------------------------------------------------------------

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"traceforge: trace ideals of numerical semigroup rings and local algebras", "traceforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string gens, json_path, samples = "0,1,2,3,5", preset;
    unsigned p = 2;
    int n = 2;
    bool over_q = false;
    SurveyConfig survey;

    auto* sgp = app.add_subcommand("sgp", "numerical semigroup invariants");
    sgp->require_subcommand(1);
    auto* info = sgp->add_subcommand("info", "gaps, Apery set, Kunz class, K(H), Arf, blowups");
    info->add_option("gens", gens, "minimal generators, e.g. 4,5,11")->required();
    info->add_option("--json", json_path, "also write a JSON report");

    auto* trace = app.add_subcommand("trace", "trace ideals of K[[H]]");
    trace->require_subcommand(1);
    auto* en = trace->add_subcommand("enum", "all trace ideals over F_p");
    en->add_option("gens", gens)->required();
    en->add_option("--p", p, "prime")->check(CLI::PositiveNumber);
    en->add_option("--json", json_path);
    auto* bij = trace->add_subcommand("bijection", "Tr(R)\\{R} -> Tr(m:m), I -> I/t^e");
    bij->add_option("gens", gens)->required();
    bij->add_option("--p", p)->check(CLI::PositiveNumber);
    auto* probe = trace->add_subcommand("probe", "separate R : R[t^n + k t^(n+1)] over Q");
    probe->add_option("gens", gens)->required();
    probe->add_option("--n", n)->required();
    probe->add_option("--samples", samples, "distinct rationals k1,k2,...");
    probe->add_option("--json", json_path);

    auto* artin = app.add_subcommand("artin", "finite-dimensional local algebras");
    artin->add_option("preset", preset, "sq0 | xy | dvrN | quot:GENS | file:PATH")->required();
    auto* pf = artin->add_option("--p", p)->check(CLI::PositiveNumber);
    artin->add_flag("--q", over_q, "work over Q (no enumeration)")->excludes(pf);
    artin->add_option("--samples", samples, "family separation samples (with --q)");
    artin->add_option("--json", json_path);
    bool artin_samples = false;

    auto* sv = app.add_subcommand("survey", "batch checks over every semigroup up to a genus");
    sv->add_option("--max-genus", survey.max_genus)->check(CLI::NonNegativeNumber);
    sv->add_option("--corpus", survey.corpus, "file with one semigroup per line instead of --max-genus");
    sv->add_option("--p", survey.p)->check(CLI::PositiveNumber);
    sv->add_option("--out", survey.out_dir, "output directory");
    sv->add_option("--samples", survey.samples);
    sv->add_option("--threads", survey.threads, "worker count (default: TRACE_FORGE_THREADS or all cores)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    artin_samples = artin->count("--samples") > 0;

    try {
        if (*info) return cmd_info(gens, json_path, out);
        if (*en) return cmd_trace_enum(gens, p, json_path, out);
        if (*bij) return cmd_trace_bijection(gens, p, out);
        if (*probe) return cmd_trace_probe(gens, n, samples, json_path, out);
        if (*artin) return cmd_artin(preset, p, over_q, artin_samples ? samples : "", json_path, out);
        if (*sv) return cmd_survey(survey, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace traceforge::cli
