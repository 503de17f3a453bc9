#include "qgr/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qgr/errors.hpp"
#include "qgr/solve.hpp"

namespace qgr {

namespace {

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long integer(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

void write_output(const RunConfig& config, const std::string& text) {
    if (config.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(config.out_path);
    if (!out) throw input_error("cannot open output file '" + config.out_path + "'");
    out << text;
}

TrackSettings settings_from(const RunConfig& config) {
    TrackSettings settings;
    settings.seed = config.seed;
    settings.residual_tol = config.tol;
    settings.reality_tol = config.real_tol;
    settings.threads = config.threads;
    return settings;
}

PolySystem system_for(const RunConfig& config, std::vector<std::string>* schedule_echo) {
    if (!config.in_path.empty()) {
        std::ifstream in(config.in_path);
        if (!in) throw input_error("cannot open system file '" + config.in_path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        PolySystem system = system_from_text(buffer.str());
        reduce_system(system);
        return system;
    }
    ProblemShape shape = ProblemShape::create(config.m, config.p, config.q);
    auto schedule = t_schedule(shape.N(), parse_schedule_spec(config.schedule));
    if (schedule_echo)
        for (const auto& t : schedule) schedule_echo->push_back(to_string(t));
    return build_system(shape, OsculatingSections{schedule});
}

}  // namespace

ScheduleSpec parse_schedule_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw input_error("schedule must be power:K, geom:R or file:PATH");
    std::string kind = text.substr(0, colon);
    std::string arg = text.substr(colon + 1);
    if (kind == "power") {
        try {
            return ScheduleSpec::power(std::stol(arg));
        } catch (const std::exception&) {
            throw input_error("malformed power schedule exponent '" + arg + "'");
        }
    }
    if (kind == "geom") return ScheduleSpec::geometric(parse_rat(arg));
    if (kind == "file") {
        std::ifstream in(arg);
        if (!in) throw input_error("cannot open schedule file '" + arg + "'");
        std::vector<BigRat> values;
        std::string line;
        while (std::getline(in, line)) {
            std::string trimmed;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
            if (trimmed.empty() || trimmed[0] == '#') continue;
            values.push_back(parse_rat(trimmed));
        }
        return ScheduleSpec::explicit_values(std::move(values));
    }
    throw input_error("unknown schedule kind '" + kind + "'");
}

int cmd_delta(const RunConfig& config) {
    ProblemShape shape = ProblemShape::create(config.m, config.p, config.q);
    BigInt formula = delta_formula(shape);
    BigInt chains = delta_chains(shape);
    bool agree = formula == chains;
    BigInt syt(0);
    if (shape.q == 0) {
        syt = syt_rectangle(shape.p, shape.m);
        agree = agree && syt == chains;
    }

    if (config.format == "json") {
        nlohmann::ordered_json root;
        root["shape"] = {{"m", shape.m}, {"p", shape.p}, {"q", shape.q}};
        root["delta_formula"] = formula.get_str();
        root["delta_chains"] = chains.get_str();
        if (shape.q == 0) root["syt_oracle"] = syt.get_str();
        root["agree"] = agree;
        write_output(config, root.dump(2));
    } else {
        std::ostringstream os;
        os << "delta " << shape.to_string() << ": formula=" << formula.get_str()
           << " chains=" << chains.get_str();
        if (shape.q == 0) os << " syt=" << syt.get_str();
        os << " agree=" << (agree ? "yes" : "NO") << '\n';
        write_output(config, os.str());
    }
    return agree ? 0 : 1;
}

int cmd_poset(const RunConfig& config) {
    ProblemShape shape = ProblemShape::create(config.m, config.p, config.q);
    BigInt size = BigInt((shape.q + 1) * binomial(static_cast<unsigned long>(shape.n()),
                                                  static_cast<unsigned long>(shape.p)));
    if (size > config.max_elements)
        throw input_error("poset has " + size.get_str() + " elements, above the cap " +
                          std::to_string(config.max_elements) + " (raise --max-elements)");
    QuantumPoset poset(shape);
    if (config.format == "dot") {
        write_output(config, hasse_dot(poset));
    } else if (config.format == "json") {
        write_output(config, poset_json(poset));
    } else {
        std::ostringstream os;
        const auto& counts = poset.chain_counts();
        os << "poset " << shape.to_string() << ": " << poset.size() << " elements, N=" << shape.N()
           << '\n';
        for (int i = 0; i < poset.size(); ++i)
            os << "  " << poset.element(i).label() << " rank=" << poset.rank_of(i)
               << " chains=" << counts[static_cast<size_t>(i)].get_str() << '\n';
        os << "delta=" << counts[static_cast<size_t>(poset.top_id())].get_str() << '\n';
        write_output(config, os.str());
    }
    return 0;
}

int cmd_build(const RunConfig& config) {
    std::vector<std::string> echo;
    PolySystem system = system_for(config, &echo);
    write_output(config, system_to_text(system));
    return 0;
}

int cmd_solve(const RunConfig& config) {
    std::vector<std::string> echo;
    PolySystem system = system_for(config, &echo);
    TrackSettings settings = settings_from(config);

    SolveOutcome outcome = solve_system(system, settings);
    outcome.report.schedule = echo;
    if (config.certify) {
        Certificate cert = certify_prepared(outcome.prepared, outcome.solutions, settings);
        outcome.report.certificate_agrees = cert.agrees_with_numeric;
        outcome.report.certificate = std::move(cert);
    }

    bool ok = outcome.report.counts_agree_with_delta && outcome.report.conjugation_closed &&
              outcome.report.residual_max <= settings.residual_tol &&
              (!config.certify || outcome.report.certificate_agrees);

    if (config.format == "json") {
        write_output(config, report_to_json(outcome.report, outcome.solutions));
    } else {
        std::ostringstream os;
        os << "solve " << system.shape.to_string() << ": delta=" << outcome.report.delta.get_str()
           << " distinct=" << outcome.report.distinct << " real=" << outcome.report.real_count
           << " pairs=" << outcome.report.conjugate_pairs << " residual_max=" << outcome.report.residual_max
           << '\n';
        if (outcome.report.certificate) {
            const auto& cert = *outcome.report.certificate;
            os << "certificate: variable=" << cert.variable << " degree=" << cert.degree
               << " sturm_real=" << cert.sturm_count
               << " agrees=" << (cert.agrees_with_numeric ? "yes" : "NO") << '\n';
        }
        for (const auto& w : outcome.report.warnings) os << "warning: " << w << '\n';
        os << "status: " << (ok ? "PASS" : "FAIL") << " (" << outcome.report.elapsed_seconds << " s)\n";
        write_output(config, os.str());
        if (!config.out_path.empty()) {
            // keep the JSON alongside when a path is given
        }
    }
    return ok ? 0 : 1;
}

int cmd_certify(const RunConfig& config) {
    RunConfig with_cert = config;
    with_cert.certify = true;
    return cmd_solve(with_cert);
}

namespace {

int experiment_paper_q1(const RunConfig& config) {
    struct Case {
        long exponent;
        int expect_real;
    };
    const Case cases[] = {{1, 0}, {6, 8}};
    bool all_ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
        RunConfig run = config;
        run.m = 2;
        run.p = 2;
        run.q = 1;
        run.schedule = "power:" + std::to_string(c.exponent);
        std::vector<std::string> echo;
        PolySystem system = system_for(run, &echo);
        TrackSettings settings = settings_from(run);
        SolveOutcome outcome = solve_system(system, settings);
        Certificate cert = certify_prepared(outcome.prepared, outcome.solutions, settings);
        bool ok = outcome.report.distinct == 8 && outcome.report.real_count == c.expect_real &&
                  cert.degree == 8 && cert.sturm_count == c.expect_real && cert.agrees_with_numeric &&
                  outcome.report.residual_max <= settings.residual_tol;
        os << (ok ? "PASS" : "FAIL") << " schedule t_i=i^" << c.exponent << ": distinct="
           << outcome.report.distinct << " real=" << outcome.report.real_count
           << " eliminant_degree=" << cert.degree << " sturm_real=" << cert.sturm_count << '\n';
        all_ok = all_ok && ok;
    }
    os << "experiment paper-q1: " << (all_ok ? "PASS" : "FAIL") << '\n';
    write_output(config, os.str());
    return all_ok ? 0 : 1;
}

int experiment_shapiro_sweep(const RunConfig& config) {
    struct ShapeCase {
        int m, p;
    };
    const ShapeCase shapes[] = {{2, 2}, {3, 2}};
    bool all_counts_ok = true;
    std::ostringstream os;
    Rng rng(config.seed ^ 0x5eedULL);
    for (const auto& sc : shapes) {
        ProblemShape shape = ProblemShape::create(sc.m, sc.p, 0);
        BigInt delta = delta_chains(shape);
        int all_real_runs = 0;
        int count_ok_runs = 0;
        for (int run = 0; run < config.runs; ++run) {
            // distinct random rationals in (0, 25]
            std::set<long> numerators;
            while (static_cast<int>(numerators.size()) < shape.N()) numerators.insert(rng.integer(1, 400));
            std::vector<BigRat> schedule;
            for (long v : numerators) schedule.push_back(make_rat(v, 16));
            PolySystem system = build_system(shape, OsculatingSections{schedule});
            TrackSettings settings = settings_from(config);
            settings.seed = config.seed + 7919ULL * static_cast<uint64_t>(run) + static_cast<uint64_t>(sc.m);
            SolveOutcome outcome = solve_system(system, settings);
            bool count_ok = BigInt(outcome.report.distinct) == delta &&
                            outcome.report.residual_max <= settings.residual_tol;
            if (count_ok) ++count_ok_runs;
            if (count_ok && outcome.report.real_count == outcome.report.distinct) ++all_real_runs;
        }
        bool counts_ok = count_ok_runs == config.runs;
        all_counts_ok = all_counts_ok && counts_ok;
        os << (counts_ok ? "PASS" : "FAIL") << " (m=" << sc.m << ",p=" << sc.p << ",q=0) delta="
           << delta.get_str() << ": " << count_ok_runs << '/' << config.runs
           << " runs found all solutions; all-real fraction "
           << static_cast<double>(all_real_runs) / config.runs << '\n';
    }
    os << "experiment shapiro-q0-sweep: " << (all_counts_ok ? "PASS" : "FAIL") << '\n';
    write_output(config, os.str());
    return all_counts_ok ? 0 : 1;
}

}  // namespace

int cmd_experiment(const RunConfig& config) {
    if (config.experiment == "paper-q1") return experiment_paper_q1(config);
    if (config.experiment == "shapiro-q0-sweep") return experiment_shapiro_sweep(config);
    throw input_error("unknown experiment preset '" + config.experiment +
                      "' (expected paper-q1 or shapiro-q0-sweep)");
}

int run_command(const RunConfig& config) {
    try {
        if (config.command == "delta") return cmd_delta(config);
        if (config.command == "poset") return cmd_poset(config);
        if (config.command == "build") return cmd_build(config);
        if (config.command == "solve") return cmd_solve(config);
        if (config.command == "certify") return cmd_certify(config);
        if (config.command == "experiment") return cmd_experiment(config);
        std::cerr << "unknown command '" << config.command << "'\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace qgr
