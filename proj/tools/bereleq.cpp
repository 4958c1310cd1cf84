// bereleq: exact symplectic insertion, identity verification, and simulation.

#include <berele/io.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace berele;

struct CliConfig {
    int n = 2;
    std::string a_csv;  // empty selects the default weights 2, 3, ...
    std::string q_str = "1/2";
    int m = 4;
    int bound = 3;
    long long runs = 10000;
    std::uint64_t seed = 1;
    std::string format = "json";
    bool ascii = false;

    ParamContext make_context() const {
        std::vector<Rational> a;
        std::string token;
        std::istringstream in(a_csv);
        while (std::getline(in, token, ',')) a.push_back(parse_rational(token));
        if (a.empty())  // default weights 2, 3, 4, ...
            for (int i = 0; i < n; ++i) a.push_back(Rational(i + 2));
        return ParamContext(n, std::move(a), QContext(parse_rational(q_str)));
    }
};

int run_insert(const CliConfig& cfg, const std::string& word_text) {
    ParamContext pc = cfg.make_context();
    std::vector<Letter> w = parse_word(word_text);
    if (pc.ctx.q == 0) {
        WordResult res = berele_word(w, pc.n);
        if (cfg.format == "text") {
            std::cout << render_tableau(res.tableau, cfg.ascii);
            std::cout << "shapes:";
            for (const Partition& p : res.recording) std::cout << " " << p.str();
            std::cout << "\n";
        } else {
            json out{{"tableau", to_json(res.tableau)},
                     {"shapes", to_json(res.recording)}};
            std::cout << out.dump(2) << "\n";
        }
        return 0;
    }
    WeightTable table = phi_word(pc.ctx, w, pc.n);
    json rows = json::array();
    for (const auto& [key, weight] : table)
        rows.push_back(json{{"pattern", to_json(key.first)},
                            {"shapes", to_json(key.second)},
                            {"weight", to_string(weight)}});
    std::cout << rows.dump(2) << "\n";
    return 0;
}

int run_verify(const CliConfig& cfg, const std::string& suite) {
    ParamContext pc = cfg.make_context();
    json out;
    bool pass = false;
    if (suite == "pieri") {
        IdentityReport r = check_pieri(pc, cfg.bound);
        out = to_json(r);
        pass = r.pass();
    } else if (suite == "eigen") {
        IdentityReport r = check_eigenrelation(pc, cfg.bound);
        out = to_json(r);
        pass = r.pass();
    } else if (suite == "littlewood") {
        IdentityReport r = check_littlewood(pc, cfg.m);
        out = to_json(r);
        pass = r.pass();
    } else if (suite == "intertwining") {
        IntertwineReport r = verify_intertwining(pc, cfg.bound);
        out = to_json(r);
        pass = r.pass();
    } else if (suite == "doob") {
        IdentityReport r = doob_decomposition_check(pc, cfg.bound);
        out = to_json(r);
        pass = r.pass();
    } else if (suite == "qzero-equivalence") {
        long long checked = 0;
        pass = true;
        QContext q0{Rational(0)};
        for (const Partition& lam : enumerate_lambda_n(pc.n, cfg.bound)) {
            for (const GtPattern& z : enumerate_patterns(pc.n, lam)) {
                for (int v = 1; v <= pc.n && pass; ++v) {
                    for (bool barred : {false, true}) {
                        Letter l{v, barred};
                        PatternDistribution d = insert_letter(q0, z, l);
                        ++checked;
                        if (d.size() != 1 ||
                            d.begin()->first != classic_insert_pattern(z, l)) {
                            pass = false;
                            break;
                        }
                    }
                }
            }
        }
        out = json{{"name", "qzero-equivalence"}, {"checked", checked}, {"pass", pass}};
    } else if (suite == "bijectivity") {
        // Every word maps to a distinct (tableau, shape sequence) pair with
        // matching final shape, and the image counts factorize.
        long long total = 1;
        for (int i = 0; i < cfg.m; ++i) total *= 2 * pc.n;
        std::map<std::pair<GtPattern, OscillatingTableau>, int> seen;
        pass = true;
        std::vector<Letter> w(cfg.m, Letter{1, false});
        auto next_word = [&]() {
            for (int i = 0; i < cfg.m; ++i) {
                int code = w[i].order() % (2 * pc.n) + 1;
                w[i] = letter_of_order(code);
                if (code != 1) return true;
            }
            return false;
        };
        long long count = 0;
        do {
            ++count;
            WordResult res = berele_word(w, pc.n);
            if (res.tableau.shape() != res.recording.back()) pass = false;
            if (!is_oscillating(res.recording, pc.n)) pass = false;
            auto key = std::make_pair(tableau_to_pattern(res.tableau), res.recording);
            if (++seen[key] > 1) pass = false;
        } while (next_word() && count < total + 1);
        if (count != total || static_cast<long long>(seen.size()) != total) pass = false;
        out = json{{"name", "bijectivity"}, {"words", count}, {"pass", pass}};
    } else {
        std::cerr << "unknown verify suite: " << suite << "\n";
        return 2;
    }
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : 1;
}

int run_simulate(const CliConfig& cfg, bool compare) {
    ParamContext pc = cfg.make_context();
    if (compare) {
        EmpiricalReport r = empirical_vs_exact(pc, cfg.m, cfg.runs, cfg.seed);
        std::cout << to_json(r).dump(2) << "\n";
        return r.pass() ? 0 : 1;
    }
    for (long long run = 0; run < cfg.runs; ++run) {
        Trajectory t = simulate(pc, cfg.m, cfg.seed + run);
        json line{{"run", run},
                  {"shapes", to_json(t.shapes)},
                  {"final_pattern", to_json(t.patterns.back())}};
        std::cout << line.dump() << "\n";
    }
    return 0;
}

int run_enumerate(const CliConfig& cfg, const std::string& kind,
                  const std::string& shape_csv) {
    ParamContext pc = cfg.make_context();
    std::vector<int> parts;
    std::string token;
    std::istringstream in(shape_csv);
    while (std::getline(in, token, ',')) parts.push_back(std::stoi(token));
    Partition shape(parts);
    json out = json::array();
    if (kind == "tableaux") {
        for (const SymplecticTableau& t : enumerate_tableaux(shape, pc.n))
            out.push_back(to_json(t));
    } else if (kind == "patterns") {
        for (const GtPattern& z : enumerate_patterns(pc.n, shape)) out.push_back(to_json(z));
    } else if (kind == "oscillating") {
        std::cout << json{{"shape", to_json(shape)},
                          {"m", cfg.m},
                          {"weighted_count", to_string(q_count(pc, cfg.m, shape))}}
                         .dump(2)
                  << "\n";
        return 0;
    } else {
        std::cerr << "unknown enumerate kind: " << kind << "\n";
        return 2;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_hermite(const CliConfig& cfg, int ell) {
    ParamContext pc = cfg.make_context();
    json out = json::array();
    for (int d = 0; d <= ell; ++d)
        out.push_back(json{{"ell", d},
                           {"value", to_string(q_hermite(pc.ctx, d, pc.a[0]))}});
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for symplectic insertion and its q-deformation"};
    app.require_subcommand(1);
    app.fallthrough();  // let global options appear after the subcommand

    CliConfig cfg;
    app.add_option("--n", cfg.n, "alphabet rank")->envname("BERELEQ_N");
    app.add_option("--a", cfg.a_csv, "comma-separated positive weights a_1..a_n")
        ->envname("BERELEQ_A");
    app.add_option("--q", cfg.q_str, "deformation parameter, rational in [0,1)")
        ->envname("BERELEQ_Q");
    app.add_option("--m", cfg.m, "word length / step bound")->envname("BERELEQ_M");
    app.add_option("--bound", cfg.bound, "sweep bound on largest part")
        ->envname("BERELEQ_BOUND");
    app.add_option("--runs", cfg.runs, "number of simulation runs")->envname("BERELEQ_RUNS");
    app.add_option("--seed", cfg.seed, "random seed")->envname("BERELEQ_SEED");
    app.add_option("--format", cfg.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("BERELEQ_FORMAT");
    app.add_flag("--ascii", cfg.ascii, "render barred letters with ASCII primes");

    auto* insert = app.add_subcommand("insert", "insert a word letter by letter");
    std::vector<std::string> word_tokens;
    insert->add_option("word", word_tokens, "letters like 2 1' 2");

    auto* verify = app.add_subcommand("verify", "verify an identity suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "pieri|eigen|littlewood|intertwining|doob|qzero-equivalence|bijectivity")
        ->required();

    auto* simulate_cmd = app.add_subcommand("simulate", "sample insertion trajectories");
    bool compare = false;
    simulate_cmd->add_flag("--compare", compare, "compare empirical laws with exact ones");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list tableaux or patterns");
    std::string kind, shape_csv;
    enumerate_cmd->add_option("kind", kind, "tableaux|patterns|oscillating")->required();
    enumerate_cmd->add_option("--shape", shape_csv, "comma-separated partition");

    auto* hermite = app.add_subcommand("hermite", "print rank-one polynomial values");
    int ell = 10;
    hermite->add_option("--ell", ell, "maximal degree");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (insert->parsed()) {
            std::string text;
            for (const auto& t : word_tokens) text += t + " ";
            return run_insert(cfg, text);
        }
        if (verify->parsed()) return run_verify(cfg, suite);
        if (simulate_cmd->parsed()) return run_simulate(cfg, compare);
        if (enumerate_cmd->parsed()) return run_enumerate(cfg, kind, shape_csv);
        if (hermite->parsed()) return run_hermite(cfg, ell);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
