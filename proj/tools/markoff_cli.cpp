// markoff: command-line front end. Exit 0 on success, 1 when a verification fails, 2 on bad usage.

#include <CLI11.hpp>

#include <iostream>
#include <regex>
#include <thread>

#include "markoff/markoff.hpp"

using namespace markoff;

namespace {

struct Options {
    unsigned precision = 20;
    int depth = 3;
    std::string bound = "1e6";
    std::string format = "text";
    unsigned threads = 0;
};

unsigned thread_count(const Options& o) {
    return o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
}

// "12345", "1e100", "3e5" or "10^40"
Integer parse_bound(const std::string& s) {
    std::smatch m;
    static const std::regex plain(R"(\d+)"), sci(R"((\d+)[eE](\d+))"), power(R"(10\^(\d+))");
    if (std::regex_match(s, plain)) return Integer(s);
    if (std::regex_match(s, m, sci)) return Integer(m[1].str()) * pow10(std::stoul(m[2].str()));
    if (std::regex_match(s, m, power)) return pow10(std::stoul(m[1].str()));
    fail(errc::parse_error, "cannot read bound '" + s + "'");
}

// k when x = 10^k, else -1
long decimal_exponent(const Integer& x) {
    std::string s = x.get_str();
    if (s[0] != '1' || s.find_first_not_of('0', 1) != std::string::npos) return -1;
    return long(s.size()) - 1;
}

std::vector<Integer> parse_ints(const std::string& s, size_t want, const std::string& what) {
    Digits d = parse_digits(s);
    require(d.size() == want, errc::parse_error, what + " needs " + std::to_string(want) + " comma-separated integers");
    return d;
}

// TSV rows with tabs, CSV rows with quoted triples
std::string reformat(const std::string& tsv, const std::string& format) {
    if (format != "csv") return tsv;
    std::string out, cell;
    std::istringstream in(tsv);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        bool first = true;
        while (std::getline(cells, cell, '\t')) {
            out += (first ? "" : ",") + (cell.find(',') != std::string::npos ? csv_quote(cell) : cell);
            first = false;
        }
        out += "\n";
    }
    return out;
}

void tree_cmd(CLI::App& app, Options& o) {
    auto* cmd = app.add_subcommand("tree", "decorated Markoff tree as TSV (path, triple, r, s, w, v)");
    static std::string decorations = "all", path;
    cmd->add_option("--decorations", decorations, "all, none or a subset of r,s,w,v");
    cmd->add_option("--path", path, "print one node, e.g. LRL");
    cmd->callback([&o] {
        auto sel = DecorationSelection::parse(decorations);
        std::string tsv = path.empty() ? tree_dump(o.depth, sel) : tsv_row(node_at(path == "-" ? "" : path), sel) + "\n";
        std::cout << reformat(tsv, o.format);
    });
}

void frobenius_cmd(CLI::App& app, Options&) {
    auto* cmd = app.add_subcommand("frobenius", "Frobenius continued fraction m/r of a coprime pair");
    static std::string pair;
    static bool snake = false, comp = false;
    cmd->add_option("--pair", pair, "mu,nu")->required();
    cmd->add_flag("--snake", snake, "draw the snake diagram");
    cmd->add_flag("--complement", comp, "use the complementary expansion");
    cmd->callback([] {
        auto p = parse_ints(pair, 2, "--pair");
        auto f = comp ? complement(p[0], p[1]) : frobenius_cf(p[0], p[1]);
        std::cout << "digits\t" << join(f.digits) << "\n"
                  << "value\t" << f.m() << "/" << f.r() << "\n"
                  << "s\t" << f.s() << "\n";
        if (snake) std::cout << snake_diagram(p[0], p[1]).render();
    });
}

TSingularity tsing_of(const std::string& pair, const std::string& triple) {
    require(pair.empty() != triple.empty(), errc::parse_error, "give exactly one of --pair n,k or --triple e,g,f");
    if (!pair.empty()) {
        auto p = parse_ints(pair, 2, "--pair");
        return TSingularity(p[0], p[1]);
    }
    auto t = parse_ints(triple, 3, "--triple");
    require(is_markoff(t[0], t[1], t[2]), errc::not_markoff, "not a Markoff triple: " + triple);
    return TSingularity(t[1], decorations_direct(t[0], t[1], t[2]).w[1]);
}

void tsing_cmd(CLI::App& app, Options&) {
    auto* cmd = app.add_subcommand("tsing", "T-singularity expansions");
    cmd->require_subcommand(1);
    static std::string pair, triple, digits;
    static bool chain = false;
    auto source = [](CLI::App* sub) {
        sub->add_option("--pair", pair, "n,k");
        sub->add_option("--triple", triple, "Markoff triple e,g,f; uses (g, w_g)");
    };
    auto* sq = cmd->add_subcommand("square", "square expansion of g^2/(g w - 1)");
    source(sq);
    sq->callback([] { std::cout << join(square_cf(tsing_of(pair, triple)).digits) << "\n"; });
    auto* le = cmd->add_subcommand("le", "length encoding, or the pair of --digits");
    source(le);
    le->add_option("--digits", digits, "length encoding to decode");
    le->callback([] {
        if (!digits.empty()) {
            auto t = pair_from_le(parse_digits(digits));
            std::cout << t.n << "," << t.k << "\n";
        } else {
            std::cout << join(le_from_pair(tsing_of(pair, triple))) << "\n";
        }
    });
    auto* hj = cmd->add_subcommand("hj", "Hirzebruch-Jung expansion of the resolution");
    source(hj);
    hj->add_flag("--chain", chain, "render as a chain of self-intersections");
    hj->callback([] {
        auto d = hj_of_tsing(tsing_of(pair, triple));
        std::cout << (chain ? hj_chain(d) : join(d)) << "\n";
    });
}

void cantor_cmd(CLI::App& app, Options& o) {
    auto* cmd = app.add_subcommand("cantor", "limit points, covers and certificates of the two spectra");
    cmd->require_subcommand(1);
    static std::string spectrum = "R", path;
    auto sp_opt = [](CLI::App* sub) { sub->add_option("--spectrum", spectrum, "R or T"); };

    auto* lim = cmd->add_subcommand("limit", "limit point of a path with a tail, e.g. LR(L), or root:1 / root:2");
    sp_opt(lim);
    lim->add_option("--path", path, "path")->required();
    lim->callback([&o] {
        auto sp = parse_spectrum(spectrum);
        if (path.rfind("root:", 0) == 0) {
            auto e = spectrum_entry(path, sp);
            std::cout << e.value.str() << "\t[" << join(e.period) << "]\t" << e.value.decimal(o.precision) << "\n";
            return;
        }
        auto p = limit_point(LRWord::parse(path), sp);
        std::cout << p.value.str() << "\t" << to_string(p.expansion) << "\t" << p.value.decimal(o.precision) << "\n";
    });

    auto* spec = cmd->add_subcommand("spectrum", "figure layout: every node to --depth with both limits");
    sp_opt(spec);
    spec->callback([&o] {
        auto sp = parse_spectrum(spectrum);
        auto row = [&](const std::string& label) {
            auto e = spectrum_entry(label, sp);
            std::cout << label << "\t" << e.value.str() << "\t[" << join(e.period) << "]\t" << e.value.decimal(o.precision)
                      << "\n";
        };
        row("root:2");
        row("root:1");
        for_each_node(o.depth, [&](const MarkoffNode& n) {
            row(n.path + "L");
            row(n.path + "R");
        });
    });

    auto* cov = cmd->add_subcommand("cover", "intervals I_g nested to --depth, CSV");
    sp_opt(cov);
    cov->callback([&o] {
        auto sp = parse_spectrum(spectrum);
        check_cover(o.depth, sp);
        std::cout << cover_csv(o.depth, sp, o.precision);
    });

    auto* gap = cmd->add_subcommand("gapsum", "certified sum of gap lengths over triples with g <= --bound");
    gap->callback([&o] {
        auto g = gap_sum_bound(parse_bound(o.bound), std::max(o.precision, 20u));
        std::cout << "terms\t" << g.terms << "\nmax_g\t" << g.max_g << "\nlower\t" << g.sum.str_lo() << "\nupper\t"
                  << g.sum.str_hi() << "\n";
    });

    auto* cert = cmd->add_subcommand("certificate", "exact |I_g| < 3|J_g| for every node to --depth");
    cert->callback([&o] {
        auto m = measure_certificate(o.depth);
        auto a = affine_map_check(o.depth);
        std::cout << "measure\t" << m.nodes << " nodes\naffine\t" << a.endpoints << " endpoints\n";
    });
}

void census_cmd(CLI::App& app, Options& o) {
    auto* cmd = app.add_subcommand("census", "Markoff numbers below --bound, Zagier deviations, tables");
    static bool zagier = false, list = false, unique = false;
    static long kmax = -1, step = 1, table = 0;
    cmd->add_flag("--zagier", zagier, "deviation of M(bound) from C (log n)^2 and C (log 3n)^2");
    cmd->add_flag("--list", list, "print the numbers themselves");
    cmd->add_flag("--unique", unique, "check that no number is the maximum of two triples");
    cmd->add_option("--kmax", kmax, "CSV k,M,dev_logn,dev_log3n for n = 10^k, k = 0..kmax");
    cmd->add_option("--step", step, "k step for --kmax")->check(CLI::PositiveNumber);
    cmd->add_option("--table", table, "the smallest N numbers with r, s, w, v")->check(CLI::PositiveNumber);
    cmd->callback([&o] {
        unsigned th = thread_count(o);
        if (table > 0) {
            std::cout << reformat(table_tsv(table_gen(size_t(table))), o.format);
            return;
        }
        if (kmax >= 0) {
            std::cout << deviation_csv(zagier_table(census_counts(kmax, th), step, int(o.precision)));
            return;
        }
        Integer bound = parse_bound(o.bound);
        if (unique) {
            auto u = uniqueness_check(bound, th);
            std::cout << "numbers\t" << u.maxima << "\nduplicates\t" << u.duplicates.size() << "\n";
            if (!u.duplicates.empty()) fail(errc::certificate_failure, "duplicate maximum " + u.duplicates.front().get_str());
            return;
        }
        if (list) {
            for (const auto& m : enumerate_markoff(bound, th)) std::cout << m << "\n";
            return;
        }
        // M(bound) without storing the numbers whenever the bound is a power of ten
        long k = decimal_exponent(bound);
        uint64_t M = k >= 0 ? census_counts(k, th).M[k] : enumerate_markoff(bound, th).size();
        if (!zagier) {
            std::cout << M << "\n";
            return;
        }
        auto d = zagier_deviation_at(bound, M, k, int(o.precision));
        if (o.format == "csv")
            std::cout << deviation_csv({d});
        else
            std::cout << "M\t" << M << "\ndev_logn\t" << d.dev_logn << "\ndev_log3n\t" << d.dev_log3n << "\n";
    });
}

// identity suites across modules; any violation surfaces as an error with exit status 1
void verify_cmd(CLI::App& app, Options& o) {
    auto* cmd = app.add_subcommand("verify", "run the identity suites to --depth");
    cmd->callback([&o] {
        size_t nodes = 0;
        for_each_node(o.depth, [&](const MarkoffNode& n) {
            auto bad = check_node(n);
            if (!bad.empty()) fail(errc::identity_violation, n.path + ": " + bad.front());
            require(delta_bounds(n).ok(), errc::identity_violation, "delta bounds at " + n.path);
            require(append8_suite(square_cf_of_node(n)).size() == 8, errc::identity_violation, "append8 at " + n.path);
            ++nodes;
        });
        std::cout << "tree\t" << nodes << " nodes\n";
        size_t les = 0;
        for (size_t len = 0; len <= 5; ++len) {
            Digits x(len, Integer(1));
            while (true) {
                identity_sweep(x, Integer(long(len)) - 2);
                ++les;
                size_t p = 0;
                while (p < len && x[p] == 5) x[p++] = 1;
                if (p == len) break;
                x[p] += 1;
            }
        }
        std::cout << "t-continuants\t" << les << " length encodings\n";
        int d = std::min(o.depth, 10);
        std::cout << "measure\t" << measure_certificate(d).nodes << " nodes\n";
        std::cout << "affine\t" << affine_map_check(d).endpoints << " endpoints\n";
        for (auto sp : {Spectrum::R, Spectrum::T}) check_cover(std::min(d, 8), sp);
        std::cout << "covers\tok\n";
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markoff triples, their continued fractions and spectra"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--precision", o.precision, "decimal places in decimal output")->check(CLI::Range(1u, 10000u));
    app.add_option("--depth", o.depth, "tree depth")->check(CLI::Range(0, 40));
    app.add_option("--bound", o.bound, "upper bound, e.g. 1000, 1e100 or 10^300");
    app.add_option("--format", o.format, "text, tsv or csv")->check(CLI::IsMember({"text", "tsv", "csv"}));
    app.add_option("--threads", o.threads, "worker threads, 0 for all cores");
    tree_cmd(app, o);
    frobenius_cmd(app, o);
    tsing_cmd(app, o);
    cantor_cmd(app, o);
    census_cmd(app, o);
    verify_cmd(app, o);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const markoff::error& e) {
        std::cerr << "markoff: " << e.what() << "\n";
        bool verification = e.code() == errc::identity_violation || e.code() == errc::certificate_failure;
        return verification ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "markoff: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
