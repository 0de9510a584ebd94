// Command-line front end: generate, check, decompose, enumerate and
// sample generator matrices of base-2 digital nets; emit point sets and
// diagnostics.
//
// Exit codes: 0 = success / property holds, 1 = property checked and
// found to fail (witness reported), 2 = usage or input-format error.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnet/characterize.hpp"
#include "dnet/digital_net.hpp"
#include "dnet/f2_random.hpp"
#include "dnet/net_check.hpp"
#include "dnet/report_json.hpp"
#include "dnet/text_io.hpp"

namespace {

using namespace dnet;

// A matrix argument is a file path, "-" for the next matrix on stdin,
// or a builtin: @I:m (identity), @J:m (anti-diagonal), @P:m (Pascal).
F2Matrix load_matrix(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        const auto colon = spec.find(':');
        if (colon == std::string::npos || colon + 1 >= spec.size())
            throw ParseError("builtin matrix must look like @I:m, @J:m or @P:m, got " + spec);
        int m = 0;
        const char* first = spec.data() + colon + 1;
        const char* last = spec.data() + spec.size();
        const auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec != std::errc{} || ptr != last)
            throw ParseError("bad builtin matrix dimension in " + spec);
        const std::string kind = spec.substr(1, colon - 1);
        if (kind == "I")
            return identity(m);
        if (kind == "J")
            return anti_diagonal(m);
        if (kind == "P")
            return pascal(m);
        throw ParseError("unknown builtin matrix kind in " + spec +
                         " (have @I, @J, @P)");
    }
    if (spec == "-")
        return read_matrix(std::cin);
    std::ifstream in(spec);
    if (!in)
        throw ParseError("cannot open matrix file: " + spec);
    return read_matrix(in);
}

std::vector<F2Matrix> load_matrices(const std::vector<std::string>& specs) {
    std::vector<F2Matrix> out;
    out.reserve(specs.size());
    for (const auto& spec : specs)
        out.push_back(load_matrix(spec));
    return out;
}

void print_rank_report(const TReport& rep, int target_t) {
    std::cout << "m: " << rep.m << "  s: " << rep.s
              << "  target t: " << target_t << '\n'
              << "strength: " << rep.strength << "  t-value: " << rep.t_value
              << '\n';
    const bool passed = rep.t_value <= target_t;
    if (!passed && rep.witness) {
        std::cout << "witness composition:";
        for (const int d : *rep.witness)
            std::cout << ' ' << d;
        std::cout << '\n';
    }
    std::cout << "verdict: " << (passed ? "PASS" : "FAIL") << '\n';
}

int cmd_check_net(const std::vector<std::string>& gen_specs, int target_t,
                  bool geometric, bool force, bool as_json) {
    const GeneratorTuple gen(load_matrices(gen_specs));
    if (!geometric) {
        const TReport rep = strength_by_rank(gen);
        if (as_json)
            std::cout << net_report_json(rep, target_t).dump(2) << '\n';
        else
            print_rank_report(rep, target_t);
        return rep.t_value <= target_t ? 0 : 1;
    }

    if (force && (gen.m() > 12 || gen.s() > 3))
        std::cerr << "warning: geometric check above the default cap may be slow\n";
    const NetPoints pts = net_points(gen);
    // The net property is monotone in t, so the smallest accepted t
    // determines the strength; the run at the target supplies the
    // witness when the target is below that.
    int strength = 0;
    GeometricReport at_target;
    at_target.passed = true;
    for (int t = 0; t <= pts.m; ++t) {
        GeometricReport r = is_net_geometric(pts, t, force);
        if (t == target_t)
            at_target = r;
        if (r.passed) {
            strength = pts.m - t;
            break;
        }
    }
    const bool passed = pts.m - strength <= target_t;
    if (as_json) {
        std::cout << geometric_report_json(pts.m, pts.s, target_t, strength,
                                           at_target)
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "oracle: geometric\n"
                  << "m: " << pts.m << "  s: " << pts.s
                  << "  target t: " << target_t << '\n'
                  << "strength: " << strength
                  << "  t-value: " << pts.m - strength << '\n';
        if (!passed && at_target.witness) {
            std::cout << "witness box: shape";
            for (const int c : at_target.witness->shape)
                std::cout << ' ' << c;
            std::cout << "  offsets";
            for (const std::uint64_t a : at_target.witness->offsets)
                std::cout << ' ' << a;
            std::cout << "  points " << at_target.witness_count << '\n';
        }
        std::cout << "verdict: " << (passed ? "PASS" : "FAIL") << '\n';
    }
    return passed ? 0 : 1;
}

int cmd_check_seq(const std::vector<std::string>& gen_specs, int target_t,
                  int depth, bool as_json) {
    std::vector<MatrixPrefix> gens;
    for (auto& mtx : load_matrices(gen_specs))
        gens.emplace_back(std::move(mtx));
    const SequencePrefixReport rep = check_sequence_prefix(gens, depth, target_t);
    if (as_json) {
        std::cout << sequence_report_json(rep, static_cast<int>(gens.size()))
                         .dump(2)
                  << '\n';
    } else {
        for (const auto& d : rep.depths) {
            std::cout << "depth " << d.depth << ": "
                      << (d.passed ? "PASS" : "FAIL") << " (strength "
                      << d.report.strength << ", t " << d.report.t_value;
            if (!d.passed && d.report.witness) {
                std::cout << ", witness";
                for (const int c : *d.report.witness)
                    std::cout << ' ' << c;
            }
            std::cout << ")\n";
        }
        if (rep.certified)
            std::cout << "summary: certified to depth " << rep.max_depth
                      << " at t=" << rep.t << '\n';
        else
            std::cout << "summary: rejected at depth "
                      << *rep.first_failing_depth << '\n';
    }
    return rep.certified ? 0 : 1;
}

int cmd_decompose(const std::vector<std::string>& gen_specs, bool as_json) {
    const std::vector<F2Matrix> mats = load_matrices(gen_specs);
    DecomposeStatus status;
    int failed_minor = 0;
    std::vector<const F2Matrix*> factors;
    std::optional<Decompose3Result> res3;
    std::optional<Decompose2Result> res2;
    if (mats.size() == 3) {
        res3 = decompose_0m3(mats[0], mats[1], mats[2]);
        status = res3->status;
        failed_minor = res3->failed_minor;
        if (res3->factors)
            factors = {&res3->factors->l1, &res3->factors->l2,
                       &res3->factors->u, &res3->factors->m_factor};
    } else if (mats.size() == 2) {
        res2 = decompose_0m2(mats[0], mats[1]);
        status = res2->status;
        failed_minor = res2->failed_minor;
        if (res2->factors)
            factors = {&res2->factors->l, &res2->factors->u,
                       &res2->factors->m_factor};
    } else {
        throw ParseError("decompose needs exactly 2 or 3 matrices");
    }

    const bool ok = status == DecomposeStatus::Ok;
    if (as_json) {
        nlohmann::json j =
            net_report_json(strength_by_rank(GeneratorTuple(mats)), 0);
        j["reason"] = to_string(status);
        if (status == DecomposeStatus::NotLU)
            j["minor"] = failed_minor;
        std::cout << j.dump(2) << '\n';
    } else if (ok) {
        bool first = true;
        for (const F2Matrix* f : factors) {
            if (!first)
                std::cout << '\n';
            first = false;
            write_matrix(std::cout, *f);
        }
    } else {
        std::cerr << "not a (0,m," << mats.size() << ")-net: "
                  << to_string(status);
        if (status == DecomposeStatus::NotLU)
            std::cerr << " (leading minor " << failed_minor << " singular)";
        std::cerr << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_gen_matrix(const std::string& kind, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    F2Matrix a = [&] {
        if (kind == "identity")
            return identity(m);
        if (kind == "pascal")
            return pascal(m);
        if (kind == "antidiag")
            return anti_diagonal(m);
        if (kind == "random-lower")
            return random_lower(m, rng);
        if (kind == "random-upper")
            return random_upper(m, rng);
        return random_nonsingular(m, rng); // random-gl
    }();
    write_matrix(std::cout, a);
    return 0;
}

int cmd_points(const std::vector<std::string>& gen_specs,
               const std::string& format) {
    const GeneratorTuple gen(load_matrices(gen_specs));
    const NetPoints pts = net_points(gen);
    const PointFormat fmt = format == "frac"  ? PointFormat::Frac
                            : format == "dec" ? PointFormat::Dec
                                              : PointFormat::Bin;
    write_points(std::cout, pts, fmt);
    return 0;
}

int cmd_enumerate(int m) {
    Enumerate0m3 family(m);
    while (auto triple = family.next()) {
        for (const F2Matrix& a : triple->matrices())
            write_matrix(std::cout, a);
        std::cout << '\n'; // one blank line closes each block
    }
    return 0;
}

int cmd_sample(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const GeneratorTuple triple = random_0m3(m, rng);
    for (const F2Matrix& a : triple.matrices())
        write_matrix(std::cout, a);
    return 0;
}

int cmd_discrepancy(const std::vector<std::string>& gen_specs,
                    const std::string& points_file) {
    if (gen_specs.empty() == points_file.empty())
        throw ParseError("discrepancy needs either generator matrices or --points, not both");
    NetPoints pts = [&] {
        if (!points_file.empty()) {
            std::ifstream in(points_file);
            if (!in)
                throw ParseError("cannot open points file: " + points_file);
            return read_points(in);
        }
        return net_points(GeneratorTuple(load_matrices(gen_specs)));
    }();
    const double d2 = l2_star_discrepancy_squared(pts);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", d2);
    std::cout << buf << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"base-2 digital net generator-matrix toolkit"};
    app.require_subcommand(1);

    // gen-matrix
    std::string gm_kind;
    int gm_m = 0;
    std::uint64_t gm_seed = 0;
    auto* gen_matrix = app.add_subcommand("gen-matrix", "emit a structural or random matrix");
    gen_matrix
        ->add_option("kind", gm_kind, "identity|pascal|antidiag|random-lower|random-upper|random-gl")
        ->required()
        ->check(CLI::IsMember({"identity", "pascal", "antidiag", "random-lower",
                               "random-upper", "random-gl"}));
    gen_matrix->add_option("--m", gm_m, "dimension")->required()->check(CLI::Range(1, 64));
    gen_matrix->add_option("--seed", gm_seed, "RNG seed (random kinds)");

    // points
    std::vector<std::string> pt_gens;
    std::string pt_format = "frac";
    auto* points = app.add_subcommand("points", "emit the full point set of a generator tuple");
    points->add_option("gens", pt_gens, "generator matrices")->required()->expected(-1);
    points->add_option("--format", pt_format, "frac|dec|bin")
        ->check(CLI::IsMember({"frac", "dec", "bin"}));

    // check-net
    std::vector<std::string> cn_gens;
    int cn_t = 0;
    bool cn_geometric = false, cn_force = false, cn_json = false;
    auto* check_net = app.add_subcommand("check-net", "decide the (t,m,s)-net property");
    check_net->add_option("gens", cn_gens, "generator matrices")->required()->expected(-1);
    check_net->add_option("--t", cn_t, "target t")->check(CLI::NonNegativeNumber);
    check_net->add_flag("--geometric", cn_geometric,
                        "count points in every elementary interval instead of the rank test");
    check_net->add_flag("--force", cn_force, "lift the size cap of the geometric check");
    check_net->add_flag("--json", cn_json, "JSON report");

    // check-seq
    std::vector<std::string> cs_gens;
    int cs_t = 0, cs_depth = 0;
    bool cs_json = false;
    auto* check_seq = app.add_subcommand("check-seq", "certify the (t,s)-sequence property per depth");
    check_seq->add_option("gens", cs_gens, "generator matrix windows")->required()->expected(-1);
    check_seq->add_option("--t", cs_t, "target t")->check(CLI::NonNegativeNumber);
    check_seq->add_option("--depth", cs_depth, "max depth to certify")
        ->required()
        ->check(CLI::PositiveNumber);
    check_seq->add_flag("--json", cs_json, "JSON report");

    // decompose
    std::vector<std::string> dc_gens;
    bool dc_json = false;
    auto* decompose = app.add_subcommand(
        "decompose", "factor a pair/triple or certify it is not a 0-net");
    decompose->add_option("gens", dc_gens, "2 or 3 generator matrices")->required()->expected(-1);
    decompose->add_flag("--json", dc_json, "JSON verdict instead of factor matrices");

    // enumerate
    int en_m = 0;
    auto* enumerate = app.add_subcommand("enumerate", "stream every (0,m,3) triple (m <= 3)");
    enumerate->add_option("--m", en_m, "dimension")->required()->check(CLI::Range(1, 3));

    // sample
    int sm_m = 0;
    std::uint64_t sm_seed = 0;
    auto* sample = app.add_subcommand("sample", "draw a uniform (0,m,3) triple");
    sample->add_option("--m", sm_m, "dimension")->required()->check(CLI::Range(1, 64));
    sample->add_option("--seed", sm_seed, "RNG seed");

    // discrepancy
    std::vector<std::string> ds_gens;
    std::string ds_points;
    auto* discrepancy = app.add_subcommand(
        "discrepancy", "exact squared L2 star discrepancy of a point set");
    discrepancy->add_option("gens", ds_gens, "generator matrices");
    discrepancy->add_option("--points", ds_points, "point file in frac format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen_matrix)
            return cmd_gen_matrix(gm_kind, gm_m, gm_seed);
        if (*points)
            return cmd_points(pt_gens, pt_format);
        if (*check_net)
            return cmd_check_net(cn_gens, cn_t, cn_geometric, cn_force, cn_json);
        if (*check_seq)
            return cmd_check_seq(cs_gens, cs_t, cs_depth, cs_json);
        if (*decompose)
            return cmd_decompose(dc_gens, dc_json);
        if (*enumerate)
            return cmd_enumerate(en_m);
        if (*sample)
            return cmd_sample(sm_m, sm_seed);
        if (*discrepancy)
            return cmd_discrepancy(ds_gens, ds_points);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
