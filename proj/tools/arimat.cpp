#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "arimat/error.hpp"
#include "arimat/facering.hpp"
#include "arimat/io.hpp"
#include "arimat/verify.hpp"

using namespace arimat;

namespace {

struct Options {
    std::string file;
    std::string output;
    std::string format = "json";
    bool all = false;
    bool dual = false;
    bool corrupt_cover = false;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw input_error("cannot write '" + opt.output + "'");
    out << text;
}

std::string subset_braces(Subset a) {
    std::string out = "{";
    bool first = true;
    for (int b : subset_members(a)) {
        if (!first) out += ",";
        out += std::to_string(b + 1);
        first = false;
    }
    return out + "}";
}

int cmd_info(const Options& opt) {
    Realization r = read_realization_file(opt.file);
    std::ostringstream os;
    os << "d(∅)=" << r.d_empty() << " m(∅)=" << r.empty_structure().multiplicity()
       << " r=" << matroid_rank(r) << " essential=" << (is_essential(r) ? "true" : "false")
       << "\n";
    if (opt.all)
        for (Subset a : all_subsets(r.size())) {
            SubsetProfile p = profile(r, a);
            os << "A=" << subset_braces(a) << " d=" << p.d << " cork=" << p.cork
               << " m=" << p.multiplicity
               << " independent=" << (p.independent ? "true" : "false") << "\n";
        }
    emit(opt, os.str());
    return 0;
}

int cmd_tutte(const Options& opt) {
    Realization r = read_realization_file(opt.file);
    BivariatePoly t = arithmetic_tutte(r);
    if (!opt.dual) {
        emit(opt, t.to_string() + "\n");
        return 0;
    }
    BivariatePoly swapped = t.swap_xy();
    if (r.empty_structure().torsion.empty()) {
        BivariatePoly direct = arithmetic_tutte(dual_realization(modulo_initial_torsion(r)));
        if (direct != swapped) {
            std::cerr << "dual cross-check failed: " << direct.to_string(true) << " vs "
                      << swapped.to_string(true) << "\n";
            return 1;
        }
    }
    emit(opt, swapped.to_string(true) + "\n");
    return 0;
}

int cmd_poset(const Options& opt) {
    Realization r = read_realization_file(opt.file);
    TorsionPoset p = build_poset(r);
    emit(opt, opt.format == "dot" ? poset_to_dot(p) : poset_to_json(p));
    return 0;
}

int cmd_hilbert(const Options& opt) {
    Realization r = read_realization_file(opt.file);
    if (!opt.dual) {
        emit(opt, face_module_hilbert(r).to_string() + "\n");
        return 0;
    }
    const int rstar = r.size() - matroid_rank(r);
    LaurentPoly at_inv = substitute_xy(arithmetic_tutte(r), LaurentPoly::constant(Int(1)),
                                       LaurentPoly::monomial(-1));
    HilbertSeries hs = normalize_series(LaurentPoly::monomial(rstar) * at_inv, rstar);
    if (r.empty_structure().torsion.empty()) {
        HilbertSeries direct = face_module_hilbert(dual_realization(modulo_initial_torsion(r)));
        if (direct != hs) {
            std::cerr << "dual cross-check failed: " << direct.to_string() << " vs "
                      << hs.to_string() << "\n";
            return 1;
        }
    }
    emit(opt, hs.to_string() + "\n");
    return 0;
}

int cmd_verify(const Options& opt) {
    Realization r = read_realization_file(opt.file);
    auto results = run_verification(r, VerifyOptions{opt.corrupt_cover});
    std::ostringstream os;
    bool all_pass = true;
    for (const CheckResult& res : results) {
        os << (res.pass ? "PASS " : "FAIL ") << res.name;
        if (!res.detail.empty()) os << " (" << res.detail << ")";
        os << "\n";
        all_pass = all_pass && res.pass;
    }
    emit(opt, os.str());
    return all_pass ? 0 : 1;
}

int cmd_faceideal(const Options& opt) {
    Realization r = read_realization_file(opt.file);
    TorsionPoset p = build_poset(modulo_initial_torsion(r));
    FaceIdealPresentation pres = face_ideal(p, components(p)[0]);
    std::ostringstream os;
    os << "variables:";
    for (const auto& [id, deg] : pres.variables) os << " x" << id << ":" << deg;
    os << "\n" << pres.to_string() << "\n";
    emit(opt, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of integer matroid realizations"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* c) {
        c->add_option("file", opt.file, "realization file (JSON or matrix)")->required();
        c->add_option("--output", opt.output, "write the result to a file");
        return c;
    };
    CLI::App* info = add_common(app.add_subcommand("info", "basic invariants"));
    info->add_flag("--all", opt.all, "full subset table");
    CLI::App* tutte = add_common(app.add_subcommand("tutte", "arithmetic Tutte polynomial"));
    tutte->add_flag("--dual", opt.dual, "polynomial of the dual");
    CLI::App* poset = add_common(app.add_subcommand("poset", "poset of torsions"));
    poset->add_option("--format", opt.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    CLI::App* hilbert = add_common(app.add_subcommand("hilbert", "face-module Hilbert series"));
    hilbert->add_flag("--dual", opt.dual, "series of the dual");
    CLI::App* verify = add_common(app.add_subcommand("verify", "run the identity suite"));
    verify->add_flag("--corrupt-cover", opt.corrupt_cover, "negative-control hook")
        ->group("");
    add_common(app.add_subcommand("faceideal", "face-ring presentation"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand("info")) return cmd_info(opt);
        if (app.got_subcommand("tutte")) return cmd_tutte(opt);
        if (app.got_subcommand("poset")) return cmd_poset(opt);
        if (app.got_subcommand("hilbert")) return cmd_hilbert(opt);
        if (app.got_subcommand("verify")) return cmd_verify(opt);
        if (app.got_subcommand("faceideal")) return cmd_faceideal(opt);
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
