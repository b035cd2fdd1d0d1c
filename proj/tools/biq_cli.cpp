// Command-line front end: verify, complete, enumerate and classify finite
// biquandles, and compute homomorphism counting invariants of virtual knots.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "biq/biq.hpp"

namespace {

void print_matrix_records(const std::vector<biq::BiqMatrix>& list) {
    for (size_t i = 0; i < list.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << biq::format_biq(list[i]);
    }
}

int run(int argc, char** argv) {
    CLI::App app{"finite biquandle toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text"}));

    std::string check_file;
    auto* cmd_check = app.add_subcommand("check", "verify the biquandle axioms for a matrix");
    cmd_check->add_option("file", check_file, "matrix in .biq format")->required();

    std::string complete_file;
    long long complete_limit = -1;
    int complete_jobs = 1;
    auto* cmd_complete = app.add_subcommand("complete", "list completions of a pattern");
    cmd_complete->add_option("file", complete_file, "pattern in .biq format (0 = blank)")
        ->required();
    cmd_complete->add_option("--limit", complete_limit, "stop after this many completions");
    cmd_complete->add_option("--jobs", complete_jobs, "worker threads")->check(CLI::PositiveNumber);

    int enum_order = 0;
    bool enum_connected = false, enum_non_qbiq = false;
    int enum_jobs = 1;
    auto* cmd_enum = app.add_subcommand("enumerate", "list all biquandles of a given order");
    cmd_enum->add_option("--order", enum_order, "order to enumerate")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_enum->add_flag("--connected", enum_connected, "keep connected biquandles only");
    cmd_enum->add_flag("--non-qbiq", enum_non_qbiq, "drop quandle biquandles");
    cmd_enum->add_option("--jobs", enum_jobs, "worker threads")->check(CLI::PositiveNumber);

    int classify_order = 0;
    std::string classify_mod;
    int classify_jobs = 1;
    auto* cmd_classify = app.add_subcommand("classify", "enumerate and reduce to representatives");
    cmd_classify->add_option("--order", classify_order, "order to classify")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_classify->add_option("--mod", classify_mod, "equivalence to reduce by")
        ->required()
        ->check(CLI::IsMember({"iso", "iso-flip-obverse"}));
    cmd_classify->add_option("--jobs", classify_jobs, "worker threads")
        ->check(CLI::PositiveNumber);

    std::string obverse_file;
    auto* cmd_obverse = app.add_subcommand("obverse", "print the obverse of a matrix");
    cmd_obverse->add_option("file", obverse_file, "matrix in .biq format")->required();

    std::string flip_file;
    auto* cmd_flip = app.add_subcommand("flip", "print the flip of a matrix");
    cmd_flip->add_option("file", flip_file, "matrix in .biq format")->required();

    std::string hom_source, hom_target;
    bool hom_list = false;
    auto* cmd_hom = app.add_subcommand("hom", "count or list homomorphisms into a target");
    cmd_hom->add_option("--source", hom_source, "presentation (.pv, .pres, or .biq pattern)")
        ->required();
    cmd_hom->add_option("--target", hom_target, "target matrix in .biq format")->required();
    cmd_hom->add_flag("--list", hom_list, "print the maps instead of the count");

    std::string iso_a, iso_b;
    auto* cmd_iso = app.add_subcommand("iso", "list isomorphisms between two matrices");
    cmd_iso->add_option("a", iso_a, "first matrix")->required();
    cmd_iso->add_option("b", iso_b, "second matrix")->required();

    std::string aut_file;
    auto* cmd_aut = app.add_subcommand("aut", "automorphism group of a matrix");
    cmd_aut->add_option("file", aut_file, "matrix in .biq format")->required();

    std::string inv_knot, inv_target;
    auto* cmd_inv = app.add_subcommand("invariant", "counting invariant of a knot vector");
    cmd_inv->add_option("--knot", inv_knot, "presentation vector in .pv format")->required();
    cmd_inv->add_option("--target", inv_target, "target matrix in .biq format")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (cmd_check->parsed()) {
        auto report = biq::biqtest_report(biq::load_biq_matrix(check_file));
        if (report.ok)
            std::cout << "biquandle\n";
        else
            std::cout << "not a biquandle (first failing axiom: " << report.failed_axiom
                      << ")\n";
        return 0;
    }
    if (cmd_complete->parsed()) {
        biq::BiqlistOptions opt;
        opt.limit = complete_limit;
        opt.jobs = complete_jobs;
        print_matrix_records(biq::biqlist(biq::load_biq_pattern(complete_file), opt));
        return 0;
    }
    if (cmd_enum->parsed()) {
        biq::BiqlistOptions opt;
        opt.jobs = enum_jobs;
        auto list = biq::enumerate_biquandles(enum_order, opt);
        std::vector<biq::BiqMatrix> kept;
        for (auto& B : list) {
            if (enum_connected && !biq::is_connected(B)) continue;
            if (enum_non_qbiq && biq::is_qbiq(B)) continue;
            kept.push_back(std::move(B));
        }
        print_matrix_records(kept);
        return 0;
    }
    if (cmd_classify->parsed()) {
        biq::BiqlistOptions opt;
        opt.jobs = classify_jobs;
        auto list = biq::enumerate_biquandles(classify_order, opt);
        auto mode = classify_mod == "iso" ? biq::ReduceMode::iso
                                          : biq::ReduceMode::iso_flip_obverse;
        auto reps = biq::breducelist(list, mode);
        for (size_t i = 0; i < reps.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << biq::format_biq(reps[i]);
            std::cout << "self-flip " << (biq::self_flip(reps[i]) ? "yes" : "no") << "\n";
            std::cout << "self-obverse " << (biq::self_obverse(reps[i]) ? "yes" : "no") << "\n";
            std::cout << "aut " << biq::baut(reps[i]).label.display() << "\n";
        }
        return 0;
    }
    if (cmd_obverse->parsed()) {
        std::cout << biq::format_biq(biq::obverse(biq::load_biq_matrix(obverse_file)));
        return 0;
    }
    if (cmd_flip->parsed()) {
        std::cout << biq::format_biq(biq::flip(biq::load_biq_matrix(flip_file)));
        return 0;
    }
    if (cmd_hom->parsed()) {
        auto P = biq::load_presentation(hom_source);
        auto T = biq::load_biq_matrix(hom_target);
        if (hom_list) {
            for (const auto& h : biq::bhomlist(P, T)) std::cout << biq::format_hom_map(h);
        } else {
            std::cout << biq::bhomcount(P, T) << "\n";
        }
        return 0;
    }
    if (cmd_iso->parsed()) {
        auto A = biq::load_biq_matrix(iso_a);
        auto B = biq::load_biq_matrix(iso_b);
        for (const auto& h : biq::bisolist(A, B)) std::cout << biq::format_hom_map(h);
        return 0;
    }
    if (cmd_aut->parsed()) {
        auto result = biq::baut(biq::load_biq_matrix(aut_file));
        for (const auto& h : result.automorphisms) std::cout << biq::format_hom_map(h);
        std::cout << "aut " << result.label.display() << "\n";
        return 0;
    }
    if (cmd_inv->parsed()) {
        auto pv = biq::parse_presentation_vector(biq::read_file(inv_knot));
        auto T = biq::load_biq_matrix(inv_target);
        std::cout << biq::bhomcount(pv.to_presentation(), T) << "\n";
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const biq::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
