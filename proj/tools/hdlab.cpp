// hdlab -- construct group / matrix-multiplication / algebra hypermatrices,
// evaluate the combinatorial hyperdeterminant, and verify the factorization
// theorems. JSON reports on stdout, human summary on stderr.
// Exit codes: 0 pass, 1 fail, 2 refused (budget, validation, malformed input).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include <hdlab/acceptance.hpp>
#include <hdlab/algebra_factor.hpp>
#include <hdlab/group_checks.hpp>
#include <hdlab/io.hpp>
#include <hdlab/report.hpp>
#include <hdlab/young.hpp>

namespace {

using namespace hdlab;

struct GlobalOpts {
    uint64_t budget = 1'000'000'000;
    int threads = 0;  // 0: HDLAB_THREADS env or hardware
    uint64_t seed = 0xC0FFEEu;
};

HyperdetOptions det_options(const GlobalOpts& g, Strategy s = Strategy::fixed_first) {
    return HyperdetOptions{.strategy = s, .budget = g.budget, .threads = g.threads};
}

FiniteGroup resolve_group(const std::string& spec) {
    try {
        return builtin_group(spec);
    } catch (const std::invalid_argument&) {
        return read_group_file(spec);
    }
}

IrrepCatalog resolve_irreps(const FiniteGroup& g, const std::string& irreps_file) {
    if (irreps_file.empty()) return builtin_irreps(g);
    auto cat = read_irrep_file(irreps_file, g);
    auto v = validate_catalog(g, cat);
    if (!v.pass()) throw std::invalid_argument("irrep file failed validation (homomorphism/unitarity/completeness)");
    return cat;
}

AssocAlgebra resolve_algebra(const std::string& spec) {
    try {
        return builtin_algebra(spec);
    } catch (const std::invalid_argument&) {
        return read_algebra_file(spec);
    }
}

Strategy parse_strategy(const std::string& s) {
    if (s == "brute") return Strategy::brute;
    if (s == "fixed") return Strategy::fixed_first;
    if (s == "pruned") return Strategy::pruned;
    throw CLI::ValidationError("--strategy must be brute, fixed or pruned");
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_guarded(const std::string& command, const std::function<int()>& body) {
    try {
        return body();
    } catch (const BudgetExceeded& e) {
        Json j;
        j["estimate"] = e.estimate;
        j["budget"] = e.budget;
        return emit_report(command, Status::refused, j, 0.0);
    } catch (const ParseError& e) {
        Json j;
        j["error"] = e.what();
        return emit_report(command, Status::refused, j, 0.0);
    } catch (const std::exception& e) {
        Json j;
        j["error"] = e.what();
        return emit_report(command, Status::refused, j, 0.0);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hdlab: combinatorial hyperdeterminants of group, matrix-multiplication and algebra tensors"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--budget", g.budget, "enumerated-tuple guard (default 1e9)");
    app.add_option("--threads", g.threads, "worker threads (default: HDLAB_THREADS or hardware)");
    app.add_option("--seed", g.seed, "RNG seed for randomized checks");

    // hyperdet
    std::string hd_strategy = "fixed", hd_input;
    auto* hd = app.add_subcommand("hyperdet", "evaluate det_d of a tensor file");
    hd->add_option("--strategy", hd_strategy, "brute | fixed | pruned")->capture_default_str();
    hd->add_option("--input", hd_input, "tensor file")->required();

    // group-tensor
    std::string gt_group, gt_output;
    int gt_d = 2;
    bool gt_allow_odd = false;
    auto* gt = app.add_subcommand("group-tensor", "write C^G(x) as a poly tensor file");
    gt->add_option("--group", gt_group, "builtin name or table file")->required();
    gt->add_option("--d", gt_d, "tensor order (even)")->required();
    gt->add_option("--output", gt_output, "output path")->required();
    gt->add_flag("--allow-odd", gt_allow_odd, "permit odd d (det_d is then trivially zero)");

    // verify-factorization
    std::string vf_group, vf_mode = "symbolic", vf_irreps;
    int vf_d = 2, vf_trials = 5;
    double vf_tol = 1e-6;
    auto* vf = app.add_subcommand("verify-factorization", "Theorem 1 / Frobenius factorization");
    vf->add_option("--group", vf_group)->required();
    vf->add_option("--d", vf_d)->required();
    vf->add_option("--mode", vf_mode, "symbolic | pit")->capture_default_str();
    vf->add_option("--irreps", vf_irreps, "irrep catalog file (custom groups)");
    vf->add_option("--trials", vf_trials)->capture_default_str();
    vf->add_option("--tol", vf_tol, "relative tolerance (pit)")->capture_default_str();

    // verify-block-diag
    std::string vb_group, vb_irreps;
    int vb_d = 4, vb_trials = 3;
    double vb_tol = 1e-9;
    auto* vb = app.add_subcommand("verify-block-diag", "Theorem 3 block diagonalization");
    vb->add_option("--group", vb_group)->required();
    vb->add_option("--d", vb_d)->capture_default_str();
    vb->add_option("--irreps", vb_irreps);
    vb->add_option("--trials", vb_trials)->capture_default_str();
    vb->add_option("--tol", vb_tol)->capture_default_str();

    // verify-mmt
    int vm_n = 2, vm_d = 4;
    auto* vm = app.add_subcommand("verify-mmt", "Theorem 2 hook-product formula");
    vm->add_option("--n", vm_n)->required();
    vm->add_option("--d", vm_d)->required();

    // verify-circulant
    int vc_n = 3, vc_d = 4, vc_trials = 5;
    double vc_tol = 1e-6;
    auto* vc = app.add_subcommand("verify-circulant", "circulant hyperdeterminant example");
    vc->add_option("--n", vc_n)->required();
    vc->add_option("--d", vc_d)->required();
    vc->add_option("--trials", vc_trials)->capture_default_str();
    vc->add_option("--tol", vc_tol)->capture_default_str();

    // verify-sign-lemma
    std::string vs_group, vs_irreps;
    auto* vs = app.add_subcommand("verify-sign-lemma", "det(U)^2 sign lemma and Ubar = RUC");
    vs->add_option("--group", vs_group)->required();
    vs->add_option("--irreps", vs_irreps);

    // radical
    std::string rad_algebra;
    auto* rad_cmd = app.add_subcommand("radical", "Jacobson radical and filtration");
    rad_cmd->add_option("--algebra", rad_algebra, "builtin name or structure-constant file")->required();

    // classify
    std::string cl_algebra;
    int cl_d = 4;
    auto* cl = app.add_subcommand("classify", "semisimplicity vs det_d vanishing");
    cl->add_option("--algebra", cl_algebra)->required();
    cl->add_option("--d", cl_d)->capture_default_str();

    // verify-algebra-factorization
    std::string va_algebra;
    int va_d = 4, va_trials = 3;
    auto* va = app.add_subcommand("verify-algebra-factorization",
                                  "semisimple factorization through a catalog Wedderburn isomorphism");
    va->add_option("--algebra", va_algebra, "cxc | mat2 | cz2 | cz4 | cq8")->required();
    va->add_option("--d", va_d)->capture_default_str();
    va->add_option("--trials", va_trials)->capture_default_str();

    // selftest
    auto* st = app.add_subcommand("selftest", "run the full acceptance suite");

    CLI11_PARSE(app, argc, argv);
    auto t0 = std::chrono::steady_clock::now();

    if (hd->parsed()) {
        return run_guarded("hyperdet", [&] {
            auto any = read_tensor_file(hd_input);
            Strategy strat = parse_strategy(hd_strategy);
            return std::visit(
                [&](const auto& tensor) {
                    if (tensor.order() % 2 == 1)
                        std::cerr << "warning: odd order d=" << tensor.order()
                                  << ", det_d vanishes identically" << std::endl;
                    auto res = hyperdet(tensor, det_options(g, strat));
                    using R = std::decay_t<decltype(res.value)>;
                    Json j;
                    j["input"] = hd_input;
                    j["strategy"] = strategy_name(res.strategy);
                    j["value"] = ring_traits<R>::to_string(res.value);
                    j["tuples"] = res.tuples;
                    return emit_report("hyperdet", Status::pass, j, ms_since(t0));
                },
                any);
        });
    }

    if (gt->parsed()) {
        return run_guarded("group-tensor", [&] {
            auto grp = resolve_group(gt_group);
            auto tensor = group_tensor(grp, gt_d, gt_allow_odd);
            std::ofstream out(gt_output);
            if (!out) throw std::runtime_error("cannot write '" + gt_output + "'");
            write_tensor_file(out, tensor, RingTag::poly, grp.order());
            Json j;
            j["group"] = grp.name();
            j["d"] = gt_d;
            j["side"] = grp.order();
            j["vars"] = grp.order();
            j["output"] = gt_output;
            return emit_report("group-tensor", Status::pass, j, ms_since(t0));
        });
    }

    if (vf->parsed()) {
        return run_guarded("verify-factorization", [&] {
            auto grp = resolve_group(vf_group);
            auto cat = resolve_irreps(grp, vf_irreps);
            FactorizationMode mode =
                (vf_mode == "symbolic") ? FactorizationMode::symbolic : FactorizationMode::pit;
            auto rep = factorization_check(grp, cat, vf_d, mode, det_options(g), vf_trials, vf_tol, g.seed);
            Json j;
            j["group"] = grp.name();
            j["d"] = vf_d;
            j["mode"] = vf_mode;
            j["h_constant"] = rep.h_constant.to_string();
            j["sign"] = rep.realized_sign > 0 ? "+" : (rep.realized_sign < 0 ? "-" : "?");
            j["max_rel_dev"] = rep.max_rel_dev;
            j["tuples"] = rep.tuples;
            if (!rep.note.empty()) j["note"] = rep.note;
            return emit_report("verify-factorization", rep.pass ? Status::pass : Status::fail, j, ms_since(t0));
        });
    }

    if (vb->parsed()) {
        return run_guarded("verify-block-diag", [&] {
            auto grp = resolve_group(vb_group);
            auto cat = resolve_irreps(grp, vb_irreps);
            auto rep = block_diagonalize_check(grp, cat, vb_d, vb_trials, vb_tol, g.seed);
            Json j;
            j["group"] = grp.name();
            j["d"] = vb_d;
            j["trials"] = rep.trials;
            j["tol"] = rep.tol;
            j["max_dev"] = rep.max_dev;
            return emit_report("verify-block-diag", rep.pass ? Status::pass : Status::fail, j, ms_since(t0));
        });
    }

    if (vm->parsed()) {
        return run_guarded("verify-mmt", [&] {
            auto rep = mmt_verify(vm_n, vm_d, det_options(g, Strategy::pruned));
            Json j;
            j["n"] = vm_n;
            j["d"] = vm_d;
            j["formula"] = rep.formula.get_str();
            j["enumerated"] = rep.enumerated.abs().to_string();
            j["sign"] = rep.realized_sign < 0 ? "-" : "+";
            j["predicted_sign"] = rep.predicted_sign < 0 ? "-" : "+";
            j["tuples"] = rep.tuples;
            return emit_report("verify-mmt", rep.pass ? Status::pass : Status::fail, j, ms_since(t0));
        });
    }

    if (vc->parsed()) {
        return run_guarded("verify-circulant", [&] {
            auto rep = circulant_check(vc_n, vc_d, vc_trials, vc_tol, det_options(g), g.seed);
            Json j;
            j["n"] = vc_n;
            j["d"] = vc_d;
            j["prefactor"] = rep.prefactor.get_str();
            j["sign"] = rep.realized_sign < 0 ? "-" : "+";
            j["max_rel_dev"] = rep.max_rel_dev;
            j["tuples"] = rep.tuples;
            return emit_report("verify-circulant", rep.pass ? Status::pass : Status::fail, j, ms_since(t0));
        });
    }

    if (vs->parsed()) {
        return run_guarded("verify-sign-lemma", [&] {
            auto grp = resolve_group(vs_group);
            auto cat = resolve_irreps(grp, vs_irreps);
            auto rep = sign_lemma_check(grp, cat);
            Json j;
            j["group"] = grp.name();
            j["predicted_sign"] = rep.predicted_sign > 0 ? "+" : "-";
            j["det_u_squared"] = {rep.det_u_squared.real(), rep.det_u_squared.imag()};
            j["det_dev"] = rep.det_dev;
            j["decomposition_dev"] = rep.decomposition_dev;
            j["row_perm_sign"] = rep.row_perm_sign;
            j["col_perm_sign"] = rep.col_perm_sign;
            j["exact_checked"] = rep.has_exact;
            return emit_report("verify-sign-lemma", rep.pass ? Status::pass : Status::fail, j, ms_since(t0));
        });
    }

    if (rad_cmd->parsed()) {
        return run_guarded("radical", [&] {
            auto alg = resolve_algebra(rad_algebra);
            auto rad = jacobson_radical(alg);
            Json j;
            j["algebra"] = alg.name();
            j["dim"] = alg.dim();
            j["radical_dim"] = rad.radical_basis.size();
            j["nilpotency_index"] = rad.nilpotency_index;
            j["filtration_dims"] = rad.filtration_dims;
            j["nu"] = rad.nu;
            j["semisimple"] = rad.semisimple();
            return emit_report("radical", Status::pass, j, ms_since(t0));
        });
    }

    if (cl->parsed()) {
        return run_guarded("classify", [&] {
            auto alg = resolve_algebra(cl_algebra);
            auto rep = semisimplicity_hyperdet_test(alg, cl_d, det_options(g), g.seed);
            Json j;
            j["algebra"] = alg.name();
            j["d"] = cl_d;
            j["semisimple"] = rep.semisimple;
            j["det_vanishes"] = rep.det_vanishes;
            j["symbolic"] = rep.symbolic;
            j["tuples"] = rep.tuples;
            if (!rep.note.empty()) j["note"] = rep.note;
            return emit_report("classify", rep.pass ? Status::pass : Status::fail, j, ms_since(t0));
        });
    }

    if (va->parsed()) {
        return run_guarded("verify-algebra-factorization", [&] {
            auto alg = resolve_algebra(va_algebra);
            auto iso = catalog_wedderburn(va_algebra);
            auto rep = semisimple_factorization_check(alg, iso, va_d, det_options(g), va_trials, g.seed);
            Json j;
            j["algebra"] = alg.name();
            j["d"] = va_d;
            j["phi_is_algebra_map"] = rep.phi_is_algebra_map;
            j["conjugation_identity"] = rep.conjugation_identity;
            j["h_constant"] = rep.h_constant.to_string();
            j["pit_trials"] = rep.pit_trials;
            j["pit_pass"] = rep.pit_pass;
            j["pit_skipped_budget"] = rep.pit_skipped_budget;
            return emit_report("verify-algebra-factorization", rep.pass() ? Status::pass : Status::fail, j,
                               ms_since(t0));
        });
    }

    if (st->parsed()) {
        return run_guarded("selftest", [&] {
            auto results = run_acceptance(g.threads, std::cerr);
            Json arr = Json::array();
            for (const auto& r : results) {
                Json c;
                c["id"] = r.id;
                c["label"] = r.label;
                c["pass"] = r.pass;
                c["millis"] = r.millis;
                arr.push_back(c);
            }
            Json j;
            j["criteria"] = arr;
            bool all = acceptance_all_pass(results);
            j["all_pass"] = all;
            return emit_report("selftest", all ? Status::pass : Status::fail, j, ms_since(t0));
        });
    }

    return 2;
}
