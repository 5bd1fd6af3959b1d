#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zlam/checks.hpp"
#include "zlam/finite_ars.hpp"
#include "zlam/lambda_instance.hpp"
#include "zlam/testgen.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

zlam::TermPtr parse_or_die(const std::string& text) {
    try {
        return zlam::parse(text);
    } catch (const zlam::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read file: " << path << "\n";
        std::exit(kExitUsage);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json report_json(const zlam::SuiteReport& rep) {
    nlohmann::json j;
    j["suite"] = rep.suite;
    j["checked"] = rep.checked;
    j["violations"] = rep.violations;
    if (rep.first_violation) {
        const auto& v = *rep.first_violation;
        j["first_violation"] = {{"object", v.object},
                                {"step_target", v.step_target},
                                {"failed_leg", v.failed_leg},
                                {"detail", v.detail},
                                {"bound_exhausted", v.bound_exhausted}};
    } else {
        j["first_violation"] = nullptr;
    }
    j["params"] = rep.params;
    return j;
}

int emit_report(const zlam::SuiteReport& rep, bool as_json) {
    if (as_json) {
        std::cout << report_json(rep).dump(2) << "\n";
    } else {
        std::cout << "suite " << rep.suite << ": " << rep.checked << " checked, "
                  << rep.violations << " violations\n";
        if (rep.first_violation) {
            const auto& v = *rep.first_violation;
            std::cout << "first violation (" << v.failed_leg << "): object " << v.object;
            if (!v.step_target.empty()) std::cout << ", step target " << v.step_target;
            std::cout << "\n  " << v.detail << "\n";
        }
    }
    return rep.ok() ? kExitOk : kExitViolation;
}

void print_violation(const zlam::ars::Violation& v) {
    std::cout << "violation (" << v.failed_leg << "): object " << v.object
              << ", step target " << v.step_target << "\n  " << v.detail << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"λβ rewriting kernel: full-superdevelopments, Z-property witnesses, "
                 "and confluence checks"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    // bullet
    std::string bullet_term;
    auto* cmd_bullet = app.add_subcommand("bullet", "print the full-superdevelopment of a term");
    cmd_bullet->add_option("term", bullet_term, "λ-term")->required();

    // trace
    std::string trace_kind, trace_term, trace_to, trace_var, trace_sub;
    auto* cmd_trace = app.add_subcommand("trace", "print a witness reduction, one term per line");
    cmd_trace->add_option("kind", trace_kind, "self | z-left | z-right | rhs")
        ->required()
        ->check(CLI::IsMember({"self", "z-left", "z-right", "rhs"}));
    cmd_trace->add_option("term", trace_term, "λ-term")->required();
    cmd_trace->add_option("--to", trace_to, "step target (z-left / z-right)");
    cmd_trace->add_option("--var", trace_var, "substituted variable (rhs)");
    cmd_trace->add_option("--sub", trace_sub, "substituend term (rhs)");

    // join
    std::string join_left, join_right;
    auto* cmd_join = app.add_subcommand("join", "join two co-initial trace files");
    cmd_join->add_option("left", join_left, "trace file")->required();
    cmd_join->add_option("right", join_right, "trace file")->required();

    // check
    std::string check_suite;
    int check_max_size = 6, check_vars = 2, check_depth = 8, check_sub_size = 3,
        check_count = 100;
    uint64_t check_seed = 0;
    bool check_json = false;
    auto* cmd_check = app.add_subcommand("check", "run an exhaustive / randomized suite");
    cmd_check->add_option("suite", check_suite, "subst | self | rhs | z | angle | join")
        ->required()
        ->check(CLI::IsMember({"subst", "self", "rhs", "z", "angle", "join"}));
    cmd_check->add_option("--max-size", check_max_size, "term size bound");
    cmd_check->add_option("--vars", check_vars, "variable pool size");
    cmd_check->add_option("--depth", check_depth, "reachability bound");
    cmd_check->add_option("--seed", check_seed, "random seed");
    cmd_check->add_option("--sub-size", check_sub_size, "substituend size bound");
    cmd_check->add_option("--count", check_count, "number of random ARS instances");
    cmd_check->add_flag("--json", check_json, "machine-readable report");

    // ars
    std::string ars_file, ars_action, ars_from, ars_left, ars_right;
    int ars_depth = 8;
    auto* cmd_ars = app.add_subcommand("ars", "checks on an explicit finite ARS file");
    cmd_ars->add_option("file", ars_file, "ARS JSON file")->required();
    cmd_ars->add_option("action", ars_action, "check-z | check-angle | join")
        ->required()
        ->check(CLI::IsMember({"check-z", "check-angle", "join"}));
    cmd_ars->add_option("--from", ars_from, "peak source (join)");
    cmd_ars->add_option("--left", ars_left, "left target (join)");
    cmd_ars->add_option("--right", ars_right, "right target (join)");
    cmd_ars->add_option("--depth", ars_depth, "reachability bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_bullet) {
            std::cout << zlam::print(zlam::bullet(parse_or_die(bullet_term))) << "\n";
            return kExitOk;
        }

        if (*cmd_trace) {
            zlam::TermPtr t = parse_or_die(trace_term);
            zlam::ReductionSeq seq;
            if (trace_kind == "self") {
                seq = zlam::self_steps(t);
            } else if (trace_kind == "rhs") {
                if (trace_var.empty() || trace_sub.empty()) {
                    std::cerr << "trace rhs needs --var and --sub\n";
                    return kExitUsage;
                }
                seq = zlam::rhs_steps(t, trace_var, parse_or_die(trace_sub));
            } else {
                if (trace_to.empty()) {
                    std::cerr << "trace " << trace_kind << " needs --to\n";
                    return kExitUsage;
                }
                zlam::TermPtr to = parse_or_die(trace_to);
                if (!zlam::is_step(t, to)) {
                    std::cerr << "not a single β-step: " << zlam::print(t) << " -> "
                              << zlam::print(to) << "\n";
                    return kExitUsage;
                }
                auto [w1, w2] = zlam::z_steps(t, to);
                seq = trace_kind == "z-left" ? std::move(w1) : std::move(w2);
            }
            std::cout << zlam::print_trace(seq.terms);
            return kExitOk;
        }

        if (*cmd_join) {
            auto left = zlam::parse_trace(read_file(join_left));
            auto right = zlam::parse_trace(read_file(join_right));
            if (left.empty() || right.empty()) {
                std::cerr << "empty trace file\n";
                return kExitUsage;
            }
            if (!zlam::validate_seq(zlam::ReductionSeq(left)) ||
                !zlam::validate_seq(zlam::ReductionSeq(right))) {
                std::cerr << "trace file does not validate as a β-reduction\n";
                return kExitUsage;
            }
            if (!zlam::alpha_eq(left.front(), right.front())) {
                std::cerr << "traces do not share a source term\n";
                return kExitUsage;
            }
            auto [e, w_b, w_c] = zlam::ars::confluence_join(
                zlam::lambda_view(), zlam::lambda_bullet_map(), zlam::lambda_z_witness(),
                left, right);
            std::cout << "common reduct: " << zlam::print(e) << "\n";
            std::cout << "left extension:\n" << zlam::print_trace(w_b);
            std::cout << "right extension:\n" << zlam::print_trace(w_c);
            return kExitOk;
        }

        if (*cmd_check) {
            zlam::SuiteReport rep;
            if (check_suite == "subst")
                rep = zlam::run_subst_suite(check_max_size, check_vars, check_sub_size);
            else if (check_suite == "self")
                rep = zlam::run_self_suite(check_max_size, check_vars);
            else if (check_suite == "rhs")
                rep = zlam::run_rhs_suite(check_max_size, check_vars, check_sub_size);
            else if (check_suite == "z")
                rep = zlam::run_z_suite(check_max_size, check_vars);
            else if (check_suite == "join")
                rep = zlam::run_join_suite(check_max_size, check_vars);
            else
                rep = zlam::run_angle_suite(check_seed, check_count, 6, check_depth);
            return emit_report(rep, check_json);
        }

        if (*cmd_ars) {
            zlam::FiniteArs fa = zlam::FiniteArs::from_json(read_file(ars_file));
            auto view = fa.view();
            if (ars_action == "check-z") {
                auto v = zlam::ars::check_z(view, fa.bullet_map(), fa.elements, ars_depth);
                if (!v) {
                    std::cout << "ok\n";
                    return kExitOk;
                }
                print_violation(*v);
                return kExitViolation;
            }
            if (ars_action == "check-angle") {
                auto bmap = fa.bullet_map();
                auto rel = zlam::ars::dev_relation(view, bmap, fa.elements, ars_depth);
                auto v = zlam::ars::check_angle(view, bmap, rel, fa.elements, ars_depth);
                if (!v) {
                    std::cout << "ok\n";
                    return kExitOk;
                }
                print_violation(*v);
                return kExitViolation;
            }
            // join
            if (ars_from.empty() || ars_left.empty() || ars_right.empty()) {
                std::cerr << "ars join needs --from, --left and --right\n";
                return kExitUsage;
            }
            auto seq_ab = zlam::ars::find_path(view, ars_from, ars_left, ars_depth);
            auto seq_ac = zlam::ars::find_path(view, ars_from, ars_right, ars_depth);
            if (!seq_ab || !seq_ac) {
                std::cerr << "targets not reachable from " << ars_from << " within bound\n";
                return kExitViolation;
            }
            auto [e, w_b, w_c] = zlam::ars::confluence_join(
                view, fa.bullet_map(), fa.search_z_witness(ars_depth), *seq_ab, *seq_ac);
            auto show = [](const std::vector<std::string>& seq) {
                std::string out;
                for (size_t i = 0; i < seq.size(); ++i)
                    out += (i ? " -> " : "") + seq[i];
                return out;
            };
            std::cout << "common reduct: " << e << "\n";
            std::cout << "left extension: " << show(w_b) << "\n";
            std::cout << "right extension: " << show(w_c) << "\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
