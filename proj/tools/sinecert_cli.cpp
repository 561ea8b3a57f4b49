// Command-line front end: certification runs, condition checks, the
// constants reproduction suite, and parameter scans.
//
// Exit codes: 0 = all pass, 1 = mathematical violation found, 2 = usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "sinecert/acceptance.hpp"
#include "sinecert/analysis.hpp"
#include "sinecert/certify.hpp"

using json = nlohmann::ordered_json;
using namespace sinecert;

namespace {

constexpr const char* kVersion = "1.0.0";

json versions_block() {
    json v;
    v["sinecert"] = kVersion;
    v["gmp"] = gmp_version;
    return v;
}

json certificate_json(int n, const Certificate& c) {
    json j;
    j["n"] = n;
    j["verdict"] = to_string(c.verdict);
    if (c.verdict == Verdict::numeric_evidence || c.verdict == Verdict::violation) {
        if (c.grid_step > 0) {
            j["min_value"] = c.min_value;
            j["argmin"] = c.argmin;
            j["grid_step"] = c.grid_step;
            j["derivative_bound"] = c.deriv_bound;
            j["certified_lower"] = c.certified_lower;
        }
    }
    if (c.verdict == Verdict::violation) {
        if (c.witness_y) j["witness_y"] = c.witness_y->to_string();
        j["witness_x"] = c.witness_x;
        j["witness_value"] = c.witness_value;
    }
    return j;
}

json ps_report_json(const PSReport& rep) {
    json j;
    j["family"] = rep.family_id;
    j["n_min"] = rep.n_min;
    j["n_max"] = rep.n_max;
    json certs = json::array();
    for (int i = 0; i < static_cast<int>(rep.certs.size()); ++i)
        certs.push_back(certificate_json(rep.n_min + i, rep.certs[static_cast<size_t>(i)]));
    j["certificates"] = certs;
    if (rep.first_violation)
        j["first_violation"] = *rep.first_violation;
    else
        j["first_violation"] = nullptr;
    return j;
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream os(out_path);
        os << report.dump(2) << "\n";
    }
}

json run_report(const std::string& command, json parameters, json results, double wall_s) {
    json j;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["results"] = std::move(results);
    j["versions"] = versions_block();
    j["wall_time_s"] = wall_s;
    return j;
}

std::optional<CoeffSeq> family_from(const std::string& id, const std::string& param,
                                    const std::string& base, const std::string& coeffs) {
    if (!coeffs.empty()) {
        std::vector<Rational> c;
        std::string cur;
        std::stringstream ss(coeffs);
        while (std::getline(ss, cur, ',')) c.push_back(Rational::from_string(cur));
        return CoeffSeq::custom(std::move(c));
    }
    return CoeffSeq::parse(id, param, base);
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_verify(const std::string& family, const std::string& param, const std::string& base,
               const std::string& coeffs, int n, const std::string& mode,
               const std::string& out, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    auto fam = family_from(family, param, base, coeffs);
    if (!fam) {
        std::cerr << "unknown family '" << family << "' (or missing --param)\n";
        return 2;
    }
    if (mode == "exact" && !fam->exact()) {
        std::cerr << "family '" << fam->id() << "' has irrational coefficients; use --mode numeric\n";
        return 2;
    }
    PSReport rep;
    if (mode == "numeric" && fam->exact()) {
        rep.family_id = fam->id();
        rep.n_min = 1;
        rep.n_max = n;
        for (int m = 1; m <= n; ++m) {
            std::vector<double> c;
            for (int k = 1; k <= m; ++k) c.push_back(fam->coeff_d(k));
            SinePoly sp = SinePoly::from_numeric(std::move(c));
            NumericMin nm = numeric_min(sp);
            Certificate cert;
            cert.min_value = nm.min_value;
            cert.argmin = nm.argmin;
            cert.grid_step = nm.grid_step;
            cert.deriv_bound = nm.deriv_bound;
            cert.certified_lower = nm.certified_lower;
            cert.verdict = nm.min_value >= -kNumericTol ? Verdict::numeric_evidence
                                                        : Verdict::violation;
            if (cert.verdict == Verdict::violation) {
                cert.witness_x = nm.argmin;
                cert.witness_value = nm.min_value;
            }
            rep.certs.push_back(cert);
            if (!rep.first_violation && cert.verdict == Verdict::violation)
                rep.first_violation = m;
        }
    } else {
        rep = certify_ps(*fam, n, threads);
    }
    json params;
    params["family"] = fam->id();
    params["n"] = n;
    params["mode"] = mode;
    emit(run_report("verify", params, ps_report_json(rep), elapsed(t0)), out);
    return rep.all_nonneg() ? 0 : 1;
}

int cmd_check(const std::string& conds, const std::string& family, const std::string& param,
              const std::string& base, const std::string& a_id, const std::string& b_id, int n,
              const std::string& out) {
    auto t0 = std::chrono::steady_clock::now();
    json results = json::array();
    bool all_ok = true;

    std::optional<AlgebraicReal> alpha;
    std::stringstream ss(conds);
    std::string cond;
    while (std::getline(ss, cond, ',')) {
        json row;
        row["condition"] = cond;
        if (cond == "dominates") {
            auto a = CoeffSeq::parse(a_id);
            auto b = CoeffSeq::parse(b_id);
            if (!a || !b) {
                std::cerr << "dominates needs --a and --b family ids\n";
                return 2;
            }
            bool ok = dominates(*a, *b, n);
            row["a"] = a->id();
            row["b"] = b->id();
            row["pass"] = ok;
            all_ok = all_ok && ok;
            results.push_back(row);
            continue;
        }
        auto fam = family_from(family, param, base, "");
        if (!fam) {
            std::cerr << "unknown family '" << family << "'\n";
            return 2;
        }
        if (cond == "belov") {
            bool ok = true;
            int first_fail = 0;
            for (int m = 1; m <= n; ++m) {
                bool nn = fam->exact() ? belov_partial(*fam, m) >= Rational(0)
                                       : belov_partial_num(*fam, m) >= -1e-12;
                if (!nn) {
                    ok = false;
                    first_fail = m;
                    break;
                }
            }
            row["pass"] = ok;
            if (!ok) row["first_fail_n"] = first_fail;
            all_ok = all_ok && ok;
            results.push_back(row);
            continue;
        }
        Condition c;
        if (cond == "v") c = Condition::v;
        else if (cond == "kv") c = Condition::kv;
        else if (cond == "kv2") c = Condition::kv2;
        else if (cond == "first_alpha") c = Condition::first_alpha;
        else if (cond == "sqrt_step") c = Condition::sqrt_step;
        else {
            std::cerr << "unknown condition '" << cond << "'\n";
            return 2;
        }
        if (c == Condition::first_alpha && !alpha) alpha = critical_alpha();
        ConditionResult r = check_condition(c, *fam, n, alpha ? &*alpha : nullptr);
        row["family"] = fam->id();
        row["pass"] = r.ok;
        if (!r.ok) row["first_fail_j"] = r.first_fail_j;
        row["equalities_at_j"] = r.equality_at;
        all_ok = all_ok && r.ok;
        results.push_back(row);
    }
    json params;
    params["cond"] = conds;
    if (!family.empty()) params["family"] = family;
    params["n"] = n;
    emit(run_report("check", params, results, elapsed(t0)), out);
    return all_ok ? 0 : 1;
}

int cmd_reproduce(const std::string& out, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    auto results = acceptance::run_all(threads);

    json constants;
    {
        AlgebraicReal alpha = critical_alpha();
        constants["alpha"] = alpha.to_double();
        constants["three_quarter_alpha"] = 0.75 * alpha.to_double();
        constants["lambda"] = 2.0 - 2.0 * alpha.to_double();
        ProofConstant s = sigma_constant();
        constants["sigma"] = s.value;
        constants["sigma_residual"] = s.residual;
        Thresholds th = thresholds();
        constants["sqrt_shift_feasibility"] = th.sqrt_shift_star;
        constants["exponent_threshold_first"] = th.exponent_first;
        constants["exponent_threshold_second"] = th.exponent_second;
        constants["kernel_min_n4"] = sine_kernel_integral(4, 1.5707963267948966);
        constants["kernel_min_n20"] = sine_kernel_integral(20, 0.3141592653589793);
    }

    json crits = json::array();
    int raw_pass = 0;
    for (const auto& r : results) {
        json c;
        c["index"] = r.index;
        c["title"] = r.title;
        c["pass"] = r.pass();
        c["as_documented"] = r.as_expected();
        json clauses = json::array();
        for (const auto& cl : r.clauses) {
            json cj;
            cj["name"] = cl.name;
            cj["pass"] = cl.pass;
            cj["expected_pass"] = cl.expected_pass;
            if (!cl.note.empty()) cj["note"] = cl.note;
            clauses.push_back(cj);
        }
        c["clauses"] = clauses;
        c["seconds"] = r.seconds;
        crits.push_back(c);
        if (r.pass()) ++raw_pass;
        std::cerr << (r.pass() ? "PASS" : "FAIL") << " criterion " << r.index << ": " << r.title
                  << "\n";
    }

    json res;
    res["constants"] = constants;
    res["criteria"] = crits;
    res["criteria_pass_as_stated"] = raw_pass;
    res["criteria_total"] = results.size();
    emit(run_report("reproduce", json::object(), res, elapsed(t0)), out);
    return acceptance::all_as_expected(results) ? 0 : 1;
}

int cmd_scan(const std::string& param_name, const std::string& range, double point, bool has_point,
             int n, double tol, const std::string& csv, const std::string& out, int grid_points) {
    auto t0 = std::chrono::steady_clock::now();
    ScanParam sp;
    if (param_name == "gamma_exp") sp = ScanParam::power_exponent;
    else if (param_name == "beta") sp = ScanParam::sqrt_shift;
    else {
        std::cerr << "unknown scan parameter '" << param_name << "' (gamma_exp | beta)\n";
        return 2;
    }
    json params;
    params["param"] = param_name;
    params["n"] = n;
    params["tol"] = tol;

    if (has_point) {
        params["point"] = point;
        std::vector<int> fails = failing_partials(scan_family(sp, point), n, tol);
        json res;
        res["failing_partial_sums"] = fails;
        emit(run_report("scan", params, res, elapsed(t0)), out);
        return fails.empty() ? 0 : 1;
    }

    auto colon = range.find(':');
    if (colon == std::string::npos) {
        std::cerr << "--range must look like lo:hi\n";
        return 2;
    }
    double lo = std::stod(range.substr(0, colon));
    double hi = std::stod(range.substr(colon + 1));
    params["range"] = {lo, hi};
    ScanResult sr = scan_threshold(sp, lo, hi, n, tol, grid_points);

    if (!csv.empty()) {
        std::ofstream os(csv);
        os << "param,first_fail_n,worst_min\n";
        for (const auto& row : sr.rows)
            os << row.param << "," << row.first_fail_n << "," << row.worst_min << "\n";
    }
    json res;
    json rows = json::array();
    for (const auto& row : sr.rows) {
        json r;
        r["param"] = row.param;
        r["first_fail_n"] = row.first_fail_n;
        r["worst_min"] = row.worst_min;
        rows.push_back(r);
    }
    res["rows"] = rows;
    res["boundaries"] = sr.boundaries;
    emit(run_report("scan", params, res, elapsed(t0)), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nonnegativity certification for sine polynomials on [0, pi]"};
    app.require_subcommand(1);

    std::string family, param, base, coeffs, mode = "exact", out, conds, a_id, b_id;
    std::string range, csv, scan_param;
    int n = 30, threads = 1, grid_points = 11;
    double tol = kNumericTol, point = 0.0;
    bool has_point = false;

    auto* verify = app.add_subcommand("verify", "certify partial sums of a coefficient family");
    verify->add_option("--family", family, "family id (see README)");
    verify->add_option("--param", param, "family parameter (rational p/q or float)");
    verify->add_option("--base", base, "base family for odd_comb");
    verify->add_option("--coeffs", coeffs, "inline rational coefficients a1,a2,...");
    verify->add_option("--n", n, "largest partial sum length")->check(CLI::PositiveNumber);
    verify->add_option("--mode", mode, "exact | numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    verify->add_option("--out", out, "write the JSON report to a file");
    verify->add_option("--threads", threads, "parallel per-n certification jobs");

    auto* check = app.add_subcommand("check", "evaluate coefficient conditions");
    check->add_option("--cond", conds,
                      "comma list: v,kv,kv2,first_alpha,sqrt_step,belov,dominates")
        ->required();
    check->add_option("--family", family, "family id");
    check->add_option("--param", param, "family parameter");
    check->add_option("--base", base, "base family for odd_comb");
    check->add_option("--a", a_id, "dominating family (dominates)");
    check->add_option("--b", b_id, "dominated family (dominates)");
    check->add_option("--n", n, "index bound")->check(CLI::PositiveNumber);
    check->add_option("--out", out, "write the JSON report to a file");

    auto* reproduce = app.add_subcommand("reproduce", "run the full verification suite");
    reproduce->add_option("--out", out, "write the JSON report to a file");
    reproduce->add_option("--threads", threads, "parallel certification jobs");

    auto* scan = app.add_subcommand("scan", "sweep a family parameter against PS failure");
    scan->add_option("--param", scan_param, "gamma_exp | beta")->required();
    scan->add_option("--range", range, "lo:hi sweep range");
    auto* point_opt = scan->add_option("--point", point, "single parameter value");
    scan->add_option("--n", n, "largest partial sum length")->check(CLI::PositiveNumber);
    scan->add_option("--tol", tol, "numeric nonnegativity tolerance");
    scan->add_option("--csv", csv, "write sweep rows as CSV");
    scan->add_option("--grid-points", grid_points, "sweep grid size");
    scan->add_option("--out", out, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    has_point = point_opt->count() > 0;

    try {
        if (verify->parsed()) {
            if (family.empty() && coeffs.empty()) {
                std::cerr << "verify needs --family or --coeffs\n";
                return 2;
            }
            return cmd_verify(family, param, base, coeffs, n, mode, out, threads);
        }
        if (check->parsed()) return cmd_check(conds, family, param, base, a_id, b_id, n, out);
        if (reproduce->parsed()) return cmd_reproduce(out, threads);
        if (scan->parsed()) {
            if (range.empty() && !has_point) {
                std::cerr << "scan needs --range or --point\n";
                return 2;
            }
            return cmd_scan(scan_param, range, point, has_point, n, tol, csv, out, grid_points);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
