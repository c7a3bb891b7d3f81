#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrr/bailey.hpp"
#include "qrr/dsl.hpp"
#include "qrr/identities.hpp"
#include "qrr/partitions.hpp"
#include "qrr/qseries.hpp"

using namespace qrr;
using nlohmann::ordered_json;

namespace {

class Stopwatch {
  public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ =
        std::chrono::steady_clock::now();
};

ordered_json series_json(const LaurentSeries& s) {
    ordered_json j;
    j["min_exp"] = s.min_exp();
    j["order"] = s.order();
    ordered_json cs = ordered_json::array();
    for (Exp e = s.min_exp(); e < s.order(); ++e)
        cs.push_back(s.coeff(e).get_str());
    j["coefficients"] = std::move(cs);
    return j;
}

ordered_json report_json(const EqualityReport& r) {
    ordered_json j;
    j["equal"] = r.equal();
    j["window_lo"] = r.window_lo;
    j["window_hi"] = r.window_hi;
    if (r.first_bad_exp) {
        j["first_bad_exp"] = *r.first_bad_exp;
        j["lhs_coeff"] = r.lhs_coeff ? r.lhs_coeff->get_str() : "";
        j["rhs_coeff"] = r.rhs_coeff ? r.rhs_coeff->get_str() : "";
    }
    return j;
}

std::string mismatch_text(const EqualityReport& r) {
    std::ostringstream out;
    out << "first mismatch at q^";
    if (r.first_bad_exp)
        out << *r.first_bad_exp;
    else
        out << "?";
    out << ": lhs " << (r.lhs_coeff ? r.lhs_coeff->get_str() : "?") << ", rhs "
        << (r.rhs_coeff ? r.rhs_coeff->get_str() : "?");
    return out.str();
}

void emit_json(ordered_json j, const Stopwatch& sw) {
    j["wall_time_ms"] = sw.ms();
    std::cout << j.dump(2) << "\n";
}

int thread_cap() {
    if (const char* env = std::getenv("QRR_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0)
            return v == 0 ? 1 : static_cast<int>(std::min<long>(v, 64));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// ---------------------------------------------------------------- expand

int cmd_expand(const std::string& expr, Exp order, const std::string& format,
               const Stopwatch& sw) {
    const LaurentSeries s = evaluate(expr, order);
    if (format == "json") {
        ordered_json j;
        j["command"] = "expand";
        j["parameters"] = {{"expr", expr}, {"order", order}};
        j["status"] = "pass";
        j["series"] = series_json(s);
        emit_json(std::move(j), sw);
    } else {
        std::cout << to_string(s) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- verify

// One representation of beta_n compared against the defining sum.
struct RepCheck {
    std::string form;
    EqualityReport rep;
};

std::vector<RepCheck> representation_checks(const BaileyPair& pair, long long n,
                                            Exp N) {
    std::vector<RepCheck> out;
    const LaurentSeries& ref = beta_definitional(pair, n, N);
    const int l = pair.level;
    if (l >= 5 && l <= 7)
        out.push_back({"closed", series_equal(beta_closed(pair, n, N), ref)});
    if ((l == 3 || l == 4 || l == 8 || l == 9) && n % 3 != 2) {
        out.push_back({"multisum-a",
                       series_equal(
                           beta_multisum(pair, BetaForm::multisum_a, n, N), ref)});
        out.push_back({"multisum-b",
                       series_equal(
                           beta_multisum(pair, BetaForm::multisum_b, n, N), ref)});
    }
    if (n >= 2 && n % 3 == 2)
        out.push_back({"recurrence",
                       series_equal(beta_3m_minus_1(pair, (n + 1) / 3, N), ref)});
    if (pair.module_index == 2)
        out.push_back({"index-shift",
                       series_equal(beta_i2_from_i1(pair, n, N), ref)});
    return out;
}

struct CheckOutcome {
    bool pass = false;
    std::string detail;
};

struct Check {
    std::string name;
    std::function<CheckOutcome()> run;
};

std::vector<Check> build_suite(Exp override_order) {
    auto ord = [override_order](Exp dflt) {
        return override_order > 0 ? override_order : dflt;
    };
    std::vector<Check> checks;
    for (const IdentityRecord& rec : catalog()) {
        checks.push_back({"catalog/" + rec.id, [&rec, ord] {
            const Exp N = ord(rec.default_order);
            const EqualityReport rep = verify(rec, N);
            CheckOutcome out;
            if (rec.expect_mismatch) {
                out.pass = !rep.equal() && rep.first_bad_exp.has_value();
                out.detail = out.pass
                                 ? "mismatch found as intended, " + mismatch_text(rep)
                                 : "perturbed entry unexpectedly verified";
            } else {
                out.pass = rep.equal();
                out.detail = out.pass ? "order " + std::to_string(N)
                                      : mismatch_text(rep);
            }
            return out;
        }});
    }
    for (int l = 3; l <= 9; ++l) {
        for (int i = 1; i <= 2; ++i) {
            checks.push_back(
                {"four-way/l" + std::to_string(l) + "-i" + std::to_string(i),
                 [l, i, ord] {
                     const Exp N = ord(120);
                     const FourWayReport rep = four_way(l, i, N);
                     CheckOutcome out{rep.all_equal(), "order " + std::to_string(N)};
                     if (!rep.alpha_side.equal())
                         out.detail = "alpha side: " + mismatch_text(rep.alpha_side);
                     else if (!rep.grouped.equal())
                         out.detail = "grouped: " + mismatch_text(rep.grouped);
                     else if (!rep.product.equal())
                         out.detail = "product: " + mismatch_text(rep.product);
                     return out;
                 }});
        }
    }
    checks.push_back({"bailey/classical-pairs", [ord] {
        const Exp N = ord(80);
        for (long long n = 0; n <= 24; ++n) {
            const EqualityReport unit = series_equal(
                beta_from_alpha(unit_pair_alpha, n, N),
                unit_pair_beta(n).truncated(N));
            if (!unit.equal())
                return CheckOutcome{false, "unit pair at n=" + std::to_string(n) +
                                               ": " + mismatch_text(unit)};
            const EqualityReport even = series_equal(
                beta_from_alpha(even_pair_alpha, n, N), even_pair_beta(n, N));
            if (!even.equal())
                return CheckOutcome{false, "even pair at n=" + std::to_string(n) +
                                               ": " + mismatch_text(even)};
        }
        return CheckOutcome{true, "n <= 24, order " + std::to_string(N)};
    }});
    for (int l = 3; l <= 9; ++l) {
        for (int i = 1; i <= 2; ++i) {
            checks.push_back(
                {"bailey/representations-l" + std::to_string(l) + "-i" +
                     std::to_string(i),
                 [l, i, ord] {
                     const Exp N = ord(80);
                     const BaileyPair pair(l, i);
                     for (long long n = 0; n <= 24; ++n)
                         for (const RepCheck& rc : representation_checks(pair, n, N))
                             if (!rc.rep.equal())
                                 return CheckOutcome{
                                     false, rc.form + " at n=" + std::to_string(n) +
                                                ": " + mismatch_text(rc.rep)};
                     return CheckOutcome{true, "n <= 24, order " + std::to_string(N)};
                 }});
        }
    }
    checks.push_back({"bailey/three-term-l3", [ord] {
        const Exp N = ord(80);
        const BaileyPair pair(3, 1);
        for (long long n = 2; n <= 24; ++n) {
            const EqualityReport rep = check_recurrence(pair, n, N);
            if (!rep.equal())
                return CheckOutcome{false, "n=" + std::to_string(n) + ": " +
                                               mismatch_text(rep)};
        }
        return CheckOutcome{true, "n <= 24, order " + std::to_string(N)};
    }});
    for (int l = 3; l <= 9; ++l) {
        checks.push_back({"bailey/level-recurrence-l" + std::to_string(l),
                          [l, ord] {
                              const Exp N = ord(80);
                              const BaileyPair pair(l, 1);
                              for (long long m = 1; m <= 8; ++m) {
                                  const EqualityReport rep =
                                      check_level_recurrence(pair, m, N);
                                  if (!rep.equal())
                                      return CheckOutcome{
                                          false, "m=" + std::to_string(m) + ": " +
                                                     mismatch_text(rep)};
                              }
                              return CheckOutcome{true,
                                                  "m <= 8, order " + std::to_string(N)};
                          }});
    }
    for (int which = 1; which <= 2; ++which) {
        checks.push_back({"capparelli/" + std::to_string(which), [which, ord] {
            const Exp N = ord(61);
            const long long max_n = N - 1;
            const DifferenceRule rule = which == 1 ? capparelli_first_rule()
                                                   : capparelli_second_rule();
            const CongruenceClass mod6 = which == 1
                                             ? capparelli_first_distinct_mod6()
                                             : capparelli_second_distinct_mod6();
            for (long long n = 0; n <= max_n; ++n) {
                const long long a = count_difference(rule, n);
                if (a != count_congruence(mod6, n))
                    return CheckOutcome{false,
                                        "count disagreement at n=" + std::to_string(n)};
                if (which == 1 &&
                    a != count_congruence(capparelli_first_mod12(), n))
                    return CheckOutcome{false,
                                        "count disagreement at n=" + std::to_string(n)};
            }
            const LaurentSeries counted = counts_to_series(
                [&rule](long long n) { return count_difference(rule, n); }, N);
            const EqualityReport rep =
                series_equal(counted, a22_product(3, which, N));
            if (!rep.equal())
                return CheckOutcome{false, "series vs product: " + mismatch_text(rep)};
            return CheckOutcome{true, "n <= " + std::to_string(max_n) +
                                          " and series window [0, " +
                                          std::to_string(N) + ")"};
        }});
    }
    return checks;
}

std::vector<CheckOutcome> run_suite(const std::vector<Check>& checks) {
    std::vector<CheckOutcome> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < checks.size();) {
            try {
                results[k] = checks[k].run();
            } catch (const std::exception& ex) {
                results[k] = {false, std::string("error: ") + ex.what()};
            }
        }
    };
    const int cap = std::min<int>(thread_cap(),
                                  static_cast<int>(checks.size()));
    if (cap <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(cap));
        for (int t = 0; t < cap; ++t) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return results;
}

int cmd_verify_all(Exp order, const std::string& format, const Stopwatch& sw) {
    const std::vector<Check> checks = build_suite(order);
    const std::vector<CheckOutcome> results = run_suite(checks);
    std::size_t passed = 0;
    for (const CheckOutcome& r : results) passed += r.pass ? 1 : 0;
    const bool all_pass = passed == results.size();
    if (format == "json") {
        ordered_json j;
        j["command"] = "verify";
        j["parameters"] = {{"id", "all"}, {"order", order}};
        j["status"] = all_pass ? "pass" : "fail";
        ordered_json list = ordered_json::array();
        for (std::size_t k = 0; k < checks.size(); ++k)
            list.push_back({{"name", checks[k].name},
                            {"pass", results[k].pass},
                            {"detail", results[k].detail}});
        j["checks"] = std::move(list);
        j["summary"] = {{"total", results.size()}, {"passed", passed}};
        emit_json(std::move(j), sw);
    } else {
        for (std::size_t k = 0; k < checks.size(); ++k)
            std::cout << (results[k].pass ? "pass " : "FAIL ") << checks[k].name
                      << ": " << results[k].detail << "\n";
        std::cout << results.size() << " checks, " << passed << " passed, "
                  << results.size() - passed << " failed (" << sw.ms()
                  << " ms)\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_verify(const std::string& id, long long level, long long index,
               const std::string& z_text, Exp order, const std::string& format,
               const Stopwatch& sw) {
    if (id == "all") return cmd_verify_all(order, format, sw);
    EqualityReport rep;
    Exp used = order;
    std::string label = id;
    ordered_json params;
    params["id"] = id;
    if (const IdentityRecord* rec = find_identity(id)) {
        used = order > 0 ? order : rec->default_order;
        rep = verify(*rec, used);
    } else if (id == "jtp" || id == "qpi") {
        if (z_text.empty())
            throw InvalidArgument("family '" + id + "' needs --z");
        const Monomial z = parse_monomial(z_text);
        used = order > 0 ? order : 200;
        rep = id == "jtp" ? verify_jtp(z, used) : verify_qpi(z, used);
        label = id + " at z = " + to_string(z);
        params["z"] = z_text;
    } else if (id == "module" || id == "alpha-theta" || id == "agb") {
        if (level == 0)
            throw InvalidArgument("family '" + id + "' needs --level");
        const int l = static_cast<int>(level);
        const int i = static_cast<int>(index);
        used = order > 0 ? order : (id == "agb" ? 100 : 120);
        rep = id == "module"        ? verify_module(l, i, used)
              : id == "alpha-theta" ? verify_alpha_theta(l, i, used)
                                    : verify_agb(l, i, used);
        label = id + " level " + std::to_string(l) + ", i = " + std::to_string(i);
        params["level"] = level;
        params["i"] = index;
    } else if (id == "cap-sigma") {
        used = order > 0 ? order : 100;
        rep = verify_cap_sigma(static_cast<int>(index), used);
        label = id + " variant " + std::to_string(index);
        params["i"] = index;
    } else {
        throw UnknownIdentity("unknown identity id: " + id);
    }
    params["order"] = used;
    if (format == "json") {
        ordered_json j;
        j["command"] = "verify";
        j["parameters"] = std::move(params);
        j["status"] = rep.equal() ? "pass" : "fail";
        j["details"] = ordered_json::array({report_json(rep)});
        emit_json(std::move(j), sw);
    } else if (rep.equal()) {
        std::cout << "pass " << label << ": equal on [" << rep.window_lo << ", "
                  << rep.window_hi << ")\n";
    } else {
        std::cout << "FAIL " << label << ": " << mismatch_text(rep) << "\n";
    }
    return rep.equal() ? 0 : 1;
}

// ---------------------------------------------------------------- bailey

BetaForm form_from_name(const std::string& name) {
    if (name == "definitional") return BetaForm::definitional;
    if (name == "closed") return BetaForm::closed;
    if (name == "multisum-a") return BetaForm::multisum_a;
    if (name == "multisum-b") return BetaForm::multisum_b;
    return BetaForm::recurrence;
}

int cmd_bailey_beta(long long level, long long index, long long n,
                    const std::string& form, Exp order,
                    const std::string& format, const Stopwatch& sw) {
    const BaileyPair pair(static_cast<int>(level), static_cast<int>(index));
    const LaurentSeries s =
        beta_representation(pair, form_from_name(form), n, order);
    if (format == "json") {
        ordered_json j;
        j["command"] = "bailey-beta";
        j["parameters"] = {{"level", level},
                           {"i", index},
                           {"n", n},
                           {"form", form},
                           {"order", order}};
        j["status"] = "pass";
        j["series"] = series_json(s);
        emit_json(std::move(j), sw);
    } else {
        std::cout << to_string(s) << "\n";
    }
    return 0;
}

int cmd_bailey_check(long long level, long long index, long long max_n,
                     Exp order, const std::string& format,
                     const Stopwatch& sw) {
    const BaileyPair pair(static_cast<int>(level), static_cast<int>(index));
    const BaileyPair first(static_cast<int>(level), 1);
    bool all_pass = true;
    ordered_json table = ordered_json::array();
    std::ostringstream text;
    for (long long n = 0; n <= max_n; ++n) {
        std::vector<RepCheck> checks = representation_checks(pair, n, order);
        if (pair.level == 3 && n >= 2)
            checks.push_back({"three-term", check_recurrence(first, n, order)});
        bool row_pass = true;
        std::string forms;
        ordered_json row_checks = ordered_json::array();
        for (const RepCheck& rc : checks) {
            row_pass = row_pass && rc.rep.equal();
            if (!forms.empty()) forms += ", ";
            forms += rc.form + (rc.rep.equal() ? "" : " FAILED");
            row_checks.push_back({{"form", rc.form}, {"equal", rc.rep.equal()}});
        }
        all_pass = all_pass && row_pass;
        text << "n=" << n << ": " << (row_pass ? "pass" : "FAIL");
        if (!forms.empty()) text << " [" << forms << "]";
        text << "\n";
        table.push_back({{"n", n}, {"pass", row_pass}, {"checks", row_checks}});
    }
    ordered_json rec_list = ordered_json::array();
    for (long long m = 1; 3 * m - 1 <= max_n; ++m) {
        const EqualityReport rep = check_level_recurrence(first, m, order);
        all_pass = all_pass && rep.equal();
        text << "level recurrence m=" << m << ": "
             << (rep.equal() ? "pass" : "FAIL " + mismatch_text(rep)) << "\n";
        rec_list.push_back({{"m", m}, {"equal", rep.equal()}});
    }
    if (format == "json") {
        ordered_json j;
        j["command"] = "bailey-check";
        j["parameters"] = {{"level", level},
                           {"i", index},
                           {"max_n", max_n},
                           {"order", order}};
        j["status"] = all_pass ? "pass" : "fail";
        j["table"] = std::move(table);
        j["level_recurrence"] = std::move(rec_list);
        emit_json(std::move(j), sw);
    } else {
        std::cout << "level " << level << ", i = " << index << ", order "
                  << order << "\n"
                  << text.str()
                  << (all_pass ? "all checks passed" : "some checks FAILED")
                  << "\n";
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- capparelli

int cmd_capparelli(int which, long long max_n, Exp order,
                   const std::string& format, const Stopwatch& sw) {
    const DifferenceRule rule =
        which == 1 ? capparelli_first_rule() : capparelli_second_rule();
    const CongruenceClass mod6 = which == 1 ? capparelli_first_distinct_mod6()
                                            : capparelli_second_distinct_mod6();
    const Exp N = order > 0 ? order : max_n + 1;
    bool all_pass = true;
    ordered_json table = ordered_json::array();
    std::ostringstream text;
    text << (which == 1 ? " n  rule  mod6  mod12  ok\n" : " n  rule  mod6  ok\n");
    for (long long n = 0; n <= max_n; ++n) {
        const long long a = count_difference(rule, n);
        const long long b = count_congruence(mod6, n);
        ordered_json counts = ordered_json::array({a, b});
        bool row = a == b;
        text << std::setw(2) << n << "  " << std::setw(4) << a << "  "
             << std::setw(4) << b;
        if (which == 1) {
            const long long c = count_congruence(capparelli_first_mod12(), n);
            counts.push_back(c);
            row = row && a == c;
            text << "  " << std::setw(5) << c;
        }
        all_pass = all_pass && row;
        text << "  " << (row ? "yes" : "NO") << "\n";
        table.push_back({{"n", n}, {"counts", counts}, {"equal", row}});
    }
    const LaurentSeries counted = counts_to_series(
        [&rule](long long n) { return count_difference(rule, n); }, N);
    const EqualityReport rep = series_equal(counted, a22_product(3, which, N));
    all_pass = all_pass && rep.equal();
    if (format == "json") {
        ordered_json j;
        j["command"] = "capparelli";
        j["parameters"] = {{"which", which}, {"max_n", max_n}, {"order", N}};
        j["status"] = all_pass ? "pass" : "fail";
        j["table"] = std::move(table);
        j["series_vs_product"] = report_json(rep);
        emit_json(std::move(j), sw);
    } else {
        text << "series vs product on [0, " << N << "): "
             << (rep.equal() ? "equal" : mismatch_text(rep)) << "\n"
             << (all_pass ? "pass" : "FAIL") << "\n";
        std::cout << text.str();
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- catalog

int cmd_catalog(const std::string& format) {
    if (format == "json") {
        ordered_json list = ordered_json::array();
        for (const IdentityRecord& rec : catalog())
            list.push_back({{"id", rec.id},
                            {"description", rec.description},
                            {"rhs", rec.rhs_text},
                            {"default_order", rec.default_order},
                            {"expect_mismatch", rec.expect_mismatch}});
        std::cout << list.dump(2) << "\n";
    } else {
        for (const IdentityRecord& rec : catalog())
            std::cout << std::left << std::setw(22) << rec.id << " "
                      << std::right << std::setw(4) << rec.default_order << "  "
                      << rec.description << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const Stopwatch sw;
    CLI::App app{"exact q-series engine: expansion, identity verification, "
                 "Bailey pairs, partition counts"};
    app.require_subcommand(1);

    std::string expand_expr;
    Exp expand_order = 50;
    std::string expand_format = "text";
    CLI::App* expand = app.add_subcommand("expand",
                                          "evaluate a product expression");
    expand->add_option("expr", expand_expr, "product expression, e.g. (q;q)_inf")
        ->required();
    expand->add_option("--order", expand_order, "truncation order");
    expand->add_option("--format", expand_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string verify_target;
    long long verify_level = 0;
    long long verify_index = 1;
    std::string verify_z;
    Exp verify_order = 0;
    std::string verify_format = "text";
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check one identity, a family instance, or 'all'");
    verify_cmd->add_option("id", verify_target, "catalog id, family name, or 'all'")
        ->required();
    verify_cmd->add_option("--level", verify_level, "level for module/alpha-theta/agb");
    verify_cmd->add_option("--i", verify_index, "module index, residue, or variant");
    verify_cmd->add_option("--z", verify_z, "monomial for jtp/qpi, e.g. q^2 or -q");
    verify_cmd->add_option("--order", verify_order,
                           "truncation order (0 uses each check's default)");
    verify_cmd->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string bailey_action;
    long long bailey_level = 0;
    long long bailey_index = 1;
    long long bailey_n = 0;
    long long bailey_max_n = 12;
    std::string bailey_form = "definitional";
    Exp bailey_order = 40;
    std::string bailey_format = "text";
    CLI::App* bailey = app.add_subcommand("bailey",
                                          "inspect or cross-check Bailey betas");
    bailey->add_option("action", bailey_action, "beta or check")
        ->required()
        ->check(CLI::IsMember({"beta", "check"}));
    bailey->add_option("--level", bailey_level, "level in [3, 9]")->required();
    bailey->add_option("--i", bailey_index, "module index 1 or 2");
    bailey->add_option("--n", bailey_n, "index for 'beta'");
    bailey->add_option("--max-n", bailey_max_n, "top index for 'check'");
    bailey->add_option("--form", bailey_form, "series representation")
        ->check(CLI::IsMember({"definitional", "closed", "multisum-a",
                               "multisum-b", "recurrence"}));
    bailey->add_option("--order", bailey_order, "truncation order");
    bailey->add_option("--format", bailey_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int cap_which = 0;
    long long cap_max_n = 60;
    Exp cap_order = 0;
    std::string cap_format = "text";
    CLI::App* capparelli = app.add_subcommand(
        "capparelli", "enumerate both sides of a Capparelli identity");
    capparelli->add_option("--which", cap_which, "1 or 2")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    capparelli->add_option("--max-n", cap_max_n, "largest n in the count table");
    capparelli->add_option("--order", cap_order,
                           "series window (default max-n + 1)");
    capparelli->add_option("--format", cap_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string catalog_format = "text";
    CLI::App* catalog_cmd = app.add_subcommand("catalog",
                                               "list the identity catalog");
    catalog_cmd->add_option("--format", catalog_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (expand->parsed())
            return cmd_expand(expand_expr, expand_order, expand_format, sw);
        if (verify_cmd->parsed())
            return cmd_verify(verify_target, verify_level, verify_index,
                              verify_z, verify_order, verify_format, sw);
        if (bailey->parsed()) {
            if (bailey_action == "beta")
                return cmd_bailey_beta(bailey_level, bailey_index, bailey_n,
                                       bailey_form, bailey_order, bailey_format,
                                       sw);
            return cmd_bailey_check(bailey_level, bailey_index, bailey_max_n,
                                    bailey_order, bailey_format, sw);
        }
        if (capparelli->parsed())
            return cmd_capparelli(cap_which, cap_max_n, cap_order, cap_format,
                                  sw);
        if (catalog_cmd->parsed()) return cmd_catalog(catalog_format);
    } catch (const ParseError& pe) {
        std::cerr << "parse error at offset " << pe.position << ": expected "
                  << pe.expected << ", found " << pe.found << "\n";
        return 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
