// Command-line surface: field info, coefficient tables, derivative tables,
// sigma and G^b dumps, and the verification suite. JSON output follows the
// versioned schemas in docs/schema/.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include <eisq/eisenstein.hpp>
#include <eisq/verify.hpp>

using json = nlohmann::ordered_json;
using namespace eisq;

namespace {

struct Config {
    long disc = 0;
    std::string ideal_spec;
    int genus = -1;
    unsigned weight = 2;
    long terms = 50;
    std::string v = "1";
    unsigned precision = 128;
    std::string format = "json";
    long budget = kDefaultWorkBudget;
    std::string suite = "all";
    long m = 1;
    bool m_given = false;
};

unsigned env_precision() {
    if (const char* p = std::getenv("EISQ_PRECISION")) {
        long v = std::atol(p);
        if (v >= 32 && v <= 1 << 20) return static_cast<unsigned>(v);
    }
    return 128;
}

// fixed-width scientific form; deterministic for fixed input and precision
std::string fmt_real(const Real& x, unsigned bits) {
    return x.str(bits_to_digits10(bits), std::ios_base::scientific);
}

std::string fmt_rat(const Rat& r) { return rat_num(r).str() + "/" + rat_den(r).str(); }

FractionalIdeal select_ideal(const RealQuadraticField& field, const Config& cfg) {
    if (!cfg.ideal_spec.empty() && cfg.genus >= 0)
        throw std::invalid_argument("--ideal and --genus are mutually exclusive");
    if (!cfg.ideal_spec.empty()) return parse_ideal(field.D, cfg.ideal_spec);
    if (cfg.genus >= 0) {
        auto reps = genus_representatives(field);
        if (static_cast<size_t>(cfg.genus) >= reps.size())
            throw std::invalid_argument("--genus index out of range (field has " +
                                        std::to_string(reps.size()) + " genera)");
        return reps[cfg.genus];
    }
    return field.ring_of_integers();
}

void emit(const json& j, const Config& cfg, const std::string& csv) {
    if (cfg.format == "csv")
        std::cout << csv;
    else
        std::cout << j.dump(2) << "\n";
}

int cmd_info(const Config& cfg) {
    auto field = make_field(Int(cfg.disc));
    json j;
    j["schema"] = "eisq/info/v1";
    j["discriminant"] = cfg.disc;
    j["fundamental_unit"] = {
        {"a", field.eps0.num_a().str()},
        {"b", field.eps0.num_b().str()},
        {"display", "(" + field.eps0.num_a().str() + "+" + field.eps0.num_b().str() +
                        "*sqrt(" + field.D.str() + "))/2"}};
    j["unit_norm"] = field.eps0_norm;
    j["h_narrow"] = field.h_narrow.convert_to<long>();
    j["h_wide"] = field.h_wide.convert_to<long>();
    j["prime_discriminants"] = json::array();
    for (const Int& pd : field.prime_discs) j["prime_discriminants"].push_back(pd.convert_to<long>());
    j["genus_count"] = static_cast<long>(field.genus_count());
    j["genera"] = json::array();
    auto reps = genus_representatives(field);
    std::string csv = "key,value\nD," + field.D.str() + "\nh_narrow," + field.h_narrow.str() +
                      "\nh_wide," + field.h_wide.str() + "\n";
    for (size_t i = 0; i < reps.size(); ++i) {
        json g;
        g["index"] = static_cast<long>(i);
        g["ideal"] = reps[i].str();
        g["characters"] = genus_characters(field, reps[i]);
        j["genera"].push_back(g);
        csv += "genus_" + std::to_string(i) + "," + reps[i].str() + "\n";
    }
    emit(j, cfg, csv);
    return 0;
}

int cmd_expand(const Config& cfg) {
    auto field = make_field(Int(cfg.disc));
    auto ideal = select_ideal(field, cfg);
    EisensteinSeries E(EisensteinParams(field, ideal, cfg.weight, cfg.precision));
    auto qe = E.holomorphic_expansion(cfg.terms);
    json j;
    j["schema"] = "eisq/expand/v1";
    j["discriminant"] = cfg.disc;
    j["ideal"] = ideal.str();
    j["weight"] = cfg.weight;
    j["terms"] = cfg.terms;
    if (cfg.weight == 2)
        j["interpretation"] =
            "coefficients are volumes of the respective Hirzebruch-Zagier divisors";
    j["coefficients"] = json::array();
    std::string csv = "m,coefficient\n";
    for (long m = 0; m <= cfg.terms; ++m) {
        j["coefficients"].push_back({{"m", m}, {"value", fmt_rat(qe.coeffs[m])}});
        csv += std::to_string(m) + "," + fmt_rat(qe.coeffs[m]) + "\n";
    }
    emit(j, cfg, csv);
    return 0;
}

int cmd_derivative(const Config& cfg) {
    auto field = make_field(Int(cfg.disc));
    auto ideal = select_ideal(field, cfg);
    EisensteinSeries E(EisensteinParams(field, ideal, cfg.weight, cfg.precision));
    PrecisionGuard pg(cfg.precision);
    Real v(cfg.v);
    std::string err = fmt_real(pow2(-long(cfg.precision) + 8), cfg.precision);
    json j;
    j["schema"] = "eisq/derivative/v1";
    j["discriminant"] = cfg.disc;
    j["ideal"] = ideal.str();
    j["weight"] = cfg.weight;
    j["v"] = fmt_real(v, cfg.precision);
    j["precision_bits"] = cfg.precision;
    j["coefficients"] = json::array();
    std::string csv = "m,value,error\n";
    for (long m = -cfg.terms; m <= cfg.terms; ++m) {
        auto dc = E.derivative_coefficient(Int(m), v);
        std::string val = fmt_real(dc.value, cfg.precision);
        j["coefficients"].push_back({{"m", m}, {"value", val}, {"error", err}});
        csv += std::to_string(m) + "," + val + "," + err + "\n";
    }
    emit(j, cfg, csv);
    return 0;
}

int cmd_sigma(const Config& cfg) {
    auto field = make_field(Int(cfg.disc));
    auto ideal = select_ideal(field, cfg);
    if (cfg.m == 0) throw std::invalid_argument("sigma requires m != 0");
    auto sig = sigma_polynomial(field, ideal, Int(cfg.m));
    long w = 1 - long(cfg.weight);
    json j;
    j["schema"] = "eisq/sigma/v1";
    j["discriminant"] = cfg.disc;
    j["ideal"] = ideal.str();
    j["m"] = cfg.m;
    j["w"] = w;
    j["terms"] = json::array();
    std::string csv = "coeff,base\n";
    for (const auto& t : sig.terms()) {
        j["terms"].push_back({{"coeff", fmt_rat(t.coeff)}, {"base", t.base.str()}});
        csv += fmt_rat(t.coeff) + "," + t.base.str() + "\n";
    }
    Rat val = sig.is_zero() ? Rat(0) : sig.value(w);
    j["value_at_w"] = fmt_rat(val);
    PrecisionGuard pg(cfg.precision);
    Real dval = sig.derivative(w, cfg.precision);
    j["derivative_at_w"] = {{"value", fmt_real(dval, cfg.precision)},
                            {"error", fmt_real(pow2(-long(cfg.precision) + 8), cfg.precision)}};
    csv += "value_at_w," + fmt_rat(val) + "\n";
    emit(j, cfg, csv);
    return 0;
}

int cmd_repnum(const Config& cfg) {
    auto field = make_field(Int(cfg.disc));
    auto ideal = select_ideal(field, cfg);
    json j;
    j["schema"] = "eisq/repnum/v1";
    j["discriminant"] = cfg.disc;
    j["ideal"] = ideal.str();
    j["counts"] = json::array();
    std::string csv = "m,b,count\n";
    long mlo = cfg.m_given ? cfg.m : -5, mhi = cfg.m_given ? cfg.m : 5;
    bool brute = cfg.budget != kDefaultWorkBudget;  // explicit budget: budgeted enumeration
    for (long m = mlo; m <= mhi; ++m) {
        for (long b = 1; b <= cfg.terms; ++b) {
            Int c = brute ? count_G(ideal, Int(m), Int(b), cfg.budget)
                          : count_G_fast(ideal, Int(m), Int(b));
            j["counts"].push_back({{"m", m}, {"b", b}, {"count", c.str()}});
            csv += std::to_string(m) + "," + std::to_string(b) + "," + c.str() + "\n";
        }
    }
    emit(j, cfg, csv);
    return 0;
}

int cmd_verify(const Config& cfg) {
    std::vector<std::string> selection;
    if (cfg.suite == "all")
        selection = {"class_number", "derivative", "dirichlet", "modularity"};
    else
        selection = {cfg.suite};
    auto reports = run_suite(selection, cfg.budget > 0 ? cfg.budget : 2000);
    if (cfg.disc != 0) {
        std::string key = "D=" + std::to_string(cfg.disc);
        std::erase_if(reports, [&](const CheckReport& r) {
            return r.params.rfind(key + " ", 0) != 0 && r.params != key;
        });
    }
    int code = suite_exit_code(reports);
    json j;
    j["schema"] = "eisq/verify/v1";
    j["suite"] = selection;
    j["reports"] = json::array();
    std::string csv = "name,params,status,discrepancy,tolerance\n";
    for (const auto& r : reports) {
        std::string d = fmt_real(r.discrepancy, 64), t = fmt_real(r.tolerance, 64);
        j["reports"].push_back({{"name", r.name},
                                {"params", r.params},
                                {"status", to_string(r.status)},
                                {"discrepancy", d},
                                {"tolerance", t},
                                {"runtime_seconds", r.runtime_seconds}});
        csv += r.name + ",\"" + r.params + "\"," + to_string(r.status) + "," + d + "," + t + "\n";
    }
    j["exit_code"] = code;
    emit(j, cfg, csv);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier coefficients of elliptic Eisenstein series for real quadratic fields"};
    app.require_subcommand(1);
    Config cfg;
    cfg.precision = env_precision();

    auto add_common = [&](CLI::App* sub, bool need_disc = true) {
        auto* d = sub->add_option("--disc", cfg.disc, "fundamental discriminant D");
        if (need_disc) d->required();
        sub->add_option("--precision", cfg.precision, "working precision in bits");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_ideal = [&](CLI::App* sub) {
        sub->add_option("--ideal", cfg.ideal_spec, "fractional ideal as q:a:b");
        sub->add_option("--genus", cfg.genus, "genus index into the representative list");
    };

    auto* info = app.add_subcommand("info", "field invariants and genus data");
    add_common(info);

    auto* expand = app.add_subcommand("expand", "exact q-expansion of E(tau,0)");
    add_common(expand);
    add_ideal(expand);
    expand->add_option("--weight", cfg.weight, "even weight k >= 2");
    expand->add_option("--terms", cfg.terms, "number of coefficients M");

    auto* deriv = app.add_subcommand("derivative", "coefficients of E'(tau,0) at given v");
    add_common(deriv);
    add_ideal(deriv);
    deriv->add_option("--weight", cfg.weight, "even weight k >= 2");
    deriv->add_option("--terms", cfg.terms, "coefficient range |m| <= terms");
    deriv->add_option("--v", cfg.v, "imaginary part v > 0");

    auto* sigma = app.add_subcommand("sigma", "sigma(a, m, s) Dirichlet polynomial");
    add_common(sigma);
    add_ideal(sigma);
    sigma->add_option("--weight", cfg.weight, "weight fixing the evaluation point w = 1-k");
    sigma->add_option("--m", cfg.m, "index m != 0")->required();

    auto* repnum = app.add_subcommand("repnum", "representation counts G^b(a, m)");
    add_common(repnum);
    add_ideal(repnum);
    repnum->add_option("--m", cfg.m, "single index m (default: range -5..5)");
    repnum->add_option("--terms", cfg.terms, "maximum b");
    repnum->add_option("--budget", cfg.budget, "work budget for enumeration");

    auto* verify = app.add_subcommand("verify", "run verification checks");
    add_common(verify, false);
    verify->add_option("--suite", cfg.suite,
                       "all | class_number | dirichlet | derivative | modularity");
    verify->add_option("--budget", cfg.budget, "expansion-length budget for modularity");

    CLI11_PARSE(app, argc, argv);
    cfg.m_given = (repnum->count("--m") > 0);
    if (verify->count("--budget") == 0) cfg.budget = 2000;

    try {
        if (info->parsed()) return cmd_info(cfg);
        if (expand->parsed()) return cmd_expand(cfg);
        if (deriv->parsed()) return cmd_derivative(cfg);
        if (sigma->parsed()) return cmd_sigma(cfg);
        if (repnum->parsed()) return cmd_repnum(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        json j;
        j["schema"] = "eisq/error/v1";
        j["error"] = {{"message", e.what()}};
        std::cout << j.dump(2) << "\n";
        return 1;
    }
    return 1;
}
