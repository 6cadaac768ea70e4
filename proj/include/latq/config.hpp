#pragma once

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "latq/jacobi.hpp"

namespace latq {

using Json = nlohmann::json;

struct ExperimentConfig {
    std::string family_name;
    CatalogParams family_params;
    int N = 1;
    std::vector<double> g_phases;
    double hermitian_constant = 1.0;
    Json omega_json;  // "constant" | "entries" | "catalog" form, kept verbatim
    std::vector<long long> bs_point;
    std::vector<double> t_list;
    double trunc_eps = 1e-12;
    double quad_tol = 1e-9;
    std::uint64_t seed = 1;
    bool approx = false;
    std::string out_csv;
    std::string out_json;
    QuadratureGrid grid;
    std::vector<std::string> checks;
    double pairing_width = 0.5;
    std::complex<double> pairing_scale{2.0, 0.0};
    int eval_points = 20;

    ActionFamily family() const { return catalog(family_name, family_params); }

    PrequantumLift lift() const {
        PrequantumLift l =
            make_lift(family(), N, g_phases.empty() ? std::vector<double>() : g_phases, 64, seed);
        l.hermitian_constant = hermitian_constant;
        return l;
    }

    OmegaMap omega() const;
};

namespace detail {

inline RatMat rat_mat_from_json(const Json& j) {
    RatMat m;
    for (const auto& row : j) {
        RatVec r;
        for (const auto& v : row) r.push_back(rat_from_double(v.get<double>()));
        m.push_back(std::move(r));
    }
    return m;
}

inline Json rat_mat_to_json(const RatMat& m) {
    Json j = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_double(v));
        j.push_back(std::move(r));
    }
    return j;
}

}  // namespace detail

inline OmegaMap ExperimentConfig::omega() const {
    if (omega_json.contains("catalog")) {
        std::string id = omega_json.at("catalog").get<std::string>();
        if (id == "kodaira_thurston") return kt_omega();
        if (id == "jordan") return jordan_omega(family_params.lambda.at(0));
        if (id == "ex48") return ex48_omega(family_params.C, family_params.u);
        throw std::invalid_argument("omega.catalog: unknown id '" + id + "'");
    }
    if (omega_json.contains("constant")) {
        const Json& rows = omega_json.at("constant");
        int n = static_cast<int>(rows.size());
        Eigen::MatrixXcd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Json& c = rows.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
                m(i, j) = std::complex<double>(c.at(0).get<double>(), c.at(1).get<double>());
            }
        return OmegaMap::constant(m);
    }
    if (omega_json.contains("entries")) {
        int n = omega_json.at("n").get<int>();
        std::map<std::pair<int, int>, Polynomial> entries;
        for (const Json& e : omega_json.at("entries")) {
            int i = e.at("i").get<int>(), j = e.at("j").get<int>();
            if (i > j) std::swap(i, j);
            Polynomial p(n);
            for (const Json& mono : e.at("monomials")) {
                Polynomial::Exponents exps;
                for (const auto& v : mono.at("exps")) exps.push_back(v.get<int>());
                p = p + Polynomial::monomial(n, exps,
                                             RatComplex(rat_from_double(mono.at("re").get<double>()),
                                                        rat_from_double(mono.at("im").get<double>())));
            }
            entries[{i, j}] = std::move(p);
        }
        std::vector<Polynomial> upper;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                auto it = entries.find({i, j});
                upper.push_back(it == entries.end() ? Polynomial(n) : it->second);
            }
        return OmegaMap(n, std::move(upper));
    }
    throw std::invalid_argument("omega: expected one of 'catalog', 'constant', 'entries'");
}

inline ExperimentConfig config_from_json(const Json& j) {
    ExperimentConfig cfg;
    const Json& fam = j.at("family");
    cfg.family_name = fam.at("name").get<std::string>();
    if (fam.contains("params")) {
        const Json& p = fam.at("params");
        if (p.contains("C")) cfg.family_params.C = detail::rat_mat_from_json(p.at("C"));
        if (p.contains("u")) cfg.family_params.u = p.at("u").get<std::vector<std::vector<std::vector<long long>>>>();
        if (p.contains("lambda")) cfg.family_params.lambda = p.at("lambda").get<std::vector<long long>>();
    }
    cfg.N = j.at("N").get<int>();
    if (j.contains("g_phases")) cfg.g_phases = j.at("g_phases").get<std::vector<double>>();
    if (j.contains("hermitian_constant"))
        cfg.hermitian_constant = j.at("hermitian_constant").get<double>();
    cfg.omega_json = j.at("omega");
    if (j.contains("bs_point")) cfg.bs_point = j.at("bs_point").get<std::vector<long long>>();
    if (j.contains("t_list")) cfg.t_list = j.at("t_list").get<std::vector<double>>();
    if (j.contains("tolerances")) {
        cfg.trunc_eps = j.at("tolerances").value("trunc_eps", 1e-12);
        cfg.quad_tol = j.at("tolerances").value("quad_tol", 1e-9);
        cfg.grid.quad_tol = cfg.quad_tol;
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("approx")) cfg.approx = j.at("approx").get<bool>();
    if (j.contains("outputs")) {
        cfg.out_csv = j.at("outputs").value("csv", "");
        cfg.out_json = j.at("outputs").value("json", "");
    }
    if (j.contains("grid")) {
        const Json& g = j.at("grid");
        cfg.grid.base_panels = g.value("base_panels", cfg.grid.base_panels);
        cfg.grid.base_order = g.value("base_order", cfg.grid.base_order);
        cfg.grid.fiber_size = g.value("fiber_size", cfg.grid.fiber_size);
        cfg.grid.gauss_panels = g.value("gauss_panels", cfg.grid.gauss_panels);
        cfg.grid.gauss_order = g.value("gauss_order", cfg.grid.gauss_order);
    }
    if (j.contains("checks")) cfg.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("pairing")) {
        cfg.pairing_width = j.at("pairing").value("width", 0.5);
        cfg.pairing_scale = {j.at("pairing").value("scale_re", 2.0),
                             j.at("pairing").value("scale_im", 0.0)};
    }
    if (j.contains("eval_points")) cfg.eval_points = j.at("eval_points").get<int>();
    return cfg;
}

inline Json config_to_json(const ExperimentConfig& cfg) {
    Json j;
    j["family"]["name"] = cfg.family_name;
    if (!cfg.family_params.C.empty()) j["family"]["params"]["C"] = detail::rat_mat_to_json(cfg.family_params.C);
    if (!cfg.family_params.u.empty()) j["family"]["params"]["u"] = cfg.family_params.u;
    if (!cfg.family_params.lambda.empty()) j["family"]["params"]["lambda"] = cfg.family_params.lambda;
    j["N"] = cfg.N;
    if (!cfg.g_phases.empty()) j["g_phases"] = cfg.g_phases;
    j["hermitian_constant"] = cfg.hermitian_constant;
    j["omega"] = cfg.omega_json;
    if (!cfg.bs_point.empty()) j["bs_point"] = cfg.bs_point;
    if (!cfg.t_list.empty()) j["t_list"] = cfg.t_list;
    j["tolerances"]["trunc_eps"] = cfg.trunc_eps;
    j["tolerances"]["quad_tol"] = cfg.quad_tol;
    j["seed"] = cfg.seed;
    j["approx"] = cfg.approx;
    if (!cfg.out_csv.empty() || !cfg.out_json.empty()) {
        if (!cfg.out_csv.empty()) j["outputs"]["csv"] = cfg.out_csv;
        if (!cfg.out_json.empty()) j["outputs"]["json"] = cfg.out_json;
    }
    j["grid"]["base_panels"] = cfg.grid.base_panels;
    j["grid"]["base_order"] = cfg.grid.base_order;
    j["grid"]["fiber_size"] = cfg.grid.fiber_size;
    j["grid"]["gauss_panels"] = cfg.grid.gauss_panels;
    j["grid"]["gauss_order"] = cfg.grid.gauss_order;
    if (!cfg.checks.empty()) j["checks"] = cfg.checks;
    j["pairing"]["width"] = cfg.pairing_width;
    j["pairing"]["scale_re"] = cfg.pairing_scale.real();
    j["pairing"]["scale_im"] = cfg.pairing_scale.imag();
    j["eval_points"] = cfg.eval_points;
    return j;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    Json j = Json::parse(in);
    return config_from_json(j);
}

// ---------------------------------------------------------------------------
// Command implementations (shared between the CLI binary and the tests)
// ---------------------------------------------------------------------------

inline std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CheckReport {
    bool all_passed = true;
    std::string text;
};

inline CheckReport run_checks(const ExperimentConfig& cfg) {
    CheckReport rep;
    std::ostringstream os;
    // integrability is a classifier rather than a validity check, so it only
    // runs when asked for by name
    std::vector<std::string> wanted = cfg.checks;
    if (wanted.empty()) wanted = {"action_axioms", "liftable", "gamma_invariance"};
    ActionFamily fam = cfg.family();
    auto line = [&](const std::string& name, bool ok, const std::string& detail) {
        os << (ok ? "PASS" : "FAIL") << " " << name;
        if (!detail.empty()) os << ": " << detail;
        os << "\n";
        if (!ok) rep.all_passed = false;
    };
    for (const std::string& c : wanted) {
        if (c == "action_axioms") {
            AxiomReport r = verify_action_axioms(fam, 200, cfg.seed);
            line(c, r.pass, r.witness);
        } else if (c == "liftable") {
            LiftCheck r = check_liftable(fam, cfg.N, 200, cfg.seed);
            line(c, r.liftable, r.witness);
        } else if (c == "integrability") {
            IntegrabilityReport r = check_integrability(cfg.omega());
            std::ostringstream d;
            if (!r.integrable) d << "witness (" << r.i << "," << r.j << "," << r.k << ")";
            line(c, r.integrable, d.str());
        } else if (c == "gamma_invariance") {
            InvarianceReport r = check_gamma_invariance(cfg.omega(), fam, 100, cfg.seed);
            line(c, r.pass, r.witness);
        } else {
            throw std::invalid_argument("unknown check '" + c + "'");
        }
    }
    rep.text = os.str();
    return rep;
}

inline std::string bs_table_csv(const ExperimentConfig& cfg) {
    ActionFamily fam = cfg.family();
    std::ostringstream os;
    for (int i = 0; i < fam.n; ++i) os << (i ? "," : "") << "m_" << (i + 1);
    os << "\n";
    for (const BSPoint& p : bs_points(fam, cfg.N)) {
        for (int i = 0; i < fam.n; ++i) os << (i ? "," : "") << p.m[static_cast<std::size_t>(i)];
        os << "\n";
    }
    return os.str();
}

inline Json bs_table_json(const ExperimentConfig& cfg) {
    Json j;
    j["N"] = cfg.N;
    j["points"] = Json::array();
    for (const BSPoint& p : bs_points(cfg.family(), cfg.N)) j["points"].push_back(p.m);
    return j;
}

inline ThetaSection make_section(const ExperimentConfig& cfg, double t) {
    BSPoint bs{cfg.bs_point};
    return ThetaSection(cfg.lift(), scale_adiabatic(cfg.omega(), t), bs, cfg.trunc_eps,
                        cfg.approx);
}

inline std::string theta_eval_csv(const ExperimentConfig& cfg) {
    ActionFamily fam = cfg.family();
    double t = cfg.t_list.empty() ? 1.0 : cfg.t_list.front();
    ThetaSection sec = make_section(cfg, t);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXd chart = to_eigen(fam.fund_box.chart);
    Eigen::VectorXd off = to_eigen(fam.fund_box.offset);
    std::ostringstream os;
    for (int i = 0; i < fam.n; ++i) os << "x_" << (i + 1) << ",";
    for (int i = 0; i < fam.n; ++i) os << "y_" << (i + 1) << ",";
    os << "re,im,certified_error\n";
    for (int s = 0; s < cfg.eval_points; ++s) {
        Eigen::VectorXd tpt(fam.n);
        for (int i = 0; i < fam.n; ++i) tpt(i) = dist(rng);
        Eigen::VectorXd x = chart * tpt + off;
        std::vector<double> xs = to_std(x), ys(static_cast<std::size_t>(fam.n));
        for (auto& v : ys) v = dist(rng);
        std::complex<double> v = sec.eval(xs, ys);
        for (int i = 0; i < fam.n; ++i) os << format_g17(xs[static_cast<std::size_t>(i)]) << ",";
        for (int i = 0; i < fam.n; ++i) os << format_g17(ys[static_cast<std::size_t>(i)]) << ",";
        os << format_g17(v.real()) << "," << format_g17(v.imag()) << ","
           << format_g17(sec.tail_bound()) << "\n";
    }
    return os.str();
}

inline std::string norms_csv(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "t,p,value,closed_form,rel_err,tolerance\n";
    std::vector<double> ts = cfg.t_list.empty() ? std::vector<double>{1.0} : cfg.t_list;
    for (double t : ts) {
        ThetaSection sec = make_section(cfg, t);
        for (int p : {1, 2}) {
            LpNorm n = lp_norm(sec, p, cfg.grid);
            os << format_g17(t) << "," << p << "," << format_g17(n.value) << ","
               << format_g17(n.closed_form) << "," << format_g17(n.rel_err) << ","
               << format_g17(cfg.grid.quad_tol) << "\n";
        }
    }
    return os.str();
}

inline SweepResult run_sweep(const ExperimentConfig& cfg) {
    SweepConfig sc;
    sc.lift = cfg.lift();
    sc.omega = cfg.omega();
    sc.bs = BSPoint{cfg.bs_point};
    sc.approx = cfg.approx;
    sc.trunc_eps = cfg.trunc_eps;
    sc.grid = cfg.grid;
    sc.with_pairing = true;
    sc.pairing_seed = gaussian_seed(cfg.bs_point, cfg.N, cfg.pairing_width, cfg.pairing_scale);
    sc.with_residual = sc.lift.family.n >= 2;
    return adiabatic_sweep(sc, cfg.t_list);
}

inline std::string sweep_csv(const SweepResult& res) {
    std::ostringstream os;
    os << "t,quantity,value,closed_form,rel_err,tolerance\n";
    for (const SweepRecord& r : res.records) {
        if (!r.error.empty()) {
            os << format_g17(r.t) << ",error,nan,nan,nan,nan\n";
            continue;
        }
        os << format_g17(r.t) << "," << r.quantity << "," << format_g17(r.value) << ","
           << format_g17(r.closed_form) << "," << format_g17(r.rel_err) << ","
           << format_g17(r.tolerance) << "\n";
    }
    return os.str();
}

inline Json sweep_json(const SweepResult& res) {
    Json j;
    j["records"] = Json::array();
    for (const SweepRecord& r : res.records) {
        Json rec;
        rec["t"] = r.t;
        rec["quantity"] = r.quantity;
        rec["value"] = r.value;
        if (!std::isnan(r.closed_form)) rec["closed_form"] = r.closed_form;
        if (!std::isnan(r.rel_err)) rec["rel_err"] = r.rel_err;
        rec["tolerance"] = r.tolerance;
        if (!r.error.empty()) rec["error"] = r.error;
        j["records"].push_back(std::move(rec));
    }
    for (const auto& [k, v] : res.slopes) j["slopes"][k] = v;
    return j;
}

inline std::string jacobi_csv(const ExperimentConfig& cfg) {
    OmegaMap om = cfg.omega();
    if (!om.constant_entries())
        throw std::invalid_argument("jacobi: requires a constant Omega");
    ActionFamily fam = cfg.family();
    Eigen::MatrixXcd oconst = om.eval(std::vector<double>(static_cast<std::size_t>(fam.n), 0.0));
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::ostringstream os;
    for (int i = 0; i < fam.n; ++i) os << "m_" << (i + 1) << ",";
    os << "max_residual\n";
    for (const BSPoint& p : bs_points(fam, cfg.N)) {
        std::vector<std::pair<std::vector<double>, std::vector<double>>> pts;
        for (int s = 0; s < cfg.eval_points; ++s) {
            std::vector<double> x(static_cast<std::size_t>(fam.n)), y(static_cast<std::size_t>(fam.n));
            for (auto& v : x) v = 2.0 * dist(rng) - 1.0;
            for (auto& v : y) v = dist(rng);
            pts.push_back({x, y});
        }
        double r = relation_check(oconst, p, cfg.N, pts, cfg.trunc_eps);
        for (int i = 0; i < fam.n; ++i) os << p.m[static_cast<std::size_t>(i)] << ",";
        os << format_g17(r) << "\n";
    }
    return os.str();
}

}  // namespace latq
