#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ugit/error.hpp"
#include "ugit/invariants.hpp"
#include "ugit/jets.hpp"
#include "ugit/json_io.hpp"
#include "ugit/sl2.hpp"
#include "ugit/stability.hpp"
#include "ugit/svg.hpp"
#include "ugit/toric.hpp"

namespace {

using ugit::InputDocument;
using ugit::Json;
using ugit::Rat;

std::string g_command = "none";

unsigned env_threads() {
    const char* s = std::getenv("UGIT_THREADS");
    if (!s) return 1;
    long v = std::strtol(s, nullptr, 10);
    if (v < 1) return 1;
    if (v > 64) return 64;
    return static_cast<unsigned>(v);
}

void emit_report(Json input_echo, Json result, const std::string& out_path, bool text) {
    Json rep = ugit::report_envelope(g_command, std::move(input_echo), std::move(result));
    ugit::write_output(out_path, text ? ugit::render_text(rep) : ugit::to_text(rep));
}

Json doc_echo(const std::string& rep_path, const InputDocument& doc, Json params) {
    Json in;
    in["rep_file"] = rep_path;
    in["document"] = ugit::input_to_json(doc);
    in["params"] = std::move(params);
    return in;
}

Json params_echo(Json params) {
    Json in;
    in["params"] = std::move(params);
    return in;
}

const char* certificate_name(ugit::StabilityVerdict::Certificate c) {
    using C = ugit::StabilityVerdict::Certificate;
    switch (c) {
        case C::StableSweepGcd: return "StableSweepGcd";
        case C::NotInX0min: return "NotInX0min";
        case C::InZmin: return "InZmin";
        case C::InUSweep: return "InUSweep";
    }
    return "unknown";
}

Json verdict_to_json(const ugit::StabilityVerdict& v) {
    using C = ugit::StabilityVerdict::Certificate;
    Json j;
    j["status"] = v.status == ugit::StabilityVerdict::Status::Stable ? "Stable" : "Unstable";
    j["certificate"] = certificate_name(v.certificate);
    if (v.certificate == C::NotInX0min) {
        j["lowest_weight"] = v.lowest_weight;
    } else {
        Json s;
        s["already_in_vmin"] = v.sweep.already_in_vmin;
        s["gcd_degree"] = v.sweep.gcd.degree();
        s["witness_found"] = v.sweep.witness_found;
        if (v.sweep.witness_found) s["witness"] = ugit::rat_to_json(v.sweep.witness);
        j["sweep"] = std::move(s);
    }
    return j;
}

// Shared --chi/--c/--symbolic-eps handling; flags override the document twist.
struct TwistOpts {
    long long chi = 0;
    long long c = 1;
    bool symbolic = false;
    CLI::Option* chi_opt = nullptr;
    CLI::Option* c_opt = nullptr;

    void reg(CLI::App* sub) {
        chi_opt = sub->add_option("--chi", chi, "Character numerator");
        c_opt = sub->add_option("--c", c, "Character tensor power (positive)");
        CLI::Option* sym = sub->add_flag("--symbolic-eps", symbolic,
                                         "Use the symbolic well-adapted character omega_min + eps");
        chi_opt->needs(c_opt);
        c_opt->needs(chi_opt);
        sym->excludes(chi_opt);
        sym->excludes(c_opt);
    }

    std::optional<ugit::CharacterTwist> resolve(const InputDocument& doc) const {
        if (symbolic) return ugit::CharacterTwist::well_adapted();
        if (chi_opt->count() > 0) return ugit::CharacterTwist::exact(chi, c);
        return doc.twist;
    }
};

long long default_n_param(const ugit::Sl2Decomposition& dec, const ugit::WeightProfile& prof) {
    long long need = 0;
    for (const ugit::Sl2Block& b : dec.blocks) need = std::max(need, b.a - 2 * prof.omega_min);
    return need + 1;
}

std::vector<ugit::WeightTableRow> build_table(const InputDocument& doc, const TwistOpts& twist,
                                              const CLI::Option* n_opt, long long n_flag,
                                              long long& n_used, ugit::Sl2Decomposition& dec) {
    ugit::require_valid(doc.rep);
    dec = ugit::decompose_sl2(doc.rep);
    ugit::WeightProfile prof = ugit::weight_profile(doc.rep);
    ugit::CharacterTwist t =
        twist.resolve(doc).value_or(ugit::CharacterTwist::well_adapted());
    n_used = n_opt->count() > 0 ? n_flag
                                : doc.n_param.value_or(default_n_param(dec, prof));
    return ugit::hm_table(dec, prof, t, n_used);
}

std::string table_csv(const std::vector<ugit::WeightTableRow>& rows) {
    std::string csv = "fixed_point,block,position,w1,w2\n";
    for (const ugit::WeightTableRow& r : rows)
        csv += r.fixed_point + "," + std::to_string(r.block) + "," + std::to_string(r.position) +
               "," + r.w1.str() + "," + r.w2.str() + "\n";
    return csv;
}

struct ValidateCmd {
    std::string rep_path, out;
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("validate", "Structural checks on an input document");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        sub->add_option("-o,--out", out, "Write the report to a file");
        sub->add_flag("--text", text, "Human-readable rendering");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "validate";
        InputDocument doc = ugit::load_input(rep_path);
        std::vector<ugit::Diagnostic> diags = ugit::validate_rep(doc.rep);
        Json list = Json::array();
        for (const ugit::Diagnostic& d : diags) {
            Json e;
            e["code"] = d.code;
            e["message"] = d.message;
            list.push_back(std::move(e));
        }
        Json res;
        res["valid"] = diags.empty();
        res["diagnostics"] = std::move(list);
        emit_report(doc_echo(rep_path, doc, Json::object()), std::move(res), out, text);
    }
};

struct ProfileCmd {
    std::string rep_path, out;
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("profile", "Torus weight profile of the rep");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        sub->add_option("-o,--out", out, "Write the report to a file");
        sub->add_flag("--text", text, "Human-readable rendering");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "profile";
        InputDocument doc = ugit::load_input(rep_path);
        ugit::require_valid(doc.rep);
        ugit::WeightProfile p = ugit::weight_profile(doc.rep);
        Json res;
        res["distinct"] = p.distinct;
        res["multiplicity"] = p.multiplicity;
        res["indices"] = p.indices;
        res["omega_min"] = p.omega_min;
        res["omega_max"] = p.omega_max;
        res["v_min_indices"] = p.v_min_indices;
        res["gaps"] = p.gaps;
        emit_report(doc_echo(rep_path, doc, Json::object()), std::move(res), out, text);
    }
};

struct DecomposeCmd {
    std::string rep_path, out, weight_step = "ell";
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("decompose", "SL(2) block decomposition");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        sub->add_option("--weight-step", weight_step, "Chain weight ladder step (1 or ell)")
            ->check(CLI::IsMember({"1", "ell"}));
        sub->add_option("-o,--out", out, "Write the report to a file");
        sub->add_flag("--text", text, "Human-readable rendering");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "decompose";
        InputDocument doc = ugit::load_input(rep_path);
        ugit::require_valid(doc.rep);
        ugit::Sl2Decomposition dec = ugit::decompose_sl2(doc.rep);
        ugit::WeightProfile prof = ugit::weight_profile(doc.rep);
        long long step = weight_step == "1" ? 1 : dec.grade;

        Json chains = Json::array();
        for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
            const ugit::Sl2Block& b = dec.blocks[i];
            Json e;
            e["block"] = i;
            e["b0_weight"] = b.b0_weight;
            std::vector<long long> measured;
            Json predicted = Json::array();
            for (unsigned j = 0; j <= b.l; ++j) {
                measured.push_back(b.b0_weight + dec.grade * static_cast<long long>(j));
                predicted.push_back(
                    ugit::rat_to_json(ugit::predicted_chain_weight(b.a, b.l, dec.grade, j, step)));
            }
            e["measured_weights"] = measured;
            e["predicted_weights"] = std::move(predicted);
            chains.push_back(std::move(e));
        }

        Json res;
        res["decomposition"] = ugit::decomposition_to_json(dec);
        res["exceptional_blocks"] = ugit::exceptional_indices(dec, prof);
        res["weight_step"] = weight_step;
        res["chain_weights"] = std::move(chains);
        Json params;
        params["weight_step"] = weight_step;
        emit_report(doc_echo(rep_path, doc, std::move(params)), std::move(res), out, text);
    }
};

struct SsCheckCmd {
    std::string rep_path, out;
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("ss-check", "ss=s condition for the rep");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        sub->add_option("-o,--out", out, "Write the report to a file");
        sub->add_flag("--text", text, "Human-readable rendering");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "ss-check";
        InputDocument doc = ugit::load_input(rep_path);
        ugit::require_valid(doc.rep);
        Json res;
        if (doc.rep.lie_basis.size() == 1) {
            ugit::SsEqSReport r = ugit::check_ss_eq_s_dim1(doc.rep);
            Json d;
            d["holds"] = r.holds;
            if (!r.holds) d["kernel_witness"] = ugit::vec_to_json(r.kernel_witness);
            res["dim1"] = std::move(d);
        }
        if (doc.rep.structure_consts) {
            ugit::SsGeneralReport r = ugit::check_ss_eq_s_general(doc.rep, {});
            Json d;
            d["holds"] = r.holds;
            d["enumerated_all"] = r.enumerated_all;
            Json steps = Json::array();
            for (const ugit::SsGeneralStep& s : r.steps) {
                Json e;
                e["subalgebra"] = s.subalgebra;
                e["xi"] = s.xi;
                e["holds"] = s.holds;
                steps.push_back(std::move(e));
            }
            d["steps"] = std::move(steps);
            res["general"] = std::move(d);
        }
        if (res.empty())
            ugit::fail("MissingStructureConsts",
                       "multi-generator ss-check needs structure constants");
        emit_report(doc_echo(rep_path, doc, Json::object()), std::move(res), out, text);
    }
};

struct StabilityCmd {
    std::string rep_path, out;
    std::vector<std::string> point_strs;
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("stability", "Classify points of P(V)");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        sub->add_option("--point", point_strs, "Point as CSV of rationals (repeatable)");
        sub->add_option("-o,--out", out, "Write the report to a file");
        sub->add_flag("--text", text, "Human-readable rendering");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "stability";
        InputDocument doc = ugit::load_input(rep_path);
        ugit::require_valid(doc.rep);
        std::vector<std::vector<Rat>> pts;
        for (const std::string& s : point_strs) {
            std::vector<Rat> p = ugit::parse_point_csv(s);
            if (p.size() != doc.rep.dim_v)
                ugit::fail("BadPoint", "point '" + s + "' does not match dim_v");
            pts.push_back(std::move(p));
        }
        if (pts.empty()) pts = doc.points;
        if (pts.empty())
            ugit::fail("BadInput", "no points: pass --point or a points list in the document");

        std::vector<ugit::StabilityVerdict> verdicts =
            ugit::classify_points(doc.rep, pts, env_threads());
        Json rows = Json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Json e;
            e["point"] = ugit::vec_to_json(pts[i]);
            e["verdict"] = verdict_to_json(verdicts[i]);
            rows.push_back(std::move(e));
        }
        Json res;
        res["verdicts"] = std::move(rows);
        Json params;
        params["threads"] = env_threads();
        emit_report(doc_echo(rep_path, doc, std::move(params)), std::move(res), out, text);
    }
};

struct TableCmd {
    std::string rep_path, out;
    TwistOpts twist;
    long long n_param = 0;
    CLI::Option* n_opt = nullptr;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("table", "Fixed-point weight table as CSV");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        twist.reg(sub);
        n_opt = sub->add_option("-N,--n-param", n_param,
                                "Projective-line twisting parameter (default: minimal valid)");
        sub->add_option("-o,--out", out, "Write the CSV to a file");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "table";
        InputDocument doc = ugit::load_input(rep_path);
        long long n_used = 0;
        ugit::Sl2Decomposition dec;
        std::vector<ugit::WeightTableRow> rows = build_table(doc, twist, n_opt, n_param, n_used, dec);
        ugit::write_output(out, table_csv(rows));
    }
};

struct PlotCmd {
    std::string rep_path, out;
    TwistOpts twist;
    long long n_param = 0;
    CLI::Option* n_opt = nullptr;
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("plot", "Weight diagram as SVG");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        twist.reg(sub);
        n_opt = sub->add_option("-N,--n-param", n_param,
                                "Projective-line twisting parameter (default: minimal valid)");
        sub->add_option("-o,--out", out, "SVG output path")->required();
        sub->add_flag("--text", text, "Human-readable confirmation report");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "plot";
        InputDocument doc = ugit::load_input(rep_path);
        long long n_used = 0;
        ugit::Sl2Decomposition dec;
        std::vector<ugit::WeightTableRow> rows = build_table(doc, twist, n_opt, n_param, n_used, dec);
        ugit::emit_svg(rows, dec.grade, n_used, out);
        Json res;
        res["path"] = out;
        res["rows"] = rows.size();
        res["n_param"] = n_used;
        Json params;
        params["n_param"] = n_used;
        emit_report(doc_echo(rep_path, doc, std::move(params)), std::move(res), "", text);
    }
};

struct InvariantsCmd {
    std::string rep_path, out;
    TwistOpts twist;
    unsigned probe_limit = 4;
    unsigned long cap = ugit::kDefaultMonomialCap;
    CLI::Option* k_opt = nullptr;
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("invariants", "Twisted invariant ring probe");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        twist.reg(sub);
        k_opt = sub->add_option("-K,--K,--levels", probe_limit, "Probe levels 1..K (default 4)");
        sub->add_option("--monomial-cap", cap, "Monomial enumeration guard");
        sub->add_option("-o,--out", out, "Write the report to a file");
        sub->add_flag("--text", text, "Human-readable rendering");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "invariants";
        InputDocument doc = ugit::load_input(rep_path);
        ugit::require_valid(doc.rep);
        std::optional<ugit::CharacterTwist> t = twist.resolve(doc);
        if (!t || t->symbolic)
            ugit::fail("BadTwist", "invariants needs an exact --chi/--c character");
        unsigned levels = k_opt->count() > 0 ? probe_limit : doc.probe_limit.value_or(probe_limit);

        std::vector<std::pair<unsigned, std::size_t>> hf =
            ugit::hilbert_function(doc.rep, *t, levels, cap);
        ugit::GeneratorProbe probe = ugit::generator_probe(doc.rep, *t, levels, cap);

        Json hf_json = Json::array();
        for (const auto& [k, dim] : hf) hf_json.push_back(Json::array({k, dim}));

        Json gens = Json::array();
        Json level_stats = Json::array();
        for (const ugit::ProbeLevel& lv : probe.levels) {
            Json st;
            st["level"] = lv.level;
            st["degree"] = lv.degree;
            st["slice_dim"] = lv.slice_dim;
            st["product_dim"] = lv.product_dim;
            st["new_generators"] = lv.new_generators.size();
            level_stats.push_back(std::move(st));
            if (lv.new_generators.empty()) continue;
            Json e;
            e["level"] = lv.level;
            e["degree"] = lv.degree;
            Json polys = Json::array();
            for (const ugit::MPoly& f : lv.new_generators) polys.push_back(ugit::poly_to_json(f));
            e["polys"] = std::move(polys);
            gens.push_back(std::move(e));
        }

        Json stab;
        stab["probe_limit"] = probe.probe_limit;
        stab["last_new_level"] = probe.last_new_level;
        stab["levels"] = std::move(level_stats);

        Json res;
        res["twist"] = ugit::twist_to_json(*t);
        res["hilbert_function"] = std::move(hf_json);
        res["generators"] = std::move(gens);
        res["stabilization"] = std::move(stab);
        Json params;
        params["K"] = levels;
        params["monomial_cap"] = cap;
        emit_report(doc_echo(rep_path, doc, std::move(params)), std::move(res), out, text);
    }
};

struct LocalizeCmd {
    std::string rep_path, out, sigma_str;
    unsigned max_degree = 0;
    unsigned long cap = ugit::kDefaultMonomialCap;
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("localize", "Invariant generators after inverting a section");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        sub->add_option("--sigma", sigma_str, "Degree-one section: 'x1' or CSV coefficients")
            ->required();
        sub->add_option("-D,--max-degree", max_degree, "Probe degree bound")->required();
        sub->add_option("--monomial-cap", cap, "Monomial enumeration guard");
        sub->add_option("-o,--out", out, "Write the report to a file");
        sub->add_flag("--text", text, "Human-readable rendering");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "localize";
        InputDocument doc = ugit::load_input(rep_path);
        ugit::require_valid(doc.rep);
        ugit::MPoly sigma = ugit::parse_linear_section(sigma_str, doc.rep.dim_v);
        std::vector<ugit::LocalGenerator> gens =
            ugit::localize_at_min_section(doc.rep, sigma, max_degree, cap);
        Json list = Json::array();
        for (const ugit::LocalGenerator& g : gens) {
            Json e;
            e["level"] = g.level;
            e["poly"] = ugit::poly_to_json(g.gen);
            list.push_back(std::move(e));
        }
        Json res;
        res["sigma"] = ugit::poly_to_json(sigma);
        res["max_degree"] = max_degree;
        res["generators"] = std::move(list);
        Json params;
        params["sigma"] = sigma_str;
        params["max_degree"] = max_degree;
        params["monomial_cap"] = cap;
        emit_report(doc_echo(rep_path, doc, std::move(params)), std::move(res), out, text);
    }
};

struct JetsCmd {
    unsigned n = 0, k = 0, m_max = 0;
    unsigned long cap = ugit::kDefaultMonomialCap;
    std::string out;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("jets", "Jet reparametrization groups");
        sub->add_option("--n", n, "Number of jet components")->required();
        sub->add_option("--k", k, "Jet order")->required();
        sub->require_subcommand(1);

        CLI::App* emit = sub->add_subcommand("emit-rep", "Write the jet rep as an input document");
        emit->add_option("-o,--out", out, "Output path (default stdout)");
        emit->callback([this] { run_emit(); });

        CLI::App* ds = sub->add_subcommand("ds-dims", "Invariant dimensions by weighted degree (CSV)");
        ds->add_option("--m-max", m_max, "Largest weighted degree")->required();
        ds->add_option("--monomial-cap", cap, "Monomial enumeration guard");
        ds->add_option("-o,--out", out, "Output path (default stdout)");
        ds->callback([this] { run_ds(); });
    }

    void run_emit() {
        g_command = "jets emit-rep";
        InputDocument doc;
        doc.rep = ugit::jet_rep(n, k);
        ugit::write_output(out, ugit::to_text(ugit::input_to_json(doc)));
    }

    void run_ds() {
        g_command = "jets ds-dims";
        std::vector<std::pair<unsigned, std::size_t>> dims =
            ugit::demailly_semple_dims(n, k, m_max, env_threads(), cap);
        std::string csv = "m,dim\n";
        for (const auto& [m, d] : dims) csv += std::to_string(m) + "," + std::to_string(d) + "\n";
        ugit::write_output(out, csv);
    }
};

struct ToricCmd {
    std::string degrees, out;
    unsigned factor_cap = 64;
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("toric", "Unipotent automorphism structure from a Cox grading");
        sub->add_option("--degrees", degrees, "Variable degrees, e.g. \"1;1;2\" or \"1,0;0,1\"")
            ->required();
        sub->add_option("--factor-cap", factor_cap, "Enumeration guard for non-positive gradings");
        sub->add_option("-o,--out", out, "Write the report to a file");
        sub->add_flag("--text", text, "Human-readable rendering");
        sub->callback([this] { run(); });
    }

    void run() {
        g_command = "toric";
        ugit::ToricGradingSpec spec;
        spec.factor_cap = factor_cap;
        std::stringstream ss(degrees);
        std::string part;
        while (std::getline(ss, part, ';')) {
            std::vector<Rat> rats = ugit::parse_point_csv(part);
            std::vector<long long> v;
            for (const Rat& r : rats) {
                if (!r.is_integer() || !r.numerator().fits_slong_p())
                    ugit::fail("BadGrading", "degree entries must be small integers");
                v.push_back(r.numerator().get_si());
            }
            spec.degrees.push_back(std::move(v));
        }
        ugit::ToricAutReport rep = ugit::toric_aut_structure(spec);

        Json per = Json::array();
        for (const ugit::ToricAlphaReport& a : rep.per_alpha) {
            Json e;
            e["alpha"] = a.alpha;
            e["sprime_vars"] = a.sprime_vars;
            e["sprime_dim"] = a.sprime_dim;
            e["sdouble_dim"] = a.sdouble_dim;
            Json hist = Json::array();
            for (const auto& [factors, count] : a.factor_histogram)
                hist.push_back(Json::array({factors, count}));
            e["factor_histogram"] = std::move(hist);
            per.push_back(std::move(e));
        }
        Json res;
        res["per_alpha"] = std::move(per);
        res["dim_u"] = rep.dim_u;
        res["weights"] = rep.weights;
        res["reductive_dims"] = rep.reductive_dims;
        Json params;
        params["degrees"] = degrees;
        params["factor_cap"] = factor_cap;
        emit_report(params_echo(std::move(params)), std::move(res), out, text);
    }
};

struct CrossValidateCmd {
    std::string rep_path, out, point_str;
    unsigned samples = 25;
    unsigned long long seed = 1;
    bool text = false;

    void reg(CLI::App& app) {
        CLI::App* sub =
            app.add_subcommand("cross-validate", "Check a verdict against the fixed-point analysis");
        sub->add_option("--rep", rep_path, "Input document (JSON)")->required();
        sub->add_option("--point", point_str, "Point as CSV of rationals")->required();
        sub->add_option("--samples", samples, "Number of random SL(2,Q) samples (default 25)");
        sub->add_option("--seed", seed, "Sample generator seed (default 1)");
        sub->add_option("-o,--out", out, "Write the report to a file");
        sub->add_flag("--text", text, "Human-readable rendering");
        sub->callback([this] { run(); });
    }

    static ugit::SL2 mul(const ugit::SL2& x, const ugit::SL2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }

    void run() {
        g_command = "cross-validate";
        InputDocument doc = ugit::load_input(rep_path);
        ugit::require_valid(doc.rep);
        std::vector<Rat> v = ugit::parse_point_csv(point_str);
        if (v.size() != doc.rep.dim_v)
            ugit::fail("BadPoint", "point does not match dim_v");

        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(-3, 3);
        std::uniform_int_distribution<int> den(1, 3);
        auto rand_rat = [&] { return Rat(num(rng), den(rng)); };
        std::vector<ugit::SL2> gs;
        for (unsigned i = 0; i < samples; ++i) {
            ugit::SL2 upper1{Rat(1), rand_rat(), Rat(0), Rat(1)};
            ugit::SL2 lower{Rat(1), Rat(0), rand_rat(), Rat(1)};
            ugit::SL2 upper2{Rat(1), rand_rat(), Rat(0), Rat(1)};
            gs.push_back(mul(mul(upper1, lower), upper2));
        }

        ugit::CrossValidationReport rep = ugit::cross_validate(doc.rep, v, gs);
        Json res;
        res["verdict"] = verdict_to_json(rep.verdict);
        res["samples_checked"] = rep.samples_checked;
        res["stable_violations"] = rep.stable_violations;
        res["identity_destabilizes"] = rep.identity_destabilizes;
        res["destabilizer_found"] = rep.destabilizer_found;
        if (rep.destabilizer_found)
            res["destabilizer"] = rep.destabilizer_sample == gs.size()
                                      ? Json("identity")
                                      : Json(rep.destabilizer_sample);
        else
            res["destabilizer"] = nullptr;
        Json params;
        params["point"] = point_str;
        params["samples"] = samples;
        params["seed"] = seed;
        emit_report(doc_echo(rep_path, doc, std::move(params)), std::move(res), out, text);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for graded unipotent group actions"};
    app.set_version_flag("--version", ugit::kToolVersion);
    app.require_subcommand(1);

    ValidateCmd validate_cmd;
    ProfileCmd profile_cmd;
    DecomposeCmd decompose_cmd;
    SsCheckCmd ss_check_cmd;
    StabilityCmd stability_cmd;
    TableCmd table_cmd;
    PlotCmd plot_cmd;
    InvariantsCmd invariants_cmd;
    LocalizeCmd localize_cmd;
    JetsCmd jets_cmd;
    ToricCmd toric_cmd;
    CrossValidateCmd cross_validate_cmd;

    validate_cmd.reg(app);
    profile_cmd.reg(app);
    decompose_cmd.reg(app);
    ss_check_cmd.reg(app);
    stability_cmd.reg(app);
    table_cmd.reg(app);
    plot_cmd.reg(app);
    invariants_cmd.reg(app);
    localize_cmd.reg(app);
    jets_cmd.reg(app);
    toric_cmd.reg(app);
    cross_validate_cmd.reg(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e, std::cout, std::cerr);
        return 2;
    } catch (const ugit::Error& e) {
        Json j;
        j["tool"] = ugit::kToolName;
        j["version"] = ugit::kToolVersion;
        j["command"] = g_command;
        Json err;
        err["code"] = e.code();
        err["message"] = e.what();
        j["error"] = std::move(err);
        std::cout << ugit::to_text(j);
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["tool"] = ugit::kToolName;
        j["version"] = ugit::kToolVersion;
        j["command"] = g_command;
        Json err;
        err["code"] = "Internal";
        err["message"] = e.what();
        j["error"] = std::move(err);
        std::cout << ugit::to_text(j);
        return 1;
    }
    return 0;
}
