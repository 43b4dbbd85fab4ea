#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "relvel/einstein.hpp"
#include "relvel/lawlab.hpp"
#include "relvel/recsym.hpp"
#include "relvel/vecio.hpp"

using json = nlohmann::ordered_json;
using namespace relvel;
namespace ll = relvel::lawlab;

namespace {

// ---------------------------------------------------------------------------
// record plumbing

json base_record(const std::string& command) {
    json rec;
    rec["schema_version"] = "1";
    rec["command"] = command;
    rec["inputs"] = json::object();
    rec["result"] = json::object();
    rec["diagnostics"] = json::object();
    return rec;
}

json vec_json(const CVec3& v) {
    return {{"re", {v.x.real(), v.y.real(), v.z.real()}},
            {"im", {v.x.imag(), v.y.imag(), v.z.imag()}}};
}

json scalar_json(CScalar s) { return {{"re", s.real()}, {"im", s.imag()}}; }

json vec_strings(const std::vector<CVec3>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(canonical(v));
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += '\n';
    return out;
}

std::string join_vecs(const std::vector<CVec3>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += '|';
        out += canonical(vs[i]);
    }
    return out;
}

CVec3 parse_vec_arg(const std::string& flag, const std::string& text) {
    const auto v = parse_cvec3(text);
    if (!v) {
        throw std::invalid_argument(flag + ": could not parse vector '" + text + "'");
    }
    return *v;
}

// ---------------------------------------------------------------------------
// law report rendering

json report_json(const ll::LawReport& rep, ll::Regime regime) {
    json out;
    out["law"] = ll::to_string(rep.law);
    out["op"] = ll::to_string(rep.op);
    out["regime"] = ll::to_string(regime);
    out["samples"] = rep.samples;
    out["skips"] = rep.skips;
    out["violations"] = rep.violations;
    out["max_defect"] = rep.max_defect;
    out["mean_defect"] = rep.mean_defect;
    out["tol"] = rep.tol;
    out["verdict"] = ll::to_string(rep.verdict);
    out["worst_index"] = rep.worst_index;
    out["worst_input"] = vec_strings(rep.worst_input);
    return out;
}

const std::vector<std::string> kReportCsvHeader = {
    "law",        "op",          "regime", "samples", "skips",       "violations",
    "max_defect", "mean_defect", "tol",    "verdict", "worst_index", "worst_input"};

std::vector<std::string> report_csv(const ll::LawReport& rep, ll::Regime regime) {
    return {ll::to_string(rep.law),
            ll::to_string(rep.op),
            ll::to_string(regime),
            std::to_string(rep.samples),
            std::to_string(rep.skips),
            std::to_string(rep.violations),
            canonical(rep.max_defect),
            canonical(rep.mean_defect),
            canonical(rep.tol),
            ll::to_string(rep.verdict),
            std::to_string(rep.worst_index),
            join_vecs(rep.worst_input)};
}

// ---------------------------------------------------------------------------
// subcommand state

struct AddArgs {
    std::string law;
    std::string a, b;
    double c = 1.0;
    std::string format = "text";
};

struct RelativeArgs {
    std::string law;
    std::string observer, object;
    double c = 1.0;
    std::string format = "text";
};

struct CheckArgs {
    std::string law_id;
    std::string op;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 42;
    double tol = 0.0;  // 0 = per-law default
    std::string regime = "uniform_ball";
    double max_beta = 0.999;
    double c = 1.0;
    unsigned threads = 1;
    std::string format = "json";
    std::string shrink = "on";  // hunt only
};

struct SuiteArgs {
    std::uint64_t seed = 42;
    std::uint64_t samples = 10000;
    double max_beta = 0.999;
    double c = 1.0;
    unsigned threads = 1;
    std::string format = "json";
};

ll::SamplerConfig sampler_config(const CheckArgs& args) {
    ll::SamplerConfig cfg;
    cfg.seed = args.seed;
    cfg.count = args.samples;
    cfg.c = LightSpeed{args.c};
    cfg.max_beta = args.max_beta;
    cfg.regime = *ll::parse_regime(args.regime);
    return cfg;
}

// ---------------------------------------------------------------------------
// add / relative

int run_add(const AddArgs& args) {
    const LightSpeed ctx{args.c};
    const CVec3 a = parse_vec_arg("--a", args.a);
    const CVec3 b = parse_vec_arg("--b", args.b);

    json rec = base_record("add");
    rec["inputs"] = {{"law", args.law}, {"a", canonical(a)}, {"b", canonical(b)}, {"c", args.c}};

    CVec3 w;
    CScalar denom;
    if (args.law == "einstein") {
        const EinsteinSum s = einstein_add(Velocity(a, ctx), Velocity(b, ctx));
        w = s.w.vec();
        denom = CScalar{s.denom};
    } else {
        const RSum s = rs_add(a, b, ctx);
        w = s.w;
        denom = s.denom;
    }
    rec["result"] = {{"w", vec_json(w)}, {"w_canonical", canonical(w)}};
    rec["diagnostics"] = {{"denom", scalar_json(denom)}};

    if (args.format == "json") {
        std::cout << rec.dump(2) << "\n";
    } else {
        std::cout << "w = " << pretty(w) << "\n";
        std::cout << "denom = " << pretty(denom) << "\n";
    }
    return 0;
}

int run_relative(const RelativeArgs& args) {
    const LightSpeed ctx{args.c};
    const CVec3 observer = parse_vec_arg("--observer", args.observer);
    const CVec3 object = parse_vec_arg("--object", args.object);

    json rec = base_record("relative");
    rec["inputs"] = {{"law", args.law},
                     {"observer", canonical(observer)},
                     {"object", canonical(object)},
                     {"c", args.c}};

    CVec3 w, w_tilde;
    CScalar denom, denom_tilde;
    if (args.law == "einstein") {
        const EinsteinSum fwd = relative_velocity(Velocity(observer, ctx), Velocity(object, ctx));
        const EinsteinSum bwd = relative_velocity(Velocity(object, ctx), Velocity(observer, ctx));
        w = fwd.w.vec();
        w_tilde = bwd.w.vec();
        denom = CScalar{fwd.denom};
        denom_tilde = CScalar{bwd.denom};
    } else {
        const RSum fwd = rs_relative_velocity(observer, object, ctx);
        const RSum bwd = rs_relative_velocity(object, observer, ctx);
        w = fwd.w;
        w_tilde = bwd.w;
        denom = fwd.denom;
        denom_tilde = bwd.denom;
    }
    const double defect = norm_hermitian(w_tilde + w);

    rec["result"] = {{"w", vec_json(w)},
                     {"w_canonical", canonical(w)},
                     {"w_tilde", vec_json(w_tilde)},
                     {"w_tilde_canonical", canonical(w_tilde)},
                     {"reciprocity_defect", defect}};
    rec["diagnostics"] = {{"denom", scalar_json(denom)},
                          {"denom_tilde", scalar_json(denom_tilde)}};

    if (args.format == "json") {
        std::cout << rec.dump(2) << "\n";
    } else {
        std::cout << "w = " << pretty(w) << "\n";
        std::cout << "w_tilde = " << pretty(w_tilde) << "\n";
        std::cout << "reciprocity_defect = " << pretty(defect) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check / hunt

int run_check(const CheckArgs& args) {
    const ll::LawId law = *ll::parse_law_id(args.law_id);
    const ll::OpId op = *ll::parse_op_id(args.op);
    const double tol = args.tol > 0.0 ? args.tol : ll::default_tol(law);
    const auto cfg = sampler_config(args);

    const ll::LawReport rep = ll::check(law, op, cfg, tol, args.threads);

    json rec = base_record("check");
    rec["inputs"] = {{"law_id", args.law_id},     {"op", args.op},   {"samples", args.samples},
                     {"seed", args.seed},         {"tol", tol},      {"regime", args.regime},
                     {"max_beta", args.max_beta}, {"c", args.c}};
    rec["result"] = report_json(rep, cfg.regime);
    rec["diagnostics"] = {{"skips", rep.skips}};

    if (args.format == "csv") {
        std::cout << csv_row(kReportCsvHeader) << csv_row(report_csv(rep, cfg.regime));
    } else {
        std::cout << rec.dump(2) << "\n";
    }
    return rep.verdict == ll::Verdict::holds ? 0 : 1;
}

int run_hunt(const CheckArgs& args) {
    const ll::LawId law = *ll::parse_law_id(args.law_id);
    const ll::OpId op = *ll::parse_op_id(args.op);
    const double tol = args.tol > 0.0 ? args.tol : ll::default_tol(law);
    const auto cfg = sampler_config(args);
    const bool shrink = args.shrink == "on";

    const auto ce = ll::hunt_and_shrink(law, op, cfg, tol, shrink);

    json rec = base_record("hunt");
    rec["inputs"] = {{"law_id", args.law_id},     {"op", args.op}, {"samples", args.samples},
                     {"seed", args.seed},         {"tol", tol},    {"regime", args.regime},
                     {"max_beta", args.max_beta}, {"c", args.c},   {"shrink", shrink}};
    if (ce) {
        rec["result"] = {{"found", true},
                         {"law", ll::to_string(ce->law)},
                         {"op", ll::to_string(ce->op)},
                         {"inputs", vec_strings(ce->inputs)},
                         {"defect", ce->defect},
                         {"tol", tol},
                         {"shrink_steps", ce->shrink_steps},
                         {"found_index", ce->found_index}};
    } else {
        rec["result"] = {{"found", false}, {"samples_tried", args.samples}};
    }

    if (args.format == "csv") {
        std::cout << csv_row(
            {"law", "op", "found", "defect", "shrink_steps", "found_index", "inputs"});
        if (ce) {
            std::cout << csv_row({ll::to_string(ce->law), ll::to_string(ce->op), "true",
                                  canonical(ce->defect), std::to_string(ce->shrink_steps),
                                  std::to_string(ce->found_index), join_vecs(ce->inputs)});
        } else {
            std::cout << csv_row({args.law_id, args.op, "false", "", "", "", ""});
        }
    } else {
        std::cout << rec.dump(2) << "\n";
    }
    return ce ? 0 : 1;
}

// ---------------------------------------------------------------------------
// suite: the full claims battery

struct CheckEntry {
    const char* name;
    ll::LawId law;
    ll::OpId op;
    ll::Regime regime;
    ll::Verdict expected;
};

struct WitnessEntry {
    const char* name;
    ll::LawId law;
    ll::OpId op;
    std::vector<CVec3> inputs;  // at c = 1; scaled by c before evaluating
};

// Verdict expectations encode the claims under test: Einstein composition must
// fail reciprocity, associativity and the reversed negation law (except for
// parallel inputs), while the reciprocal-symmetric composition must satisfy
// them and fail only commutativity and the same-order negation law.
const std::vector<CheckEntry> kCheckBattery = {
    {"einstein_identity", ll::LawId::identity, ll::OpId::einstein, ll::Regime::uniform_ball,
     ll::Verdict::holds},
    {"einstein_inverse", ll::LawId::inverse, ll::OpId::einstein, ll::Regime::uniform_ball,
     ll::Verdict::holds},
    {"einstein_commutativity", ll::LawId::commutativity, ll::OpId::einstein,
     ll::Regime::uniform_ball, ll::Verdict::violated},
    {"einstein_reciprocity", ll::LawId::reciprocity, ll::OpId::einstein, ll::Regime::uniform_ball,
     ll::Verdict::violated},
    {"einstein_reciprocity_parallel", ll::LawId::reciprocity, ll::OpId::einstein,
     ll::Regime::collinear, ll::Verdict::holds},
    {"einstein_associativity", ll::LawId::associativity, ll::OpId::einstein,
     ll::Regime::uniform_ball, ll::Verdict::violated},
    {"einstein_negation_reversed", ll::LawId::negation_reversed, ll::OpId::einstein,
     ll::Regime::uniform_ball, ll::Verdict::violated},
    {"einstein_negation_same_order", ll::LawId::negation_same_order, ll::OpId::einstein,
     ll::Regime::uniform_ball, ll::Verdict::holds},
    {"einstein_magnitude_commutativity", ll::LawId::magnitude_commutativity, ll::OpId::einstein,
     ll::Regime::uniform_ball, ll::Verdict::holds},
    {"einstein_closure_ball", ll::LawId::subluminal_closure, ll::OpId::einstein,
     ll::Regime::uniform_ball, ll::Verdict::holds},
    {"einstein_closure_near_c", ll::LawId::subluminal_closure, ll::OpId::einstein,
     ll::Regime::near_lightspeed, ll::Verdict::holds},
    {"rs_identity", ll::LawId::identity, ll::OpId::recsym, ll::Regime::uniform_ball,
     ll::Verdict::holds},
    {"rs_inverse", ll::LawId::inverse, ll::OpId::recsym, ll::Regime::uniform_ball,
     ll::Verdict::holds},
    {"rs_commutativity", ll::LawId::commutativity, ll::OpId::recsym, ll::Regime::uniform_ball,
     ll::Verdict::violated},
    {"rs_reciprocity", ll::LawId::reciprocity, ll::OpId::recsym, ll::Regime::uniform_ball,
     ll::Verdict::holds},
    {"rs_associativity", ll::LawId::associativity, ll::OpId::recsym, ll::Regime::uniform_ball,
     ll::Verdict::holds},
    {"rs_associativity_complex", ll::LawId::associativity, ll::OpId::recsym,
     ll::Regime::complex_disc, ll::Verdict::holds},
    {"rs_negation_reversed", ll::LawId::negation_reversed, ll::OpId::recsym,
     ll::Regime::uniform_ball, ll::Verdict::holds},
    {"rs_negation_same_order", ll::LawId::negation_same_order, ll::OpId::recsym,
     ll::Regime::uniform_ball, ll::Verdict::violated},
    {"rs_magnitude_commutativity", ll::LawId::magnitude_commutativity, ll::OpId::recsym,
     ll::Regime::uniform_ball, ll::Verdict::holds},
    {"rs_magnitude_equality", ll::LawId::magnitude_equality, ll::OpId::recsym,
     ll::Regime::uniform_ball, ll::Verdict::holds},
    {"rs_dual_path", ll::LawId::dual_path, ll::OpId::recsym, ll::Regime::uniform_ball,
     ll::Verdict::holds},
    {"rs_dual_path_complex", ll::LawId::dual_path, ll::OpId::recsym, ll::Regime::complex_disc,
     ll::Verdict::holds},
};

std::vector<WitnessEntry> witness_battery() {
    return {
        {"einstein_reciprocity_witness",
         ll::LawId::reciprocity,
         ll::OpId::einstein,
         {{0.5, 0, 0}, {0, 0.5, 0}}},
        // third leg off the a x b axis on purpose: mutually orthogonal cyclic
        // triples sit on the gyration axis and associate exactly
        {"einstein_associativity_witness",
         ll::LawId::associativity,
         ll::OpId::einstein,
         {{0.5, 0, 0}, {0, 0.5, 0}, {0.5, 0, 0}}},
        {"rs_negation_same_order_witness",
         ll::LawId::negation_same_order,
         ll::OpId::recsym,
         {{0.5, 0, 0}, {0, 0.5, 0}}},
    };
}

constexpr double kWitnessThreshold = 1e-3;
constexpr double kScaleFactor = 17.0;
constexpr double kScaleDriftBound = 1e-12;
constexpr std::uint64_t kScaleAuditSamples = 1000;

const std::vector<std::string> kSuiteCsvHeader = {
    "name",       "kind",        "law", "op",      "regime", "samples", "skips", "violations",
    "max_defect", "mean_defect", "tol", "verdict", "defect", "expected", "matched"};

int run_suite(const SuiteArgs& args) {
    json rec = base_record("suite");
    rec["inputs"] = {{"seed", args.seed},
                     {"samples", args.samples},
                     {"max_beta", args.max_beta},
                     {"c", args.c}};

    json entries = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    bool all_matched = true;
    std::uint64_t skips_total = 0;

    for (const auto& entry : kCheckBattery) {
        ll::SamplerConfig cfg;
        cfg.seed = args.seed;
        cfg.count = args.samples;
        cfg.c = LightSpeed{args.c};
        cfg.max_beta = args.max_beta;
        cfg.regime = entry.regime;
        const double tol = ll::default_tol(entry.law);
        const ll::LawReport rep = ll::check(entry.law, entry.op, cfg, tol, args.threads);
        const bool matched = rep.verdict == entry.expected;
        all_matched = all_matched && matched;
        skips_total += rep.skips;

        json row;
        row["name"] = entry.name;
        row["kind"] = "check";
        json body = report_json(rep, entry.regime);
        body.erase("worst_input");
        body.erase("worst_index");
        row.update(body);
        row["expected"] = ll::to_string(entry.expected);
        row["matched"] = matched;
        entries.push_back(row);
        csv_rows.push_back({entry.name, "check", ll::to_string(rep.law), ll::to_string(rep.op),
                            ll::to_string(entry.regime), std::to_string(rep.samples),
                            std::to_string(rep.skips), std::to_string(rep.violations),
                            canonical(rep.max_defect), canonical(rep.mean_defect),
                            canonical(rep.tol), ll::to_string(rep.verdict), "",
                            ll::to_string(entry.expected), matched ? "true" : "false"});
    }

    for (const auto& entry : witness_battery()) {
        std::vector<CVec3> inputs;
        inputs.reserve(entry.inputs.size());
        for (const auto& v : entry.inputs) inputs.push_back(args.c * v);
        const double d = ll::defect(entry.law, entry.op, inputs, LightSpeed{args.c});
        const bool matched = d > kWitnessThreshold;
        all_matched = all_matched && matched;

        json row;
        row["name"] = entry.name;
        row["kind"] = "witness";
        row["law"] = ll::to_string(entry.law);
        row["op"] = ll::to_string(entry.op);
        row["inputs"] = vec_strings(inputs);
        row["defect"] = d;
        row["threshold"] = kWitnessThreshold;
        row["expected"] = "defect > threshold";
        row["matched"] = matched;
        entries.push_back(row);
        csv_rows.push_back({entry.name, "witness", ll::to_string(entry.law),
                            ll::to_string(entry.op), "", "", "", "", "", "", "", "", canonical(d),
                            "defect > threshold", matched ? "true" : "false"});
    }

    // scale audit: every defect must be invariant under (v, c) -> (17 v, 17 c)
    {
        ll::SamplerConfig cfg;
        cfg.seed = args.seed;
        cfg.count = kScaleAuditSamples;
        cfg.c = LightSpeed{args.c};
        cfg.max_beta = args.max_beta;
        cfg.regime = ll::Regime::uniform_ball;
        const LightSpeed scaled_c{args.c * kScaleFactor};
        double max_drift = 0.0;
        for (std::uint64_t i = 0; i < kScaleAuditSamples; ++i) {
            const auto tuple = ll::sample_tuple(cfg, i, 3);
            const std::vector<CVec3> pair{tuple[0], tuple[1]};
            std::vector<CVec3> tuple_scaled, pair_scaled;
            for (const auto& v : tuple) tuple_scaled.push_back(kScaleFactor * v);
            for (const auto& v : pair) pair_scaled.push_back(kScaleFactor * v);
            for (auto op : {ll::OpId::einstein, ll::OpId::recsym}) {
                const double base = ll::defect(ll::LawId::associativity, op, tuple, cfg.c);
                const double big =
                    ll::defect(ll::LawId::associativity, op, tuple_scaled, scaled_c);
                max_drift = std::max(max_drift, std::abs(base - big));
                const double base2 = ll::defect(ll::LawId::reciprocity, op, pair, cfg.c);
                const double big2 = ll::defect(ll::LawId::reciprocity, op, pair_scaled, scaled_c);
                max_drift = std::max(max_drift, std::abs(base2 - big2));
            }
            const double base3 =
                ll::defect(ll::LawId::magnitude_equality, ll::OpId::recsym, pair, cfg.c);
            const double big3 =
                ll::defect(ll::LawId::magnitude_equality, ll::OpId::recsym, pair_scaled, scaled_c);
            max_drift = std::max(max_drift, std::abs(base3 - big3));
        }
        const bool matched = max_drift <= kScaleDriftBound;
        all_matched = all_matched && matched;

        json row;
        row["name"] = "scale_invariance";
        row["kind"] = "scale_audit";
        row["samples"] = kScaleAuditSamples;
        row["scale_factor"] = kScaleFactor;
        row["max_drift"] = max_drift;
        row["bound"] = kScaleDriftBound;
        row["matched"] = matched;
        entries.push_back(row);
        csv_rows.push_back({"scale_invariance", "scale_audit", "", "", "",
                            std::to_string(kScaleAuditSamples), "", "", canonical(max_drift), "",
                            canonical(kScaleDriftBound), "", "", "drift <= bound",
                            matched ? "true" : "false"});
    }

    rec["result"] = {{"entries", entries}, {"all_matched", all_matched}};
    rec["diagnostics"] = {{"skips_total", skips_total}};

    if (args.format == "csv") {
        std::cout << csv_row(kSuiteCsvHeader);
        for (const auto& row : csv_rows) std::cout << csv_row(row);
    } else {
        std::cout << rec.dump(2) << "\n";
    }
    return all_matched ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relvel: relativistic velocity composition and algebraic law checking"};
    app.require_subcommand(1);

    const std::vector<std::string> law_names = {"einstein", "recsym"};
    const std::vector<std::string> law_ids = {
        "associativity",      "commutativity",       "reciprocity",
        "negation_reversed",  "negation_same_order", "magnitude_equality",
        "magnitude_commutativity", "identity",       "inverse",
        "subluminal_closure", "dual_path"};
    const std::vector<std::string> regimes = {"uniform_ball", "near_lightspeed", "near_parallel",
                                              "collinear",    "orthogonal",      "complex_disc"};

    AddArgs add_args;
    auto* add = app.add_subcommand("add", "compose two velocities");
    add->add_option("--law", add_args.law, "composition law")
        ->required()
        ->check(CLI::IsMember(law_names));
    add->add_option("--a", add_args.a, "left velocity, \"x,y,z[;ix,iy,iz]\"")->required();
    add->add_option("--b", add_args.b, "right velocity")->required();
    add->add_option("--c", add_args.c, "speed of light")->check(CLI::PositiveNumber);
    add->add_option("--format", add_args.format)->check(CLI::IsMember({"text", "json"}));

    RelativeArgs rel_args;
    auto* rel = app.add_subcommand(
        "relative", "relative velocity in both orientations plus the reciprocity defect");
    rel->add_option("--law", rel_args.law)->required()->check(CLI::IsMember(law_names));
    rel->add_option("--observer", rel_args.observer)->required();
    rel->add_option("--object", rel_args.object)->required();
    rel->add_option("--c", rel_args.c)->check(CLI::PositiveNumber);
    rel->add_option("--format", rel_args.format)->check(CLI::IsMember({"text", "json"}));

    CheckArgs check_args;
    auto* chk = app.add_subcommand("check", "sample a law and report defect statistics");
    chk->add_option("--law-id", check_args.law_id)->required()->check(CLI::IsMember(law_ids));
    chk->add_option("--op", check_args.op)->required()->check(CLI::IsMember(law_names));
    chk->add_option("--samples", check_args.samples);
    chk->add_option("--seed", check_args.seed);
    chk->add_option("--tol", check_args.tol, "tolerance (default: per-law)")
        ->check(CLI::PositiveNumber);
    chk->add_option("--regime", check_args.regime)->check(CLI::IsMember(regimes));
    chk->add_option("--max-beta", check_args.max_beta);
    chk->add_option("--c", check_args.c)->check(CLI::PositiveNumber);
    chk->add_option("--threads", check_args.threads)->check(CLI::PositiveNumber);
    chk->add_option("--format", check_args.format)->check(CLI::IsMember({"json", "csv"}));

    CheckArgs hunt_args;
    auto* hnt = app.add_subcommand("hunt", "find and shrink a counterexample");
    hnt->add_option("--law-id", hunt_args.law_id)->required()->check(CLI::IsMember(law_ids));
    hnt->add_option("--op", hunt_args.op)->required()->check(CLI::IsMember(law_names));
    hnt->add_option("--samples", hunt_args.samples);
    hnt->add_option("--seed", hunt_args.seed);
    hnt->add_option("--tol", hunt_args.tol, "tolerance (default: per-law)")
        ->check(CLI::PositiveNumber);
    hnt->add_option("--regime", hunt_args.regime)->check(CLI::IsMember(regimes));
    hnt->add_option("--max-beta", hunt_args.max_beta);
    hnt->add_option("--c", hunt_args.c)->check(CLI::PositiveNumber);
    hnt->add_option("--shrink", hunt_args.shrink)->check(CLI::IsMember({"on", "off"}));
    hnt->add_option("--format", hunt_args.format)->check(CLI::IsMember({"json", "csv"}));

    SuiteArgs suite_args;
    auto* ste = app.add_subcommand("suite", "run the full claims battery");
    ste->add_option("--seed", suite_args.seed);
    ste->add_option("--samples", suite_args.samples)
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    ste->add_option("--max-beta", suite_args.max_beta);
    ste->add_option("--c", suite_args.c)->check(CLI::PositiveNumber);
    ste->add_option("--threads", suite_args.threads)->check(CLI::PositiveNumber);
    ste->add_option("--format", suite_args.format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*add) return run_add(add_args);
        if (*rel) return run_relative(rel_args);
        if (*chk) return run_check(check_args);
        if (*hnt) return run_hunt(hunt_args);
        if (*ste) return run_suite(suite_args);
    } catch (const DomainError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
