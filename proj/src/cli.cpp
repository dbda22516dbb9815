#include "hytet/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <stack>

#include "CLI11.hpp"
#include "json.hpp"

#include "hytet/angles.hpp"
#include "hytet/core.hpp"
#include "hytet/errors.hpp"
#include "hytet/existence.hpp"
#include "hytet/json_writer.hpp"
#include "hytet/oracle.hpp"
#include "hytet/volume.hpp"

namespace hytet::cli {

namespace {

using out::Node;
using json = nlohmann::json;

// Malformed input: exit 64.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    double tol = 1e-10;
    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t seed = 1;
};

struct PartialSettings {
    std::optional<double> tol;
    std::optional<std::uint64_t> mc_samples;
    std::optional<std::uint64_t> seed;

    void apply_to(Settings& s) const {
        if (tol) s.tol = *tol;
        if (mc_samples) s.mc_samples = *mc_samples;
        if (seed) s.seed = *seed;
    }
};

struct InputDoc {
    EdgeLengths lengths;
    std::array<std::string, kEdgeCount> echo;
    PartialSettings config;
};

// Validation limits for `volume --validate` and `validate`.
constexpr double kSforzaAgreement = 1e-6;
constexpr double kMonteCarloSigmas = 3.0;
constexpr double kAngleAgreement = 1e-9;
constexpr double kJacobiRelative = 1e-10;
constexpr double kSchlafliLimit = 1e-8;
constexpr double kSchlafliStep = 1e-5;

double parse_double(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, v);
    if (text.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(v))
        throw InputError(what + ": '" + text + "' is not a finite decimal number");
    return v;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::uint64_t v = 0;
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(text.data(), last, v);
    if (text.empty() || res.ec != std::errc() || res.ptr != last)
        throw InputError(what + ": '" + text + "' is not a non-negative integer");
    return v;
}

double positive_tol(double v, const std::string& what) {
    if (!(v > 0.0)) throw InputError(what + " must be positive");
    return v;
}

std::uint64_t positive_count(std::uint64_t v, const std::string& what) {
    if (v == 0) throw InputError(what + " must be at least 1");
    return v;
}

std::size_t edge_slot(const std::string& name) {
    for (std::size_t e = 0; e < kEdgeCount; ++e)
        if (kEdgeNames[e] == name) return e;
    throw InputError("unknown edge name '" + name + "'");
}

double edge_value(const std::string& name, const std::string& text) {
    const double v = parse_double(text, "edge " + name);
    if (v < 0.0) throw InputError("edge " + name + " must be nonnegative");
    return v;
}

InputDoc finish_edges(const std::array<std::optional<std::string>, kEdgeCount>& raw) {
    InputDoc doc;
    std::array<double, kEdgeCount> values{};
    for (std::size_t e = 0; e < kEdgeCount; ++e) {
        if (!raw[e]) throw InputError("missing edge " + std::string(kEdgeNames[e]));
        doc.echo[e] = *raw[e];
        values[e] = edge_value(std::string(kEdgeNames[e]), *raw[e]);
    }
    doc.lengths = EdgeLengths(values);
    return doc;
}

InputDoc parse_inline(const std::string& text) {
    std::array<std::optional<std::string>, kEdgeCount> raw;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("--edges item '" + item + "' lacks '='");
        const std::string name = item.substr(0, eq);
        const std::size_t slot = edge_slot(name);
        if (raw[slot]) throw InputError("edge " + name + " given twice");
        raw[slot] = item.substr(eq + 1);
    }
    return finish_edges(raw);
}

json parse_json_strict(const std::string& text) {
    // Rejects duplicate keys, which the parser would otherwise collapse.
    std::stack<std::set<std::string>> keys;
    std::string duplicate;
    auto cb = [&](int, json::parse_event_t ev, json& parsed) {
        switch (ev) {
            case json::parse_event_t::object_start: keys.emplace(); break;
            case json::parse_event_t::object_end:
                if (!keys.empty()) keys.pop();
                break;
            case json::parse_event_t::key:
                if (!keys.top().insert(parsed.get<std::string>()).second && duplicate.empty())
                    duplicate = parsed.get<std::string>();
                break;
            default: break;
        }
        return true;
    };
    json doc;
    try {
        doc = json::parse(text, cb);
    } catch (const json::parse_error& ex) {
        throw InputError(std::string("malformed input document: ") + ex.what());
    }
    if (!duplicate.empty()) throw InputError("duplicate key '" + duplicate + "'");
    return doc;
}

std::string scalar_text(const json& v, const std::string& what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number_float()) return out::format_number(v.get<double>());
    throw InputError(what + " must be a number or a decimal string");
}

InputDoc parse_document(const std::string& text) {
    json doc = parse_json_strict(text);
    if (!doc.is_object()) throw InputError("input document must be an object");
    // A previous output document carries the input under "input".
    if (doc.contains("input") && !doc.contains("edges")) doc = doc["input"];
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_object())
        throw InputError("input document needs an \"edges\" object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "edges" && it.key() != "config")
            throw InputError("unknown top-level key '" + it.key() + "'");

    std::array<std::optional<std::string>, kEdgeCount> raw;
    for (auto it = doc["edges"].begin(); it != doc["edges"].end(); ++it)
        raw[edge_slot(it.key())] = scalar_text(it.value(), "edge " + it.key());
    InputDoc out = finish_edges(raw);

    if (doc.contains("config")) {
        const json& cfg = doc["config"];
        if (!cfg.is_object()) throw InputError("\"config\" must be an object");
        for (auto it = cfg.begin(); it != cfg.end(); ++it) {
            const std::string text_value = scalar_text(it.value(), "config " + it.key());
            if (it.key() == "tol") {
                out.config.tol = positive_tol(parse_double(text_value, "config tol"), "config tol");
            } else if (it.key() == "mc_samples") {
                out.config.mc_samples = positive_count(
                    parse_u64(text_value, "config mc_samples"), "config mc_samples");
            } else if (it.key() == "seed") {
                out.config.seed = parse_u64(text_value, "config seed");
            } else {
                throw InputError("unknown config key '" + it.key() + "'");
            }
        }
    }
    return out;
}

std::string read_source(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read input file '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

PartialSettings from_env(const std::map<std::string, std::string>& env) {
    PartialSettings p;
    if (auto it = env.find("HYTET_TOL"); it != env.end())
        p.tol = positive_tol(parse_double(it->second, "HYTET_TOL"), "HYTET_TOL");
    if (auto it = env.find("HYTET_MC_SAMPLES"); it != env.end())
        p.mc_samples = positive_count(parse_u64(it->second, "HYTET_MC_SAMPLES"), "HYTET_MC_SAMPLES");
    if (auto it = env.find("HYTET_SEED"); it != env.end())
        p.seed = parse_u64(it->second, "HYTET_SEED");
    return p;
}

QuadratureConfig quadrature(const Settings& s) { return {s.tol, s.tol, 12}; }

Node input_node(const InputDoc& doc, const Settings& s) {
    Node in = Node::object();
    Node& edges = in.set("edges", Node::object());
    for (std::size_t e = 0; e < kEdgeCount; ++e) edges.set(std::string(kEdgeNames[e]), doc.echo[e]);
    Node& cfg = in.set("config", Node::object());
    cfg.set("tol", s.tol);
    cfg.set("mc_samples", s.mc_samples);
    cfg.set("seed", s.seed);
    return in;
}

Node existence_node(const ExistenceReport& r) {
    Node n = Node::object();
    n.set("exists", r.exists());
    n.set("degenerate", r.degenerate);
    Node& cond = n.set("conditions", Node::object());
    cond.set("face_123", r.tri_123_ok);
    cond.set("face_124", r.tri_124_ok);
    cond.set("l34_in_range", r.l34_in_range);
    Node& failed = n.set("failed", Node::array());
    for (const auto& f : r.failed_conditions()) failed.push(f);
    if (r.bounds) {
        Node& b = n.set("bounds", Node::object());
        b.set("l1", r.bounds->l1);
        b.set("l2", r.bounds->l2);
        b.set("C", r.bounds->C);
        b.set("S", r.bounds->S);
        b.set("sqrt_clamped", r.bounds->sqrt_clamped);
    } else {
        n.set("bounds", nullptr);
    }
    Node& s = n.set("slacks", Node::object());
    s.set("face_123_upper", r.slacks.face123_upper);
    s.set("face_123_lower", r.slacks.face123_lower);
    s.set("face_124_upper", r.slacks.face124_upper);
    s.set("face_124_lower", r.slacks.face124_lower);
    s.set("l34_lower", r.slacks.l34_lower);
    s.set("l34_upper", r.slacks.l34_upper);
    return n;
}

Node diagnostics_node(const EdgeLengths& lengths, const ExistenceReport& r) {
    const CofactorSet cs = cofactors(lengths);
    Node n = Node::object();
    n.set("delta", cs.delta);
    Node& diag = n.set("cofactor_diagonal", Node::array());
    for (int i = 0; i < 4; ++i) diag.push(cs(i, i));
    n.set("l1", r.bounds ? r.bounds->l1 : std::nan(""));
    n.set("l2", r.bounds ? r.bounds->l2 : std::nan(""));
    return n;
}

Node angles_node(const DihedralAngles& a) {
    // Children are filled before insertion: set() may reallocate siblings.
    Node rad = Node::object();
    Node deg = Node::object();
    for (std::size_t e = 0; e < kEdgeCount; ++e) {
        const std::string name = "th" + std::string(kEdgeNames[e]).substr(1);
        rad.set(name, a[e]);
        deg.set(name, a[e] * 180.0 / std::numbers::pi);
    }
    Node n = Node::object();
    n.set("radians", std::move(rad));
    n.set("degrees", std::move(deg));
    n.set("degenerate", a.degenerate);
    return n;
}

Node volume_node(const VolumeResult& v) {
    Node n = Node::object();
    n.set("route", std::string(to_string(v.route)));
    n.set("value", v.value);
    n.set("error_estimate", v.error_estimate);
    n.set("evaluations", static_cast<std::uint64_t>(v.evaluations));
    n.set("degenerate", v.diagnostics.degenerate);
    n.set("clamped_negative", v.diagnostics.clamped_negative);
    if (v.route == VolumeRoute::edge_integral) {
        n.set("at_lower_endpoint", v.diagnostics.at_lower_endpoint);
        n.set("delta_at_l1", v.diagnostics.delta_at_l1);
        n.set("delta_at_l34", v.diagnostics.delta_at_l34);
    }
    if (v.route == VolumeRoute::sforza) n.set("root", v.diagnostics.sforza_root);
    return n;
}

Node check_node(const std::string& name, double value, double limit, bool pass) {
    Node n = Node::object();
    n.set("name", name);
    n.set("value", value);
    n.set("limit", limit);
    n.set("pass", pass);
    return n;
}

struct CrossChecks {
    Node node;
    bool pass = true;
};

// Sforza and Monte Carlo routes against the edge integral.
CrossChecks cross_check(const EdgeLengths& lengths, const VolumeResult& edge, const Settings& s,
                        bool degenerate) {
    CrossChecks c;
    c.node = Node::object();
    if (degenerate) {
        c.node.set("skipped", "degenerate input");
        return c;
    }
    const VolumeResult sf = volume_sforza(dihedral_angles(lengths), quadrature(s));
    const VertexEmbedding emb = embed_vertices(edge_matrix_from_lengths(lengths));
    const VolumeResult mc = volume_monte_carlo(emb, {s.seed, s.mc_samples, 65536});
    c.node.set("sforza", volume_node(sf));
    Node& mcn = c.node.set("monte_carlo", volume_node(mc));
    mcn.set("seed", s.seed);
    const double dsf = std::abs(edge.value - sf.value);
    const double sig = mc.error_estimate > 0.0 ? std::abs(edge.value - mc.value) / mc.error_estimate
                                               : (edge.value == mc.value ? 0.0 : INFINITY);
    Node& agree = c.node.set("agreement", Node::array());
    agree.push(check_node("edge_vs_sforza", dsf, kSforzaAgreement, dsf < kSforzaAgreement));
    agree.push(check_node("edge_vs_monte_carlo_sigmas", sig, kMonteCarloSigmas,
                          sig <= kMonteCarloSigmas));
    c.pass = dsf < kSforzaAgreement && sig <= kMonteCarloSigmas;
    c.node.set("pass", c.pass);
    return c;
}

Node base_document(const std::string& command, const InputDoc& doc, const Settings& s) {
    Node d = Node::object();
    d.set("command", command);
    d.set("input", input_node(doc, s));
    return d;
}

void set_status(Node& d, int code, const std::string& message) {
    Node& st = d.set("status", Node::object());
    st.set("exit_code", code);
    st.set("message", message);
}

std::string render(const Node& d, const std::string& format) {
    return format == "csv" ? out::to_csv(d) : out::to_json(d);
}

std::string failure_message(const ExistenceReport& r) {
    std::string msg = "tetrahedron does not exist; failed:";
    for (const auto& f : r.failed_conditions()) msg += " " + f + ";";
    return msg;
}

CliResult cmd_check(const InputDoc& doc, const Settings& s, const std::string& format) {
    const ExistenceReport r = exists(doc.lengths);
    Node d = base_document("check", doc, s);
    d.set("existence", existence_node(r));
    const int code = r.exists() ? kExitOk : kExitNonexistent;
    set_status(d, code, r.exists() ? "ok" : failure_message(r));
    return {code, render(d, format), r.exists() ? "" : failure_message(r) + "\n"};
}

CliResult nonexistent(Node& d, const ExistenceReport& r, const std::string& format) {
    set_status(d, kExitNonexistent, failure_message(r));
    return {kExitNonexistent, render(d, format), failure_message(r) + "\n"};
}

CliResult cmd_angles(const InputDoc& doc, const Settings& s, const std::string& format) {
    const ExistenceReport r = exists(doc.lengths);
    Node d = base_document("angles", doc, s);
    d.set("existence", existence_node(r));
    if (!r.exists()) return nonexistent(d, r, format);
    d.set("angles", angles_node(dihedral_angles(doc.lengths)));
    d.set("diagnostics", diagnostics_node(doc.lengths, r));
    set_status(d, kExitOk, "ok");
    return {kExitOk, render(d, format), ""};
}

CliResult cmd_volume(const InputDoc& doc, const Settings& s, const std::string& format,
                     bool validate_routes) {
    const ExistenceReport r = exists(doc.lengths);
    Node d = base_document("volume", doc, s);
    d.set("existence", existence_node(r));
    if (!r.exists()) return nonexistent(d, r, format);
    const VolumeResult edge = volume_edges(doc.lengths, quadrature(s));
    d.set("volume", volume_node(edge));
    d.set("diagnostics", diagnostics_node(doc.lengths, r));
    int code = kExitOk;
    std::string msg = "ok";
    if (validate_routes) {
        CrossChecks c = cross_check(doc.lengths, edge, s, edge.diagnostics.degenerate);
        d.set("validation", std::move(c.node));
        if (!c.pass) {
            code = kExitInternal;
            msg = "route cross-check failed";
        }
    }
    set_status(d, code, msg);
    return {code, render(d, format), code == kExitOk ? "" : msg + "\n"};
}

CliResult cmd_sweep(const InputDoc& doc, const Settings& s, const std::string& format,
                    std::uint64_t samples) {
    const ExistenceReport r = exists(doc.lengths);
    if (!r.tri_123_ok || !r.tri_124_ok || !r.bounds) {
        Node d = base_document("sweep", doc, s);
        d.set("existence", existence_node(r));
        return nonexistent(d, r, format == "csv" ? "json" : format);
    }
    if (samples < 2) throw InputError("--samples must be at least 2 for a sweep");
    const double l1 = r.bounds->l1;
    const double l2 = r.bounds->l2;
    const QuadratureConfig q = quadrature(s);

    struct Row {
        double t, dvdt, v;
    };
    std::vector<Row> rows;
    rows.reserve(samples);
    double v = 0.0;
    double prev = l1;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const double t = k + 1 == samples ? l2 : l1 + (l2 - l1) * static_cast<double>(k) /
                                                          static_cast<double>(samples - 1);
        if (k > 0) v += integrate_derivative(doc.lengths, prev, t, q).value;
        prev = t;
        double dvdt = std::nan("");
        if (k > 0 && k + 1 < samples && l2 > l1) dvdt = volume_derivative(doc.lengths, t);
        rows.push_back({t, dvdt, v});
    }

    if (format == "csv") {
        std::string outp = "t,dVdt,V\n";
        for (const Row& row : rows)
            outp += out::format_number(row.t) + "," + out::format_number(row.dvdt) + "," +
                    out::format_number(row.v) + "\n";
        return {kExitOk, outp, ""};
    }
    Node d = base_document("sweep", doc, s);
    Node& b = d.set("bounds", Node::object());
    b.set("l1", l1);
    b.set("l2", l2);
    Node& arr = d.set("rows", Node::array());
    for (const Row& row : rows) {
        Node n = Node::object();
        n.set("t", row.t);
        n.set("dVdt", row.dvdt);
        n.set("V", row.v);
        arr.push(std::move(n));
    }
    set_status(d, kExitOk, "ok");
    return {kExitOk, out::to_json(d), ""};
}

CliResult cmd_validate(const InputDoc& doc, const Settings& s, const std::string& format) {
    const ExistenceReport r = exists(doc.lengths);
    Node d = base_document("validate", doc, s);
    d.set("existence", existence_node(r));
    if (!r.exists()) return nonexistent(d, r, format);

    Node checks = Node::array();
    bool all = true;
    auto add = [&](const std::string& name, double value, double limit, bool pass) {
        checks.push(check_node(name, value, limit, pass));
        all = all && pass;
    };

    const CofactorSet cs = cofactors(doc.lengths);
    double min_diag = cs(0, 0);
    for (int i = 1; i < 4; ++i) min_diag = std::min(min_diag, cs(i, i));
    add("cofactor_diagonal_positive", min_diag, 0.0, min_diag > 0.0);
    add("determinant_negative", cs.delta, 0.0, cs.delta < 0.0);
    const EdgeMatrix em = edge_matrix_from_lengths(doc.lengths);
    const double jac = jacobi_residuals(em, cofactors(em)).max_relative();
    add("jacobi_relative_residual", jac, kJacobiRelative, jac < kJacobiRelative);

    const VolumeResult edge = volume_edges(doc.lengths, quadrature(s));
    d.set("volume", volume_node(edge));
    if (r.degenerate || edge.diagnostics.degenerate) {
        add("non_degenerate", 1.0, 0.0, false);
    } else {
        const DihedralAngles a = dihedral_angles(doc.lengths);
        const DihedralAngles g = dihedral_angles_geometric(embed_vertices(em));
        double worst = 0.0;
        for (std::size_t e = 0; e < kEdgeCount; ++e) worst = std::max(worst, std::abs(a[e] - g[e]));
        add("angle_oracle_agreement", worst, kAngleAgreement, worst < kAngleAgreement);

        CrossChecks c = cross_check(doc.lengths, edge, s, false);
        d.set("routes", std::move(c.node));
        add("route_agreement", c.pass ? 1.0 : 0.0, 1.0, c.pass);

        const double t = doc.lengths.l34();
        if (t - 2.0 * kSchlafliStep > r.bounds->l1 && t + 2.0 * kSchlafliStep < r.bounds->l2) {
            const double res = schlafli_residual(doc.lengths, kSchlafliStep);
            add("schlafli_residual", res, kSchlafliLimit, res < kSchlafliLimit);
        }
    }
    d.set("checks", std::move(checks));
    d.set("pass", all);
    const int code = all ? kExitOk : kExitInternal;
    set_status(d, code, all ? "ok" : "one or more checks failed");
    return {code, render(d, format), all ? "" : "one or more checks failed\n"};
}

}  // namespace

CliResult run(const std::vector<std::string>& args,
              const std::map<std::string, std::string>& env) {
    CLI::App app{"Hyperbolic tetrahedra from edge lengths", "hytet"};
    app.require_subcommand(1);

    std::string input_path;
    std::string edges_inline;
    std::optional<double> tol;
    std::optional<std::uint64_t> mc_samples;
    std::optional<std::uint64_t> seed;
    std::uint64_t sweep_samples = 101;
    bool validate_routes = false;
    std::string format;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input_path, "Input document path, '-' for stdin");
        sub->add_option("--edges", edges_inline, "Inline lengths: l12=..,l13=..,...,l34=..");
        sub->add_option("--tol", tol, "Quadrature tolerance (absolute and relative)");
        sub->add_option("--mc-samples", mc_samples, "Monte Carlo sample count");
        sub->add_option("--seed", seed, "Monte Carlo seed");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    CLI::App* check = app.add_subcommand("check", "Existence test for the six lengths");
    CLI::App* angles = app.add_subcommand("angles", "Dihedral angles");
    CLI::App* volume = app.add_subcommand("volume", "Volume by the edge integral");
    CLI::App* sweep = app.add_subcommand("sweep", "Table of t, dV/dt, V over [l1, l2]");
    CLI::App* validate = app.add_subcommand("validate", "Full property battery");
    for (CLI::App* sub : {check, angles, volume, sweep, validate}) add_common(sub);
    volume->add_flag("--validate", validate_routes, "Cross-check with the angle and Monte Carlo routes");
    sweep->add_option("--samples", sweep_samples, "Grid points including both endpoints");

    std::ostringstream out_stream;
    std::ostringstream err_stream;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out_stream, err_stream);
        return {code == 0 ? kExitOk : kExitInput, out_stream.str(), err_stream.str()};
    }

    try {
        if (input_path.empty() == edges_inline.empty())
            throw InputError("give exactly one of an input document or --edges");
        const InputDoc doc =
            edges_inline.empty() ? parse_document(read_source(input_path)) : parse_inline(edges_inline);

        Settings s;
        from_env(env).apply_to(s);
        doc.config.apply_to(s);
        if (tol) s.tol = positive_tol(*tol, "--tol");
        if (mc_samples) s.mc_samples = positive_count(*mc_samples, "--mc-samples");
        if (seed) s.seed = *seed;

        if (check->parsed()) return cmd_check(doc, s, format.empty() ? "json" : format);
        if (angles->parsed()) return cmd_angles(doc, s, format.empty() ? "json" : format);
        if (volume->parsed())
            return cmd_volume(doc, s, format.empty() ? "json" : format, validate_routes);
        if (sweep->parsed()) return cmd_sweep(doc, s, format.empty() ? "csv" : format, sweep_samples);
        return cmd_validate(doc, s, format.empty() ? "json" : format);
    } catch (const InputError& e) {
        return {kExitInput, "", std::string("input error: ") + e.what() + "\n"};
    } catch (const DomainError& e) {
        return {kExitInput, "", std::string("input error: ") + e.what() + "\n"};
    } catch (const NonexistentTetrahedronError& e) {
        return {kExitNonexistent, "", std::string(e.what()) + "\n"};
    } catch (const std::exception& e) {
        return {kExitInternal, "", std::string("internal error: ") + e.what() + "\n"};
    }
}

}  // namespace hytet::cli
