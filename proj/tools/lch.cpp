// lch: command-line front end for the Legendrian contact homology toolkit.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "lch/dga.hpp"
#include "lch/dga_io.hpp"
#include "lch/front.hpp"
#include "lch/grading.hpp"
#include "lch/handle_flow.hpp"
#include "lch/hochschild.hpp"
#include "lch/homology.hpp"
#include "lch/pipeline.hpp"
#include "lch/report.hpp"
#include "lch/taxonomy.hpp"

using namespace lch;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::SyntaxError:
        case Errc::MalformedEvent:
        case Errc::InvalidBundle:
        case Errc::DuplicateId:
        case Errc::InvalidId:
        case Errc::UnknownGenerator:
        case Errc::UnknownGeneratorInDifferential:
        case Errc::InvalidWindow:
        case Errc::InfiniteBasis:
        case Errc::InvalidParams:
        case Errc::StrandCountViolation:
        case Errc::OpenEnds:
            return kExitUsage;
        default:
            return kExitFail;
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    return read_text_file(path);
}

DgaPresentation load_dga(const std::string& path) {
    try {
        return parse_dga(read_input(path));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + std::string(e.what()).substr(errc_name(e.code()).size() + 2));
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string join_state(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(12);
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

json augmentation_json(const Augmentation& e) {
    json out = json::object();
    for (const auto& [id, v] : e.values()) out[id] = v ? 1 : 0;
    return out;
}

std::string augmentation_text(const Augmentation& e) {
    std::string out;
    for (const auto& [id, v] : e.values()) out += (out.empty() ? "" : " ") + id + "=" + (v ? "1" : "0");
    return out.empty() ? "(no degree-0 generators)" : out;
}

Report cmd_check(const std::string& file) {
    Report r;
    r.command = "check";
    const auto p = load_dga(file);
    r.add_stage({"parse", Status::Pass, {std::to_string(p.size()) + " generators"}});
    Stage s{"d-squared", Status::Pass, {}};
    const auto rep = check_d_squared(p);
    for (const auto& f : rep.failures) s.messages.push_back("d(d(" + f.generator + ")) = " + to_string(f.residual));
    if (!rep.pass) s.status = Status::Fail;
    r.add_stage(std::move(s));
    r.data["presentation"] = presentation_json(p);
    r.summary = rep.pass ? "d^2 = 0" : "d^2 != 0";
    return r;
}

Report cmd_homology(const std::string& file, int lo, int hi, std::optional<int> cap) {
    Report r;
    r.command = "homology";
    const auto p = load_dga(file);
    const auto table = homology_table(p, DegreeWindow{lo, hi, cap});
    Stage s{"homology", Status::Pass, {}};
    for (const auto& [d, e] : table.entries())
        s.messages.push_back("H_" + std::to_string(d) + " = " + std::to_string(e.dimension) +
                             (e.exact ? "" : "  (truncated at word length " + std::to_string(*cap) + ")"));
    r.add_stage(std::move(s));
    r.data["homology"] = betti_json(table);
    r.summary = to_string(table);
    return r;
}

Report cmd_augmentations(const std::string& file) {
    Report r;
    r.command = "augmentations";
    const auto p = load_dga(file);
    const auto augs = augmentations(p);
    Stage s{"augmentations", Status::Pass, {}};
    json list = json::array();
    for (const auto& e : augs) {
        s.messages.push_back(augmentation_text(e));
        list.push_back(augmentation_json(e));
    }
    r.add_stage(std::move(s));
    r.data["augmentations"] = list;
    r.summary = std::to_string(augs.size()) + " augmentation(s)";
    return r;
}

Report cmd_linearized(const std::string& file, std::optional<int> lo, std::optional<int> hi) {
    Report r;
    r.command = "linearized";
    const auto p = load_dga(file);
    const auto augs = augmentations(p);
    std::optional<DegreeWindow> window;
    if (lo || hi) {
        int dlo = lo.value_or(0), dhi = hi.value_or(dlo);
        window = DegreeWindow{dlo, dhi};
    }
    json list = json::array();
    std::set<std::string> distinct;
    for (const auto& e : augs) {
        const auto table = linearized_homology(p, e, window);
        Stage s{"augmentation " + augmentation_text(e), Status::Pass, {"H^lin = " + to_string(table)}};
        r.add_stage(std::move(s));
        list.push_back({{"augmentation", augmentation_json(e)}, {"homology", betti_json(table)}});
        distinct.insert(to_string(table));
    }
    if (augs.empty()) r.add_stage({"augmentations", Status::Fail, {"the DGA has no augmentation to F2"}});
    r.data["linearized"] = list;
    r.summary = std::to_string(augs.size()) + " augmentation(s), " + std::to_string(distinct.size()) +
                " distinct linearized homology table(s)";
    return r;
}

Report cmd_hochschild(const std::string& file, int lo, int hi, const std::string& impl) {
    Report r;
    r.command = "hochschild";
    const auto p = load_dga(file);
    const DegreeWindow w{lo, hi};
    if (impl == "bar" || impl == "small") {
        const auto table = impl == "bar" ? hh_bar(p, w) : hh_small(p, w);
        r.add_stage({impl, Status::Pass, {"HH = " + to_string(table)}});
        r.data[impl] = betti_json(table);
        r.summary = to_string(table);
        return r;
    }
    const auto rep = hh_report(p, w);
    r.add_stage({"bar", Status::Pass, {"HH = " + to_string(rep.bar)}});
    r.add_stage({"small", Status::Pass, {"HH = " + to_string(rep.small)}});
    Stage cmp{"compare", rep.all_equal ? Status::Pass : Status::Fail, {}};
    for (const auto& [d, same] : rep.agrees)
        if (!same) cmp.messages.push_back("degree " + std::to_string(d) + " differs");
    if (rep.all_equal) cmp.messages.push_back("bar and small complexes agree in every degree");
    r.add_stage(std::move(cmp));
    r.data["bar"] = betti_json(rep.bar);
    r.data["small"] = betti_json(rep.small);
    r.data["all_equal"] = rep.all_equal;
    r.summary = rep.all_equal ? "agree" : "disagree";
    return r;
}

Report cmd_pushout(const std::string& f1, const std::string& f2, const std::string& shared_list, bool emit) {
    Report r;
    r.command = "pushout";
    const auto p1 = load_dga(f1);
    const auto p2 = load_dga(f2);
    const auto ids = split_list(shared_list);
    const std::set<std::string> shared(ids.begin(), ids.end());
    Stage s{"pushout", Status::Pass, {}};
    try {
        const auto out = pushout(p1, p2, shared);
        r.data["presentation"] = presentation_json(out);
        if (emit) std::cout << serialize(out);
        else
            for (const auto& g : out.generators())
                s.messages.push_back(g.id + " : " + std::to_string(g.degree) + "   d = " +
                                     to_string(out.differential(g.id)));
        r.summary = std::to_string(out.size()) + " generators";
    } catch (const Error& e) {
        s.status = Status::Fail;
        s.messages.push_back(e.what());
        r.summary = "pushout failed";
    }
    r.add_stage(std::move(s));
    return r;
}

Report cmd_dip(const std::string& file, int k, const std::string& table_file) {
    Report r;
    r.command = "dip";
    const auto p = load_dga(file);
    PathTable table;
    if (!table_file.empty()) table = parse_path_table(read_input(table_file));
    else
        for (const auto& g : p.generators()) table.endpoints[g.id] = {1, 1};
    const auto gens = dip_generators(p, k, table.pairs, table.endpoints);
    Stage s{"dip", Status::Pass, {}};
    json list = json::array();
    for (const auto& g : gens) {
        s.messages.push_back(g.id + " : " + std::to_string(g.degree));
        list.push_back({{"id", g.id}, {"degree", g.degree}});
    }
    r.add_stage(std::move(s));
    r.data["handle_index"] = k;
    r.data["generators"] = list;
    r.summary = std::to_string(gens.size()) + " dipped generators";
    return r;
}

Report cmd_front(const std::string& file, bool emit, bool mirror) {
    Report r;
    r.command = "front";
    auto front = parse_front(read_input(file));
    if (mirror) front = front.mirrored();
    const auto p = front_to_dga(front);
    r.add_stage({"compile", Status::Pass,
                 {to_string(front), std::to_string(component_count(front)) + " component(s), " +
                                        std::to_string(p.size()) + " generators"}});
    Stage s{"d-squared", Status::Pass, {}};
    const auto rep = check_d_squared(p);
    for (const auto& f : rep.failures) s.messages.push_back("d(d(" + f.generator + ")) = " + to_string(f.residual));
    if (!rep.pass) s.status = Status::Fail;
    r.add_stage(std::move(s));
    if (emit) {
        std::cout << serialize(p);
    } else {
        Stage g{"generators", Status::Pass, {}};
        for (const auto& gen : p.generators())
            g.messages.push_back(gen.id + " : " + std::to_string(gen.degree) + "   d = " +
                                 to_string(p.differential(gen.id)));
        r.add_stage(std::move(g));
    }
    r.data["front"] = to_string(front);
    r.data["presentation"] = presentation_json(p);
    r.summary = rep.pass ? "compiled, d^2 = 0" : "compiled, d^2 != 0";
    return r;
}

Report cmd_taxonomy(const std::string& file, const std::string& classes_file) {
    Report r;
    r.command = "taxonomy";
    const auto p = load_dga(file);
    const auto classes = parse_classes(read_input(classes_file));
    const auto rep = validate_taxonomy(p, classes);
    Stage s{"taxonomy", rep.pass ? Status::Pass : Status::Fail, {}};
    json list = json::array();
    for (const auto& v : rep.violations) {
        s.messages.push_back(describe(v, classes));
        list.push_back({{"generator", v.generator},
                        {"class", class_name(v.generator_class)},
                        {"term", to_string(v.term)},
                        {"offenders", v.offenders}});
    }
    r.add_stage(std::move(s));
    r.data["violations"] = list;
    r.summary = rep.pass ? "all differential terms allowed" : std::to_string(rep.violations.size()) + " violation(s)";
    return r;
}

Report cmd_pipeline(const std::string& dir) {
    const auto start = std::chrono::steady_clock::now();
    const auto bundle = load_bundle(dir);
    auto result = run_pipeline(bundle, default_options(bundle));
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result.report.data["elapsed_ms"] = ms;
    return result.report;
}

struct HandleArgs {
    int n = 3;
    int k = 1;
    std::string weights = "1,1.4142135623730951";
    double delta = 1.0;
    std::string x, y, p, q;
    double t = 1.0;

    HandleParams params() const {
        HandleParams hp;
        hp.n = n;
        hp.k = k;
        for (const auto& w : split_list(weights)) hp.a.push_back(std::stod(w));
        hp.delta = delta;
        hp.validate();
        return hp;
    }

    HandleState state() const {
        auto read = [](const std::string& s) {
            std::vector<double> out;
            for (const auto& v : split_list(s)) out.push_back(std::stod(v));
            return out;
        };
        return {read(x), read(y), read(p), read(q)};
    }
};

void add_handle_options(CLI::App* cmd, HandleArgs& h, bool with_state) {
    cmd->add_option("--n", h.n, "half-dimension of the handle")->capture_default_str();
    cmd->add_option("--k", h.k, "handle index")->capture_default_str();
    cmd->add_option("--a", h.weights, "comma-separated weights a_1..a_{n-k}")->capture_default_str();
    cmd->add_option("--delta", h.delta, "delta > 0")->capture_default_str();
    if (!with_state) return;
    cmd->add_option("--x", h.x, "comma-separated x");
    cmd->add_option("--y", h.y, "comma-separated y");
    cmd->add_option("--p", h.p, "comma-separated p");
    cmd->add_option("--q", h.q, "comma-separated q");
    cmd->add_option("--t", h.t, "flow time")->capture_default_str();
}

json state_json(const HandleState& s) { return {{"x", s.x}, {"y", s.y}, {"p", s.p}, {"q", s.q}}; }

Report cmd_solve_t(double q, double delta) {
    Report r;
    r.command = "dynamics solve-t";
    const double T = solve_T(q, delta);
    const double residual = flow_time_residual(T, q, delta);
    std::ostringstream msg;
    msg.precision(15);
    msg << "T = " << T << ", e^T = " << std::exp(T) << ", residual = " << residual;
    r.add_stage({"solve-t", Status::Pass, {msg.str()}});
    r.data = {{"q", q}, {"delta", delta}, {"T", T}, {"u", std::exp(T)}, {"residual", residual}};
    r.summary = msg.str();
    return r;
}

Report cmd_reeb(const HandleArgs& h) {
    Report r;
    r.command = "dynamics reeb";
    const auto params = h.params();
    const auto s = h.state();
    const auto frozen = reeb_flow(s, h.t, params);
    const auto integrated = reeb_flow_integrated(s, h.t, params);
    std::ostringstream lv;
    lv.precision(15);
    lv << "level " << level(s, params) << " -> " << level(frozen, params) << " (closed form), "
       << level(integrated, params) << " (integrated)";
    std::ostringstream nv;
    nv.precision(15);
    nv << "N " << reeb_normalization(s, params) << " -> " << reeb_normalization(frozen, params)
       << " along the closed form";
    double gap = 0.0;
    auto diff = [&gap](const std::vector<double>& a, const std::vector<double>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
    };
    diff(frozen.x, integrated.x);
    diff(frozen.y, integrated.y);
    diff(frozen.p, integrated.p);
    diff(frozen.q, integrated.q);
    r.add_stage({"reeb", Status::Pass,
                 {"closed form  x=" + join_state(frozen.x) + " y=" + join_state(frozen.y) + " p=" +
                      join_state(frozen.p) + " q=" + join_state(frozen.q),
                  "integrated   x=" + join_state(integrated.x) + " y=" + join_state(integrated.y) + " p=" +
                      join_state(integrated.p) + " q=" + join_state(integrated.q),
                  lv.str(), nv.str(), "max |closed form - integrated| = " + std::to_string(gap)}});
    r.data = {{"closed_form", state_json(frozen)},
              {"integrated", state_json(integrated)},
              {"level_initial", level(s, params)},
              {"level_closed_form", level(frozen, params)},
              {"level_integrated", level(integrated, params)},
              {"max_gap", gap}};
    r.summary = "flowed for t = " + std::to_string(h.t);
    return r;
}

Report cmd_liouville(const HandleArgs& h) {
    Report r;
    r.command = "dynamics liouville";
    const auto s = h.state();
    const auto out = liouville_flow(s, h.t);
    r.add_stage({"liouville", Status::Pass,
                 {"x=" + join_state(out.x) + " y=" + join_state(out.y) + " p=" + join_state(out.p) +
                  " q=" + join_state(out.q)}});
    r.data = {{"state", state_json(out)}};
    r.summary = "flowed for t = " + std::to_string(h.t);
    return r;
}

Report cmd_pullback(const HandleArgs& h, const std::string& variant, int samples, std::uint64_t seed, double tol) {
    Report r;
    r.command = "dynamics pullback";
    const auto params = h.params();
    std::vector<std::pair<std::string, AttachVariant>> todo;
    if (variant == "fc" || variant == "all") todo.emplace_back("fc", AttachVariant::Fc);
    if ((variant == "g1" || variant == "all") && params.k == 1) todo.emplace_back("g1", AttachVariant::GIndex1);
    if (variant == "gk" || variant == "all") todo.emplace_back("gk", AttachVariant::GIndexK);
    if (variant == "g1" && params.k != 1) throw Error(Errc::InvalidParams, "g1 needs --k 1");
    for (const auto& [name, v] : todo) {
        const auto rep = pullback_check(v, params, PullbackOptions{samples, seed, 1e-6});
        std::ostringstream msg;
        msg << rep.samples << " points, max residual " << rep.max_residual << " (tolerance " << tol << ")";
        r.add_stage({name, rep.max_residual < tol ? Status::Pass : Status::Fail, {msg.str()}});
        r.data[name] = {{"samples", rep.samples}, {"max_residual", rep.max_residual}, {"seed", seed}};
    }
    r.summary = r.status == Status::Pass ? "pullbacks agree" : "pullback residual above tolerance";
    return r;
}

Report cmd_monotone(double delta, double q_min, double q_max, int points) {
    Report r;
    r.command = "dynamics monotone";
    if (points < 2 || !(q_min > 0) || !(q_max > q_min)) throw Error(Errc::InvalidParams, "need 0 < q-min < q-max, points >= 2");
    Stage s{"monotone", Status::Pass, {}};
    double prev = std::numeric_limits<double>::infinity();
    double worst = 0.0;
    json grid = json::array();
    for (int i = 0; i < points; ++i) {
        const double q = q_min * std::pow(q_max / q_min, static_cast<double>(i) / (points - 1));
        const double T = solve_T(q, delta);
        worst = std::max(worst, std::abs(flow_time_residual(T, q, delta)));
        if (!(T < prev)) {
            s.status = Status::Fail;
            s.messages.push_back("T does not decrease at q = " + std::to_string(q));
        }
        prev = T;
        grid.push_back({{"q", q}, {"T", T}});
    }
    std::ostringstream msg;
    msg << points << " points, max residual " << worst;
    s.messages.push_back(msg.str());
    r.add_stage(std::move(s));
    r.data = {{"delta", delta}, {"grid", grid}, {"max_residual", worst}};
    r.summary = r.status == Status::Pass ? "T strictly decreasing" : "monotonicity violated";
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendrian contact homology toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string json_path;
    bool quiet = false;
    app.add_option("--json", json_path, "also write the structured report to this path");
    app.add_flag("--quiet", quiet, "suppress the text report");

    std::function<Report()> action;
    std::string file, file2, dir, shared, classes, impl = "both", k_table, variant = "all";
    int lo = 0, hi = 0, handle_index = 1, samples = 1000, points = 100;
    std::optional<int> cap, opt_lo, opt_hi;
    bool emit = false, mirror = false;
    double q = 1.0, delta = 1.0, tol = 1e-6, q_min = 0.1, q_max = 10.0;
    std::uint64_t seed = 20240611;
    HandleArgs handle;

    auto* check = app.add_subcommand("check", "parse a DGA file and verify d^2 = 0");
    check->add_option("file", file, "DGA file ('-' for stdin)")->required();
    check->callback([&] { action = [&] { return cmd_check(file); }; });

    auto* homology = app.add_subcommand("homology", "homology of the DGA in a degree window");
    homology->add_option("file", file)->required();
    homology->add_option("--min", lo, "lowest degree")->required();
    homology->add_option("--max", hi, "highest degree")->required();
    homology->add_option("--max-word-len", cap, "truncate words longer than this");
    homology->callback([&] { action = [&] { return cmd_homology(file, lo, hi, cap); }; });

    auto* linearized = app.add_subcommand("linearized", "linearized homology for every augmentation");
    linearized->add_option("file", file)->required();
    linearized->add_option("--min", opt_lo, "lowest degree");
    linearized->add_option("--max", opt_hi, "highest degree");
    linearized->callback([&] { action = [&] { return cmd_linearized(file, opt_lo, opt_hi); }; });

    auto* augs = app.add_subcommand("augmentations", "enumerate augmentations to F2");
    augs->add_option("file", file)->required();
    augs->callback([&] { action = [&] { return cmd_augmentations(file); }; });

    auto* hh = app.add_subcommand("hochschild", "Hochschild homology, bar and small complexes");
    hh->add_option("file", file)->required();
    hh->add_option("--min", lo, "lowest degree")->capture_default_str();
    hh->add_option("--max", hi, "highest degree")->required();
    hh->add_option("--impl", impl, "bar, small or both")
        ->check(CLI::IsMember({"bar", "small", "both"}))
        ->capture_default_str();
    hh->callback([&] { action = [&] { return cmd_hochschild(file, lo, hi, impl); }; });

    auto* push = app.add_subcommand("pushout", "amalgamated free product of two presentations");
    push->add_option("first", file)->required();
    push->add_option("second", file2)->required();
    push->add_option("--shared", shared, "comma-separated shared generators")->required();
    push->add_flag("--emit-dga", emit, "print the result in DGA file format");
    push->callback([&] { action = [&] { return cmd_pushout(file, file2, shared, emit); }; });

    auto* dip = app.add_subcommand("dip", "graded copies of the chords after dipping");
    dip->add_option("file", file)->required();
    dip->add_option("--handle-index", handle_index, "index k of the handle")->required();
    dip->add_option("--K", k_table, "component path table");
    dip->callback([&] { action = [&] { return cmd_dip(file, handle_index, k_table); }; });

    auto* front = app.add_subcommand("front", "compile a front diagram");
    front->add_option("file", file, "front file ('-' for stdin)")->required();
    front->add_flag("--emit-dga", emit, "print the algebra in DGA file format");
    front->add_flag("--mirror", mirror, "compile the vertical mirror instead");
    front->callback([&] { action = [&] { return cmd_front(file, emit, mirror); }; });

    auto* tax = app.add_subcommand("taxonomy", "check differential terms against generator classes");
    tax->add_option("file", file)->required();
    tax->add_option("--classes", classes, "class map file")->required();
    tax->callback([&] { action = [&] { return cmd_taxonomy(file, classes); }; });

    auto* pipe = app.add_subcommand("pipeline", "assemble and check a surgery bundle");
    pipe->add_option("bundle", dir, "bundle directory")->required();
    pipe->callback([&] { action = [&] { return cmd_pipeline(dir); }; });

    auto* dyn = app.add_subcommand("dynamics", "handle dynamics");
    dyn->require_subcommand(1);
    auto* solve = dyn->add_subcommand("solve-t", "flow time T(q)");
    solve->add_option("--q", q)->capture_default_str();
    solve->add_option("--delta", delta)->capture_default_str();
    solve->callback([&] { action = [&] { return cmd_solve_t(q, delta); }; });
    auto* mono = dyn->add_subcommand("monotone", "check that T(q) decreases on a geometric grid");
    mono->add_option("--delta", delta)->capture_default_str();
    mono->add_option("--q-min", q_min)->capture_default_str();
    mono->add_option("--q-max", q_max)->capture_default_str();
    mono->add_option("--points", points)->capture_default_str();
    mono->callback([&] { action = [&] { return cmd_monotone(delta, q_min, q_max, points); }; });
    auto* reeb = dyn->add_subcommand("reeb", "closed-form Reeb flow with the integrated flow for comparison");
    add_handle_options(reeb, handle, true);
    reeb->callback([&] { action = [&] { return cmd_reeb(handle); }; });
    auto* liou = dyn->add_subcommand("liouville", "Liouville flow");
    add_handle_options(liou, handle, true);
    liou->callback([&] { action = [&] { return cmd_liouville(handle); }; });
    auto* pull = dyn->add_subcommand("pullback", "contact form pullback residuals of the attaching maps");
    add_handle_options(pull, handle, false);
    pull->add_option("--variant", variant, "fc, g1, gk or all")
        ->check(CLI::IsMember({"fc", "g1", "gk", "all"}))
        ->capture_default_str();
    pull->add_option("--samples", samples)->capture_default_str();
    pull->add_option("--seed", seed)->capture_default_str();
    pull->add_option("--tolerance", tol)->capture_default_str();
    pull->callback([&] { action = [&] { return cmd_pullback(handle, variant, samples, seed, tol); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    Report report;
    int code = kExitPass;
    try {
        report = action();
        code = report.status == Status::Fail ? kExitFail : kExitPass;
        if (!quiet) std::cout << render_text(report);
    } catch (const Error& e) {
        code = exit_code_for(e.code());
        report.command = app.get_subcommands().empty() ? "lch" : app.get_subcommands().front()->get_name();
        report.status = Status::Fail;
        report.summary = e.what();
        report.data["error"] = {{"code", errc_name(e.code())}, {"exit_code", code}};
        std::cerr << "lch: " << e.what() << '\n';
    } catch (const std::exception& e) {
        code = kExitUsage;
        report.status = Status::Fail;
        report.summary = e.what();
        std::cerr << "lch: " << e.what() << '\n';
    }
    if (!json_path.empty()) {
        try {
            write_report(json_path, report);
        } catch (const Error& e) {
            std::cerr << "lch: " << e.what() << '\n';
            return kExitUsage;
        }
    }
    return code;
}
