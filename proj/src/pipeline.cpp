#include "lch/pipeline.hpp"

#include <map>
#include <set>
#include <sstream>

#include "lch/dga_io.hpp"

namespace lch {

namespace {

std::map<std::string, std::string> parse_meta(std::string_view text) {
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(Errc::InvalidBundle, "meta line " + std::to_string(lineno) + ": expected key=value");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

int meta_int(const std::map<std::string, std::string>& meta, const std::string& key, std::optional<int> fallback) {
    auto it = meta.find(key);
    if (it == meta.end()) {
        if (fallback) return *fallback;
        throw Error(Errc::InvalidBundle, "meta is missing '" + key + "'");
    }
    try {
        std::size_t used = 0;
        const int v = std::stoi(it->second, &used);
        if (used == it->second.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::InvalidBundle, "meta '" + key + "' is not an integer");
}

std::set<std::string> ids_of(const DgaPresentation& p) {
    std::set<std::string> out;
    for (const auto& g : p.generators()) out.insert(g.id);
    return out;
}

Stage sub_dga_stage(const SurgeryBundle& b) {
    Stage s{"sub-dga", Status::Pass, {}};
    const auto shared = ids_of(b.shared);
    for (const auto& [label, outer] : {std::pair{"A_D", &b.diagram}, std::pair{"A_H", &b.handle}}) {
        bool contained = true;
        for (const auto& g : b.shared.generators()) {
            if (!outer->has_generator(g.id)) {
                s.messages.push_back(std::string("'") + g.id + "' of A_S is missing from " + label);
                contained = false;
            } else if (outer->degree(g.id) != g.degree) {
                std::ostringstream msg;
                msg << "'" << g.id << "' has degree " << g.degree << " in A_S but " << outer->degree(g.id) << " in "
                    << label;
                s.messages.push_back(msg.str());
                contained = false;
            }
        }
        if (contained) {
            try {
                restrict_to(*outer, shared);
            } catch (const Error& e) {
                s.messages.push_back(std::string(label) + ": " + e.what());
                contained = false;
            }
        }
        if (!contained) s.status = Status::Fail;
    }
    if (s.status == Status::Pass)
        s.messages.push_back("A_S (" + std::to_string(shared.size()) + " generators) is a sub-DGA of A_D and A_H");
    return s;
}

}  // namespace

SurgeryBundle load_bundle(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error(Errc::InvalidBundle, dir.string() + " is not a directory");
    const auto meta = parse_meta(read_text_file(dir / "meta"));
    SurgeryBundle b;
    auto load = [&dir](const char* file) {
        try {
            return parse_dga(read_text_file(dir / file));
        } catch (const Error& e) {
            if (e.code() == Errc::InvalidBundle) throw;
            throw Error(e.code(), std::string(file) + ": " + e.what());
        }
    };
    b.diagram = load("aD.dga");
    b.handle = load("aH.dga");
    b.shared = load("aS.dga");
    b.handle_index = meta_int(meta, "handle_index", std::nullopt);
    if (b.handle_index < 1) throw Error(Errc::InvalidBundle, "handle_index must be >= 1");
    b.homology_max = meta_int(meta, "homology_max", 3);
    b.hochschild_max = meta_int(meta, "hochschild_max", 6);
    auto cls = meta.find("classes");
    if (cls == meta.end() || cls->second.empty()) throw Error(Errc::InvalidBundle, "meta is missing 'classes'");
    b.classes = parse_classes(read_text_file(dir / cls->second));
    return b;
}

PipelineOptions default_options(const SurgeryBundle& b) {
    return {DegreeWindow{0, b.homology_max}, DegreeWindow{0, b.hochschild_max}, 6};
}

PipelineResult run_pipeline(const SurgeryBundle& b, const PipelineOptions& options) {
    PipelineResult result;
    Report& report = result.report;
    report.command = "pipeline";
    report.data["handle_index"] = b.handle_index;

    auto skip_rest = [&report](std::initializer_list<const char*> names) {
        for (const char* n : names) report.add_stage({n, Status::Skipped, {"earlier stage failed"}});
    };

    if (report.add_stage(sub_dga_stage(b)).status == Status::Fail) {
        skip_rest({"pushout", "d-squared", "taxonomy", "homology", "hochschild"});
        report.summary = "A_S is not a common sub-DGA";
        return result;
    }

    Stage push{"pushout", Status::Pass, {}};
    for (const auto& g : b.shared.generators()) {
        const auto& ds = b.shared.differential(g.id);
        for (const auto& [label, outer] : {std::pair{"A_D", &b.diagram}, std::pair{"A_H", &b.handle}}) {
            if (outer->differential(g.id) != ds) {
                push.status = Status::Fail;
                push.messages.push_back("d(" + g.id + ") = " + to_string(outer->differential(g.id)) + " in " +
                                        label + " but " + to_string(ds) + " in A_S");
            }
        }
    }
    if (push.status == Status::Pass) {
        try {
            result.assembled = pushout(b.diagram, b.handle, ids_of(b.shared));
            push.messages.push_back("assembled " + std::to_string(result.assembled->size()) + " generators");
        } catch (const Error& e) {
            push.status = Status::Fail;
            push.messages.push_back(e.what());
        }
    }
    if (report.add_stage(std::move(push)).status == Status::Fail) {
        skip_rest({"d-squared", "taxonomy", "homology", "hochschild"});
        report.summary = "pushout failed";
        return result;
    }
    const auto& dga = *result.assembled;
    report.data["presentation"] = presentation_json(dga);

    Stage dsq{"d-squared", Status::Pass, {}};
    const auto squares = check_d_squared(dga);
    for (const auto& f : squares.failures)
        dsq.messages.push_back("d(d(" + f.generator + ")) = " + to_string(f.residual));
    if (!squares.pass) dsq.status = Status::Fail;
    else dsq.messages.push_back("d^2 = 0 on all " + std::to_string(dga.size()) + " generators");
    report.add_stage(std::move(dsq));

    Stage tax{"taxonomy", Status::Pass, {}};
    try {
        result.taxonomy = validate_taxonomy(dga, b.classes);
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& v : result.taxonomy->violations) {
            tax.messages.push_back(describe(v, b.classes));
            violations.push_back({{"generator", v.generator},
                                  {"class", class_name(v.generator_class)},
                                  {"term", to_string(v.term)},
                                  {"offenders", v.offenders}});
        }
        report.data["taxonomy_violations"] = violations;
        if (!result.taxonomy->pass) tax.status = Status::Fail;
        else tax.messages.push_back("every differential term respects its class");
    } catch (const Error& e) {
        tax.status = Status::Fail;
        tax.messages.push_back(e.what());
    }
    report.add_stage(std::move(tax));

    Stage hom{"homology", Status::Pass, {}};
    try {
        auto window = options.homology;
        bool positive = true;
        for (const auto& g : dga.generators()) positive = positive && g.degree >= 1;
        if (!positive && !window.max_word_length) {
            window = DegreeWindow{window.d_min, window.d_max, options.fallback_word_length};
            hom.messages.push_back("degree <= 0 generators present; words capped at length " +
                                   std::to_string(options.fallback_word_length));
        }
        result.homology = homology_table(dga, window);
        report.data["homology"] = betti_json(*result.homology);
        hom.messages.push_back("H_* over [" + std::to_string(window.d_min) + "," + std::to_string(window.d_max) +
                               "] = " + to_string(*result.homology));
    } catch (const Error& e) {
        hom.status = Status::Fail;
        hom.messages.push_back(e.what());
    }
    report.add_stage(std::move(hom));

    Stage hh{"hochschild", Status::Pass, {}};
    try {
        result.hochschild = hh_report(dga, options.hochschild);
        const auto& r = *result.hochschild;
        report.data["hochschild"] = {{"bar", betti_json(r.bar)}, {"small", betti_json(r.small)},
                                     {"all_equal", r.all_equal}};
        hh.messages.push_back("bar   " + to_string(r.bar));
        hh.messages.push_back("small " + to_string(r.small));
        if (!r.all_equal) {
            hh.status = Status::Fail;
            for (const auto& [d, same] : r.agrees)
                if (!same) hh.messages.push_back("complexes disagree in degree " + std::to_string(d));
        }
    } catch (const Error& e) {
        if (e.code() == Errc::UnsupportedGrading) {
            hh.status = Status::Skipped;
        } else {
            hh.status = Status::Fail;
        }
        hh.messages.push_back(e.what());
    }
    report.add_stage(std::move(hh));

    report.summary = report.status == Status::Pass ? "all stages passed" : "some stages failed";
    return result;
}

}  // namespace lch
