#include "lch/report.hpp"

#include <sstream>

#include "lch/dga_io.hpp"

namespace lch {

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

Stage& Report::add_stage(Stage s) {
    if (s.status == Status::Fail) status = Status::Fail;
    stages.push_back(std::move(s));
    return stages.back();
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& s : r.stages)
        stages.push_back({{"name", s.name}, {"status", status_name(s.status)}, {"messages", s.messages}});
    return {{"schema", kReportSchema}, {"command", r.command},  {"status", status_name(r.status)},
            {"summary", r.summary},    {"stages", stages},       {"data", r.data}};
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    for (const auto& s : r.stages) {
        os << "[" << status_name(s.status) << "] " << s.name << '\n';
        for (const auto& m : s.messages) os << "    " << m << '\n';
    }
    os << r.command << ": " << status_name(r.status);
    if (!r.summary.empty()) os << " - " << r.summary;
    os << '\n';
    return os.str();
}

void write_report(const std::filesystem::path& path, const Report& r) {
    write_text_file_atomic(path, to_json(r).dump(2) + "\n");
}

nlohmann::json presentation_json(const DgaPresentation& p) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : p.generators())
        gens.push_back({{"id", g.id}, {"degree", g.degree}, {"differential", to_string(p.differential(g.id))}});
    return {{"name", p.name()}, {"generators", gens}};
}

nlohmann::json betti_json(const BettiTable& t) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [d, e] : t.entries()) out.push_back({{"degree", d}, {"dimension", e.dimension}, {"exact", e.exact}});
    return out;
}

}  // namespace lch
