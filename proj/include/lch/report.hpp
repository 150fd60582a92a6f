#pragma once

// Structured command reports (schema "lch.report.v1", see docs/report-schema.md).

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lch/dga.hpp"
#include "lch/homology.hpp"

namespace lch {

enum class Status { Pass, Fail, Skipped };

std::string_view status_name(Status s);

struct Stage {
    std::string name;
    Status status = Status::Pass;
    std::vector<std::string> messages;
};

struct Report {
    std::string command;
    Status status = Status::Pass;
    std::string summary;
    std::vector<Stage> stages;
    nlohmann::json data = nlohmann::json::object();

    /// Appends a stage and fails the report when the stage failed.
    Stage& add_stage(Stage s);
};

inline constexpr const char* kReportSchema = "lch.report.v1";

nlohmann::json to_json(const Report& r);
std::string render_text(const Report& r);
void write_report(const std::filesystem::path& path, const Report& r);

nlohmann::json presentation_json(const DgaPresentation& p);
nlohmann::json betti_json(const BettiTable& t);

}  // namespace lch
