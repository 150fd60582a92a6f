#pragma once

// Assembles the algebra of a surgered Legendrian from its pieces: the
// diagram part A_D, the handle part A_H and their common sub-algebra A_S.
//
// Bundle directory layout:
//   aD.dga, aH.dga, aS.dga   presentations
//   meta                     key=value lines: handle_index, classes (file
//                            name), optional homology_max, hochschild_max
//   <classes>                `<id> <class>` lines

#include <filesystem>
#include <optional>

#include "lch/dga.hpp"
#include "lch/hochschild.hpp"
#include "lch/homology.hpp"
#include "lch/report.hpp"
#include "lch/taxonomy.hpp"

namespace lch {

struct SurgeryBundle {
    DgaPresentation diagram;  // A_D
    DgaPresentation handle;   // A_H
    DgaPresentation shared;   // A_S
    int handle_index = 1;
    ClassMap classes;
    int homology_max = 3;
    int hochschild_max = 6;
};

/// Throws InvalidBundle, SyntaxError or presentation errors.
SurgeryBundle load_bundle(const std::filesystem::path& dir);

struct PipelineOptions {
    DegreeWindow homology{0, 3};
    DegreeWindow hochschild{0, 6};
    /// Word length cap used for homology when some degree is <= 0.
    int fallback_word_length = 6;
};

PipelineOptions default_options(const SurgeryBundle& b);

struct PipelineResult {
    Report report;
    std::optional<DgaPresentation> assembled;
    std::optional<BettiTable> homology;
    std::optional<HochschildReport> hochschild;
    std::optional<TaxonomyReport> taxonomy;
};

/// Stage failures are recorded in the report, never thrown.
PipelineResult run_pipeline(const SurgeryBundle& bundle, const PipelineOptions& options);

}  // namespace lch
