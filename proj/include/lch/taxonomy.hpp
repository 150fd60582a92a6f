#pragma once

// Which generators a disk with a given positive puncture may have at its
// negative punctures, by class of the puncture.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lch/dga.hpp"

namespace lch {

enum class GeneratorClass { Diagram, Handle, DipUpper, Minimum };

std::string_view class_name(GeneratorClass c);
std::optional<GeneratorClass> parse_class_name(std::string_view text);

using ClassMap = std::map<std::string, GeneratorClass>;

/// diagram -> {diagram, minimum}; handle -> {handle};
/// dip_upper -> {dip_upper, minimum, handle}; minimum -> {minimum}.
const std::set<GeneratorClass>& allowed_targets(GeneratorClass c);

struct TaxonomyViolation {
    std::string generator;
    GeneratorClass generator_class = GeneratorClass::Diagram;
    Word term;
    std::vector<std::string> offenders;  // ids of the term outside the allowed set
};

struct TaxonomyReport {
    bool pass = true;
    std::vector<TaxonomyViolation> violations;
};

/// Throws UnclassifiedGenerator when some generator has no class.
TaxonomyReport validate_taxonomy(const DgaPresentation& p, const ClassMap& classes);

std::string describe(const TaxonomyViolation& v, const ClassMap& classes);

}  // namespace lch
