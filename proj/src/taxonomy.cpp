#include "lch/taxonomy.hpp"

#include <algorithm>
#include <sstream>

namespace lch {

std::string_view class_name(GeneratorClass c) {
    switch (c) {
        case GeneratorClass::Diagram: return "diagram";
        case GeneratorClass::Handle: return "handle";
        case GeneratorClass::DipUpper: return "dip_upper";
        case GeneratorClass::Minimum: return "minimum";
    }
    return "?";
}

std::optional<GeneratorClass> parse_class_name(std::string_view text) {
    for (auto c : {GeneratorClass::Diagram, GeneratorClass::Handle, GeneratorClass::DipUpper, GeneratorClass::Minimum})
        if (class_name(c) == text) return c;
    return std::nullopt;
}

const std::set<GeneratorClass>& allowed_targets(GeneratorClass c) {
    static const std::map<GeneratorClass, std::set<GeneratorClass>> table{
        {GeneratorClass::Diagram, {GeneratorClass::Diagram, GeneratorClass::Minimum}},
        {GeneratorClass::Handle, {GeneratorClass::Handle}},
        {GeneratorClass::DipUpper, {GeneratorClass::DipUpper, GeneratorClass::Minimum, GeneratorClass::Handle}},
        {GeneratorClass::Minimum, {GeneratorClass::Minimum}},
    };
    return table.at(c);
}

TaxonomyReport validate_taxonomy(const DgaPresentation& p, const ClassMap& classes) {
    for (const auto& g : p.generators())
        if (!classes.count(g.id)) throw Error(Errc::UnclassifiedGenerator, "'" + g.id + "' has no class");
    TaxonomyReport report;
    for (const auto& g : p.generators()) {
        const auto cls = classes.at(g.id);
        const auto& allowed = allowed_targets(cls);
        for (const auto& term : p.differential(g.id).terms()) {
            std::vector<std::string> offenders;
            for (const auto& f : term.factors())
                if (!allowed.count(classes.at(f)) &&
                    std::find(offenders.begin(), offenders.end(), f) == offenders.end())
                    offenders.push_back(f);
            if (offenders.empty()) continue;
            report.pass = false;
            report.violations.push_back({g.id, cls, term, std::move(offenders)});
        }
    }
    return report;
}

std::string describe(const TaxonomyViolation& v, const ClassMap& classes) {
    std::ostringstream os;
    os << "d(" << v.generator << ") [" << class_name(v.generator_class) << "] term " << to_string(v.term)
       << " uses";
    for (std::size_t i = 0; i < v.offenders.size(); ++i) {
        const auto it = classes.find(v.offenders[i]);
        os << (i ? "," : "") << ' ' << v.offenders[i];
        if (it != classes.end()) os << " [" << class_name(it->second) << "]";
    }
    os << ", allowed:";
    bool first = true;
    for (auto c : allowed_targets(v.generator_class)) {
        os << (first ? " " : ", ") << class_name(c);
        first = false;
    }
    return os.str();
}

}  // namespace lch
